//! Simple undirected graphs on dense vertex ids and the structural queries
//! the colorers and reductions rely on.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: Vertex, v: Vertex, n: usize },
}

/// Membership bitmask over `0..len`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(len: usize) -> Self {
        VertexSet { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_iter<I: IntoIterator<Item = Vertex>>(len: usize, it: I) -> Self {
        let mut s = VertexSet::new(len);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn full(len: usize) -> Self {
        VertexSet::from_iter(len, 0..len)
    }

    /// Size of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(v < self.len, "vertex {v} outside universe {}", self.len);
        let (w, b) = (v / 64, v % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        if v >= self.len {
            return false;
        }
        let (w, b) = (v / 64, v % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.len && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.len).filter(move |&v| self.contains(v))
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::from_iter(self.len, (0..self.len).filter(|&v| !self.contains(v)))
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Immutable simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// Result of a bipartiteness test, carrying a witness either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// Side (0 or 1) of every vertex.
    Bipartite(Vec<u8>),
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle(Vec<Vertex>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub degeneracy: usize,
    /// `order[i]` has at most `degeneracy` neighbours in `order[..i]`.
    pub order: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex list.
    pub vertices: Vec<Vertex>,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Block {
    pub fn is_edge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A 2-connected block is a cycle exactly when it has as many edges as vertices.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges.len() == self.vertices.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<Vertex>,
}

impl Graph {
    /// Builds a simple graph, dropping duplicate edges.
    pub fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Panicking variant of [`Graph::build`] for edge lists known to be valid.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::build(n, edges).expect("valid edge list")
    }

    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `keep`, together with the map from new ids to old ids.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map: Vec<Vertex> = keep.iter().collect();
        let mut back = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let mut adj = vec![Vec::new(); map.len()];
        let mut m = 0;
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                if back[w] != usize::MAX {
                    adj[i].push(back[w]);
                }
            }
            m += adj[i].len();
        }
        (Graph { adj, m: m / 2 }, map)
    }

    pub fn without(&self, remove: &VertexSet) -> (Graph, Vec<Vertex>) {
        self.induced(&remove.complement())
    }

    /// Closed neighbourhood of a set.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|ns| ns.iter().map(|&v| v + off).collect()));
        Graph { adj, m: self.m + other.m }
    }

    /// `u v` is an edge of the square iff `1 <= dist(u, v) <= 2`.
    pub fn square(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        let mut mark = vec![usize::MAX; n];
        let mut m = 0;
        for v in 0..n {
            mark[v] = v;
            for &w in &self.adj[v] {
                if mark[w] != v {
                    mark[w] = v;
                    adj[v].push(w);
                }
                for &x in &self.adj[w] {
                    if mark[x] != v {
                        mark[x] = v;
                        adj[v].push(x);
                    }
                }
            }
            adj[v].sort_unstable();
            m += adj[v].len();
        }
        Graph { adj, m: m / 2 }
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.bfs_distances(u)[v]
    }

    /// Distance between two vertex sets (`None` if disconnected or a set is empty).
    pub fn set_distance(&self, a: &VertexSet, b: &VertexSet) -> Option<usize> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for v in a.iter() {
            dist[v] = Some(0);
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            if b.contains(v) {
                return Some(d);
            }
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Eccentricity maximum over all vertices; `None` for disconnected graphs.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.bfs_distances(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Shortest cycle length, `None` for forests. BFS from every vertex.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            let mut touched = vec![root];
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(v) = queue.pop_front() {
                if 2 * dist[v] + 1 >= best {
                    break;
                }
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[v] != w {
                        best = best.min(dist[v] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            for v in touched {
                dist[v] = usize::MAX;
                parent[v] = usize::MAX;
            }
            if best == 3 {
                break;
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Min-degree peeling. The returned order is the reverse of removal order,
    /// so each vertex has at most `degeneracy` earlier neighbours.
    pub fn degeneracy_ordering(&self) -> Degeneracy {
        let n = self.n();
        let maxd = self.max_degree();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); maxd + 1];
        // Push in reverse so that, within a bucket, lower ids pop first.
        for v in (0..n).rev() {
            buckets[deg[v]].push(v);
        }
        let mut removed = vec![false; n];
        let mut removal = Vec::with_capacity(n);
        let mut d = 0;
        let mut cur: usize = 0;
        while removal.len() < n {
            cur = cur.saturating_sub(1);
            while buckets[cur].is_empty() {
                cur += 1;
            }
            let v = buckets[cur].pop().unwrap();
            if removed[v] || deg[v] != cur {
                continue;
            }
            removed[v] = true;
            d = d.max(cur);
            removal.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    buckets[deg[w]].push(w);
                }
            }
        }
        removal.reverse();
        Degeneracy { degeneracy: d, order: removal }
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy_ordering().degeneracy
    }

    /// BFS 2-colouring, or an odd cycle when none exists.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return Bipartition::OddCycle(tree_cycle(&parent, &depth, v, w));
                    }
                }
            }
        }
        Bipartition::Bipartite(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_bipartite()
    }

    /// Biconnected components (blocks) and cut vertices. Isolated vertices
    /// belong to no block; every edge belongs to exactly one block.
    pub fn blocks(&self) -> BlockDecomposition {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (v, p, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        edge_stack.push((v, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != p && disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(u, _, _)) = stack.last() {
                        low[u] = low[u].min(low[v]);
                        if low[v] >= disc[u] {
                            if u != root {
                                is_cut[u] = true;
                            }
                            let mut edges = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                edges.push((e.0.min(e.1), e.0.max(e.1)));
                                if e == (u, v) {
                                    break;
                                }
                            }
                            edges.sort_unstable();
                            let mut vertices: Vec<Vertex> =
                                edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                            vertices.sort_unstable();
                            vertices.dedup();
                            blocks.push(Block { vertices, edges });
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
        BlockDecomposition { blocks, cut_vertices }
    }
}

fn tree_cycle(parent: &[Vertex], depth: &[usize], mut a: Vertex, mut b: Vertex) -> Vec<Vertex> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    right.reverse();
    left.extend(right);
    left
}
