//! Polynomial-time colourers with explicit bound certificates.
//!
//! The common shape: a set `S` of high-degree vertices (and whatever must be
//! added to it) gets pairwise distinct distance-2 classes, its neighbourhood
//! gets cheap distance-1 colours, and everything farther away is coloured by
//! a first-fit distance-2 greedy on `G - S` with a fresh range of classes.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::coloring::{Color, MixedColoring, Params};
use crate::graph::{Bipartition, Graph, Vertex, VertexSet};
use crate::solver::{decide, Budget, Status};

pub use crate::outerplanar::{color_tf_outerplanar, peel_homomorphism, vc_outerplanar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorError {
    #[error("graph has degeneracy {found}, more than {bound}")]
    NotDegenerate { bound: usize, found: usize },
    #[error("seed set does not dominate vertex {0}")]
    NotDominating(Vertex),
    #[error("block containing vertex {0} is neither an edge nor a cycle")]
    NotCactus(Vertex),
    #[error("girth {found} is below the required {required}")]
    GirthTooSmall { required: usize, found: usize },
    #[error("degree-2 peeling stalled with {0} vertices left; graph is not outerplanar")]
    NotOuterplanar(usize),
    #[error("degree-2 elimination stalled with {0} vertices left")]
    EliminationStalled(usize),
    #[error("3-colouring of the odd blocks failed: {0}")]
    OctFailed(String),
    #[error("neighbourhood colouring needs a fourth colour at vertex {0}")]
    NeedsFourthColor(Vertex),
    #[error("remainder of a neighbourhood is not bipartite")]
    NotBipartite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Degenerate(usize),
    Cactus,
    TfOuterplanar,
    PlanarG4,
    Planar,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Degenerate(k) => write!(f, "degenerate(k={k})"),
            Algorithm::Cactus => write!(f, "cactus"),
            Algorithm::TfOuterplanar => write!(f, "tf-outerplanar"),
            Algorithm::PlanarG4 => write!(f, "planar-g4"),
            Algorithm::Planar => write!(f, "planar"),
        }
    }
}

/// `b <= sqrt(num/den * n) + offset`, compared exactly in integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SqrtBound {
    pub num: u64,
    pub den: u64,
    pub offset: i64,
}

impl SqrtBound {
    pub fn holds(&self, b: usize, n: usize) -> bool {
        let x = b as i128 - self.offset as i128;
        x <= 0 || x * x * self.den as i128 <= self.num as i128 * n as i128
    }

    pub fn value(&self, n: usize) -> f64 {
        (self.num as f64 / self.den as f64 * n as f64).sqrt() + self.offset as f64
    }
}

impl fmt::Display for SqrtBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            return write!(f, "{}", self.offset);
        }
        if self.den == 1 {
            write!(f, "sqrt({}*n)", self.num)?;
        } else {
            write!(f, "sqrt({}/{}*n)", self.num, self.den)?;
        }
        match self.offset {
            0 => Ok(()),
            o if o > 0 => write!(f, "+{o}"),
            o => write!(f, "{o}"),
        }
    }
}

/// Quantities behind a colourer's bound.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundCertificate {
    pub algorithm: Algorithm,
    pub n: usize,
    /// Degree threshold `N` defining `S`.
    pub threshold: f64,
    pub s_size: usize,
    pub s_prime_size: usize,
    pub used_d1: usize,
    pub used_d2: usize,
    pub claim: SqrtBound,
    /// Side conditions that were checked but are not required for validity.
    pub notes: Vec<String>,
}

impl BoundCertificate {
    pub fn holds(&self) -> bool {
        self.claim.holds(self.used_d2, self.n)
    }
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BOUND algo={} n={} N={:.3} s={} s'={} used_d1={} used_d2={} claim={} ({:.1})",
            self.algorithm,
            self.n,
            self.threshold,
            self.s_size,
            self.s_prime_size,
            self.used_d1,
            self.used_d2,
            self.claim,
            self.claim.value(self.n)
        )
    }
}

fn first_free(taken: &[bool]) -> usize {
    taken.iter().position(|&t| !t).unwrap_or(taken.len())
}

/// First-fit colouring of the square along a degeneracy order; uses at most
/// `(2d - 1)Δ + 1` classes.
pub fn greedy_2distance(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let order = g.degeneracy_ordering().order;
    let mut class = vec![usize::MAX; n];
    let mut taken: Vec<bool> = Vec::new();
    for v in order {
        let mut seen = Vec::new();
        for &w in g.neighbors(v) {
            seen.push(class[w]);
            for &x in g.neighbors(w) {
                if x != v {
                    seen.push(class[x]);
                }
            }
        }
        taken.clear();
        taken.resize(seen.len() + 1, false);
        for c in seen {
            if c < taken.len() {
                taken[c] = true;
            }
        }
        class[v] = first_free(&taken);
    }
    class
}

pub fn class_count(classes: &[usize]) -> usize {
    classes.iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// Peels a dominating set into `t ⊇ s` with `|t| <= (k+1)|s|` and a proper
/// `k`-colouring of `g - t` (`None` on `t`).
pub fn dominated_peel(g: &Graph, s: &VertexSet, k: usize) -> Result<(VertexSet, Vec<Option<usize>>), ColorError> {
    let n = g.n();
    let dom = g.closed_neighborhood(s);
    if let Some(v) = (0..n).find(|&v| !dom.contains(v)) {
        return Err(ColorError::NotDominating(v));
    }
    let deg = g.degeneracy_ordering();
    if deg.degeneracy > k {
        return Err(ColorError::NotDegenerate { bound: k, found: deg.degeneracy });
    }
    let mut t = VertexSet::new(n);
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut placed = vec![false; n];
    for v in deg.order {
        let earlier: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| placed[w]).collect();
        placed[v] = true;
        if s.contains(v) {
            t.insert(v);
            continue;
        }
        let mut taken = vec![false; k];
        for &w in &earlier {
            if let Some(c) = color[w] {
                taken[c] = true;
            }
        }
        let spare = first_free(&taken);
        let near_t = earlier.iter().any(|&w| t.contains(w));
        if spare < k {
            color[v] = Some(spare);
        } else {
            debug_assert!(!near_t, "a vertex with an earlier t-neighbour always has a spare colour");
            t.insert(v);
        }
    }
    Ok((t, color))
}

/// Recolours distance-2 vertices with a distance-1 class whenever one is
/// free in their neighbourhood. Never invalidates a colouring.
pub fn reuse_d1(g: &Graph, a: usize, c: &mut MixedColoring) {
    for v in 0..g.n() {
        if !matches!(c.get(v), Some(Color::D2(_))) {
            continue;
        }
        let mut taken = vec![false; a];
        for &w in g.neighbors(v) {
            if let Some(Color::D1(i)) = c.get(w) {
                taken[i] = true;
            }
        }
        let free = first_free(&taken);
        if free < a {
            c.set(v, Color::D1(free));
        }
    }
}

/// Renumbers distance-2 classes densely and counts both tags.
fn finish(g: &Graph, a: usize, mut c: MixedColoring) -> (MixedColoring, usize, usize) {
    reuse_d1(g, a, &mut c);
    let c = c.canonicalize();
    let (d1, d2) = c.count_classes();
    (c, d1, d2)
}

/// `deg(v) >= sqrt(num/den * n)`, decided exactly.
fn high_degree(g: &Graph, num: u64, den: u64) -> VertexSet {
    let n = g.n() as u128;
    VertexSet::from_iter(
        g.n(),
        (0..g.n()).filter(|&v| {
            let d = g.degree(v) as u128;
            d * d * den as u128 >= num as u128 * n
        }),
    )
}

/// Greedy distance-2 classes of `G - removed`, written onto the vertices
/// outside `N[removed]` with classes shifted by `offset`. Returns the
/// number of classes used there.
fn color_far_part(g: &Graph, removed: &VertexSet, offset: usize, c: &mut MixedColoring) -> usize {
    let near = g.closed_neighborhood(removed);
    let (h, map) = g.without(removed);
    let classes = greedy_2distance(&h);
    let mut used = 0;
    for (i, &v) in map.iter().enumerate() {
        if !near.contains(v) {
            c.set(v, Color::D2(offset + classes[i]));
            used = used.max(classes[i] + 1);
        }
    }
    used
}

/// (k, b)-colouring of a k-degenerate graph with `b <= 4k sqrt(k+1) sqrt(n)`.
pub fn color_degenerate(g: &Graph, k: usize) -> Result<(MixedColoring, BoundCertificate), ColorError> {
    assert!(k >= 1, "degeneracy bound must be positive");
    let found = g.degeneracy();
    if found > k {
        return Err(ColorError::NotDegenerate { bound: k, found });
    }
    let n = g.n();
    let s = high_degree(g, (k + 1) as u64, 1);
    let closed = g.closed_neighborhood(&s);
    let (h, map) = g.induced(&closed);
    let s_h = VertexSet::from_iter(h.n(), (0..h.n()).filter(|&i| s.contains(map[i])));
    let (t, local) = dominated_peel(&h, &s_h, k)?;
    let mut c = MixedColoring::uncolored(n);
    let mut next = 0;
    for i in 0..h.n() {
        match local[i] {
            Some(col) => c.set(map[i], Color::D1(col)),
            None => {
                c.set(map[i], Color::D2(next));
                next += 1;
            }
        }
    }
    let t_size = t.count();
    debug_assert_eq!(t_size, next);
    color_far_part(g, &s, t_size, &mut c);
    let (c, d1, d2) = finish(g, k, c);
    let cert = BoundCertificate {
        algorithm: Algorithm::Degenerate(k),
        n,
        threshold: (((k + 1) * n) as f64).sqrt(),
        s_size: s.count(),
        s_prime_size: t_size,
        used_d1: d1,
        used_d2: d2,
        claim: SqrtBound { num: 16 * (k * k * (k + 1)) as u64, den: 1, offset: 0 },
        notes: vec![format!("|T| = {t_size} <= (k+1)|S| = {}", (k + 1) * s.count())],
    };
    Ok((c, cert))
}

pub(crate) fn require_girth(g: &Graph, required: usize) -> Result<(), ColorError> {
    match g.girth() {
        Some(found) if found < required => Err(ColorError::GirthTooSmall { required, found }),
        _ => Ok(()),
    }
}

/// Cyclic order of a cycle block, starting at `start`.
fn cycle_order(g: &Graph, block: &crate::graph::Block, start: Vertex) -> Vec<Vertex> {
    let inside = |w: Vertex| block.vertices.binary_search(&w).is_ok();
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev && inside(w) && block.edges.binary_search(&(cur.min(w), cur.max(w))).is_ok())
            .unwrap();
        if next == start {
            break;
        }
        prev = cur;
        cur = next;
        order.push(cur);
    }
    order
}

/// (2,1)-colouring of a cactus of girth at least 4, block by block from a
/// root in each component.
pub fn color_cactus_g4(g: &Graph) -> Result<MixedColoring, ColorError> {
    require_girth(g, 4)?;
    let n = g.n();
    let dec = g.blocks();
    let mut blocks_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, b) in dec.blocks.iter().enumerate() {
        if !b.is_edge() && !b.is_cycle() {
            return Err(ColorError::NotCactus(b.vertices[0]));
        }
        for &v in &b.vertices {
            blocks_of[v].push(i);
        }
    }
    let mut c = MixedColoring::uncolored(n);
    let mut done = vec![false; dec.blocks.len()];
    for root in 0..n {
        if c.get(root).is_some() {
            continue;
        }
        c.set(root, Color::D1(0));
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = c.get(u).unwrap();
            for &bi in &blocks_of[u] {
                if std::mem::replace(&mut done[bi], true) {
                    continue;
                }
                let b = &dec.blocks[bi];
                let other_d1 = |col: Color| match col {
                    Color::D1(i) => 1 - i,
                    Color::D2(_) => 0,
                };
                if b.is_edge() {
                    let w = if b.vertices[0] == u { b.vertices[1] } else { b.vertices[0] };
                    c.set(w, Color::D1(other_d1(cu)));
                    queue.push_back(w);
                    continue;
                }
                let cyc = cycle_order(g, b, u);
                let len = cyc.len();
                match cu {
                    Color::D2(_) => {
                        for (i, &w) in cyc.iter().enumerate().skip(1) {
                            c.set(w, Color::D1(i % 2));
                        }
                    }
                    Color::D1(x) => {
                        c.set(cyc[1], Color::D1(1 - x));
                        c.set(cyc[2], Color::D2(0));
                        // Walk back from the neighbour of u.
                        for (step, i) in (3..len).rev().enumerate() {
                            c.set(cyc[i], Color::D1(if step % 2 == 0 { 1 - x } else { x }));
                        }
                    }
                }
                queue.extend(cyc.into_iter().skip(1));
            }
        }
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterPartition {
    pub s_prime: VertexSet,
    pub parts: Vec<VertexSet>,
    pub seed_size: usize,
}

/// Grows `s` into connected parts at pairwise distance at least 4 by
/// repeatedly merging two parts along a shortest path of length at most 3.
pub fn cluster(g: &Graph, s: &VertexSet) -> ClusterPartition {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<Vertex>> = s.iter().map(|v| vec![v]).collect();
    for (i, p) in parts.iter().enumerate() {
        part_of[p[0]] = i;
    }
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    'scan: loop {
        for i in 0..parts.len() {
            if parts[i].is_empty() {
                continue;
            }
            let mut touched = Vec::new();
            let mut queue = VecDeque::new();
            for &v in &parts[i] {
                dist[v] = 0;
                touched.push(v);
                queue.push_back(v);
            }
            let mut hit = None;
            'bfs: while let Some(v) = queue.pop_front() {
                if dist[v] == 3 {
                    continue;
                }
                for &w in g.neighbors(v) {
                    if dist[w] != usize::MAX {
                        continue;
                    }
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    touched.push(w);
                    if part_of[w] != usize::MAX && part_of[w] != i {
                        hit = Some(w);
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
            let path: Vec<Vertex> = hit
                .map(|w| {
                    let mut path = Vec::new();
                    let mut x = parent[w];
                    while dist[x] > 0 {
                        path.push(x);
                        x = parent[x];
                    }
                    path
                })
                .unwrap_or_default();
            for v in touched {
                dist[v] = usize::MAX;
            }
            if let Some(w) = hit {
                let j = part_of[w];
                let absorbed = std::mem::take(&mut parts[j]);
                for v in absorbed.into_iter().chain(path) {
                    part_of[v] = i;
                    parts[i].push(v);
                }
                continue 'scan;
            }
        }
        break;
    }
    let parts: Vec<VertexSet> =
        parts.into_iter().filter(|p| !p.is_empty()).map(|p| VertexSet::from_iter(n, p)).collect();
    let mut s_prime = VertexSet::new(n);
    for p in &parts {
        s_prime.union_with(p);
    }
    ClusterPartition { s_prime, parts, seed_size: s.count() }
}

/// Odd cycle transversal of `g - d`: the smallest class of a 3-colouring of
/// each component of the union of the non-bipartite blocks.
pub fn oct_for_cluster(g: &Graph, d: &VertexSet, budget: Budget) -> Result<VertexSet, ColorError> {
    let n = g.n();
    let (h, map) = g.without(d);
    let mut odd = VertexSet::new(h.n());
    for b in h.blocks().blocks {
        if b.is_edge() {
            continue;
        }
        let (bg, _) = Graph::from_edges(h.n(), &b.edges).induced(&VertexSet::from_iter(h.n(), b.vertices.iter().copied()));
        if !bg.is_bipartite() {
            for &v in &b.vertices {
                odd.insert(v);
            }
        }
    }
    let (u, umap) = h.induced(&odd);
    let mut x = VertexSet::new(n);
    for comp in u.components() {
        let (cg, cmap) = u.induced(&VertexSet::from_iter(u.n(), comp));
        let out = decide(&cg, Params::new(3, 0), budget);
        let w = match out.status {
            Status::Colorable => out.witness.unwrap(),
            Status::NotColorable => return Err(ColorError::OctFailed("odd blocks are not 3-colourable".into())),
            Status::Unknown => return Err(ColorError::OctFailed("budget exhausted".into())),
        };
        let mut classes = [Vec::new(), Vec::new(), Vec::new()];
        for v in 0..cg.n() {
            if let Some(Color::D1(i)) = w.get(v) {
                classes[i].push(v);
            }
        }
        let smallest = classes.iter().min_by_key(|c| c.len()).unwrap();
        for &v in smallest {
            x.insert(map[umap[cmap[v]]]);
        }
    }
    Ok(x)
}

/// (2,b)-colouring of a planar graph of girth at least 4 with
/// `b <= 8 sqrt(10) sqrt(n)`. Planarity is assumed, not checked.
pub fn color_planar_g4(g: &Graph, budget: Budget) -> Result<(MixedColoring, BoundCertificate), ColorError> {
    require_girth(g, 4)?;
    let n = g.n();
    let s = high_degree(g, 32, 5);
    let cl = cluster(g, &s);
    let mut c = MixedColoring::uncolored(n);
    let mut next = 0;
    let mut oct_total = 0;
    for part in &cl.parts {
        let closed = g.closed_neighborhood(part);
        let (q, qmap) = g.induced(&closed);
        let local_part = VertexSet::from_iter(q.n(), (0..q.n()).filter(|&i| part.contains(qmap[i])));
        let x = oct_for_cluster(&q, &local_part, budget)?;
        oct_total += x.count();
        let mut special = local_part.clone();
        special.union_with(&x);
        for i in special.iter() {
            c.set(qmap[i], Color::D2(next));
            next += 1;
        }
        let (rest, rmap) = q.without(&special);
        match rest.bipartition() {
            Bipartition::Bipartite(side) => {
                for (i, &sd) in side.iter().enumerate() {
                    c.set(qmap[rmap[i]], Color::D1(sd as usize));
                }
            }
            Bipartition::OddCycle(_) => return Err(ColorError::NotBipartite),
        }
    }
    color_far_part(g, &cl.s_prime, next, &mut c);
    let (c, d1, d2) = finish(g, 2, c);
    let cert = BoundCertificate {
        algorithm: Algorithm::PlanarG4,
        n,
        threshold: (32.0 * n as f64 / 5.0).sqrt(),
        s_size: s.count(),
        s_prime_size: cl.s_prime.count(),
        used_d1: d1,
        used_d2: d2,
        claim: SqrtBound { num: 640, den: 1, offset: 0 },
        notes: vec![format!("oct total {oct_total}, parts {}", cl.parts.len())],
    };
    Ok((c, cert))
}

/// (3,b)-colouring of a planar graph with `b <= 18 sqrt(2) sqrt(n)`.
/// Planarity is assumed, not checked.
pub fn color_planar(g: &Graph) -> Result<(MixedColoring, BoundCertificate), ColorError> {
    let n = g.n();
    let s = high_degree(g, 2, 1);
    let cl = cluster(g, &s);
    let mut c = MixedColoring::uncolored(n);
    let mut next = 0;
    for v in cl.s_prime.iter() {
        c.set(v, Color::D2(next));
        next += 1;
    }
    let mut ring = g.closed_neighborhood(&cl.s_prime);
    for v in cl.s_prime.iter() {
        ring.remove(v);
    }
    let (h, map) = g.induced(&ring);
    let mut col = vec![usize::MAX; h.n()];
    for v in h.degeneracy_ordering().order {
        let mut taken = [false; 4];
        for &w in h.neighbors(v) {
            if col[w] < 4 {
                taken[col[w]] = true;
            }
        }
        let free = first_free(&taken);
        if free >= 3 {
            return Err(ColorError::NeedsFourthColor(map[v]));
        }
        col[v] = free;
        c.set(map[v], Color::D1(free));
    }
    color_far_part(g, &cl.s_prime, next, &mut c);
    let (c, d1, d2) = finish(g, 3, c);
    let cert = BoundCertificate {
        algorithm: Algorithm::Planar,
        n,
        threshold: (2.0 * n as f64).sqrt(),
        s_size: s.count(),
        s_prime_size: cl.s_prime.count(),
        used_d1: d1,
        used_d2: d2,
        claim: SqrtBound { num: 648, den: 1, offset: 0 },
        notes: Vec::new(),
    };
    Ok((c, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify;

    fn valid(g: &Graph, a: usize, b: usize, c: &MixedColoring) -> bool {
        verify(g, Params::new(a, b), c).unwrap().is_empty()
    }

    #[test]
    fn sqrt_bound_is_exact() {
        let b = SqrtBound { num: 640, den: 1, offset: 0 };
        // sqrt(640 * 10) = 80
        assert!(b.holds(80, 10));
        assert!(!b.holds(81, 10));
        let t = SqrtBound { num: 544, den: 5, offset: -1 };
        assert!(t.holds(9, 1));
        assert!(!t.holds(10, 1));
        assert_eq!(t.to_string(), "sqrt(544/5*n)-1");
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(class_count(&greedy_2distance(&Graph::cycle(6))), 3);
        assert_eq!(class_count(&greedy_2distance(&Graph::star(7))), 8);
    }

    #[test]
    fn peel_star_and_path() {
        let g = Graph::star(5);
        let (t, col) = dominated_peel(&g, &VertexSet::from_iter(6, [0]), 1).unwrap();
        assert_eq!(t.to_vec(), vec![0]);
        assert!((1..6).all(|v| col[v] == Some(0)));
        let p = Graph::path(3);
        let (t, col) = dominated_peel(&p, &VertexSet::from_iter(3, [1]), 1).unwrap();
        assert!(t.contains(1) && t.count() <= 2);
        for (u, v) in p.edges() {
            assert!(col[u].is_none() || col[v].is_none() || col[u] != col[v]);
        }
    }

    #[test]
    fn peel_errors() {
        let p = Graph::path(4);
        assert_eq!(dominated_peel(&p, &VertexSet::from_iter(4, [0]), 1), Err(ColorError::NotDominating(2)));
        let k4 = Graph::complete(4);
        assert!(matches!(dominated_peel(&k4, &VertexSet::full(4), 2), Err(ColorError::NotDegenerate { .. })));
    }

    #[test]
    fn degenerate_on_k4() {
        let g = Graph::complete(4);
        let (c, cert) = color_degenerate(&g, 3).unwrap();
        assert!(valid(&g, 3, cert.used_d2, &c));
        assert_eq!(cert.used_d2, 1);
        assert!(cert.holds());
    }

    #[test]
    fn cactus_examples() {
        let c4 = Graph::cycle(4);
        let c = color_cactus_g4(&c4).unwrap();
        assert!(valid(&c4, 2, 1, &c));
        let bowtie = Graph::from_edges(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 8), (8, 0)]);
        assert!(valid(&bowtie, 2, 1, &color_cactus_g4(&bowtie).unwrap()));
        assert!(matches!(color_cactus_g4(&Graph::complete(3)), Err(ColorError::GirthTooSmall { .. })));
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(matches!(color_cactus_g4(&k23), Err(ColorError::NotCactus(_))));
    }

    #[test]
    fn cluster_examples() {
        let p = Graph::path(2);
        let cl = cluster(&p, &VertexSet::full(2));
        assert_eq!(cl.parts.len(), 1);
        let p6 = Graph::path(6);
        let cl = cluster(&p6, &VertexSet::from_iter(6, [0, 5]));
        assert_eq!(cl.parts.len(), 2);
        assert_eq!(cl.s_prime.count(), 2);
        let p4 = Graph::path(4);
        let cl = cluster(&p4, &VertexSet::from_iter(4, [0, 3]));
        assert_eq!(cl.parts.len(), 1);
        assert_eq!(cl.s_prime.count(), 4);
    }

    #[test]
    fn oct_examples() {
        let b = Budget::default();
        let c6 = Graph::cycle(6);
        assert!(oct_for_cluster(&c6, &VertexSet::new(6), b).unwrap().is_empty());
        let c5 = Graph::cycle(5);
        assert_eq!(oct_for_cluster(&c5, &VertexSet::new(5), b).unwrap().count(), 1);
    }

    #[test]
    fn planar_examples() {
        let g = Graph::complete(4);
        let (c, cert) = color_planar(&g).unwrap();
        assert!(valid(&g, 3, 1, &c));
        assert_eq!(cert.used_d2, 1);
        let c6 = Graph::cycle(6);
        let (c, cert) = color_planar_g4(&c6, Budget::default()).unwrap();
        assert!(valid(&c6, 2, cert.used_d2, &c));
        assert_eq!(cert.used_d2, 0);
    }
}
