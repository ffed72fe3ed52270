//! Extremal families, gadget builders and random members of sparse classes.
//!
//! Vertex numbering is fixed per family and documented on each builder.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::gadget::{obstruction_profile, GadgetProperty, GadgetSpec};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::solver::Budget;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0}: wiring is not recoverable from the construction's description")]
    NotReconstructible(&'static str),
    #[error("vertex {0} does not have degree 2")]
    NotDegreeTwo(Vertex),
    #[error("graph is (2,{0})-colourable, so no colouring of G - v is always obstructed")]
    Colorable(usize),
    #[error("G - v has no (2,{0})-colouring, so the obstruction profile is empty")]
    EmptyProfile(usize),
    #[error("budget exhausted while enumerating colourings")]
    BudgetExhausted,
}

fn invalid(msg: impl Into<String>) -> GenError {
    GenError::InvalidParameter(msg.into())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Hub `0` adjacent to `u_1..u_{l+1}`; each `u_i` is joined to `l+1`
/// disjoint `K_k`. Order `kl^2 + (2k+1)l + k + 2`, degeneracy `k`.
///
/// Numbering: `u_i` is `i`, then the cliques of `u_1`, `u_2`, ... in turn.
pub fn gen_fig5(k: usize, l: usize) -> Result<Graph, GenError> {
    if k == 0 || l == 0 {
        return Err(invalid("fig5 needs k >= 1 and l >= 1"));
    }
    let mut edges = Vec::new();
    let mut next = l + 2;
    for u in 1..=l + 1 {
        edges.push((0, u));
        for _ in 0..=l {
            let clique: Vec<Vertex> = (next..next + k).collect();
            next += k;
            for (i, &x) in clique.iter().enumerate() {
                edges.push((u, x));
                for &y in &clique[i + 1..] {
                    edges.push((x, y));
                }
            }
        }
    }
    Ok(Graph::from_edges(next, &edges))
}

pub fn fig5_order(k: usize, l: usize) -> usize {
    k * l * l + (2 * k + 1) * l + k + 2
}

/// `s = 0`, `t = 1`, rails `u_i = 2 + i`, `v_i = 2 + (2k-1) + i` for
/// `i < 2k-1`, with edges `s u_i`, `u_i v_i`, `v_i t`. Order `4k`, girth 6.
pub fn gen_fig6(k: usize) -> Result<Graph, GenError> {
    if k < 2 {
        return Err(invalid("fig6 needs k >= 2"));
    }
    let r = 2 * k - 1;
    let mut edges = Vec::new();
    for i in 0..r {
        let (u, v) = (2 + i, 2 + r + i);
        edges.extend([(0, u), (u, v), (v, 1)]);
    }
    Ok(Graph::from_edges(2 + 2 * r, &edges))
}

/// Hub `0` adjacent to every vertex of `k` disjoint triangles
/// `{1,2,3}, {4,5,6}, ...`. Order `3k + 1`, diameter 2.
pub fn gen_fig8(k: usize) -> Result<Graph, GenError> {
    if k == 0 {
        return Err(invalid("fig8 needs k >= 1"));
    }
    let mut edges = Vec::new();
    for t in 0..k {
        let (a, b, c) = (3 * t + 1, 3 * t + 2, 3 * t + 3);
        edges.extend([(0, a), (0, b), (0, c), (a, b), (b, c), (a, c)]);
    }
    Ok(Graph::from_edges(3 * k + 1, &edges))
}

pub fn gen_fig9() -> Result<Graph, GenError> {
    Err(GenError::NotReconstructible("girth-4 planar lower-bound family"))
}

pub fn gen_fig10() -> Result<Graph, GenError> {
    Err(GenError::NotReconstructible("girth-5 planar lower-bound family"))
}

/// `k+1` triangles sharing `s = 0`; triangle `i` is `{0, 2i+1, 2i+2}`.
/// At (2,k), `s` takes a distance-2 colour in every colouring.
pub fn gen_friendship(k: usize) -> Result<GadgetSpec, GenError> {
    if k == 0 {
        return Err(invalid("friendship gadget needs k >= 1"));
    }
    let mut edges = Vec::new();
    for i in 0..=k {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    let g = Graph::from_edges(2 * (k + 1) + 1, &edges);
    Ok(GadgetSpec::new(g, vec![("s".into(), 0)], GadgetProperty::ForcedD2(0)))
}

/// Vertex `v` becomes `v(k+1) .. v(k+1)+k`; every edge becomes `K_{k+1,k+1}`.
pub fn gen_blowup(g: &Graph, k: usize) -> Result<Graph, GenError> {
    if k == 0 {
        return Err(invalid("blowup needs k >= 1"));
    }
    let c = k + 1;
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        for i in 0..c {
            for j in 0..c {
                edges.push((u * c + i, v * c + j));
            }
        }
    }
    Ok(Graph::from_edges(g.n() * c, &edges))
}

/// `count` disjoint copies; copy `i` occupies `i*n .. (i+1)*n`.
fn copies(h: &Graph, count: usize) -> (Graph, usize) {
    let mut g = Graph::empty(0);
    for _ in 0..count {
        g = g.disjoint_union(h);
    }
    (g, h.n())
}

fn with_extra(g: &Graph, extra: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    let mut all: Vec<_> = g.edges().collect();
    all.extend_from_slice(edges);
    Graph::from_edges(g.n() + extra, &all)
}

/// Builds a gadget whose port `s` is forced onto a distance-2 colour at
/// (2,k), from a graph `g_prime` that is not (2,k)-colourable and has a
/// degree-2 vertex `v`. The case is chosen from the obstruction profile of
/// `g_prime - v`.
pub fn gen_forced_vertex(g_prime: &Graph, v: Vertex, k: usize, budget: Budget) -> Result<GadgetSpec, GenError> {
    if v >= g_prime.n() {
        return Err(invalid("vertex out of range"));
    }
    if g_prime.degree(v) != 2 {
        return Err(GenError::NotDegreeTwo(v));
    }
    let mut rest = VertexSet::new(g_prime.n());
    rest.insert(v);
    let (h, map) = g_prime.without(&rest);
    let at = |x: Vertex| map.iter().position(|&m| m == x).unwrap();
    let (mut a1, mut a2) = (at(g_prime.neighbors(v)[0]), at(g_prime.neighbors(v)[1]));
    let prof = obstruction_profile(&h, a1, a2, k, budget).ok_or(GenError::BudgetExhausted)?;
    if prof.colorings == 0 {
        return Err(GenError::EmptyProfile(k));
    }
    if !prof.all_obstructed {
        return Err(GenError::Colorable(k));
    }
    let full: u64 = (1u64 << k) - 1;
    let only_full = prof.pairs.len() == 1 && prof.pairs.contains(&(full, full));
    let short_s2 = prof.pairs.iter().any(|&(_, s2)| s2 != full);
    if !short_s2 && prof.pairs.iter().any(|&(s1, _)| s1 != full) {
        std::mem::swap(&mut a1, &mut a2);
    }
    let n = h.n();
    let (g, s) = if prof.pairs.is_empty() {
        (h, a1)
    } else if only_full && !prof.has_bc {
        // a1 - x1 - s - x2 - a2
        let (x1, x2, s) = (n, n + 1, n + 2);
        (with_extra(&h, 3, &[(a1, x1), (a2, x2), (x1, s), (x2, s)]), s)
    } else if !prof.has_bc {
        let (g, n) = copies(&h, 2);
        let s = 2 * n;
        (with_extra(&g, 1, &[(a1, n + a1), (s, a2), (s, n + a2)]), s)
    } else if only_full {
        let (g, n) = copies(&h, k + 2);
        let mut edges: Vec<_> = (1..=k + 1).map(|i| (a2, i * n + a1)).collect();
        let (x1, x2, s) = (g.n(), g.n() + 1, g.n() + 2);
        edges.extend([(a1, x1), (x1, s), (s, x2), (x2, a2)]);
        (with_extra(&g, 3, &edges), s)
    } else {
        let (g, n) = copies(&h, 2 * k + 2);
        let s = g.n();
        let mut edges: Vec<_> = (0..2 * k + 2).map(|i| (s, i * n + a2)).collect();
        edges.extend((0..=k).map(|i| (2 * i * n + a1, (2 * i + 1) * n + a1)));
        (with_extra(&g, 1, &edges), s)
    };
    Ok(GadgetSpec::new(g, vec![("s".into(), s)], GadgetProperty::ForcedD2(s)))
}

/// `k+1` copies of a gadget with port `s`, plus an apex adjacent to every
/// copy of `s` (the apex is the last vertex).
pub fn forced_copies_with_apex(spec: &GadgetSpec, k: usize) -> Graph {
    let s = match spec.property {
        GadgetProperty::ForcedD2(s) => s,
        _ => spec.port("s").expect("gadget has a port s"),
    };
    let (g, n) = copies(&spec.gadget, k + 1);
    let apex = g.n();
    let edges: Vec<_> = (0..=k).map(|i| (apex, i * n + s)).collect();
    with_extra(&g, 1, &edges)
}

/// `w x h` grid; vertex `(x, y)` is `y*w + x`.
pub fn grid(w: usize, h: usize) -> Result<Graph, GenError> {
    if w == 0 || h == 0 {
        return Err(invalid("grid dimensions must be positive"));
    }
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            let v = y * w + x;
            if x + 1 < w {
                edges.push((v, v + 1));
            }
            if y + 1 < h {
                edges.push((v, v + w));
            }
        }
    }
    Ok(Graph::from_edges(w * h, &edges))
}

/// Top `0`, upper ring `1..=5`, lower ring `6..=10`, bottom `11`.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
        let (lo, lo_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, up), (up, up_next), (11, lo), (lo, lo_next), (up, lo), (up_next, lo)]);
    }
    Graph::from_edges(12, &edges)
}

/// Vertex `i` attaches to `min(i, k)` earlier vertices chosen with
/// probability growing with their degree, which produces hubs.
pub fn random_kdegenerate(n: usize, k: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 || k == 0 {
        return Err(invalid("n and k must be positive"));
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    // Each vertex appears once plus once per incident edge.
    let mut urn: Vec<Vertex> = Vec::new();
    for i in 0..n {
        let want = i.min(k);
        let mut picked: Vec<Vertex> = Vec::with_capacity(want);
        while picked.len() < want {
            let u = if r.gen_bool(0.1) { r.gen_range(0..i) } else { urn[r.gen_range(0..urn.len())] };
            if !picked.contains(&u) {
                picked.push(u);
            }
        }
        for &u in &picked {
            edges.push((u, i));
            urn.push(u);
            urn.push(i);
        }
        urn.push(i);
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Grows a cactus by hanging pendant edges and cycles of length
/// `min_girth..=min_girth+4` on random existing vertices.
pub fn random_cactus(n: usize, min_girth: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 || min_girth < 3 {
        return Err(invalid("need n >= 1 and min_girth >= 3"));
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    let mut count = 1;
    while count < n {
        let at = r.gen_range(0..count);
        let len = r.gen_range(min_girth..=min_girth + 4);
        if r.gen_bool(0.6) && count + len - 1 <= n {
            let mut prev = at;
            for _ in 1..len {
                edges.push((prev, count));
                prev = count;
                count += 1;
            }
            edges.push((prev, at));
        } else {
            edges.push((at, count));
            count += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Random maximal outerplanar graph (vertices inserted on outer edges,
/// biased towards vertex 0), then one edge removed from every triangle
/// whose three edges are still present. Connected and triangle-free.
pub fn random_tf_outerplanar(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(invalid("need n >= 3"));
    }
    let mut r = rng(seed);
    let mut boundary: Vec<Vertex> = vec![0, 1, 2];
    let mut triangles = vec![[0, 1, 2]];
    for w in 3..n {
        let i = if r.gen_bool(0.3) {
            let p = boundary.iter().position(|&x| x == 0).unwrap();
            if r.gen_bool(0.5) { p } else { (p + boundary.len() - 1) % boundary.len() }
        } else {
            r.gen_range(0..boundary.len())
        };
        let (a, b) = (boundary[i], boundary[(i + 1) % boundary.len()]);
        boundary.insert(i + 1, w);
        triangles.push([a, b, w]);
    }
    let mut present = std::collections::BTreeSet::new();
    for t in &triangles {
        for (x, y) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            present.insert((x.min(y), x.max(y)));
        }
    }
    triangles.shuffle(&mut r);
    for t in &triangles {
        let es: Vec<_> = [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])].iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        if es.iter().all(|e| present.contains(e)) {
            present.remove(&es[r.gen_range(0..3)]);
        }
    }
    let edges: Vec<_> = present.into_iter().collect();
    Ok(Graph::from_edges(n, &edges))
}

/// Random planar triangulation by repeated face splits (contains `K_4`
/// once `n >= 4`).
pub fn random_stacked_triangulation(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(invalid("need n >= 3"));
    }
    let mut r = rng(seed);
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for w in 3..n {
        let i = r.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        edges.extend([(a, w), (b, w), (c, w)]);
        faces[i] = [a, b, w];
        faces.push([b, c, w]);
        faces.push([a, c, w]);
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Random planar quadrangulation: a 4-face `abcd` is split by a new vertex
/// adjacent to `a` and `c`. Bipartite with girth 4.
pub fn random_quadrangulation(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 4 {
        return Err(invalid("need n >= 4"));
    }
    let mut r = rng(seed);
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
    let mut faces = vec![[0, 1, 2, 3], [0, 1, 2, 3]];
    for w in 4..n {
        let i = r.gen_range(0..faces.len());
        let f = faces[i];
        let rot = if r.gen_bool(0.5) { 0 } else { 1 };
        let [a, b, c, d] = [f[rot], f[rot + 1], f[rot + 2], f[(rot + 3) % 4]];
        edges.extend([(a, w), (c, w)]);
        faces[i] = [a, b, c, w];
        faces.push([a, w, c, d]);
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Triangle-free planar graph that is usually not bipartite: a random
/// quadrangulation with about a tenth of the vertices spent subdividing
/// random edges.
pub fn random_tf_planar(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 5 {
        return Err(invalid("need n >= 5"));
    }
    let subdivisions = (n / 10).max(1);
    let base = random_quadrangulation(n - subdivisions, seed)?;
    let mut r = rng(seed ^ 0x5eed);
    let mut edges: Vec<_> = base.edges().collect();
    for w in base.n()..n {
        let i = r.gen_range(0..edges.len());
        let (a, b) = edges.swap_remove(i);
        edges.push((a, w));
        edges.push((w, b));
    }
    Ok(Graph::from_edges(n, &edges))
}
