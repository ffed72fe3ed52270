//! Outerplanar tools: homomorphisms to odd cycles by degree-2 elimination,
//! vertex covers from them, and the (1,b) colourer for triangle-free
//! outerplanar graphs.

use std::collections::{BTreeMap, BTreeSet};

use crate::colorers::{require_girth, Algorithm, BoundCertificate, ColorError, SqrtBound};
use crate::coloring::{Color, MixedColoring};
use crate::graph::{Graph, Vertex, VertexSet};

/// Cyclic shift of a set of residues mod `m`.
fn shift(mask: u64, by: usize, m: usize) -> u64 {
    let full = (1u64 << m) - 1;
    let by = by % m;
    if by == 0 { mask } else { ((mask << by) | (mask >> (m - by))) & full }
}

fn sumset(a: u64, b: u64, m: usize) -> u64 {
    (0..m).filter(|&i| a >> i & 1 == 1).fold(0, |acc, i| acc | shift(b, i, m))
}

fn negate(a: u64, m: usize) -> u64 {
    (0..m).filter(|&i| a >> i & 1 == 1).fold(0, |acc, i| acc | 1 << ((m - i) % m))
}

enum Step {
    Free(Vertex),
    /// `f(v) - f(w)` must lie in the mask.
    Leaf(Vertex, Vertex, u64),
    /// `f(v) - f(x)` in the first mask, `f(y) - f(v)` in the second.
    Series(Vertex, Vertex, u64, Vertex, u64),
}

/// Homomorphism to `C_{2k+1}` with `k = g0 / 2`, for an outerplanar graph of
/// girth at least `g0`.
///
/// Vertices of degree at most 2 are eliminated one at a time. Every edge
/// carries the set of allowed differences `f(v) - f(u)` in `Z_{2k+1}`;
/// eliminating a degree-2 vertex composes its two labels into a label between
/// its neighbours, intersected with any label already there. This decides
/// existence exactly, and the map is rebuilt in reverse.
pub fn peel_homomorphism(g: &Graph, g0: usize) -> Result<Vec<usize>, ColorError> {
    assert!((3..=63).contains(&g0), "girth bound must lie in 3..=63");
    require_girth(g, g0)?;
    let n = g.n();
    let m = 2 * (g0 / 2) + 1;
    let edge_mask: u64 = 1 << 1 | 1 << (m - 1);
    // label[v][w] = allowed f(w) - f(v)
    let mut label: Vec<BTreeMap<Vertex, u64>> =
        (0..n).map(|v| g.neighbors(v).iter().map(|&w| (w, edge_mask)).collect()).collect();
    let mut gone = vec![false; n];
    let mut steps = Vec::with_capacity(n);
    let mut stack: Vec<Vertex> = (0..n).rev().collect();
    while let Some(v) = stack.pop() {
        if gone[v] || label[v].len() > 2 {
            continue;
        }
        gone[v] = true;
        let ns: Vec<(Vertex, u64)> = std::mem::take(&mut label[v]).into_iter().collect();
        for &(w, _) in &ns {
            label[w].remove(&v);
        }
        match ns[..] {
            [] => steps.push(Step::Free(v)),
            [(w, vw)] => steps.push(Step::Leaf(v, w, vw)),
            [(x, vx), (y, vy)] => {
                let xv = negate(vx, m);
                let xy = sumset(xv, vy, m);
                let merged = label[x].get(&y).map_or(xy, |&old| old & xy);
                if merged == 0 {
                    return Err(ColorError::GirthTooSmall { required: g0, found: 0 });
                }
                label[x].insert(y, merged);
                label[y].insert(x, negate(merged, m));
                steps.push(Step::Series(v, x, xv, y, vy));
            }
            _ => unreachable!(),
        }
        stack.extend(ns.iter().map(|&(w, _)| w));
    }
    if steps.len() < n {
        return Err(ColorError::NotOuterplanar(n - steps.len()));
    }
    let mut f = vec![usize::MAX; n];
    for step in steps.into_iter().rev() {
        match step {
            Step::Free(v) => f[v] = 0,
            Step::Leaf(v, w, vw) => f[v] = (f[w] + m - negate(vw, m).trailing_zeros() as usize % m) % m,
            Step::Series(v, x, xv, y, vy) => {
                let d = (0..m)
                    .find(|&d| xv >> d & 1 == 1 && vy >> ((f[y] + 2 * m - f[x] - d) % m) & 1 == 1)
                    .expect("composed label admits the current difference");
                f[v] = (f[x] + d) % m;
            }
        }
    }
    Ok(f)
}

/// Vertex cover of size at most `n(k+1)/(2k+1)`: the complement of the
/// largest preimage of a maximum independent set of `C_{2k+1}`.
pub fn vc_outerplanar(g: &Graph, g0: usize) -> Result<VertexSet, ColorError> {
    let f = peel_homomorphism(g, g0)?;
    let k = g0 / 2;
    let m = 2 * k + 1;
    let mut count = vec![0usize; m];
    for &x in &f {
        count[x] += 1;
    }
    let size = |j: usize| (0..k).map(|i| count[(j + 2 * i) % m]).sum::<usize>();
    let best = (0..m).max_by_key(|&j| (size(j), std::cmp::Reverse(j))).unwrap();
    let keep: Vec<usize> = (0..k).map(|i| (best + 2 * i) % m).collect();
    Ok(VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| !keep.contains(&f[v]))))
}

/// Elimination order of vertices of degree at most 2, adding an edge
/// between the two neighbours of each eliminated vertex.
fn two_tree_elimination(g: &Graph) -> Result<Vec<Vertex>, ColorError> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<Vertex>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut gone = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<Vertex> = (0..n).rev().collect();
    while let Some(v) = stack.pop() {
        if gone[v] || adj[v].len() > 2 {
            continue;
        }
        gone[v] = true;
        order.push(v);
        let ns: Vec<Vertex> = std::mem::take(&mut adj[v]).into_iter().collect();
        for &w in &ns {
            adj[w].remove(&v);
        }
        if let [x, y] = ns[..] {
            adj[x].insert(y);
            adj[y].insert(x);
        }
        stack.extend(ns);
    }
    if order.len() < n {
        return Err(ColorError::EliminationStalled(n - order.len()));
    }
    Ok(order)
}

/// (1,b)-colouring of a triangle-free outerplanar graph with
/// `b <= 4 sqrt(34/5) sqrt(n) - 1`.
pub fn color_tf_outerplanar(g: &Graph) -> Result<(MixedColoring, BoundCertificate), ColorError> {
    require_girth(g, 4)?;
    let n = g.n();
    let s = VertexSet::from_iter(n, (0..n).filter(|&v| 5 * g.degree(v).pow(2) >= 34 * n));
    let closed = g.closed_neighborhood(&s);
    let ring: Vec<Vertex> = closed.iter().filter(|&v| !s.contains(v)).collect();
    let in_ring = VertexSet::from_iter(n, ring.iter().copied());
    let middle = VertexSet::from_iter(
        n,
        ring.iter().copied().filter(|&v| g.neighbors(v).iter().any(|&w| in_ring.contains(w))),
    );
    let (h, hmap) = g.induced(&middle);
    let cover = vc_outerplanar(&h, 4)?;
    let mut special = s.clone();
    for i in cover.iter() {
        special.insert(hmap[i]);
    }
    let mut c = MixedColoring::uncolored(n);
    let mut next = 0;
    for v in special.iter() {
        c.set(v, Color::D2(next));
        next += 1;
    }
    for &v in &ring {
        if !special.contains(v) {
            c.set(v, Color::D1(0));
        }
    }
    let (rest, rmap) = g.without(&s);
    let order = two_tree_elimination(&rest)?;
    let pool_start = next;
    let mut pool_used = 0;
    for &i in order.iter().rev() {
        let v = rmap[i];
        if closed.contains(v) {
            continue;
        }
        let mut taken = vec![false; pool_used + 1];
        let mut mark = |w: Vertex| {
            if let Some(Color::D2(j)) = c.get(w) {
                if j >= pool_start && j - pool_start < taken.len() {
                    taken[j - pool_start] = true;
                }
            }
        };
        for &w in g.neighbors(v) {
            mark(w);
            for &x in g.neighbors(w) {
                mark(x);
            }
        }
        let free = taken.iter().position(|&t| !t).unwrap();
        c.set(v, Color::D2(pool_start + free));
        pool_used = pool_used.max(free + 1);
    }
    crate::colorers::reuse_d1(g, 1, &mut c);
    let c = c.canonicalize();
    let (d1, d2) = c.count_classes();
    let s_size = s.count();
    let mut notes = Vec::new();
    if s_size > 0 {
        notes.push(format!("|N[S]| = {} vs 5|S|-4 = {}", closed.count(), 5 * s_size - 4));
        notes.push(format!("|V'| = {} vs 4|S| = {}", middle.count(), 4 * s_size));
    }
    let cert = BoundCertificate {
        algorithm: Algorithm::TfOuterplanar,
        n,
        threshold: (34.0 / 5.0 * n as f64).sqrt(),
        s_size,
        s_prime_size: special.count(),
        used_d1: d1,
        used_d2: d2,
        claim: SqrtBound { num: 544, den: 5, offset: -1 },
        notes,
    };
    Ok((c, cert))
}
