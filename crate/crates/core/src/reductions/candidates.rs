//! Small gadgets with the port behaviour the SAT and (3,k) reductions need.
//! Each is validated behaviourally by [`crate::gadget::check_gadget`].

use super::SatGadgets;
use crate::gadget::{GadgetProperty, GadgetSpec};
use crate::generators::gen_friendship;
use crate::graph::Graph;

struct Edges {
    n: usize,
    e: Vec<(usize, usize)>,
}

impl Edges {
    fn new(n: usize) -> Self {
        Edges { n, e: Vec::new() }
    }

    fn fresh(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn pendants(&mut self, v: usize, count: usize) {
        for _ in 0..count {
            let p = self.fresh();
            self.e.push((v, p));
        }
    }

    /// `count + 1` copies of `K4` sharing `apex`; the apex is then forced to
    /// a distance-2 class at (3,count).
    fn k4_fan(&mut self, apex: usize, count: usize) {
        for _ in 0..=count {
            let t = [self.fresh(), self.fresh(), self.fresh()];
            self.e.extend([(apex, t[0]), (apex, t[1]), (apex, t[2]), (t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
        }
    }

    fn graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.e)
    }
}

fn names(list: &[(&str, usize)]) -> Vec<(String, usize)> {
    list.iter().map(|&(s, v)| (s.to_string(), v)).collect()
}

/// Edge `u v` plus `k` apices of `K4` fans adjacent to `u`. Both ports are
/// forced to distance-1 classes at (3,k); maximum degree `3k + 4`.
pub fn h1(k: usize) -> GadgetSpec {
    assert!(k >= 1);
    let mut b = Edges::new(2);
    b.e.push((0, 1));
    for _ in 0..k {
        let x = b.fresh();
        b.e.push((0, x));
        b.k4_fan(x, k);
    }
    GadgetSpec::new(b.graph(), names(&[("u", 0), ("v", 1)]), GadgetProperty::ForcedD1(0))
}

/// Variable gadget at (1,k), `k >= 2`: `v` and `nv` share a neighbour, each
/// has a private neighbour, and both private neighbours see `k - 1`
/// vertices of degree `k + 1`.
pub fn var_1k(k: usize) -> GadgetSpec {
    assert!(k >= 2);
    let (v, nv, m, vp, nvp) = (0, 1, 2, 3, 4);
    let mut b = Edges::new(5);
    b.e.extend([(v, m), (nv, m), (v, vp), (nv, nvp)]);
    for _ in 0..k - 1 {
        let h = b.fresh();
        b.e.extend([(vp, h), (nvp, h)]);
        b.pendants(h, k - 1);
    }
    GadgetSpec::new(b.graph(), names(&[("v", v), ("nv", nv)]), GadgetProperty::IffD1D2(v, nv))
}

/// Clause gadget at (1,k), `k >= 3`: each port has a private neighbour
/// adjacent to a hub of degree `k + 1`, which also carries `k - 3`
/// further vertices of degree `k + 1`.
pub fn clause_1k(k: usize) -> GadgetSpec {
    assert!(k >= 3);
    let hub = 6;
    let mut b = Edges::new(7);
    for p in 0..3 {
        b.e.extend([(p, p + 3), (p + 3, hub)]);
    }
    b.pendants(hub, 1);
    for _ in 0..k - 3 {
        let c = b.fresh();
        b.e.push((hub, c));
        b.pendants(c, k);
    }
    GadgetSpec::new(b.graph(), names(&[("x", 0), ("y", 1), ("z", 2)]), GadgetProperty::AtLeastOneD2(vec![0, 1, 2]))
}

/// Variable gadget at (2,1): a 5-cycle `v w nv a b` where `w`, `a`, `b`
/// each reach a forced vertex in two steps.
pub fn var_21() -> GadgetSpec {
    let (v, w, nv, a, bb) = (0, 1, 2, 3, 4);
    let mut b = Edges::new(5);
    b.e.extend([(v, w), (w, nv), (nv, a), (a, bb), (bb, v)]);
    let fan = gen_friendship(1).expect("k = 1 is valid").gadget;
    let base = b.n;
    b.n += fan.n();
    b.e.extend(fan.edges().map(|(x, y)| (base + x, base + y)));
    for x in [w, a, bb] {
        let y = b.fresh();
        b.e.extend([(x, y), (y, base)]);
    }
    GadgetSpec::new(b.graph(), names(&[("v", v), ("nv", nv)]), GadgetProperty::IffD1D2(v, nv))
}

/// Clause gadget at (2,1): a 9-cycle with ports at positions 0, 3, 6; every
/// other cycle vertex reaches a forced vertex in two steps.
pub fn clause_21() -> GadgetSpec {
    let mut b = Edges::new(9);
    b.e.extend((0..9).map(|i| (i, (i + 1) % 9)));
    let fan = gen_friendship(1).expect("k = 1 is valid").gadget;
    let base = b.n;
    b.n += fan.n();
    b.e.extend(fan.edges().map(|(x, y)| (base + x, base + y)));
    for x in (0..9).filter(|i| i % 3 != 0) {
        let y = b.fresh();
        b.e.extend([(x, y), (y, base)]);
    }
    GadgetSpec::new(b.graph(), names(&[("x", 0), ("y", 3), ("z", 6)]), GadgetProperty::AtLeastOneD2(vec![0, 3, 6]))
}

/// Gadget set for (1,k), `k >= 3`.
pub fn sat_1k(k: usize) -> SatGadgets {
    SatGadgets { var: var_1k(k), clause: clause_1k(k), filler: None }
}

/// Gadget set for (2,1) with the friendship filler.
pub fn sat_21() -> SatGadgets {
    SatGadgets { var: var_21(), clause: clause_21(), filler: Some(gen_friendship(1).expect("k = 1 is valid")) }
}
