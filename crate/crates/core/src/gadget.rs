//! Universal statements about all colourings of a gadget, checked by
//! searching for a counterexample.

use std::collections::BTreeSet;

use crate::coloring::{Color, MixedColoring, Params};
use crate::graph::{Graph, Vertex};
use crate::solver::{decide_with, search, Budget, Domains, SearchEnd, Status};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetProperty {
    /// The port takes a distance-2 colour in every colouring.
    ForcedD2(Vertex),
    /// The port takes a distance-1 colour in every colouring.
    ForcedD1(Vertex),
    /// First port is distance-1 exactly when the second is distance-2.
    IffD1D2(Vertex, Vertex),
    /// Some port takes a distance-2 colour.
    AtLeastOneD2(Vec<Vertex>),
    /// All ports share one distance-1 colour, or all but one do and the
    /// remaining port is distance-2.
    CornerPattern(Vec<Vertex>),
}

impl GadgetProperty {
    pub fn ports(&self) -> Vec<Vertex> {
        match self {
            GadgetProperty::ForcedD2(p) | GadgetProperty::ForcedD1(p) => vec![*p],
            GadgetProperty::IffD1D2(p, q) => vec![*p, *q],
            GadgetProperty::AtLeastOneD2(ps) | GadgetProperty::CornerPattern(ps) => ps.clone(),
        }
    }

    /// Whether one total colouring satisfies the property.
    pub fn holds_for(&self, c: &[Color]) -> bool {
        match self {
            GadgetProperty::ForcedD2(p) => c[*p].is_d2(),
            GadgetProperty::ForcedD1(p) => c[*p].is_d1(),
            GadgetProperty::IffD1D2(p, q) => c[*p].is_d1() == c[*q].is_d2(),
            GadgetProperty::AtLeastOneD2(ps) => ps.iter().any(|&p| c[p].is_d2()),
            GadgetProperty::CornerPattern(ps) => {
                let d2 = ps.iter().filter(|&&p| c[p].is_d2()).count();
                let d1: BTreeSet<Color> = ps.iter().map(|&p| c[p]).filter(|x| x.is_d1()).collect();
                d2 <= 1 && d1.len() == 1
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetSpec {
    pub gadget: Graph,
    pub ports: Vec<(String, Vertex)>,
    pub property: GadgetProperty,
}

impl GadgetSpec {
    pub fn new(gadget: Graph, ports: Vec<(String, Vertex)>, property: GadgetProperty) -> Self {
        let spec = GadgetSpec { gadget, ports, property };
        spec.validate().expect("invalid gadget spec");
        spec
    }

    pub fn validate(&self) -> Result<(), String> {
        let mut seen = BTreeSet::new();
        for (name, v) in &self.ports {
            if *v >= self.gadget.n() {
                return Err(format!("port {name} out of range"));
            }
            if !seen.insert(*v) {
                return Err(format!("port {name} repeats a vertex"));
            }
        }
        for v in self.property.ports() {
            if v >= self.gadget.n() {
                return Err(format!("property refers to vertex {v} outside the gadget"));
            }
        }
        Ok(())
    }

    pub fn port(&self, name: &str) -> Option<Vertex> {
        self.ports.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetVerdict {
    Holds,
    FailsWithWitness(MixedColoring),
    Unknown,
}

/// Searches for a colouring violating the property. Whether the gadget is
/// colourable at all is a separate question for [`crate::solver::decide`].
pub fn check_gadget(spec: &GadgetSpec, p: Params, budget: Budget) -> GadgetVerdict {
    let g = &spec.gadget;
    let full = Domains::full(g.n(), p);
    let mut runs: Vec<Domains> = Vec::new();
    match &spec.property {
        GadgetProperty::ForcedD2(v) => {
            let mut d = full.clone();
            d.only_d1(*v);
            runs.push(d);
        }
        GadgetProperty::ForcedD1(v) => {
            let mut d = full.clone();
            d.only_d2(*v);
            runs.push(d);
        }
        GadgetProperty::IffD1D2(x, y) => {
            let mut both_d1 = full.clone();
            both_d1.only_d1(*x).only_d1(*y);
            let mut both_d2 = full.clone();
            both_d2.only_d2(*x).only_d2(*y);
            runs.push(both_d1);
            runs.push(both_d2);
        }
        GadgetProperty::AtLeastOneD2(ps) => {
            let mut d = full.clone();
            for &v in ps {
                d.only_d1(v);
            }
            runs.push(d);
        }
        GadgetProperty::CornerPattern(_) => runs.push(full),
    }
    let mut unknown = false;
    let corner = matches!(spec.property, GadgetProperty::CornerPattern(_));
    for d in runs {
        if !corner {
            // Every colouring of the restricted domains is a counterexample.
            let out = decide_with(g, &d, budget);
            match out.status {
                Status::Colorable => return GadgetVerdict::FailsWithWitness(out.witness.unwrap()),
                Status::Unknown => unknown = true,
                Status::NotColorable => {}
            }
            continue;
        }
        let mut witness = None;
        let (end, _) = search(g, &d, budget, true, |c| {
            if spec.property.holds_for(c) {
                true
            } else {
                witness = Some(MixedColoring::from_colors(c.to_vec()));
                false
            }
        });
        match end {
            SearchEnd::Stopped => return GadgetVerdict::FailsWithWitness(witness.unwrap()),
            SearchEnd::BudgetHit => unknown = true,
            SearchEnd::Exhausted => {}
        }
    }
    if unknown { GadgetVerdict::Unknown } else { GadgetVerdict::Holds }
}

/// Ways a colouring of `G - v` can fail to extend to the degree-2 vertex `v`
/// with neighbours `v1`, `v2`, at parameters (2,k).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ObstructionProfile {
    /// `v1` and `v2` can share a distance-2 class.
    pub has_bc: bool,
    /// `(S1, S2)` as class bitmasks: `v1`, `v2` carry distinct distance-1
    /// classes, `S1`/`S2` are the distance-2 classes on their
    /// neighbourhoods and together they use all `k`. Closed under
    /// permutations of the distance-2 classes; ordered as (`v1`, `v2`).
    pub pairs: BTreeSet<(u64, u64)>,
    /// Every colouring of `G - v` is blocked, i.e. `G` is not (2,k)-colourable.
    pub all_obstructed: bool,
    /// Number of colourings enumerated (up to class symmetry).
    pub colorings: usize,
}

impl ObstructionProfile {
    pub fn is_empty(&self) -> bool {
        !self.has_bc && self.pairs.is_empty()
    }
}

pub fn set_from_mask(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Enumerates all (2,k)-colourings of `g_minus_v`; `None` on budget.
pub fn obstruction_profile(
    g_minus_v: &Graph,
    v1: Vertex,
    v2: Vertex,
    k: usize,
    budget: Budget,
) -> Option<ObstructionProfile> {
    assert!(k <= 16, "profile closure is exponential in k");
    assert!(v1 != v2 && v1 < g_minus_v.n() && v2 < g_minus_v.n());
    let p = Params::new(2, k);
    let d2_of = |c: &[Color], v: Vertex| -> u64 {
        g_minus_v.neighbors(v).iter().fold(0, |m, &w| match c[w] {
            Color::D2(j) => m | 1 << j,
            Color::D1(_) => m,
        })
    };
    let full: u64 = (1u64 << k) - 1;
    let mut prof = ObstructionProfile { all_obstructed: true, ..Default::default() };
    // (|S1 \ S2|, |S2 \ S1|) determines the orbit once |S1 ∪ S2| = k.
    let mut shapes = BTreeSet::new();
    let (end, _) = search(g_minus_v, &crate::solver::Domains::full(g_minus_v.n(), p), budget, true, |c| {
        prof.colorings += 1;
        let mut blocked = false;
        match (c[v1], c[v2]) {
            (Color::D2(x), Color::D2(y)) if x == y => {
                prof.has_bc = true;
                blocked = true;
            }
            (Color::D1(x), Color::D1(y)) if x != y => {
                let (s1, s2) = (d2_of(c, v1), d2_of(c, v2));
                if s1 | s2 == full {
                    shapes.insert(((s1 & !s2).count_ones(), (s2 & !s1).count_ones()));
                    blocked = true;
                }
            }
            _ => {}
        }
        prof.all_obstructed &= blocked;
        true
    });
    if end == SearchEnd::BudgetHit {
        return None;
    }
    for s1 in 0..=full {
        for s2 in 0..=full {
            if s1 | s2 == full && shapes.contains(&((s1 & !s2).count_ones(), (s2 & !s1).count_ones())) {
                prof.pairs.insert((s1, s2));
            }
        }
    }
    Some(prof)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge(prop: GadgetProperty) -> GadgetSpec {
        GadgetSpec::new(Graph::path(2), vec![("u".into(), 0), ("w".into(), 1)], prop)
    }

    #[test]
    fn edge_port_is_not_forced_d2() {
        match check_gadget(&single_edge(GadgetProperty::ForcedD2(0)), Params::new(1, 1), Budget::default()) {
            GadgetVerdict::FailsWithWitness(c) => assert!(c.get(0).unwrap().is_d1()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn triangle_at_one_one_has_no_colouring_so_everything_holds() {
        let spec = GadgetSpec::new(Graph::complete(3), vec![("a".into(), 0)], GadgetProperty::ForcedD1(0));
        assert_eq!(check_gadget(&spec, Params::new(1, 1), Budget::default()), GadgetVerdict::Holds);
    }

    #[test]
    fn edge_at_one_one_is_iff() {
        let spec = single_edge(GadgetProperty::IffD1D2(0, 1));
        assert_eq!(check_gadget(&spec, Params::new(1, 1), Budget::default()), GadgetVerdict::Holds);
    }

    #[test]
    fn corner_pattern_predicate() {
        let prop = GadgetProperty::CornerPattern(vec![0, 1, 2, 3]);
        use Color::*;
        assert!(prop.holds_for(&[D1(1), D1(1), D1(1), D1(1)]));
        assert!(prop.holds_for(&[D1(0), D2(0), D1(0), D1(0)]));
        assert!(!prop.holds_for(&[D1(0), D1(1), D1(0), D1(0)]));
        assert!(!prop.holds_for(&[D2(0), D2(1), D1(0), D1(0)]));
    }

    #[test]
    fn profile_isolated_pair_has_bc() {
        let prof = obstruction_profile(&Graph::empty(2), 0, 1, 1, Budget::default()).unwrap();
        assert!(prof.has_bc);
        assert!(!prof.all_obstructed);
    }

    #[test]
    fn profile_edge_excludes_bc() {
        let prof = obstruction_profile(&Graph::path(2), 0, 1, 1, Budget::default()).unwrap();
        assert!(!prof.has_bc);
    }

    #[test]
    fn profile_pairs_are_closed_under_class_permutation() {
        // v1 = 0 with pendant 2, v2 = 1 with pendant 3.
        let g = Graph::from_edges(4, &[(0, 2), (1, 3)]);
        let prof = obstruction_profile(&g, 0, 1, 2, Budget::default()).unwrap();
        assert!(prof.pairs.contains(&(0b01, 0b10)));
        assert!(prof.pairs.contains(&(0b10, 0b01)));
        assert!(!prof.all_obstructed);
    }
}
