//! Exact backtracking search for (a,b)-colourings.
//!
//! Domains are bitmasks over tagged colours: bit `i` is `D1(i)` for
//! `i < a`, bit `a + j` is `D2(j)`. Assigning `D1(i)` removes it from the
//! neighbours, assigning `D2(j)` removes it from the square-neighbours;
//! singleton domains are assigned immediately. The branching vertex is the
//! one with the fewest admissible colours, ties broken by a fixed order
//! (square degree descending, then id). Classes of one tag that are unused
//! and indistinguishable by the initial domains are interchangeable, so
//! only the lowest such class is tried. Decision queries also split the
//! unassigned vertices into components of the square and solve each on its
//! own.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::coloring::{Color, MixedColoring, Params};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_MAX_NODES: u64 = 10_000_000;
pub const MAX_COLORS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        assert!(max_nodes > 0, "budget must be positive");
        Budget { max_nodes, time_limit: None }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(DEFAULT_MAX_NODES)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Colorable,
    NotColorable,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: Status,
    pub witness: Option<MixedColoring>,
    pub nodes_explored: u64,
}

impl SolveOutcome {
    pub fn is_colorable(&self) -> bool {
        self.status == Status::Colorable
    }
}

/// Bit of a tagged colour inside a domain mask.
pub fn color_bit(p: Params, c: Color) -> u64 {
    match c {
        Color::D1(i) => {
            assert!(i < p.a);
            1 << i
        }
        Color::D2(j) => {
            assert!(j < p.b);
            1 << (p.a + j)
        }
    }
}

fn bit_color(p: Params, bit: usize) -> Color {
    if bit < p.a {
        Color::D1(bit)
    } else {
        Color::D2(bit - p.a)
    }
}

/// Admissible colours per vertex; the starting point of every search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domains {
    params: Params,
    masks: Vec<u64>,
}

impl Domains {
    pub fn full(n: usize, p: Params) -> Self {
        assert!(p.a + p.b <= MAX_COLORS, "at most {MAX_COLORS} classes supported");
        Domains { params: p, masks: vec![Self::all_mask(p); n] }
    }

    fn all_mask(p: Params) -> u64 {
        let k = p.a + p.b;
        if k == 64 { u64::MAX } else { (1u64 << k) - 1 }
    }

    pub fn d1_mask(&self) -> u64 {
        (1u64 << self.params.a) - 1
    }

    pub fn d2_mask(&self) -> u64 {
        Self::all_mask(self.params) & !self.d1_mask()
    }

    /// Domains fixing every coloured vertex of a partial colouring.
    pub fn from_precoloring(p: Params, pre: &MixedColoring) -> Self {
        let mut d = Domains::full(pre.len(), p);
        for v in 0..pre.len() {
            if let Some(c) = pre.get(v) {
                d.fix(v, c);
            }
        }
        d
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn mask(&self, v: Vertex) -> u64 {
        self.masks[v]
    }

    pub fn fix(&mut self, v: Vertex, c: Color) -> &mut Self {
        self.masks[v] &= color_bit(self.params, c);
        self
    }

    pub fn forbid(&mut self, v: Vertex, c: Color) -> &mut Self {
        self.masks[v] &= !color_bit(self.params, c);
        self
    }

    pub fn only_d1(&mut self, v: Vertex) -> &mut Self {
        self.masks[v] &= self.d1_mask();
        self
    }

    pub fn only_d2(&mut self, v: Vertex) -> &mut Self {
        self.masks[v] &= self.d2_mask();
        self
    }
}

/// How a search ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchEnd {
    /// Every branch was explored.
    Exhausted,
    /// The solution callback asked to stop.
    Stopped,
    /// Node or time budget ran out.
    BudgetHit,
}

/// Low-level search: calls `on_solution` for every colouring found (one per
/// symmetry class when `symmetry_breaking` is set); the callback returns
/// `true` to keep searching.
pub fn search<F>(
    g: &Graph,
    domains: &Domains,
    budget: Budget,
    symmetry_breaking: bool,
    mut on_solution: F,
) -> (SearchEnd, u64)
where
    F: FnMut(&[Color]) -> bool,
{
    assert_eq!(domains.len(), g.n(), "domain count must match vertex count");
    let mut engine = Engine::new(g, domains, symmetry_breaking);
    let end = engine.run(budget, &mut on_solution);
    (end, engine.nodes)
}

/// Decides (a,b)-colourability within the budget.
pub fn decide(g: &Graph, p: Params, budget: Budget) -> SolveOutcome {
    decide_with(g, &Domains::full(g.n(), p), budget)
}

/// Decides with restricted domains (precoloured or tag-restricted vertices).
pub fn decide_with(g: &Graph, domains: &Domains, budget: Budget) -> SolveOutcome {
    assert_eq!(domains.len(), g.n(), "domain count must match vertex count");
    let p = domains.params();
    let mut engine = Engine::new(g, domains, true);
    let status = if engine.failed_root {
        Status::NotColorable
    } else {
        let all: Vec<Vertex> = (0..g.n()).collect();
        match engine.decide_part(&all, budget, Instant::now()) {
            Some(true) => Status::Colorable,
            Some(false) => Status::NotColorable,
            None => Status::Unknown,
        }
    };
    let witness = (status == Status::Colorable).then(|| MixedColoring::from_colors(engine.solution()));
    debug_assert!(witness.as_ref().is_none_or(|w| crate::coloring::verify(g, p, w).unwrap().is_empty()));
    SolveOutcome { status, witness, nodes_explored: engine.nodes }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    /// More than `cap` colourings exist (the first `cap` are returned).
    CapExceeded(Vec<MixedColoring>),
    /// The node budget ran out before enumeration finished.
    BudgetHit(Vec<MixedColoring>),
}

/// All valid colourings up to permutation of classes within each tag.
pub fn enumerate(
    g: &Graph,
    p: Params,
    cap: usize,
    budget: Budget,
) -> Result<Vec<MixedColoring>, EnumerateError> {
    enumerate_with(g, &Domains::full(g.n(), p), cap, budget)
}

pub fn enumerate_with(
    g: &Graph,
    domains: &Domains,
    cap: usize,
    budget: Budget,
) -> Result<Vec<MixedColoring>, EnumerateError> {
    let mut out = Vec::new();
    let mut overflow = false;
    let (end, _) = search(g, domains, budget, true, |cols| {
        if out.len() == cap {
            overflow = true;
            return false;
        }
        out.push(MixedColoring::from_colors(cols.to_vec()));
        true
    });
    match end {
        _ if overflow => Err(EnumerateError::CapExceeded(out)),
        SearchEnd::BudgetHit => Err(EnumerateError::BudgetHit(out)),
        _ => Ok(out),
    }
}

struct Engine<'a> {
    g: &'a Graph,
    sq: Graph,
    p: Params,
    rank: Vec<usize>,
    dom: Vec<u64>,
    assigned: Vec<Option<u8>>,
    used: Vec<u32>,
    /// Symmetry group of each class bit (`usize::MAX` = not interchangeable).
    group: Vec<usize>,
    symmetry: bool,
    trail: Vec<(Vertex, u64)>,
    order: Vec<Vertex>,
    queue: Vec<Vertex>,
    nodes: u64,
    n_assigned: usize,
    failed_root: bool,
}

struct Frame {
    v: Vertex,
    candidates: u64,
    trail_mark: usize,
    order_mark: usize,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, domains: &Domains, symmetry: bool) -> Self {
        let p = domains.params();
        let n = g.n();
        let sq = g.square();
        let mut by_rank: Vec<Vertex> = (0..n).collect();
        by_rank.sort_by_key(|&v| (std::cmp::Reverse(sq.degree(v)), v));
        let mut rank = vec![0; n];
        for (r, &v) in by_rank.iter().enumerate() {
            rank[v] = r;
        }
        let k = p.a + p.b;
        // Classes of one tag with identical columns in the initial domains are
        // interchangeable.
        let mut group = vec![usize::MAX; k];
        let mut sigs: HashMap<(bool, Vec<bool>), usize> = HashMap::new();
        for bit in 0..k {
            let col: Vec<bool> = domains.masks.iter().map(|m| m >> bit & 1 == 1).collect();
            let next = sigs.len();
            group[bit] = *sigs.entry((bit < p.a, col)).or_insert(next);
        }
        let mut e = Engine {
            g,
            sq,
            p,
            rank,
            dom: domains.masks.clone(),
            assigned: vec![None; n],
            used: vec![0; k],
            group,
            symmetry,
            trail: Vec::new(),
            order: Vec::new(),
            queue: Vec::new(),
            nodes: 0,
            n_assigned: 0,
            failed_root: false,
        };
        if e.dom.contains(&0) {
            e.failed_root = true;
        } else {
            e.queue = (0..n).filter(|&v| e.dom[v].count_ones() == 1).collect();
            if !e.propagate() {
                e.failed_root = true;
            }
        }
        // Root-level assignments are permanent.
        e.trail.clear();
        e.order.clear();
        e
    }

    fn set_dom(&mut self, v: Vertex, mask: u64) {
        self.trail.push((v, self.dom[v]));
        self.dom[v] = mask;
    }

    /// Assigns `v` the colour `bit` and prunes neighbours. Returns false on wipe-out.
    fn assign(&mut self, v: Vertex, bit: usize) -> bool {
        debug_assert!(self.assigned[v].is_none());
        debug_assert!(self.dom[v] >> bit & 1 == 1);
        self.assigned[v] = Some(bit as u8);
        self.used[bit] += 1;
        self.n_assigned += 1;
        self.order.push(v);
        if self.dom[v] != 1 << bit {
            self.set_dom(v, 1 << bit);
        }
        let remove = 1u64 << bit;
        let ns: &[Vertex] = if bit < self.p.a { self.g.neighbors(v) } else { self.sq.neighbors(v) };
        // Borrow dance: neighbours live in self.g / self.sq which are not mutated.
        let ns: Vec<Vertex> = ns.to_vec();
        for w in ns {
            let m = self.dom[w];
            if m & remove != 0 {
                let nm = m & !remove;
                if nm == 0 {
                    return false;
                }
                self.set_dom(w, nm);
                if nm.count_ones() == 1 && self.assigned[w].is_none() {
                    self.queue.push(w);
                }
            }
        }
        true
    }

    fn propagate(&mut self) -> bool {
        while let Some(w) = self.queue.pop() {
            if self.assigned[w].is_some() {
                continue;
            }
            let bit = self.dom[w].trailing_zeros() as usize;
            if !self.assign(w, bit) {
                self.queue.clear();
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, trail_mark: usize, order_mark: usize) {
        while self.trail.len() > trail_mark {
            let (v, m) = self.trail.pop().unwrap();
            self.dom[v] = m;
        }
        while self.order.len() > order_mark {
            let v = self.order.pop().unwrap();
            let bit = self.assigned[v].take().unwrap() as usize;
            self.used[bit] -= 1;
            self.n_assigned -= 1;
        }
        self.queue.clear();
    }

    fn pick_vertex(&self) -> Option<Vertex> {
        let mut best: Option<(u32, usize, Vertex)> = None;
        for v in 0..self.g.n() {
            if self.assigned[v].is_some() {
                continue;
            }
            let key = (self.dom[v].count_ones(), self.rank[v], v);
            if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                best = Some(key);
            }
        }
        best.map(|b| b.2)
    }

    fn candidates(&self, v: Vertex) -> u64 {
        let mut mask = self.dom[v];
        if !self.symmetry {
            return mask;
        }
        let mut seen_groups: Vec<usize> = Vec::new();
        let mut m = mask;
        while m != 0 {
            let bit = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.used[bit] == 0 {
                let grp = self.group[bit];
                if seen_groups.contains(&grp) {
                    mask &= !(1 << bit);
                } else {
                    seen_groups.push(grp);
                }
            }
        }
        mask
    }

    fn solution(&self) -> Vec<Color> {
        self.assigned.iter().map(|b| bit_color(self.p, b.unwrap() as usize)).collect()
    }

    /// Unassigned vertices of `part`, split into components of the square.
    fn split(&self, part: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut inside = vec![false; self.g.n()];
        for &v in part {
            inside[v] = self.assigned[v].is_none();
        }
        let mut out = Vec::new();
        for &s in part {
            if !inside[s] {
                continue;
            }
            inside[s] = false;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in self.sq.neighbors(comp[i]) {
                    if inside[w] {
                        inside[w] = false;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            out.push(comp);
        }
        out.sort_by_key(Vec::len);
        out
    }

    /// Whether the unassigned vertices of `part` extend the current state;
    /// `None` on budget. Parts that share no square edge are solved one
    /// after another without backtracking between them. On `Some(true)` the
    /// assignment is left in place.
    fn decide_part(&mut self, part: &[Vertex], budget: Budget, start: Instant) -> Option<bool> {
        let comps = self.split(part);
        if comps.len() > 1 {
            for c in &comps {
                if !self.decide_part(c, budget, start)? {
                    return Some(false);
                }
            }
            return Some(true);
        }
        let Some(rest) = comps.into_iter().next() else { return Some(true) };
        let v = *rest
            .iter()
            .min_by_key(|&&v| (self.dom[v].count_ones(), self.rank[v]))
            .expect("component is non-empty");
        let mut cands = self.candidates(v);
        let (tm, om) = (self.trail.len(), self.order.len());
        while cands != 0 {
            let bit = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            self.nodes += 1;
            if self.nodes > budget.max_nodes {
                return None;
            }
            if let Some(limit) = budget.time_limit {
                if self.nodes.is_multiple_of(4096) && start.elapsed() > limit {
                    return None;
                }
            }
            if self.assign(v, bit) && self.propagate() && self.decide_part(&rest, budget, start)? {
                return Some(true);
            }
            self.undo_to(tm, om);
        }
        Some(false)
    }

    fn run<F: FnMut(&[Color]) -> bool>(&mut self, budget: Budget, on_solution: &mut F) -> SearchEnd {
        if self.failed_root {
            return SearchEnd::Exhausted;
        }
        let start = Instant::now();
        let mut stack: Vec<Frame> = Vec::new();
        // `descend` = the current state is consistent; pick the next vertex.
        let mut descend = true;
        loop {
            if descend {
                if self.n_assigned == self.g.n() {
                    let sol = self.solution();
                    if !on_solution(&sol) {
                        return SearchEnd::Stopped;
                    }
                } else {
                    let v = self.pick_vertex().unwrap();
                    stack.push(Frame {
                        v,
                        candidates: self.candidates(v),
                        trail_mark: self.trail.len(),
                        order_mark: self.order.len(),
                    });
                }
            }
            // Try the next candidate of the top frame.
            let Some(top) = stack.last_mut() else { return SearchEnd::Exhausted };
            let (v, tm, om) = (top.v, top.trail_mark, top.order_mark);
            if top.candidates == 0 {
                stack.pop();
                self.undo_to(tm, om);
                descend = false;
                continue;
            }
            let bit = top.candidates.trailing_zeros() as usize;
            top.candidates &= top.candidates - 1;
            self.undo_to(tm, om);
            self.nodes += 1;
            if self.nodes > budget.max_nodes {
                return SearchEnd::BudgetHit;
            }
            if let Some(limit) = budget.time_limit {
                if self.nodes.is_multiple_of(4096) && start.elapsed() > limit {
                    return SearchEnd::BudgetHit;
                }
            }
            descend = self.assign(v, bit) && self.propagate();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify;

    fn status(g: &Graph, a: usize, b: usize) -> Status {
        decide(g, Params::new(a, b), Budget::default()).status
    }

    #[test]
    fn k4_examples() {
        assert_eq!(status(&Graph::complete(4), 3, 0), Status::NotColorable);
        assert_eq!(status(&Graph::complete(4), 3, 1), Status::Colorable);
    }

    #[test]
    fn cycles_with_three_d2_classes() {
        assert_eq!(status(&Graph::cycle(6), 0, 3), Status::Colorable);
        assert_eq!(status(&Graph::cycle(7), 0, 3), Status::NotColorable);
        assert_eq!(status(&Graph::cycle(9), 0, 3), Status::Colorable);
    }

    #[test]
    fn witness_verifies() {
        let g = Graph::cycle(5);
        let out = decide(&g, Params::new(1, 3), Budget::default());
        assert_eq!(out.status, Status::Colorable);
        assert!(verify(&g, Params::new(1, 3), &out.witness.unwrap()).unwrap().is_empty());
        assert_eq!(status(&g, 1, 2), Status::NotColorable);
    }

    #[test]
    fn budget_hit_is_unknown() {
        let g = Graph::complete(9);
        let out = decide(&g, Params::new(8, 0), Budget::nodes(5));
        assert_eq!(out.status, Status::Unknown);
        assert!(out.witness.is_none());
    }

    #[test]
    fn empty_graph_and_zero_params() {
        assert_eq!(status(&Graph::empty(0), 0, 0), Status::Colorable);
        assert_eq!(status(&Graph::empty(1), 0, 0), Status::NotColorable);
    }

    #[test]
    fn enumerate_examples() {
        let b = Budget::default();
        assert_eq!(enumerate(&Graph::complete(2), Params::new(1, 1), 100, b).unwrap().len(), 2);
        assert_eq!(enumerate(&Graph::complete(1), Params::new(1, 0), 100, b).unwrap().len(), 1);
        assert_eq!(enumerate(&Graph::complete(3), Params::new(1, 1), 100, b).unwrap().len(), 0);
        match enumerate(&Graph::empty(4), Params::new(2, 0), 3, b) {
            Err(EnumerateError::CapExceeded(v)) => assert_eq!(v.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fixed_and_forbidden_domains() {
        let g = Graph::path(10);
        let p = Params::new(1, 2);
        let mut d = Domains::full(10, p);
        d.fix(0, Color::D2(0)).fix(9, Color::D2(0)).fix(1, Color::D1(0)).fix(8, Color::D1(0));
        assert_eq!(decide_with(&g, &d, Budget::default()).status, Status::NotColorable);
        // Different endpoint classes can be extended.
        let mut d = Domains::full(10, p);
        d.fix(0, Color::D2(0)).fix(9, Color::D2(1)).fix(1, Color::D1(0)).fix(8, Color::D1(0));
        let out = decide_with(&g, &d, Budget::default());
        assert_eq!(out.status, Status::Colorable);
        let w = out.witness.unwrap();
        assert_eq!(w.get(9), Some(Color::D2(1)));
    }

    #[test]
    fn contradictory_precoloring() {
        let g = Graph::path(2);
        let mut d = Domains::full(2, Params::new(1, 1));
        d.fix(0, Color::D1(0)).fix(1, Color::D1(0));
        assert_eq!(decide_with(&g, &d, Budget::default()).status, Status::NotColorable);
    }
}
