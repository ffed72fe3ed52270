//! Compilers from 3-colouring, defective 2-colouring and restricted 3-SAT
//! to (a,b)-colouring instances, with forward witness builders.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::coloring::{verify, Color, MixedColoring, Params};
use crate::gadget::{check_gadget, GadgetProperty, GadgetSpec, GadgetVerdict};
use crate::graph::{Graph, Vertex};
use crate::solver::{decide, Budget, Status};

pub mod candidates;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct DimacsError {
    pub line: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub vars: usize,
    /// Signed 1-based literals; duplicates removed, first occurrence kept.
    pub clauses: Vec<Vec<i32>>,
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula, DimacsError> {
    let err = |line: usize, msg: String| DimacsError { line, msg };
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut cur: Vec<i32> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        if t.starts_with('%') {
            break;
        }
        last_line = line;
        if t.starts_with('p') {
            if header.is_some() {
                return Err(err(line, "second header".into()));
            }
            let f: Vec<&str> = t.split_whitespace().collect();
            if f.len() != 4 || f[0] != "p" || f[1] != "cnf" {
                return Err(err(line, "expected `p cnf <vars> <clauses>`".into()));
            }
            let vars = f[2].parse().map_err(|_| err(line, format!("bad variable count `{}`", f[2])))?;
            let count = f[3].parse().map_err(|_| err(line, format!("bad clause count `{}`", f[3])))?;
            header = Some((vars, count, line));
            continue;
        }
        let (vars, _, _) = header.ok_or_else(|| err(line, "clause before header".into()))?;
        for tok in t.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| err(line, format!("bad literal `{tok}`")))?;
            if lit == 0 {
                if cur.is_empty() {
                    return Err(err(line, "empty clause".into()));
                }
                clauses.push(std::mem::take(&mut cur));
                continue;
            }
            if lit.unsigned_abs() as usize > vars {
                return Err(err(line, format!("variable {} exceeds declared {vars}", lit.abs())));
            }
            let lit = lit as i32;
            if !cur.contains(&lit) {
                cur.push(lit);
            }
        }
    }
    let (vars, count, hline) = header.ok_or_else(|| err(last_line.max(1), "missing header".into()))?;
    if !cur.is_empty() {
        return Err(err(last_line, "unterminated clause".into()));
    }
    if clauses.len() != count {
        return Err(err(hline, format!("header declares {count} clauses, found {}", clauses.len())));
    }
    Ok(CnfFormula { vars, clauses })
}

impl CnfFormula {
    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                s.push_str(&format!("{l} "));
            }
            s.push_str("0\n");
        }
        s
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    }

    /// Exhaustive search; intended for small formulas.
    pub fn solve_brute_force(&self) -> Option<Vec<bool>> {
        assert!(self.vars <= 24, "brute force limited to 24 variables");
        (0u32..1 << self.vars)
            .map(|m| (0..self.vars).map(|i| m >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.satisfied_by(a))
    }

    pub fn restricted_check(&self) -> RestrictedSatCheck {
        let mut positive = vec![0; self.vars];
        let mut negative = vec![0; self.vars];
        for c in &self.clauses {
            for &l in c {
                let x = l.unsigned_abs() as usize - 1;
                if l > 0 { positive[x] += 1 } else { negative[x] += 1 }
            }
        }
        let clause_sizes: Vec<usize> = self.clauses.iter().map(Vec::len).collect();
        let sizes_ok = clause_sizes.iter().all(|&s| s == 2 || s == 3);
        let occurrences_ok = positive.iter().zip(&negative).all(|(&p, &n)| p == 2 && n == 1);
        RestrictedSatCheck { positive, negative, clause_sizes, sizes_ok, occurrences_ok }
    }
}

/// Clause sizes in {2,3}; every variable twice positive and once negative.
/// Planarity of the incidence graph is taken on trust.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedSatCheck {
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
    pub clause_sizes: Vec<usize>,
    pub sizes_ok: bool,
    pub occurrences_ok: bool,
}

impl RestrictedSatCheck {
    pub fn passes(&self) -> bool {
        self.sizes_ok && self.occurrences_ok
    }

    pub fn first_failure(&self) -> Option<String> {
        if let Some(i) = self.clause_sizes.iter().position(|&s| s != 2 && s != 3) {
            return Some(format!("clause {} has size {}", i + 1, self.clause_sizes[i]));
        }
        (0..self.positive.len()).find(|&x| self.positive[x] != 2 || self.negative[x] != 1).map(|x| {
            format!("variable {} occurs {}x positively and {}x negatively", x + 1, self.positive[x], self.negative[x])
        })
    }
}

/// What an output vertex stands for.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Source {
    Vertex(Vertex),
    /// `i`-th vertex of the path representing source vertex `v`.
    Path { v: Vertex, i: usize },
    Pendant { v: Vertex, i: usize, j: usize },
    /// Interior vertex `i` of connector `link` of source edge `u v`.
    Connector { u: Vertex, v: Vertex, link: usize, i: usize },
    Var { x: usize, local: Vertex },
    Clause { c: usize, local: Vertex },
    Filler { c: usize, local: Vertex },
    Attached { v: Vertex, local: Vertex },
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Vertex(v) => write!(f, "vertex {v}"),
            Source::Path { v, i } => write!(f, "path {v} {i}"),
            Source::Pendant { v, i, j } => write!(f, "pendant {v} {i} {j}"),
            Source::Connector { u, v, link, i } => write!(f, "connector {u}-{v} {link} {i}"),
            Source::Var { x, local } => write!(f, "var {} {local}", x + 1),
            Source::Clause { c, local } => write!(f, "clause {} {local}", c + 1),
            Source::Filler { c, local } => write!(f, "filler {} {local}", c + 1),
            Source::Attached { v, local } => write!(f, "gadget {v} {local}"),
        }
    }
}

/// Source edge `u v` attached at slot `i` of `u` and slot `j` of `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub u: Vertex,
    pub v: Vertex,
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub params: Params,
    pub provenance: Vec<Source>,
    /// Source graph, for graph-to-graph reductions.
    pub source: Option<Graph>,
    pub g0: usize,
    pub slots: Vec<Slot>,
    /// `paths[v][i]` is the output vertex of `v_i`.
    pub paths: Vec<Vec<Vertex>>,
    pub notes: Vec<String>,
}

impl ReductionOutput {
    /// Lines `c map <out-vertex> <source-entity>`, vertices 1-based as in
    /// graph files.
    pub fn sidecar(&self) -> String {
        let mut s = String::new();
        for note in &self.notes {
            s.push_str(&format!("c note {note}\n"));
        }
        for (v, src) in self.provenance.iter().enumerate() {
            s.push_str(&format!("c map {} {src}\n", v + 1));
        }
        s
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("source vertex {0} has degree above 4")]
    SlotExhausted(Vertex),
    #[error("formula is not a restricted instance: {0}")]
    NotRestricted(String),
    #[error("{role} gadget rejected: {property}")]
    GadgetRejected { role: String, property: String },
    #[error("{role} gadget needs {expected} ports, has {found}")]
    PortArity { role: String, expected: usize, found: usize },
    #[error("two-literal clause {0} needs a filler gadget")]
    MissingFiller(usize),
    #[error("unsupported parameters {0}")]
    UnsupportedParams(Params),
    #[error("output structure check failed: {0}")]
    StructureViolated(String),
    #[error("invalid source colouring: {0}")]
    InvalidSource(String),
    #[error("output was not produced by this reduction")]
    WrongLayout,
    #[error("witness completion failed: {0}")]
    WitnessFailed(String),
}

#[derive(Default)]
struct Builder {
    edges: Vec<(Vertex, Vertex)>,
    prov: Vec<Source>,
}

impl Builder {
    fn add(&mut self, s: Source) -> Vertex {
        self.prov.push(s);
        self.prov.len() - 1
    }

    fn edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    /// Path of length `len` from `u` to `v` through `len - 1` new vertices.
    fn connect(&mut self, u: Vertex, v: Vertex, len: usize, mk: impl Fn(usize) -> Source) {
        let mut prev = u;
        for i in 0..len - 1 {
            let s = self.add(mk(i));
            self.edge(prev, s);
            prev = s;
        }
        self.edge(prev, v);
    }

    /// Copies `h`, reusing `glue[local]` where given.
    fn copy(&mut self, h: &Graph, glue: &[(Vertex, Vertex)], mk: impl Fn(Vertex) -> Source) -> Vec<Vertex> {
        let map: Vec<Vertex> = (0..h.n())
            .map(|x| glue.iter().find(|&&(l, _)| l == x).map_or_else(|| self.add(mk(x)), |&(_, gv)| gv))
            .collect();
        for (a, b) in h.edges() {
            self.edge(map[a], map[b]);
        }
        map
    }

    fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn finish(self) -> (Graph, Vec<Source>) {
        (Graph::from_edges(self.prov.len(), &self.edges), self.prov)
    }
}

/// Round-robin slot consumption per endpoint, at most four per vertex.
fn assign_slots(g: &Graph) -> Result<Vec<Slot>, ReductionError> {
    let mut used = vec![0usize; g.n()];
    let mut slots = Vec::new();
    for (u, v) in g.edges() {
        for w in [u, v] {
            if used[w] == 4 {
                return Err(ReductionError::SlotExhausted(w));
            }
        }
        slots.push(Slot { u, v, i: used[u], j: used[v] });
        used[u] += 1;
        used[v] += 1;
    }
    Ok(slots)
}

fn add_paths(b: &mut Builder, n: usize, len: usize) -> Vec<Vec<Vertex>> {
    (0..n)
        .map(|v| {
            let p: Vec<Vertex> = (0..=len).map(|i| b.add(Source::Path { v, i })).collect();
            for w in p.windows(2) {
                b.edge(w[0], w[1]);
            }
            p
        })
        .collect()
}

fn check_structure(g: &Graph, bipartite: bool, max_degree: usize, girth: usize) -> Result<(), ReductionError> {
    let bad = |m: String| Err(ReductionError::StructureViolated(m));
    if bipartite && !g.is_bipartite() {
        return bad("output is not bipartite".into());
    }
    if g.max_degree() > max_degree {
        return bad(format!("maximum degree {} exceeds {max_degree}", g.max_degree()));
    }
    if let Some(found) = g.girth() {
        if found < girth {
            return bad(format!("girth {found} below {girth}"));
        }
    }
    Ok(())
}

/// Defective 2-colouring (each vertex has at most one neighbour of its
/// colour) to (1,2)-colouring with girth at least `12 g0 + 18`.
pub fn reduce_dd_to_12(g: &Graph, g0: usize) -> Result<ReductionOutput, ReductionError> {
    assert!(g0 >= 1);
    let slots = assign_slots(g)?;
    let mut b = Builder::default();
    let paths = add_paths(&mut b, g.n(), 42 * g0);
    for s in &slots {
        let (pu, pv) = (&paths[s.u], &paths[s.v]);
        for link in 0..2 {
            let (x, y) = ((12 * s.i + 6 * link) * g0, (12 * s.j + 6 * link) * g0);
            b.connect(pu[x], pv[y], 9, |i| Source::Connector { u: s.u, v: s.v, link, i });
        }
    }
    for (v, p) in paths.iter().enumerate() {
        for i in (0..=42 * g0).step_by(3) {
            if b.degree(p[i]) == 2 {
                let leaf = b.add(Source::Pendant { v, i, j: 0 });
                b.edge(p[i], leaf);
            }
        }
    }
    let (graph, provenance) = b.finish();
    check_structure(&graph, g.is_bipartite(), 3, 12 * g0 + 18)?;
    let mut notes = vec!["slots assigned round-robin per endpoint; planar embeddability not certified".to_string()];
    if !g.is_bipartite() {
        notes.push("source has an odd cycle, so the output is not bipartite".into());
    }
    Ok(ReductionOutput { graph, params: Params::new(1, 2), provenance, source: Some(g.clone()), g0, slots, paths, notes })
}

/// 3-colouring to (1,3)-colouring with girth at least `18 g0 + 6`.
pub fn reduce_3col_to_13(g: &Graph, g0: usize) -> Result<ReductionOutput, ReductionError> {
    assert!(g0 >= 1);
    let slots = assign_slots(g)?;
    let mut b = Builder::default();
    let paths = add_paths(&mut b, g.n(), 18 * g0);
    for s in &slots {
        let (x, y) = (paths[s.u][6 * s.i * g0], paths[s.v][6 * s.j * g0]);
        b.connect(x, y, 2, |i| Source::Connector { u: s.u, v: s.v, link: 0, i });
    }
    for (v, p) in paths.iter().enumerate() {
        for (i, &x) in p.iter().enumerate() {
            for j in b.degree(x)..4 {
                let leaf = b.add(Source::Pendant { v, i, j });
                b.edge(x, leaf);
            }
        }
    }
    let (graph, provenance) = b.finish();
    check_structure(&graph, true, 4, 18 * g0 + 6)?;
    let notes = vec![
        "slots assigned round-robin per endpoint; planar embeddability not certified".to_string(),
        format!("connections at path positions 6*i*{g0}"),
    ];
    Ok(ReductionOutput { graph, params: Params::new(1, 3), provenance, source: Some(g.clone()), g0, slots, paths, notes })
}

fn require(spec: &GadgetSpec, role: &str, p: Params, budget: Budget) -> Result<(), ReductionError> {
    let reject = |property: String| Err(ReductionError::GadgetRejected { role: role.into(), property });
    match decide(&spec.gadget, p, budget).status {
        Status::Colorable => {}
        Status::NotColorable => return reject(format!("not {p}-colourable")),
        Status::Unknown => return reject(format!("{p}-colourability undecided within budget")),
    }
    match check_gadget(spec, p, budget) {
        GadgetVerdict::Holds => Ok(()),
        GadgetVerdict::FailsWithWitness(_) => reject(format!("{:?} fails at {p}", spec.property)),
        GadgetVerdict::Unknown => reject(format!("{:?} undecided within budget", spec.property)),
    }
}

fn require_ports(spec: &GadgetSpec, role: &str, expected: usize) -> Result<Vec<Vertex>, ReductionError> {
    if spec.ports.len() != expected {
        return Err(ReductionError::PortArity { role: role.into(), expected, found: spec.ports.len() });
    }
    Ok(spec.ports.iter().map(|&(_, v)| v).collect())
}

fn require_property(spec: &GadgetSpec, role: &str, want: GadgetProperty) -> Result<(), ReductionError> {
    if spec.property != want {
        return Err(ReductionError::GadgetRejected {
            role: role.into(),
            property: format!("declares {:?}, expected {:?}", spec.property, want),
        });
    }
    Ok(())
}

/// Gadgets for the SAT reductions. The variable gadget has ports
/// (positive, negative) with [`GadgetProperty::IffD1D2`], the clause gadget
/// three ports with [`GadgetProperty::AtLeastOneD2`], and the filler one port
/// with [`GadgetProperty::ForcedD2`].
#[derive(Clone, Debug)]
pub struct SatGadgets {
    pub var: GadgetSpec,
    pub clause: GadgetSpec,
    pub filler: Option<GadgetSpec>,
}

/// Restricted 3-SAT to (1,k)- or (2,k)-colouring.
///
/// At `a = 1` literal vertices are identified with clause ports; a two-literal
/// clause repeats its second literal on the third port. At `a = 2` each
/// literal vertex is joined to its clause port by an edge, and the third
/// port of a two-literal clause is joined to the port of a fresh filler copy.
pub fn reduce_with_gadgets(
    phi: &CnfFormula,
    k: usize,
    gadgets: &SatGadgets,
    params: Params,
    budget: Budget,
) -> Result<ReductionOutput, ReductionError> {
    if params.b != k || !(1..=2).contains(&params.a) {
        return Err(ReductionError::UnsupportedParams(params));
    }
    let check = phi.restricted_check();
    if let Some(why) = check.first_failure() {
        return Err(ReductionError::NotRestricted(why));
    }
    let vp = require_ports(&gadgets.var, "variable", 2)?;
    let cp = require_ports(&gadgets.clause, "clause", 3)?;
    require_property(&gadgets.var, "variable", GadgetProperty::IffD1D2(vp[0], vp[1]))?;
    require_property(&gadgets.clause, "clause", GadgetProperty::AtLeastOneD2(cp.clone()))?;
    require(&gadgets.var, "variable", params, budget)?;
    require(&gadgets.clause, "clause", params, budget)?;
    let identify = params.a == 1;
    let needs_filler = !identify && check.clause_sizes.contains(&2);
    let filler = match (&gadgets.filler, needs_filler) {
        (Some(f), true) => {
            let fp = require_ports(f, "filler", 1)?;
            require_property(f, "filler", GadgetProperty::ForcedD2(fp[0]))?;
            require(f, "filler", params, budget)?;
            Some((f, fp[0]))
        }
        (None, true) => return Err(ReductionError::MissingFiller(check.clause_sizes.iter().position(|&s| s == 2).unwrap() + 1)),
        _ => None,
    };
    let mut b = Builder::default();
    let lits: Vec<[Vertex; 2]> = (0..phi.vars)
        .map(|x| {
            let m = b.copy(&gadgets.var.gadget, &[], |local| Source::Var { x, local });
            [m[vp[0]], m[vp[1]]]
        })
        .collect();
    let lit_vertex = |l: i32| lits[l.unsigned_abs() as usize - 1][usize::from(l < 0)];
    for (c, clause) in phi.clauses.iter().enumerate() {
        let mut ls = clause.clone();
        if identify && ls.len() == 2 {
            ls.push(ls[1]);
        }
        if identify {
            let glue: Vec<(Vertex, Vertex)> = ls.iter().zip(&cp).map(|(&l, &port)| (port, lit_vertex(l))).collect();
            b.copy(&gadgets.clause.gadget, &glue, |local| Source::Clause { c, local });
        } else {
            let m = b.copy(&gadgets.clause.gadget, &[], |local| Source::Clause { c, local });
            for (&l, &port) in ls.iter().zip(&cp) {
                b.edge(lit_vertex(l), m[port]);
            }
            if ls.len() == 2 {
                let (f, s) = filler.expect("filler checked above");
                let fm = b.copy(&f.gadget, &[], |local| Source::Filler { c, local });
                b.edge(m[cp[2]], fm[s]);
            }
        }
    }
    let (graph, provenance) = b.finish();
    let notes = vec![format!("wiring: {}", if identify { "identification" } else { "edges" })];
    Ok(ReductionOutput { graph, params, provenance, source: None, g0: 0, slots: vec![], paths: vec![], notes })
}

/// 3-colouring to (3,k)-colouring: a copy of `h1` hangs off every vertex,
/// its port `v` identified with that vertex. `h1` must force both ports
/// `u` and `v` to distance-1 colours.
pub fn reduce_3col_to_3k(g: &Graph, k: usize, h1: &GadgetSpec, budget: Budget) -> Result<ReductionOutput, ReductionError> {
    let p = Params::new(3, k);
    if g.max_degree() > 4 {
        let v = (0..g.n()).find(|&v| g.degree(v) > 4).unwrap();
        return Err(ReductionError::SlotExhausted(v));
    }
    let (u, v) = match (h1.port("u"), h1.port("v")) {
        (Some(u), Some(v)) => (u, v),
        _ => return Err(ReductionError::PortArity { role: "attachment".into(), expected: 2, found: h1.ports.len() }),
    };
    require(h1, "attachment", p, budget)?;
    for (name, x) in [("u", u), ("v", v)] {
        let spec = GadgetSpec { property: GadgetProperty::ForcedD1(x), ..h1.clone() };
        if check_gadget(&spec, p, budget) != GadgetVerdict::Holds {
            return Err(ReductionError::GadgetRejected { role: "attachment".into(), property: format!("port {name} not forced to distance-1") });
        }
    }
    let mut b = Builder::default();
    for w in 0..g.n() {
        b.add(Source::Vertex(w));
    }
    for (x, y) in g.edges() {
        b.edge(x, y);
    }
    for w in 0..g.n() {
        b.copy(&h1.gadget, &[(v, w)], |local| Source::Attached { v: w, local });
    }
    let (graph, provenance) = b.finish();
    check_structure(&graph, false, 3 * k + 4, 0)?;
    Ok(ReductionOutput { graph, params: p, provenance, source: Some(g.clone()), g0: 0, slots: vec![], paths: vec![], notes: vec![] })
}

/// Whether `v`'s colour in `c` clashes with an already coloured vertex.
fn clashes(g: &Graph, c: &MixedColoring, v: Vertex) -> bool {
    let Some(col) = c.get(v) else { return false };
    match col {
        Color::D1(_) => g.neighbors(v).iter().any(|&w| c.get(w) == Some(col)),
        Color::D2(_) => g.neighbors(v).iter().any(|&w| {
            c.get(w) == Some(col) || g.neighbors(w).iter().any(|&x| x != v && c.get(x) == Some(col))
        }),
    }
}

/// Backtracking over `order`, leaving all other colours untouched.
fn complete_locally(g: &Graph, p: Params, c: &mut MixedColoring, order: &[Vertex]) -> bool {
    let palette: Vec<Color> = (0..p.a).map(Color::D1).chain((0..p.b).map(Color::D2)).collect();
    fn go(g: &Graph, palette: &[Color], c: &mut MixedColoring, order: &[Vertex]) -> bool {
        let Some((&v, rest)) = order.split_first() else { return true };
        for &col in palette {
            c.set(v, col);
            if !clashes(g, c, v) && go(g, palette, c, rest) {
                return true;
            }
        }
        c.clear(v);
        false
    }
    go(g, &palette, c, order)
}

fn require_valid(out: &ReductionOutput, c: MixedColoring) -> Result<MixedColoring, ReductionError> {
    match verify(&out.graph, out.params, &c) {
        Ok(v) if v.is_empty() => Ok(c),
        Ok(v) => Err(ReductionError::WitnessFailed(v[0].to_string())),
        Err(e) => Err(ReductionError::WitnessFailed(e.to_string())),
    }
}

/// Forward witness for [`reduce_dd_to_12`] from a defective 2-colouring
/// (values 0/1, each vertex with at most one neighbour of its colour).
pub fn build_witness_dd12(source: &[usize], out: &ReductionOutput) -> Result<MixedColoring, ReductionError> {
    let g = out.source.as_ref().ok_or(ReductionError::WrongLayout)?;
    if out.params != Params::new(1, 2) || out.paths.len() != g.n() || source.len() != g.n() {
        return Err(ReductionError::WrongLayout);
    }
    if let Some(v) = (0..g.n()).find(|&v| source[v] > 1) {
        return Err(ReductionError::InvalidSource(format!("vertex {v} has colour {}", source[v])));
    }
    for v in 0..g.n() {
        let same = g.neighbors(v).iter().filter(|&&w| source[w] == source[v]).count();
        if same > 1 {
            return Err(ReductionError::InvalidSource(format!("vertex {v} has {same} neighbours of its colour")));
        }
    }
    let g0 = out.g0;
    // Path position before which the D1/D2 pattern of a vertex is flipped.
    let mut switch = vec![0usize; g.n()];
    for s in &out.slots {
        if source[s.u] == source[s.v] {
            switch[s.u] = 12 * s.i * g0;
            switch[s.v] = (12 * s.j + 6) * g0;
        }
    }
    let h = &out.graph;
    let mut c = MixedColoring::uncolored(h.n());
    for (v, path) in out.paths.iter().enumerate() {
        let (own, other) = (Color::D2(source[v]), Color::D2(1 - source[v]));
        for (i, &x) in path.iter().enumerate() {
            let early = i / 3 * 3 + 3 <= switch[v];
            c.set(
                x,
                match (i % 3, early) {
                    (0, _) => own,
                    (1, true) | (2, false) => other,
                    _ => Color::D1(0),
                },
            );
        }
    }
    for (x, src) in out.provenance.iter().enumerate() {
        if matches!(src, Source::Pendant { .. }) {
            c.set(x, Color::D1(0));
        }
    }
    let mut connectors: Vec<Vec<Vertex>> = vec![Vec::new(); 2 * out.slots.len()];
    let index: std::collections::BTreeMap<(Vertex, Vertex), usize> =
        out.slots.iter().enumerate().map(|(e, s)| ((s.u, s.v), e)).collect();
    for (x, src) in out.provenance.iter().enumerate() {
        if let Source::Connector { u, v, link, .. } = *src {
            connectors[2 * index[&(u, v)] + link].push(x);
        }
    }
    for (e, verts) in connectors.iter().enumerate() {
        if !complete_locally(h, out.params, &mut c, verts) {
            let s = out.slots[e / 2];
            return Err(ReductionError::WitnessFailed(format!("connector {} of edge {}-{}", e % 2, s.u, s.v)));
        }
    }
    require_valid(out, c)
}

/// Forward witness for [`reduce_3col_to_13`]: `v_i` gets distance-2 class
/// `(c(v) + i) mod 3`, everything else the distance-1 class.
pub fn build_witness_3col13(source: &[usize], out: &ReductionOutput) -> Result<MixedColoring, ReductionError> {
    let g = out.source.as_ref().ok_or(ReductionError::WrongLayout)?;
    if out.params != Params::new(1, 3) || out.paths.len() != g.n() || source.len() != g.n() {
        return Err(ReductionError::WrongLayout);
    }
    if let Some(v) = (0..g.n()).find(|&v| source[v] > 2) {
        return Err(ReductionError::InvalidSource(format!("vertex {v} has colour {}", source[v])));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| source[u] == source[v]) {
        return Err(ReductionError::InvalidSource(format!("edge {u}-{v} is monochromatic")));
    }
    let mut c = MixedColoring::from_colors(vec![Color::D1(0); out.graph.n()]);
    for (v, path) in out.paths.iter().enumerate() {
        for (i, &x) in path.iter().enumerate() {
            c.set(x, Color::D2((source[v] + i) % 3));
        }
    }
    require_valid(out, c)
}

/// Source entities mentioned by the provenance, for totality checks.
pub fn provenance_entities(out: &ReductionOutput) -> BTreeSet<String> {
    out.provenance.iter().map(ToString::to_string).collect()
}
