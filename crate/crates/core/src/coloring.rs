//! Mixed colourings: every vertex takes either a distance-1 class (proper
//! colouring constraint) or a distance-2 class (independent in the square).

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Number of distance-1 classes `a` and distance-2 classes `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub a: usize,
    pub b: usize,
}

impl Params {
    pub const fn new(a: usize, b: usize) -> Self {
        Params { a, b }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A tagged colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    D1(usize),
    D2(usize),
}

impl Color {
    pub fn is_d1(self) -> bool {
        matches!(self, Color::D1(_))
    }

    pub fn is_d2(self) -> bool {
        matches!(self, Color::D2(_))
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::D1(i) => write!(f, "d1 {i}"),
            Color::D2(j) => write!(f, "d2 {j}"),
        }
    }
}

/// A possibly partial assignment of tagged colours to vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedColoring {
    colors: Vec<Option<Color>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    /// Adjacent vertices share a distance-1 class.
    D1Edge,
    /// Adjacent vertices share a distance-2 class.
    D2Dist1,
    /// Vertices at distance exactly two share a distance-2 class.
    D2Dist2,
    /// Class index outside the allowed range.
    OutOfRange,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub kind: ViolationKind,
    pub u: Vertex,
    /// Second witness vertex; absent for [`ViolationKind::OutOfRange`].
    pub v: Option<Vertex>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::D1Edge => "d1-edge",
            ViolationKind::D2Dist1 => "d2-dist1",
            ViolationKind::D2Dist2 => "d2-dist2",
            ViolationKind::OutOfRange => "out-of-range",
        };
        match self.v {
            Some(v) => write!(f, "{kind} {} {}", self.u + 1, v + 1),
            None => write!(f, "{kind} {}", self.u + 1),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("vertex {0} is uncoloured")]
    Uncolored(Vertex),
    #[error("colouring covers {got} vertices but the graph has {want}")]
    SizeMismatch { got: usize, want: usize },
}

impl MixedColoring {
    pub fn uncolored(n: usize) -> Self {
        MixedColoring { colors: vec![None; n] }
    }

    pub fn from_colors(colors: Vec<Color>) -> Self {
        MixedColoring { colors: colors.into_iter().map(Some).collect() }
    }

    pub fn from_partial(colors: Vec<Option<Color>>) -> Self {
        MixedColoring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: Vertex, c: Color) {
        self.colors[v] = Some(c);
    }

    pub fn clear(&mut self, v: Vertex) {
        self.colors[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn first_uncolored(&self) -> Option<Vertex> {
        self.colors.iter().position(Option::is_none)
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    /// Total colouring as a plain vector; panics on partial colourings.
    pub fn to_vec(&self) -> Vec<Color> {
        self.colors.iter().map(|c| c.expect("total colouring")).collect()
    }

    /// Number of distinct distance-1 and distance-2 classes in use.
    pub fn count_classes(&self) -> (usize, usize) {
        let mut d1 = BTreeSet::new();
        let mut d2 = BTreeSet::new();
        for c in self.colors.iter().flatten() {
            match *c {
                Color::D1(i) => d1.insert(i),
                Color::D2(j) => d2.insert(j),
            };
        }
        (d1.len(), d2.len())
    }

    /// Renumbers classes of each tag in order of their least vertex.
    pub fn canonicalize(&self) -> MixedColoring {
        let mut d1 = Vec::new();
        let mut d2 = Vec::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                c.map(|c| match c {
                    Color::D1(i) => Color::D1(slot(&mut d1, i)),
                    Color::D2(j) => Color::D2(slot(&mut d2, j)),
                })
            })
            .collect();
        MixedColoring { colors }
    }
}

fn slot(seen: &mut Vec<usize>, c: usize) -> usize {
    match seen.iter().position(|&x| x == c) {
        Some(i) => i,
        None => {
            seen.push(c);
            seen.len() - 1
        }
    }
}

/// Checks a total colouring; see [`verify_partial`] for partial ones.
pub fn verify(g: &Graph, p: Params, c: &MixedColoring) -> Result<Vec<Violation>, ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::SizeMismatch { got: c.len(), want: g.n() });
    }
    if let Some(v) = c.first_uncolored() {
        return Err(ColoringError::Uncolored(v));
    }
    Ok(verify_partial(g, p, c))
}

/// Violations among the coloured vertices; uncoloured vertices are ignored.
/// Each witness pair is reported once with `u < v`.
pub fn verify_partial(g: &Graph, p: Params, c: &MixedColoring) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        match c.get(v) {
            Some(Color::D1(i)) if i >= p.a => out.push(Violation { kind: ViolationKind::OutOfRange, u: v, v: None }),
            Some(Color::D2(j)) if j >= p.b => out.push(Violation { kind: ViolationKind::OutOfRange, u: v, v: None }),
            _ => {}
        }
    }
    for (u, v) in g.edges() {
        match (c.get(u), c.get(v)) {
            (Some(Color::D1(x)), Some(Color::D1(y))) if x == y => {
                out.push(Violation { kind: ViolationKind::D1Edge, u, v: Some(v) })
            }
            (Some(Color::D2(x)), Some(Color::D2(y))) if x == y => {
                out.push(Violation { kind: ViolationKind::D2Dist1, u, v: Some(v) })
            }
            _ => {}
        }
    }
    let mut dist2 = BTreeSet::new();
    for w in 0..g.n() {
        let ns = g.neighbors(w);
        for (i, &x) in ns.iter().enumerate() {
            let Some(Color::D2(cx)) = c.get(x) else { continue };
            for &y in &ns[i + 1..] {
                if c.get(y) == Some(Color::D2(cx)) && !g.has_edge(x, y) {
                    dist2.insert((x.min(y), x.max(y)));
                }
            }
        }
    }
    out.extend(dist2.into_iter().map(|(u, v)| Violation { kind: ViolationKind::D2Dist2, u, v: Some(v) }));
    out
}

/// Independent validity check through the square graph: D1 classes must be
/// independent in `g`, D2 classes independent in `g²`.
pub fn is_valid_via_square(g: &Graph, p: Params, c: &MixedColoring) -> bool {
    if c.len() != g.n() || !c.is_total() {
        return false;
    }
    let sq = g.square();
    let colors = c.to_vec();
    colors.iter().all(|&col| match col {
        Color::D1(i) => i < p.a,
        Color::D2(j) => j < p.b,
    }) && g.edges().all(|(u, v)| !(colors[u].is_d1() && colors[u] == colors[v]))
        && sq.edges().all(|(u, v)| !(colors[u].is_d2() && colors[u] == colors[v]))
}
