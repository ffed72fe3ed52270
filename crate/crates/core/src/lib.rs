//! Mixed distance-1 / distance-2 graph colourings: data model, exact
//! search, constructive colourers, graph families and hardness reductions.

pub mod colorers;
pub mod coloring;
pub mod gadget;
pub mod generators;
pub mod graph;
pub mod io;
pub mod outerplanar;
pub mod reductions;
pub mod solver;

pub use coloring::{verify, Color, MixedColoring, Params, Violation, ViolationKind};
pub use graph::{Graph, Vertex, VertexSet};
pub use solver::{decide, Budget, SolveOutcome, Status};
