//! Crossing-avoiding matchings in two-layer bipartite layouts.
//!
//! An [`Instance`] places the two sides of a bipartite graph on two parallel
//! lines; edges are straight segments. The task is to pick a perfect
//! matching with as few intersecting segment pairs as possible.
//!
//! - [`model`]: instances, matchings, crossing counters, enumeration.
//! - [`solver`]: exact minimisation and the budget decision.
//! - [`reduction`]: the vertex-cover gadget construction and its bookkeeping.
//! - [`oracle`]: brute-force references and seeded generators.
//! - [`render`]: SVG drawings.
//! - [`cli`]: the `crossmatch` command line.

pub mod cli;
pub mod format;
pub mod model;
pub mod oracle;
pub mod reduction;
pub mod render;
pub mod solver;

pub use format::ParseError;
pub use model::{CrossingCount, Edge, Instance, Matching, ModelError, ValidationReport};
pub use reduction::{reduce_vc, GadgetMap, SourceGraph};
pub use solver::{decide, solve_min_crossings, Decision, Method, SolveOptions, SolveResult};
