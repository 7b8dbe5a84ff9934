//! Deciders and search tools for paths that close to cycles in symmetric
//! graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: immutable simple graphs, paths, cycles, graph6 and DOT.
//! * [`families`]: circulants, hypercubes, diamond-complete graphs, line
//!   graphs and the witness paths that fail to close.
//! * [`symmetry`]: automorphism generators, orbits, vertex/edge transitivity.
//! * [`connectivity`]: exact vertex connectivity with a minimum cut.
//! * [`cycles`]: closure of (induced) paths to (induced) cycles.
//! * [`verify`]: the small-graph census, the claim registry and the
//!   counterexample search behind the CLI.

pub mod connectivity;
pub mod cycles;
pub mod error;
pub mod families;
pub mod graph;
pub mod symmetry;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Cycle, Graph, Path};
