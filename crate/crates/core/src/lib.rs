//! Exact decision, certification and refutation of pretty good quantum
//! state transfer (PGST) between vertex pairs of rationally weighted graphs.
//!
//! A pair `x, y` is analysed through the minimal polynomials `P+`, `P-` of
//! the adjacency matrix relative to `e_x + e_y` and `e_x - e_y`. Every
//! certified verdict carries a certificate that re-verifies in exact
//! arithmetic; numeric components (lattice relation search, walk
//! simulation) only ever produce evidence.

pub mod algebra;
pub mod census;
pub mod cli;
pub mod corpus;
pub mod document;
pub mod engine;
pub mod error;
pub mod graph;
pub mod involution;
pub mod paths;
pub mod simulator;
pub mod spectra;

pub use error::{Error, Result};
