//! Semipaired domination: exact oracles, the interval-graph and tree
//! algorithms, the greedy approximation, and the hardness reductions.

pub mod bench;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod greedy;
pub mod interval;
pub mod io;
pub mod reductions;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use verify::{find_pairing, verify_solution, SemipairedSolution, Verdict, Violation};

pub type IntervalModelI64 = interval::IntervalModel<i64>;
pub type IntervalModelF64 = interval::IntervalModel<f64>;
pub type RatioCertificateF64 = greedy::RatioCertificate<f64>;
