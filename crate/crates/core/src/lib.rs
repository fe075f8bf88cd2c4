//! Jaco-type graphs: digraphs whose out-degrees are prescribed by an integer
//! sequence, together with their clique invariants and a brute-force verifier
//! for the published results about them.

pub mod budget;
pub mod clique;
pub mod error;
pub mod graph;
pub mod pascal;
pub mod seqgen;
pub mod verify;

pub use budget::Budgets;
pub use clique::{CliqueCensus, CliqueDegreeTable, CoverResult};
pub use error::{JacoError, Result};
pub use graph::{ExportFormat, JacoTypeGraph, UndirectedGraph};
pub use seqgen::{SequenceSpec, SetVariant};
