//! Brute-force oracles, published tables and claim evaluation.

mod claims;
mod dense;
pub mod oracle;
mod report;
pub mod tables;

pub use claims::{claim_ids, run_all, run_claim, ClaimInfo, ClaimParams, DEFAULT_SEED, REGISTRY};
pub use dense::DenseGraph;
pub use report::{Check, CheckRole, ClaimReport, Mismatch, Status, Witness};
pub use tables::{regenerate_table, TableCell, TableDiff, TableParams};
