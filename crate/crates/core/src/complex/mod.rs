//! Weighted chain complexes of the three superalgebras and their homology.

pub mod boundary;
pub mod chain;
pub mod report;

pub use crate::superalg::ComplexKind;
pub use boundary::{boundary_matrix, BoundaryBuilder};
pub use chain::{chain_basis, chain_parity, enumerate_signatures, max_length, WeightSignature, WeightedChainBasis};
pub use report::{homology_report, strata_report, AlgebraRef, BettiReport, BettiRow};
