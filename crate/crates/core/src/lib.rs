//! Weighted super-homology of Engel-type four-dimensional Lie algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: exact rationals, parameter polynomials, rank over
//!   parameter fields.
//! * [`lie`]: structure-constant tables, Jacobi residuals and the catalogs.
//! * [`superalg`]: multivector, form and extended Lie superalgebras.
//! * [`complex`]: weighted chain complexes and Betti reports.
//! * [`engel`]: Engel-like coefficients, flags and characteristic lines.

pub mod algebra;
pub mod complex;
pub mod engel;
pub mod error;
pub mod lie;
pub mod superalg;

pub use error::{Error, Result};
