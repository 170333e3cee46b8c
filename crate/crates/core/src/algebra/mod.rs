//! Exact scalars, polynomials in structure-constant parameters, and
//! rank computations for matrices with polynomial entries.

pub mod frac;
pub mod matrix;
pub mod modular;
pub mod parse;
pub mod poly;
pub mod rank;
pub mod rational;

pub use frac::Frac;
pub use matrix::{PolyMatrix, QMatrix};
pub use parse::{parse_frac, parse_poly};
pub use poly::{Assignment, Monomial, Poly, Var};
pub use rank::{kernel_basis, matrix_rank, RankInfo, RankMode};
pub use rational::{int, rat, Rational};
