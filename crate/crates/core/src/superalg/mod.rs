//! The multivector, form and extended Lie superalgebras over a
//! four-dimensional Lie algebra.

pub mod element;
pub mod exterior;
pub mod letters;
pub mod ops;

pub use element::{binomial, GradedComponent, GradedElement};
pub use letters::{super_bracket, ComplexKind, Letter, LetterTable};
pub use ops::{
    ce_differential, extended_bracket, form_bracket, interior_product, lie_derivative, lie_derivative_coordinate,
    schouten_bracket, wedge,
};
