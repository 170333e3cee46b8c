//! Four-dimensional Lie algebras by structure constants.

pub mod algebra;
pub mod catalog;
pub mod spec;

pub use algebra::{format_combination, invert4, JacobiResidual, LieAlgebra4, Vector4, DIM, PAIRS};
pub use catalog::{class_type, engel_ansatz, family, type_info, ClassParams, TypeInfo, FAMILY_IDS, TYPE_IDS};
pub use spec::{AlgebraSpec, BracketSpec};
