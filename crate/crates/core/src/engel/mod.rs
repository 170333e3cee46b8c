//! Engel-like planes in four-dimensional Lie algebras: the Engel-like
//! coefficient, its closed forms for the classification types, witness
//! planes, flag dimensions and characteristic lines.

mod elc;
mod foliation;

pub use elc::{
    elc, elc_closed_form, elc_formula_check, engel_flag_check, expand_det, verify_witness, ElcCheck, PlanePair,
    WitnessReport,
};
pub use foliation::{characteristic_foliation, foliation_closure_check, Foliation};
