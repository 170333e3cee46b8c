use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter `{0}` has no assigned value")]
    MissingParameter(String),
    #[error("parameter constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("nondegeneracy assumption violated: {0} evaluates to zero")]
    Degenerate(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("cannot combine elements of different kinds: {0}")]
    MixedKinds(String),
    #[error("interior product of a 0-form")]
    DegreeUnderflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{what} id {id} out of range")]
    InvalidId { what: &'static str, id: usize },
    #[error("invalid rank mode: {0}")]
    InvalidMode(String),
    #[error("arithmetic failure: {0}")]
    Arithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
