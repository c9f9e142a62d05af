use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants are grouped by the CLI exit code they map to; see [`Error::exit_code`].
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group order {0}")]
    InvalidOrder(usize),
    #[error("element {element} out of range for group of order {order}")]
    OutOfRange { element: usize, order: usize },
    #[error("invalid Cayley table: {0}")]
    Validation(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: usize, b: usize },
    #[error("subgroup generated by the values is not abelian: {0}")]
    NotAbelian(String),
    #[error("subgroup is not soluble (derived series stops at order {0})")]
    NotSoluble(usize),
    #[error("containment failed: {0}")]
    Containment(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("function is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("size limit exceeded: {what} is {count}, cap is {cap}")]
    SizeLimit { what: String, count: u128, cap: u128 },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvariantViolation(_) => 2,
            Error::SizeLimit { .. } => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
