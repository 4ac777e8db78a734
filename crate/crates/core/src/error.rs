use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("frame mismatch: {0} vs {1}")]
    FrameMismatch(String, String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("basis rows are linearly dependent")]
    DependentBasis,
    #[error("lattice is not integral")]
    NotIntegral,
    #[error("lattice is not even")]
    NotEven,
    #[error("vector is not in the lattice")]
    NotInLattice,
    #[error("zero vector has no divisibility")]
    ZeroVector,
    #[error("vector is isotropic")]
    Isotropic,
    #[error("matrix does not preserve the form")]
    NotIsometry,
    #[error("isometry does not preserve the lattice")]
    NotPreserved,
    #[error("Kähler class is not generic for this vector")]
    NonGenericClass,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown check: {0}")]
    UnknownCheck(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}

pub type Result<T> = std::result::Result<T, Error>;
