use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),

    #[error("{0} is not a prime >= 3")]
    InvalidPrime(u64),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },

    #[error("the characteristic {prime} divides the degree {degree} of generator {index}")]
    CharacteristicHazard { prime: u32, degree: u32, index: usize },

    #[error("zero input: {0}")]
    ZeroInput(&'static str),

    #[error("degree {requested} is below the generator degree {generator}")]
    DegreeTooSmall { requested: u32, generator: u32 },

    #[error("polynomial is not divisible by the given divisor")]
    InexactDivision,

    #[error("codimension parameter {e} outside [{lo}, {hi}]")]
    ResidualRange { e: usize, lo: usize, hi: usize },

    #[error("random hypersurfaces not in general position (attempts: {attempts}, seed {seed})")]
    Genericity { seed: u64, attempts: usize },

    #[error("verification run with an independent seed disagreed (seed {seed})")]
    VerificationMismatch { seed: u64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
