use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("partition sizes differ: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },

    #[error("box ({column},{row}) lies outside the diagram of {partition}")]
    BoxOutsideDiagram {
        column: u32,
        row: u32,
        partition: String,
    },

    #[error("index {index} out of range for {len} entries")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{what} {value} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("ground sets differ: [{left}] vs [{right}]")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error(
        "pole at alpha = 0 (valuation {valuation}); coefficient of alpha^{requested} undefined"
    )]
    PoleAtZero { valuation: i64, requested: i64 },

    #[error("not a polynomial: denominator {0}")]
    NotPolynomial(String),

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("restriction to {vars} variables is not faithful for degree {degree}")]
    TooFewVariables { vars: usize, degree: u32 },

    #[error("non-homogeneous input where a homogeneous symmetric function is required")]
    NotHomogeneous,

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("non-invertible family value at subset {0}")]
    NotInvertible(String),

    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Cache(e.to_string())
    }
}
