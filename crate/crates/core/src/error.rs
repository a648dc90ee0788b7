use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite entry in state or operator")]
    NonFinite,

    #[error("dimension must be positive")]
    EmptyDimension,

    #[error("tensor product {left} x {right} exceeds the maximum dimension {max}")]
    DimensionOverflow {
        left: usize,
        right: usize,
        max: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("matrix is not unitary (max |U†U - I| = {defect:e})")]
    NotUnitary { defect: f64 },

    #[error("matrix is not Hermitian (defect {defect:e})")]
    NotHermitian { defect: f64 },

    #[error("density operator trace is {trace}, expected 1")]
    NotUnitTrace { trace: f64 },

    #[error("state is not normalized (squared norm {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("mixing weight {0} is outside [0, 1]")]
    InvalidWeight(f64),

    #[error("factor dimensions {factors:?} do not multiply to {dim}")]
    FactorMismatch { factors: Vec<usize>, dim: usize },

    #[error("partial trace must keep at least one factor")]
    EmptyKeepSet,

    #[error("question pair ({row}, {col}) is outside 1..=3")]
    InvalidQuestion { row: usize, col: usize },

    #[error("answer {bits:?} violates the {expected} parity constraint")]
    ParityViolation {
        bits: [bool; 3],
        expected: &'static str,
    },

    #[error("acceleration parameter r = {0} is outside the valid range [0, pi/4]")]
    AccelerationOutOfRange(f64),

    #[error("physical acceleration parameters must be strictly positive and finite (a = {a}, omega = {omega}, c = {c})")]
    InvalidPhysicalAcceleration { a: f64, omega: f64, c: f64 },

    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),

    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("invalid sweep configuration: {0}")]
    InvalidSweep(String),

    #[error(
        "bisection root {root} and analytic root {analytic} differ by more than {tolerance:e}"
    )]
    ThresholdMismatch {
        root: f64,
        analytic: f64,
        tolerance: f64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the command-line front end: 2 for invalid
    /// arguments, 3 for I/O failures, 1 for anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) | Error::Csv(_) | Error::Json(_) => 3,
            Error::AccelerationOutOfRange(_)
            | Error::InvalidPhysicalAcceleration { .. }
            | Error::InvalidTolerance(_)
            | Error::InvalidSweep(_)
            | Error::InvalidQuestion { .. } => 2,
            _ => 1,
        }
    }
}
