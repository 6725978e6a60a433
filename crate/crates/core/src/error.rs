use thiserror::Error;

/// Errors raised by state construction, gate application and circuit building.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit count must be between 1 and {max}, got {got}")]
    InvalidQubitCount { got: usize, max: usize },

    #[error("qubit index {qubit} out of range, valid indices are 1..={n_qubits}")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },

    #[error("gate needs two distinct qubits, got {0} twice")]
    RepeatedQubit(usize),

    #[error("basis value {value} out of range, must be below {bound}")]
    ValueOutOfRange { value: u64, bound: u64 },

    #[error("basis value {0} appears more than once")]
    DuplicateValue(u64),

    #[error("state is not normalized: squared norm is {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("amplitude count {0} is not a power of two")]
    BadLength(usize),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("size mismatch: {left} qubits vs {right} qubits")]
    SizeMismatch { left: usize, right: usize },

    #[error("dense matrices are limited to {max} qubits, got {got}")]
    DenseLimit { got: usize, max: usize },

    #[error("gate count mismatch for N={n}: {what} is {built}, closed form gives {expected}")]
    CountMismatch {
        n: usize,
        what: &'static str,
        built: usize,
        expected: usize,
    },

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
