use thiserror::Error;

/// Errors raised by the verification engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported dimension {0}: only 3 and 4 are supported")]
    UnsupportedDimension(usize),

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("form is not closed; exterior derivative residual: {residual}")]
    NotClosed { residual: String },

    #[error("degenerate integration cell: axis {axis} has zero extent")]
    DegenerateCell { axis: usize },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("causality violated on interval [{t0}, {t1}]: speed {speed} >= c = {c}")]
    Causality { t0: f64, t1: f64, speed: f64, c: f64 },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("arithmetic on an infinite count")]
    InfiniteArithmetic,

    #[error("usage error: {0}")]
    Usage(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
