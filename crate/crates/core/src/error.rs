use thiserror::Error;

/// Errors raised anywhere in the code-design pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("row {row} has a rational entry; clear denominators first")]
    RationalEntry { row: usize },

    #[error("row scale factor must be nonzero")]
    ZeroScale,

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("inconsistent frame size: expected {expected} qubits per frame, found {found}")]
    InconsistentFrameSize { expected: usize, found: usize },

    #[error("input contains no generators")]
    EmptyInput,

    #[error(
        "no expansion factor up to l_max = {l_max} reaches the standard form \
         (step 4 requested expansion beyond the limit)"
    )]
    NoConvergence { l_max: usize },

    #[error("reduction failure: {0}")]
    ReductionFailure(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// Re-anchors a parse error produced on a single line to `line`, shifting
    /// its column by `offset` characters.
    pub fn at_line(self, line: usize, offset: usize) -> Self {
        match self {
            Error::Parse { column, message, .. } => Error::Parse {
                line,
                column: column + offset,
                message,
            },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
