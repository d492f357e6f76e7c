use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what}: input size {size} exceeds the exhaustive-enumeration limit {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("exponent {exponent:?} exceeds polynomial caps {caps:?}")]
    BeyondCap { exponent: Vec<u32>, caps: Vec<u32> },

    #[error("polynomials have incompatible caps {left:?} and {right:?}")]
    CapMismatch { left: Vec<u32>, right: Vec<u32> },

    #[error("expected an integer result but got {value} (parameters: {context})")]
    NonIntegral { value: String, context: String },

    #[error("word {letters:?} is not the reading word of a rectangular tableau: {reason}")]
    InvalidWord { letters: Vec<usize>, reason: String },

    #[error("not a standard Young tableau: {0}")]
    InvalidTableau(String),

    #[error("claim violated for {params}: minimum shift {min_shift} is below the bound {bound}")]
    ClaimViolated {
        params: String,
        min_shift: i64,
        bound: i64,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
