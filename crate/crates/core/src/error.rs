use thiserror::Error;

/// Errors raised by the monomial, ideal, and resolution routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty lcm")]
    EmptyLcm,
    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("ambient size {0} exceeds the supported maximum of 64 variables")]
    AmbientTooLarge(u32),
    #[error("monomials of different degrees: {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("zero ideal: no generators")]
    ZeroIdeal,
    #[error("unit ideal has no meaningful invariant here")]
    UnitIdeal,
    #[error("t must be at least 1 for ideal-level operations")]
    ZeroSpread,
    #[error("generator {0} is not {1}-spread")]
    NotTSpread(String, u32),
    #[error("generators do not form a regular sequence (supports overlap)")]
    NotRegularSequence,
    #[error("ideal is not {0}-spread strongly stable")]
    NotStronglyStable(u32),
    #[error("graph is not a forest")]
    NotForest,
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("invalid edge {0}-{1}")]
    InvalidEdge(u32, u32),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u32, u32),
    #[error("{limit_name} limit exceeded: {value} > {limit}")]
    SizeLimit {
        limit_name: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    /// True for errors caused by malformed input text rather than by the mathematics.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::InvalidEdge(..) | Error::DuplicateEdge(..)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
