use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input data. The message names the offending key or value.
    #[error("invalid input: {0}")]
    Input(String),

    /// An operation was called outside its documented domain.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A desk-scale bound was exceeded.
    #[error("{what} exceeds the supported bound of {limit} (got {got})")]
    Capability {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    /// Coset enumeration hit its limits before completing.
    #[error(
        "inconclusive: coset enumeration reached its limit ({limit} cosets, high-water mark {high_water}, \
         {defined} definitions); the group may be infinite, or the limits may need raising"
    )]
    Inconclusive {
        limit: usize,
        high_water: usize,
        defined: usize,
    },

    /// A verified identity did not hold. For the theorem checks this signals a bug.
    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
