use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of a function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Parameters violate a structural invariant (ordering, sizes, lengths).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The parameters are valid but no object with the requested property
    /// exists within the searched range.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// An explicit-enumeration limit was exceeded.
    #[error("{what} = {value} exceeds the enumeration cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    /// A sufficient condition of a constructive procedure does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("region is not connected")]
    Disconnected,

    #[error("no generator matrix found after {trials} trials (per-trial success probability >= {success_lower_bound:.6})")]
    NotFound {
        trials: u64,
        success_lower_bound: f64,
    },

    /// A constructive step failed although its precondition held.
    #[error("internal contract violated: {0}")]
    Internal(String),

    #[error("codebook line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
