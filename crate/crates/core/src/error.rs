use thiserror::Error;

/// Errors raised by constructors, evaluators and the analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the region where the function is real and finite.
    #[error("{what}: argument {value} violates domain bound {bound}")]
    Domain {
        what: &'static str,
        value: f64,
        bound: String,
    },

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: String,
        reason: &'static str,
    },

    /// The request is well formed but has no implementation (for example a
    /// closed form outside its tabulated range).
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("zero polynomial has no isolated roots")]
    ZeroPolynomial,

    #[error("evaluation overflowed: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(name: &'static str, value: impl ToString, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value: value.to_string(),
            reason,
        }
    }

    pub(crate) fn domain(what: &'static str, value: f64, bound: impl Into<String>) -> Self {
        Error::Domain {
            what,
            value,
            bound: bound.into(),
        }
    }
}
