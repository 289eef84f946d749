use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("divisor series has zero constant term")]
    NonInvertible,

    #[error("series_exp requires a zero constant term, got {0}")]
    NonzeroConstant(num_complex::Complex64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("inadmissible pole parameters: {0}")]
    Inadmissible(String),

    #[error("normalization check failed: {0}")]
    Normalization(String),

    #[error("internal consistency fault: {0}")]
    Fault(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
