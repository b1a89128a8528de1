use std::fmt;

use thiserror::Error;

/// Which pole family of the Jordan–Kronecker product was hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleLocus {
    /// `b = R^{2k}` for some integer `k`.
    B,
    /// `t = R^{2k}` for some integer `k`.
    T,
}

impl fmt::Display for PoleLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PoleLocus::B => f.write_str("b-pole"),
            PoleLocus::T => f.write_str("t-pole"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series did not converge within {max_terms} terms")]
    NonConvergence { max_terms: usize },
    #[error("pole of the product formula ({locus}) at factor j = {index}")]
    Pole { locus: PoleLocus, index: usize },
    #[error("dual system is numerically singular (determinant {det:e})")]
    SingularSystem { det: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
