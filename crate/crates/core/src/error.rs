use thiserror::Error;

use crate::integral::QuadratureResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// `p(1) != 0` when dividing by `t - 1`.
    #[error("non-removable pole at t = 1 (p(1) = {0})")]
    NonRemovablePole(String),

    /// Two routes that must agree by construction did not.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("series diverges: {0}")]
    Divergent(String),

    #[error("quadrature did not converge: estimate {} > tolerance after {} subdivisions", .0.error_estimate, .0.subdivisions)]
    NonConvergence(QuadratureResult),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::OutOfDomain(msg.into())
    }
}
