use alloc::string::String;

use crate::upoly::UniPoly;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A parameter is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Exact division left a nonzero remainder.
    #[error("not divisible: remainder {remainder}")]
    NonDivisible { remainder: UniPoly },
    #[error("variable x{0} has no value in the assignment")]
    UnassignedVariable(u32),
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("polynomial has non-integral coefficients")]
    NonIntegral,
    /// A construction produced a value that contradicts its own definition.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
