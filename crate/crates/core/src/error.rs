use thiserror::Error;

/// Errors surfaced by the workbench.
///
/// `Domain` errors are caused by bad input (mismatched parameters, poles,
/// unsupported field requests) and map to CLI exit code 1.  `Internal`
/// errors indicate a violated engine invariant (for example a singular
/// basis-change solve, which the standard basis theorem rules out) and map
/// to exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub fn domain_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub fn internal_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
