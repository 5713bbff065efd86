use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the domain of the requested quantity.
    #[error("domain error: {0}")]
    Domain(String),
    /// Adaptive quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge over [{a}, {b}]")]
    Quadrature { a: f64, b: f64 },
    /// No entry in the static-atmosphere table for the requested conditions.
    #[error("no atmospheric transmission data for {0}")]
    NoAtmosphericData(String),
    /// Configuration file problems.
    #[error("config: {0}")]
    Config(String),
    /// Unknown scenario preset name.
    #[error("unknown scenario `{0}`; run `qkdrate scenario list`")]
    UnknownScenario(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
