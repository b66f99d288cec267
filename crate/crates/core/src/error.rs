use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "invalid mu = {0}: the values 0 and +/-1/2 are the oscillator, Coulomb and Morse problems"
    )]
    InvalidMu(f64),

    #[error("invalid beta = {0}: beta must be finite and not one of 0, 1, 2")]
    InvalidBeta(f64),

    #[error("invalid N = {0}: N = -2 has no power-law image")]
    InvalidN(i64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("shooting failed: {0}")]
    Shooting(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
