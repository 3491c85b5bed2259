//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed graph data: {0}")]
    Malformed(String),
}

#[derive(Debug, Error)]
pub enum CycloError {
    #[error("conductor must be positive, got {0}")]
    InvalidConductor(u64),
    #[error("conductor {0} exceeds the supported maximum")]
    ConductorTooLarge(u64),
    #[error("coefficient vector too long for conductor {conductor}: {got} entries")]
    TooManyCoefficients { conductor: u64, got: usize },
    #[error("value is not fixed by complex conjugation")]
    NotReal,
    #[error("cannot parse cyclotomic value from {0:?}")]
    Parse(String),
}

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate spectrum: no nonzero eigenvalue")]
    DegenerateSpectrum,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("malformed spectrum data: {0}")]
    Malformed(String),
}

#[derive(Debug, Error)]
pub enum ThetaError {
    #[error("divisor has no constant term")]
    DivisorWithoutConstantTerm,
    #[error("not a product: {0}")]
    NotAProduct(String),
}

#[derive(Debug, Error)]
pub enum RecoveryError {
    #[error("invalid sampler: {0}")]
    InvalidSampler(String),
    #[error("recovery failure: {0}")]
    RecoveryFailure(String),
}

#[derive(Debug, Error)]
pub enum HearError {
    #[error("not a torus spectrum (recovered partial factor list {partial:?}): {reason}")]
    NotATorusSpectrum { partial: Vec<u64>, reason: String },
}

#[derive(Debug, Error)]
pub enum CirculantError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
