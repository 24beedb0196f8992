use thiserror::Error;

/// Errors raised by the solver library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("complex NU branch: {constant} = {value} < 0")]
    ComplexBranch { constant: &'static str, value: f64 },

    #[error("c3 = 0 is not supported by the parametric NU shortcut")]
    UnsupportedBranch,

    #[error("tau'(s) = {0} is not negative")]
    TauNotDecreasing(f64),

    #[error("non-normalizable NU factor: {constant} = {value}")]
    NonNormalizableFactor { constant: &'static str, value: f64 },

    #[error("complex angular index: m^2 + 2(E+M)(alpha+beta) = {0} < 0")]
    ComplexAngularIndex(f64),

    #[error("no real orbital parameter: radicand {0} < 0")]
    NoRealOrbital(f64),

    #[error("negative-branch root at E = {0} has no normalizable wavefunction")]
    NonNormalizableBranch(f64),

    #[error("singular point: {0}")]
    Singular(String),

    #[error("no sign change in bracket [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("quadrature did not converge (estimate {estimate}, error {error})")]
    Quadrature { estimate: f64, error: f64 },

    #[error("config line {line}: {detail}")]
    Config { line: usize, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        func,
        detail: detail.into(),
    }
}
