use std::fmt;

/// Command failure, mapped onto the process exit code.
#[derive(Debug)]
pub enum Failure {
    /// A verification tolerance was breached (exit 1).
    Verification(String),
    /// Bad flags, config file or output path (exit 2).
    Config(anyhow::Error),
    /// Numeric or domain failure in the solvers (exit 3).
    Numeric(anyhow::Error),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Config(_) => 2,
            Failure::Numeric(_) => 3,
        }
    }

    pub fn config(msg: impl fmt::Display) -> Self {
        Failure::Config(anyhow::anyhow!("{msg}"))
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Verification(msg) => write!(f, "verification failed: {msg}"),
            Failure::Config(e) => write!(f, "configuration error: {e:#}"),
            Failure::Numeric(e) => write!(f, "numeric failure: {e:#}"),
        }
    }
}

impl From<hulthen_core::Error> for Failure {
    fn from(e: hulthen_core::Error) -> Self {
        use hulthen_core::Error;
        match e {
            Error::Config { .. } | Error::Argument(_) => Failure::Config(e.into()),
            _ => Failure::Numeric(e.into()),
        }
    }
}

pub type CmdResult<T = ()> = Result<T, Failure>;
