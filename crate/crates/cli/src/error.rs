use std::fmt;

use tamarkin_core::Error;

/// Why a command failed. Malformed or inconsistent input exits with 2, a
/// well-formed input outside an operation's domain with 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Input(String),
    Domain(String),
}

impl Failure {
    pub fn input(msg: impl Into<String>) -> Self {
        Self::Input(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Input(_) => 2,
            Self::Domain(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Input(m) => write!(f, "invalid input: {m}"),
            Self::Domain(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for Failure {}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse(_)
            | Error::EmptyInterval(_)
            | Error::MalformedComplex(_)
            | Error::MalformedModel(_)
            | Error::InvalidPlan(_)
            | Error::Precondition(_) => Self::Input(msg),
            Error::NotTamarkin(_)
            | Error::MixedConvention
            | Error::UnsupportedPair(_)
            | Error::InstanceTooLarge(_)
            | Error::NotAManifold(_)
            | Error::NearSpectralValue(_)
            | Error::CoarseDiscretization(_)
            | Error::EmptySupport => Self::Domain(msg),
        }
    }
}

pub type Result<T, E = Failure> = std::result::Result<T, E>;
