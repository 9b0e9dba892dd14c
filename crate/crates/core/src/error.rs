use alloc::string::String;

/// Errors raised by the calculus.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty interval: {0}")]
    EmptyInterval(String),
    #[error("bar {0} is not of Tamarkin type [a,b)")]
    NotTamarkin(String),
    #[error("barcode mixes left-closed and right-closed bars")]
    MixedConvention,
    #[error("unsupported interval pair for this table: {0}")]
    UnsupportedPair(String),
    #[error("malformed stratification model: {0}")]
    MalformedModel(String),
    #[error("instance too large for the exhaustive oracle: {0}")]
    InstanceTooLarge(String),
    #[error("invalid morphism plan: {0}")]
    InvalidPlan(String),
    #[error("malformed simplicial complex: {0}")]
    MalformedComplex(String),
    #[error("complex is not a closed orientable manifold: {0}")]
    NotAManifold(String),
    #[error("T = {0} is within the exclusion band of a spectral value")]
    NearSpectralValue(String),
    #[error("discretization too coarse: {0}")]
    CoarseDiscretization(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("front region has empty support")]
    EmptySupport,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
