use thiserror::Error;

/// Errors surfaced by the kernel. Domain violations are reported, never
/// silently coerced: the whole point of the crate is that every number is
/// exact and every precondition is checked.
#[derive(Debug, Error)]
pub enum KernelError {
    #[error("vertex index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("weight {0} is not integral")]
    NonIntegral(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not Levi-dominant (negative coefficient off the marked vertex)")]
    NotLeviDominant(String),

    #[error("reflection closure exceeded the hard bound ({0} weights); bad Cartan data")]
    ClosureBound(usize),

    #[error("descent/reflection loop exceeded its bound of {0} steps")]
    IterationBound(usize),

    #[error("expected an exact integer, got {0}")]
    NonIntegralValue(String),

    #[error("tensor twist coefficient {0} is not an integer; charge bookkeeping is broken")]
    NonIntegralTwist(String),

    #[error("dimension cap exceeded: {0} > {1}")]
    DimensionCap(u128, u128),

    #[error("unknown named bundle {0:?}")]
    UnknownBundle(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("script error: {0}")]
    Script(String),

    #[error("invalid collection spec: {0}")]
    InvalidSpec(String),

    #[error("numeric overflow in {0}")]
    Overflow(&'static str),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, KernelError>;
