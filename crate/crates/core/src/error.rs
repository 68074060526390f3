use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Gamma function evaluated at zero or a negative integer.
    #[error("pole of the gamma function at {0}")]
    Pole(f64),

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("closed-form evaluation requires fading parameter m = 2 (got m = {0})")]
    RequiresM2(f64),

    #[error("quadrature did not converge after {subdivisions} subdivisions (estimate {estimate:e}, error {error:e})")]
    NonConvergence {
        subdivisions: usize,
        estimate: f64,
        error: f64,
    },

    #[error("could not bracket a sign change of G below gamma0 = {cap}")]
    BracketFailure { cap: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(
        "arrival rate {mu:e} bit/s exceeds the effective capacity {capacity:e} bit/s at gamma0 = 0"
    )]
    InfeasibleRate { mu: f64, capacity: f64 },

    #[error("delay bound D_max is required for this operation")]
    MissingDelayBound,

    #[error("queue overflow at slot {slot}: backlog {backlog:e} bits exceeds guard")]
    QueueOverflow { slot: u64, backlog: f64 },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
