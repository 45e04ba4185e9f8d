use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order {0} is outside the supported range 3..=12")]
    InvalidOrder(usize),

    #[error("permutation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    Parse(String),

    #[error("link {link} is outside 2..={n}")]
    LinkOutOfRange { link: usize, n: usize },

    #[error("current node equals the target; there is no step to take")]
    NoStep,

    #[error("oriented routing is only defined for the fujita scheme, got {0}")]
    UnsupportedScheme(String),

    /// Raised when the router reaches a state its analysis rules out. This is
    /// a bug signal, not a user error.
    #[error("routing invariant violated: {0}")]
    InvariantViolation(String),

    #[error("rank {rank} is outside 0..{capacity}")]
    RankOutOfRange { rank: u64, capacity: u64 },

    #[error("order {n} exceeds the limit {limit} for {what}")]
    TooLarge {
        n: usize,
        limit: usize,
        what: &'static str,
    },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("{0}")]
    Argument(String),
}
