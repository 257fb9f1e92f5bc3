use thiserror::Error;

/// Errors surfaced by the library.
///
/// Verification routines report failing identities as data, not as errors;
/// the variants here are structural problems (bad input, broken invariants).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported type/rank: {0}")]
    Unsupported(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    /// Two induction rules assigned different AR-vertices to one root.
    #[error("inconsistent phi assignment: {0}")]
    InconsistentPhi(String),

    /// The phi closure terminated without covering every positive root.
    #[error("phi closure incomplete: {0}")]
    IncompletePhi(String),

    #[error("not divisible: {0}")]
    NotDivisible(String),

    /// Constant-term-free division of a truncated series failed.
    #[error("series not in the ideal of the linear form: {0}")]
    NotInIdeal(String),

    #[error("substituted series has a nonzero constant term")]
    NonzeroConstantTerm,

    /// The intertwiner system has kernel dimension != 1.
    #[error("intertwiner space has dimension {0}, expected 1")]
    NonUniqueIntertwiner(usize),

    #[error("intertwiner vanishes on the extremal vector")]
    ZeroIntertwiner,

    /// An R-matrix entry has a pole of order >= 2 at the expansion point.
    #[error("pole of order {order} at {point}: {context}")]
    PoleTooHigh {
        order: usize,
        point: String,
        context: String,
    },

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
