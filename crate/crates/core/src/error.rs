use thiserror::Error;

/// Errors raised by lattice construction and the checks built on top of it.
///
/// Element-carrying variants hold dense element indices; use
/// [`Lattice::name`](crate::Lattice::name) to render them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element index {index} out of range for {len} elements")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("cover relation is cyclic (element {0} lies on a cycle)")]
    NotAPoset(usize),

    #[error("elements {0} and {1} have no greatest common lower bound")]
    NotMeetSemilattice(usize, usize),

    #[error("poset has no unique minimal element")]
    NoBottom,

    #[error("lattice has no maximal element")]
    NoTop,

    #[error("operation requires joins, but the structure is only a meet-semilattice")]
    NotALattice,

    #[error("lattice is not ranked")]
    NotRanked,

    #[error("element {0} is not below element {1}")]
    NotComparable(usize, usize),

    #[error("family is empty")]
    EmptyFamily,

    #[error("element {0} is shattered by the family")]
    ElementIsShattered(usize),

    #[error("every non-realized witness below {0} has a vanishing Mobius value")]
    NoNonvanishingWitness(usize),

    #[error("family must differ from L and L minus its bottom")]
    ForbiddenFamily,

    #[error("exhaustive search needs 2^{elements} families, budget is {budget}")]
    BudgetExceeded { elements: usize, budget: u64 },

    #[error("element set is not a maximal antichain")]
    NotMaximalAntichain,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("factor {0} is not certified SSP")]
    FactorNotSsp(&'static str),

    #[error("expected exactly one minimal non-shattered element, found {0}")]
    NotOneMinimal(usize),

    #[error("lattice is not relatively complemented")]
    NotRc,

    #[error("structure too large: {0}")]
    TooLarge(String),

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("not a matroid: {0}")]
    NotAMatroid(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("ambient dimension {0} is too small (need at least 2)")]
    DimensionTooSmall(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
