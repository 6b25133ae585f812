use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("closure too large: exceeded cap of {cap} elements")]
    ClosureTooLarge { cap: usize },

    #[error("invalid composition: associativity fails on ({a}, {b}, {c})")]
    InvalidComposition { a: String, b: String, c: String },

    #[error("not J-trivial: {x} and {y} generate the same two-sided ideal")]
    NotJTrivial { x: u32, y: u32 },

    #[error("not aperiodic: no idempotent power found for element {x}")]
    NotAperiodic { x: u32 },

    #[error("element id {id} out of range (monoid has {n} elements)")]
    BadElement { id: u32, n: usize },

    #[error("element {x} is not idempotent")]
    NotIdempotent { x: u32 },

    #[error("lift divergence: iteration cap {cap} exceeded")]
    LiftDivergence { cap: usize },

    #[error("too large for exact filtration: {n} elements exceeds cap {cap}")]
    FiltrationTooLarge { n: usize, cap: usize },

    #[error("not a lattice: {reason}")]
    NotALattice { reason: String },

    #[error("not a meet semi-lattice: elements {x} and {y} have no unique meet")]
    NotMeetSemilattice { x: usize, y: usize },

    #[error("{a} is not above {b} in the poset")]
    NotAbove { a: usize, b: usize },

    #[error("not join-closed: no unique maximal element of the set below {x}")]
    NotJoinClosed { x: usize },

    #[error("invalid poset: {reason}")]
    InvalidPoset { reason: String },

    #[error("Coxeter type {0} is out of scope (supported: A, B, D, I)")]
    UnsupportedCoxeterType(String),

    #[error("invalid Coxeter rank {rank} for type {ctype}")]
    BadCoxeterRank { ctype: String, rank: usize },

    #[error("size guard: {what} = {value} exceeds cap {cap}")]
    SizeGuard {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal property violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
