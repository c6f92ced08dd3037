use thiserror::Error;

use crate::ngon::Chord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polygon needs between 4 and {max} vertices, got {n}")]
    PolygonSize { n: usize, max: usize },

    #[error("{i},{j} is not a chord of the {n}-gon")]
    InvalidChord { n: usize, i: usize, j: usize },

    #[error("chords {0} and {1} must be distinct")]
    SameChord(Chord, Chord),

    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { n: usize, label: usize },

    #[error("not a permutation of 1..={n}: {word:?}")]
    NotAPermutation { n: usize, word: Vec<usize> },

    #[error("invalid interval partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("malformed sign pattern: {0}")]
    MalformedPattern(String),

    #[error("enumeration for n = {n} exceeds the cap n <= {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("transposition needs two distinct positions, got {0} twice")]
    DegenerateTransposition(usize),

    #[error("exponent matrix is not invertible over the integers")]
    NotUnimodular,

    #[error("zero value supplied for chord {0}")]
    ZeroValue(Chord),

    #[error("exponent {0} too large to evaluate")]
    ExponentOverflow(String),

    #[error("cross-ratio indices must be pairwise distinct: {0:?}")]
    RepeatedIndex([usize; 4]),

    #[error("points {0} and {1} coincide")]
    DegenerateConfig(usize, usize),

    #[error("values violate the u-relations")]
    RelationViolation,

    #[error("sign pattern is inconsistent with the extended u-relations")]
    InconsistentInput,

    #[error("solver exceeded {bound} iterations")]
    IterationBoundExceeded {
        bound: usize,
        trace: Box<crate::solver::SolverTrace>,
    },

    #[error("sign matrix is not a strict total order ({0} and {1} incomparable)")]
    IntransitiveOrder(usize, usize),

    #[error("pattern has no negative chord")]
    AllPlus,

    #[error("document error: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
