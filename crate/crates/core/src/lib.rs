//! Dihedral coordinates on the real moduli space of points on the projective
//! line: u-relations, sign patterns, monomial chart changes, and recovery of
//! the dihedral ordering of a sign pattern.

pub mod diagram;
pub mod document;
pub mod error;
pub mod monomial;
pub mod ngon;
pub mod oracle;
pub mod signs;
pub mod solver;
pub mod urelations;
pub mod verify;

pub use error::{Error, Result};
pub use monomial::{compose, elementary_map, map_for_ordering, map_for_transposition, MonomialMap, SignedMonomial};
pub use ngon::{canonicalize, Chord, DihedralOrdering, IntervalPartition, Polygon, MAX_N};
pub use signs::{shortest_negative, sign_of_ordering, stats, transport, TieBreak};
pub use solver::{ordering_from_p, reconstruct_p, solve, SignMatrix, SolveOptions, Solver, SolverTrace};
pub use urelations::{enumerate_consistent, is_consistent, RelationSet, SignPattern};
pub use document::PatternDocument;
