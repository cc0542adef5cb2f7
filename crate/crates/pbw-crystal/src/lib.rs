//! Crystal structures on Kostant partitions.
//!
//! This crate realizes the crystal of the lower half of a quantized
//! enveloping algebra, for the classical types, on tuples of non-negative
//! integers indexed by positive roots ("Lusztig data", equivalently Kostant
//! partitions). A reduced word of the longest Weyl group element induces a
//! convex order on the positive roots; crystal operators are computed either
//!
//! * by transporting data along braid-move paths between reduced words
//!   ([`crystal`]), using the exact piecewise-linear rank-2 transition maps
//!   ([`lusztig`]), or
//! * for simply braided words, by a fast bracketing rule ([`bracketing`])
//!   that combines one rank-2 calculation per nontrivial braid move.
//!
//! Both routes are kept and checked against each other; see [`verify`] for
//! the built-in equivalence and invariant sweeps, and the `examples/`
//! directory for runnable tours of each capability.
//!
//! Everything is exact integer arithmetic; all values are immutable after
//! construction and safe to share across threads.

pub mod bracketing;
pub mod crystal;
pub mod lusztig;
pub mod rootsys;
pub mod verify;
pub mod weyl;

pub use rootsys::{Node, Root, RootSystem, TypeLetter, TypeRank};
pub use weyl::{BraidMove, BraidPath, ConvexOrder, ReducedWord};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown type letter {0:?} (expected A, B, C or D)")]
    UnknownType(String),
    #[error("invalid rank {rank} for type {letter}")]
    InvalidRank {
        letter: rootsys::TypeLetter,
        rank: usize,
    },
    #[error("node index {node} out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("cannot parse root string {0:?}")]
    BadRootString(String),
    #[error("cannot parse word {0:?} (expected comma-separated node indices)")]
    BadWordString(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("word has length {len}, a reduced word of the longest element has length {expected}")]
    NotLongestWord { len: usize, expected: usize },
    #[error("root sequence is not the convex order of a reduced word")]
    NotConvexOrder,
    #[error("enumeration is not a permutation of the node set")]
    NotPermutation,
    #[error("not a good enumeration")]
    NotGoodEnumeration,
    #[error("hybrid prefix sets disagree before the cut root")]
    PrefixMismatch,
    #[error("no legal braid move at position {pos}")]
    IllegalMove { pos: usize },
    #[error("window at position {pos} does not match the expected rank-2 pattern")]
    WindowMismatch { pos: usize },
    #[error("counts length {len} does not match the number of positive roots {expected}")]
    CountsLength { len: usize, expected: usize },
    #[error("braid path does not start at the datum's word")]
    PathMismatch,
    #[error("plan search budget of {budget} visited orders exceeded")]
    SearchBudget { budget: usize },
    #[error("bracket plan does not match the datum's order")]
    PlanMismatch,
    #[error("operation {0:?} is not recognized (expected e.g. f2, e1, fstar3, estar2)")]
    BadOpSpec(String),
    #[error("datum file: {0}")]
    DatumFile(String),
}
