//! A toolkit for rank-2 positroids on a cyclically ordered ground set.
//!
//! A collection of "dependent" 2-subsets of `{1,..,n}` describes which column
//! pairs of a real 2×n matrix are linearly dependent.  This crate decides when
//! such a collection comes from a matroid or a positroid (a matroid realizable
//! with all non-negative 2-minors), converts between bases, Grassmann
//! necklaces and Le diagrams, enumerates the maximal matroids and positroids
//! containing a given collection, and computes dimensions, boundaries and
//! intersections of the associated cells in the non-negative Grassmannian of
//! lines.  Every certificate is exact: witness matrices use rational
//! arithmetic and the brute-force oracles never approximate.

pub mod cells;
pub mod enumeration;
pub mod graph;
pub mod json;
pub mod le;
pub mod oracle;
pub mod sets;
pub mod witness;

pub use cells::{dimension, dualize, intersection_mpos, Boundary, CellInfo};
pub use enumeration::{includes, mat_maximal, mpos, pos_enumerate, positroid_order};
pub use graph::{
    build_graph, is_matroid, is_nice, split, t_family, ComponentDecomposition, DepGraph, SplitData,
};
pub use le::{BasesSet, GrassmannNecklace, LeDiagram, LeNetwork};
pub use sets::{DepSet, GroundSet, Pair, Relabeling};
pub use witness::{realize_nice, verify_witness, Rational, WitnessMatrix};

/// Largest ground set accepted by the subset-enumeration routines
/// (`t_family` and everything built on it).
pub const ENUMERATION_BOUND: usize = 14;

/// Largest ground set accepted by the structural censuses.
pub const CENSUS_BOUND: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("element {value} is outside the ground set [{n}]")]
    OutOfRange { value: usize, n: usize },
    #[error("pair ({value},{value}) has equal entries")]
    DegeneratePair { value: usize },
    #[error("the two vertex sets overlap")]
    Overlap,
    #[error("vertex set is not a connected component of the graph")]
    NotAComponent,
    #[error("ground set of size {n} exceeds the enumeration bound {max}")]
    SizeLimit { n: usize, max: usize },
    #[error("dependent set is not a matroid (some component is incomplete)")]
    NotAMatroid,
    #[error("dependent set is not nice (complement is not a positroid)")]
    NotNice,
    #[error("rank below 2: fewer than two components among the non-loops")]
    RankDeficient,
    #[error("bases collection is empty")]
    EmptyBases,
    #[error("prescribed box ({row},{col}) lies outside the diagram shape")]
    BoxOutsideShape { row: usize, col: usize },
    #[error("diagram violates the Le condition")]
    NotLe,
    #[error("expected {expected} columns, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live on different ground sets ({0} vs {1})")]
    MixedGroundSets(usize, usize),
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
}

pub type Result<T> = std::result::Result<T, Error>;
