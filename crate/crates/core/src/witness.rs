//! Exact 2×n witness matrices certifying nice sets.
//!
//! The arithmetic is generic over any ordered signed ring via `num-traits`;
//! the crate-level [`Rational`] alias instantiates it with arbitrary-precision
//! rationals.  Floating point has no business here: every minor sign is
//! decided exactly.

use num_traits::{FromPrimitive, Signed};

use crate::graph::{build_graph, is_nice};
use crate::sets::DepSet;
use crate::{Error, Result};

/// Exact scalar used by the default witness matrices.
pub type Rational = num_rational::BigRational;

/// A 2×n matrix stored column-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessMatrix<T = Rational> {
    columns: Vec<[T; 2]>,
}

impl<T: Clone + Signed + PartialOrd> WitnessMatrix<T> {
    pub fn new(columns: Vec<[T; 2]>) -> Self {
        WitnessMatrix { columns }
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[[T; 2]] {
        &self.columns
    }

    /// The 2×2 minor of columns `i < j` (1-indexed).
    pub fn minor(&self, i: usize, j: usize) -> T {
        let a = &self.columns[i - 1];
        let b = &self.columns[j - 1];
        a[0].clone() * b[1].clone() - b[0].clone() * a[1].clone()
    }
}

/// Checks a witness against a dependency set: every ordered minor must be
/// strictly positive off the set and exactly zero on it.
pub fn verify_witness<T: Clone + Signed + PartialOrd>(
    m: &WitnessMatrix<T>,
    d: &DepSet,
) -> Result<bool> {
    if m.n() != d.n() {
        return Err(Error::DimensionMismatch {
            expected: d.n(),
            found: m.n(),
        });
    }
    for i in 1..=d.n() {
        for j in (i + 1)..=d.n() {
            let det = m.minor(i, j);
            let ok = if d.contains(i, j) {
                det.is_zero()
            } else {
                det.is_positive()
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Builds an exact witness for a nice set of rank 2.
///
/// Loops become zero columns.  A cyclic shift is chosen so that no component
/// wraps past `n`; in the shifted order the column of each non-loop is
/// `(1, t)` with `t` the rank of its component; shifting back negates the
/// columns that moved past position `n` (the rank-2 cyclic action sends
/// `(v_1,..,v_n)` to `(v_2,..,v_n,-v_1)`).
pub fn realize_nice<T>(d: &DepSet) -> Result<WitnessMatrix<T>>
where
    T: Clone + Signed + PartialOrd + FromPrimitive,
{
    if !is_nice(d) {
        return Err(Error::NotNice);
    }
    let decomposition = build_graph(d).1;
    if decomposition.count() <= 1 {
        return Err(Error::RankDeficient);
    }
    let n = d.n();
    let component_of = |v: usize| {
        decomposition
            .components
            .iter()
            .position(|c| c.binary_search(&v).is_ok())
    };

    // smallest shift whose first and last non-loop lie in different
    // components; exists because there are at least two components
    let shift = (0..n)
        .find(|&s| {
            let order: Vec<usize> = (0..n).map(|p| (p + s) % n + 1).collect();
            let first = order.iter().find_map(|&x| component_of(x));
            let last = order.iter().rev().find_map(|&x| component_of(x));
            first != last
        })
        .expect("a rank-2 nice set admits a non-wrapping shift");

    let zero = T::zero();
    let one = T::one();
    let mut columns: Vec<[T; 2]> = vec![[zero.clone(), zero.clone()]; n];
    let mut rank: i64 = -1;
    let mut previous: Option<usize> = None;
    for p in 0..n {
        let x = (p + shift) % n + 1;
        let Some(comp) = component_of(x) else {
            continue; // loop: zero column
        };
        if previous != Some(comp) {
            rank += 1;
            previous = Some(comp);
        }
        let t = T::from_i64(rank).expect("small integer fits the scalar");
        columns[x - 1] = if x <= shift {
            [-one.clone(), -t] // wrapped past n, pick up the sign
        } else {
            [one.clone(), t]
        };
    }
    let witness = WitnessMatrix::new(columns);
    debug_assert_eq!(verify_witness(&witness, d), Ok(true));
    Ok(witness)
}
