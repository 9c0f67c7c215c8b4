//! Brute-force oracles: the exchange-axiom check and exhaustive censuses.
//!
//! Everything here is deliberately independent of the graph-based decision
//! procedures so the two can be played against each other in tests.

use std::collections::BTreeSet;

use crate::le::BasesSet;
use crate::sets::DepSet;
use crate::{Error, Result, CENSUS_BOUND};

/// Direct check of the bases exchange axiom: for all `B1, B2` and
/// `b1 ∈ B1\B2` there must be `b2 ∈ B2\B1` with `B1\{b1} ∪ {b2}` a basis.
/// An empty family is not a matroid.
pub fn brute_matroid_check(b: &BasesSet) -> bool {
    if b.is_empty() {
        return false;
    }
    for b1 in b.bases() {
        for b2 in b.bases() {
            for &x in b1 {
                if b2.contains(&x) {
                    continue;
                }
                let found = b2.iter().any(|&y| {
                    if b1.contains(&y) {
                        return false;
                    }
                    let exchanged: Vec<usize> =
                        b1.iter().copied().filter(|&z| z != x).chain([y]).collect();
                    b.contains(&exchanged)
                });
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusKind {
    Matroids,
    Nice,
}

/// Every dependency set on `[n]` whose complement is a matroid
/// (`CensusKind::Matroids`) or a positroid (`CensusKind::Nice`), generated
/// structurally: pick the loop set `T`, then partition the remaining elements
/// into complete components — arbitrary blocks for matroids, cyclic intervals
/// for nice sets.  Deduplicated and sorted, so counts are stable.
pub fn census(n: usize, kind: CensusKind) -> Result<Vec<DepSet>> {
    if n > CENSUS_BOUND {
        return Err(Error::SizeLimit {
            n,
            max: CENSUS_BOUND,
        });
    }
    let mut out: BTreeSet<DepSet> = BTreeSet::new();
    for t_mask in 0..(1u32 << n) {
        let loops: Vec<usize> = (1..=n).filter(|&v| t_mask & (1 << (v - 1)) != 0).collect();
        let rest: Vec<usize> = (1..=n).filter(|&v| t_mask & (1 << (v - 1)) == 0).collect();
        let partitions = match kind {
            CensusKind::Matroids => set_partitions(&rest),
            CensusKind::Nice => cyclic_interval_partitions(&rest),
        };
        for parts in partitions {
            let mut raw: Vec<(usize, usize)> = Vec::new();
            for part in &parts {
                for (i, &a) in part.iter().enumerate() {
                    for &b in &part[i + 1..] {
                        raw.push((a, b));
                    }
                }
            }
            for &v in &loops {
                for w in 1..=n {
                    if w != v {
                        raw.push((v, w));
                    }
                }
            }
            out.insert(DepSet::new(n, &raw).expect("generated pairs are in range"));
        }
    }
    Ok(out.into_iter().collect())
}

/// All partitions of `elements` into nonempty blocks.
pub fn set_partitions(elements: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(
        elements: &[usize],
        idx: usize,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if idx == elements.len() {
            out.push(blocks.clone());
            return;
        }
        let x = elements[idx];
        for b in 0..blocks.len() {
            blocks[b].push(x);
            rec(elements, idx + 1, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![x]);
        rec(elements, idx + 1, blocks, out);
        blocks.pop();
    }
    rec(elements, 0, &mut blocks, &mut out);
    out
}

/// All partitions of `elements` (taken in cyclic order) into consecutive
/// cyclic intervals.  The partition with a single block is the whole cycle.
pub fn cyclic_interval_partitions(elements: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let m = elements.len();
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // a nonempty set of cut positions yields one block per cut
    for cut_mask in 0u32..(1 << m) {
        if cut_mask == 0 {
            out.push(vec![elements.to_vec()]);
            continue;
        }
        let cuts: Vec<usize> = (0..m).filter(|&p| cut_mask & (1 << p) != 0).collect();
        let mut blocks = Vec::with_capacity(cuts.len());
        for (ci, &start) in cuts.iter().enumerate() {
            let end = if ci + 1 < cuts.len() {
                cuts[ci + 1]
            } else {
                cuts[0] + m
            };
            let mut block: Vec<usize> = (start..end).map(|p| elements[p % m]).collect();
            block.sort_unstable();
            blocks.push(block);
        }
        out.push(blocks);
    }
    out
}

/// Every subset of the 2-subsets of `[n]`, canonicalized.  Exponential in
/// `n(n-1)/2`; refused beyond `n = 6`.
pub fn all_depsets(n: usize) -> Result<Vec<DepSet>> {
    const MAX: usize = 6;
    if n > MAX {
        return Err(Error::SizeLimit { n, max: MAX });
    }
    let all: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::with_capacity(1 << all.len());
    for mask in 0u64..(1 << all.len()) {
        let pairs: Vec<(usize, usize)> = all
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &p)| p)
            .collect();
        out.push(DepSet::new(n, &pairs).expect("pairs are in range"));
    }
    Ok(out)
}
