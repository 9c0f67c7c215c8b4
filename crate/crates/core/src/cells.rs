//! Dimensions, boundaries and intersections of positroid cells.
//!
//! A nice dependency set with at least two components describes a cell of the
//! non-negative Grassmannian of lines; its dimension is
//! `n - #loops + #components - 4`.  Codimension-one boundaries arise in
//! exactly two ways: merge two cyclically consecutive components, or turn one
//! vertex of a component of size at least two into a loop.

use std::collections::BTreeSet;

use crate::enumeration::{mat_maximal, mpos};
use crate::graph::{build_graph, is_nice};
use crate::le::BasesSet;
use crate::sets::DepSet;
use crate::{Error, Result};

/// A nice dependency set together with its cached decomposition and cell
/// dimension (`None` when the rank degenerates below 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellInfo {
    pub dep: DepSet,
    pub loops: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub dim: Option<usize>,
}

impl CellInfo {
    pub fn new(dep: DepSet) -> CellInfo {
        let (graph, decomposition) = build_graph(&dep);
        let dim = dimension(&dep).ok();
        CellInfo {
            loops: graph.vanishing().to_vec(),
            components: decomposition.components,
            dim,
            dep,
        }
    }
}

/// Cell dimension `n - #loops + #components - 4` of a nice set of rank 2.
pub fn dimension(d: &DepSet) -> Result<usize> {
    if !is_nice(d) {
        return Err(Error::NotNice);
    }
    let (graph, decomposition) = build_graph(d);
    let c = decomposition.count();
    if c <= 1 {
        return Err(Error::RankDeficient);
    }
    Ok(d.n() - graph.vanishing().len() + c - 4)
}

/// Codimension-one boundary of a cell, split into honest cells and the
/// degenerate members whose component count collapsed to one (the empty
/// positroid, which has no cell dimension).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Boundary {
    pub cells: Vec<DepSet>,
    pub degenerate: Vec<DepSet>,
}

/// All positroids one dimension below the given cell: merges of cyclically
/// consecutive components plus single-vertex vanishings inside components of
/// size at least two.
pub fn boundary_codim1(d: &DepSet) -> Result<Boundary> {
    let dim = dimension(d)?;
    let components = build_graph(d).1.components;
    let m = components.len();
    let mut cells: BTreeSet<DepSet> = BTreeSet::new();
    let mut degenerate: BTreeSet<DepSet> = BTreeSet::new();
    for i in 0..m {
        let next = (i + 1) % m;
        if next == i {
            continue;
        }
        let merged = d
            .connect(&components[i], &components[next])
            .expect("distinct components are disjoint");
        if build_graph(&merged).1.count() <= 1 {
            degenerate.insert(merged);
        } else {
            cells.insert(merged);
        }
    }
    for comp in &components {
        if comp.len() > 1 {
            for &v in comp {
                cells.insert(d.add_vanishing(&[v]).expect("vertex is in range").closure());
            }
        }
    }
    for f in &cells {
        debug_assert!(is_nice(f));
        debug_assert_eq!(dimension(f), Ok(dim - 1));
    }
    Ok(Boundary {
        cells: cells.into_iter().collect(),
        degenerate: degenerate.into_iter().collect(),
    })
}

/// Iterates [`boundary_codim1`] `k` times with per-level deduplication.
/// Degenerate members are pruned from the expansion (nothing lies above the
/// empty positroid) and reported separately.
pub fn boundary_codimk(d: &DepSet, k: usize) -> Result<Boundary> {
    dimension(d)?;
    let mut frontier: BTreeSet<DepSet> = BTreeSet::from([d.clone()]);
    let mut degenerate: BTreeSet<DepSet> = BTreeSet::new();
    for _ in 0..k {
        let mut next: BTreeSet<DepSet> = BTreeSet::new();
        for f in &frontier {
            let level = boundary_codim1(f)?;
            next.extend(level.cells);
            degenerate.extend(level.degenerate);
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(Boundary {
        cells: frontier.into_iter().collect(),
        degenerate: degenerate.into_iter().collect(),
    })
}

/// The maximal positroids in the common boundary of several cells: exactly
/// the maximal matroids above the union of the dependent sets.
pub fn intersection_mpos(ds: &[DepSet]) -> Result<Vec<DepSet>> {
    let (first, rest) = ds.split_first().ok_or(Error::EmptyBases)?;
    for d in ds {
        if !is_nice(d) {
            return Err(Error::NotNice);
        }
    }
    let mut union = first.clone();
    for d in rest {
        union = union.union(d)?;
    }
    let result = mat_maximal(&union)?;
    #[cfg(debug_assertions)]
    {
        assert_eq!(result, mpos(&union)?);
        assert!(result.iter().all(is_nice));
    }
    Ok(result)
}

/// Bases of the dual matroid: complements in `[n]`; an involution swapping
/// rank `k` with rank `n-k`.
pub fn dualize(b: &BasesSet) -> Result<BasesSet> {
    if b.is_empty() {
        return Err(Error::EmptyBases);
    }
    let n = b.n();
    let duals: Vec<Vec<usize>> = b
        .bases()
        .iter()
        .map(|basis| {
            (1..=n)
                .filter(|x| basis.binary_search(x).is_err())
                .collect()
        })
        .collect();
    BasesSet::new(n, n - b.k(), duals)
}

/// DOT rendering of the closure poset below a cell: one node per cell
/// reachable by iterated codimension-one boundaries, one arc per
/// codimension-one relation.
pub fn poset_dot(d: &DepSet) -> Result<String> {
    dimension(d)?;
    let mut nodes: BTreeSet<DepSet> = BTreeSet::from([d.clone()]);
    let mut edges: BTreeSet<(DepSet, DepSet)> = BTreeSet::new();
    let mut frontier: BTreeSet<DepSet> = nodes.clone();
    while !frontier.is_empty() {
        let mut next: BTreeSet<DepSet> = BTreeSet::new();
        for f in &frontier {
            for g in boundary_codim1(f)?.cells {
                edges.insert((f.clone(), g.clone()));
                if nodes.insert(g.clone()) {
                    next.insert(g);
                }
            }
        }
        frontier = next;
    }
    let ordered: Vec<&DepSet> = nodes.iter().collect();
    let id_of = |x: &DepSet| format!("c{}", ordered.iter().position(|y| *y == x).unwrap());
    let mut out = String::from("digraph boundary_poset {\n  rankdir=TB;\n");
    for node in &ordered {
        let pairs: Vec<String> = node
            .iter()
            .map(|p| format!("{}{}", p.lo(), p.hi()))
            .collect();
        let label = if pairs.is_empty() {
            "{}".to_string()
        } else {
            format!("{{{}}}", pairs.join(" "))
        };
        out.push_str(&format!(
            "  {} [label=\"dim {}: {}\"];\n",
            id_of(node),
            dimension(node).expect("poset nodes are cells"),
            label
        ));
    }
    for (from, to) in &edges {
        out.push_str(&format!("  {} -> {};\n", id_of(from), id_of(to)));
    }
    out.push_str("}\n");
    Ok(out)
}
