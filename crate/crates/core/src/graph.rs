//! Dependency graphs and the polygon tests behind matroid/positroid checks.
//!
//! A dependency set induces a simple graph on the non-loop elements.  The
//! complement of the set is a matroid exactly when every connected component
//! of this graph is complete, and a positroid exactly when, in addition,
//! every component occupies a cyclic interval of the surviving polygon.

use std::collections::BTreeMap;

use crate::sets::DepSet;
use crate::{Error, Result, ENUMERATION_BOUND};

/// The simple graph on `[n]` minus the loops, edges being the dependent pairs
/// among non-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepGraph {
    n: usize,
    vanishing: Vec<usize>,
    adjacency: BTreeMap<usize, Vec<usize>>,
}

impl DepGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The loops (vanishing columns), increasing.
    pub fn vanishing(&self) -> &[usize] {
        &self.vanishing
    }

    /// Sorted neighbor list of each non-loop vertex.
    pub fn adjacency(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.adjacency
    }

    /// Non-loop vertices in increasing order; also the cyclic order of the
    /// polygon.
    pub fn vertices(&self) -> Vec<usize> {
        self.adjacency.keys().copied().collect()
    }
}

/// Connected components of the dependency graph, cyclically ordered by their
/// smallest vertex under the cut at the smallest non-loop.  Singletons count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<Vec<usize>>,
    pub is_complete: Vec<bool>,
    pub is_cyclic_interval: Vec<bool>,
}

impl ComponentDecomposition {
    /// Number of connected components.
    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn all_complete(&self) -> bool {
        self.is_complete.iter().all(|&b| b)
    }

    pub fn all_cyclic_intervals(&self) -> bool {
        self.is_cyclic_interval.iter().all(|&b| b)
    }
}

/// How a component sits on the polygon: `outside` holds the components of the
/// polygon minus the vertex set, `inside` the maximal cyclic runs of the
/// vertex set itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitData {
    pub outside: Vec<Vec<usize>>,
    pub inside: Vec<Vec<usize>>,
    /// Set when the component covers every polygon vertex; `outside` is then
    /// empty while `inside` is the whole polygon.
    pub covers_all: bool,
}

/// Builds the graph together with its component decomposition.
pub fn build_graph(d: &DepSet) -> (DepGraph, ComponentDecomposition) {
    let vanishing = d.loops();
    let vertices = d.non_loops();
    let mut adjacency: BTreeMap<usize, Vec<usize>> =
        vertices.iter().map(|&v| (v, Vec::new())).collect();
    for p in d.iter() {
        if adjacency.contains_key(&p.lo()) && adjacency.contains_key(&p.hi()) {
            adjacency.get_mut(&p.lo()).unwrap().push(p.hi());
            adjacency.get_mut(&p.hi()).unwrap().push(p.lo());
        }
    }
    for nbrs in adjacency.values_mut() {
        nbrs.sort_unstable();
    }

    let components = d.non_loop_components();
    let is_complete = components
        .iter()
        .map(|comp| {
            comp.iter()
                .enumerate()
                .all(|(i, &a)| comp[i + 1..].iter().all(|&b| d.contains(a, b)))
        })
        .collect();
    let is_cyclic_interval = components
        .iter()
        .map(|comp| cyclic_runs(&vertices, comp).len() <= 1)
        .collect();

    (
        DepGraph {
            n: d.n(),
            vanishing,
            adjacency,
        },
        ComponentDecomposition {
            components,
            is_complete,
            is_cyclic_interval,
        },
    )
}

/// Number of connected components of the dependency graph.
pub fn component_count(d: &DepSet) -> usize {
    d.non_loop_components().len()
}

/// Maximal runs of `members` along the cyclic order of `polygon`, each run
/// sorted, runs ordered by where they start on the polygon.  A run that is
/// the whole polygon comes back as a single entry.
pub(crate) fn cyclic_runs(polygon: &[usize], members: &[usize]) -> Vec<Vec<usize>> {
    let m = polygon.len();
    if m == 0 || members.is_empty() {
        return Vec::new();
    }
    let member_at: Vec<bool> = polygon
        .iter()
        .map(|v| members.binary_search(v).is_ok())
        .collect();
    if member_at.iter().all(|&b| b) {
        return vec![polygon.to_vec()];
    }
    let mut runs = Vec::new();
    for start in 0..m {
        let pred = (start + m - 1) % m;
        if member_at[start] && !member_at[pred] {
            let mut run = Vec::new();
            let mut p = start;
            while member_at[p] {
                run.push(polygon[p]);
                p = (p + 1) % m;
            }
            run.sort_unstable();
            runs.push(run);
        }
    }
    runs
}

/// True when every component of the dependency graph is complete, i.e. the
/// complement is the bases family of a matroid.
pub fn is_matroid(d: &DepSet) -> bool {
    build_graph(d).1.all_complete()
}

/// True when the complement is a positroid: every component is complete and
/// occupies a cyclic interval of the polygon on the non-loops.
pub fn is_nice(d: &DepSet) -> bool {
    let (graph, decomposition) = build_graph(d);
    let by_intervals = decomposition.all_complete() && decomposition.all_cyclic_intervals();

    // Independent route: no component may disconnect the polygon.
    let vertices = graph.vertices();
    let by_polygon = decomposition.all_complete()
        && decomposition.components.iter().all(|comp| {
            let rest: Vec<usize> = vertices
                .iter()
                .copied()
                .filter(|v| comp.binary_search(v).is_err())
                .collect();
            cyclic_runs(&vertices, &rest).len() <= 1
        });
    debug_assert_eq!(by_intervals, by_polygon);
    by_intervals
}

/// Splits the polygon along one component: the components of the polygon
/// minus `component` and the cyclic runs of `component` itself.
pub fn split(d: &DepSet, component: &[usize]) -> Result<SplitData> {
    let decomposition = build_graph(d).1;
    let mut sorted = component.to_vec();
    sorted.sort_unstable();
    if !decomposition.components.contains(&sorted) {
        return Err(Error::NotAComponent);
    }
    let vertices = d.non_loops();
    let rest: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|v| sorted.binary_search(v).is_err())
        .collect();
    let covers_all = rest.is_empty();
    let outside = cyclic_runs(&vertices, &rest);
    let inside = cyclic_runs(&vertices, &sorted);
    debug_assert!(covers_all || outside.len() == inside.len());
    Ok(SplitData {
        outside,
        inside,
        covers_all,
    })
}

/// Component counter over bitmasks of removed vertices, with the vertices
/// that become adjacent to everything treated as loops.
struct MaskComponents {
    m: usize,
    adj: Vec<u32>,
}

impl MaskComponents {
    fn new(d: &DepSet) -> (Vec<usize>, Self) {
        let vertices = d.non_loops();
        let m = vertices.len();
        let mut adj = vec![0u32; m];
        for p in d.iter() {
            if let (Ok(a), Ok(b)) = (
                vertices.binary_search(&p.lo()),
                vertices.binary_search(&p.hi()),
            ) {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        (vertices, MaskComponents { m, adj })
    }

    /// Components of the graph restricted to `world`, after discarding the
    /// vertices adjacent to all of `world` (they are loops of the enlarged
    /// set, not graph vertices).
    fn count(&self, world: u32) -> usize {
        let mut live = world;
        for v in 0..self.m {
            let bit = 1u32 << v;
            if world & bit != 0 && self.adj[v] & world == world & !bit {
                live &= !bit;
            }
        }
        let mut seen = 0u32;
        let mut components = 0;
        for v in 0..self.m {
            let bit = 1u32 << v;
            if live & bit == 0 || seen & bit != 0 {
                continue;
            }
            components += 1;
            let mut stack = vec![v];
            seen |= bit;
            while let Some(u) = stack.pop() {
                let mut frontier = self.adj[u] & live & !seen;
                seen |= frontier;
                while frontier != 0 {
                    let w = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    stack.push(w);
                }
            }
        }
        components
    }
}

/// All vertex sets `T` such that deleting `T` raises the component count
/// strictly above what deleting any proper subset achieves — equivalently,
/// every member of `T` is a cut-point of the graph with the rest of `T`
/// removed.  The empty set always qualifies.
///
/// The family is not downward closed, so this enumerates every subset of the
/// non-loops and checks the defining inequality directly, memoizing the
/// component counts.
pub fn t_family(d: &DepSet) -> Result<Vec<Vec<usize>>> {
    if d.n() > ENUMERATION_BOUND {
        return Err(Error::SizeLimit {
            n: d.n(),
            max: ENUMERATION_BOUND,
        });
    }
    let (vertices, counter) = MaskComponents::new(d);
    let m = vertices.len();
    let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut counts = vec![0u8; 1 << m];
    for removed in 0..(1u32 << m) {
        counts[removed as usize] = counter.count(full & !removed) as u8;
    }
    let mut family = Vec::new();
    for removed in 0..(1u32 << m) {
        let c = counts[removed as usize];
        let mut bits = removed;
        let mut ok = true;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            if c <= counts[(removed & !(1 << v)) as usize] {
                ok = false;
                break;
            }
        }
        if ok {
            let t: Vec<usize> = (0..m)
                .filter(|&v| removed & (1 << v) != 0)
                .map(|v| vertices[v])
                .collect();
            family.push(t);
        }
    }
    family.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(family)
}

/// DOT rendering: the polygon as a dashed cycle, dependent pairs among the
/// non-loops as solid edges, loops omitted.
pub fn dot_graph(d: &DepSet) -> String {
    let vertices = d.non_loops();
    let mut out = String::from("graph dependency {\n");
    for v in &vertices {
        out.push_str(&format!("  {v};\n"));
    }
    let m = vertices.len();
    if m == 2 {
        out.push_str(&format!(
            "  {} -- {} [style=dashed];\n",
            vertices[0], vertices[1]
        ));
    } else if m > 2 {
        for i in 0..m {
            out.push_str(&format!(
                "  {} -- {} [style=dashed];\n",
                vertices[i],
                vertices[(i + 1) % m]
            ));
        }
    }
    for p in d.iter() {
        if vertices.binary_search(&p.lo()).is_ok() && vertices.binary_search(&p.hi()).is_ok() {
            out.push_str(&format!("  {} -- {};\n", p.lo(), p.hi()));
        }
    }
    out.push_str("}\n");
    out
}
