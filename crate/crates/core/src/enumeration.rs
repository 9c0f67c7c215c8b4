//! Maximal matroids and positroids above a dependency set.
//!
//! `mat_maximal` reads the answer off the cut-point family; `pos_enumerate`
//! runs the worklist algorithm that repeatedly repairs components whose
//! vertex set disconnects the polygon, either by connecting the component to
//! one of the polygon arcs it cut off or by turning one of its own cyclic
//! runs into loops; `mpos` combines the two and filters to the maximal
//! members.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Mutex;

use crate::graph::{build_graph, cyclic_runs, is_matroid, is_nice, t_family};
use crate::sets::{DepSet, Relabeling};
use crate::{Error, Result};

/// Keeps only the sets that contain no other member strictly; on dependent
/// sets this selects the inclusion-maximal matroids/positroids.
fn inclusion_minimal(mut sets: Vec<DepSet>) -> Vec<DepSet> {
    sets.sort_unstable();
    sets.dedup();
    let minimal: Vec<DepSet> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| t.len() < s.len() && t.is_subset_of(s)))
        .cloned()
        .collect();
    minimal
}

/// The maximal matroids whose dependent sets contain `d`: the closures of
/// `d + T` over the cut-point family, reduced to inclusion-minimal dependent
/// sets.  The reduction only ever removes the degenerate all-pairs member;
/// the surviving family is an antichain.
pub fn mat_maximal(d: &DepSet) -> Result<Vec<DepSet>> {
    let family = t_family(d)?;
    let closures: Vec<DepSet> = family
        .iter()
        .map(|t| d.add_vanishing(t).expect("family stays in range").closure())
        .collect();
    let minimal = inclusion_minimal(closures);
    debug_assert!(minimal
        .iter()
        .all(|a| minimal.iter().all(|b| a == b || !a.is_subset_of(b))));
    Ok(minimal)
}

/// One worklist step: either the set is nice (emit it) or every component
/// that disconnects the polygon spawns the repaired supersets.  Worklist
/// members are matroids (closures), so completeness needs no re-checking.
fn expand(f: &DepSet) -> (bool, Vec<DepSet>) {
    let components = f.non_loop_components();
    let vertices = f.non_loops();
    let mut children = Vec::new();
    let mut nice = true;
    for comp in &components {
        let rest: Vec<usize> = vertices
            .iter()
            .copied()
            .filter(|v| comp.binary_search(v).is_err())
            .collect();
        let outside = cyclic_runs(&vertices, &rest);
        if outside.len() <= 1 {
            continue;
        }
        nice = false;
        let inside = cyclic_runs(&vertices, comp);
        debug_assert_eq!(outside.len(), inside.len());
        for arc in &outside {
            children.push(
                f.connect(comp, arc)
                    .expect("component and arc are disjoint"),
            );
        }
        for run in &inside {
            children.push(f.add_vanishing(run).expect("run stays in range").closure());
        }
    }
    for child in &children {
        debug_assert!(f.is_subset_of(child) && child.len() > f.len());
    }
    (nice, children)
}

/// Every dependency set the worklist emits starting from the matroid `d`.
/// All emitted sets are nice, contain `d`, and include every maximal
/// positroid inside the matroid (non-maximal members may appear too).
pub fn pos_enumerate(d: &DepSet) -> Result<Vec<DepSet>> {
    pos_enumerate_with_jobs(d, 1)
}

/// Same as [`pos_enumerate`], expanding each worklist generation on `jobs`
/// threads.  The visited set is the only shared state; output order is
/// canonical either way.
pub fn pos_enumerate_with_jobs(d: &DepSet, jobs: usize) -> Result<Vec<DepSet>> {
    if !is_matroid(d) {
        return Err(Error::NotAMatroid);
    }
    if jobs > 1 {
        return Ok(pos_enumerate_parallel(d, jobs));
    }
    let mut visited: HashSet<DepSet> = HashSet::new();
    let mut emitted: BTreeSet<DepSet> = BTreeSet::new();
    let mut queue: VecDeque<DepSet> = VecDeque::new();
    visited.insert(d.clone());
    queue.push_back(d.clone());
    while let Some(f) = queue.pop_front() {
        let (nice, children) = expand(&f);
        if nice {
            emitted.insert(f);
            continue;
        }
        for child in children {
            if visited.insert(child.clone()) {
                queue.push_back(child);
            }
        }
    }
    Ok(emitted.into_iter().collect())
}

fn pos_enumerate_parallel(d: &DepSet, jobs: usize) -> Vec<DepSet> {
    let visited: Mutex<HashSet<DepSet>> = Mutex::new(HashSet::from([d.clone()]));
    let emitted: Mutex<BTreeSet<DepSet>> = Mutex::new(BTreeSet::new());
    let mut frontier = vec![d.clone()];
    while !frontier.is_empty() {
        let chunk_size = frontier.len().div_ceil(jobs);
        let mut next = Vec::new();
        std::thread::scope(|scope| {
            let visited = &visited;
            let emitted = &emitted;
            let handles: Vec<_> = frontier
                .chunks(chunk_size)
                .map(|chunk| {
                    scope.spawn(move || {
                        let mut fresh = Vec::new();
                        for f in chunk {
                            let (nice, children) = expand(f);
                            if nice {
                                emitted.lock().unwrap().insert(f.clone());
                                continue;
                            }
                            let mut seen = visited.lock().unwrap();
                            for child in children {
                                if seen.insert(child.clone()) {
                                    fresh.push(child);
                                }
                            }
                        }
                        fresh
                    })
                })
                .collect();
            for handle in handles {
                next.extend(handle.join().expect("worker panicked"));
            }
        });
        frontier = next;
    }
    emitted.into_inner().unwrap().into_iter().collect()
}

/// The maximal positroids whose dependent sets contain `d` (which need not be
/// a matroid): the union of the worklist runs over the cut-point family,
/// filtered to inclusion-maximal positroids.
pub fn mpos(d: &DepSet) -> Result<Vec<DepSet>> {
    mpos_with_jobs(d, 1)
}

pub fn mpos_with_jobs(d: &DepSet, jobs: usize) -> Result<Vec<DepSet>> {
    let family = t_family(d)?;
    let mut all: BTreeSet<DepSet> = BTreeSet::new();
    for t in &family {
        let matroid = d.add_vanishing(t).expect("family stays in range").closure();
        all.extend(pos_enumerate_with_jobs(&matroid, jobs)?);
    }
    Ok(inclusion_minimal(all.into_iter().collect()))
}

/// Containment of matroid dependent sets, decided on the graphs: the loops
/// must be contained in the loops and every component must land inside a
/// single component.  Agrees with the plain pairwise subset test.
pub fn includes(d: &DepSet, f: &DepSet) -> Result<bool> {
    if d.ground() != f.ground() {
        return Err(Error::MixedGroundSets(d.n(), f.n()));
    }
    if !is_matroid(d) || !is_matroid(f) {
        return Err(Error::NotAMatroid);
    }
    let f_loops = f.loops();
    let f_components = build_graph(f).1.components;
    let component_of = |v: usize| {
        f_components
            .iter()
            .position(|c| c.binary_search(&v).is_ok())
    };

    let loops_contained = d.loops().iter().all(|l| f_loops.binary_search(l).is_ok());
    let components_contained = loops_contained
        && build_graph(d).1.components.iter().all(|comp| {
            let survivors: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|v| f_loops.binary_search(v).is_err())
                .collect();
            match survivors.first() {
                None => true,
                Some(&first) => {
                    let home = component_of(first);
                    survivors.iter().all(|&v| component_of(v) == home)
                }
            }
        });
    let verdict = loops_contained && components_contained;
    debug_assert_eq!(verdict, d.is_subset_of(f));
    Ok(verdict)
}

/// A relabeling under which the matroid becomes nice: components listed
/// consecutively (vertices ascending, components by smallest member), loops
/// last.  Witnesses that every rank-2 matroid is a positroid in some cyclic
/// order.
pub fn positroid_order(d: &DepSet) -> Result<Relabeling> {
    if !is_matroid(d) {
        return Err(Error::NotAMatroid);
    }
    let decomposition = build_graph(d).1;
    let mut order: Vec<usize> = Vec::with_capacity(d.n());
    for comp in &decomposition.components {
        order.extend(comp.iter().copied());
    }
    order.extend(d.loops());
    let relabeling = Relabeling::from_order(&order).expect("order lists [n] once");
    assert!(is_nice(&d.relabel(&relabeling)));
    Ok(relabeling)
}
