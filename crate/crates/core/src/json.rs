//! Wire formats.  These structs pin the interchange JSON used by the CLI and
//! the golden tests: field order is struct order, so serialization is
//! byte-stable.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cells::{dimension, Boundary};
use crate::graph::build_graph;
use crate::le::{BasesSet, Fill, GrassmannNecklace, LeDiagram};
use crate::sets::DepSet;
use crate::witness::{Rational, WitnessMatrix};
use crate::{Error, Result};

/// `{"n": 6, "dependent": [[1,2],[4,5]]}` — the interchange unit.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DepSetJson {
    pub n: usize,
    pub dependent: Vec<[usize; 2]>,
}

impl From<&DepSet> for DepSetJson {
    fn from(d: &DepSet) -> Self {
        DepSetJson {
            n: d.n(),
            dependent: d.iter().map(|p| [p.lo(), p.hi()]).collect(),
        }
    }
}

impl TryFrom<DepSetJson> for DepSet {
    type Error = Error;

    fn try_from(j: DepSetJson) -> Result<DepSet> {
        let raw: Vec<(usize, usize)> = j.dependent.iter().map(|p| (p[0], p[1])).collect();
        DepSet::new(j.n, &raw)
    }
}

/// A dependency set augmented with its decomposition and cell dimension.
#[derive(Debug, Clone, Serialize)]
pub struct CellRecord {
    pub n: usize,
    pub dependent: Vec<[usize; 2]>,
    pub loops: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub dim: Option<usize>,
}

impl From<&DepSet> for CellRecord {
    fn from(d: &DepSet) -> Self {
        let (graph, decomposition) = build_graph(d);
        CellRecord {
            n: d.n(),
            dependent: d.iter().map(|p| [p.lo(), p.hi()]).collect(),
            loops: graph.vanishing().to_vec(),
            components: decomposition.components,
            dim: dimension(d).ok(),
        }
    }
}

/// Boundary member with the codimension it was found at.
#[derive(Debug, Clone, Serialize)]
pub struct BoundaryCellRecord {
    pub n: usize,
    pub dependent: Vec<[usize; 2]>,
    pub loops: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub dim: Option<usize>,
    pub codim_from_input: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundaryJson {
    pub cells: Vec<BoundaryCellRecord>,
    pub degenerate: Vec<DepSetJson>,
}

impl BoundaryJson {
    pub fn new(boundary: &Boundary, codim: usize) -> Self {
        BoundaryJson {
            cells: boundary
                .cells
                .iter()
                .map(|d| {
                    let record = CellRecord::from(d);
                    BoundaryCellRecord {
                        n: record.n,
                        dependent: record.dependent,
                        loops: record.loops,
                        components: record.components,
                        dim: record.dim,
                        codim_from_input: codim,
                    }
                })
                .collect(),
            degenerate: boundary.degenerate.iter().map(DepSetJson::from).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasesJson {
    pub n: usize,
    pub k: usize,
    pub bases: Vec<Vec<usize>>,
}

impl From<&BasesSet> for BasesJson {
    fn from(b: &BasesSet) -> Self {
        BasesJson {
            n: b.n(),
            k: b.k(),
            bases: b.bases().to_vec(),
        }
    }
}

impl TryFrom<BasesJson> for BasesSet {
    type Error = Error;

    fn try_from(j: BasesJson) -> Result<BasesSet> {
        BasesSet::new(j.n, j.k, j.bases)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NecklaceJson {
    pub n: usize,
    pub k: usize,
    pub entries: Vec<Vec<usize>>,
}

impl From<&GrassmannNecklace> for NecklaceJson {
    fn from(neck: &GrassmannNecklace) -> Self {
        NecklaceJson {
            n: neck.n(),
            k: neck.k(),
            entries: neck.entries().to_vec(),
        }
    }
}

impl TryFrom<NecklaceJson> for GrassmannNecklace {
    type Error = Error;

    fn try_from(j: NecklaceJson) -> Result<GrassmannNecklace> {
        GrassmannNecklace::new(j.n, j.k, j.entries)
    }
}

/// `{"n":6,"k":2,"shape":[4,2],"fill":["+0++","++"]}`, top row first.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LeDiagramJson {
    pub n: usize,
    pub k: usize,
    pub shape: Vec<usize>,
    pub fill: Vec<String>,
}

impl From<&LeDiagram> for LeDiagramJson {
    fn from(l: &LeDiagram) -> Self {
        LeDiagramJson {
            n: l.n(),
            k: l.k(),
            shape: l.shape().to_vec(),
            fill: l
                .fill()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&f| if f == Fill::Plus { '+' } else { '0' })
                        .collect()
                })
                .collect(),
        }
    }
}

impl TryFrom<LeDiagramJson> for LeDiagram {
    type Error = Error;

    fn try_from(j: LeDiagramJson) -> Result<LeDiagram> {
        let mut fill = Vec::with_capacity(j.fill.len());
        for row in &j.fill {
            let mut cells = Vec::with_capacity(row.len());
            for ch in row.chars() {
                match ch {
                    '+' => cells.push(Fill::Plus),
                    '0' => cells.push(Fill::Zero),
                    _ => {
                        return Err(Error::MalformedDiagram(format!(
                            "unexpected character '{ch}'"
                        )))
                    }
                }
            }
            fill.push(cells);
        }
        LeDiagram::new(j.n, j.k, j.shape, fill)
    }
}

/// Columns as exact rational strings, e.g. `[["1","0"],["-1","-4"]]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessJson {
    pub n: usize,
    pub columns: Vec<[String; 2]>,
}

impl From<&WitnessMatrix<Rational>> for WitnessJson {
    fn from(w: &WitnessMatrix<Rational>) -> Self {
        WitnessJson {
            n: w.n(),
            columns: w
                .columns()
                .iter()
                .map(|c| [c[0].to_string(), c[1].to_string()])
                .collect(),
        }
    }
}

impl TryFrom<WitnessJson> for WitnessMatrix<Rational> {
    type Error = Error;

    fn try_from(j: WitnessJson) -> Result<WitnessMatrix<Rational>> {
        if j.columns.len() != j.n {
            return Err(Error::DimensionMismatch {
                expected: j.n,
                found: j.columns.len(),
            });
        }
        let mut columns = Vec::with_capacity(j.columns.len());
        for c in &j.columns {
            let parse = |s: &String| {
                Rational::from_str(s)
                    .map_err(|_| Error::MalformedDiagram(format!("unreadable rational '{s}'")))
            };
            columns.push([parse(&c[0])?, parse(&c[1])?]);
        }
        Ok(WitnessMatrix::new(columns))
    }
}

/// Output of the `check` verb.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub is_matroid: bool,
    pub is_positroid: bool,
    pub dim: Option<usize>,
    pub loops: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl From<&DepSet> for CheckReport {
    fn from(d: &DepSet) -> Self {
        let (graph, decomposition) = build_graph(d);
        CheckReport {
            is_matroid: crate::graph::is_matroid(d),
            is_positroid: crate::graph::is_nice(d),
            dim: dimension(d).ok(),
            loops: graph.vanishing().to_vec(),
            components: decomposition.components,
        }
    }
}

/// Output of the `order` verb: the permutation as images of `1..n`, plus the
/// relabeled (now nice) dependency set.
#[derive(Debug, Clone, Serialize)]
pub struct OrderReport {
    pub perm: Vec<usize>,
    pub relabeled: DepSetJson,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::le::{diagram_from_necklace, necklace_from_bases};
    use crate::witness::realize_nice;

    fn depset(n: usize, pairs: &[(usize, usize)]) -> DepSet {
        DepSet::new(n, pairs).unwrap()
    }

    #[test]
    fn depset_roundtrip_and_field_order() {
        let d = depset(6, &[(4, 5), (1, 2)]);
        let text = serde_json::to_string(&DepSetJson::from(&d)).unwrap();
        assert_eq!(text, r#"{"n":6,"dependent":[[1,2],[4,5]]}"#);
        let back: DepSet = serde_json::from_str::<DepSetJson>(&text)
            .unwrap()
            .try_into()
            .unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn check_report_shape() {
        let d = depset(6, &[(1, 2), (1, 3), (2, 3), (4, 5)]);
        let text = serde_json::to_string(&CheckReport::from(&d)).unwrap();
        assert_eq!(
            text,
            r#"{"is_matroid":true,"is_positroid":true,"dim":5,"loops":[],"components":[[1,2,3],[4,5],[6]]}"#
        );
    }

    #[test]
    fn diagram_roundtrip() {
        let d = depset(6, &[(1, 2), (1, 3), (2, 3), (4, 5)]);
        let diagram =
            diagram_from_necklace(&necklace_from_bases(&BasesSet::from_dependent(&d)).unwrap())
                .unwrap();
        let json = LeDiagramJson::from(&diagram);
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(text, r#"{"n":6,"k":2,"shape":[4,2],"fill":["+0++","++"]}"#);
        let back: LeDiagram = serde_json::from_str::<LeDiagramJson>(&text)
            .unwrap()
            .try_into()
            .unwrap();
        assert_eq!(back, diagram);
    }

    #[test]
    fn witness_roundtrip() {
        let d = depset(6, &[(1, 6)]);
        let w: WitnessMatrix<Rational> = realize_nice(&d).unwrap();
        let json = WitnessJson::from(&w);
        assert_eq!(json.columns[0], ["-1".to_string(), "-4".to_string()]);
        let back: WitnessMatrix<Rational> = json.try_into().unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn cell_record_has_dim_null_for_non_cells() {
        let record = CellRecord::from(&DepSet::full(4));
        let text = serde_json::to_string(&record).unwrap();
        assert!(text.ends_with(r#""dim":null}"#));
    }
}
