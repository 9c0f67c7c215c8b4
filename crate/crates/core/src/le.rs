//! Bases, Grassmann necklaces, Le diagrams and the path-system network.
//!
//! This is the converter layer between matroid data and Le diagrams, and at
//! the same time the independent oracle for positroid-ness: a nonempty
//! matroid is a positroid exactly when bases → necklace → diagram → bases is
//! the identity and the intermediate diagram satisfies the Le condition.
//!
//! The machinery works for any rank `k`; the rest of the crate exercises it
//! at `k = 2` (and `k = n-2` through duals).

use std::collections::BTreeMap;

use crate::sets::DepSet;
use crate::{Error, Result};

/// A bases family: `k`-subsets of `[n]`, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BasesSet {
    n: usize,
    k: usize,
    bases: Vec<Vec<usize>>,
}

impl BasesSet {
    pub fn new(n: usize, k: usize, bases: Vec<Vec<usize>>) -> Result<Self> {
        let mut canonical = Vec::with_capacity(bases.len());
        for basis in bases {
            let mut b = basis;
            b.sort_unstable();
            b.dedup();
            if b.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: b.len(),
                });
            }
            for &x in &b {
                if x == 0 || x > n {
                    return Err(Error::OutOfRange { value: x, n });
                }
            }
            canonical.push(b);
        }
        canonical.sort_unstable();
        canonical.dedup();
        Ok(BasesSet {
            n,
            k,
            bases: canonical,
        })
    }

    /// The rank-2 bases family complementary to a dependency set.
    pub fn from_dependent(d: &DepSet) -> BasesSet {
        let c = d.complement();
        BasesSet {
            n: d.n(),
            k: 2,
            bases: c.iter().map(|p| vec![p.lo(), p.hi()]).collect(),
        }
    }

    /// The complementary dependency set; only meaningful for `k = 2`.
    pub fn to_dependent(&self) -> Result<DepSet> {
        if self.k != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: self.k,
            });
        }
        let raw: Vec<(usize, usize)> = self.bases.iter().map(|b| (b[0], b[1])).collect();
        Ok(DepSet::new(self.n, &raw)?.complement())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn bases(&self) -> &[Vec<usize>] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn contains(&self, basis: &[usize]) -> bool {
        let mut b = basis.to_vec();
        b.sort_unstable();
        self.bases.binary_search(&b).is_ok()
    }
}

/// The sequence `(I_1,..,I_n)` of shifted lexicographic minima of a bases
/// family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrassmannNecklace {
    n: usize,
    k: usize,
    entries: Vec<Vec<usize>>,
}

impl GrassmannNecklace {
    pub fn new(n: usize, k: usize, entries: Vec<Vec<usize>>) -> Result<Self> {
        if entries.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: entries.len(),
            });
        }
        let mut canonical = Vec::with_capacity(n);
        for entry in entries {
            let mut e = entry;
            e.sort_unstable();
            e.dedup();
            if e.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: e.len(),
                });
            }
            for &x in &e {
                if x == 0 || x > n {
                    return Err(Error::OutOfRange { value: x, n });
                }
            }
            canonical.push(e);
        }
        Ok(GrassmannNecklace {
            n,
            k,
            entries: canonical,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Entries as increasing element lists, indexed by shift `i-1`.
    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }
}

/// `entries[i-1]` is the lexicographic minimum of the bases under the order
/// `i < i+1 < .. < n < 1 < .. < i-1`, comparing sorted element sequences
/// position by position.
pub fn necklace_from_bases(b: &BasesSet) -> Result<GrassmannNecklace> {
    if b.is_empty() {
        return Err(Error::EmptyBases);
    }
    let n = b.n();
    let mut entries = Vec::with_capacity(n);
    for i in 1..=n {
        let key = |basis: &Vec<usize>| {
            let mut shifted: Vec<usize> = basis.iter().map(|&x| (x + n - i) % n).collect();
            shifted.sort_unstable();
            shifted
        };
        let best = b.bases().iter().min_by_key(|basis| key(basis)).unwrap();
        entries.push(best.clone());
    }
    GrassmannNecklace::new(n, b.k(), entries)
}

/// One box of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fill {
    Plus,
    Zero,
}

/// A `{+,0}`-filled Young shape inside the `k × (n-k)` box.
///
/// Rows are indexed top to bottom, columns left to right.  Walking the
/// southeast border from the northeast corner labels the steps `1..n`;
/// vertical steps are the row labels, horizontal steps the column labels.
/// Box `(a, b)` means the box in the row labeled `a` and the column labeled
/// `b`; it exists exactly when `b > a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeDiagram {
    n: usize,
    k: usize,
    shape: Vec<usize>,
    fill: Vec<Vec<Fill>>,
}

impl LeDiagram {
    pub fn new(n: usize, k: usize, shape: Vec<usize>, fill: Vec<Vec<Fill>>) -> Result<Self> {
        if k > n {
            return Err(Error::MalformedDiagram(format!("k = {k} exceeds n = {n}")));
        }
        if shape.len() != k || fill.len() != k {
            return Err(Error::MalformedDiagram(format!(
                "expected {k} rows, got shape of {} and fill of {}",
                shape.len(),
                fill.len()
            )));
        }
        for w in shape.windows(2) {
            if w[0] < w[1] {
                return Err(Error::MalformedDiagram(
                    "row lengths must weakly decrease".into(),
                ));
            }
        }
        if let Some(&first) = shape.first() {
            if first > n - k {
                return Err(Error::MalformedDiagram(format!(
                    "first row of length {first} exceeds the box width {}",
                    n - k
                )));
            }
        }
        for (i, row) in fill.iter().enumerate() {
            if row.len() != shape[i] {
                return Err(Error::MalformedDiagram(format!(
                    "row {} has {} boxes, shape says {}",
                    i + 1,
                    row.len(),
                    shape[i]
                )));
            }
        }
        Ok(LeDiagram { n, k, shape, fill })
    }

    /// All-zero diagram whose shape is determined by the given row label set.
    pub fn zeros_for_rows(n: usize, rows: &[usize]) -> Result<Self> {
        let k = rows.len();
        let mut sorted = rows.to_vec();
        sorted.sort_unstable();
        let shape: Vec<usize> = sorted
            .iter()
            .enumerate()
            .map(|(j, &s)| (n - s).saturating_sub(k - (j + 1)))
            .collect();
        let fill = shape.iter().map(|&len| vec![Fill::Zero; len]).collect();
        let diagram = LeDiagram::new(n, k, shape, fill)?;
        if diagram.row_labels() != sorted {
            return Err(Error::MalformedDiagram(format!(
                "invalid row label set {sorted:?}"
            )));
        }
        Ok(diagram)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn fill(&self) -> &[Vec<Fill>] {
        &self.fill
    }

    /// Labels of the vertical border steps, increasing; determined by the
    /// shape.
    pub fn row_labels(&self) -> Vec<usize> {
        (1..=self.k)
            .map(|j| self.n - self.k + j - self.shape[j - 1])
            .collect()
    }

    /// Labels of the horizontal border steps, increasing.
    pub fn col_labels(&self) -> Vec<usize> {
        let rows = self.row_labels();
        (1..=self.n)
            .filter(|x| rows.binary_search(x).is_err())
            .collect()
    }

    /// Column position (0-based from the left) of the column labeled `b`.
    /// Labels decrease from left to right.
    fn col_index(&self, b: usize) -> usize {
        self.col_labels().iter().filter(|&&c| c > b).count()
    }

    /// Fill of the box in row labeled `a`, column labeled `b`, if it exists.
    pub fn box_at(&self, a: usize, b: usize) -> Option<Fill> {
        let rows = self.row_labels();
        let i = rows.iter().position(|&s| s == a)?;
        if self.col_labels().binary_search(&b).is_err() || b < a {
            return None;
        }
        let j = self.col_index(b);
        self.fill[i].get(j).copied()
    }

    fn set_box(&mut self, a: usize, b: usize, value: Fill) -> Result<()> {
        let rows = self.row_labels();
        let i = rows
            .iter()
            .position(|&s| s == a)
            .ok_or(Error::BoxOutsideShape { row: a, col: b })?;
        if b < a {
            return Err(Error::BoxOutsideShape { row: a, col: b });
        }
        let j = self.col_index(b);
        if j >= self.shape[i] {
            return Err(Error::BoxOutsideShape { row: a, col: b });
        }
        self.fill[i][j] = value;
        Ok(())
    }

    /// Labels `(a, b)` of every box holding a `+`.
    pub fn plus_boxes(&self) -> Vec<(usize, usize)> {
        let rows = self.row_labels();
        let cols = self.col_labels();
        let mut cols_desc = cols;
        cols_desc.reverse();
        let mut out = Vec::new();
        for (i, row) in self.fill.iter().enumerate() {
            for (j, &f) in row.iter().enumerate() {
                if f == Fill::Plus {
                    out.push((rows[i], cols_desc[j]));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Number of `+` boxes; for the Le diagram of a positroid this is the
/// dimension of its cell.
pub fn plus_count(l: &LeDiagram) -> usize {
    l.fill
        .iter()
        .map(|row| row.iter().filter(|&&f| f == Fill::Plus).count())
        .sum()
}

/// Builds the (unvalidated) diagram of a necklace: the shape comes from the
/// first entry, and for every `i ≥ 2` the differences `I_1\I_i = {a_1 > ..}`
/// and `I_i\I_1 = {b_1 < ..}` prescribe a `+` in each box `(a_t, b_t)`.
///
/// The result may violate the Le condition; that outcome is exactly the
/// negative signal used by [`positroid_roundtrip_check`].
pub fn diagram_from_necklace(neck: &GrassmannNecklace) -> Result<LeDiagram> {
    let first = &neck.entries()[0];
    let mut diagram = LeDiagram::zeros_for_rows(neck.n(), first)?;
    for entry in &neck.entries()[1..] {
        let mut a: Vec<usize> = first
            .iter()
            .copied()
            .filter(|x| entry.binary_search(x).is_err())
            .collect();
        let mut b: Vec<usize> = entry
            .iter()
            .copied()
            .filter(|x| first.binary_search(x).is_err())
            .collect();
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable();
        debug_assert_eq!(a.len(), b.len());
        for (&row, &col) in a.iter().zip(b.iter()) {
            diagram.set_box(row, col, Fill::Plus)?;
        }
    }
    Ok(diagram)
}

/// The Le condition: every `0` box has only `0`s to its left in its row or
/// only `0`s above it in its column.  Boxes in the first row or the leftmost
/// column satisfy the corresponding clause vacuously.
pub fn is_le(l: &LeDiagram) -> bool {
    for (i, row) in l.fill.iter().enumerate() {
        for (j, &f) in row.iter().enumerate() {
            if f == Fill::Plus {
                continue;
            }
            let left_zero = row[..j].iter().all(|&x| x == Fill::Zero);
            // rows above are at least as long, so box (i', j) exists
            let above_zero = (0..i).all(|r| l.fill[r][j] == Fill::Zero);
            if !left_zero && !above_zero {
                return false;
            }
        }
    }
    true
}

/// The directed network of a diagram: a vertex per row label, per column
/// label and per `+` box; leftward arcs along rows and downward arcs along
/// columns between consecutive vertices.
#[derive(Debug, Clone)]
pub struct LeNetwork {
    vertex_count: usize,
    row_vertex: Vec<usize>,
    col_vertex: Vec<usize>,
    arcs: Vec<(usize, usize)>,
}

impl LeNetwork {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Vertex id of the source next to row index `i` (top to bottom).
    pub fn row_vertex(&self, i: usize) -> usize {
        self.row_vertex[i]
    }

    /// Vertex id of the sink under column index `j` (left to right).
    pub fn col_vertex(&self, j: usize) -> usize {
        self.col_vertex[j]
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Number of inner (`+` box) vertices.
    pub fn inner_count(&self) -> usize {
        self.vertex_count - self.row_vertex.len() - self.col_vertex.len()
    }

    /// Existence of pairwise vertex-disjoint paths joining the sources to the
    /// sinks in some bijection, decided by unit-vertex-capacity max flow via
    /// the usual vertex-splitting reduction.  On these planar leftward or
    /// downward networks any bijection can be rerouted to the order-respecting
    /// one, so this matches the pairing-based definition.
    pub fn admits_disjoint_paths(&self, sources: &[usize], sinks: &[usize]) -> bool {
        if sources.len() != sinks.len() {
            return false;
        }
        let need = sources.len();
        if need == 0 {
            return true;
        }
        // split: vertex v -> nodes 2v (in), 2v+1 (out)
        let super_source = 2 * self.vertex_count;
        let super_sink = super_source + 1;
        let node_count = super_sink + 1;
        let mut to: Vec<usize> = Vec::new();
        let mut cap: Vec<i32> = Vec::new();
        let mut head: Vec<Vec<usize>> = vec![Vec::new(); node_count];
        let add_edge = |head: &mut Vec<Vec<usize>>,
                        to: &mut Vec<usize>,
                        cap: &mut Vec<i32>,
                        u: usize,
                        v: usize| {
            head[u].push(to.len());
            to.push(v);
            cap.push(1);
            head[v].push(to.len());
            to.push(u);
            cap.push(0);
        };
        for v in 0..self.vertex_count {
            add_edge(&mut head, &mut to, &mut cap, 2 * v, 2 * v + 1);
        }
        for &(u, v) in &self.arcs {
            add_edge(&mut head, &mut to, &mut cap, 2 * u + 1, 2 * v);
        }
        for &s in sources {
            add_edge(&mut head, &mut to, &mut cap, super_source, 2 * s);
        }
        for &t in sinks {
            add_edge(&mut head, &mut to, &mut cap, 2 * t + 1, super_sink);
        }

        let mut flow = 0usize;
        loop {
            // BFS for an augmenting path
            let mut parent_edge: Vec<Option<usize>> = vec![None; node_count];
            let mut queue = std::collections::VecDeque::from([super_source]);
            let mut reached = vec![false; node_count];
            reached[super_source] = true;
            while let Some(u) = queue.pop_front() {
                for &e in &head[u] {
                    let v = to[e];
                    if cap[e] > 0 && !reached[v] {
                        reached[v] = true;
                        parent_edge[v] = Some(e);
                        queue.push_back(v);
                    }
                }
            }
            if !reached[super_sink] {
                break;
            }
            let mut v = super_sink;
            while let Some(e) = parent_edge[v] {
                cap[e] -= 1;
                cap[e ^ 1] += 1;
                v = to[e ^ 1];
            }
            flow += 1;
            if flow == need {
                return true;
            }
        }
        false
    }
}

/// Builds the network of a diagram.
pub fn network(l: &LeDiagram) -> LeNetwork {
    let k = l.k();
    let width = l.col_labels().len();
    let mut next_id = 0usize;
    let mut fresh = || {
        let id = next_id;
        next_id += 1;
        id
    };
    let row_vertex: Vec<usize> = (0..k).map(|_| fresh()).collect();
    let col_vertex: Vec<usize> = (0..width).map(|_| fresh()).collect();
    let mut box_id: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (i, row) in l.fill().iter().enumerate() {
        for (j, &f) in row.iter().enumerate() {
            if f == Fill::Plus {
                box_id.insert((i, j), fresh());
            }
        }
    }
    let mut arcs = Vec::new();
    // rows: rightmost first, arrows pointing left
    for (i, &source) in row_vertex.iter().enumerate() {
        let mut prev = source;
        for j in (0..l.shape()[i]).rev() {
            if let Some(&b) = box_id.get(&(i, j)) {
                arcs.push((prev, b));
                prev = b;
            }
        }
    }
    // columns: top first, arrows pointing down, ending at the column sink
    for (j, &sink) in col_vertex.iter().enumerate() {
        let mut prev: Option<usize> = None;
        for i in 0..k {
            if j >= l.shape()[i] {
                break;
            }
            if let Some(&b) = box_id.get(&(i, j)) {
                if let Some(p) = prev {
                    arcs.push((p, b));
                }
                prev = Some(b);
            }
        }
        if let Some(p) = prev {
            arcs.push((p, sink));
        }
    }
    LeNetwork {
        vertex_count: next_id,
        row_vertex,
        col_vertex,
        arcs,
    }
}

/// Recovers the bases family of a Le diagram: the `k`-subsets `B` such that
/// `(S\B, T∩B)` admits a vertex-disjoint path system in the network, where
/// `S` and `T` are the row and column labels.
pub fn bases_from_le(l: &LeDiagram) -> Result<BasesSet> {
    if !is_le(l) {
        return Err(Error::NotLe);
    }
    let rows = l.row_labels();
    let cols = l.col_labels();
    let net = network(l);
    let row_source: BTreeMap<usize, usize> = rows
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, net.row_vertex(i)))
        .collect();
    let col_sink: BTreeMap<usize, usize> = cols
        .iter()
        .map(|&c| (c, net.col_vertex(l.col_index(c))))
        .collect();
    debug_assert!(cols.iter().all(|c| col_sink.contains_key(c)));

    let mut bases = Vec::new();
    for candidate in k_subsets(l.n(), l.k()) {
        let sources: Vec<usize> = rows
            .iter()
            .filter(|s| candidate.binary_search(s).is_err())
            .map(|s| row_source[s])
            .collect();
        let sinks: Vec<usize> = candidate
            .iter()
            .filter(|x| col_sink.contains_key(x))
            .map(|x| col_sink[x])
            .collect();
        if net.admits_disjoint_paths(&sources, &sinks) {
            bases.push(candidate);
        }
    }
    BasesSet::new(l.n(), l.k(), bases)
}

/// All `k`-subsets of `[n]` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let remaining = k - current.len();
        for x in start..=(n + 1 - remaining) {
            current.push(x);
            rec(x + 1, n, k, current, out);
            current.pop();
        }
    }
    if k <= n {
        rec(1, n, k, &mut current, &mut out);
    }
    out
}

/// The full oracle: a nonempty matroid bases family is a positroid exactly
/// when its necklace produces a Le diagram whose bases are the original
/// family.  Callers must ensure the input is a matroid first; on arbitrary
/// families the answer carries no meaning.
pub fn positroid_roundtrip_check(b: &BasesSet) -> Result<bool> {
    if b.is_empty() {
        return Err(Error::EmptyBases);
    }
    let neck = necklace_from_bases(b)?;
    let diagram = match diagram_from_necklace(&neck) {
        Ok(d) => d,
        Err(Error::BoxOutsideShape { .. }) => return Ok(false),
        Err(e) => return Err(e),
    };
    if !is_le(&diagram) {
        return Ok(false);
    }
    Ok(&bases_from_le(&diagram)? == b)
}

/// One text row per diagram row followed by a legend; [`parse_ascii`] inverts
/// it losslessly.
pub fn render_ascii(l: &LeDiagram) -> String {
    let mut out = String::new();
    for row in l.fill() {
        for &f in row {
            out.push(if f == Fill::Plus { '+' } else { '0' });
        }
        out.push('\n');
    }
    let rows = l.row_labels();
    let labels: Vec<String> = rows.iter().map(|s| s.to_string()).collect();
    out.push_str(&format!("rows: {}\n", labels.join(",")));
    out.push_str(&format!("n: {}\n", l.n()));
    out
}

/// Parses the output of [`render_ascii`].
pub fn parse_ascii(text: &str) -> Result<LeDiagram> {
    let mut fill_rows: Vec<Vec<Fill>> = Vec::new();
    let mut rows_line: Option<&str> = None;
    let mut n_line: Option<&str> = None;
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("rows:") {
            rows_line = Some(rest.trim());
        } else if let Some(rest) = line.strip_prefix("n:") {
            n_line = Some(rest.trim());
        } else if rows_line.is_none() {
            let mut row = Vec::with_capacity(line.len());
            for ch in line.chars() {
                match ch {
                    '+' => row.push(Fill::Plus),
                    '0' => row.push(Fill::Zero),
                    _ => {
                        return Err(Error::MalformedDiagram(format!(
                            "unexpected character '{ch}'"
                        )));
                    }
                }
            }
            fill_rows.push(row);
        } else {
            return Err(Error::MalformedDiagram(format!(
                "unexpected trailing line '{line}'"
            )));
        }
    }
    let rows_text =
        rows_line.ok_or_else(|| Error::MalformedDiagram("missing 'rows:' legend".into()))?;
    let n: usize = n_line
        .ok_or_else(|| Error::MalformedDiagram("missing 'n:' legend".into()))?
        .parse()
        .map_err(|_| Error::MalformedDiagram("unreadable n".into()))?;
    let labels: Vec<usize> = if rows_text.is_empty() {
        Vec::new()
    } else {
        rows_text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| Error::MalformedDiagram("unreadable row label".into()))
            })
            .collect::<Result<_>>()?
    };
    let k = fill_rows.len();
    if labels.len() != k {
        return Err(Error::MalformedDiagram(format!(
            "{} fill rows but {} row labels",
            k,
            labels.len()
        )));
    }
    let shape: Vec<usize> = fill_rows.iter().map(|r| r.len()).collect();
    let diagram = LeDiagram::new(n, k, shape, fill_rows)?;
    if diagram.row_labels() != labels {
        return Err(Error::MalformedDiagram(
            "row labels disagree with the shape".into(),
        ));
    }
    Ok(diagram)
}
