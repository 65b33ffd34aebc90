//! Vertex partitions, cut sets, and the exponent matrices of cut maps.
//!
//! An unordered partition `A|B` of the vertices is stored as the bitmask of
//! side `B`, canonicalized so vertex 1 lies in `A`; a graph on `n` vertices
//! has `2^(n-1)` of them.  The cut map sends the partition variable
//! `q(A|B)` to `prod_{e cut} s_e * prod_{e uncut} t_e`, so its exponent
//! matrix has a column per partition and an `s`/`t` row pair per edge.
//!
//! The claw tree `K_{1,n}` gets its own matrix (the group-based model with
//! two states per node), and [`claw_cycle_bijection`] exhibits the exact
//! relabeling taking the cut matrix of the `(n+1)`-cycle to it.

use crate::budget::{BudgetError, MAX_VERTICES};
use crate::graph::{Graph, GraphError};
use std::fmt::Write as _;

/// An unordered 2-partition `A|B` of `1..=vertex_count`, canonical form:
/// vertex 1 is in `A` (bit 0 of `side_mask` clear; bit `v-1` set means `v`
/// is in `B`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPartition {
    side_mask: u32,
    vertex_count: usize,
}

impl VertexPartition {
    /// Canonicalize: if vertex 1 landed in `B`, swap sides.
    pub fn new(side_mask: u32, vertex_count: usize) -> Self {
        assert!(vertex_count >= 1 && vertex_count <= MAX_VERTICES);
        let full = if vertex_count == 32 {
            u32::MAX
        } else {
            (1u32 << vertex_count) - 1
        };
        let mask = side_mask & full;
        let canonical = if mask & 1 != 0 { !mask & full } else { mask };
        VertexPartition {
            side_mask: canonical,
            vertex_count,
        }
    }

    pub fn side_mask(&self) -> u32 {
        self.side_mask
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// True iff `v` lies on side `B` (the side without vertex 1).
    pub fn in_b(&self, v: usize) -> bool {
        debug_assert!(v >= 1 && v <= self.vertex_count);
        self.side_mask & (1 << (v - 1)) != 0
    }

    /// True iff the partition separates `a` from `b`.
    pub fn separates(&self, a: usize, b: usize) -> bool {
        self.in_b(a) != self.in_b(b)
    }

    /// Variable label `q[b_n ... b_2]`: one bit per vertex from `n` down to
    /// `2` (vertex 1 is fixed in `A` and carries no bit).
    pub fn label(&self) -> String {
        let mut s = String::from("q[");
        for v in (2..=self.vertex_count).rev() {
            s.push(if self.in_b(v) { '1' } else { '0' });
        }
        s.push(']');
        s
    }

    /// Position of this partition in the canonical enumeration.
    pub fn column_index(&self) -> usize {
        (self.side_mask >> 1) as usize
    }
}

/// All `2^(n-1)` canonical partitions in ascending `side_mask` order.
pub fn enumerate_partitions(vertex_count: usize) -> Result<Vec<VertexPartition>, BudgetError> {
    if vertex_count < 1 {
        return Err(BudgetError::TooLarge {
            what: "vertex count",
            got: vertex_count,
            cap: MAX_VERTICES,
        });
    }
    if vertex_count > MAX_VERTICES {
        return Err(BudgetError::TooLarge {
            what: "vertex count",
            got: vertex_count,
            cap: MAX_VERTICES,
        });
    }
    Ok((0u32..1 << (vertex_count - 1))
        .map(|k| VertexPartition::new(k << 1, vertex_count))
        .collect())
}

/// The set of edges a partition cuts, as a bitmask over edge indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutSet {
    edge_mask: u64,
}

impl CutSet {
    pub fn edge_mask(&self) -> u64 {
        self.edge_mask
    }

    pub fn contains(&self, edge_index: usize) -> bool {
        self.edge_mask & (1 << edge_index) != 0
    }

    pub fn size(&self) -> usize {
        self.edge_mask.count_ones() as usize
    }

    /// The cut edges as vertex pairs, in edge-list order.
    pub fn edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.contains(*i))
            .map(|(_, &e)| e)
            .collect()
    }
}

/// Which edges of `g` the partition separates.
pub fn cut_set(g: &Graph, p: &VertexPartition) -> CutSet {
    assert_eq!(g.vertex_count(), p.vertex_count());
    let mut mask = 0u64;
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if p.separates(a, b) {
            mask |= 1 << i;
        }
    }
    CutSet { edge_mask: mask }
}

/// A nonnegative integer matrix with labeled rows and columns: the exponent
/// matrix of a monomial map.  Column `j` is the exponent vector of the
/// image of variable `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    rows: usize,
    cols: usize,
    /// Row-major.
    data: Vec<u32>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl ExponentMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        data: Vec<u32>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> Self {
        assert_eq!(data.len(), rows * cols);
        assert_eq!(row_labels.len(), rows);
        assert_eq!(col_labels.len(), cols);
        ExponentMatrix {
            rows,
            cols,
            data,
            row_labels,
            col_labels,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.entry(i, j)).collect()
    }

    /// Total degree of the image of variable `j`.
    pub fn column_degree(&self, j: usize) -> u32 {
        (0..self.rows).map(|i| self.entry(i, j)).sum()
    }

    /// `acc += weight * column(j)`; used for fiber hashing.
    pub fn add_column_into(&self, j: usize, weight: u32, acc: &mut [u32]) {
        debug_assert_eq!(acc.len(), self.rows);
        for i in 0..self.rows {
            acc[i] += weight * self.entry(i, j);
        }
    }

    /// Apply a column permutation and a row permutation:
    /// `result[i][j] = self[row_from[i]][col_from[j]]`, relabeling to the
    /// given labels.  Used to transport matrices along bijections.
    pub fn permuted(
        &self,
        row_from: &[usize],
        col_from: &[usize],
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> ExponentMatrix {
        assert_eq!(row_from.len(), self.rows);
        assert_eq!(col_from.len(), self.cols);
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for &i in row_from {
            for &j in col_from {
                data.push(self.entry(i, j));
            }
        }
        ExponentMatrix::new(self.rows, self.cols, data, row_labels, col_labels)
    }

    /// Interchange format:
    ///
    /// ```text
    /// rows 2 cols 2
    /// 0 1
    /// 1 0
    /// rowlabels s(1,2) t(1,2)
    /// collabels q[0] q[1]
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "rows {} cols {}", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(i, j).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        let _ = writeln!(out, "rowlabels {}", self.row_labels.join(" "));
        let _ = writeln!(out, "collabels {}", self.col_labels.join(" "));
        out
    }

    pub fn parse_text(input: &str) -> Result<ExponentMatrix, GraphError> {
        let mut lines = input.lines().enumerate();
        let parse_err = |line: usize, msg: &str| GraphError::Parse {
            line,
            msg: msg.to_string(),
        };
        let (lineno, header) = lines
            .next()
            .ok_or_else(|| parse_err(0, "empty matrix file"))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 4 || parts[0] != "rows" || parts[2] != "cols" {
            return Err(parse_err(lineno + 1, "expected `rows <r> cols <c>`"));
        }
        let rows: usize = parts[1]
            .parse()
            .map_err(|_| parse_err(lineno + 1, "bad row count"))?;
        let cols: usize = parts[3]
            .parse()
            .map_err(|_| parse_err(lineno + 1, "bad column count"))?;
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let (lineno, line) = lines
                .next()
                .ok_or_else(|| parse_err(0, "missing matrix row"))?;
            let entries: Result<Vec<u32>, _> =
                line.split_whitespace().map(str::parse::<u32>).collect();
            let entries = entries.map_err(|_| parse_err(lineno + 1, "bad matrix entry"))?;
            if entries.len() != cols {
                return Err(parse_err(lineno + 1, "wrong number of entries in row"));
            }
            data.extend(entries);
        }
        let mut labels = |keyword: &str, count: usize| -> Result<Vec<String>, GraphError> {
            let (lineno, line) = lines
                .next()
                .ok_or_else(|| parse_err(0, "missing label line"))?;
            let mut parts = line.split_whitespace();
            if parts.next() != Some(keyword) {
                return Err(parse_err(lineno + 1, &format!("expected `{keyword}`")));
            }
            let found: Vec<String> = parts.map(str::to_string).collect();
            if found.len() != count {
                return Err(parse_err(lineno + 1, "wrong number of labels"));
            }
            Ok(found)
        };
        let row_labels = labels("rowlabels", rows)?;
        let col_labels = labels("collabels", cols)?;
        Ok(ExponentMatrix::new(rows, cols, data, row_labels, col_labels))
    }
}

/// Exponent matrix of the cut map of `g`: `2|E|` rows (an `s`/`t` pair per
/// edge, interleaved in edge order), `2^(n-1)` columns in canonical
/// partition order.  Every column sums to `|E|`.
pub fn cut_exponent_matrix(g: &Graph) -> Result<ExponentMatrix, BudgetError> {
    let partitions = enumerate_partitions(g.vertex_count())?;
    let rows = 2 * g.edge_count();
    let cols = partitions.len();
    let mut data = vec![0u32; rows * cols];
    for (j, p) in partitions.iter().enumerate() {
        let cut = cut_set(g, p);
        for e in 0..g.edge_count() {
            let i = if cut.contains(e) { 2 * e } else { 2 * e + 1 };
            data[i * cols + j] = 1;
        }
    }
    let mut row_labels = Vec::with_capacity(rows);
    for &(a, b) in g.edges() {
        row_labels.push(format!("s({a},{b})"));
        row_labels.push(format!("t({a},{b})"));
    }
    let col_labels = partitions.iter().map(VertexPartition::label).collect();
    Ok(ExponentMatrix::new(rows, cols, data, row_labels, col_labels))
}

/// Leaf-label tuple `(g_1, ..., g_n)` of the claw tree `K_{1,n}` with two
/// states per node; bit `i - 1` of `bits` is `g_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhyloIndex {
    bits: u32,
    leaves: usize,
}

impl PhyloIndex {
    pub fn new(bits: u32, leaves: usize) -> Self {
        assert!(leaves >= 1 && leaves < MAX_VERTICES);
        PhyloIndex {
            bits: bits & ((1 << leaves) - 1),
            leaves,
        }
    }

    pub fn leaf(&self, i: usize) -> u32 {
        debug_assert!(i >= 1 && i <= self.leaves);
        (self.bits >> (i - 1)) & 1
    }

    /// Sum of the leaf labels in the two-element group (the parity).
    pub fn parity(&self) -> u32 {
        self.bits.count_ones() & 1
    }

    /// Label `q[g_1 g_2 ... g_n]`, leaf 1 leftmost.
    pub fn label(&self) -> String {
        let mut s = String::from("q[");
        for i in 1..=self.leaves {
            s.push(if self.leaf(i) == 1 { '1' } else { '0' });
        }
        s.push(']');
        s
    }

    /// Position in the canonical enumeration (ascending with `g_1` most
    /// significant).
    pub fn column_index(&self) -> usize {
        let mut idx = 0usize;
        for i in 1..=self.leaves {
            idx = (idx << 1) | self.leaf(i) as usize;
        }
        idx
    }
}

/// All `2^n` leaf tuples in canonical order.
pub fn enumerate_phylo_indices(leaves: usize) -> Vec<PhyloIndex> {
    let mut all: Vec<PhyloIndex> = (0u32..1 << leaves)
        .map(|bits| PhyloIndex::new(bits, leaves))
        .collect();
    all.sort_by_key(PhyloIndex::column_index);
    all
}

/// Exponent matrix of the claw-tree map on `n` leaves: the variable
/// `q[g_1 .. g_n]` maps to `a_{g_1}^(1) ... a_{g_n}^(n) a_{sum}^(n+1)`.
/// `2(n+1)` rows (`a_0`/`a_1` pairs per node, interleaved), `2^n` columns.
pub fn phylo_exponent_matrix(leaves: usize) -> Result<ExponentMatrix, BudgetError> {
    if leaves < 1 || leaves >= MAX_VERTICES {
        return Err(BudgetError::TooLarge {
            what: "leaf count",
            got: leaves,
            cap: MAX_VERTICES - 1,
        });
    }
    let indices = enumerate_phylo_indices(leaves);
    let rows = 2 * (leaves + 1);
    let cols = indices.len();
    let mut data = vec![0u32; rows * cols];
    for (j, idx) in indices.iter().enumerate() {
        for i in 1..=leaves {
            let row = 2 * (i - 1) + idx.leaf(i) as usize;
            data[row * cols + j] = 1;
        }
        let row = 2 * leaves + idx.parity() as usize;
        data[row * cols + j] = 1;
    }
    let mut row_labels = Vec::with_capacity(rows);
    for i in 1..=leaves + 1 {
        row_labels.push(format!("a0({i})"));
        row_labels.push(format!("a1({i})"));
    }
    let col_labels = indices.iter().map(PhyloIndex::label).collect();
    Ok(ExponentMatrix::new(rows, cols, data, row_labels, col_labels))
}

/// The exact relabeling identifying the claw-tree matrix on `n` leaves with
/// the cut matrix of the `(n+1)`-cycle.
///
/// The leaf tuple `(g_1, .., g_n)` corresponds to the partition of the
/// cycle `1 - 2 - ... - (n+1) - 1` in which consecutive vertices `i, i+1`
/// are separated exactly when `g_i = 1`; the closing edge is then cut
/// exactly when the labels have odd parity.  Rows map by
/// `a_1^(i) <-> s(e_i)`, `a_0^(i) <-> t(e_i)` with `e_i` the i-th cycle
/// edge.
#[derive(Debug, Clone)]
pub struct ClawCycleBijection {
    /// `cut_col_for[phylo column index] = cut matrix column index`.
    pub cut_col_for: Vec<usize>,
    /// `cut_row_for[phylo row index] = cut matrix row index`.
    pub cut_row_for: Vec<usize>,
    pub leaves: usize,
}

pub fn claw_cycle_bijection(leaves: usize) -> ClawCycleBijection {
    assert!((2..MAX_VERTICES).contains(&leaves));
    let indices = enumerate_phylo_indices(leaves);
    let mut cut_col_for = Vec::with_capacity(indices.len());
    for idx in &indices {
        // Walk the cycle accumulating sides.
        let mut mask = 0u32;
        let mut side = 0u32;
        for i in 1..=leaves {
            side ^= idx.leaf(i);
            if side == 1 {
                mask |= 1 << i; // vertex i + 1 on side B
            }
        }
        let p = VertexPartition::new(mask, leaves + 1);
        cut_col_for.push(p.column_index());
    }
    let mut cut_row_for = Vec::with_capacity(2 * (leaves + 1));
    for i in 1..=leaves + 1 {
        // a0 (group element 0, edge uncut) -> t row = 2(e_i) + 1;
        // a1 -> s row = 2(e_i).  Edge e_i has index i - 1.
        cut_row_for.push(2 * (i - 1) + 1);
        cut_row_for.push(2 * (i - 1));
    }
    ClawCycleBijection {
        cut_col_for,
        cut_row_for,
        leaves,
    }
}

impl ClawCycleBijection {
    /// Transport the cycle's cut matrix into claw layout; the result must
    /// equal [`phylo_exponent_matrix`] except for labels.
    pub fn transport_cut_matrix(&self, cut: &ExponentMatrix) -> ExponentMatrix {
        // We need result[i][j] = cut[cut_row_for[i]][cut_col_for[j]].
        let phylo_rows = 2 * (self.leaves + 1);
        let phylo_cols = 1 << self.leaves;
        assert_eq!(cut.rows(), phylo_rows);
        assert_eq!(cut.cols(), phylo_cols);
        let indices = enumerate_phylo_indices(self.leaves);
        let mut row_labels = Vec::with_capacity(phylo_rows);
        for i in 1..=self.leaves + 1 {
            row_labels.push(format!("a0({i})"));
            row_labels.push(format!("a1({i})"));
        }
        let col_labels = indices.iter().map(PhyloIndex::label).collect();
        cut.permuted(&self.cut_row_for, &self.cut_col_for, row_labels, col_labels)
    }
}
