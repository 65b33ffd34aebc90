//! Finite simple graphs with 1-based vertex labels, sized for exact
//! computation (at most 16 vertices).
//!
//! Beyond the basics this module provides the pieces the cut-ideal pipeline
//! needs: block (biconnected-component) decomposition, chordless-cycle
//! enumeration, clique sums and disjoint unions, and the ring-graph test —
//! a graph is a ring graph exactly when every block has as many chordless
//! cycles as its cycle rank.

use crate::budget::{BudgetError, MAX_VERTICES};
use std::fmt::Write as _;
use thiserror::Error;

/// Vertices are `1..=vertex_count`; edges are unordered distinct pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Normalized `(min, max)`, in insertion order, no duplicates.
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the cap of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge ({0}, {1}) out of range for {2} vertices")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("identification pair ({0}, {1}) repeats a vertex")]
    DuplicateIdentification(usize, usize),
    #[error("identified vertices do not form a clique in the {0} graph")]
    NotAClique(&'static str),
    #[error("clique sum takes 1 to 3 identified pairs, got {0}")]
    BadIdentificationSize(usize),
    #[error(transparent)]
    Budget(#[from] BudgetError),
}

impl Graph {
    /// Build a graph, validating vertex range, simplicity and the size cap.
    pub fn new(vertex_count: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        if vertex_count > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            if a == 0 || b == 0 || a > vertex_count || b > vertex_count {
                return Err(GraphError::EdgeOutOfRange(a, b, vertex_count));
            }
            let e = (a.min(b), a.max(b));
            if edges.contains(&e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            edges.push(e);
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("path within caps")
    }

    /// Cycle on `n >= 3` vertices; the closing edge `(1, n)` comes last.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::new(n, &edges).expect("cycle within caps")
    }

    /// Star with `leaves` edges: center 1, leaves `2..=leaves + 1`.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
        Graph::new(leaves + 1, &edges).expect("star within caps")
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                edges.push((a, b));
            }
        }
        Graph::new(n, &edges).expect("complete graph within caps")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Adjacency bitmask of `v` (bit `u - 1` set iff `u ~ v`).
    fn adjacency_mask(&self, v: usize) -> u32 {
        let mut m = 0u32;
        for &(a, b) in &self.edges {
            if a == v {
                m |= 1 << (b - 1);
            } else if b == v {
                m |= 1 << (a - 1);
            }
        }
        m
    }

    fn adjacency_masks(&self) -> Vec<u32> {
        (0..=self.vertex_count)
            .map(|v| if v == 0 { 0 } else { self.adjacency_mask(v) })
            .collect()
    }

    /// Neighbors of `v` in ascending order, with the index of the
    /// connecting edge.
    fn neighbors_with_edges(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertex_count + 1];
        for (idx, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, idx));
            adj[b].push((a, idx));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let adj = self.neighbors_with_edges();
        let mut seen = vec![false; self.vertex_count + 1];
        let mut components = 0;
        for start in 1..=self.vertex_count {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.component_count() == 1
    }

    /// Cycle rank `|E| - |V| + c` (first Betti number).
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertex_count
    }

    /// Count chordless (induced) cycles of length at least 3.
    ///
    /// Exhaustive DFS over induced paths with a canonical traversal: the
    /// smallest cycle vertex is the root and the smaller of its two cycle
    /// neighbors comes second, so each cycle is found exactly once.
    pub fn chordless_cycle_count(&self) -> u64 {
        let adj = self.adjacency_masks();
        let neighbors = self.neighbors_with_edges();
        let mut count = 0u64;
        let mut path: Vec<usize> = Vec::new();

        fn extend(
            adj: &[u32],
            neighbors: &[Vec<(usize, usize)>],
            path: &mut Vec<usize>,
            in_path: u32,
            // Vertices adjacent to an internal path vertex: using one would
            // create a chord.
            blocked: u32,
            count: &mut u64,
        ) {
            let root = path[0];
            let last = *path.last().unwrap();
            for &(w, _) in &neighbors[last] {
                if w <= root || in_path & (1 << (w - 1)) != 0 {
                    continue;
                }
                if blocked & (1 << (w - 1)) != 0 {
                    continue;
                }
                if adj[w] & (1 << (root - 1)) != 0 {
                    // Closing edge exists: a cycle, chordless by
                    // construction. Count it once (second vertex smaller
                    // than the closing one) and never extend past w.
                    if path[1] < w {
                        *count += 1;
                    }
                    continue;
                }
                // `last` becomes internal: its other neighbors are now chords.
                let new_blocked = blocked | (adj[last] & !(1 << (w - 1)) & !(in_path));
                path.push(w);
                extend(adj, neighbors, path, in_path | (1 << (w - 1)), new_blocked, count);
                path.pop();
            }
        }

        for root in 1..=self.vertex_count {
            for &(v, _) in &neighbors[root] {
                if v <= root {
                    continue;
                }
                path.clear();
                path.push(root);
                path.push(v);
                let in_path = (1u32 << (root - 1)) | (1 << (v - 1));
                extend(&adj, &neighbors, &mut path, in_path, 0, &mut count);
            }
        }
        count
    }

    /// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices)
    /// and cut vertices, by the lowpoint DFS with an edge stack.
    pub fn block_decompose(&self) -> BlockDecomposition {
        let adj = self.neighbors_with_edges();
        let n = self.vertex_count;
        let mut disc = vec![0usize; n + 1]; // discovery time, 0 = unvisited
        let mut low = vec![0usize; n + 1];
        let mut timer = 0usize;
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut blocks_edges: Vec<Vec<usize>> = Vec::new();
        let mut cut_vertices = vec![false; n + 1];

        // Iterative DFS: each frame tracks the vertex, its parent edge and
        // the position in its neighbor list.
        struct Frame {
            v: usize,
            parent_edge: Option<usize>,
            next: usize,
            children: usize,
        }

        for root in 1..=n {
            if disc[root] != 0 {
                continue;
            }
            timer += 1;
            disc[root] = timer;
            low[root] = timer;
            let mut stack = vec![Frame {
                v: root,
                parent_edge: None,
                next: 0,
                children: 0,
            }];
            while let Some(frame) = stack.last_mut() {
                let v = frame.v;
                if frame.next < adj[v].len() {
                    let (w, eidx) = adj[v][frame.next];
                    frame.next += 1;
                    if Some(eidx) == frame.parent_edge {
                        continue;
                    }
                    if disc[w] == 0 {
                        frame.children += 1;
                        edge_stack.push(eidx);
                        timer += 1;
                        disc[w] = timer;
                        low[w] = timer;
                        stack.push(Frame {
                            v: w,
                            parent_edge: Some(eidx),
                            next: 0,
                            children: 0,
                        });
                    } else if disc[w] < disc[v] {
                        // Back edge.
                        edge_stack.push(eidx);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    // Finished v: propagate lowpoint, maybe close a block.
                    let finished = stack.pop().unwrap();
                    if let Some(parent) = stack.last_mut() {
                        let p = parent.v;
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            // p separates v's subtree: pop one block.
                            let pe = finished.parent_edge.unwrap();
                            let mut block = Vec::new();
                            while let Some(&top) = edge_stack.last() {
                                edge_stack.pop();
                                block.push(top);
                                if top == pe {
                                    break;
                                }
                            }
                            blocks_edges.push(block);
                            if parent.parent_edge.is_some() || parent.children > 1 {
                                cut_vertices[p] = true;
                            }
                        }
                    }
                }
            }
        }

        let mut blocks: Vec<Block> = blocks_edges
            .into_iter()
            .map(|mut edge_idxs| {
                edge_idxs.sort_unstable();
                let mut vertices: Vec<usize> = edge_idxs
                    .iter()
                    .flat_map(|&i| [self.edges[i].0, self.edges[i].1])
                    .collect();
                vertices.sort_unstable();
                vertices.dedup();
                Block {
                    vertices,
                    edge_indices: edge_idxs,
                }
            })
            .collect();
        // Isolated vertices form their own blocks.
        let mut degree = vec![0usize; n + 1];
        for &(a, b) in &self.edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        for v in 1..=n {
            if degree[v] == 0 {
                blocks.push(Block {
                    vertices: vec![v],
                    edge_indices: Vec::new(),
                });
            }
        }
        blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));

        BlockDecomposition {
            blocks,
            cut_vertices: (1..=n).filter(|&v| cut_vertices[v]).collect(),
        }
    }

    /// Ring-graph test: every block must have exactly as many chordless
    /// cycles as its cycle rank.  Trees and cycles pass; any block that
    /// contains a K4 subdivision-like overlap (e.g. K4 itself) fails.
    pub fn ring_graph_verdict(&self) -> RingGraphVerdict {
        let decomposition = self.block_decompose();
        let mut per_block = Vec::with_capacity(decomposition.blocks.len());
        let mut is_ring = true;
        for (i, block) in decomposition.blocks.iter().enumerate() {
            let sub = self.induced_block_graph(block);
            let primitive = sub.chordless_cycle_count();
            let rank = sub.cycle_rank();
            if primitive != rank as u64 {
                is_ring = false;
            }
            per_block.push(BlockCycleStats {
                block_index: i,
                primitive_cycle_count: primitive,
                cycle_rank: rank,
            });
        }
        RingGraphVerdict { is_ring, per_block }
    }

    pub fn is_ring_graph(&self) -> bool {
        self.ring_graph_verdict().is_ring
    }

    /// Standalone copy of a block with vertices relabeled `1..=k`
    /// (ascending by original label).
    fn induced_block_graph(&self, block: &Block) -> Graph {
        let relabel = |v: usize| block.vertices.iter().position(|&u| u == v).unwrap() + 1;
        let edges: Vec<_> = block
            .edge_indices
            .iter()
            .map(|&i| (relabel(self.edges[i].0), relabel(self.edges[i].1)))
            .collect();
        Graph::new(block.vertices.len(), &edges).expect("block within caps")
    }

    /// Clique sum: identify 1..=3 vertices of `self` with as many of
    /// `other`; the identified sets must be cliques on both sides (a single
    /// vertex trivially is).  Keeps `self`'s labels, appends the rest of
    /// `other`'s vertices in ascending order, and drops duplicated clique
    /// edges.  Also returns the relabeling applied to `other`.
    pub fn clique_sum(
        &self,
        other: &Graph,
        identify: &[(usize, usize)],
    ) -> Result<CliqueSum, GraphError> {
        if identify.is_empty() || identify.len() > 3 {
            return Err(GraphError::BadIdentificationSize(identify.len()));
        }
        for (i, &(a, b)) in identify.iter().enumerate() {
            if a == 0 || a > self.vertex_count || b == 0 || b > other.vertex_count {
                return Err(GraphError::EdgeOutOfRange(a, b, self.vertex_count));
            }
            for &(a2, b2) in &identify[..i] {
                if a == a2 || b == b2 {
                    return Err(GraphError::DuplicateIdentification(a, b));
                }
            }
        }
        for i in 0..identify.len() {
            for j in i + 1..identify.len() {
                if !self.has_edge(identify[i].0, identify[j].0) {
                    return Err(GraphError::NotAClique("left"));
                }
                if !other.has_edge(identify[i].1, identify[j].1) {
                    return Err(GraphError::NotAClique("right"));
                }
            }
        }
        let mut right_map = vec![0usize; other.vertex_count + 1];
        for &(a, b) in identify {
            right_map[b] = a;
        }
        let mut next = self.vertex_count;
        for b in 1..=other.vertex_count {
            if right_map[b] == 0 {
                next += 1;
                right_map[b] = next;
            }
        }
        let mut edges = self.edges.clone();
        for &(a, b) in &other.edges {
            let (x, y) = (right_map[a], right_map[b]);
            let e = (x.min(y), x.max(y));
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
        let graph = Graph::new(next, &edges)?;
        Ok(CliqueSum { graph, right_map })
    }

    /// Disjoint union: `other`'s vertices are shifted up by
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        Graph::new(shift + other.vertex_count, &edges)
    }

    /// Parse the line-oriented text format:
    ///
    /// ```text
    /// # comment
    /// vertices 4
    /// edge 1 2
    /// edge 2 3
    /// ```
    pub fn parse_text(input: &str) -> Result<Graph, GraphError> {
        let mut vertex_count: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (lineno, raw) in input.lines().enumerate() {
            let line = raw.trim();
            let lineno = lineno + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let keyword = parts.next().unwrap();
            match keyword {
                "vertices" => {
                    if vertex_count.is_some() {
                        return Err(GraphError::Parse {
                            line: lineno,
                            msg: "repeated vertices line".into(),
                        });
                    }
                    let n: usize = parts
                        .next()
                        .ok_or_else(|| GraphError::Parse {
                            line: lineno,
                            msg: "vertices needs a count".into(),
                        })?
                        .parse()
                        .map_err(|_| GraphError::Parse {
                            line: lineno,
                            msg: "vertex count must be a nonnegative integer".into(),
                        })?;
                    if parts.next().is_some() {
                        return Err(GraphError::Parse {
                            line: lineno,
                            msg: "trailing tokens after vertex count".into(),
                        });
                    }
                    vertex_count = Some(n);
                }
                "edge" => {
                    if vertex_count.is_none() {
                        return Err(GraphError::Parse {
                            line: lineno,
                            msg: "edge before vertices line".into(),
                        });
                    }
                    let mut endpoint = || -> Result<usize, GraphError> {
                        parts
                            .next()
                            .ok_or_else(|| GraphError::Parse {
                                line: lineno,
                                msg: "edge needs two endpoints".into(),
                            })?
                            .parse()
                            .map_err(|_| GraphError::Parse {
                                line: lineno,
                                msg: "edge endpoints must be positive integers".into(),
                            })
                    };
                    let a = endpoint()?;
                    let b = endpoint()?;
                    if parts.next().is_some() {
                        return Err(GraphError::Parse {
                            line: lineno,
                            msg: "trailing tokens after edge".into(),
                        });
                    }
                    edges.push((a, b));
                }
                other => {
                    return Err(GraphError::Parse {
                        line: lineno,
                        msg: format!("unknown keyword `{other}`"),
                    });
                }
            }
        }
        let n = vertex_count.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing vertices line".into(),
        })?;
        Graph::new(n, &edges)
    }

    /// Emit the same text format the parser reads.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertices {}", self.vertex_count);
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "edge {a} {b}");
        }
        out
    }

    /// Graphviz DOT form, for eyeballing.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 1..=self.vertex_count {
            let _ = writeln!(out, "    {v};");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "    {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }
}

/// One block of a graph, referencing the parent's edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Ascending original labels.
    pub vertices: Vec<usize>,
    /// Ascending indices into the parent graph's edge list; empty for an
    /// isolated vertex.
    pub edge_indices: Vec<usize>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edge_indices.len() == 1
    }

    pub fn is_isolated_vertex(&self) -> bool {
        self.edge_indices.is_empty()
    }
}

/// Blocks plus cut vertices.  Every edge lies in exactly one block; two
/// blocks share at most one vertex, necessarily a cut vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted by vertex list, deterministic.
    pub blocks: Vec<Block>,
    /// Ascending.
    pub cut_vertices: Vec<usize>,
}

/// Chordless-cycle count vs cycle rank for one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCycleStats {
    pub block_index: usize,
    pub primitive_cycle_count: u64,
    pub cycle_rank: usize,
}

/// Result of the ring-graph test with per-block evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingGraphVerdict {
    pub is_ring: bool,
    pub per_block: Vec<BlockCycleStats>,
}

/// A clique sum together with the relabeling applied to the right factor.
#[derive(Debug, Clone)]
pub struct CliqueSum {
    pub graph: Graph,
    /// `right_map[v]` is the new label of the right graph's vertex `v`
    /// (index 0 unused).
    pub right_map: Vec<usize>,
}
