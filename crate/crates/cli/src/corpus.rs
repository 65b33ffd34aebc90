//! Built-in graph corpus, embedded at compile time so the verification
//! suites and golden tests run without a generation step.

use cutideal_core::graph::Graph;

/// Name, file text, and edge count for one shipped graph.
pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
}

macro_rules! corpus {
    ($($name:literal),* $(,)?) => {
        &[$(CorpusEntry {
            name: $name,
            text: include_str!(concat!("../corpus/", $name, ".graph")),
        }),*]
    };
}

/// Every shipped graph, in a fixed presentation order.
pub const ALL: &[CorpusEntry] = corpus![
    // Trees, one entry per shape with up to five edges.
    "k2",
    "path3",
    "star2",
    "path4",
    "star3",
    "path5",
    "star4",
    "spider211",
    "path6",
    "star5",
    "broom",
    "doublestar",
    "spider221",
    "spider311",
    // Disconnected forests: every multiset of tree shapes up to five edges.
    "two_k2",
    "path3_k2",
    "three_k2",
    "path4_k2",
    "star3_k2",
    "two_path3",
    "path3_two_k2",
    "four_k2",
    "path5_k2",
    "star4_k2",
    "spider211_k2",
    "path4_path3",
    "star3_path3",
    "path4_two_k2",
    "star3_two_k2",
    "two_path3_k2",
    "path3_three_k2",
    "five_k2",
    // Cycles and denser graphs.
    "c3",
    "c4",
    "c5",
    "c6",
    "k4",
    "triangle_c4_vertex",
    "triangle_c4_edge",
];

/// Tree shapes keyed by edge count, for the shape-independence checks.
pub const TREES_BY_EDGES: &[(usize, &[&str])] = &[
    (1, &["k2"]),
    (2, &["path3", "star2"]),
    (3, &["path4", "star3"]),
    (4, &["path5", "star4", "spider211"]),
    (5, &["path6", "star5", "broom", "doublestar", "spider221", "spider311"]),
];

/// Every forest in the corpus (trees included) with its edge count.
pub fn forests() -> Vec<(&'static str, usize)> {
    ALL.iter()
        .map(|e| (e.name, load(e.name)))
        .filter(|(_, g)| g.cycle_rank() == 0)
        .map(|(name, g)| (name, g.edge_count()))
        .collect()
}

/// Connected ring graphs small enough for the toric engine (<= 7 vertices).
pub const RING_CORPUS: &[&str] = &[
    "path3",
    "path4",
    "star3",
    "path5",
    "star4",
    "spider211",
    "c3",
    "c4",
    "c5",
    "c6",
    "triangle_c4_edge",
    "triangle_c4_vertex",
];

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    ALL.iter().find(|e| e.name == name)
}

/// Parse a corpus graph; the corpus is validated by tests, so this cannot
/// fail at runtime.
pub fn load(name: &str) -> Graph {
    let entry = find(name).unwrap_or_else(|| panic!("no corpus graph named {name}"));
    Graph::parse_text(entry.text).unwrap_or_else(|e| panic!("corpus graph {name}: {e}"))
}
