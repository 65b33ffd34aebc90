//! Exact computational algebra for cut ideals of finite simple graphs.
//!
//! The cut ideal of a graph `G` on vertices `1..=n` is the toric ideal of the
//! map sending one variable per unordered vertex partition `A|B` to the
//! monomial recording which edges the partition cuts:
//!
//! ```text
//! q(A|B)  ->  prod_{ij cut} s_ij  *  prod_{ij uncut} t_ij
//! ```
//!
//! This crate builds the exponent matrices of those maps, computes reduced
//! Groebner bases over the integers (all ideals here are generated by
//! binomials with unit coefficients, so every step is exact), extracts
//! Hilbert series, minimal generator degrees and regularity bounds, and
//! recognizes the ring graphs whose cut ideals have squarefree quadratic
//! Groebner bases.  Everything is sized for desk-scale experiments: at most
//! 16 vertices, 64 partition variables for the toric engine.
//!
//! Module map:
//!
//! * [`graph`] — simple graphs, block decomposition, chordless cycles,
//!   clique sums, ring-graph recognition, text format.
//! * [`cuts`] — vertex partitions, cut sets, cut and claw-tree exponent
//!   matrices, the cycle/claw relabeling.
//! * [`engine`] — monomials, binomials, monomial orders, integer lattice
//!   kernels, Buchberger completion, saturation, minimal generator degrees,
//!   order search.
//! * [`hilbert`] — semigroup Hilbert function, Hilbert series from initial
//!   ideals, Hilbertian test, regularity reports.
//! * [`combinatorics`] — Stirling and Eulerian tables and the closed-form
//!   generator/Hilbert counts they feed.
//! * [`composer`] — disjoint unions: the partition swap map, the zero-sum
//!   embedding, assembled generating sets, doubling verification.

pub mod budget;
pub mod combinatorics;
pub mod composer;
pub mod cuts;
pub mod engine;
pub mod graph;
pub mod hilbert;

pub use budget::{Budget, BudgetError};
pub use cuts::{CutSet, ExponentMatrix, PhyloIndex, VertexPartition};
pub use engine::{Binomial, GroebnerBasis, Monomial, MonomialOrder, OrderKind};
pub use graph::{BlockDecomposition, Graph, RingGraphVerdict};
pub use hilbert::{HilbertFunctionTable, HilbertSeries, RegularityReport};
