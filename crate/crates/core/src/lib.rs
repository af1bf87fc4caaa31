//! Induced 2-regular subgraphs of cubic graphs.
//!
//! The crate provides exact (exponential) oracles for `c_ind(G)` and related
//! invariants, the greedy cycle-removal decomposition with its cyclomatic
//! accounting, a structural classifier and tree-of-blocks decomposer for
//! cubic 4-chordal graphs, and a constructive solver that returns an
//! induced 2-regular subgraph of order at least `5n/8 + 3/4` on every
//! connected cubic 4-chordal graph other than `K_4`, `K_{3,3}` and the prism.

pub mod cycles;
pub mod embed;
pub mod generators;
pub mod graph;
pub mod lemma1;
pub mod oracle;
pub mod structure;
pub mod theorem3;

/// Exact rational used for every bound comparison.
pub type Rational = num_rational::Rational64;

pub use cycles::{chordality, Chordality, InducedCycle};
pub use graph::{Graph, GraphError, VertexMap, VertexSet};
pub use oracle::{Oracle, OracleError, OracleResult};
pub use structure::{BlockDecomposition, BlockKind, Label};
