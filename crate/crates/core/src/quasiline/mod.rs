//! Vertex colouring of quasi-line graphs given with a decomposition.

pub mod interval;
pub mod join;
pub mod qltree;
pub mod random;
pub mod strip;
pub mod tree;

pub use interval::{CircularIntervalGraph, LinearIntervalGraph};
pub use join::{extend_over_join, CanonicalJoin, JoinOutcome, JoinStats};
pub use strip::{Strip, StripComposition};
pub use tree::{colour_decomposition, paste_on_clique_cutset, DecompositionTree, Node, TreeColouring};
pub use qltree::{parse_qltree, write_qltree};
