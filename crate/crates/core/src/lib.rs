//! Edge colouring of multigraphs within the local bound γ′_l, and vertex
//! colouring of line graphs and decomposed quasi-line graphs.

pub mod bench;
pub mod cli;
pub mod colouring;
pub mod error;
pub mod extend;
pub mod families;
pub mod fan;
pub mod io;
pub mod line_graph;
pub mod multigraph;
pub mod oracle;
pub mod quasiline;
pub mod simple;
pub mod trace;

pub use colouring::{PartialEdgeColouring, Violation};
pub use error::{Error, Result};
pub use extend::{edge_colour, edge_colour_optimal_local, edge_colour_with, extend_one_edge, EdgeColourer, ExtendStats};
pub use multigraph::{EdgeBoundReport, EdgeTerms, Multigraph};
pub use oracle::OracleGuard;
pub use simple::SimpleGraph;
pub use trace::{TraceEvent, Tracer};
