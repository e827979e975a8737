//! Arrow presentations of ribbon graphs.

pub mod canon;
pub mod format;
pub mod join;
pub mod presentation;
pub mod stats;

pub use canon::{canonical_form, isomorphic};
pub use format::{parse, parse_inline, serialize};
pub use join::{cut_results, join_all_components, join_results, vertex_cuts, vertex_join, Gap};
pub use presentation::{ArrowEnd, ArrowPresentation, Sign};
pub use stats::{
    boundary_count, is_orientable, orientability_and_genus, subgraph_genus, subgraph_stats, Flank,
    Surface, TopoStats,
};
