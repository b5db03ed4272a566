//! Labeled direct products of vertex-labeled graphs and the string problems
//! they solve: pattern matching, longest common string, matching
//! statistics and longest repeated string, on DAGs, general directed graphs
//! and undirected graphs. Also hosts hardness-reduction instance generators,
//! brute-force oracles and seeded random workloads.

pub mod dag;
pub mod error;
pub mod general;
pub mod graph;
pub mod oracle;
pub mod product;
pub mod random;
pub mod reductions;
mod suffix;
pub mod undirected;

pub use dag::{
    lcsp_dag, longest_paths, lrsp_dag, msp_dag, smlg, topo_order, LongestMatch, LongestPathTable, Occurrence, WalkPair,
};
pub use error::{Error, Result};
pub use general::{
    classes, expand_answer, lcsp_general, lcsp_in_product, lrsp_general, lrsp_in_product, msp_general, msp_star, scc,
    CommonAnswer, MatchingStatistics, MsValue, RepeatAnswer, RepeatKind, SccDecomposition, VertexClasses,
};
pub use graph::{
    is_deterministic, letters, normalize, parse_graph, parse_graph_with, parse_pattern, spell, symmetrize, Determinism,
    Label, LabelSyntax, LabeledGraph, NormalizationReport, Walk,
};
pub use product::{
    build_product, lift, product_size, project, self_product, ProductGraph, ProductVertex, Side, SizeEstimate,
    VertexSet,
};
pub use reductions::{ov_brute, ov_to_lcsp, ov_to_lrsp, ov_to_msp_star, smlg_to_lrsp, OVInstance, ReductionOutput};
pub use undirected::{
    lrsp_undirected_paths, lrsp_undirected_tree_paths, lrsp_undirected_walks, tree_reduction, PathCase, TreeReduction,
};
