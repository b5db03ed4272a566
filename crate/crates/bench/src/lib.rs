//! Workloads shared by the benchmarks. Every builder is seeded so runs are
//! comparable across machines and commits.

use lgp_core::random::{self, rng};
use lgp_core::{LabeledGraph, OVInstance};

/// Two label-sparse digraphs on `n` vertices (each label used at most
/// twice, out-degree up to 2): product size stays linear in `n`.
pub fn sparse_pair(n: usize) -> (LabeledGraph, LabeledGraph) {
    (random::label_sparse(&mut rng(n as u64), n, 2, 2), random::label_sparse(&mut rng(n as u64 ^ 0x5eed), n, 2, 2))
}

/// Random DAG over a binary alphabet: a dense-label family whose product
/// grows quadratically.
pub fn dense_dag(n: usize) -> LabeledGraph {
    random::dag(&mut rng(n as u64), n, 2, 4.0 / n.max(4) as f64)
}

/// Undirected path with `n` vertices over a 4-letter alphabet.
pub fn path(n: usize) -> LabeledGraph {
    random::path_graph(&mut rng(n as u64), n, 4)
}

/// OV instance with `n` vectors of dimension `d`.
pub fn ov(n: usize, d: usize) -> OVInstance {
    random::ov_instance(&mut rng((n * 1000 + d) as u64), n, d, 0.5)
}
