//! Seeded generators for test and benchmark workloads. All take a caller
//! supplied RNG; `rng(seed)` gives the reproducible default.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Label, LabeledGraph};
use crate::reductions::OVInstance;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn labels(rng: &mut impl Rng, n: usize, sigma: u32) -> Vec<Label> {
    (0..n).map(|_| Label(rng.random_range(0..sigma))).collect()
}

fn finish(directed: bool, sigma: u32, labels: Vec<Label>, edges: Vec<(usize, usize)>) -> LabeledGraph {
    LabeledGraph::new(directed, sigma, labels, edges).expect("generated graph is valid")
}

/// Directed graph on `n` vertices, each ordered pair (self-loops included)
/// an edge with probability `density`.
pub fn digraph(rng: &mut impl Rng, n: usize, sigma: u32, density: f64) -> LabeledGraph {
    let labels = labels(rng, n, sigma);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    finish(true, sigma, labels, edges)
}

/// DAG whose edges go from lower to higher index, each with probability
/// `density`.
pub fn dag(rng: &mut impl Rng, n: usize, sigma: u32, density: f64) -> LabeledGraph {
    let labels = labels(rng, n, sigma);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    finish(true, sigma, labels, edges)
}

/// DAG in which no vertex has two out-neighbors with the same label.
pub fn deterministic_dag(rng: &mut impl Rng, n: usize, sigma: u32, density: f64) -> LabeledGraph {
    let labels = labels(rng, n, sigma);
    let mut edges = Vec::new();
    for u in 0..n {
        let mut used = vec![false; sigma as usize];
        for (v, label) in labels.iter().enumerate().skip(u + 1) {
            let l = label.index();
            if !used[l] && rng.random_bool(density) {
                used[l] = true;
                edges.push((u, v));
            }
        }
    }
    finish(true, sigma, labels, edges)
}

/// Undirected simple graph, each unordered pair an edge with probability
/// `density`.
pub fn undirected(rng: &mut impl Rng, n: usize, sigma: u32, density: f64) -> LabeledGraph {
    let labels = labels(rng, n, sigma);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    finish(false, sigma, labels, edges)
}

/// Uniformly attached random tree: vertex `i > 0` joins a random earlier
/// vertex, then vertex ids are shuffled.
pub fn tree(rng: &mut impl Rng, n: usize, sigma: u32) -> LabeledGraph {
    let labels = labels(rng, n, sigma);
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let edges = (1..n).map(|i| (ids[rng.random_range(0..i)], ids[i])).collect();
    finish(false, sigma, labels, edges)
}

/// Undirected path `0 - 1 - … - (n-1)`.
pub fn path_graph(rng: &mut impl Rng, n: usize, sigma: u32) -> LabeledGraph {
    let labels = labels(rng, n, sigma);
    finish(false, sigma, labels, (1..n).map(|i| (i - 1, i)).collect())
}

/// Random string of `len` labels.
pub fn string(rng: &mut impl Rng, len: usize, sigma: u32) -> Vec<Label> {
    labels(rng, len, sigma)
}

/// OV instance with `n` distinct vectors in `A` (so `n ≤ 2^d`) and `n`
/// arbitrary vectors in `B`, each bit set with probability `p`.
pub fn ov_instance(rng: &mut impl Rng, n: usize, d: usize, p: f64) -> OVInstance {
    assert!(d < 64 && n as u64 <= 1u64 << d, "cannot draw {n} distinct vectors of dimension {d}");
    let vector = |rng: &mut _| (0..d).map(|_| Rng::random_bool(rng, p)).collect::<Vec<bool>>();
    let mut a: Vec<Vec<bool>> = Vec::with_capacity(n);
    let mut seen = std::collections::HashSet::new();
    while a.len() < n {
        let v = vector(rng);
        if seen.insert(v.clone()) {
            a.push(v);
        }
    }
    let b = (0..n).map(|_| vector(rng)).collect();
    OVInstance::new(a, b).expect("distinct, equal-sized sets")
}

/// Directed graph where every label occurs at most `per_label` times and
/// each vertex has up to `out_degree` random out-neighbors, so product size
/// stays linear in `n`.
pub fn label_sparse(rng: &mut impl Rng, n: usize, per_label: usize, out_degree: usize) -> LabeledGraph {
    let sigma = n.div_ceil(per_label.max(1)).max(1) as u32;
    let mut labels: Vec<Label> = (0..n).map(|i| Label((i / per_label.max(1)) as u32)).collect();
    labels.shuffle(rng);
    let mut edges = Vec::with_capacity(n * out_degree);
    for u in 0..n {
        let mut targets: Vec<usize> = (0..out_degree).map(|_| rng.random_range(0..n)).collect();
        targets.sort_unstable();
        targets.dedup();
        edges.extend(targets.into_iter().map(|v| (u, v)));
    }
    finish(true, sigma, labels, edges)
}
