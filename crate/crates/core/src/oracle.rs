//! Brute-force reference implementations for cross-checking the solvers on
//! tiny inputs. Everything here works from vertex labels and the raw edge
//! list alone; no product graph, SCC or DP code from the rest of the crate is
//! used.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Label, LabeledGraph};

/// Default cap on walks expanded by [`OccurrenceIndex::enumerate`].
pub const DEFAULT_WALK_BUDGET: u64 = 10_000_000;

fn adjacency(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        if !g.is_directed() {
            adj[v].push(u);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    adj
}

/// All walks of at most `bound` vertices, grouped by spelling.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OccurrenceIndex {
    map: BTreeMap<Vec<Label>, BTreeSet<Vec<usize>>>,
}

impl OccurrenceIndex {
    pub fn enumerate(g: &LabeledGraph, bound: usize) -> Result<Self> {
        Self::enumerate_with_budget(g, bound, DEFAULT_WALK_BUDGET)
    }

    /// Like [`enumerate`](Self::enumerate), failing with
    /// [`Error::BudgetExceeded`] once more than `budget` walks are expanded.
    pub fn enumerate_with_budget(g: &LabeledGraph, bound: usize, budget: u64) -> Result<Self> {
        let adj = adjacency(g);
        let mut index = OccurrenceIndex::default();
        let mut expanded = 0u64;
        let mut stack: Vec<Vec<usize>> = (0..g.vertex_count()).rev().map(|v| vec![v]).collect();
        while let Some(walk) = stack.pop() {
            expanded += 1;
            if expanded > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            let spelling = walk.iter().map(|&v| g.label(v)).collect();
            if walk.len() < bound {
                let last = *walk.last().expect("non-empty walk");
                for &next in adj[last].iter().rev() {
                    let mut longer = walk.clone();
                    longer.push(next);
                    stack.push(longer);
                }
            }
            index.map.entry(spelling).or_default().insert(walk);
        }
        Ok(index)
    }

    pub fn occurrences(&self, s: &[Label]) -> Option<&BTreeSet<Vec<usize>>> {
        self.map.get(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Label>, &BTreeSet<Vec<usize>>)> {
        self.map.iter()
    }

    /// Longest spelling with at least two walks in the index.
    pub fn longest_repeat(&self) -> usize {
        self.map.iter().filter(|(_, w)| w.len() >= 2).map(|(s, _)| s.len()).max().unwrap_or(0)
    }
}

/// Number of walks spelling `s`, saturating at `u64::MAX`.
pub fn count_occurrences(g: &LabeledGraph, s: &[Label]) -> u64 {
    let adj = adjacency(g);
    let Some((&first, rest)) = s.split_first() else { return 0 };
    let mut ways: Vec<u64> = g.labels().iter().map(|&l| u64::from(l == first)).collect();
    for &l in rest {
        let mut next = vec![0u64; ways.len()];
        for (u, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for &v in &adj[u] {
                if g.label(v) == l {
                    next[v] = next[v].saturating_add(w);
                }
            }
        }
        ways = next;
    }
    ways.iter().fold(0u64, |a, &b| a.saturating_add(b))
}

/// Number of vertex pairs with equal labels, counted pair by pair.
pub fn naive_pair_count(g1: &LabeledGraph, g2: &LabeledGraph) -> usize {
    g1.labels().iter().map(|&a| g2.labels().iter().filter(|&&b| a == b).count()).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruteRepeat {
    Finite(usize),
    NonFinite,
}

/// Lengths `1..=bound` at which two walks (one in each graph, or a pair of
/// distinct walks in the same graph when `distinct` is set) spell the same
/// string; returns the largest such length, 0 if none.
fn longest_pair_walk(
    g1: &LabeledGraph,
    g2: &LabeledGraph,
    starts: &[(usize, usize)],
    distinct: bool,
    bound: usize,
) -> usize {
    let (a1, a2) = (adjacency(g1), adjacency(g2));
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    // State (u, v, differed so far).
    let idx = |u: usize, v: usize, d: bool| (u * n2 + v) * 2 + usize::from(d);
    let mut layer = vec![false; n1 * n2 * 2];
    for &(u, v) in starts {
        if g1.label(u) == g2.label(v) {
            layer[idx(u, v, distinct && u != v)] = true;
        }
    }
    let accepting = |layer: &[bool]| (0..layer.len()).any(|s| layer[s] && (!distinct || s % 2 == 1));
    let mut best = 0;
    for len in 1..=bound {
        if accepting(&layer) {
            best = len;
        }
        if len == bound || !layer.iter().any(|&b| b) {
            break;
        }
        let mut next = vec![false; layer.len()];
        for u in 0..n1 {
            for v in 0..n2 {
                for d in [false, true] {
                    if !layer[idx(u, v, d)] {
                        continue;
                    }
                    for &x in &a1[u] {
                        for &y in &a2[v] {
                            if g1.label(x) == g2.label(y) {
                                next[idx(x, y, d || (distinct && x != y))] = true;
                            }
                        }
                    }
                }
            }
        }
        layer = next;
    }
    best
}

fn all_pairs(n1: usize, n2: usize) -> Vec<(usize, usize)> {
    (0..n1).flat_map(|u| (0..n2).map(move |v| (u, v))).collect()
}

/// Classifies the repeats of `g` by searching all pairs of walks of up to
/// `B = P + 1` vertices, `P` the number of equal-label vertex pairs. A
/// repeat of `B` labels forces a repeated pair of positions, hence repeats
/// of every length.
pub fn brute_lrsp_classify(g: &LabeledGraph) -> Result<BruteRepeat> {
    if !g.is_directed() {
        return Err(Error::ExpectedDirected);
    }
    let bound = naive_pair_count(g, g) + 1;
    let n = g.vertex_count();
    let best = longest_pair_walk(g, g, &all_pairs(n, n), true, bound);
    Ok(if best >= bound { BruteRepeat::NonFinite } else { BruteRepeat::Finite(best) })
}

/// Longest common string of at most `bound` labels.
pub fn brute_lcsp(g1: &LabeledGraph, g2: &LabeledGraph, bound: usize) -> usize {
    longest_pair_walk(g1, g2, &all_pairs(g1.vertex_count(), g2.vertex_count()), false, bound)
}

/// Per vertex `v` of `g1`, the longest walk from `v` whose spelling occurs
/// in `g2`, capped at `bound`.
pub fn brute_msp(g1: &LabeledGraph, g2: &LabeledGraph, bound: usize) -> Vec<usize> {
    (0..g1.vertex_count()).map(|u| brute_msp_star(g1, g2, u, None, bound)).collect()
}

/// Longest common walk starting at `v1` (and at `v2` if given), capped.
pub fn brute_msp_star(g1: &LabeledGraph, g2: &LabeledGraph, v1: usize, v2: Option<usize>, bound: usize) -> usize {
    let starts: Vec<(usize, usize)> = match v2 {
        Some(v) => vec![(v1, v)],
        None => (0..g2.vertex_count()).map(|v| (v1, v)).collect(),
    };
    longest_pair_walk(g1, g2, &starts, false, bound)
}

/// Whether `pattern` spells some walk of `g`, by BFS over (vertex, position).
pub fn brute_smlg(g: &LabeledGraph, pattern: &[Label]) -> bool {
    let adj = adjacency(g);
    let m = pattern.len();
    if m == 0 {
        return false;
    }
    let n = g.vertex_count();
    let mut seen = vec![vec![false; m]; n];
    let mut queue: std::collections::VecDeque<(usize, usize)> =
        (0..n).filter(|&v| g.label(v) == pattern[0]).map(|v| (v, 0)).collect();
    for &(v, _) in &queue {
        seen[v][0] = true;
    }
    while let Some((v, i)) = queue.pop_front() {
        if i + 1 == m {
            return true;
        }
        for &w in &adj[v] {
            if g.label(w) == pattern[i + 1] && !seen[w][i + 1] {
                seen[w][i + 1] = true;
                queue.push_back((w, i + 1));
            }
        }
    }
    false
}

/// A product vertex as `(left, right)`.
pub type Pair = (usize, usize);

/// Vertex and edge lists of the labeled direct product, built by the
/// definition: every pair of vertices, every pair of edges.
pub fn naive_product(g1: &LabeledGraph, g2: &LabeledGraph) -> (BTreeSet<Pair>, BTreeSet<(Pair, Pair)>) {
    let mut vertices = BTreeSet::new();
    for u in 0..g1.vertex_count() {
        for v in 0..g2.vertex_count() {
            if g1.label(u) == g2.label(v) {
                vertices.insert((u, v));
            }
        }
    }
    let mut edges = BTreeSet::new();
    for &(u, u2) in g1.edges() {
        for &(v, v2) in g2.edges() {
            if vertices.contains(&(u, v)) && vertices.contains(&(u2, v2)) {
                edges.insert(((u, v), (u2, v2)));
            }
        }
    }
    (vertices, edges)
}

/// True iff some off-diagonal pair reaches a pair lying on a cycle in the
/// naively built self-product, via Warshall's transitive closure.
pub fn brute_infinite_check(g: &LabeledGraph) -> bool {
    let (vertices, edges) = naive_product(g, g);
    let vs: Vec<(usize, usize)> = vertices.into_iter().collect();
    let pos = |q: (usize, usize)| vs.binary_search(&q).expect("product vertex");
    let k = vs.len();
    let mut reach = vec![vec![false; k]; k];
    for (a, b) in edges {
        reach[pos(a)][pos(b)] = true;
    }
    for m in 0..k {
        for i in 0..k {
            if reach[i][m] {
                let via = reach[m].clone();
                for (r, v) in reach[i].iter_mut().zip(via) {
                    *r |= v;
                }
            }
        }
    }
    (0..k).any(|i| {
        let (u, v) = vs[i];
        u != v && (0..k).any(|j| (i == j || reach[i][j]) && reach[j][j])
    })
}

/// Longest string spelled by two distinct simple paths of an undirected
/// graph (a path and its reversal count as distinct when they differ).
pub fn brute_undirected_path_lrsp(g: &LabeledGraph, budget: u64) -> Result<usize> {
    if g.is_directed() {
        return Err(Error::ExpectedUndirected);
    }
    let adj = adjacency(g);
    let mut by_spelling: BTreeMap<Vec<Label>, usize> = BTreeMap::new();
    let mut expanded = 0u64;
    let mut stack: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| vec![v]).collect();
    while let Some(path) = stack.pop() {
        expanded += 1;
        if expanded > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        *by_spelling.entry(path.iter().map(|&v| g.label(v)).collect()).or_default() += 1;
        let last = *path.last().expect("non-empty path");
        for &next in &adj[last] {
            if !path.contains(&next) {
                let mut longer = path.clone();
                longer.push(next);
                stack.push(longer);
            }
        }
    }
    Ok(by_spelling.iter().filter(|(_, &c)| c >= 2).map(|(s, _)| s.len()).max().unwrap_or(0))
}
