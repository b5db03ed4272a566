//! Longest repeated string in undirected graphs.
//!
//! With walk occurrences a repeat of length two already yields an infinite
//! repeat (walk back and forth over the same edge), so a linear scan over
//! edge label pairs decides everything. With path occurrences, undirected
//! paths reduce to a string problem on `T $ T⁻¹` and undirected trees to the
//! directed pipeline on an `n² + n` vertex tree.

use std::collections::{HashMap, VecDeque};

use crate::dag::{LongestMatch, WalkPair};
use crate::error::{Error, Result};
use crate::general::{lrsp_general, RepeatAnswer};
use crate::graph::{Label, LabeledGraph, Walk};
use crate::suffix::longest_repeat;

/// Same payloads as the directed answer; walks use edges in either direction.
pub type UndirectedRepeatAnswer = RepeatAnswer;

/// Walk-occurrence LRSP on an undirected graph, in linear time.
pub fn lrsp_undirected_walks(g: &LabeledGraph) -> Result<UndirectedRepeatAnswer> {
    if g.is_directed() {
        return Err(Error::ExpectedUndirected);
    }
    if let Some(((x, y), _)) = back_and_forth_witness(g) {
        return Ok(RepeatAnswer::Infinite { prefix: Vec::new(), period: vec![g.label(x), g.label(y)] });
    }
    Ok(RepeatAnswer::Finite(single_vertex_repeat(g)))
}

/// Two distinct arcs with equal label pairs, each edge `{u, v}` counting as
/// arcs `(u, v)` and `(v, u)`. Walking back and forth over each arc gives two
/// distinct occurrences of the same infinite string. Picks the smallest
/// label pair, then its two smallest arcs.
pub fn back_and_forth_witness(g: &LabeledGraph) -> Option<((usize, usize), (usize, usize))> {
    type Arcs = ((usize, usize), Option<(usize, usize)>);
    let mut by_pair: HashMap<(Label, Label), Arcs> = HashMap::new();
    for x in 0..g.vertex_count() {
        for &y in g.out_neighbors(x) {
            by_pair
                .entry((g.label(x), g.label(y)))
                .and_modify(|(_, second)| {
                    second.get_or_insert((x, y));
                })
                .or_insert(((x, y), None));
        }
    }
    by_pair
        .into_iter()
        .filter_map(|(key, (first, second))| Some((key, first, second?)))
        .min()
        .map(|(_, first, second)| (first, second))
}

/// Length 1 if two vertices share a label (smallest such pair), else 0.
fn single_vertex_repeat(g: &LabeledGraph) -> LongestMatch {
    let mut first: HashMap<Label, usize> = HashMap::new();
    for v in 0..g.vertex_count() {
        if let Some(&u) = first.get(&g.label(v)) {
            return LongestMatch {
                length: 1,
                witness: Some(WalkPair {
                    string: vec![g.label(v)],
                    first: Walk::new(vec![u]).expect("one vertex"),
                    second: Walk::new(vec![v]).expect("one vertex"),
                }),
            };
        }
        first.insert(g.label(v), v);
    }
    LongestMatch::empty()
}

/// Which special case a path-occurrence query was answered with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathCase {
    Path,
    Tree,
}

/// Path-occurrence LRSP on an undirected path or tree.
pub fn lrsp_undirected_paths(g: &LabeledGraph) -> Result<(PathCase, LongestMatch)> {
    if g.is_directed() {
        return Err(Error::ExpectedUndirected);
    }
    if path_order(g).is_ok() {
        Ok((PathCase::Path, lrsp_undirected_path_paths(g)?))
    } else {
        Ok((PathCase::Tree, lrsp_undirected_tree_paths(g)?))
    }
}

/// Vertices of an undirected path from one end to the other, starting at
/// the smaller endpoint.
fn path_order(g: &LabeledGraph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if g.is_directed() {
        return Err(Error::ExpectedUndirected);
    }
    if n == 0 || g.edge_count() != n - 1 || (0..n).any(|v| g.out_neighbors(v).len() > 2) {
        return Err(Error::NotAPath);
    }
    let start = (0..n).find(|&v| g.out_neighbors(v).len() <= 1).ok_or(Error::NotAPath)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.out_neighbors(cur).iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return Err(Error::NotAPath);
    }
    Ok(order)
}

/// Path-occurrence LRSP on an undirected path graph via the longest
/// repeated substring of `T $ T⁻¹`.
///
/// Only repeats of length at least two are taken from the text: a single
/// vertex read forward and backward is one and the same walk. Length one
/// falls back to the label histogram.
pub fn lrsp_undirected_path_paths(g: &LabeledGraph) -> Result<LongestMatch> {
    let order = path_order(g)?;
    let n = order.len();
    let separator = g.sigma();
    let mut text: Vec<u32> = order.iter().map(|&v| g.label(v).0).collect();
    text.push(separator);
    text.extend(order.iter().rev().map(|&v| g.label(v).0));

    // Text position -> vertex; the separator maps to nothing.
    let vertex_at = |pos: usize| if pos < n { order[pos] } else { order[2 * n - pos] };
    match longest_repeat(&text) {
        Some((len, a, b)) if len >= 2 => {
            let walk = |start: usize| Walk::new((start..start + len).map(vertex_at).collect()).expect("non-empty");
            let first = walk(a);
            Ok(LongestMatch {
                length: len,
                witness: Some(WalkPair {
                    string: first.vertices().iter().map(|&v| g.label(v)).collect(),
                    first,
                    second: walk(b),
                }),
            })
        }
        _ => Ok(single_vertex_repeat(g)),
    }
}

/// The directed tree `T'`: a `$`-labeled path `u_1 … u_n` whose last vertex
/// points at the roots of the `n` orientations `T_{v_i}` of the input tree.
#[derive(Debug, Clone)]
pub struct TreeReduction {
    pub graph: LabeledGraph,
    pub separator: Label,
    /// Vertex count of the input tree.
    pub n: usize,
}

impl TreeReduction {
    /// Input vertex copied at `x`, or `None` for the `$` path.
    pub fn original_vertex(&self, x: usize) -> Option<usize> {
        (x >= self.n).then(|| (x - self.n) % self.n)
    }
}

/// Builds `T'`. Vertex `i < n` is `u_{i+1}`; vertex `n + i·n + j` is the
/// copy of input vertex `j` in the tree rooted at `i`.
pub fn tree_reduction(t: &LabeledGraph) -> Result<TreeReduction> {
    check_tree(t)?;
    let n = t.vertex_count();
    let separator = Label(t.sigma());
    let mut labels = vec![separator; n];
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    for root in 0..n {
        let base = n + root * n;
        labels.extend_from_slice(t.labels());
        edges.push((n - 1, base + root));
        let mut parent = vec![usize::MAX; n];
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in t.out_neighbors(x) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    edges.push((base + x, base + y));
                    queue.push_back(y);
                }
            }
        }
    }
    let graph = LabeledGraph::new(true, t.sigma() + 1, labels, edges)?;
    Ok(TreeReduction { graph, separator, n })
}

fn check_tree(t: &LabeledGraph) -> Result<()> {
    if t.is_directed() {
        return Err(Error::ExpectedUndirected);
    }
    let n = t.vertex_count();
    if n == 0 || t.edge_count() != n - 1 {
        return Err(Error::NotATree);
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for &y in t.out_neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    if reached == n {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Path-occurrence LRSP on an undirected tree: solve `T'` with the directed
/// pipeline, drop the `$^n` prefix, and map the witnesses back.
pub fn lrsp_undirected_tree_paths(t: &LabeledGraph) -> Result<LongestMatch> {
    let red = tree_reduction(t)?;
    let n = red.n;
    let RepeatAnswer::Finite(m) = lrsp_general(&red.graph)? else {
        unreachable!("the reduction is a directed tree");
    };
    if m.length <= n {
        return Ok(LongestMatch::empty());
    }
    let w = m.witness.expect("positive length has a witness");
    let strip = |walk: &Walk| {
        debug_assert!(walk.vertices()[..n].iter().all(|&x| x < n));
        let vs = walk.vertices()[n..].iter().map(|&x| red.original_vertex(x).expect("tree vertex")).collect();
        Walk::new(vs).expect("non-empty")
    };
    Ok(LongestMatch {
        length: m.length - n,
        witness: Some(WalkPair { string: w.string[n..].to_vec(), first: strip(&w.first), second: strip(&w.second) }),
    })
}
