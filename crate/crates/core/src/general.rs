//! Solvers for graphs with cycles. Common and repeated strings may now be
//! infinite; they are reported through finite descriptions `R`, `S` of
//! ultimately periodic strings `R·S^ω` or of families `R^m·S`.

use std::collections::VecDeque;
use std::fmt;

use crate::dag::{lcsp_dag_within, longest_paths_within, lrsp_dag_within, msp_dag_within, LongestMatch};
use crate::error::{Error, Result};
use crate::graph::{nondeterministic_vertices, Label, LabeledGraph, Walk};
use crate::product::{build_product, self_product, ProductGraph, Side, VertexSet};

/// Strongly connected components of a product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    /// Component id of every vertex. Ids are in reverse topological order
    /// of the condensation (sinks first).
    pub component: Vec<usize>,
    pub count: usize,
    /// Vertices lying on some cycle: members of a component with at least
    /// two vertices, or carrying a self-loop.
    pub cyc: VertexSet,
}

/// Tarjan's algorithm with an explicit stack.
pub fn scc(p: &ProductGraph<'_>) -> SccDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = p.vertex_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut component = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut count = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (v, ref mut cursor)) = call.last_mut() {
            if *cursor == 0 && index[v] == UNSEEN {
                index[v] = counter;
                low[v] = counter;
                counter += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            let succ = p.out_neighbors(v);
            if let Some(&w) = succ.get(*cursor) {
                *cursor += 1;
                if index[w] == UNSEEN {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    component[w] = count;
                    if w == v {
                        break;
                    }
                }
                count += 1;
            }
        }
    }

    let mut sizes = vec![0usize; count];
    for &c in &component {
        sizes[c] += 1;
    }
    let cyc = VertexSet::from_mask((0..n).map(|x| sizes[component[x]] >= 2 || p.has_edge(x, x)).collect());
    SccDecomposition { component, count, cyc }
}

/// The vertex classes of a self-product `g ⊗ g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClasses {
    pub cyc: VertexSet,
    /// Off-diagonal pairs `(u, v)`, `u != v`.
    pub diff: VertexSet,
    /// Diagonal pairs `(v, v)` where `v` has two out-neighbors with equal labels.
    pub ndet: VertexSet,
}

pub fn classes(p: &ProductGraph<'_>, g: &LabeledGraph) -> Result<VertexClasses> {
    Ok(classes_with(p, g, &scc(p))?.0)
}

fn classes_with(
    p: &ProductGraph<'_>,
    g: &LabeledGraph,
    sccs: &SccDecomposition,
) -> Result<(VertexClasses, Vec<usize>)> {
    if !p.is_self_product() || p.left() != g {
        return Err(Error::NotSelfProduct);
    }
    let nondet = nondeterministic_vertices(g);
    let diagonal: Vec<usize> = (0..g.vertex_count()).map(|v| p.index_of(v, v).expect("diagonal vertex")).collect();
    let ndet = VertexSet::from_indices(p.vertex_count(), nondet.iter().map(|&v| diagonal[v]));
    Ok((VertexClasses { cyc: sccs.cyc.clone(), diff: p.off_diagonal(), ndet }, diagonal))
}

/// Shortest path from any vertex of `from` to any vertex of `to`, by
/// multi-source BFS. When the sets meet, the answer is a single vertex.
/// Sources and neighbors are scanned in ascending order.
pub fn reach_between(p: &ProductGraph<'_>, from: &VertexSet, to: &VertexSet) -> Option<Vec<usize>> {
    if let Some(x) = from.iter().find(|&x| to.contains(x)) {
        return Some(vec![x]);
    }
    let n = p.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for x in from.iter() {
        parent[x] = x;
        queue.push_back(x);
    }
    while let Some(x) = queue.pop_front() {
        for &y in p.out_neighbors(x) {
            if parent[y] != usize::MAX {
                continue;
            }
            parent[y] = x;
            if to.contains(y) {
                let mut path = vec![y];
                let mut cur = y;
                while parent[cur] != cur {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(y);
        }
    }
    None
}

/// A shortest cycle through `q`, listing each vertex once and starting at
/// `q`. A self-loop gives `[q]`.
fn cycle_through(p: &ProductGraph<'_>, q: usize, sccs: &SccDecomposition) -> Vec<usize> {
    let comp = sccs.component[q];
    let mut parent = vec![usize::MAX; p.vertex_count()];
    parent[q] = q;
    let mut queue = VecDeque::from([q]);
    while let Some(x) = queue.pop_front() {
        for &y in p.out_neighbors(x) {
            if y == q {
                let mut path = vec![x];
                let mut cur = x;
                while cur != q {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return path;
            }
            if parent[y] == usize::MAX && sccs.component[y] == comp {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    panic!("vertex {q} is not on a cycle");
}

/// Vertices that reach `targets` (including the targets themselves).
fn co_reachable(p: &ProductGraph<'_>, targets: &VertexSet) -> VertexSet {
    let mut seen = targets.clone();
    let mut queue: VecDeque<usize> = targets.iter().collect();
    while let Some(x) = queue.pop_front() {
        for &y in p.in_neighbors(x) {
            if !seen.contains(y) {
                seen.insert(y);
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Answer to the longest common string problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommonAnswer {
    Finite(LongestMatch),
    /// `period^ω` occurs in both graphs, along the cycles `first` and
    /// `second` (each vertex listed once).
    Infinite {
        period: Vec<Label>,
        first: Walk,
        second: Walk,
    },
}

/// Longest common string of two directed graphs.
pub fn lcsp_general(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<CommonAnswer> {
    lcsp_in_product(&build_product(g1, g2)?)
}

pub fn lcsp_in_product(p: &ProductGraph<'_>) -> Result<CommonAnswer> {
    let sccs = scc(p);
    if let Some(q) = sccs.cyc.iter().next() {
        let cycle = cycle_through(p, q, &sccs);
        return Ok(CommonAnswer::Infinite {
            period: p.spell(&cycle),
            first: p.project_vertices(&cycle, Side::Left),
            second: p.project_vertices(&cycle, Side::Right),
        });
    }
    Ok(CommonAnswer::Finite(lcsp_dag_within(p, &vec![true; p.vertex_count()])?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MsValue {
    Finite(usize),
    Infinite,
}

impl fmt::Display for MsValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MsValue::Finite(k) => write!(f, "{k}"),
            MsValue::Infinite => f.write_str("inf"),
        }
    }
}

/// Per-vertex matching statistics of the left graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingStatistics {
    pub values: Vec<MsValue>,
}

/// Matching statistics of `g1` against `g2`.
///
/// `MS(v)` is infinite exactly when some `(v, w)` reaches a cycle of the
/// product, since a walk into a cycle can be pumped forever. The remaining
/// vertices only reach the acyclic part, where the DAG recurrence applies.
pub fn msp_general(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<MatchingStatistics> {
    let p = build_product(g1, g2)?;
    let sccs = scc(&p);
    let infinite = co_reachable(&p, &sccs.cyc);
    let alive = infinite.complement();
    let finite = msp_dag_within(&p, alive.mask())?;
    let values = (0..g1.vertex_count())
        .map(|v| if p.block(v).any(|x| infinite.contains(x)) { MsValue::Infinite } else { MsValue::Finite(finite[v]) })
        .collect();
    Ok(MatchingStatistics { values })
}

/// Length of the longest string occurring in `g1` from `v1` and in `g2`
/// from `v2`.
pub fn msp_star(g1: &LabeledGraph, g2: &LabeledGraph, v1: usize, v2: usize) -> Result<MsValue> {
    if v1 >= g1.vertex_count() {
        return Err(Error::VertexOutOfRange(v1));
    }
    if v2 >= g2.vertex_count() {
        return Err(Error::VertexOutOfRange(v2));
    }
    let p = build_product(g1, g2)?;
    let Some(start) = p.index_of(v1, v2) else {
        return Ok(MsValue::Finite(0));
    };
    let sccs = scc(&p);
    let infinite = co_reachable(&p, &sccs.cyc);
    if infinite.contains(start) {
        return Ok(MsValue::Infinite);
    }
    let table = longest_paths_within(&p, infinite.complement().mask())?;
    Ok(MsValue::Finite(table.l_plus[start] + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepeatKind {
    Finite,
    Unbounded,
    Infinite,
}

/// Answer to the longest repeated string problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepeatAnswer {
    Finite(LongestMatch),
    /// `period^m · tail` is repeated for every `m >= 1`, but no infinite
    /// string is.
    Unbounded {
        period: Vec<Label>,
        tail: Vec<Label>,
    },
    /// `prefix · period^ω` is repeated.
    Infinite {
        prefix: Vec<Label>,
        period: Vec<Label>,
    },
}

impl RepeatAnswer {
    pub fn kind(&self) -> RepeatKind {
        match self {
            RepeatAnswer::Finite(_) => RepeatKind::Finite,
            RepeatAnswer::Unbounded { .. } => RepeatKind::Unbounded,
            RepeatAnswer::Infinite { .. } => RepeatKind::Infinite,
        }
    }

    /// Length of a finite answer.
    pub fn finite_length(&self) -> Option<usize> {
        match self {
            RepeatAnswer::Finite(m) => Some(m.length),
            _ => None,
        }
    }
}

/// Materializes a member of an unbounded family (`R^m·S`) or a prefix of an
/// infinite answer (`R·S^m`).
pub fn expand_answer(ans: &RepeatAnswer, m: usize) -> Result<Vec<Label>> {
    if m == 0 {
        return Err(Error::ZeroRepetitions);
    }
    match ans {
        RepeatAnswer::Finite(_) => Err(Error::FiniteAnswer),
        RepeatAnswer::Unbounded { period, tail } => {
            let mut s = period.repeat(m);
            s.extend_from_slice(tail);
            Ok(s)
        }
        RepeatAnswer::Infinite { prefix, period } => {
            let mut s = prefix.clone();
            s.extend(period.repeat(m));
            Ok(s)
        }
    }
}

/// Longest repeated string of a directed graph.
pub fn lrsp_general(g: &LabeledGraph) -> Result<RepeatAnswer> {
    if !g.is_directed() {
        return Err(Error::ExpectedDirected);
    }
    lrsp_in_product(&self_product(g)?, g)
}

/// The three checks, in order: an off-diagonal vertex reaching a cycle
/// means an infinite repeat; a diagonal cycle reaching a non-deterministic
/// diagonal vertex means unbounded repeats; otherwise the cycle vertices are
/// removed and the DAG recurrence finds the finite optimum.
pub fn lrsp_in_product(p: &ProductGraph<'_>, g: &LabeledGraph) -> Result<RepeatAnswer> {
    let sccs = scc(p);
    let (cls, diagonal) = classes_with(p, g, &sccs)?;

    if let Some(path) = first_source_path(p, &cls.diff, &cls.cyc) {
        let (&entry, lead) = path.split_last().expect("non-empty path");
        let cycle = cycle_through(p, entry, &sccs);
        return Ok(RepeatAnswer::Infinite { prefix: p.spell(lead), period: p.spell(&cycle) });
    }

    let diagonal_cyc =
        VertexSet::from_indices(p.vertex_count(), diagonal.iter().copied().filter(|&x| cls.cyc.contains(x)));
    if let Some(path) = first_source_path(p, &diagonal_cyc, &cls.ndet) {
        let start = path[0];
        let branch = *path.last().expect("non-empty path");
        let cycle = cycle_through(p, start, &sccs);
        let v = p.vertex(branch).left;
        let fork = first_forked_successor(g, v).expect("ndet vertex has a fork");
        let mut tail = p.spell(&path);
        tail.push(g.label(fork));
        return Ok(RepeatAnswer::Unbounded { period: p.spell(&cycle), tail });
    }

    let alive = cls.cyc.complement();
    Ok(RepeatAnswer::Finite(lrsp_dag_within(p, &cls.diff, alive.mask())?))
}

/// Shortest path to `to` from the smallest vertex of `from` that reaches it.
fn first_source_path(p: &ProductGraph<'_>, from: &VertexSet, to: &VertexSet) -> Option<Vec<usize>> {
    let reaching = co_reachable(p, to);
    let start = from.iter().find(|&x| reaching.contains(x))?;
    reach_between(p, &VertexSet::from_indices(p.vertex_count(), [start]), to)
}

/// Smallest out-neighbor of `v` sharing its label with another out-neighbor.
fn first_forked_successor(g: &LabeledGraph, v: usize) -> Option<usize> {
    let succ = g.out_neighbors(v);
    succ.iter().copied().find(|&w| succ.iter().any(|&x| x != w && g.label(x) == g.label(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::letters;

    fn g(labels: &str, edges: Vec<(usize, usize)>) -> LabeledGraph {
        LabeledGraph::directed(letters(labels), edges).unwrap()
    }

    /// C("ab") with vertex 1 also pointing at two c-labeled sinks.
    fn forked_cycle() -> LabeledGraph {
        g("abcc", vec![(0, 1), (1, 0), (1, 2), (1, 3)])
    }

    #[test]
    fn scc_examples() {
        let dag = LabeledGraph::path(&letters("aab"));
        assert!(scc(&self_product(&dag).unwrap()).cyc.is_empty());

        let c = LabeledGraph::cycle(&letters("ab"));
        let p = self_product(&c).unwrap();
        let s = scc(&p);
        assert!(s.cyc.contains(p.index_of(0, 0).unwrap()));
        assert!(s.cyc.contains(p.index_of(1, 1).unwrap()));

        let looped = g("ab", vec![(0, 0), (0, 1)]);
        let p = self_product(&looped).unwrap();
        let s = scc(&p);
        assert_eq!(s.cyc.iter().collect::<Vec<_>>(), vec![p.index_of(0, 0).unwrap()]);
        assert_eq!(s.count, 2);
    }

    #[test]
    fn class_examples() {
        let dag = LabeledGraph::path(&letters("abc"));
        let p = self_product(&dag).unwrap();
        assert!(classes(&p, &dag).unwrap().ndet.is_empty());

        let fork = g("abb", vec![(0, 1), (0, 2)]);
        let p = self_product(&fork).unwrap();
        let c = classes(&p, &fork).unwrap();
        assert_eq!(c.ndet.iter().collect::<Vec<_>>(), vec![p.index_of(0, 0).unwrap()]);

        let aa = LabeledGraph::path(&letters("aa"));
        let p = self_product(&aa).unwrap();
        let c = classes(&p, &aa).unwrap();
        let diff: Vec<_> = c.diff.iter().map(|x| p.vertex(x)).map(|v| (v.left, v.right)).collect();
        assert_eq!(diff, vec![(0, 1), (1, 0)]);

        let other = LabeledGraph::path(&letters("ab"));
        let q = build_product(&aa, &other).unwrap();
        assert_eq!(classes(&q, &aa), Err(Error::NotSelfProduct));
    }

    #[test]
    fn reach_between_examples() {
        let chain = LabeledGraph::path(&letters("abc"));
        let p = self_product(&chain).unwrap();
        let from = VertexSet::from_indices(3, [0]);
        assert_eq!(reach_between(&p, &from, &VertexSet::from_indices(3, [0, 2])), Some(vec![0]));
        assert_eq!(reach_between(&p, &from, &VertexSet::from_indices(3, [2])), Some(vec![0, 1, 2]));
        let back = VertexSet::from_indices(3, [2]);
        assert_eq!(reach_between(&p, &back, &VertexSet::from_indices(3, [0])), None);
    }

    #[test]
    fn lcsp_examples() {
        let c1 = LabeledGraph::cycle(&letters("ab"));
        let c2 = LabeledGraph::cycle(&letters("ba"));
        match lcsp_general(&c1, &c2).unwrap() {
            CommonAnswer::Infinite { period, first, second } => {
                assert_eq!(period.len(), 2);
                assert_eq!(crate::graph::spell(&c1, &first).unwrap(), period);
                assert_eq!(crate::graph::spell(&c2, &second).unwrap(), period);
            }
            a => panic!("unexpected {a:?}"),
        }
        let g1 = LabeledGraph::path(&letters("abab"));
        let g2 = LabeledGraph::path(&letters("bab"));
        match lcsp_general(&g1, &g2).unwrap() {
            CommonAnswer::Finite(m) => assert_eq!(m.length, 3),
            a => panic!("unexpected {a:?}"),
        }
        let cd = LabeledGraph::path(&letters("cd"));
        assert_eq!(lcsp_general(&g1, &cd).unwrap(), CommonAnswer::Finite(LongestMatch::empty()));
    }

    #[test]
    fn msp_examples() {
        use MsValue::*;
        let c = LabeledGraph::cycle(&letters("ab"));
        assert_eq!(msp_general(&c, &c).unwrap().values, vec![Infinite, Infinite]);
        let g1 = LabeledGraph::path(&letters("abc"));
        let g2 = LabeledGraph::path(&letters("bc"));
        assert_eq!(msp_general(&g1, &g2).unwrap().values, vec![Finite(0), Finite(2), Finite(1)]);
        // A vertex leading into a cycle is infinite too.
        let lead = g("cab", vec![(0, 1), (1, 2), (2, 1)]);
        assert_eq!(msp_general(&lead, &lead).unwrap().values, vec![Infinite; 3]);
    }

    #[test]
    fn msp_star_examples() {
        let g1 = LabeledGraph::path(&letters("ab"));
        let g2 = LabeledGraph::path(&letters("abc"));
        assert_eq!(msp_star(&g1, &g2, 0, 0).unwrap(), MsValue::Finite(2));
        assert_eq!(msp_star(&g1, &g2, 0, 1).unwrap(), MsValue::Finite(0));
        let c = LabeledGraph::cycle(&letters("ab"));
        assert_eq!(msp_star(&c, &c, 0, 0).unwrap(), MsValue::Infinite);
        assert_eq!(msp_star(&c, &c, 5, 0), Err(Error::VertexOutOfRange(5)));
    }

    #[test]
    fn lrsp_infinite_example() {
        let c = LabeledGraph::cycle(&letters("aa"));
        let ans = lrsp_general(&c).unwrap();
        assert_eq!(ans, RepeatAnswer::Infinite { prefix: vec![], period: letters("aa") });
    }

    #[test]
    fn lrsp_unbounded_example() {
        let ans = lrsp_general(&forked_cycle()).unwrap();
        assert_eq!(ans, RepeatAnswer::Unbounded { period: letters("ab"), tail: letters("abc") });
        assert_eq!(expand_answer(&ans, 2).unwrap(), letters("abababc"));
    }

    #[test]
    fn lrsp_finite_example() {
        let ans = lrsp_general(&LabeledGraph::path(&letters("aba"))).unwrap();
        assert_eq!(ans.finite_length(), Some(1));
    }

    #[test]
    fn expand_examples() {
        let inf = RepeatAnswer::Infinite { prefix: vec![], period: letters("aa") };
        assert_eq!(expand_answer(&inf, 2).unwrap(), letters("aaaa"));
        assert_eq!(expand_answer(&inf, 1).unwrap(), letters("aa"));
        let unb = RepeatAnswer::Unbounded { period: letters("ab"), tail: letters("abc") };
        assert_eq!(expand_answer(&unb, 1).unwrap(), letters("ababc"));
        assert_eq!(expand_answer(&unb, 0), Err(Error::ZeroRepetitions));
        let fin = RepeatAnswer::Finite(LongestMatch::empty());
        assert_eq!(expand_answer(&fin, 1), Err(Error::FiniteAnswer));
    }
}
