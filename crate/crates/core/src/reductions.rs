//! Instance generators for the two hardness constructions: pattern matching
//! in a deterministic DAG to LRSP, and Orthogonal Vectors to LRSP, LCSP and
//! single-pair matching statistics.
//!
//! Vertex numbering is fixed gadget by gadget and recorded in
//! [`ReductionOutput::regions`], so generated files are reproducible.

use std::collections::{BTreeMap, HashSet};
use std::ops::Range;

use crate::dag::topo_order;
use crate::error::{Error, Result};
use crate::graph::{is_deterministic, Label, LabeledGraph};
use crate::product::self_product;

/// A named block of consecutive vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetRegion {
    pub name: String,
    pub vertices: Range<usize>,
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub graph: LabeledGraph,
    /// The answer reaches this length iff the source instance is a yes-instance.
    pub threshold: usize,
    /// `⌈log₂ n⌉` for the OV construction; `None` otherwise.
    pub k: Option<usize>,
    pub regions: Vec<GadgetRegion>,
}

/// Accumulates vertices and edges while recording gadget regions.
#[derive(Default)]
struct Builder {
    labels: Vec<Label>,
    edges: Vec<(usize, usize)>,
    regions: Vec<GadgetRegion>,
    open: Option<(String, usize)>,
}

impl Builder {
    fn vertex(&mut self, l: Label) -> usize {
        self.labels.push(l);
        self.labels.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn all_to_all(&mut self, from: &[usize], to: &[usize]) {
        for &u in from {
            for &v in to {
                self.edge(u, v);
            }
        }
    }

    fn begin(&mut self, name: impl Into<String>) {
        self.end();
        self.open = Some((name.into(), self.labels.len()));
    }

    fn end(&mut self) {
        if let Some((name, start)) = self.open.take() {
            self.regions.push(GadgetRegion { name, vertices: start..self.labels.len() });
        }
    }

    fn finish(mut self, sigma: u32) -> Result<(LabeledGraph, Vec<GadgetRegion>)> {
        self.end();
        Ok((LabeledGraph::new(true, sigma, self.labels, self.edges)?, self.regions))
    }
}

/// Builds `G'` such that `pattern` occurs in `g` iff the longest repeated
/// string of `G'` has length `|V| + |pattern| + 1`.
///
/// Layout: the copy of `g`; gadget `H1` (a path of `n` filler vertices, then
/// a level of `n` vertices labeled `σ..σ+n-1`, level vertex `i` pointing at
/// vertex `i` of `g`); gadget `H2` (same shape, every level vertex pointing
/// at the pattern's first vertex); the pattern path. The filler label is
/// the label of vertex 0.
pub fn smlg_to_lrsp(g: &LabeledGraph, pattern: &[Label]) -> Result<ReductionOutput> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if let crate::graph::Determinism::Nondeterministic { vertex } = is_deterministic(g)? {
        return Err(Error::NonDeterministic(vertex));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidInstance("graph must have at least one vertex".into()));
    }
    topo_order(&self_product(g)?)?;

    let sigma = g.sigma().max(pattern.iter().map(|l| l.0 + 1).max().unwrap_or(0));
    let filler = g.label(0);
    let mut b = Builder::default();

    b.begin("G");
    for v in 0..n {
        b.vertex(g.label(v));
    }
    for &(u, v) in g.edges() {
        b.edge(u, v);
    }

    let pattern_start = 5 * n;
    for (name, wire_to_g) in [("H1", true), ("H2", false)] {
        b.begin(format!("{name}.path"));
        let path: Vec<usize> = (0..n).map(|_| b.vertex(filler)).collect();
        for w in path.windows(2) {
            b.edge(w[0], w[1]);
        }
        b.begin(format!("{name}.level"));
        let level: Vec<usize> = (0..n).map(|i| b.vertex(Label(sigma + i as u32))).collect();
        b.all_to_all(&path[n - 1..], &level);
        for (i, &x) in level.iter().enumerate() {
            b.edge(x, if wire_to_g { i } else { pattern_start });
        }
    }

    b.begin("P");
    let pat: Vec<usize> = pattern.iter().map(|&l| b.vertex(l)).collect();
    debug_assert_eq!(pat[0], pattern_start);
    for w in pat.windows(2) {
        b.edge(w[0], w[1]);
    }

    let (graph, regions) = b.finish(sigma + n as u32)?;
    Ok(ReductionOutput { graph, threshold: n + pattern.len() + 1, k: None, regions })
}

/// Two sets `A`, `B` of `n` vectors in `{0,1}^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OVInstance {
    a: Vec<Vec<bool>>,
    b: Vec<Vec<bool>>,
    d: usize,
}

impl OVInstance {
    pub fn new(a: Vec<Vec<bool>>, b: Vec<Vec<bool>>) -> Result<Self> {
        let n = a.len();
        if n == 0 || b.len() != n {
            return Err(Error::InvalidInstance(format!("|A| = {n}, |B| = {}; need equal and positive", b.len())));
        }
        let d = a[0].len();
        if d == 0 {
            return Err(Error::InvalidInstance("dimension must be positive".into()));
        }
        if let Some(v) = a.iter().chain(&b).find(|v| v.len() != d) {
            return Err(Error::InvalidInstance(format!(
                "vector of dimension {} in a {d}-dimensional instance",
                v.len()
            )));
        }
        let mut seen = HashSet::new();
        for (i, v) in a.iter().enumerate() {
            if !seen.insert(v) {
                return Err(Error::DuplicateVector(i));
            }
        }
        Ok(OVInstance { a, b, d })
    }

    /// Parses one 0/1 row per vector (digits optionally space-separated),
    /// the `A` block, a blank line, then the `B` block.
    pub fn parse(text: &str) -> Result<Self> {
        let mut blocks: Vec<Vec<Vec<bool>>> = vec![Vec::new()];
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.starts_with('#') {
                continue;
            }
            if line.is_empty() {
                if !blocks.last().expect("a block").is_empty() {
                    blocks.push(Vec::new());
                }
                continue;
            }
            let row = line
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::Syntax { line: i + 1, msg: format!("unexpected {c:?} in vector") }),
                })
                .collect::<Result<Vec<bool>>>()?;
            blocks.last_mut().expect("a block").push(row);
        }
        blocks.retain(|b| !b.is_empty());
        if blocks.len() != 2 {
            return Err(Error::Syntax {
                line: text.lines().count().max(1),
                msg: format!("expected two blank-line separated blocks, found {}", blocks.len()),
            });
        }
        let b = blocks.pop().expect("B");
        let a = blocks.pop().expect("A");
        Self::new(a, b)
    }

    pub fn a(&self) -> &[Vec<bool>] {
        &self.a
    }

    pub fn b(&self) -> &[Vec<bool>] {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `⌈log₂ n⌉`.
    pub fn k(&self) -> usize {
        self.n().next_power_of_two().trailing_zeros() as usize
    }

    pub fn threshold(&self) -> usize {
        self.k() + self.d + 2
    }
}

/// Whether some `a ∈ A`, `b ∈ B` have zero dot product, by trying all pairs.
pub fn ov_brute(inst: &OVInstance) -> bool {
    inst.a.iter().any(|a| inst.b.iter().any(|b| a.iter().zip(b).all(|(&x, &y)| !(x && y))))
}

const ZERO: Label = Label(0);
const ONE: Label = Label(1);
/// The separator `c`, relabeled to 0 once the construction is done.
const C: Label = Label(2);

fn bit(x: bool) -> Label {
    if x {
        ONE
    } else {
        ZERO
    }
}

/// `G_A`: the universal gadget `U` (a `c` source and `k` levels holding a 0
/// and a 1 vertex, consecutive levels fully connected) whose last level
/// feeds the root of the trie of the strings `c a[1] … a[d]`.
fn build_a_side(b: &mut Builder, inst: &OVInstance) {
    let k = inst.k();
    b.begin("U");
    let source = b.vertex(C);
    let mut last = vec![source];
    for _ in 0..k {
        let level = vec![b.vertex(ZERO), b.vertex(ONE)];
        b.all_to_all(&last, &level);
        last = level;
    }

    b.begin("K");
    let root = b.vertex(C);
    b.all_to_all(&last, &[root]);
    let mut children: BTreeMap<(usize, bool), usize> = BTreeMap::new();
    for a in &inst.a {
        let mut cur = root;
        for &x in a {
            cur = match children.get(&(cur, x)) {
                Some(&next) => next,
                None => {
                    let next = b.vertex(bit(x));
                    b.edge(cur, next);
                    children.insert((cur, x), next);
                    next
                }
            };
        }
    }
}

/// `G_B`: the complete binary tree `T` of height `k + 1` (root `c`, left
/// children 0, right children 1, heap numbered), whose `i`-th leaf feeds the
/// source of the gadget for `b_i`. That gadget has a `c` source and `d`
/// levels: `{0, 1}` where `b[i] = 0`, `{0}` where `b[i] = 1`, consecutive
/// levels fully connected. Surplus leaves stay childless.
fn build_b_side(b: &mut Builder, inst: &OVInstance) {
    let k = inst.k();
    b.begin("T");
    let root = b.vertex(C);
    let mut level = vec![root];
    for _ in 0..k {
        let mut next = Vec::with_capacity(level.len() * 2);
        for &x in &level {
            let l = b.vertex(ZERO);
            let r = b.vertex(ONE);
            b.edge(x, l);
            b.edge(x, r);
            next.extend([l, r]);
        }
        level = next;
    }
    for (i, vec_b) in inst.b.iter().enumerate() {
        b.begin(format!("B{i}"));
        let source = b.vertex(C);
        b.edge(level[i], source);
        let mut last = vec![source];
        for &x in vec_b {
            let cur = if x { vec![b.vertex(ZERO)] } else { vec![b.vertex(ZERO), b.vertex(ONE)] };
            b.all_to_all(&last, &cur);
            last = cur;
        }
    }
}

fn relabel_separator(g: LabeledGraph) -> Result<LabeledGraph> {
    let labels = g.labels().iter().map(|&l| if l == C { ZERO } else { l }).collect();
    LabeledGraph::new(true, 2, labels, g.edges().to_vec())
}

fn side(inst: &OVInstance, a_side: bool) -> Result<(LabeledGraph, Vec<GadgetRegion>)> {
    let mut b = Builder::default();
    if a_side {
        build_a_side(&mut b, inst);
    } else {
        build_b_side(&mut b, inst);
    }
    let (g, regions) = b.finish(3)?;
    Ok((relabel_separator(g)?, regions))
}

/// The OV graph: `G_A` (vertices first) and `G_B` side by side. It has a
/// repeated string of length `k + d + 2` iff `A` and `B` hold an orthogonal
/// pair.
pub fn ov_to_lrsp(inst: &OVInstance) -> Result<ReductionOutput> {
    let mut b = Builder::default();
    build_a_side(&mut b, inst);
    let offset = b.labels.len();
    build_b_side(&mut b, inst);
    let (g, regions) = b.finish(3)?;
    let graph = relabel_separator(g)?;
    debug_assert!(regions.iter().any(|r| r.vertices.start == offset));
    Ok(ReductionOutput { graph, threshold: inst.threshold(), k: Some(inst.k()), regions })
}

/// `(G_B, G_A, threshold)`: the two components as LCSP inputs.
pub fn ov_to_lcsp(inst: &OVInstance) -> Result<(LabeledGraph, LabeledGraph, usize)> {
    Ok((side(inst, false)?.0, side(inst, true)?.0, inst.threshold()))
}

/// `(G_B, G_A, root of T, source of U, threshold)`.
pub fn ov_to_msp_star(inst: &OVInstance) -> Result<(LabeledGraph, LabeledGraph, usize, usize, usize)> {
    let (g1, g2, t) = ov_to_lcsp(inst)?;
    Ok((g1, g2, 0, 0, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::general::{lcsp_general, lrsp_general, msp_star, CommonAnswer, MsValue};
    use crate::graph::letters;

    fn inst(a: &[&str], b: &[&str]) -> OVInstance {
        let rows = |xs: &[&str]| xs.iter().map(|s| s.bytes().map(|c| c == b'1').collect()).collect();
        OVInstance::new(rows(a), rows(b)).unwrap()
    }

    #[test]
    fn ov_brute_examples() {
        assert!(ov_brute(&inst(&["10"], &["01"])));
        assert!(!ov_brute(&inst(&["1"], &["1"])));
        assert!(!ov_brute(&inst(&["11", "10"], &["11", "10"])));
    }

    #[test]
    fn instance_validation() {
        assert_eq!(
            OVInstance::new(vec![vec![true], vec![true]], vec![vec![true], vec![false]]),
            Err(Error::DuplicateVector(1))
        );
        assert!(OVInstance::new(vec![], vec![]).is_err());
        assert!(OVInstance::new(vec![vec![true]], vec![vec![true, false]]).is_err());
        let parsed = OVInstance::parse("10\n0 1\n\n10\n11\n").unwrap();
        assert_eq!(parsed, inst(&["10", "01"], &["10", "11"]));
        assert!(OVInstance::parse("10\n").is_err());
        assert!(OVInstance::parse("12\n\n10\n").is_err());
    }

    #[test]
    fn k_values() {
        assert_eq!(inst(&["0"], &["0"]).k(), 0);
        assert_eq!(inst(&["0", "1"], &["0", "1"]).k(), 1);
        assert_eq!(inst(&["00", "01", "10"], &["00", "01", "10"]).k(), 2);
    }

    fn lrsp_len(g: &LabeledGraph) -> usize {
        lrsp_general(g).unwrap().finite_length().expect("DAG answer is finite")
    }

    #[test]
    fn ov_examples() {
        let yes = inst(&["10", "01"], &["10", "11"]);
        let out = ov_to_lrsp(&yes).unwrap();
        assert_eq!((out.k, out.threshold), (Some(1), 5));
        assert_eq!(lrsp_len(&out.graph), 5);

        let no = inst(&["11", "10"], &["11", "10"]);
        assert!(lrsp_len(&ov_to_lrsp(&no).unwrap().graph) < 5);

        let tiny = inst(&["0"], &["0"]);
        let out = ov_to_lrsp(&tiny).unwrap();
        assert_eq!(out.threshold, 3);
        assert_eq!(lrsp_len(&out.graph), 3);
    }

    #[test]
    fn ov_lcsp_and_msp_star() {
        for (i, yes) in [
            (inst(&["10", "01"], &["10", "11"]), true),
            (inst(&["11", "10"], &["11", "10"]), false),
            (inst(&["0"], &["0"]), true),
            (inst(&["1"], &["1"]), false),
        ] {
            let (g1, g2, t) = ov_to_lcsp(&i).unwrap();
            let CommonAnswer::Finite(m) = lcsp_general(&g1, &g2).unwrap() else { panic!("finite") };
            assert_eq!(m.length == t, yes);
            assert!(m.length <= t);
            let (g1, g2, v1, v2, t) = ov_to_msp_star(&i).unwrap();
            let MsValue::Finite(ms) = msp_star(&g1, &g2, v1, v2).unwrap() else { panic!("finite") };
            assert_eq!(ms == t, yes);
        }
    }

    #[test]
    fn ov_layout() {
        let out = ov_to_lrsp(&inst(&["10", "01"], &["10", "11"])).unwrap();
        let names: Vec<&str> = out.regions.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["U", "K", "T", "B0", "B1"]);
        assert_eq!(out.graph.sigma(), 2);
        assert!(is_deterministic(&out.graph).unwrap().is_deterministic());
    }

    #[test]
    fn smlg_examples() {
        let g = LabeledGraph::path(&letters("ab"));
        let out = smlg_to_lrsp(&g, &letters("ab")).unwrap();
        assert_eq!(out.threshold, 5);
        assert_eq!(lrsp_len(&out.graph), 5);
        let out = smlg_to_lrsp(&g, &letters("ba")).unwrap();
        assert!(lrsp_len(&out.graph) < 5);

        let fork = LabeledGraph::directed(letters("abb"), vec![(0, 1), (0, 2)]).unwrap();
        assert_eq!(smlg_to_lrsp(&fork, &letters("ab")).unwrap_err(), Error::NonDeterministic(0));
        let cyc = LabeledGraph::cycle(&letters("ab"));
        assert!(matches!(smlg_to_lrsp(&cyc, &letters("ab")), Err(Error::Cycle(..))));
        assert_eq!(smlg_to_lrsp(&g, &[]).unwrap_err(), Error::EmptyPattern);
    }

    #[test]
    fn smlg_layout() {
        let g = LabeledGraph::path(&letters("ab"));
        let out = smlg_to_lrsp(&g, &letters("abb")).unwrap();
        let names: Vec<&str> = out.regions.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["G", "H1.path", "H1.level", "H2.path", "H2.level", "P"]);
        assert_eq!(out.regions[5].vertices, 10..13);
        assert_eq!(out.graph.sigma(), 4);
    }
}
