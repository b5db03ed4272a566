//! Vertex-labeled graphs: the data model, the text format, and a few
//! structural queries that the solvers need before they start.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// A symbol of the integer alphabet `0..sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub u32);

impl Label {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Label {
    fn from(v: u32) -> Self {
        Label(v)
    }
}

/// Maps letters `a..z` to labels `0..25`. Convenient for fixtures.
pub fn letters(s: &str) -> Vec<Label> {
    s.bytes()
        .map(|b| {
            assert!(b.is_ascii_lowercase(), "expected a..z, got {:?}", b as char);
            Label(u32::from(b - b'a'))
        })
        .collect()
}

/// How labels are written in text files and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelSyntax {
    /// Space-separated non-negative integers.
    #[default]
    Integer,
    /// Letters `a..z` standing for `0..25`. Tokens made of several letters
    /// are split into one label per letter; all-digit tokens still parse
    /// as integers.
    Letter,
}

impl LabelSyntax {
    pub fn parse_labels(self, line: &str) -> std::result::Result<Vec<Label>, String> {
        let mut out = Vec::new();
        for tok in line.split_whitespace() {
            if tok.bytes().all(|b| b.is_ascii_digit()) {
                let v = tok.parse::<u32>().map_err(|e| format!("bad label {tok:?}: {e}"))?;
                out.push(Label(v));
            } else if self == LabelSyntax::Letter && tok.bytes().all(|b| b.is_ascii_lowercase()) {
                out.extend(tok.bytes().map(|b| Label(u32::from(b - b'a'))));
            } else {
                return Err(format!("bad label {tok:?}"));
            }
        }
        Ok(out)
    }

    pub fn format_label(self, l: Label) -> String {
        match self {
            LabelSyntax::Letter if l.0 < 26 => ((b'a' + l.0 as u8) as char).to_string(),
            _ => l.0.to_string(),
        }
    }

    /// Space-separated labels, or `-` for the empty string.
    pub fn format_labels(self, ls: &[Label]) -> String {
        if ls.is_empty() {
            return "-".to_string();
        }
        ls.iter().map(|&l| self.format_label(l)).collect::<Vec<_>>().join(" ")
    }
}

/// A directed or undirected graph with one label per vertex.
///
/// Edges keep their input order (so that serialization round-trips), while
/// the adjacency lists are sorted. In an undirected graph each edge `{u, v}`
/// appears in the adjacency of both endpoints and `in_neighbors` equals
/// `out_neighbors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    directed: bool,
    sigma: u32,
    labels: Vec<Label>,
    edges: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl LabeledGraph {
    pub fn new(directed: bool, sigma: u32, labels: Vec<Label>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        for (v, &l) in labels.iter().enumerate() {
            if l.0 >= sigma {
                return Err(Error::LabelOutOfRange { vertex: v, label: l.0, sigma });
            }
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange(u, v));
            }
            if directed {
                if !seen.insert((u, v)) {
                    return Err(Error::DuplicateEdge(u, v));
                }
                out_adj[u].push(v);
                in_adj[v].push(u);
            } else {
                if u == v {
                    return Err(Error::UndirectedSelfLoop(u));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::DuplicateEdge(u, v));
                }
                out_adj[u].push(v);
                out_adj[v].push(u);
            }
        }
        for list in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            list.sort_unstable();
        }
        if !directed {
            in_adj.clone_from(&out_adj);
        }
        Ok(LabeledGraph { directed, sigma, labels, edges, out_adj, in_adj })
    }

    /// Directed graph whose alphabet is just large enough for `labels`.
    pub fn directed(labels: Vec<Label>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let sigma = min_sigma(&labels);
        Self::new(true, sigma, labels, edges)
    }

    pub fn undirected(labels: Vec<Label>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let sigma = min_sigma(&labels);
        Self::new(false, sigma, labels, edges)
    }

    /// Directed path `0 -> 1 -> ... -> n-1` spelling `labels`.
    pub fn path(labels: &[Label]) -> Self {
        let edges = (1..labels.len()).map(|i| (i - 1, i)).collect();
        Self::directed(labels.to_vec(), edges).expect("path is valid")
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`. A single vertex gets a self-loop.
    pub fn cycle(labels: &[Label]) -> Self {
        let n = labels.len();
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::directed(labels.to_vec(), edges).expect("cycle is valid")
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    /// Whether a walk may step from `u` to `v`.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Largest label in use plus one (0 for the empty graph).
    pub fn used_sigma(&self) -> u32 {
        min_sigma(&self.labels)
    }

    /// Renders the graph in the canonical text format.
    pub fn to_text(&self) -> String {
        self.to_text_with(LabelSyntax::Integer)
    }

    pub fn to_text_with(&self, syntax: LabelSyntax) -> String {
        let mut s = String::new();
        s.push_str(if self.directed { "directed\n" } else { "undirected\n" });
        s.push_str(&format!("{} {} {}\n", self.vertex_count(), self.edge_count(), self.sigma));
        let labels: Vec<String> = self.labels.iter().map(|&l| syntax.format_label(l)).collect();
        s.push_str(&labels.join(" "));
        s.push('\n');
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn min_sigma(labels: &[Label]) -> u32 {
    labels.iter().map(|l| l.0 + 1).max().unwrap_or(0)
}

/// Parses the text format with integer labels.
pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    parse_graph_with(text, LabelSyntax::Integer)
}

/// Parses the text format:
///
/// ```text
/// directed            # or "undirected"
/// <n> <m> [<sigma>]   # sigma defaults to the largest label plus one
/// <n labels>
/// <u> <v>             # m lines
/// ```
///
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_graph_with(text: &str, syntax: LabelSyntax) -> Result<LabeledGraph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let syntax_err = |line: usize, msg: String| Error::Syntax { line, msg };
    let last_line = text.lines().count().max(1);

    let (ln, kind) = lines.next().ok_or_else(|| syntax_err(last_line, "missing header".into()))?;
    let directed = match kind {
        "directed" => true,
        "undirected" => false,
        other => return Err(syntax_err(ln, format!("expected directed|undirected, got {other:?}"))),
    };

    let (ln, sizes) = lines.next().ok_or_else(|| syntax_err(last_line, "missing size line".into()))?;
    let nums = parse_usizes(sizes).map_err(|m| syntax_err(ln, m))?;
    let (n, m, sigma) = match nums[..] {
        [n, m] => (n, m, None),
        [n, m, s] => (n, m, Some(s)),
        _ => return Err(syntax_err(ln, "expected \"<n> <m> [<sigma>]\"".into())),
    };

    let labels = if n == 0 {
        Vec::new()
    } else {
        let (ln, line) = lines.next().ok_or_else(|| syntax_err(last_line, "missing label line".into()))?;
        let labels = syntax.parse_labels(line).map_err(|m| syntax_err(ln, m))?;
        if labels.len() != n {
            return Err(syntax_err(ln, format!("expected {n} labels, found {}", labels.len())));
        }
        labels
    };

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, line) = lines.next().ok_or_else(|| syntax_err(last_line, format!("expected {m} edge lines")))?;
        match parse_usizes(line).map_err(|m| syntax_err(ln, m))?[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(syntax_err(ln, "expected \"<u> <v>\"".into())),
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax_err(ln, "unexpected trailing content".into()));
    }

    let sigma = match sigma {
        Some(s) => u32::try_from(s).map_err(|_| syntax_err(2, "alphabet too large".into()))?,
        None => min_sigma(&labels),
    };
    LabeledGraph::new(directed, sigma, labels, edges)
}

/// Parses a pattern file: one line of labels.
pub fn parse_pattern(text: &str, syntax: LabelSyntax) -> Result<Vec<Label>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.extend(syntax.parse_labels(line).map_err(|msg| Error::Syntax { line: i + 1, msg })?);
    }
    Ok(out)
}

fn parse_usizes(line: &str) -> std::result::Result<Vec<usize>, String> {
    line.split_whitespace().map(|t| t.parse::<usize>().map_err(|e| format!("bad integer {t:?}: {e}"))).collect()
}

/// A non-empty vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Walk(Vec<usize>);

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyWalk);
        }
        Ok(Walk(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    /// Length in edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    /// Never true: a walk has at least one vertex. Present for API symmetry.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Checks that consecutive vertices are adjacent in `g`.
    pub fn validate(&self, g: &LabeledGraph) -> Result<()> {
        for &v in &self.0 {
            if v >= g.vertex_count() {
                return Err(Error::VertexOutOfRange(v));
            }
        }
        for w in self.0.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::NotAdjacent(w[0], w[1]));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Labels read along `w`.
pub fn spell(g: &LabeledGraph, w: &Walk) -> Result<Vec<Label>> {
    w.validate(g)?;
    Ok(w.vertices().iter().map(|&v| g.label(v)).collect())
}

/// Degenerate-input summary: vertices without incident edges only ever
/// spell single characters, so they matter only through the histogram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationReport {
    pub isolated_vertices: BTreeSet<usize>,
    pub has_shared_label: bool,
    pub label_histogram: BTreeMap<Label, usize>,
}

pub fn normalize(g: &LabeledGraph) -> NormalizationReport {
    let isolated_vertices =
        (0..g.vertex_count()).filter(|&v| g.out_neighbors(v).is_empty() && g.in_neighbors(v).is_empty()).collect();
    let mut label_histogram = BTreeMap::new();
    for &l in g.labels() {
        *label_histogram.entry(l).or_insert(0) += 1;
    }
    let has_shared_label = label_histogram.values().any(|&c| c >= 2);
    NormalizationReport { isolated_vertices, has_shared_label, label_histogram }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Determinism {
    Deterministic,
    /// `vertex` is the smallest vertex with two equally labeled out-neighbors.
    Nondeterministic {
        vertex: usize,
    },
}

impl Determinism {
    pub fn is_deterministic(self) -> bool {
        self == Determinism::Deterministic
    }
}

pub fn is_deterministic(g: &LabeledGraph) -> Result<Determinism> {
    if !g.is_directed() {
        return Err(Error::ExpectedDirected);
    }
    Ok(match nondeterministic_vertices(g).into_iter().next() {
        Some(vertex) => Determinism::Nondeterministic { vertex },
        None => Determinism::Deterministic,
    })
}

/// All vertices having two out-neighbors with equal labels, ascending.
/// Linear time: one stamp per label records the last vertex that saw it.
pub(crate) fn nondeterministic_vertices(g: &LabeledGraph) -> Vec<usize> {
    let mut stamp = vec![usize::MAX; g.used_sigma() as usize];
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        for &w in g.out_neighbors(v) {
            let slot = &mut stamp[g.label(w).index()];
            if *slot == v {
                out.push(v);
                break;
            }
            *slot = v;
        }
    }
    out
}

/// Replaces each undirected edge `{u, v}` by the arcs `(u, v)` and `(v, u)`.
pub fn symmetrize(g: &LabeledGraph) -> Result<LabeledGraph> {
    if g.is_directed() {
        return Err(Error::ExpectedUndirected);
    }
    let edges = g.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
    LabeledGraph::new(true, g.sigma(), g.labels().to_vec(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_directed_file() {
        let g = parse_graph("directed\n2 1\n0 1\n0 1\n").unwrap();
        assert!(g.is_directed());
        assert_eq!(g.sigma(), 2);
        let w = Walk::new(vec![0, 1]).unwrap();
        assert_eq!(spell(&g, &w).unwrap(), vec![Label(0), Label(1)]);
    }

    #[test]
    fn rejects_undirected_self_loop() {
        let err = parse_graph("undirected\n2 1\n0 1\n0 0\n").unwrap_err();
        assert_eq!(err, Error::UndirectedSelfLoop(0));
        assert!(err.is_parse_error());
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        let err = parse_graph("directed\n2 1\n0 1\n0 5\n").unwrap_err();
        assert_eq!(err, Error::EndpointOutOfRange(0, 5));
    }

    #[test]
    fn rejects_duplicates_and_bad_syntax() {
        assert_eq!(parse_graph("directed\n2 2\n0 1\n0 1\n0 1\n").unwrap_err(), Error::DuplicateEdge(0, 1));
        assert_eq!(parse_graph("undirected\n2 2\n0 1\n0 1\n1 0\n").unwrap_err(), Error::DuplicateEdge(1, 0));
        match parse_graph("# c\ndirected\n2 1\n0 x\n0 1\n").unwrap_err() {
            Error::Syntax { line, .. } => assert_eq!(line, 4),
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(parse_graph("sideways\n0 0\n"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("directed\n1 0 1\n0\n0 0\n"), Err(Error::Syntax { line: 4, .. })));
        assert!(matches!(parse_graph("directed\n2 0 1\n0 1\n"), Err(Error::LabelOutOfRange { vertex: 1, .. })));
    }

    #[test]
    fn directed_self_loops_are_allowed() {
        let g = parse_graph("directed\n1 1 1\n0\n0 0\n").unwrap();
        assert!(g.has_edge(0, 0));
    }

    #[test]
    fn comments_and_empty_graph() {
        let g = parse_graph("# empty\ndirected\n# nothing\n0 0 0\n").unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn letter_syntax() {
        let g = parse_graph_with("directed\n3 2\na b a\n0 1\n1 2\n", LabelSyntax::Letter).unwrap();
        assert_eq!(g.labels(), &letters("aba")[..]);
        assert_eq!(parse_pattern("ab\n", LabelSyntax::Letter).unwrap(), letters("ab"));
        assert_eq!(LabelSyntax::Letter.format_labels(&letters("aa")), "a a");
        assert_eq!(LabelSyntax::Integer.format_labels(&[]), "-");
    }

    #[test]
    fn spelling_examples() {
        let p = LabeledGraph::path(&letters("ab"));
        assert_eq!(spell(&p, &Walk::new(vec![0, 1]).unwrap()).unwrap(), letters("ab"));
        assert_eq!(spell(&p, &Walk::new(vec![1]).unwrap()).unwrap(), letters("b"));
        assert_eq!(spell(&p, &Walk::new(vec![1, 0]).unwrap()), Err(Error::NotAdjacent(1, 0)));
        let c = LabeledGraph::cycle(&letters("ab"));
        assert_eq!(spell(&c, &Walk::new(vec![0, 1, 0, 1]).unwrap()).unwrap(), letters("abab"));
        assert_eq!(Walk::new(vec![]), Err(Error::EmptyWalk));
    }

    #[test]
    fn normalization_examples() {
        let r = normalize(&LabeledGraph::path(&letters("ab")));
        assert!(r.isolated_vertices.is_empty());
        assert!(!r.has_shared_label);

        let g = LabeledGraph::directed(letters("aa"), vec![]).unwrap();
        let r = normalize(&g);
        assert_eq!(r.isolated_vertices, BTreeSet::from([0, 1]));
        assert!(r.has_shared_label);

        let r = normalize(&LabeledGraph::path(&letters("aab")));
        assert!(r.has_shared_label);
        assert_eq!(r.label_histogram, BTreeMap::from([(Label(0), 2), (Label(1), 1)]));
    }

    #[test]
    fn determinism_examples() {
        let g = LabeledGraph::path(&letters("abc"));
        assert!(is_deterministic(&g).unwrap().is_deterministic());
        let g = LabeledGraph::directed(letters("abb"), vec![(0, 1), (0, 2)]).unwrap();
        assert_eq!(is_deterministic(&g).unwrap(), Determinism::Nondeterministic { vertex: 0 });
        let g = LabeledGraph::directed(letters("abc"), vec![(0, 1), (0, 2)]).unwrap();
        assert!(is_deterministic(&g).unwrap().is_deterministic());
        let u = LabeledGraph::undirected(letters("ab"), vec![(0, 1)]).unwrap();
        assert_eq!(is_deterministic(&u), Err(Error::ExpectedDirected));
    }

    #[test]
    fn symmetrize_examples() {
        let u = LabeledGraph::undirected(letters("ab"), vec![(0, 1)]).unwrap();
        let d = symmetrize(&u).unwrap();
        assert_eq!(d.edges(), &[(0, 1), (1, 0)]);
        let e = LabeledGraph::undirected(letters("ab"), vec![]).unwrap();
        assert_eq!(symmetrize(&e).unwrap().edge_count(), 0);
        let t = LabeledGraph::undirected(letters("abc"), vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(symmetrize(&t).unwrap().edge_count(), 6);
        assert_eq!(symmetrize(&d), Err(Error::ExpectedUndirected));
    }
}
