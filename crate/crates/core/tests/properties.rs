//! Property tests for the invariants of each module.

use std::collections::BTreeSet;

use lgp_core::dag::longest_paths;
use lgp_core::general::reach_between;
use lgp_core::oracle::{brute_lcsp, brute_lrsp_classify, brute_undirected_path_lrsp, BruteRepeat};
use lgp_core::undirected::lrsp_undirected_path_paths;
use lgp_core::{
    build_product, classes, lcsp_general, lift, lrsp_general, lrsp_undirected_tree_paths, lrsp_undirected_walks,
    msp_general, parse_graph, product_size, project, self_product, smlg, spell, symmetrize, tree_reduction,
    CommonAnswer, Label, LabeledGraph, MsValue, RepeatAnswer, RepeatKind, Side, Walk,
};
use proptest::prelude::*;

fn labels(n: usize, sigma: u32) -> impl Strategy<Value = Vec<Label>> {
    prop::collection::vec((0..sigma).prop_map(Label), n)
}

fn digraph(max_n: usize, sigma: u32) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        (labels(n, sigma), prop::collection::vec(prop::bool::weighted(0.3), n * n)).prop_map(move |(ls, bits)| {
            let edges = (0..n * n).filter(|&i| bits[i]).map(|i| (i / n, i % n)).collect();
            LabeledGraph::new(true, sigma, ls, edges).unwrap()
        })
    })
}

fn undirected(max_n: usize, sigma: u32) -> impl Strategy<Value = LabeledGraph> {
    digraph(max_n, sigma).prop_map(|g| {
        let edges = g.edges().iter().copied().filter(|&(u, v)| u < v).collect();
        LabeledGraph::new(false, g.sigma(), g.labels().to_vec(), edges).unwrap()
    })
}

/// Random tree: vertex `i > 0` hangs off `parent[i] < i`.
fn tree(max_n: usize, sigma: u32) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        (labels(n, sigma), prop::collection::vec(any::<prop::sample::Index>(), n)).prop_map(move |(ls, ps)| {
            let edges = (1..n).map(|i| (ps[i].index(i), i)).collect();
            LabeledGraph::new(false, sigma, ls, edges).unwrap()
        })
    })
}

/// A random walk of `g` from a random start, following random out-edges.
fn random_walk(g: &LabeledGraph, picks: &[prop::sample::Index]) -> Walk {
    let mut v = picks[0].index(g.vertex_count());
    let mut vs = vec![v];
    for p in &picks[1..] {
        let succ = g.out_neighbors(v);
        if succ.is_empty() {
            break;
        }
        v = succ[p.index(succ.len())];
        vs.push(v);
    }
    Walk::new(vs).unwrap()
}

/// Vertices of `g` that can reach a directed cycle, by repeatedly peeling
/// sinks.
fn reaches_cycle(g: &LabeledGraph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    loop {
        let sink = (0..n).find(|&v| alive[v] && g.out_neighbors(v).iter().all(|&w| !alive[w]));
        match sink {
            Some(v) => alive[v] = false,
            None => return alive,
        }
    }
}

fn naive_lrs(s: &[Label]) -> usize {
    let mut best = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let l = s[i..].iter().zip(&s[j..]).take_while(|(a, b)| a == b).count();
            best = best.max(l);
        }
    }
    best
}

fn naive_lcs(a: &[Label], b: &[Label]) -> usize {
    let mut best = 0;
    for i in 0..a.len() {
        for j in 0..b.len() {
            let l = a[i..].iter().zip(&b[j..]).take_while(|(x, y)| x == y).count();
            best = best.max(l);
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_round_trip(g in digraph(7, 4), u in undirected(7, 4)) {
        prop_assert_eq!(parse_graph(&g.to_text()).unwrap(), g.clone());
        prop_assert_eq!(parse_graph(&u.to_text()).unwrap(), u.clone());
        prop_assert_eq!(parse_graph(&g.to_text()).unwrap().to_text(), g.to_text());
    }

    #[test]
    fn spelling_and_symmetrize(g in undirected(7, 3), d in digraph(6, 3), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..8)) {
        let w = random_walk(&d, &picks);
        prop_assert_eq!(spell(&d, &w).unwrap().len(), w.vertices().len());
        prop_assert_eq!(symmetrize(&g).unwrap().edge_count(), 2 * g.edge_count());
    }

    #[test]
    fn product_swap_symmetry_and_size(g1 in digraph(6, 3), g2 in digraph(6, 3)) {
        let p = build_product(&g1, &g2).unwrap();
        let q = build_product(&g2, &g1).unwrap();
        let flip = |p: &lgp_core::ProductGraph, x: usize| { let v = p.vertex(x); (v.right, v.left) };
        let pv: BTreeSet<_> = (0..p.vertex_count()).map(|x| flip(&p, x)).collect();
        let qv: BTreeSet<_> = q.vertices().iter().map(|v| (v.left, v.right)).collect();
        prop_assert_eq!(pv, qv);
        let pe: BTreeSet<_> = p.edges().map(|(a, b)| (flip(&p, a), flip(&p, b))).collect();
        let qe: BTreeSet<_> = q.edges().map(|(a, b)| {
            let (a, b) = (q.vertex(a), q.vertex(b));
            ((a.left, a.right), (b.left, b.right))
        }).collect();
        prop_assert_eq!(pe, qe);
        let est = product_size(&g1, &g2).unwrap();
        prop_assert_eq!((est.vertex_count, est.edge_count), (p.vertex_count() as u64, p.edge_count() as u64));
    }

    #[test]
    fn project_and_lift(g1 in digraph(6, 2), g2 in digraph(6, 2), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let p = build_product(&g1, &g2).unwrap();
        prop_assume!(p.vertex_count() > 0);
        let prod = LabeledGraph::new(true, g1.sigma(), (0..p.vertex_count()).map(|x| p.label(x)).collect(), p.edges().collect()).unwrap();
        let w = random_walk(&prod, &picks);
        let w1 = project(&p, &w, Side::Left).unwrap();
        let w2 = project(&p, &w, Side::Right).unwrap();
        prop_assert_eq!(spell(&g1, &w1).unwrap(), spell(&g2, &w2).unwrap());
        prop_assert_eq!(lift(&p, &w1, &w2).unwrap(), w);
    }

    #[test]
    fn longest_path_recurrences(g1 in digraph(6, 3), g2 in digraph(6, 3)) {
        let p = build_product(&g1, &g2).unwrap();
        if let Ok(t) = longest_paths(&p) {
            for x in 0..p.vertex_count() {
                let plus = p.out_neighbors(x).iter().map(|&y| t.l_plus[y] + 1).max().unwrap_or(0);
                let minus = p.in_neighbors(x).iter().map(|&y| t.l_minus[y] + 1).max().unwrap_or(0);
                prop_assert_eq!(t.l_plus[x], plus);
                prop_assert_eq!(t.l_minus[x], minus);
                prop_assert_eq!(t.path_through(x).len(), t.l_plus[x] + t.l_minus[x] + 1);
            }
        }
    }

    #[test]
    fn smlg_on_paths_is_substring_search(text in labels(10, 2), pattern in prop::collection::vec((0..2u32).prop_map(Label), 1..5)) {
        prop_assume!(!text.is_empty());
        let g = LabeledGraph::path(&text);
        let expected = text.windows(pattern.len()).position(|w| w == pattern.as_slice());
        let found = smlg(&g, &pattern).unwrap();
        prop_assert_eq!(found.is_some(), expected.is_some());
        if let Some(occ) = found {
            prop_assert_eq!(spell(&g, &occ.walk).unwrap(), pattern);
        }
    }

    #[test]
    fn phase_ordering_soundness(g in digraph(6, 2)) {
        let p = self_product(&g).unwrap();
        let cls = classes(&p, &g).unwrap();
        if let RepeatAnswer::Finite(_) = lrsp_general(&g).unwrap() {
            prop_assert!(cls.diff.iter().all(|x| !cls.cyc.contains(x)));
            prop_assert!(reach_between(&p, &cls.cyc, &cls.diff).is_none());
        }
        if lrsp_general(&g).unwrap().kind() != RepeatKind::Infinite {
            prop_assert!(cls.diff.iter().all(|x| !cls.cyc.contains(x)));
        }
    }

    #[test]
    fn msp_against_itself_marks_cycle_reachers(g in digraph(6, 3)) {
        let ms = msp_general(&g, &g).unwrap();
        let expected = reaches_cycle(&g);
        for (value, cyclic) in ms.values.iter().zip(expected) {
            prop_assert_eq!(*value == MsValue::Infinite, cyclic);
        }
    }

    #[test]
    fn lcsp_infinite_iff_product_cyclic(g1 in digraph(5, 3), g2 in digraph(5, 3)) {
        let p = build_product(&g1, &g2).unwrap();
        let prod = LabeledGraph::new(true, g1.sigma(), (0..p.vertex_count()).map(|x| p.label(x)).collect(), p.edges().collect()).unwrap();
        let cyclic = reaches_cycle(&prod).iter().any(|&b| b);
        let infinite = matches!(lcsp_general(&g1, &g2).unwrap(), CommonAnswer::Infinite { .. });
        prop_assert_eq!(infinite, cyclic);
    }

    #[test]
    fn undirected_walks_agree_with_directed_pipeline(g in undirected(6, 3)) {
        let sym = symmetrize(&g).unwrap();
        let a = lrsp_undirected_walks(&g).unwrap();
        let b = lrsp_general(&sym).unwrap();
        prop_assert_eq!(a.kind(), b.kind());
        if let (Some(x), Some(y)) = (a.finite_length(), b.finite_length()) {
            prop_assert_eq!(x, y);
            prop_assert!(x <= 1);
        }
    }

    #[test]
    fn path_graph_solver_matches_brute_force(text in (1..=12usize).prop_flat_map(|n| labels(n, 3))) {
        let edges = (1..text.len()).map(|i| (i - 1, i)).collect();
        let g = LabeledGraph::undirected(text, edges).unwrap();
        let m = lrsp_undirected_path_paths(&g).unwrap();
        prop_assert_eq!(m.length, brute_undirected_path_lrsp(&g, 1_000_000).unwrap());
    }

    #[test]
    fn tree_reduction_offsets_by_n(t in tree(6, 3)) {
        let brute = brute_undirected_path_lrsp(&t, 1_000_000).unwrap();
        let red = tree_reduction(&t).unwrap();
        let whole = lrsp_general(&red.graph).unwrap().finite_length().unwrap();
        if brute >= 1 {
            prop_assert_eq!(whole - t.vertex_count(), brute);
        }
        prop_assert_eq!(lrsp_undirected_tree_paths(&t).unwrap().length, brute);
    }

    #[test]
    fn oracle_matches_string_routines(a in prop::collection::vec((0..3u32).prop_map(Label), 1..8), b in prop::collection::vec((0..3u32).prop_map(Label), 1..8)) {
        let (ga, gb) = (LabeledGraph::path(&a), LabeledGraph::path(&b));
        prop_assert_eq!(brute_lcsp(&ga, &gb, 9), naive_lcs(&a, &b));
        prop_assert_eq!(brute_lrsp_classify(&ga).unwrap(), BruteRepeat::Finite(naive_lrs(&a)));
    }
}
