mod common;

use cliquedeg::extremal::{canonical_form, canonical_key, near_regular_graph};
use cliquedeg::greedy::greedy_prefixes;
use cliquedeg::{
    bonferroni_lower_bound, delta_r_exact, enumerate_r_cliques, from_edge_list, from_graph6, p_sequence,
    to_edge_list, to_graph6, turan_size, Graph, VertexSet,
};
use common::Matrix;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn handshake_and_symmetry(g in graph(20)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        for u in 0..g.order() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.order() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        prop_assert_eq!(g.complement().edge_count() + g.edge_count(), g.order() * g.order().saturating_sub(1) / 2);
    }

    #[test]
    fn common_neighborhood_meets_bonferroni(g in graph(16), pick in proptest::collection::vec(any::<prop::sample::Index>(), 1..5)) {
        prop_assume!(g.order() > 0);
        let n = g.order();
        let set = VertexSet::from_vertices(n, pick.iter().map(|i| i.index(n))).unwrap();
        let common = g.common_neighborhood(&set).unwrap();
        let expected = (0..n).filter(|&v| set.iter().all(|u| g.has_edge(u, v))).count();
        prop_assert_eq!(common.len(), expected);
        let sizes: Vec<i64> = set.iter().map(|v| g.degree(v) as i64).collect();
        prop_assert!(common.len() as i64 >= bonferroni_lower_bound(&sizes, n as i64).unwrap());
    }

    #[test]
    fn graph6_and_edge_list_round_trip(g in graph(64)) {
        prop_assert_eq!(&from_graph6(&to_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&from_edge_list(&to_edge_list(&g)).unwrap(), &g);
    }

    #[test]
    fn canonical_form_is_invariant((g, perm) in graph_with_perm(8)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
    }

    #[test]
    fn delta_matches_naive_and_is_monotone(g in graph(10), r in 1usize..5, u in 0usize..10, v in 0usize..10) {
        let d = delta_r_exact(&g, r).unwrap();
        prop_assert_eq!(d.value, Matrix::from_graph(&g).delta(r));
        if let Some(w) = &d.witness {
            prop_assert!(g.is_clique(w));
            prop_assert_eq!(w.len(), r);
        }
        prop_assert_eq!(d.witness.is_none(), enumerate_r_cliques(&g, r).next().is_none());
        let n = g.order();
        if u < n && v < n && u != v {
            let bigger = g.clone().with_edge(u, v).unwrap();
            prop_assert!(delta_r_exact(&bigger, r).unwrap().value >= d.value);
        }
    }

    #[test]
    fn delta_is_relabelling_invariant((g, perm) in graph_with_perm(9), r in 1usize..5) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(delta_r_exact(&g, r).unwrap().value, delta_r_exact(&h, r).unwrap().value);
    }

    #[test]
    fn greedy_sequence_is_a_maximal_clique(g in graph(16)) {
        prop_assume!(g.order() > 0);
        let seq = p_sequence(&g).unwrap();
        let set = VertexSet::from_vertices(g.order(), seq.vertices.iter().copied()).unwrap();
        prop_assert!(g.is_clique(&set));
        prop_assert!(g.common_neighborhood(&set).unwrap().is_empty());
        prop_assert!(seq.is_valid_for(&g));
        for k in 1..=seq.len() {
            prop_assert!(seq.prefix_sum(k).unwrap() <= delta_r_exact(&g, k).unwrap().value);
        }
    }

    #[test]
    fn greedy_prefixes_match_naive_runs(g in graph(7), depth in 1usize..5) {
        prop_assume!(g.order() > 0);
        let survey = greedy_prefixes(&g, depth, 1_000_000).unwrap();
        let naive = Matrix::from_graph(&g).greedy_runs();
        let mut sets: Vec<u64> = naive
            .iter()
            .filter(|s| s.len() >= depth)
            .map(|s| s[..depth].iter().fold(0u64, |a, &v| a | 1 << v))
            .collect();
        sets.sort_unstable();
        sets.dedup();
        prop_assert_eq!(survey.complete.keys().copied().collect::<Vec<_>>(), sets);
        prop_assert_eq!(survey.stalled.is_empty(), naive.iter().all(|s| s.len() >= depth));
    }

    #[test]
    fn turan_size_is_superadditive_in_n(r in 1usize..30, n in 0usize..300) {
        // adding one vertex to the smallest part adds n - ⌊n/r⌋ edges
        prop_assert_eq!(turan_size(r, n + 1).unwrap(), turan_size(r, n).unwrap() + (n - n / r) as u64);
    }

    #[test]
    fn near_regular_degrees(n in 1usize..30, frac in 0.0f64..=1.0) {
        let m = ((n * (n - 1) / 2) as f64 * frac) as usize;
        let g = near_regular_graph(n, m).unwrap();
        prop_assert_eq!(g.edge_count(), m);
        prop_assert!(g.max_degree() - g.min_degree() <= 1);
    }
}
