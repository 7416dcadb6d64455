mod common;

use bounded_expansion::grads::{grad, top_grad, top_grad_with, TopMinorMode, GRAD_CAP};
use bounded_expansion::graph::{
    count_crossings, encode_graph6, parse_edge_list, parse_graph6, subdivide_uniform, write_edge_list, Drawing,
};
use bounded_expansion::layouts::{
    contract_queue_layout, min_pages_for_order, queue_number, stack_number, validate_layout, PageKind,
};
use bounded_expansion::nonrep::{
    check_star_acyclic, colour_subdivision, find_repetition, is_square_free, pi_exact, thue_word, Colouring,
    ColouringMode,
};
use bounded_expansion::randexp::{audit_small_subgraph_density_on, count_short_cycles, gnp_edges};
use bounded_expansion::report::all_pass;
use bounded_expansion::Graph;
use proptest::prelude::*;

use common::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn coloured(max_n: usize, k: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(0..k, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_formats_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&encode_graph6(&g).unwrap()).unwrap(), g.clone());
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn grads_are_ordered(g in graph(7)) {
        let g0 = grad(&g, 0).unwrap().value;
        prop_assert_eq!(g0, max_subgraph_density(&g));
        let mut previous = g0;
        for d in 0..3 {
            let gd = grad(&g, d).unwrap().value;
            let td = top_grad(&g, d).unwrap().value;
            let loose = top_grad_with(&g, d, TopMinorMode::Loose, GRAD_CAP).unwrap().value;
            prop_assert!(td <= gd);
            prop_assert!(td <= loose);
            prop_assert!(previous <= gd);
            previous = gd;
        }
    }

    #[test]
    fn repetition_search_matches_oracle((g, c) in coloured(7, 3)) {
        let colouring = Colouring::new(g.clone(), c.clone()).unwrap();
        let found = find_repetition(&colouring, g.n() / 2).unwrap();
        prop_assert_eq!(found.is_some(), has_repetition(&g, &c));
        if let Some(path) = found {
            let s = path.len() / 2;
            prop_assert!(path.windows(2).all(|w| g.has_edge(w[0], w[1])));
            prop_assert!((0..s).all(|i| c[path[i]] == c[path[i + s]]));
        }
    }

    #[test]
    fn acyclic_check_matches_oracle((g, c) in coloured(8, 3)) {
        let colouring = Colouring::new(g.clone(), c.clone()).unwrap();
        let check = check_star_acyclic(&colouring, ColouringMode::Acyclic);
        prop_assert_eq!(check.valid, is_acyclic_colouring(&g, &c));
        let proper = check_star_acyclic(&colouring, ColouringMode::Proper);
        prop_assert_eq!(proper.valid, g.edges().all(|(u, v)| c[u] != c[v]));
        if check.valid {
            prop_assert!(proper.valid);
        }
    }

    #[test]
    fn square_free_check_matches_brute(word in proptest::collection::vec(0u8..3, 0..40)) {
        let brute = (0..word.len()).all(|i| (1..=(word.len() - i) / 2).all(|h| word[i..i + h] != word[i + h..i + 2 * h]));
        prop_assert_eq!(is_square_free(&word), brute);
    }

    #[test]
    fn thue_prefixes(n in 0usize..400) {
        let w = thue_word(n);
        prop_assert_eq!(w.len(), n);
        prop_assert!(is_square_free(w.symbols()));
    }

    #[test]
    fn subdivisions_stay_nonrepetitive(g in graph(5), t in 0usize..4) {
        let (_, c) = pi_exact(&g).unwrap();
        let sg = subdivide_uniform(&g, t);
        let out = colour_subdivision(&c, &sg).unwrap();
        prop_assert!(!has_repetition(out.graph(), out.colours()));
    }

    #[test]
    fn optimal_layouts_are_valid(g in graph(7)) {
        let (qn, ql) = queue_number(&g).unwrap();
        let (sn, sl) = stack_number(&g).unwrap();
        prop_assert!(validate_layout(&g, &ql).unwrap().valid);
        prop_assert!(validate_layout(&g, &sl).unwrap().valid);
        prop_assert_eq!(ql.page_count(), qn);
        prop_assert_eq!(sl.page_count(), sn);
        let identity: Vec<usize> = (0..g.n()).collect();
        let fixed = min_pages_for_order(&g, &identity, PageKind::Queue, g.m().max(1)).unwrap().unwrap();
        prop_assert!(fixed.page_count() >= qn);
    }

    #[test]
    fn contraction_of_single_edges(g in graph(7), seed in any::<u64>()) {
        let (_, layout) = queue_number(&g).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut used = vec![false; g.n()];
        let mut parts = Vec::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if (seed >> (i % 64)) & 1 == 1 && !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                parts.push(vec![u, v]);
            }
        }
        let out = contract_queue_layout(&g, &layout, &parts, 1).unwrap();
        prop_assert!(all_pass(&out.checks));
        prop_assert_eq!(out.graph.n(), g.n() - parts.len());
    }

    #[test]
    fn cycle_counts_match_oracle(g in graph(8)) {
        let counts = count_short_cycles(&g, 6).unwrap();
        for t in 3..=6 {
            prop_assert_eq!(counts[&t], cycles_brute(&g, t));
        }
    }

    #[test]
    fn density_audit_monotone_in_eps(n in 10usize..40, seed in any::<u64>(), t in 2usize..6) {
        let g = Graph::from_edges(n, gnp_edges(n, 3.0 / n as f64, seed).unwrap()).unwrap();
        let passes: Vec<bool> = [0.1, 0.25, 0.5, 1.0, 2.0]
            .iter()
            .map(|&eps| audit_small_subgraph_density_on(&g, t, eps).unwrap().pass)
            .collect();
        prop_assert!(passes.windows(2).all(|w| !w[0] || w[1]), "{:?}", passes);
    }

    #[test]
    fn gnp_is_reproducible(n in 0usize..300, p in 0.0f64..1.0, seed in any::<u64>()) {
        let a = gnp_edges(n, p, seed).unwrap();
        prop_assert_eq!(&a, &gnp_edges(n, p, seed).unwrap());
        prop_assert!(a.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(a.iter().all(|&(u, v)| u < v && v < n));
    }

    #[test]
    fn crossings_match_segment_oracle(points in proptest::collection::vec((-20i64..20, -20i64..20), 2..9), g in graph(8)) {
        let n = points.len().min(g.n());
        let sub = g.induced(&(0..n).collect::<Vec<_>>());
        let pts = &points[..n];
        if let Ok(d) = Drawing::with_integer_points(sub.clone(), pts) {
            let edges: Vec<(usize, usize)> = sub.edges().collect();
            prop_assert_eq!(count_crossings(&d), segment_crossings(pts, &edges));
        }
    }
}
