mod common;

use common::{adjacency, naive_isomorphic, naive_solve, Pattern};
use hfree::graph::io::{from_graph6, from_json, to_graph6, to_json};
use hfree::graph::iso::{are_isomorphic, find_isomorphism, is_induced_copy_free};
use hfree::{
    build_chain, classify, replay_chain, solve_branching, Chain, Classification, EditSet, Graph,
    Instance, ModificationKind,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

fn arb_kind() -> impl Strategy<Value = ModificationKind> {
    prop_oneof![
        Just(ModificationKind::Deletion),
        Just(ModificationKind::Completion),
        Just(ModificationKind::Editing),
    ]
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.vertex_count(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(from_json(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(15)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count(), g.non_edge_count());
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn degree_profile_partitions_vertices(g in arb_graph(15)) {
        let p = g.degree_profile();
        let mut seen: Vec<usize> = p.by_degree.values().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.vertex_count()).collect::<Vec<_>>());
        for (&d, vs) in &p.by_degree {
            prop_assert!(vs.iter().all(|&v| g.degree(v) == d));
        }
        prop_assert_eq!(p.min_degree, *p.by_degree.keys().next().unwrap());
        prop_assert_eq!(p.max_degree, *p.by_degree.keys().last().unwrap());
    }

    #[test]
    fn isomorphism_survives_relabeling(
        g in arb_graph(7),
        seed in any::<u64>(),
    ) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm);
        prop_assert!(are_isomorphic(&g, &h));
        let m = find_isomorphism(&g, &h).unwrap();
        prop_assert_eq!(relabel(&g, &m), h);
    }

    #[test]
    fn isomorphism_matches_naive(a in arb_graph(6), b in arb_graph(6)) {
        prop_assert_eq!(are_isomorphic(&a, &b), naive_isomorphic(&a, &b));
    }

    #[test]
    fn copy_freeness_matches_naive(g in arb_graph(7), h in arb_graph(4)) {
        let naive = !Pattern::new(&h).occurs_in(&adjacency(&g));
        prop_assert_eq!(is_induced_copy_free(&g, &h), naive);
    }

    #[test]
    fn edit_set_apply_toggles_exactly_its_pairs(
        g in arb_graph(9),
        picks in proptest::collection::vec((0usize..9, 0usize..9), 0..8),
    ) {
        let n = g.vertex_count();
        let pairs: Vec<(usize, usize)> = picks
            .into_iter()
            .map(|(a, b)| (a % n, b % n))
            .filter(|(a, b)| a != b)
            .collect();
        let set = EditSet::from_pairs(&g, pairs);
        let out = set.apply(&g).unwrap();
        let toggled: usize = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| out.has_edge(u, v) != g.has_edge(u, v))
            .count();
        prop_assert_eq!(toggled, set.len());
        prop_assert!(set.deletions.iter().all(|&(u, v)| !out.has_edge(u, v)));
        prop_assert!(set.completions.iter().all(|&(u, v)| out.has_edge(u, v)));
    }

    #[test]
    fn branching_agrees_with_naive_search(
        g in arb_graph(6),
        h in arb_graph(4),
        k in 0usize..3,
        kind in arb_kind(),
    ) {
        let r = solve_branching(&g, k, &h, kind);
        prop_assert_eq!(r.is_yes(), naive_solve(&g, k, &h, kind));
        prop_assert!(r.check(&g, k, &h, kind));
    }

    #[test]
    fn instance_json_round_trip(g in arb_graph(10), h in arb_graph(5), k in 0usize..5, kind in arb_kind()) {
        let inst = Instance::new(g, k, h, kind).unwrap();
        prop_assert_eq!(Instance::from_json(&inst.to_json()).unwrap(), inst);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn chains_validate_and_round_trip(h in arb_graph(6), kind in arb_kind()) {
        let c = classify(&h, kind).unwrap();
        let text = c.to_json();
        let back: Classification = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        if let Some(chain) = c.chain() {
            chain.validate().unwrap();
            let again: Chain = serde_json::from_str(&serde_json::to_string(&chain).unwrap()).unwrap();
            again.validate().unwrap();
            prop_assert_eq!(&again, &chain);
            prop_assert_eq!(build_chain(&h, kind).unwrap(), chain);
        }
    }

    #[test]
    fn replay_keeps_the_budget(h in arb_graph(5), kind in arb_kind(), k in 1usize..3) {
        if let Some(chain) = classify(&h, kind).unwrap().chain() {
            let base = chain.base_graph().clone();
            let seed = Instance::new(
                Graph::from_edges(2, [(0, 1)]).unwrap(),
                k,
                base,
                chain.base_kind(),
            )
            .unwrap();
            let replay = replay_chain(&chain, &seed).unwrap();
            prop_assert_eq!(replay.instance.k, k);
            prop_assert_eq!(replay.instance.kind, kind);
            prop_assert!(are_isomorphic(&replay.instance.h, &h));
            prop_assert!(replay.steps.iter().all(|s| s.preserves_k()));
        }
    }
}
