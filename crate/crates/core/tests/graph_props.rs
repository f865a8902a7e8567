//! Format round trips and structural invariants on random graphs.

mod support;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use copwin::forbidden::{cantmove_violation, find_induced_2k2, find_induced_path, find_induced_rk2};
use copwin::graph::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use copwin::traps::{enumerate_traps, is_trap_by};
use copwin::Graph;
use support::all_labeled;

fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let p: f64 = rng.gen();
    let edges: Vec<(usize, usize)> =
        (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

#[test]
fn graph6_round_trip_exhaustive_up_to_5() {
    let mut count = 0;
    for n in 1..=5 {
        for g in all_labeled(n) {
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
            count += 1;
        }
    }
    assert_eq!(count, 1 + 2 + 8 + 64 + 1024);
}

#[test]
fn graph6_round_trip_random() {
    let mut rng = StdRng::seed_from_u64(0x6706);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=40);
        let g = random_graph(&mut rng, n);
        let text = emit_graph6(&g);
        assert_eq!(parse_graph6(&text).unwrap(), g, "{text}");
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }
}

#[test]
fn reference_strings() {
    assert_eq!(parse_graph6("Dhc").unwrap(), Graph::cycle(5));
    assert_eq!(parse_graph6("Ch").unwrap(), Graph::path(4));
    assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
    assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn witnesses_validate(g in arb_graph(9)) {
        if let Some(w) = find_induced_2k2(&g) {
            prop_assert!(w.validate(&g));
        }
        for r in 1..=3 {
            if let Some(w) = find_induced_rk2(&g, r).unwrap() {
                prop_assert!(w.validate(&g));
            }
        }
        for t in 2..=5 {
            if let Some(w) = find_induced_path(&g, t).unwrap() {
                prop_assert!(w.validate(&g));
            }
        }
        prop_assert_eq!(cantmove_violation(&g).is_none(), find_induced_2k2(&g).is_none());
    }

    #[test]
    fn components_partition_vertices(g in arb_graph(12)) {
        let comps = g.components();
        let mut all: Vec<usize> = comps.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        for c in &comps {
            let (sub, _) = g.induced_subgraph(c);
            prop_assert!(sub.is_connected());
        }
        prop_assert_eq!(comps.len() == 1, g.is_connected());
    }

    #[test]
    fn induced_subgraph_keeps_exactly_inner_edges(g in arb_graph(10), mask in any::<u16>()) {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let (sub, map) = g.induced_subgraph(&keep);
        prop_assert_eq!(&map, &keep);
        for a in 0..sub.n() {
            for b in 0..sub.n() {
                if a != b {
                    prop_assert_eq!(sub.has_edge(a, b), g.has_edge(map[a], map[b]));
                }
            }
        }
    }

    #[test]
    fn trap_enumeration_agrees_with_membership(g in arb_graph(7)) {
        let listed = enumerate_traps(&g);
        let mut count = 0;
        for u in 0..g.n() {
            for x1 in 0..g.n() {
                for x2 in x1 + 1..g.n() {
                    if u == x1 || u == x2 {
                        continue;
                    }
                    let direct = is_trap_by(&g, u, x1, x2).unwrap();
                    prop_assert_eq!(direct.is_some(), listed.iter().any(|w| w.u == u && w.pair == (x1, x2)));
                    count += usize::from(direct.is_some());
                }
            }
        }
        prop_assert_eq!(count, listed.len());
    }

    #[test]
    fn step_toward_shortens_distance(g in arb_graph(10), a in 0usize..10, b in 0usize..10) {
        let (a, b) = (a % g.n(), b % g.n());
        let dist = g.distances_from(b);
        match g.step_toward(a, |x| x == b) {
            Some(s) => {
                prop_assert!(g.dominates(a, s));
                prop_assert_eq!(dist[s].unwrap() + usize::from(a != b), dist[a].unwrap());
            }
            None => prop_assert!(dist[a].is_none()),
        }
    }
}
