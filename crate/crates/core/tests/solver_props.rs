//! Solver properties checked against the independent oracle.

mod support;

use copwin::solver::{
    best_robber_policy, capture_time, cop_number, is_k_cop_win, simulate_game, solve, CopNumber, Side,
};
use copwin::Graph;
use support::{canonical_corpus, connected_labeled, domination_number, oracle, oracle_cop_number};

#[test]
fn spec_examples_against_oracle() {
    let c5 = Graph::cycle(5);
    assert!(!oracle(&c5, 1, false).verdict());
    assert!(!is_k_cop_win(&c5, 1).unwrap().0);
    assert!(is_k_cop_win(&c5, 2).unwrap().0);
    assert_eq!(cop_number(&c5, 4).unwrap(), CopNumber::Exactly(2));

    let c4 = Graph::cycle(4);
    let expected = oracle(&c4, 2, false).capture_time().unwrap();
    assert_eq!(expected, 1);
    assert_eq!(capture_time(&c4, 2).unwrap(), expected);

    let petersen = Graph::petersen();
    assert!(!oracle(&petersen, 2, false).verdict());
    assert!(oracle(&petersen, 3, false).verdict());
    assert_eq!(cop_number(&petersen, 4).unwrap(), CopNumber::Exactly(3));
}

#[test]
fn trees_are_cop_win() {
    let trees = canonical_corpus(7, |g| g.edge_count() + 1 == g.n());
    for g in trees.iter().flatten() {
        assert_eq!(oracle_cop_number(g), 1, "{g:?}");
        assert_eq!(cop_number(g, 4).unwrap(), CopNumber::Exactly(1), "{g:?}");
    }
}

#[test]
fn oracle_equivalence_labeled_up_to_6() {
    for n in 1..=6 {
        for g in connected_labeled(n) {
            for k in 1..=2 {
                let table = solve(&g, k).unwrap();
                let o = oracle(&g, k, false);
                for (t, cops) in o.tuples.iter().enumerate() {
                    for r in 0..n {
                        assert_eq!(table.steps(cops, r, Side::Cops), o.steps(cops, r), "{g:?} k={k} t={t} r={r}");
                    }
                }
                assert_eq!(table.cops_win(), o.verdict(), "{g:?} k={k}");
                assert_eq!(table.capture_time(), o.capture_time(), "{g:?} k={k}");
            }
        }
    }
}

#[test]
fn monotone_in_k() {
    for n in 1..=6 {
        for g in connected_labeled(n) {
            let wins: Vec<bool> = (1..=3).map(|k| is_k_cop_win(&g, k).unwrap().0).collect();
            assert!(wins.windows(2).all(|w| !w[0] || w[1]), "{g:?}: {wins:?}");
        }
    }
}

#[test]
fn optimal_play_realizes_capture_time() {
    for n in 1..=6 {
        for g in connected_labeled(n) {
            for k in 1..=2 {
                let table = solve(&g, k).unwrap();
                let Ok(mut cops) = table.cop_policy() else { continue };
                let mut robber = best_robber_policy(&table);
                let trace = simulate_game(&g, &mut cops, &mut robber, 4 * n).unwrap();
                assert_eq!(trace.captured_at.map(|t| t as u32), table.capture_time(), "{g:?} k={k}");
            }
        }
    }
}

#[test]
fn one_cop_never_catches_the_c5_robber() {
    let g = Graph::cycle(5);
    let table = solve(&g, 1).unwrap();
    let mut robber = best_robber_policy(&table);
    let mut greedy = support_greedy::Greedy(g.clone());
    let trace = simulate_game(&g, &mut greedy, &mut robber, 100).unwrap();
    assert!(!trace.captured());
}

mod support_greedy {
    use copwin::solver::{CopStrategy, GameTrace};
    use copwin::Graph;

    /// One cop stepping along a shortest path to the robber.
    pub struct Greedy(pub Graph);

    impl CopStrategy for Greedy {
        fn cop_count(&self) -> usize {
            1
        }
        fn place(&mut self) -> Vec<usize> {
            vec![0]
        }
        fn next_move(&mut self, trace: &GameTrace) -> Vec<usize> {
            let now = trace.current();
            vec![self.0.step_toward(now.cops[0], |x| x == now.robber).unwrap()]
        }
    }
}

#[test]
fn bounded_by_domination_number() {
    for n in 1..=6 {
        for g in connected_labeled(n) {
            let c = cop_number(&g, 4).unwrap().value().unwrap();
            assert!(1 <= c && c <= domination_number(&g), "{g:?}");
        }
    }
}

#[test]
fn stacking_does_not_change_verdicts() {
    for n in 2..=5 {
        for g in connected_labeled(n) {
            assert_eq!(is_k_cop_win(&g, 2).unwrap().0, oracle(&g, 2, true).verdict(), "{g:?}");
        }
    }
}
