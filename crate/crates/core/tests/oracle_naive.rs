mod common;

use cind::cycles::{chordality, enumerate_induced_cycles, verify_induced_2_regular};
use cind::generators::{named, random_cubic_connected, NamedGraph};
use cind::oracle::Oracle;
use cind::Graph;
use proptest::prelude::*;

fn check_all(g: &Graph) {
    let o = Oracle::default();
    let adj = common::masks(g);

    let (best, mask) = common::best_by(&adj, |s| common::is_induced_regular(&adj, s, 2));
    let r = o.c_ind(g).unwrap();
    assert_eq!(r.value, best);
    assert_eq!(common::to_mask(&r.certificate), mask, "lex-smallest certificate");
    verify_induced_2_regular(g, &r.certificate).unwrap();

    assert_eq!(o.independence_number(g).unwrap().value, common::alpha(g));
    for d in 0..=3 {
        assert_eq!(
            o.max_induced_regular(g, d).unwrap().value,
            common::max_regular(g, d as u32),
            "d={d}"
        );
    }
    let mixed = o.max_mixed_regular(g).unwrap();
    assert_eq!(mixed.value, common::mixed(g));
    assert!(common::is_mixed(&adj, common::to_mask(&mixed.certificate)));
    if g.regular_degree().is_some() {
        assert_eq!(o.fair_domination_number_regular(g).unwrap(), common::fair_domination(g));
    }
}

fn check_cycles(g: &Graph) {
    let mut ours: Vec<u32> = enumerate_induced_cycles(g, None)
        .iter()
        .map(|c| c.vertices().iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    ours.sort_unstable();
    let mut naive = common::induced_cycles(g);
    naive.sort_unstable();
    assert_eq!(ours, naive);
    assert_eq!(chordality(g).value().unwrap_or(0), common::chordality(g));
}

#[test]
fn named_small_graphs() {
    for which in NamedGraph::ALL {
        let g = named(which);
        if g.n() <= 12 {
            check_all(&g);
            check_cycles(&g);
        }
    }
}

#[test]
fn random_cubic_up_to_14() {
    for n in (4..=14).step_by(2) {
        for seed in 0..3 {
            let g = random_cubic_connected(n, seed).unwrap();
            check_all(&g);
            check_cycles(&g);
        }
    }
}

#[test]
fn budget_is_enforced() {
    let g = random_cubic_connected(20, 1).unwrap();
    assert!(Oracle::with_budget(5).c_ind(&g).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bounded_degree_graphs(n in 1usize..=11, deg in 1usize..=4, seed: u64) {
        let g = common::random_bounded_degree(n, deg, 3 * n, seed);
        check_all(&g);
        check_cycles(&g);
    }
}

/// A 6-cycle plus a far vertex: more than 3n/5 on the Petersen graph.
#[test]
fn petersen_mixed_exceeds_three_fifths() {
    let g = named(NamedGraph::Petersen);
    let adj = common::masks(&g);
    let witness: u32 = [0, 1, 2, 3, 5, 8, 9].iter().fold(0, |m, &v| m | 1 << v);
    assert!(common::is_mixed(&adj, witness));
    let cycle = witness & !(1 << 9);
    assert!(common::is_induced_regular(&adj, cycle, 2) && common::connected(&adj, cycle));
    assert_eq!(adj[9] & witness, 0);
    assert_eq!(common::mixed(&g), 7);
    assert_eq!(Oracle::default().max_mixed_regular(&g).unwrap().value, 7);
}
