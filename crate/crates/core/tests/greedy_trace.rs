mod common;

use cind::cycles::verify_induced_2_regular;
use cind::generators::{named, random_cubic_connected, NamedGraph};
use cind::lemma1::{
    baseline_regular_bound, check_theorem1, lemma1_decompose, lemma1_decompose_per_component, theorem1_bound,
};
use cind::oracle::Oracle;
use cind::{Graph, Rational};
use proptest::prelude::*;

/// `m + κ − n` of the subgraph induced by `alive`.
fn mu(adj: &[u32], alive: u32) -> usize {
    let n = alive.count_ones() as usize;
    let m: u32 = (0..adj.len())
        .filter(|&v| alive >> v & 1 == 1)
        .map(|v| (adj[v] & alive).count_ones())
        .sum::<u32>()
        / 2;
    let mut rest = alive;
    let mut kappa = 0;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        loop {
            let grown = (0..adj.len())
                .filter(|&v| comp >> v & 1 == 1)
                .fold(comp, |c, v| c | adj[v] & alive);
            if grown == comp {
                break;
            }
            comp = grown;
        }
        rest &= !comp;
        kappa += 1;
    }
    m as usize + kappa - n
}

fn closed_nbhd(adj: &[u32], s: u32) -> u32 {
    (0..adj.len()).filter(|&v| s >> v & 1 == 1).fold(s, |c, v| c | adj[v])
}

fn sorted(s: u32) -> Vec<usize> {
    (0..32).filter(|&v| s >> v & 1 == 1).collect()
}

/// Replays the greedy from scratch and compares each choice.
fn replay(g: &Graph) {
    let adj = common::masks(g);
    let trace = lemma1_decompose(g).unwrap();
    let all_cycles = common::induced_cycles(g);
    let mut alive: u32 = (1u32 << g.n()) - 1;
    for step in &trace.steps {
        let before = mu(&adj, alive);
        assert!(before > 0);
        // induced cycles of the current graph are induced cycles of G inside it
        let best = all_cycles
            .iter()
            .filter(|&&c| c & !alive == 0)
            .map(|&c| {
                let drop = before - mu(&adj, alive & !closed_nbhd(&adj, c));
                (drop as i64 - c.count_ones() as i64, c.count_ones(), sorted(c), drop)
            })
            .min()
            .unwrap();
        let chosen = step.cycle.vertices().iter().fold(0u32, |m, &v| m | 1 << v);
        assert_eq!(sorted(chosen), best.2);
        assert_eq!(step.mu_drop, best.3);
        assert_eq!(step.len, chosen.count_ones() as usize);
        let removed = closed_nbhd(&adj, chosen) & alive;
        assert_eq!(step.removed_vertices, removed.count_ones() as usize);
        alive &= !removed;
    }
    assert_eq!(mu(&adj, alive), 0);
    assert_eq!(trace.residual_forest.n(), alive.count_ones() as usize);
}

fn invariants(g: &Graph) {
    let n = g.n();
    let trace = lemma1_decompose(g).unwrap();
    verify_induced_2_regular(g, &trace.union).unwrap();
    assert_eq!(trace.union.len(), trace.order());
    assert!(trace.residual_forest.is_forest());
    assert_eq!(trace.total_mu_drop(), n / 2 + 1);
    assert_eq!(trace.first_violation(), None);
    for (i, s) in trace.steps.iter().enumerate() {
        let limit = if i == 0 { 2 * s.len } else { 2 * s.len - 2 };
        assert!(s.mu_drop <= limit, "step {i}: {} > {limit}", s.mu_drop);
    }
    let r = check_theorem1(g, None).unwrap();
    assert!(r.verdict);
    assert!(Rational::from_integer(r.greedy_order as i64) >= r.bound);
}

#[test]
fn replay_matches_naive_choice() {
    for n in (4..=18).step_by(2) {
        for seed in 0..4 {
            replay(&random_cubic_connected(n, seed).unwrap());
        }
    }
    for which in [
        NamedGraph::K4,
        NamedGraph::K33,
        NamedGraph::Prism,
        NamedGraph::Petersen,
        NamedGraph::Figure1,
    ] {
        replay(&named(which));
    }
}

#[test]
fn oracle_dominates_greedy() {
    let o = Oracle::default();
    for seed in 0..10 {
        let g = random_cubic_connected(14, seed).unwrap();
        let r = check_theorem1(&g, Some(&o)).unwrap();
        assert!(r.oracle_order.unwrap() >= r.greedy_order);
        assert_eq!(r.oracle_order.unwrap(), common::c_ind(&g));
    }
}

#[test]
fn per_component_restarts_count() {
    let k4 = named(NamedGraph::K4);
    let g = k4.disjoint_union(&named(NamedGraph::K33));
    assert!(lemma1_decompose(&g).is_err());
    let t = lemma1_decompose_per_component(&g).unwrap();
    assert_eq!(t.component_steps.len(), 2);
    assert_eq!(t.first_violation(), None);
    verify_induced_2_regular(&g, &t.union).unwrap();
    assert_eq!(t.total_mu_drop(), (4 / 2 + 1) + (6 / 2 + 1));
}

#[test]
fn bound_arithmetic() {
    assert_eq!(theorem1_bound(10, 4).unwrap(), Rational::new(8, 3));
    assert_eq!(theorem1_bound(2, 3).unwrap(), Rational::from_integer(0));
    assert!(theorem1_bound(10, 2).is_err());
    // cubic baseline: n/4 + 1/2
    assert_eq!(baseline_regular_bound(10, 3).unwrap(), Rational::new(3, 1));
    // decreasing in k towards (n − 2)/4
    for n in (4..40).step_by(2) {
        let floor = Rational::new(n as i64 - 2, 4);
        for k in 3..12 {
            assert!(theorem1_bound(n, k).unwrap() > theorem1_bound(n, k + 1).unwrap());
            assert!(theorem1_bound(n, k).unwrap() >= floor);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_cubic_invariants(half in 2usize..=15, seed: u64) {
        invariants(&random_cubic_connected(2 * half, seed).unwrap());
    }

    #[test]
    fn relabeling_keeps_order(half in 2usize..=9, seed: u64, rot in 0usize..30) {
        let g = random_cubic_connected(2 * half, seed).unwrap();
        let n = g.n();
        let perm: Vec<usize> = (0..n).map(|v| (v + rot) % n).collect();
        let h = g.permuted(&perm);
        // the optimum is label-free; the greedy order need not be, but both meet the bound
        invariants(&h);
        prop_assert_eq!(common::c_ind(&g), common::c_ind(&h));
    }
}
