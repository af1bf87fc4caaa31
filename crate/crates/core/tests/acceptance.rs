//! One line per acceptance criterion. Runs without the test harness so the
//! verdicts always reach the console.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cind::generators::{
    ladder_family, named, random_4chordal_cubic, random_cubic_connected, random_decomposition, LadderFamily, NamedGraph,
};
use cind::lemma1::lemma1_decompose;
use cind::oracle::Oracle;
use cind::structure::{
    assemble, classify_with_embedding, decompose_4chordal, generate_extremal, BlockKind, ClassifyError,
};
use cind::theorem3::{block_plus_graph, block_plus_pattern, check_tightness, residual_labels, solve};
use cind::{chordality, Graph, Rational};

const POOL_SIZE: usize = 200;
const POOL_SEED: u64 = 0x5eed;
const EPSILONS: [(i64, i64); 2] = [(1, 16), (1, 8)];
const THEOREM1B_MAX_N: usize = 20;
const ROUND_TRIPS: usize = 100;
const SOLVER_INSTANCES: usize = 500;
const ORACLE_INSTANCES: usize = 50;
const ORACLE_MAX_N: usize = 24;

/// Criteria whose stated value contradicts exhaustive enumeration. They are
/// still run and still print FAIL, but do not fail the process.
const KNOWN_UNATTAINABLE: [(&str, &str); 1] = [(
    "9 named graphs",
    "Petersen has the induced C6 0-1-2-3-8-5 plus the isolated vertex 9, so the mixed optimum is 7, not 6",
)];

/// Rows in table order: `(c_ind(B⁺), c_ind(B⁺ − y))`.
const TABLE: [(usize, usize); 12] = [
    (7, 6),
    (8, 8),
    (8, 8),
    (9, 8),
    (8, 8),
    (9, 8),
    (11, 10),
    (11, 10),
    (12, 12),
    (13, 12),
    (15, 14),
    (16, 16),
];

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn rat(v: usize) -> Rational {
    Rational::from_integer(v as i64)
}

/// `5n/8 + 3/4`, spelled out here rather than taken from the library.
fn five_eighths(n: usize) -> Rational {
    Rational::new(5 * n as i64 + 6, 8)
}

fn pool() -> Vec<Graph> {
    (0..POOL_SIZE)
        .map(|i| {
            let n = 8 + 2 * (i % 9);
            random_cubic_connected(n, POOL_SEED + i as u64).expect("pool graph")
        })
        .collect()
}

fn c1_greedy_inequalities(pool: &[Graph]) -> Verdict {
    let mut bad = 0;
    for g in pool {
        let t = lemma1_decompose(g).expect("cubic connected");
        let ok = t.steps.iter().enumerate().all(|(i, s)| {
            let limit = if i == 0 { 2 * s.len } else { 2 * s.len - 2 };
            s.mu_drop <= limit
        }) && t.steps.iter().map(|s| s.mu_drop).sum::<usize>() == g.n() / 2 + 1;
        bad += usize::from(!ok);
    }
    verdict(
        bad == 0,
        format!(
            "{}/{} traces satisfy every inequality and the sum",
            pool.len() - bad,
            pool.len()
        ),
    )
}

fn c2_chordality_bound(pool: &[Graph]) -> Verdict {
    let mut bad = 0;
    for g in pool {
        let k = chordality(g).value().expect("cubic graphs have cycles") as i64;
        let bound = Rational::from_integer(g.n() as i64 - 2) / (Rational::from_integer(4) - Rational::new(4, k));
        let order = lemma1_decompose(g).expect("cubic connected").order();
        bad += usize::from(rat(order) < bound);
    }
    verdict(
        bad == 0,
        format!("{}/{} greedy orders meet (n-2)/(4-4/k)", pool.len() - bad, pool.len()),
    )
}

fn c3_independence_hypothesis(pool: &[Graph]) -> Verdict {
    let (considered, applicable, bad) = independence_hypothesis(pool.iter().filter(|g| g.n() <= THEOREM1B_MAX_N));
    // the pool rarely meets the hypothesis; small named graphs add cases
    let extra: Vec<Graph> = NamedGraph::ALL
        .into_iter()
        .map(named)
        .filter(|g| g.is_cubic() && g.is_connected())
        .collect();
    let (_, extra_applicable, extra_bad) = independence_hypothesis(extra.iter());
    verdict(
        bad == 0 && extra_bad == 0,
        format!(
            "{considered} pool graphs with n <= {THEOREM1B_MAX_N}, {applicable} (graph, eps) pairs meet the hypothesis, \
             {bad} failures; named cubic graphs add {extra_applicable} pairs, {extra_bad} failures"
        ),
    )
}

/// `(graphs, applicable pairs, failures)`.
fn independence_hypothesis<'a>(graphs: impl Iterator<Item = &'a Graph>) -> (usize, usize, usize) {
    let oracle = Oracle::default();
    let (mut applicable, mut bad, mut considered) = (0, 0, 0);
    for g in graphs {
        considered += 1;
        let alpha = oracle.independence_number(g).expect("oracle").value;
        let n = rat(g.n());
        let mut c = None;
        for (p, q) in EPSILONS {
            let eps = Rational::new(p, q);
            if rat(alpha) <= (Rational::new(3, 8) - eps) * n {
                applicable += 1;
                let c = *c.get_or_insert_with(|| oracle.c_ind(g).expect("oracle").value);
                bad += usize::from(rat(c) <= (Rational::new(1, 4) + eps) * n - 1);
            }
        }
    }
    (considered, applicable, bad)
}

fn c4_classification_totality() -> Verdict {
    let (mut seen, mut bad) = (0, 0);
    let mut check = |g: &Graph| {
        match classify_with_embedding(g) {
            Ok(_) | Err(ClassifyError::NotFourChordal(_)) => {}
            Err(_) => bad += 1,
        }
        seen += 1;
    };
    let mut kinds = vec![
        BlockKind::K3,
        BlockKind::K4,
        BlockKind::D,
        BlockKind::Dprime,
        BlockKind::Prism,
        BlockKind::K23,
        BlockKind::K33,
        BlockKind::K33minus,
    ];
    for k in 2..=8 {
        for family in [LadderFamily::B, LadderFamily::Bprime, LadderFamily::Bdoubleprime] {
            check(&ladder_family(family, k).expect("k >= 2"));
        }
        kinds.push(BlockKind::Ladder(k));
    }
    for kind in kinds {
        check(&kind.template().graph);
    }
    let mut random = 0;
    for seed in 0..20_000u64 {
        let n = 4 + (seed % 9) as usize;
        let g = common::random_bounded_degree(n, 3, 4 * n, seed);
        if g.is_two_connected() && common::chordality(&g) <= 4 {
            check(&g);
            random += 1;
        }
    }
    verdict(
        bad == 0,
        format!("{seen} graphs ({random} random 4-chordal), {bad} unclassified"),
    )
}

fn c5_round_trip() -> Verdict {
    let mut bad = 0;
    for seed in 0..ROUND_TRIPS {
        let dec = random_decomposition(2 + seed % 12, seed as u64).expect("tree order >= 2");
        let g = assemble(&dec).expect("valid decomposition");
        let class_ok = g.is_connected() && g.is_cubic() && chordality(&g).is_k_chordal(4);
        let same = decompose_4chordal(&g).is_ok_and(|back| back.label_profile() == dec.label_profile());
        bad += usize::from(!(class_ok && same));
    }
    verdict(
        bad == 0,
        format!(
            "{}/{ROUND_TRIPS} decompositions survive assemble/decompose",
            ROUND_TRIPS - bad
        ),
    )
}

fn c6_solver_bound() -> Verdict {
    let (mut bad, mut max_n) = (0, 0);
    for seed in 0..SOLVER_INSTANCES {
        let g = random_4chordal_cubic(2 + seed % 9, seed as u64).expect("tree order >= 2");
        max_n = max_n.max(g.n());
        let ok = solve(&g).is_ok_and(|c| {
            c.subgraph.len() == c.order
                && common::is_induced_2_regular_any(&g, &c.subgraph)
                && rat(c.order) >= five_eighths(g.n())
        });
        bad += usize::from(!ok);
    }
    verdict(
        bad == 0,
        format!(
            "{}/{SOLVER_INSTANCES} certificates verified and >= 5n/8 + 3/4 (max n {max_n})",
            SOLVER_INSTANCES - bad
        ),
    )
}

fn c7_pattern_table() -> Verdict {
    let mut mismatches = Vec::new();
    for (label, want) in residual_labels().into_iter().zip(TABLE) {
        let bp = block_plus_graph(label, 0).expect("residual label");
        let adj = common::masks(&bp.graph);
        let without_y = !(1u32 << bp.y);
        let plus = common::best_by(&adj, |s| common::is_induced_regular(&adj, s, 2)).0;
        let minus = common::best_by(&adj, |s| s & without_y == s && common::is_induced_regular(&adj, s, 2)).0;
        let p = block_plus_pattern(label).expect("residual label");
        if (plus, minus) != want || (p.c_ind_bplus, p.c_ind_bplus_minus_y) != want {
            mismatches.push(format!(
                "{label}: naive ({plus},{minus}) library ({},{})",
                p.c_ind_bplus, p.c_ind_bplus_minus_y
            ));
        }
    }
    verdict(
        mismatches.is_empty(),
        format!("12 rows, mismatches: [{}]", mismatches.join("; ")),
    )
}

fn c8_tightness() -> Verdict {
    let trees = [
        Graph::from_edges(2, [(0, 1)]),
        Graph::from_edges(3, [(0, 1), (1, 2)]),
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]),
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]),
    ];
    let oracle = Oracle::default();
    let mut notes = Vec::new();
    let mut ok = true;
    for tree in trees {
        let tree = tree.expect("tree");
        let g = generate_extremal(&tree).expect("degree <= 3");
        let c = solve(&g).expect("solver");
        let mut this = c.tight && rat(c.order) == five_eighths(g.n()) && check_tightness(&g).expect("class");
        if g.n() <= ORACLE_MAX_N {
            let opt = oracle.c_ind(&g).expect("oracle").value;
            this &= rat(opt) == five_eighths(g.n());
            notes.push(format!("n={} opt={opt}", g.n()));
        } else {
            notes.push(format!("n={} bound-only", g.n()));
        }
        ok &= this;
    }
    let base = generate_extremal(&Graph::from_edges(2, [(0, 1)]).expect("edge")).expect("base");
    let base_c = oracle.c_ind(&base).expect("oracle").value;
    ok &= base.n() == 10 && base_c == 7;
    verdict(ok, format!("{}; base graph c_ind={base_c}", notes.join(", ")))
}

fn c9_named() -> Verdict {
    let o = Oracle::default();
    let got = [
        (
            "Figure1",
            o.c_ind(&named(NamedGraph::Figure1)).expect("oracle").value,
            6,
        ),
        ("K4", o.c_ind(&named(NamedGraph::K4)).expect("oracle").value, 3),
        ("K33", o.c_ind(&named(NamedGraph::K33)).expect("oracle").value, 4),
        ("Prism", o.c_ind(&named(NamedGraph::Prism)).expect("oracle").value, 4),
        (
            "Petersen mixed",
            o.max_mixed_regular(&named(NamedGraph::Petersen)).expect("oracle").value,
            6,
        ),
    ];
    let ok = got.iter().all(|&(_, g, w)| g == w);
    let detail: Vec<String> = got
        .iter()
        .map(|(name, g, w)| format!("{name}={g} (want {w})"))
        .collect();
    verdict(ok, detail.join(", "))
}

fn c10_oracle_vs_naive() -> Verdict {
    let o = Oracle::default();
    let mut bad = 0;
    for i in 0..ORACLE_INSTANCES {
        let g = if i % 2 == 0 {
            random_cubic_connected(4 + 2 * (i / 2 % 7), i as u64).expect("cubic")
        } else {
            let n = 6 + i % 11;
            common::random_bounded_degree(n, 4, 3 * n, i as u64)
        };
        let mut ok = o.c_ind(&g).expect("oracle").value == common::c_ind(&g)
            && o.independence_number(&g).expect("oracle").value == common::alpha(&g)
            && o.max_mixed_regular(&g).expect("oracle").value == common::mixed(&g);
        for d in 0..=3 {
            ok &= o.max_induced_regular(&g, d).expect("oracle").value == common::max_regular(&g, d as u32);
        }
        if g.regular_degree().is_some() {
            ok &= o.fair_domination_number_regular(&g).expect("oracle") == common::fair_domination(&g);
        }
        bad += usize::from(!ok);
    }
    verdict(
        bad == 0,
        format!(
            "{}/{ORACLE_INSTANCES} graphs agree on every problem",
            ORACLE_INSTANCES - bad
        ),
    )
}

fn main() -> ExitCode {
    let pool = pool();
    type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Verdict + 'a>);
    let criteria: Vec<Criterion> = vec![
        (
            "1 greedy inequalities",
            Duration::from_secs(60),
            Box::new(|| c1_greedy_inequalities(&pool)),
        ),
        (
            "2 chordality bound",
            Duration::from_secs(60),
            Box::new(|| c2_chordality_bound(&pool)),
        ),
        (
            "3 independence hypothesis",
            Duration::from_secs(300),
            Box::new(|| c3_independence_hypothesis(&pool)),
        ),
        (
            "4 classification totality",
            Duration::from_secs(300),
            Box::new(c4_classification_totality),
        ),
        (
            "5 decomposition round trip",
            Duration::from_secs(60),
            Box::new(c5_round_trip),
        ),
        ("6 solver bound", Duration::from_secs(300), Box::new(c6_solver_bound)),
        ("7 pattern table", Duration::from_secs(600), Box::new(c7_pattern_table)),
        ("8 tightness", Duration::from_secs(300), Box::new(c8_tightness)),
        ("9 named graphs", Duration::from_secs(60), Box::new(c9_named)),
        (
            "10 oracle vs enumeration",
            Duration::from_secs(120),
            Box::new(c10_oracle_vs_naive),
        ),
    ];
    let (mut failed, mut known) = (0, 0);
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let v = run();
        let took = start.elapsed();
        let ok = v.ok && took <= *limit;
        println!(
            "{} criterion {name}: {} [{:.2}s, limit {}s]",
            if ok { "PASS" } else { "FAIL" },
            v.detail,
            took.as_secs_f64(),
            limit.as_secs()
        );
        if !ok {
            match KNOWN_UNATTAINABLE.iter().find(|(n, _)| n == name) {
                Some((_, why)) => {
                    println!("     known unattainable: {why}");
                    known += 1;
                }
                None => failed += 1,
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria pass, {known} known unattainable",
        criteria.len() - failed - known,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
