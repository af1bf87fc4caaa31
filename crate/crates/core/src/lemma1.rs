//! Greedy cycle removal and the lower bounds it certifies.
//!
//! The greedy repeatedly picks an induced cycle `C` of the current graph,
//! keeps it, and deletes its closed neighbourhood, until only a forest is
//! left. The kept cycles are pairwise non-adjacent, so their union induces a
//! 2-regular subgraph. Each step records how much the cyclomatic number
//! `μ = m + κ − n` drops; the cycle chosen is one minimising `μ_i − ℓ_i`,
//! ties broken by shorter cycle, then by lexicographically smaller vertex
//! set.

use num_traits::Zero;
use thiserror::Error;

use crate::cycles::{chordality, enumerate_induced_cycles, Chordality, InducedCycle};
use crate::graph::{Graph, VertexMap, VertexSet};
use crate::oracle::{Oracle, OracleError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Lemma1Error {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not cubic")]
    NotCubic,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("chordality parameter must be at least 3, got {0}")]
    ChordalityTooSmall(usize),
    #[error("regularity must be at least 3, got {0}")]
    DegreeTooSmall(usize),
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("epsilon must lie strictly between 0 and 3/8, got {0}")]
    EpsilonOutOfRange(Rational),
}

#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    Lemma1(#[from] Lemma1Error),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// One greedy step, in the labels of the input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    pub cycle: InducedCycle,
    /// `ℓ_i`, the cycle length.
    pub len: usize,
    /// `n_i`: vertices deleted with the closed neighbourhood.
    pub removed_vertices: usize,
    /// `m_i`: edges deleted.
    pub removed_edges: usize,
    /// `μ_i`: drop of the cyclomatic number.
    pub mu_drop: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
    /// What remains after the last step, with its map into the input.
    pub residual_forest: Graph,
    pub residual_map: VertexMap,
    /// Vertices of all kept cycles.
    pub union: VertexSet,
    /// Steps taken in each component, in order of smallest vertex; a
    /// single entry for connected input.
    pub component_steps: Vec<usize>,
}

impl GreedyTrace {
    /// `Σ ℓ_i`, the order of the induced 2-regular subgraph found.
    pub fn order(&self) -> usize {
        self.steps.iter().map(|s| s.len).sum()
    }

    pub fn total_mu_drop(&self) -> usize {
        self.steps.iter().map(|s| s.mu_drop).sum()
    }

    /// The per-step inequalities `μ_1 ≤ 2ℓ_1` and `μ_i ≤ 2ℓ_i − 2` for
    /// later steps, each component restarting the count. Returns the index
    /// of the first violating step.
    pub fn first_violation(&self) -> Option<usize> {
        let mut i = 0;
        for &count in &self.component_steps {
            for j in 0..count {
                let s = &self.steps[i];
                let limit = if j == 0 { 2 * s.len } else { 2 * s.len - 2 };
                if s.mu_drop > limit {
                    return Some(i);
                }
                i += 1;
            }
        }
        None
    }
}

fn check_cubic(g: &Graph) -> Result<(), Lemma1Error> {
    if !g.is_cubic() {
        return Err(Lemma1Error::NotCubic);
    }
    Ok(())
}

/// Runs the greedy on a connected cubic graph.
pub fn lemma1_decompose(g: &Graph) -> Result<GreedyTrace, Lemma1Error> {
    check_cubic(g)?;
    if !g.is_connected() {
        return Err(Lemma1Error::NotConnected);
    }
    Ok(greedy(g))
}

/// Runs the greedy on each component of a cubic graph separately and
/// concatenates the traces.
pub fn lemma1_decompose_per_component(g: &Graph) -> Result<GreedyTrace, Lemma1Error> {
    check_cubic(g)?;
    let mut steps = Vec::new();
    let mut union = VertexSet::new(g.n());
    let mut component_steps = Vec::new();
    for comp in g.components() {
        let (sub, map) = g.induced_subgraph(&comp);
        let t = greedy(&sub);
        component_steps.push(t.steps.len());
        union.union_with(&map.lift(&t.union));
        steps.extend(t.steps.into_iter().map(|s| GreedyStep {
            cycle: s.cycle.map(|v| map.to_parent(v)),
            ..s
        }));
    }
    let removed = g.closed_neighborhood(&union);
    let (residual_forest, residual_map) = g.delete_vertices(&removed);
    Ok(GreedyTrace {
        steps,
        residual_forest,
        residual_map,
        union,
        component_steps,
    })
}

fn greedy(g: &Graph) -> GreedyTrace {
    let mut cur = g.clone();
    let mut to_input = VertexMap::identity(g.n());
    let mut steps = Vec::new();
    let mut union = VertexSet::new(g.n());
    while !cur.is_forest() {
        let mu = cur.cyclomatic_number();
        let mut best: Option<(i64, usize, VertexSet, InducedCycle, Graph, VertexMap)> = None;
        for c in enumerate_induced_cycles(&cur, None) {
            let set = c.vertex_set(cur.n());
            let (after, map) = cur.delete_vertices(&cur.closed_neighborhood(&set));
            let drop = mu - after.cyclomatic_number();
            let key = drop as i64 - c.len() as i64;
            let better = match &best {
                None => true,
                Some((k, l, s, ..)) => (key, c.len()).cmp(&(*k, *l)).then_with(|| set.lex_cmp(s)).is_lt(),
            };
            if better {
                best = Some((key, c.len(), set, c, after, map));
            }
        }
        let (_, len, set, cycle, after, map) = best.expect("a graph that is not a forest has a cycle");
        steps.push(GreedyStep {
            cycle: cycle.map(|v| to_input.to_parent(v)),
            len,
            removed_vertices: cur.n() - after.n(),
            removed_edges: cur.m() - after.m(),
            mu_drop: mu - after.cyclomatic_number(),
        });
        union.union_with(&to_input.lift(&set));
        to_input = to_input.compose(&map);
        cur = after;
    }
    let count = steps.len();
    GreedyTrace {
        steps,
        residual_forest: cur,
        residual_map: to_input,
        union,
        component_steps: vec![count],
    }
}

/// `(n − 2) / (4 − 4/k)`.
pub fn theorem1_bound(n: usize, k: usize) -> Result<Rational, BoundError> {
    if k < 3 {
        return Err(BoundError::ChordalityTooSmall(k));
    }
    if n < 2 {
        return Err(BoundError::OrderTooSmall(n));
    }
    Ok(Rational::new((n as i64 - 2) * k as i64, 4 * (k as i64 - 1)))
}

/// `n / (2(r − 1)) + 1 / ((r − 1)(r − 2))` for `r`-regular graphs.
pub fn baseline_regular_bound(n: usize, r: usize) -> Result<Rational, BoundError> {
    if r < 3 {
        return Err(BoundError::DegreeTooSmall(r));
    }
    let (n, r) = (n as i64, r as i64);
    Ok(Rational::new(n, 2 * (r - 1)) + Rational::new(1, (r - 1) * (r - 2)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Report {
    pub chordality: usize,
    pub bound: Rational,
    pub greedy_order: usize,
    pub oracle_order: Option<usize>,
    pub verdict: bool,
}

/// Compares the greedy order with the chordality bound; with an oracle, also
/// records the exact optimum.
pub fn check_theorem1(g: &Graph, oracle: Option<&Oracle>) -> Result<Theorem1Report, CheckError> {
    let trace = lemma1_decompose(g)?;
    let k = match chordality(g) {
        Chordality::Bounded(k) => k,
        Chordality::Acyclic => unreachable!("cubic graphs contain cycles"),
    };
    let bound = theorem1_bound(g.n(), k)?;
    let oracle_order = oracle.map(|o| o.c_ind(g)).transpose()?.map(|r| r.value);
    let greedy_order = trace.order();
    Ok(Theorem1Report {
        chordality: k,
        bound,
        greedy_order,
        oracle_order,
        verdict: Rational::from_integer(greedy_order as i64) >= bound,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem1bVerdict {
    HypothesisNotMet,
    Holds,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1bReport {
    pub epsilon: Rational,
    pub alpha: usize,
    /// `(3/8 − ε) n`.
    pub alpha_limit: Rational,
    pub c_ind: Option<usize>,
    /// `(1/4 + ε) n − 1`, which `c_ind` must exceed strictly.
    pub c_ind_threshold: Rational,
    pub verdict: Theorem1bVerdict,
}

/// If `α ≤ (3/8 − ε) n`, checks `c_ind > (1/4 + ε) n − 1`; both values come
/// from the exact oracle.
pub fn check_theorem1b(g: &Graph, epsilon: Rational, oracle: &Oracle) -> Result<Theorem1bReport, CheckError> {
    if epsilon <= Rational::zero() || epsilon >= Rational::new(3, 8) {
        return Err(BoundError::EpsilonOutOfRange(epsilon).into());
    }
    check_cubic(g)?;
    if !g.is_connected() {
        return Err(Lemma1Error::NotConnected.into());
    }
    let n = Rational::from_integer(g.n() as i64);
    let alpha_limit = (Rational::new(3, 8) - epsilon) * n;
    let c_ind_threshold = (Rational::new(1, 4) + epsilon) * n - 1;
    let alpha = oracle.independence_number(g)?.value;
    let (c_ind, verdict) = if Rational::from_integer(alpha as i64) <= alpha_limit {
        let c = oracle.c_ind(g)?.value;
        let ok = Rational::from_integer(c as i64) > c_ind_threshold;
        (
            Some(c),
            if ok {
                Theorem1bVerdict::Holds
            } else {
                Theorem1bVerdict::Fails
            },
        )
    } else {
        (None, Theorem1bVerdict::HypothesisNotMet)
    };
    Ok(Theorem1bReport {
        epsilon,
        alpha,
        alpha_limit,
        c_ind,
        c_ind_threshold,
        verdict,
    })
}
