//! Exact exponential-time solvers for induced regular subgraph problems.
//!
//! All problems share one branch-and-bound over include/exclude decisions
//! taken in vertex-index order, include first. Problem-specific rules are
//! supplied by a [`Propagator`]. Because the search visits feasible sets in
//! lexicographic order and only replaces the incumbent on strict
//! improvement, the certificate returned is the lexicographically smallest
//! optimum.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search exceeded the node budget of {budget}")]
    BudgetExceeded { budget: u64 },
    #[error("graph is not regular")]
    NotRegular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: usize,
    pub certificate: VertexSet,
    /// Search nodes visited.
    pub explored: u64,
}

/// Feasibility rules for one induced-subgraph problem.
pub trait Propagator {
    /// No selected vertex may exceed this many selected neighbours.
    fn degree_cap(&self) -> usize;

    /// Every selected vertex must finally have at least this many.
    fn degree_floor(&self) -> usize;

    /// Extra pruning on a partial state; `false` abandons the branch.
    fn consistent(&self, _g: &Graph, _selected: &VertexSet, _open: &VertexSet) -> bool {
        true
    }

    /// Final check once every vertex is decided.
    fn accepts(&self, _g: &Graph, _selected: &VertexSet) -> bool {
        true
    }
}

/// Induced `s`-regular subgraphs.
#[derive(Debug, Clone, Copy)]
pub struct ExactDegree(pub usize);

impl Propagator for ExactDegree {
    fn degree_cap(&self) -> usize {
        self.0
    }

    fn degree_floor(&self) -> usize {
        self.0
    }
}

/// Induced subgraphs whose components are `K_1`, `K_2`, or cycles: maximum
/// degree two and every edge joins vertices of equal degree.
#[derive(Debug, Clone, Copy)]
pub struct MixedComponents;

impl Propagator for MixedComponents {
    fn degree_cap(&self) -> usize {
        2
    }

    fn degree_floor(&self) -> usize {
        0
    }

    fn consistent(&self, g: &Graph, selected: &VertexSet, open: &VertexSet) -> bool {
        for v in selected.iter() {
            let dv = g.degree_in(v, selected);
            let v_final = g.degree_in(v, open) == 0;
            for u in g.neighbors(v).intersection(selected).iter() {
                let du = g.degree_in(u, selected);
                // a cycle vertex next to something that can no longer reach 2
                if dv == 2 && du + g.degree_in(u, open) < 2 {
                    return false;
                }
                // an isolated edge endpoint next to a vertex already at 2
                if dv == 1 && v_final && du == 2 {
                    return false;
                }
            }
        }
        true
    }

    fn accepts(&self, g: &Graph, selected: &VertexSet) -> bool {
        selected.iter().all(|v| {
            let dv = g.degree_in(v, selected);
            g.neighbors(v)
                .intersection(selected)
                .iter()
                .all(|u| g.degree_in(u, selected) == dv)
        })
    }
}

struct Search<'a, P> {
    g: &'a Graph,
    prop: &'a P,
    budget: u64,
    explored: u64,
    best: VertexSet,
}

impl<P: Propagator> Search<'_, P> {
    fn run(&mut self, mut selected: VertexSet, mut open: VertexSet) -> Result<(), OracleError> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(OracleError::BudgetExceeded { budget: self.budget });
        }
        if !self.propagate(&selected, &mut open) {
            return Ok(());
        }
        if !self.prop.consistent(self.g, &selected, &open) {
            return Ok(());
        }
        if selected.len() + open.len() <= self.best.len() {
            return Ok(());
        }
        let Some(u) = open.first() else {
            if self.prop.accepts(self.g, &selected) {
                self.best = selected;
            }
            return Ok(());
        };
        open.remove(u);
        let mut with = selected.clone();
        with.insert(u);
        self.run(with, open.clone())?;
        selected.remove(u);
        self.run(selected, open)
    }

    /// Drops open vertices that cannot be selected; `false` if some
    /// selected vertex can no longer reach its degree floor.
    fn propagate(&self, selected: &VertexSet, open: &mut VertexSet) -> bool {
        let g = self.g;
        let cap = self.prop.degree_cap();
        let floor = self.prop.degree_floor();
        let saturated: Vec<usize> = selected.iter().filter(|&v| g.degree_in(v, selected) >= cap).collect();
        loop {
            let mut changed = false;
            for u in open.clone().iter() {
                let du = g.degree_in(u, selected);
                let blocked =
                    du > cap || saturated.iter().any(|&w| g.has_edge(u, w)) || du + g.degree_in(u, open) < floor;
                if blocked {
                    open.remove(u);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        selected.iter().all(|v| {
            let d = g.degree_in(v, selected);
            d <= cap && d + g.degree_in(v, open) >= floor
        })
    }
}

/// Exact solver configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub node_budget: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

impl Oracle {
    pub fn with_budget(node_budget: u64) -> Self {
        Oracle { node_budget }
    }

    /// Maximum-order induced subgraph satisfying `prop`.
    pub fn solve<P: Propagator>(&self, g: &Graph, prop: &P) -> Result<OracleResult, OracleError> {
        let n = g.n();
        let mut search = Search {
            g,
            prop,
            budget: self.node_budget,
            explored: 0,
            best: VertexSet::new(n),
        };
        search.run(VertexSet::new(n), VertexSet::full(n))?;
        Ok(OracleResult {
            value: search.best.len(),
            certificate: search.best,
            explored: search.explored,
        })
    }

    pub fn max_induced_regular(&self, g: &Graph, s: usize) -> Result<OracleResult, OracleError> {
        self.solve(g, &ExactDegree(s))
    }

    /// `c_ind(G)`.
    pub fn c_ind(&self, g: &Graph) -> Result<OracleResult, OracleError> {
        self.max_induced_regular(g, 2)
    }

    /// `α(G)`.
    pub fn independence_number(&self, g: &Graph) -> Result<OracleResult, OracleError> {
        self.max_induced_regular(g, 0)
    }

    pub fn max_mixed_regular(&self, g: &Graph) -> Result<OracleResult, OracleError> {
        self.solve(g, &MixedComponents)
    }

    /// Fair domination number of an `r`-regular graph:
    /// `n − max{ |H| : H induced s-regular, s < r }`. An edgeless graph
    /// needs every vertex.
    pub fn fair_domination_number_regular(&self, g: &Graph) -> Result<usize, OracleError> {
        let r = g.regular_degree().ok_or(OracleError::NotRegular)?;
        let mut best = 0;
        for s in 0..r {
            best = best.max(self.max_induced_regular(g, s)?.value);
        }
        Ok(g.n() - best)
    }
}

pub fn c_ind_exact(g: &Graph) -> Result<OracleResult, OracleError> {
    Oracle::default().c_ind(g)
}

pub fn independence_number(g: &Graph) -> Result<OracleResult, OracleError> {
    Oracle::default().independence_number(g)
}

pub fn max_induced_regular(g: &Graph, s: usize) -> Result<OracleResult, OracleError> {
    Oracle::default().max_induced_regular(g, s)
}

pub fn max_mixed_regular(g: &Graph) -> Result<OracleResult, OracleError> {
    Oracle::default().max_mixed_regular(g)
}

pub fn fair_domination_number_regular(g: &Graph) -> Result<usize, OracleError> {
    Oracle::default().fair_domination_number_regular(g)
}
