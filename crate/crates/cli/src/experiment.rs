//! Batch experiments and their CSV report.

use std::fmt;
use std::io::Write;

use anyhow::{bail, Context, Result};
use cind::generators::{
    named, random_4chordal_cubic, random_cubic_connected, random_decomposition, random_tree, NamedGraph,
};
use cind::lemma1::{check_theorem1b, lemma1_decompose, theorem1_bound, Theorem1bVerdict};
use cind::oracle::Oracle;
use cind::structure::{assemble, decompose_4chordal, generate_extremal};
use cind::theorem3::{block_plus_pattern_at, check_tightness, residual_labels, solve, theorem3_bound};
use cind::{chordality, Graph, Rational};

/// Bumped whenever the column set changes.
pub const REPORT_VERSION: &str = "1";

pub const COLUMNS: [&str; 15] = [
    "version",
    "suite",
    "instance",
    "n",
    "m",
    "chordality",
    "greedy_order",
    "theorem1_bound",
    "theorem3_order",
    "theorem3_bound",
    "tight",
    "oracle_c_ind",
    "extra_ok",
    "pass",
    "note",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Lemma1,
    Theorem1,
    Theorem1b,
    Theorem3,
    Tightness,
    Table,
    Named,
    Roundtrip,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use clap::ValueEnum;
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub suite: Suite,
    pub count: usize,
    /// Order of random cubic graphs.
    pub n: usize,
    /// Tree order for assembled 4-chordal graphs.
    pub tree_order: usize,
    pub seed: u64,
    /// Oracle columns are filled only up to this order.
    pub oracle_max_n: usize,
    pub epsilons: Vec<Rational>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            suite: Suite::All,
            count: 20,
            n: 16,
            tree_order: 6,
            seed: 0,
            oracle_max_n: 24,
            epsilons: vec![Rational::new(1, 16), Rational::new(1, 8)],
        }
    }
}

/// One instance. The verdict is always recomputed from the fields.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Row {
    pub suite: String,
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub chordality: String,
    pub greedy_order: Option<usize>,
    pub theorem1_bound: Option<Rational>,
    pub theorem3_order: Option<usize>,
    pub theorem3_bound: Option<Rational>,
    pub tight: Option<bool>,
    pub oracle_c_ind: Option<usize>,
    /// Suite-specific check, explained in `note`.
    pub extra_ok: Option<bool>,
    pub note: String,
}

fn at_least(order: Option<usize>, bound: Option<Rational>) -> bool {
    match (order, bound) {
        (Some(o), Some(b)) => Rational::from_integer(o as i64) >= b,
        _ => true,
    }
}

impl Row {
    fn new(suite: &str, instance: String, g: &Graph) -> Row {
        Row {
            suite: suite.to_string(),
            instance,
            n: g.n(),
            m: g.m(),
            chordality: chordality(g).to_string(),
            ..Row::default()
        }
    }

    pub fn pass(&self) -> bool {
        let below_oracle = |x: Option<usize>| match (x, self.oracle_c_ind) {
            (Some(x), Some(o)) => x <= o,
            _ => true,
        };
        let tight_consistent = match (self.tight, self.theorem3_order, self.theorem3_bound) {
            (Some(t), Some(o), Some(b)) => t == (Rational::from_integer(o as i64) == b),
            _ => true,
        };
        at_least(self.greedy_order, self.theorem1_bound)
            && at_least(self.theorem3_order, self.theorem3_bound)
            && tight_consistent
            && below_oracle(self.greedy_order)
            && below_oracle(self.theorem3_order)
            && self.extra_ok.unwrap_or(true)
    }

    fn record(&self) -> Vec<String> {
        let opt = |x: Option<usize>| x.map_or(String::new(), |v| v.to_string());
        let rat = |x: Option<Rational>| x.map_or(String::new(), fmt_rational);
        let flag = |x: Option<bool>| x.map_or(String::new(), |b| b.to_string());
        vec![
            REPORT_VERSION.to_string(),
            self.suite.clone(),
            self.instance.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.chordality.clone(),
            opt(self.greedy_order),
            rat(self.theorem1_bound),
            opt(self.theorem3_order),
            rat(self.theorem3_bound),
            flag(self.tight),
            opt(self.oracle_c_ind),
            flag(self.extra_ok),
            self.pass().to_string(),
            self.note.clone(),
        ]
    }
}

/// Always `p/q`, also for integers.
pub fn fmt_rational(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("expected a rational p/q, got {s:?}");
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExperimentReport {
    pub rows: Vec<Row>,
}

impl ExperimentReport {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.pass()).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.rows.len()
    }

    pub fn summary(&self) -> String {
        format!("{}/{} pass", self.passed(), self.rows.len())
    }

    pub fn write_csv(&self, out: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(COLUMNS)?;
        for r in &self.rows {
            w.write_record(r.record())?;
        }
        w.flush()?;
        Ok(())
    }
}

pub fn run(cfg: &Config) -> Result<ExperimentReport> {
    let suites = match cfg.suite {
        Suite::All => vec![
            Suite::Lemma1,
            Suite::Theorem1,
            Suite::Theorem1b,
            Suite::Theorem3,
            Suite::Tightness,
            Suite::Table,
            Suite::Named,
            Suite::Roundtrip,
        ],
        s => vec![s],
    };
    let oracle = Oracle::default();
    let mut rows = Vec::new();
    for suite in suites {
        match suite {
            Suite::Lemma1 | Suite::Theorem1 => cubic_pool(cfg, suite, &oracle, &mut rows)?,
            Suite::Theorem1b => theorem1b(cfg, &oracle, &mut rows)?,
            Suite::Theorem3 => theorem3(cfg, &oracle, &mut rows)?,
            Suite::Tightness => tightness(cfg, &oracle, &mut rows)?,
            Suite::Table => table(&mut rows)?,
            Suite::Named => named_suite(cfg, &oracle, &mut rows)?,
            Suite::Roundtrip => roundtrip(cfg, &mut rows)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(ExperimentReport { rows })
}

fn oracle_value(cfg: &Config, oracle: &Oracle, g: &Graph) -> Result<Option<usize>> {
    if g.n() > cfg.oracle_max_n {
        return Ok(None);
    }
    Ok(Some(oracle.c_ind(g)?.value))
}

fn cubic_pool(cfg: &Config, suite: Suite, oracle: &Oracle, rows: &mut Vec<Row>) -> Result<()> {
    for i in 0..cfg.count {
        let seed = cfg.seed + i as u64;
        let g = random_cubic_connected(cfg.n, seed)?;
        let mut row = Row::new(&suite.to_string(), format!("cubic-n{}-s{seed}", cfg.n), &g);
        let trace = lemma1_decompose(&g)?;
        let k = chordality(&g).value().context("cubic graphs have cycles")?;
        row.greedy_order = Some(trace.order());
        row.theorem1_bound = Some(theorem1_bound(g.n(), k)?);
        row.oracle_c_ind = oracle_value(cfg, oracle, &g)?;
        if suite == Suite::Lemma1 {
            let violation = trace.first_violation();
            let mu_ok = trace.total_mu_drop() == g.n() / 2 + 1;
            row.extra_ok = Some(violation.is_none() && mu_ok && trace.residual_forest.is_forest());
            row.note = format!(
                "steps={} sum_mu={} first_violation={}",
                trace.steps.len(),
                trace.total_mu_drop(),
                violation.map_or("none".to_string(), |v| v.to_string())
            );
        }
        rows.push(row);
    }
    Ok(())
}

fn theorem1b(cfg: &Config, oracle: &Oracle, rows: &mut Vec<Row>) -> Result<()> {
    if cfg.n > cfg.oracle_max_n {
        bail!(
            "theorem1b needs the oracle: --n {} exceeds --oracle-max-n {}",
            cfg.n,
            cfg.oracle_max_n
        );
    }
    for i in 0..cfg.count {
        let seed = cfg.seed + i as u64;
        let g = random_cubic_connected(cfg.n, seed)?;
        for &eps in &cfg.epsilons {
            let r = check_theorem1b(&g, eps, oracle)?;
            let mut row = Row::new(
                "theorem1b",
                format!("cubic-n{}-s{seed}-eps{}", cfg.n, fmt_rational(eps)),
                &g,
            );
            row.oracle_c_ind = r.c_ind;
            row.extra_ok = Some(r.verdict != Theorem1bVerdict::Fails);
            row.note = format!(
                "alpha={} alpha_limit={} threshold={} {:?}",
                r.alpha,
                fmt_rational(r.alpha_limit),
                fmt_rational(r.c_ind_threshold),
                r.verdict
            );
            rows.push(row);
        }
    }
    Ok(())
}

fn solver_columns(row: &mut Row, g: &Graph) -> Result<()> {
    let cert = solve(g)?;
    row.theorem3_order = Some(cert.order);
    row.theorem3_bound = cert.bound;
    row.tight = cert.bound.map(|_| cert.tight);
    row.note = cert
        .reduction_log
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    Ok(())
}

fn theorem3(cfg: &Config, oracle: &Oracle, rows: &mut Vec<Row>) -> Result<()> {
    for i in 0..cfg.count {
        let seed = cfg.seed + i as u64;
        let g = random_4chordal_cubic(cfg.tree_order, seed)?;
        let mut row = Row::new("theorem3", format!("tree{}-s{seed}", cfg.tree_order), &g);
        solver_columns(&mut row, &g)?;
        row.oracle_c_ind = oracle_value(cfg, oracle, &g)?;
        rows.push(row);
    }
    Ok(())
}

fn tightness(cfg: &Config, oracle: &Oracle, rows: &mut Vec<Row>) -> Result<()> {
    for i in 0..cfg.count {
        let seed = cfg.seed + i as u64;
        let tree = random_tree(cfg.tree_order.max(2), 3, seed);
        let g = generate_extremal(&tree)?;
        let mut row = Row::new("tightness", format!("extremal-tree{}-s{seed}", tree.n()), &g);
        solver_columns(&mut row, &g)?;
        row.oracle_c_ind = oracle_value(cfg, oracle, &g)?;
        let bound = theorem3_bound(g.n());
        let oracle_tight = row
            .oracle_c_ind
            .is_none_or(|c| Rational::from_integer(c as i64) == bound);
        row.extra_ok = Some(check_tightness(&g)? && row.tight == Some(true) && oracle_tight);
        rows.push(row);
    }
    Ok(())
}

fn table(rows: &mut Vec<Row>) -> Result<()> {
    for label in residual_labels() {
        let slots = if label.kind().is_none() { 1 } else { label.capacity() };
        for slot in 0..slots {
            let p = block_plus_pattern_at(label, slot)?;
            let g = cind::theorem3::block_plus_graph(label, slot)?.graph;
            let mut row = Row::new("table", format!("{label}@{slot}"), &g);
            row.oracle_c_ind = Some(p.c_ind_bplus);
            row.extra_ok = Some(p.gain_suffices());
            row.note = format!(
                "c_plus={} c_minus_y={} gain={} needed={}",
                p.c_ind_bplus,
                p.c_ind_bplus_minus_y,
                p.guaranteed_gain(),
                fmt_rational(p.required_gain())
            );
            rows.push(row);
        }
    }
    Ok(())
}

fn named_suite(cfg: &Config, oracle: &Oracle, rows: &mut Vec<Row>) -> Result<()> {
    for which in NamedGraph::ALL {
        let g = named(which);
        let mut row = Row::new("named", which.to_string(), &g);
        row.oracle_c_ind = oracle_value(cfg, oracle, &g)?;
        if g.is_cubic() && g.is_connected() {
            let trace = lemma1_decompose(&g)?;
            let k = chordality(&g).value().context("cubic graphs have cycles")?;
            row.greedy_order = Some(trace.order());
            row.theorem1_bound = Some(theorem1_bound(g.n(), k)?);
            if k <= 4 {
                solver_columns(&mut row, &g)?;
            }
        }
        rows.push(row);
    }
    Ok(())
}

fn roundtrip(cfg: &Config, rows: &mut Vec<Row>) -> Result<()> {
    for i in 0..cfg.count {
        let seed = cfg.seed + i as u64;
        let dec = random_decomposition(cfg.tree_order, seed)?;
        let g = assemble(&dec)?;
        let back = decompose_4chordal(&g)?;
        let mut row = Row::new("roundtrip", format!("tree{}-s{seed}", cfg.tree_order), &g);
        let same = back.label_profile() == dec.label_profile();
        let class_ok = g.is_connected() && g.is_cubic() && chordality(&g).is_k_chordal(4);
        row.extra_ok = Some(same && class_ok);
        row.note = format!("tree_vertices={}", dec.tree.n());
        rows.push(row);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(fmt_rational(Rational::from_integer(7)), "7/1");
        assert_eq!(parse_rational("1/8").unwrap(), Rational::new(1, 8));
        assert_eq!(parse_rational("3").unwrap(), Rational::from_integer(3));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn verdict_uses_row_values() {
        let mut row = Row {
            greedy_order: Some(3),
            theorem1_bound: Some(Rational::new(10, 3)),
            ..Row::default()
        };
        assert!(!row.pass());
        row.greedy_order = Some(4);
        assert!(row.pass());
        row.oracle_c_ind = Some(3);
        assert!(!row.pass());
    }

    #[test]
    fn small_run() {
        let cfg = Config {
            suite: Suite::Theorem1,
            count: 3,
            n: 10,
            ..Config::default()
        };
        let report = run(&cfg).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert!(report.all_pass());
        let mut buf = Vec::new();
        report.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("version,suite,instance"));
        assert_eq!(text.lines().count(), 4);
    }
}
