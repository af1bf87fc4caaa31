use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cind::cycles::{component_cycles, verify_induced_2_regular};
use cind::generators::{ladder_family, named_by_str, random_4chordal_cubic, random_cubic_connected, LadderFamily};
use cind::lemma1::lemma1_decompose;
use cind::oracle::Oracle;
use cind::structure::{assemble, classify_2connected, decompose_4chordal, generate_extremal};
use cind::theorem3::solve;
use cind::{chordality, Graph, Rational};

use crate::experiment::{self, fmt_rational, parse_rational, Suite};
use crate::format::{self, emit_graph, parse_graph, parse_graphs, Format, ParseError};

#[derive(Parser, Debug)]
#[command(name = "cind", version, about = "Induced 2-regular subgraphs of cubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Input file, or `-` for standard input.
    #[arg(default_value = "-")]
    input: String,
    /// auto, graph6, or edgelist.
    #[arg(long, default_value = "auto")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Constructive solver with the 5n/8 + 3/4 guarantee.
    Solve(GraphInput),
    /// Exact branch-and-bound.
    Oracle {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value = "cind")]
        problem: Problem,
        /// Degree for `--problem regular`.
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, default_value_t = cind::oracle::DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Greedy cycle removal trace.
    Greedy(GraphInput),
    /// Block kind of a 2-connected subcubic 4-chordal graph.
    Classify(GraphInput),
    /// Tree-of-blocks decomposition as JSON.
    Decompose(GraphInput),
    /// Graph from decomposition JSON.
    Assemble {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value = "graph6")]
        emit: Format,
    },
    /// Named, ladder, random, or extremal graphs.
    Generate {
        #[command(subcommand)]
        what: Generate,
        #[arg(long, default_value = "graph6", global = true)]
        emit: Format,
    },
    /// Length of the longest induced cycle.
    Chordality(GraphInput),
    /// Checks that a vertex set induces a 2-regular subgraph.
    Verify {
        #[command(flatten)]
        graph: GraphInput,
        /// Vertices, e.g. `0,1,2`.
        #[arg(long)]
        set: String,
    },
    /// Batch suites with a CSV report.
    Experiment {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Order of random cubic graphs.
        #[arg(long, default_value_t = 16)]
        n: usize,
        /// Tree order for assembled 4-chordal graphs.
        #[arg(long, default_value_t = 6)]
        tree_order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 24)]
        oracle_max_n: usize,
        /// Repeatable; defaults to 1/16 and 1/8.
        #[arg(long, value_parser = parse_rational)]
        epsilon: Vec<Rational>,
        /// CSV destination; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Problem {
    Cind,
    Alpha,
    Regular,
    Mixed,
    Fair,
}

#[derive(Subcommand, Debug)]
enum Generate {
    Named {
        name: String,
    },
    Ladder {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        k: usize,
    },
    RandomCubic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Random4chordal {
        #[arg(long)]
        tree_order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Extremal graph for a tree read from a file or standard input.
    Extremal(GraphInput),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    B,
    Bprime,
    Bdoubleprime,
}

/// Bad flags or unreadable input; exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct UsageError(String);

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, input: &str) -> Result<Vec<u8>> {
        if input == "-" {
            let mut buf = Vec::new();
            self.stdin.read_to_end(&mut buf).context("reading standard input")?;
            Ok(buf)
        } else {
            fs::read(input).map_err(|e| UsageError(format!("{input}: {e}")).into())
        }
    }

    fn graphs(&mut self, g: &GraphInput) -> Result<Vec<Graph>> {
        let bytes = self.read(&g.input)?;
        Ok(parse_graphs(&bytes, g.format)?)
    }

    fn graph(&mut self, g: &GraphInput) -> Result<Graph> {
        let bytes = self.read(&g.input)?;
        Ok(parse_graph(&bytes, g.format)?)
    }
}

/// Runs the command line and returns the exit code: 0 when every verdict
/// passes, 1 when one fails, 2 on usage or parse errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(cli.command, &mut io) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e:#}");
            if e.is::<ParseError>() || e.is::<UsageError>() {
                2
            } else {
                1
            }
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Result<bool> {
    match command {
        Command::Solve(input) => {
            let mut ok = true;
            for g in io.graphs(&input)? {
                let c = solve(&g)?;
                let bound = c.bound.map_or("none".to_string(), fmt_rational);
                let steps: Vec<String> = c.reduction_log.iter().map(|s| s.to_string()).collect();
                writeln!(
                    io.out,
                    "n={} order={} bound={} tight={} exceptional={} steps={}",
                    g.n(),
                    c.order,
                    bound,
                    c.tight,
                    c.is_exceptional(),
                    steps.join(",")
                )?;
                writeln!(io.out, "vertices={}", format::emit_vertex_set(&c.subgraph))?;
                ok &= c.meets_bound() && verify_induced_2_regular(&g, &c.subgraph).is_ok();
            }
            Ok(ok)
        }
        Command::Oracle {
            graph,
            problem,
            degree,
            budget,
        } => {
            let oracle = Oracle::with_budget(budget);
            for g in io.graphs(&graph)? {
                let r = match problem {
                    Problem::Cind => oracle.c_ind(&g)?,
                    Problem::Alpha => oracle.independence_number(&g)?,
                    Problem::Regular => oracle.max_induced_regular(&g, degree)?,
                    Problem::Mixed => oracle.max_mixed_regular(&g)?,
                    Problem::Fair => {
                        writeln!(io.out, "value={}", oracle.fair_domination_number_regular(&g)?)?;
                        continue;
                    }
                };
                writeln!(io.out, "value={} explored={}", r.value, r.explored)?;
                writeln!(io.out, "certificate={}", format::emit_vertex_set(&r.certificate))?;
            }
            Ok(true)
        }
        Command::Greedy(input) => {
            let g = io.graph(&input)?;
            let t = lemma1_decompose(&g)?;
            writeln!(io.out, "step\tcycle\tlen\tremoved_vertices\tremoved_edges\tmu_drop")?;
            for (i, s) in t.steps.iter().enumerate() {
                writeln!(
                    io.out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    i + 1,
                    s.cycle,
                    s.len,
                    s.removed_vertices,
                    s.removed_edges,
                    s.mu_drop
                )?;
            }
            let ok = t.first_violation().is_none();
            writeln!(
                io.out,
                "order={} steps={} inequalities={}",
                t.order(),
                t.steps.len(),
                if ok { "ok" } else { "violated" }
            )?;
            Ok(ok)
        }
        Command::Classify(input) => {
            let g = io.graph(&input)?;
            writeln!(io.out, "{}", classify_2connected(&g)?)?;
            Ok(true)
        }
        Command::Decompose(input) => {
            let g = io.graph(&input)?;
            writeln!(io.out, "{}", format::emit_decomposition(&decompose_4chordal(&g)?))?;
            Ok(true)
        }
        Command::Assemble { input, emit } => {
            let bytes = io.read(&input)?;
            let dec = format::parse_decomposition(&bytes)?;
            write_graph(io, &assemble(&dec)?, emit)?;
            Ok(true)
        }
        Command::Generate { what, emit } => {
            let size = match &what {
                Generate::Ladder { k, .. } => *k,
                Generate::RandomCubic { n, .. } => *n,
                Generate::Random4chordal { tree_order, .. } => *tree_order,
                _ => 0,
            };
            if size > format::MAX_ORDER {
                return Err(UsageError(format!("{size} exceeds the order limit {}", format::MAX_ORDER)).into());
            }
            let g = match what {
                Generate::Named { name } => named_by_str(&name).map_err(|e| UsageError(e.to_string()))?,
                Generate::Ladder { family, k } => {
                    let family = match family {
                        Family::B => LadderFamily::B,
                        Family::Bprime => LadderFamily::Bprime,
                        Family::Bdoubleprime => LadderFamily::Bdoubleprime,
                    };
                    ladder_family(family, k)?
                }
                Generate::RandomCubic { n, seed } => random_cubic_connected(n, seed)?,
                Generate::Random4chordal { tree_order, seed } => random_4chordal_cubic(tree_order, seed)?,
                Generate::Extremal(input) => generate_extremal(&io.graph(&input)?)?,
            };
            write_graph(io, &g, emit)?;
            Ok(true)
        }
        Command::Chordality(input) => {
            for g in io.graphs(&input)? {
                writeln!(io.out, "{}", chordality(&g))?;
            }
            Ok(true)
        }
        Command::Verify { graph, set } => {
            let g = io.graph(&graph)?;
            let s = format::parse_vertex_set(&set, g.n())?;
            match component_cycles(&g, &s) {
                Ok(cycles) => {
                    writeln!(io.out, "ok order={} cycles={}", s.len(), cycles.len())?;
                    Ok(true)
                }
                Err(v) => {
                    writeln!(io.out, "violation: {v}")?;
                    Ok(false)
                }
            }
        }
        Command::Experiment {
            suite,
            count,
            n,
            tree_order,
            seed,
            oracle_max_n,
            epsilon,
            out,
        } => {
            let mut cfg = experiment::Config {
                suite,
                count,
                n,
                tree_order,
                seed,
                oracle_max_n,
                ..experiment::Config::default()
            };
            if !epsilon.is_empty() {
                cfg.epsilons = epsilon;
            }
            let report = experiment::run(&cfg)?;
            match out {
                Some(path) => {
                    let file = fs::File::create(&path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                    report.write_csv(file)?;
                    writeln!(io.out, "{}", report.summary())?;
                }
                None => {
                    report.write_csv(&mut io.out)?;
                    writeln!(io.err, "{}", report.summary())?;
                }
            }
            Ok(report.all_pass())
        }
    }
}

fn write_graph(io: &mut Io, g: &Graph, emit: Format) -> Result<()> {
    let text = emit_graph(g, emit);
    if text.ends_with('\n') {
        write!(io.out, "{text}")?;
    } else {
        writeln!(io.out, "{text}")?;
    }
    Ok(())
}
