//! The `linecolour` command line.
//!
//! Colourings go to `-o` or standard output; the summary line, trace
//! records and oracle notes go to standard error. Exit codes: 0 success,
//! 1 palette below the bound, 2 input or usage error, 3 internal invariant
//! violation.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench;
use crate::error::{Error, Result};
use crate::extend::edge_colour_with;
use crate::families::shuffled_order;
use crate::io;
use crate::line_graph::{line_graph, vertex_colour_line_graph};
use crate::multigraph::{EdgeTerms, Multigraph};
use crate::oracle::{self, OracleGuard};
use crate::quasiline::{colour_decomposition, parse_qltree};
use crate::simple::{colours_used, local_vertex_bound, SimpleGraph};
use crate::trace::Tracer;

#[derive(Parser, Debug)]
#[command(name = "linecolour", version, about = "Edge colouring within the local bound, and vertex colouring of line and quasi-line graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    Input,
    Random,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the local edge bound of a multigraph.
    Bound {
        path: PathBuf,
        /// Per-edge terms as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Edge-colour a multigraph.
    EdgeColor {
        path: PathBuf,
        /// Palette size; defaults to the local bound.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "input")]
        order: Order,
        /// Seed for `--order random`.
        #[arg(long)]
        seed: Option<u64>,
        /// Print every rotation, swap and chain step.
        #[arg(long)]
        trace: bool,
        /// Re-check the result and compare with the exact chromatic index
        /// when the instance is small enough.
        #[arg(long)]
        verify: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Vertex-colour the line graph of a multigraph.
    LineGraph {
        path: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Vertex-colour a quasi-line graph given as a decomposition tree.
    Quasiline {
        path: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact small-instance values.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Time the edge colourer on a seeded ladder of random multigraphs.
    Bench {
        /// Edge counts, comma-separated.
        #[arg(long, value_delimiter = ',', default_values_t = [1000, 2000, 4000])]
        ms: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Chromatic index of a multigraph (`p mgraph`).
    ChiPrime { path: PathBuf },
    /// Chromatic number of a simple graph (`p graph`).
    Chi { path: PathBuf },
    /// Local vertex bound of a simple graph (`p graph`).
    GammaL { path: PathBuf },
}

fn with_path(path: &Path) -> impl Fn(std::io::Error) -> Error + '_ {
    move |e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(with_path(path))
}

fn emit(output: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(with_path(p)),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn half(x: usize) -> String {
    if x.is_multiple_of(2) {
        (x / 2).to_string()
    } else {
        format!("{}.5", x / 2)
    }
}

fn bound_report(g: &Multigraph, csv: bool) -> String {
    let r = g.local_edge_bound();
    let mut s = String::new();
    if csv {
        s.push_str("edge,u,v,u_term,v_term,t_term\n");
        for (e, (&(u, v), t)) in g.edges().iter().zip(&r.terms).enumerate() {
            let EdgeTerms { u2, v2, t2 } = *t;
            let _ = writeln!(s, "{e},{u},{v},{},{},{}", half(u2), half(v2), half(t2));
        }
    } else {
        let _ = writeln!(s, "gamma {}", r.gamma);
        if let Some(e) = r.argmax {
            let (u, v) = g.endpoints(e);
            let _ = writeln!(s, "argmax edge {e} ({u} {v})");
        }
    }
    s
}

fn summary(used: usize, gamma: usize) -> String {
    format!("colours {used} gamma {gamma} proper ok\n")
}

fn simple_graph(text: &str) -> Result<SimpleGraph> {
    io::parse_simple_graph(text)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Bound { path, csv } => {
            let g = io::parse_multigraph(&read(&path)?)?;
            out.write_all(bound_report(&g, csv).as_bytes())?;
        }
        Command::EdgeColor {
            path,
            k,
            order,
            seed,
            trace,
            verify,
            output,
        } => {
            let g = io::parse_multigraph(&read(&path)?)?;
            let gamma = g.local_edge_bound().gamma;
            let k = k.unwrap_or(gamma);
            if k < gamma {
                return Err(Error::PaletteTooSmall { k, gamma });
            }
            let order: Vec<usize> = match (order, seed) {
                (Order::Input, None) => (0..g.m()).collect(),
                (Order::Random, Some(s)) => shuffled_order(g.m(), s),
                (Order::Input, Some(_)) => return Err(Error::structure("--seed only applies to --order random")),
                (Order::Random, None) => return Err(Error::structure("--order random needs --seed")),
            };
            let mut lines = String::new();
            let mut sink = |ev: &crate::trace::TraceEvent| {
                let _ = writeln!(lines, "{ev}");
            };
            let mut tracer = if trace { Tracer::new(&mut sink) } else { Tracer::off() };
            let (c, _) = edge_colour_with(&g, k, &order, &mut tracer)?;
            err.write_all(lines.as_bytes())?;
            c.validate()
                .map_err(|v| Error::invariant(format!("result is not proper: {v:?}")))?;
            if verify {
                let note = match oracle::chromatic_index_bf(&g, &OracleGuard::from_env()?) {
                    Ok(chi) if chi > c.colours_used() => {
                        return Err(Error::invariant(format!("used {} colours, below the chromatic index {chi}", c.colours_used())))
                    }
                    Ok(chi) => format!("oracle chi-prime {chi}\n"),
                    Err(Error::GuardExceeded(why)) => format!("oracle skipped: {why}\n"),
                    Err(e) => return Err(e),
                };
                err.write_all(note.as_bytes())?;
            }
            emit(&output, &io::write_colouring(&c), out)?;
            err.write_all(summary(c.colours_used(), gamma).as_bytes())?;
        }
        Command::LineGraph { path, output } => {
            let g = io::parse_multigraph(&read(&path)?)?;
            let (colours, gamma) = vertex_colour_line_graph(&g)?;
            line_graph(&g)
                .check_colouring(&colours)
                .map_err(|e| Error::invariant(e.to_string()))?;
            emit(&output, &io::write_vertex_colouring(&colours), out)?;
            err.write_all(summary(colours_used(&colours), gamma).as_bytes())?;
        }
        Command::Quasiline { path, output } => {
            let tree = parse_qltree(&read(&path)?, path.parent())?;
            let c = colour_decomposition(&tree)?;
            let gamma = local_vertex_bound(tree.graph());
            let used = colours_used(&c.colours);
            if used > gamma {
                return Err(Error::invariant(format!("used {used} colours, above the bound {gamma}")));
            }
            emit(&output, &io::write_vertex_colouring(&c.colours), out)?;
            err.write_all(summary(used, gamma).as_bytes())?;
        }
        Command::Oracle { which } => {
            let guard = OracleGuard::from_env()?;
            let line = match which {
                OracleCommand::ChiPrime { path } => {
                    let g = io::parse_multigraph(&read(&path)?)?;
                    format!("chi-prime {}\n", oracle::chromatic_index_bf(&g, &guard)?)
                }
                OracleCommand::Chi { path } => {
                    let h = simple_graph(&read(&path)?)?;
                    format!("chi {}\n", oracle::chromatic_number_bf(&h, &guard)?)
                }
                OracleCommand::GammaL { path } => {
                    let h = simple_graph(&read(&path)?)?;
                    format!("gamma-l {}\n", oracle::local_vertex_bound_bf(&h, &guard)?)
                }
            };
            out.write_all(line.as_bytes())?;
        }
        Command::Bench { ms, runs, seed, jobs } => {
            let rows = bench::ladder(&ms, runs, seed, jobs)?;
            out.write_all(bench::to_csv(&rows).as_bytes())?;
        }
    }
    Ok(())
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
