//! Command-line front end for the `omdci` library.
//!
//! Exit codes: 0 found / ok, 1 proven none / verification failed, 2 budget
//! hit without a verdict, 64 usage or parse error, 65 invalid instance.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use omdci::gen::{gen_graph, gen_random_instance, gen_x3c, GraphKind};
use omdci::io::{
    parse_graph, parse_instance, parse_map, parse_solution, parse_x3c, render_graph,
    render_instance, render_map, render_solution, render_x3c,
};
use omdci::oracle::{hamiltonian_oracle, x3c_oracle};
use omdci::reduce::{
    check_cohc_structure, check_hamiltonian_cycle, extract_cover, extract_cycle, reduce_cohc,
    reduce_x3c, witness_from_cycle,
};
use omdci::{
    find_positive_solution, solve, solve_plus_fpt_with, verify, FptOptions, IoError, SolveBudget,
    Variant,
};

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INVALID: i32 = 65;

#[derive(Parser)]
#[command(
    name = "omdci",
    version,
    about = "Solve, verify and reduce OMDCI instances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a maximum solution (or a full one for omdci+).
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Override the variant declared in the file.
        #[arg(long)]
        variant: Option<Variant>,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a solution file against an instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Build the OMDCI instance for an X3C instance or a graph.
    Reduce {
        kind: Kind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Map a solution of a reduced instance back to a cover or a cycle.
    Extract {
        kind: Kind,
        /// The original X3C or graph file.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Brute-force exact cover or Hamiltonian cycle.
    Oracle {
        kind: Kind,
        #[arg(long)]
        input: PathBuf,
    },
    /// Write a seeded random input.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
    /// Compare the oracle with reduce, solve and extract.
    CheckReduction {
        kind: Kind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    X3c,
    #[value(alias = "hc")]
    Cohc,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphName {
    Cycle,
    Complete,
    Path,
    Star,
    Petersen,
    Random,
    Planted,
}

#[derive(Args)]
struct OutArg {
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Generate {
    Instance {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "omdci")]
        variant: Variant,
        #[arg(long)]
        m_len: usize,
        #[arg(long)]
        a_len: usize,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        chars: usize,
        #[command(flatten)]
        out: OutArg,
    },
    Graph {
        #[arg(long)]
        kind: GraphName,
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Edge probability (random) or extra-edge probability (planted).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    X3c {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        planted: bool,
        #[command(flatten)]
        out: OutArg,
    },
}

/// A failure that ends the command with `code` after printing `message`.
struct Exit {
    code: i32,
    message: String,
}

fn usage(e: impl Display) -> Exit {
    Exit {
        code: EXIT_USAGE,
        message: e.to_string(),
    }
}

fn invalid(e: impl Display) -> Exit {
    Exit {
        code: EXIT_INVALID,
        message: e.to_string(),
    }
}

fn from_io(path: &Path, e: IoError) -> Exit {
    let code = match e {
        IoError::Parse { .. } => EXIT_USAGE,
        IoError::Invalid(_) => EXIT_INVALID,
    };
    Exit {
        code,
        message: format!("{}: {e}", path.display()),
    }
}

fn read(path: &Path) -> Result<String, Exit> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: fn(&str) -> Result<T, IoError>) -> Result<T, Exit> {
    parse(&read(path)?).map_err(|e| from_io(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<(), Exit> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// `OMDCI_THREADS` caps the worker count; unset means all cores.
fn threads() -> Result<usize, Exit> {
    let cores = std::thread::available_parallelism().map_or(1, |n| n.get());
    match std::env::var("OMDCI_THREADS") {
        Err(_) => Ok(cores),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n.min(cores.max(1))),
            _ => Err(usage(format!(
                "OMDCI_THREADS must be a positive integer, got {v:?}"
            ))),
        },
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_FOUND;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Exit { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Exit> {
    match cmd {
        Command::Solve {
            input,
            variant,
            max_nodes,
            out: dest,
        } => cmd_solve(&input, variant, max_nodes, dest.as_deref(), out, err),
        Command::Verify { input, solution } => {
            let inst = load(&input, parse_instance)?;
            let sol = load(&solution, parse_solution)?;
            Ok(match verify(&inst, &sol).violation {
                None => {
                    emit(out, "ok\n");
                    EXIT_FOUND
                }
                Some(v) => {
                    emit(out, &format!("{v}\n"));
                    EXIT_NONE
                }
            })
        }
        Command::Reduce {
            kind,
            input,
            out: dest,
            map,
        } => {
            let (inst, rmap) = match kind {
                Kind::X3c => reduce_x3c(&load(&input, parse_x3c)?),
                Kind::Cohc => reduce_cohc(&load(&input, parse_graph)?).map_err(invalid)?,
            };
            write_file(&dest, &render_instance(&inst))?;
            write_file(&map, &render_map(&rmap))?;
            emit(
                out,
                &format!("|M|={} |A|={}\n", inst.m().len(), inst.a().len()),
            );
            Ok(EXIT_FOUND)
        }
        Command::Extract {
            kind,
            input,
            map,
            solution,
        } => {
            let rmap = load(&map, parse_map)?;
            let sol = load(&solution, parse_solution)?;
            let line = match kind {
                Kind::X3c => format!(
                    "cover {}",
                    join(&extract_cover(&load(&input, parse_x3c)?, &rmap, &sol).map_err(invalid)?)
                ),
                Kind::Cohc => format!(
                    "cycle {}",
                    join(
                        &extract_cycle(&load(&input, parse_graph)?, &rmap, &sol)
                            .map_err(invalid)?
                    )
                ),
            };
            emit(out, &format!("{line}\n"));
            Ok(EXIT_FOUND)
        }
        Command::Oracle { kind, input } => {
            let found = match kind {
                Kind::X3c => {
                    x3c_oracle(&load(&input, parse_x3c)?).map(|c| format!("cover {}", join(&c)))
                }
                Kind::Cohc => hamiltonian_oracle(&load(&input, parse_graph)?)
                    .map(|c| format!("cycle {}", join(&c))),
            };
            Ok(match found {
                Some(line) => {
                    emit(out, &format!("{line}\n"));
                    EXIT_FOUND
                }
                None => {
                    emit(out, "NONE\n");
                    EXIT_NONE
                }
            })
        }
        Command::Generate { what } => cmd_generate(what, out),
        Command::CheckReduction {
            kind,
            input,
            budget,
        } => match kind {
            Kind::X3c => check_x3c(&input, budget, out),
            Kind::Cohc => check_cohc(&input, budget, out),
        },
    }
}

fn emit(out: &mut dyn Write, text: &str) {
    let _ = out.write_all(text.as_bytes());
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_solve(
    input: &Path,
    variant: Option<Variant>,
    max_nodes: Option<u64>,
    dest: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Exit> {
    let mut inst = load(input, parse_instance)?;
    if let Some(v) = variant {
        inst = inst.with_variant(v).map_err(invalid)?;
    }
    let budget = SolveBudget {
        max_nodes,
        max_k_subset: None,
    };
    let outcome = solve(&inst, budget, threads()?).map_err(invalid)?;
    let _ = writeln!(
        err,
        "k_max={} exhausted={} nodes={}",
        outcome.k_max, outcome.exhausted, outcome.nodes_explored
    );
    match outcome.best {
        Some(sol) => {
            let text = render_solution(&sol);
            if let Some(path) = dest {
                write_file(path, &text)?;
            }
            emit(out, &text);
            Ok(EXIT_FOUND)
        }
        None => {
            emit(
                out,
                &format!("NONE k_max=0 exhausted={}\n", outcome.exhausted),
            );
            Ok(if outcome.exhausted {
                EXIT_NONE
            } else {
                EXIT_INCONCLUSIVE
            })
        }
    }
}

fn cmd_generate(what: Generate, out: &mut dyn Write) -> Result<i32, Exit> {
    let (text, dest) = match what {
        Generate::Instance {
            seed,
            variant,
            m_len,
            a_len,
            colors,
            chars,
            out: dest,
        } => {
            let inst =
                gen_random_instance(seed, variant, m_len, a_len, colors, chars).map_err(usage)?;
            (render_instance(&inst), dest.out)
        }
        Generate::Graph {
            kind,
            n,
            p,
            seed,
            out: dest,
        } => {
            let kind = match kind {
                GraphName::Cycle => GraphKind::Cycle(n),
                GraphName::Complete => GraphKind::Complete(n),
                GraphName::Path => GraphKind::Path(n),
                GraphName::Star => GraphKind::Star(n),
                GraphName::Petersen => GraphKind::Petersen,
                GraphName::Random => GraphKind::Random { n, p, seed },
                GraphName::Planted => GraphKind::PlantedHc {
                    n,
                    extra_p: p,
                    seed,
                },
            };
            (render_graph(&gen_graph(kind).map_err(usage)?), dest.out)
        }
        Generate::X3c {
            seed,
            q,
            m,
            planted,
            out: dest,
        } => (
            render_x3c(&gen_x3c(seed, q, m, planted).map_err(usage)?),
            dest.out,
        ),
    };
    match dest {
        Some(path) => write_file(&path, &text)?,
        None => emit(out, &text),
    }
    Ok(EXIT_FOUND)
}

fn verdict(out: &mut dyn Write, line: String, code: i32) -> Result<i32, Exit> {
    emit(out, &format!("{line}\n"));
    Ok(code)
}

fn check_x3c(input: &Path, budget: Option<u64>, out: &mut dyn Write) -> Result<i32, Exit> {
    let x = load(input, parse_x3c)?;
    let oracle = x3c_oracle(&x);
    let (inst, map) = reduce_x3c(&x);
    let opts = FptOptions {
        threads: threads()?,
        max_nodes: budget,
    };
    let outcome = solve_plus_fpt_with(&inst, opts).map_err(invalid)?;
    match (oracle, outcome.best) {
        (Some(_), Some(sol)) => {
            let cover = match extract_cover(&x, &map, &sol) {
                Ok(c) => c,
                Err(e) => {
                    return verdict(out, format!("DISAGREE extraction failed: {e}"), EXIT_NONE)
                }
            };
            let mut seen = vec![false; 3 * x.q() + 1];
            let disjoint = cover
                .iter()
                .flat_map(|&j| x.triple(j))
                .all(|e| !std::mem::replace(&mut seen[e], true));
            if cover.len() != x.q() || !disjoint {
                return verdict(
                    out,
                    format!("DISAGREE extracted cover {} is not exact", join(&cover)),
                    EXIT_NONE,
                );
            }
            let mut sorted = cover.clone();
            sorted.sort_unstable();
            verdict(
                out,
                format!("AGREE positive cover {}", join(&sorted)),
                EXIT_FOUND,
            )
        }
        (None, None) if outcome.exhausted => verdict(out, "AGREE negative".into(), EXIT_FOUND),
        (_, None) if !outcome.exhausted => verdict(
            out,
            format!(
                "INCONCLUSIVE budget hit after {} nodes",
                outcome.nodes_explored
            ),
            EXIT_INCONCLUSIVE,
        ),
        (o, s) => verdict(
            out,
            format!(
                "DISAGREE oracle={} solver={}",
                if o.is_some() { "positive" } else { "negative" },
                if s.is_some() { "positive" } else { "negative" }
            ),
            EXIT_NONE,
        ),
    }
}

fn check_cohc(input: &Path, budget: Option<u64>, out: &mut dyn Write) -> Result<i32, Exit> {
    let g = load(input, parse_graph)?;
    let oracle = hamiltonian_oracle(&g);
    let (inst, map) = reduce_cohc(&g).map_err(invalid)?;
    let outcome = find_positive_solution(
        &inst,
        SolveBudget {
            max_nodes: budget,
            max_k_subset: None,
        },
    )
    .map_err(invalid)?;
    match (oracle, outcome.best) {
        (Some(cycle), Some(sol)) => {
            let extracted = match extract_cycle(&g, &map, &sol) {
                Ok(c) => c,
                Err(e) => {
                    return verdict(out, format!("DISAGREE extraction failed: {e}"), EXIT_NONE)
                }
            };
            if let Err(e) = check_hamiltonian_cycle(&g, &extracted) {
                return verdict(
                    out,
                    format!("DISAGREE extracted cycle invalid: {e}"),
                    EXIT_NONE,
                );
            }
            if let Err(v) = check_cohc_structure(&map, &sol) {
                return verdict(
                    out,
                    format!("DISAGREE structure check failed: {v:?}"),
                    EXIT_NONE,
                );
            }
            let round_trip = witness_from_cycle(&g, &map, &cycle)
                .ok()
                .filter(|w| verify(&inst, w).ok() && w.k() == 3 * g.n())
                .and_then(|w| extract_cycle(&g, &map, &w).ok());
            if round_trip.as_deref() != Some(cycle.as_slice()) {
                return verdict(out, "DISAGREE witness round trip failed".into(), EXIT_NONE);
            }
            verdict(
                out,
                format!("AGREE positive cycle {}", join(&extracted)),
                EXIT_FOUND,
            )
        }
        (None, None) if outcome.exhausted => verdict(out, "AGREE negative".into(), EXIT_FOUND),
        (_, None) if !outcome.exhausted => verdict(
            out,
            format!(
                "INCONCLUSIVE budget hit after {} nodes",
                outcome.nodes_explored
            ),
            EXIT_INCONCLUSIVE,
        ),
        (o, s) => verdict(
            out,
            format!(
                "DISAGREE oracle={} solver={}",
                if o.is_some() { "positive" } else { "negative" },
                if s.is_some() { "positive" } else { "negative" }
            ),
            EXIT_NONE,
        ),
    }
}
