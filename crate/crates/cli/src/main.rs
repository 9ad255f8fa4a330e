use std::fs;
use std::path::{Path, PathBuf};
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use graphconv::infinite::{Family, DEFAULT_RADIUS};
use graphconv::io::{parse_edge_list, to_dot, to_edge_list, truncation_to_dot};
use graphconv::report::{analyze, family_report, Report, VerificationReport};
use graphconv::verifier::{verify, verify_all};
use graphconv::Error;

mod text;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "graphconv", version, about = "Graphs as convergence spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a graph given as an edge list.
    Analyze {
        path: PathBuf,
        /// Skip the exponential solvers.
        #[arg(long)]
        skip_exact: bool,
        #[arg(long)]
        json: bool,
        /// Write the graph in DOT format to this path.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Check the theorem catalog on all small graphs.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run a single catalog entry.
        #[arg(long, value_name = "ID")]
        theorem: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Analyze a named infinite graph.
    Family {
        /// One of ray, doubleray, comb, binarytree, starofrays[:k], fanray,
        /// dominatedladder, ladder, hubpair.
        name: String,
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: usize,
        #[arg(long)]
        json: bool,
        /// Write the truncation at the given radius in DOT format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Rewrite an edge list in canonical form or as DOT.
    Export {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
    },
    /// List the theorem catalog and the infinite families.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Dot,
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<graphconv::Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Failed(format!("{}: {e}", path.display())))
}

fn graph_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| "graph".to_string(), |s| s.to_string_lossy().into_owned())
}

/// Runs a command, returning whether it found a counterexample or failure.
fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Analyze {
            path,
            skip_exact,
            json,
            dot,
        } => {
            let g = read_graph(&path)?;
            let report = analyze(&g, &path.display().to_string(), skip_exact);
            if let Some(dot_path) = dot {
                write_file(&dot_path, &to_dot(&g, &graph_name(&path)))?;
            }
            if json {
                emit(&format!("{}\n", Report::Analysis(report).to_json()))?;
            } else {
                emit(&text::analysis(&report))?;
            }
            Ok(false)
        }
        Command::Verify {
            max_n,
            seed,
            theorem,
            json,
        } => {
            let checks = match theorem {
                Some(id) => vec![verify(&id, max_n, seed)?],
                None => verify_all(max_n, seed),
            };
            let report = VerificationReport::new(max_n, seed, checks);
            let failed = report.failed > 0;
            if json {
                emit(&format!("{}\n", Report::Verification(report).to_json()))?;
            } else {
                emit(&text::verification(&report))?;
            }
            Ok(failed)
        }
        Command::Family {
            name,
            radius,
            json,
            dot,
        } => {
            let family = Family::parse(&name)?;
            let report = family_report(family, radius);
            if let Some(dot_path) = dot {
                let t = family.oracle().truncate(radius)?;
                write_file(&dot_path, &truncation_to_dot(&t, &family.to_string()))?;
            }
            let failed = report.edge_end_bound.ok().is_some_and(|b| !b.holds)
                || report.radius_comparison.ok().is_some_and(|c| !c.identical);
            if json {
                emit(&format!("{}\n", Report::Family(report).to_json()))?;
            } else {
                emit(&text::family(&report))?;
            }
            Ok(failed)
        }
        Command::Export { path, format } => {
            let g = read_graph(&path)?;
            match format {
                Format::Edges => emit(&to_edge_list(&g))?,
                Format::Dot => emit(&to_dot(&g, &graph_name(&path)))?,
            }
            Ok(false)
        }
        Command::List => {
            emit(&text::catalog())?;
            Ok(false)
        }
    }
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => r.map_err(|e| Failure::Failed(format!("writing output: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(EXIT_FAILURE),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
