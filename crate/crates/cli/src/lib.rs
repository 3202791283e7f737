//! The `pmi` command line: solve, check, plot, double and list candidates.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use pmi_core::checks;
use pmi_core::format::{instance_to_json, parse_instance, solution_file, FormatError};
use pmi_core::pwl::{format_rational, to_decimal, ExtRational, Rational};
use pmi_core::{
    doubled_graphic, doubled_instance, find_candidates, parametric_min_basis, solve_bruteforce,
    solve_intervals, solve_naive, ElementId, Error, Instance, Solution,
};

#[derive(Debug, Parser)]
#[command(
    name = "pmi",
    version,
    about = "Parametric matroid one-interdiction solver"
)]
pub struct Cli {
    /// Worker threads; 0 uses one per core.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Naive,
    Intervals,
    Oracle,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Intervals => "intervals",
            Algorithm::Oracle => "oracle",
        }
    }

    fn solve(self, inst: &Instance) -> Result<Solution, Error> {
        match self {
            Algorithm::Naive => solve_naive(inst),
            Algorithm::Intervals => solve_intervals(inst),
            Algorithm::Oracle => solve_bruteforce(inst),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance and write the segments as JSON.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Naive)]
        algorithm: Algorithm,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run all solvers and structural checks and print a table.
    Check {
        input: PathBuf,
        /// Evenly spaced comparison points in addition to all cuts.
        #[arg(long, default_value_t = 32)]
        samples: usize,
    },
    /// Write `lambda,y,w,most_vital,y_decimal` rows as CSV.
    Plot {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Naive)]
        algorithm: Algorithm,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Give every element an identical twin.
    Double {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the candidate equality points.
    Candidates { input: PathBuf },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Write(std::io::Error),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Solver(#[from] Error),
    #[error("{0} check(s) failed")]
    ChecksFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Solver(Error::Coloops(_)) => 2,
            CliError::ChecksFailed(_) => 3,
            _ => 1,
        }
    }
}

fn load(path: &Path) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    parse_instance(&text).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn std::io::Write) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(CliError::Write),
        None => stdout.write_all(text.as_bytes()).map_err(CliError::Write),
    }
}

/// Runs `cli`, writing reports to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn std::io::Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Solve {
            input,
            algorithm,
            out,
        } => {
            let inst = load(input)?;
            let sol = algorithm.solve(&inst)?;
            let file = solution_file(&inst, &sol, algorithm.name())?;
            let text = serde_json::to_string_pretty(&file).expect("serializable") + "\n";
            emit(out.as_deref(), &text, stdout)
        }
        Command::Check { input, samples } => {
            let inst = load(input)?;
            let results = checks::run_all(&inst, *samples)?;
            let mut text = String::new();
            for r in &results {
                writeln!(text, "{r}").expect("string write");
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            writeln!(
                text,
                "{} of {} checks passed",
                results.len() - failed,
                results.len()
            )
            .expect("string write");
            emit(None, &text, stdout)?;
            if failed > 0 {
                Err(CliError::ChecksFailed(failed))
            } else {
                Ok(())
            }
        }
        Command::Plot {
            input,
            algorithm,
            samples,
            out,
        } => {
            let inst = load(input)?;
            let text = plot_csv(&inst, *algorithm, *samples)?;
            emit(out.as_deref(), &text, stdout)
        }
        Command::Double { input, out } => {
            let inst = load(input)?;
            let doubled = doubled_graphic(&inst).unwrap_or_else(|| doubled_instance(&inst));
            emit(out.as_deref(), &(instance_to_json(&doubled) + "\n"), stdout)
        }
        Command::Candidates { input } => {
            let inst = load(input)?;
            let set = find_candidates(&inst);
            let mut text = String::new();
            for c in &set.points {
                writeln!(
                    text,
                    "{}\t{} -> {}\t{:?}",
                    format_rational(&c.point.lambda),
                    c.point.lighter_before,
                    c.point.lighter_after,
                    c.case
                )
                .expect("string write");
            }
            writeln!(
                text,
                "{} candidates at {} distinct points; bound 2km = {}",
                set.len(),
                set.lambdas().len(),
                2 * inst.rank() * inst.m()
            )
            .expect("string write");
            emit(None, &text, stdout)
        }
    }
}

/// Rows at every cut of `y` and `w` plus `samples + 1` evenly spaced
/// points, sorted and without repeats.
pub fn plot_csv(inst: &Instance, algorithm: Algorithm, samples: usize) -> Result<String, CliError> {
    let (ExtRational::Finite(lo), ExtRational::Finite(hi)) =
        (inst.interval().lo(), inst.interval().hi())
    else {
        return Err(CliError::Unsupported(format!(
            "plotting needs a bounded interval, got {}",
            inst.interval()
        )));
    };
    let sol = algorithm.solve(inst)?;
    let w = parametric_min_basis(inst)?.value;
    let steps = samples.max(1);
    let mut xs: Vec<Rational> = sol.y.cuts().iter().chain(w.cuts()).cloned().collect();
    xs.extend((0..=steps).map(|i| lo + (hi - lo) * Rational::new(i.into(), steps.into())));
    xs.sort();
    xs.dedup();
    let mut text = String::from("lambda,y,w,most_vital,y_decimal\n");
    for x in &xs {
        let y = sol.y.eval(x);
        let ElementId(mv) = sol.segment_at(x).most_vital;
        writeln!(
            text,
            "{},{},{},e{mv},{}",
            format_rational(x),
            format_rational(&y),
            format_rational(&w.eval(x)),
            to_decimal(&y, 12)
        )
        .expect("string write");
    }
    Ok(text)
}

/// Builds a thread pool of the requested size and runs `f` inside it.
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}
