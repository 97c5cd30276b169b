//! Command-line front end: build algebras, emit invariants and generator
//! sets, run scenario verifications, and analyze pencils at a point. All
//! outputs are versioned JSON documents with numbers as decimal strings.
//!
//! Exit codes: 0 on success with every certificate passing, 1 when any
//! certificate fails (or is inconclusive), 2 on usage or configuration
//! errors.

use crate::brackets::pencil_at;
use crate::docs::{
    to_json_pretty, AlgebraDoc, GeneratorSetDoc, InvariantSetDoc, PointDoc, ProfileDoc,
};
use crate::error::{Error, Result};
use crate::generators::{pc_generators, ScenarioContext};
use crate::pencil::jk_profile;
use crate::rootdata::{Scenario, Series};
use crate::verify::{run_scenario, RunConfig};
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "pcsplit",
    about = "Poisson-commutative subalgebras from 2-splittings of classical Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// Series letter: A, B, C or D.
    #[arg(long)]
    series: String,
    /// Rank of the simple algebra.
    #[arg(long)]
    rank: usize,
}

impl AlgebraArgs {
    fn series(&self) -> Result<Series> {
        let mut chars = self.series.chars();
        match (chars.next().and_then(Series::from_letter), chars.next()) {
            (Some(s), None) => Ok(s),
            _ => Err(Error::InvalidConfig(format!(
                "unknown series '{}': expected one of A, B, C, D",
                self.series
            ))),
        }
    }
}

fn parse_scenario(name: &str) -> Result<Scenario> {
    Scenario::from_name(name).ok_or_else(|| {
        Error::InvalidConfig(format!(
            "unknown scenario '{name}': expected borel, involution or manin"
        ))
    })
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a classical Lie algebra and emit its document.
    Build {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the basic symmetric invariants.
    Invariants {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the free generators of the commutative subalgebra of a scenario.
    Generators {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Splitting scenario: borel, involution or manin.
        #[arg(long)]
        scenario: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full certificate suite for a scenario.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Splitting scenario: borel, involution or manin.
        #[arg(long)]
        scenario: String,
        /// Seed for the deterministic sampling streams.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Sampling trials per check (must be positive).
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// Sampled integer coordinates lie in [-bound, bound].
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
        /// Report path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Jordan–Kronecker profile of the bracket pencil at a point.
    Pencil {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Splitting scenario the pencil is taken from.
        #[arg(long, default_value = "borel")]
        scenario: String,
        /// Path to a point document (realization coordinates).
        #[arg(long)]
        point: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&PathBuf>, payload: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, payload)?,
        None => print!("{payload}"),
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Build { algebra, out } => {
            let g = crate::rootdata::build_classical(algebra.series()?, algebra.rank)?;
            emit(
                out.as_ref(),
                &to_json_pretty(&AlgebraDoc::from_algebra(&g))?,
            )?;
            Ok(0)
        }
        Command::Invariants { algebra, out } => {
            let g = crate::rootdata::build_classical(algebra.series()?, algebra.rank)?;
            let inv = crate::invariants::basic_invariants(&g)?;
            let vars: Vec<String> = g.basis.iter().map(|b| b.label.clone()).collect();
            emit(
                out.as_ref(),
                &to_json_pretty(&InvariantSetDoc::new(&inv, &vars))?,
            )?;
            Ok(0)
        }
        Command::Generators {
            algebra,
            scenario,
            out,
        } => {
            let scenario = parse_scenario(&scenario)?;
            let ctx = ScenarioContext::new(algebra.series()?, algebra.rank, scenario)?;
            let set = pc_generators(&ctx)?;
            let vars: Vec<String> = ctx.algebra.basis.iter().map(|b| b.label.clone()).collect();
            let doc = GeneratorSetDoc::new(&set, ctx.series, ctx.base_rank, &vars);
            emit(out.as_ref(), &to_json_pretty(&doc)?)?;
            Ok(0)
        }
        Command::Verify {
            algebra,
            scenario,
            seed,
            samples,
            bound,
            out,
        } => {
            let scenario = parse_scenario(&scenario)?;
            let config = RunConfig {
                seed,
                samples: samples as usize,
                bound,
            };
            let report = run_scenario(scenario, algebra.series()?, algebra.rank, &config)?;
            for line in report.summary_lines() {
                println!("{line}");
            }
            let payload = to_json_pretty(&report.to_doc())?;
            match out.as_ref() {
                Some(path) => std::fs::write(path, &payload)?,
                None => print!("{payload}"),
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::Pencil {
            algebra,
            scenario,
            point,
            out,
        } => {
            let scenario = parse_scenario(&scenario)?;
            let ctx = ScenarioContext::new(algebra.series()?, algebra.rank, scenario)?;
            let doc: PointDoc = serde_json::from_str(&std::fs::read_to_string(&point)?)?;
            let xi = doc.to_point()?;
            if xi.dim() != ctx.dim() {
                return Err(Error::DimensionMismatch {
                    left: xi.dim(),
                    right: ctx.dim(),
                });
            }
            let pencil = pencil_at(&ctx.algebra, &ctx.splitting, xi.coords());
            let profile = jk_profile(&pencil)?;
            emit(
                out.as_ref(),
                &to_json_pretty(&ProfileDoc::from_profile(&profile))?,
            )?;
            Ok(0)
        }
    }
}

/// Parse an argument vector and run the selected command, returning the
/// process exit code.
pub fn parse_and_dispatch<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own usage text; 2 for usage errors, 0 for
            // --help/--version.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> i32 {
        parse_and_dispatch(args.iter().map(|s| s.to_string()))
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(
            run(&[
                "pcsplit",
                "verify",
                "--series",
                "A",
                "--rank",
                "2",
                "--scenario",
                "parabolic"
            ]),
            2
        );
        assert_eq!(
            run(&[
                "pcsplit",
                "verify",
                "--series",
                "A",
                "--rank",
                "2",
                "--scenario",
                "borel",
                "--samples",
                "0"
            ]),
            2
        );
        assert_eq!(
            run(&["pcsplit", "build", "--series", "E", "--rank", "8"]),
            2
        );
        assert_eq!(
            run(&["pcsplit", "build", "--series", "A", "--rank", "9"]),
            2
        );
        assert_eq!(run(&["pcsplit", "nonsense"]), 2);
    }

    #[test]
    fn build_to_file_succeeds() {
        let dir = std::env::temp_dir().join("pcsplit-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("a1.json");
        let code = run(&[
            "pcsplit",
            "build",
            "--series",
            "A",
            "--rank",
            "1",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let doc: AlgebraDoc =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(doc.dim, "3");
    }
}
