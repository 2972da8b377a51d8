//! Command-line frontend: ad-hoc kernel queries and batch verification of the
//! shipped proof scripts.
//!
//! Exit codes: 0 when the command (or verdict) succeeds, 1 when a verification
//! verdict is refuted or incomplete, 2 on usage, parse or schema errors.

use crate::bundles::ObjectSpec;
use crate::collections;
use crate::error::KernelError;
use crate::levi::ParabolicData;
use crate::literal;
use crate::{cache, Weight};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "bwbverify",
    about = "Exact cohomology, tensor and Ext computations on the adjoint Grassmannian E6/P2, with verification ledgers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology of S^mu by the reflection algorithm.
    Bwb {
        /// Weight literal, e.g. "w1+w6-4w2" or "[1,-4,0,0,0,1]".
        weight: String,
    },
    /// Decompose a tensor product of equivariant bundles.
    Tensor { a: String, b: String },
    /// Graded Ext between bundle objects (named bundles allowed).
    Ext { a: String, b: String },
    /// Highest weight of the dual bundle.
    Dual { weight: String },
    /// Rank of a bundle object.
    Rank { object: String },
    /// Positive-root census and the nilradical grading.
    Roots,
    /// Weyl group orders and the K-theory rank.
    Korder,
    /// Run a proof script (a built-in name or a JSON path).
    Verify {
        script: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Parallel discharge width (output is identical for every value).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// List the built-in proof scripts.
    Scripts,
}

fn parse_weight(p: &ParabolicData, s: &str) -> Result<Weight, KernelError> {
    literal::parse_weight(s, p.ambient().rank())
}

fn parse_object(p: &ParabolicData, s: &str) -> Result<ObjectSpec, KernelError> {
    literal::parse_object(p, s)
}

fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(cache::CACHE_ENV).map(PathBuf::from)
}

fn run_command(cmd: &Command) -> Result<i32, KernelError> {
    let p = ParabolicData::e6_p2();
    if let Some(dir) = cache_dir() {
        cache::load(p, &dir)?;
    }
    let code = match cmd {
        Command::Bwb { weight } => {
            let mu = parse_weight(p, weight)?;
            println!("{}", p.bwb_cohomology(&mu)?);
            0
        }
        Command::Tensor { a, b } => {
            let wa = parse_weight(p, a)?;
            let wb = parse_weight(p, b)?;
            let dec = p.tensor_bundles(&wa, &wb)?;
            println!("{}", literal::display_decomposition(p, &dec));
            0
        }
        Command::Ext { a, b } => {
            let oa = parse_object(p, a)?;
            let ob = parse_object(p, b)?;
            let ext = p.ext_semisimplified(&oa, &ob)?;
            if ext.exact {
                println!("{}", ext.graded);
            } else {
                println!("{} (semi-simplification bound, cancellation possible)", ext.graded);
            }
            0
        }
        Command::Dual { weight } => {
            let mu = parse_weight(p, weight)?;
            let dual = p.dual_weight(&mu)?;
            println!("{} = {}", dual, literal::display_irreducible(p, &dual));
            0
        }
        Command::Rank { object } => {
            let spec = parse_object(p, object)?;
            println!("{}", p.spec_rank(&spec)?);
            0
        }
        Command::Roots => {
            let amb = p.ambient();
            println!(
                "{}: {} positive roots; Levi {}: {} positive roots",
                amb.label(),
                amb.positive_roots().len(),
                p.levi().label(),
                p.levi().positive_roots().len()
            );
            let grading = p.nilradical_grading()?;
            println!(
                "non-parabolic positive roots: {} (dim X = {})",
                grading.total_roots(),
                p.dim_x()
            );
            for (deg, comp) in &grading.by_degree {
                println!(
                    "  degree {deg}: {} roots, highest weight {} = {}",
                    comp.roots.len(),
                    comp.highest,
                    literal::display_irreducible(p, &comp.highest)
                );
            }
            0
        }
        Command::Korder => {
            let wg = p.ambient().weyl_group_order();
            let wl = p.levi().weyl_group_order();
            println!(
                "|W({})| = {wg}, |W({})| = {wl}, K-theory rank = {}",
                p.ambient().label(),
                p.levi().label(),
                p.k_theory_rank()?
            );
            0
        }
        Command::Verify {
            script,
            format,
            jobs,
        } => {
            let source: String = match collections::builtin_script_source(script) {
                Some(s) => s.to_string(),
                None => std::fs::read_to_string(script)?,
            };
            let parsed = collections::parse_script(p, &source)?;
            let report = collections::verify_collection(p, &parsed, (*jobs).max(1))?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if report.verified() {
                0
            } else {
                1
            }
        }
        Command::Scripts => {
            for (name, _) in collections::builtin_scripts() {
                println!("{name}");
            }
            0
        }
    };
    if let Some(dir) = cache_dir() {
        cache::save(p, &dir)?;
    }
    Ok(code)
}

/// Entry point used by the `bwbverify` binary. Returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match run_command(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
