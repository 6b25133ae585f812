use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use jtriv::cli::{self, Computation, JobConfig, OutputFormat};
use jtriv::monoid::{DEFAULT_ELEMENT_CAP, DEFAULT_SELF_CHECK_SEED};

/// Representation theory of finite J-trivial monoids.
///
/// Family descriptors: hecke:A:4, hecke:I:6, ndpf:5, ubool:4,
/// incidence:<poset.json>, or:<poset.json>, quivermonoid:<digraph.json>,
/// straubing.
#[derive(Parser)]
#[command(name = "jtriv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format: text, json, or dot
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Write the artifact to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for surveys (0 = library default)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Cap on the number of monoid elements
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_CAP)]
    cap_elements: usize,

    /// Cap on the size of exact radical-filtration instances
    #[arg(long, global = true, default_value_t = 1000)]
    cap_filtration: usize,

    /// Cap on the number of quiver sieve products
    #[arg(long, global = true, default_value_t = 10_000_000)]
    cap_sieve: u64,

    /// Seed for the sampled product self-check
    #[arg(long, global = true, default_value_t = DEFAULT_SELF_CHECK_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Cardinality, idempotent count, and J-triviality
    Info { family: String },
    /// List the idempotents
    Idempotents { family: String },
    /// The Cartan matrix (text rows, DOT graph, or JSON)
    Cartan { family: String },
    /// The quiver with labelled edges
    Quiver { family: String },
    /// The radical filtration generating series
    #[command(name = "radical-series")]
    RadicalSeries { family: String },
    /// Dimensions of the indecomposable projective modules
    Projectives { family: String },
    /// The lifted orthogonal idempotents f_e
    Lift { family: String },
    /// Dump the monoid table as JSON
    Dump { family: String },
    /// Check OR(P) Cartan acyclicity over all posets on n vertices
    #[command(name = "survey-posets")]
    SurveyPosets {
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Property to check (only cartan-acyclic is defined)
        #[arg(long, default_value = "cartan-acyclic")]
        check: String,
    },
    /// Check the demipotent family on all meet semi-lattices up to a size
    #[command(name = "check-conjecture")]
    CheckConjecture {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Write the full per-instance JSON report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn to_config(cli: &Cli) -> Result<JobConfig, jtriv::Error> {
    let format: OutputFormat = cli.format.parse()?;
    let (computation, family) = match &cli.command {
        Command::Info { family } => (Computation::Info, Some(family.clone())),
        Command::Idempotents { family } => (Computation::Idempotents, Some(family.clone())),
        Command::Cartan { family } => (Computation::Cartan, Some(family.clone())),
        Command::Quiver { family } => (Computation::Quiver, Some(family.clone())),
        Command::RadicalSeries { family } => (Computation::RadicalSeries, Some(family.clone())),
        Command::Projectives { family } => (Computation::Projectives, Some(family.clone())),
        Command::Lift { family } => (Computation::Lift, Some(family.clone())),
        Command::Dump { family } => (Computation::DumpJson, Some(family.clone())),
        Command::SurveyPosets { n, check } => {
            if check != "cartan-acyclic" {
                return Err(jtriv::Error::InvalidInput(format!(
                    "unknown check {check:?} (expected cartan-acyclic)"
                )));
            }
            (Computation::Survey { n: *n }, None)
        }
        Command::CheckConjecture { max_size, report } => (
            Computation::Conjecture {
                max_size: *max_size,
                report: report.as_ref().map(|p| p.display().to_string()),
            },
            None,
        ),
    };
    Ok(JobConfig {
        computation,
        family,
        format,
        cap_elements: cli.cap_elements,
        filtration_cap: cli.cap_filtration,
        sieve_cap: cli.cap_sieve,
        threads: cli.threads,
        seed: cli.seed,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let wants_json = cli.format == "json";
    let config = match to_config(&cli) {
        Ok(c) => c,
        Err(e) => return fail(&e, wants_json),
    };
    match cli::run(&config) {
        Ok(output) => {
            for w in &output.warnings {
                eprintln!("warning: {w}");
            }
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, output.artifact.as_bytes()) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(3);
                    }
                }
                None => println!("{}", output.artifact.trim_end()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e, wants_json),
    }
}

fn fail(e: &jtriv::Error, wants_json: bool) -> ExitCode {
    if wants_json {
        eprintln!("{}", cli::error_json(e));
    } else {
        eprintln!("error: {e}");
    }
    ExitCode::from(cli::exit_code_for(e) as u8)
}
