//! `verify` — batch verification CLI.
//!
//! Every run writes a JSON report file and exits 0 only when all contained
//! checks pass. Randomized suites take an explicit seed which is recorded in
//! the report, so runs are byte-reproducible.

mod checks;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cpm_index::report::VerificationReport;

#[derive(Parser)]
#[command(name = "verify", version, about = "Exact index-theoretic verification on CP^m models")]
struct Cli {
    /// Report output path.
    #[arg(long, global = true, default_value = "verify-report.json")]
    out: PathBuf,
    /// Seed for randomized property suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sum local terms of a fixture, check pole cancellation and the λ=1
    /// match with the non-equivariant index series.
    Lefschetz {
        #[arg(long)]
        fixture: PathBuf,
        #[arg(long)]
        q_order: Option<usize>,
    },
    /// Component-independence of Σ m² + n·a² on a fixture.
    Star {
        #[arg(long)]
        fixture: PathBuf,
    },
    /// Integrality of the congruence index over a range of b.
    Mod24 {
        #[arg(long)]
        m: usize,
        /// Inclusive-exclusive range, e.g. 0..48.
        #[arg(long, default_value = "0..48", value_parser = parse_range)]
        b_range: (i64, i64),
    },
    /// Vanishing relations on the standard class, a perturbation witness,
    /// and a seeded superposition suite.
    Rigidity {
        #[arg(long)]
        m: usize,
    },
    /// Inequality chain for the first Pontrjagin class bound.
    PetrieBound {
        #[arg(long)]
        fixture: PathBuf,
    },
    /// Numeric transformation laws of φ and the weight-product functions,
    /// plus a real-line scan written as CSV.
    Jacobi {
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        /// CSV output for the scan rows.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Solve for the Pontrjagin classes from the relations + signature.
    Reconstruct {
        #[arg(long)]
        m: usize,
    },
    /// The full desk-scale battery.
    All {
        #[arg(long, default_value_t = 3)]
        q_order: usize,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        #[arg(long, default_value_t = 3)]
        max_weight: i64,
    },
    /// Write fixture files for a family.
    GenFixtures {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, default_value_t = 3)]
        max_weight: i64,
        #[arg(long, default_value = "fixtures")]
        out_dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    Linear,
    SyntheticStar,
    PetrieEdge,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected LO..HI")?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("{e}"))?;
    if hi <= lo {
        return Err("empty range".into());
    }
    Ok((lo, hi))
}

fn init_threads() {
    if let Ok(v) = std::env::var("VERIFY_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
}

fn main() -> ExitCode {
    init_threads();
    let cli = Cli::parse();
    let seed = cli.seed;
    let out = cli.out.clone();

    let run: Result<(serde_json::Value, Vec<VerificationReport>), checks::RunError> =
        match &cli.command {
            Command::Lefschetz { fixture, q_order } => checks::run_lefschetz(fixture, *q_order),
            Command::Star { fixture } => checks::run_star(fixture),
            Command::Mod24 { m, b_range } => checks::run_mod24(*m, *b_range),
            Command::Rigidity { m } => checks::run_rigidity(*m, seed),
            Command::PetrieBound { fixture } => checks::run_petrie(fixture),
            Command::Jacobi { tolerance, csv } => {
                checks::run_jacobi(*tolerance, seed, csv.as_deref())
            }
            Command::Reconstruct { m } => checks::run_reconstruct(*m),
            Command::All { q_order, tolerance, max_weight } => {
                checks::run_all(*q_order, *tolerance, *max_weight, seed)
            }
            Command::GenFixtures { family, m, n, max_weight, out_dir } => {
                checks::run_gen_fixtures(*family, *m, *n, *max_weight, out_dir)
            }
        };

    let (params, mut reports) = match run {
        Ok(v) => v,
        Err(e) => {
            eprintln!("verify: {e}");
            return ExitCode::from(2);
        }
    };
    // checks may run concurrently; assembly order is fixed by name
    reports.sort_by(|a, b| a.check.cmp(&b.check));
    let pass = reports.iter().all(|r| r.passed());
    let document = json!({
        "command": command_name(&cli.command),
        "seed": seed,
        "params": params,
        "pass": pass,
        "reports": reports,
    });
    let text = serde_json::to_string_pretty(&document).expect("serializable report") + "\n";
    if let Err(e) = std::fs::write(&out, &text) {
        eprintln!("verify: cannot write report {}: {e}", out.display());
        return ExitCode::from(2);
    }
    for r in &reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        println!("[{status}] {}", r.check);
    }
    println!(
        "{}: {} checks, {}; report at {}",
        command_name(&cli.command),
        reports.len(),
        if pass { "all passing" } else { "FAILURES present" },
        out.display()
    );
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Lefschetz { .. } => "lefschetz",
        Command::Star { .. } => "star",
        Command::Mod24 { .. } => "mod24",
        Command::Rigidity { .. } => "rigidity",
        Command::PetrieBound { .. } => "petrie-bound",
        Command::Jacobi { .. } => "jacobi",
        Command::Reconstruct { .. } => "reconstruct",
        Command::All { .. } => "all",
        Command::GenFixtures { .. } => "gen-fixtures",
    }
}
