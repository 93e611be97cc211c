//! File-based front-end for the bicomplex spectral toolkit.
//!
//! Matrices, kets, and decompositions travel as the JSON documents defined
//! in `bicomplex::json`. Every command reads a matrix file, computes, and
//! emits a JSON result plus a human-readable summary; scalars in summaries
//! are shown in both the standard `z1 + z2·i2` and the idempotent
//! `ẑ1·e1 + ẑ2·e2` notations so component reasoning stays auditable.
//!
//! Exit codes are stable: 0 success, 1 failed verification, 2 unreadable or
//! invalid input (including bad parameters), 3 operator not self-adjoint,
//! 4 eigensolver did not converge.

mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use bicomplex::{
    bicomplex_spectral_with, compact_diagonal_demo, BicomplexMatrix, Error as CoreError,
};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bicomplex", version, about = "Bicomplex operator toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Tolerance for self-adjointness and eigensolver convergence.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,

    /// Sweep budget for each component eigensolve.
    #[arg(long, global = true, default_value_t = 100)]
    max_sweeps: usize,

    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for the sampled checks of `verify`.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a self-adjoint matrix into hyperbolic eigenvalues and an
    /// orthonormal basis of eigenkets.
    Spectral { input: PathBuf },
    /// Run the invariant checks against a matrix, sampling random kets.
    Verify { input: PathBuf },
    /// Print the adjoint of a matrix.
    Adjoint { input: PathBuf },
    /// Print the operator norm of a matrix.
    Norm { input: PathBuf },
    /// Split a matrix into its two complex component matrices.
    Decompose { input: PathBuf },
    /// Tail norms of a compact diagonal operator under growing truncation.
    DemoCompact {
        /// Largest truncation size.
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Decay exponent of the first idempotent component.
        #[arg(long, default_value_t = 1.0)]
        p: f64,
        /// Decay exponent of the second idempotent component.
        #[arg(long, default_value_t = 1.0)]
        q: f64,
    },
}

/// A command failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::NotSelfAdjoint { .. } => 3,
            CoreError::NoConvergence { .. } => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    if cli.tol <= 0.0 || !cli.tol.is_finite() {
        return Err(Failure::invalid("--tol must be a positive finite number"));
    }
    if cli.max_sweeps < 1 {
        return Err(Failure::invalid("--max-sweeps must be at least 1"));
    }

    match &cli.command {
        Command::Spectral { input } => cmd_spectral(&cli, input.clone()),
        Command::Verify { input } => cmd_verify(&cli, input.clone()),
        Command::Adjoint { input } => cmd_adjoint(&cli, input.clone()),
        Command::Norm { input } => cmd_norm(&cli, input.clone()),
        Command::Decompose { input } => cmd_decompose(&cli, input.clone()),
        Command::DemoCompact { n_max, p, q } => cmd_demo_compact(&cli, *n_max, *p, *q),
    }
}

fn load_matrix(path: &PathBuf) -> Result<BicomplexMatrix, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::invalid(format!("cannot parse {}: {e}", path.display())))
}

/// JSON goes to `--out` (summary to stdout), or to stdout with the summary
/// on stderr so pipelines stay clean.
fn emit(cli: &Cli, json: &str, summary: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => {
            fs::write(path, json)
                .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display())))?;
            if !summary.is_empty() {
                println!("{summary}");
            }
        }
        None => {
            println!("{json}");
            if !summary.is_empty() {
                eprintln!("{summary}");
            }
        }
    }
    Ok(())
}

fn cmd_spectral(cli: &Cli, input: PathBuf) -> Result<ExitCode, Failure> {
    let t = load_matrix(&input)?;
    let d = bicomplex_spectral_with(&t, cli.tol, cli.max_sweeps)?;

    let mut summary = String::new();
    for (k, lambda) in d.eigenvalues.iter().enumerate() {
        summary.push_str(&format!("λ_{} = {:#} = {}\n", k + 1, lambda, lambda));
    }
    let null_cone: Vec<usize> = d
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, l)| {
            let w = l.to_bicomplex();
            w.in_null_cone(w.default_tol()) || w.is_zero()
        })
        .map(|(k, _)| k + 1)
        .collect();
    if null_cone.is_empty() {
        summary.push_str("operator is invertible (no null-cone eigenvalues)\n");
    } else {
        summary.push_str(&format!(
            "operator is NOT invertible: eigenvalues {null_cone:?} lie on the null cone\n"
        ));
    }
    summary.push_str(&format!(
        "reconstruction error {:.3e}",
        d.reconstruction_error
    ));

    let json = serde_json::to_string_pretty(&d).expect("decomposition serializes");
    emit(cli, &json, &summary)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli, input: PathBuf) -> Result<ExitCode, Failure> {
    let t = load_matrix(&input)?;
    let report = verify::run(&t, cli.tol, cli.max_sweeps, cli.seed.unwrap_or(0));

    let json = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
    emit(cli, &json, &report.text())?;
    if report.all_passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_adjoint(cli: &Cli, input: PathBuf) -> Result<ExitCode, Failure> {
    let t = load_matrix(&input)?;
    let a = t.adjoint();
    let json = serde_json::to_string_pretty(&a).expect("matrix serializes");
    emit(cli, &json, &format!("adjoint of a {0}×{0} matrix", a.dim()))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_norm(cli: &Cli, input: PathBuf) -> Result<ExitCode, Failure> {
    let t = load_matrix(&input)?;
    let norm = t.operator_norm();
    let json = serde_json::to_string_pretty(&serde_json::json!({ "norm": norm }))
        .expect("norm serializes");
    emit(cli, &json, &format!("‖T‖ = {norm}"))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(cli: &Cli, input: PathBuf) -> Result<ExitCode, Failure> {
    let t = load_matrix(&input)?;
    let (t1, t2) = t.decompose();
    let json = serde_json::to_string_pretty(&serde_json::json!({
        "component1": t1,
        "component2": t2,
    }))
    .expect("components serialize");
    emit(
        cli,
        &json,
        &format!(
            "split a {0}×{0} matrix into two complex components",
            t.dim()
        ),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_demo_compact(cli: &Cli, n_max: usize, p: f64, q: f64) -> Result<ExitCode, Failure> {
    if n_max < 2 {
        return Err(Failure::invalid("--n-max must be at least 2"));
    }
    if p <= 0.0 || q <= 0.0 || !p.is_finite() || !q.is_finite() {
        return Err(Failure::invalid("decay exponents must be positive"));
    }

    let rows = compact_diagonal_demo(n_max, p, q);
    let mut summary = String::from("  n    tail_norm         recovery_error\n");
    for r in &rows {
        summary.push_str(&format!(
            "{:>3}    {:<14.12}    {:.3e}\n",
            r.truncation, r.tail_norm, r.recovery_error
        ));
    }
    summary.push_str("tail norms vanish as the truncation grows");

    let json =
        serde_json::to_string_pretty(&serde_json::json!({ "rows": rows })).expect("rows serialize");
    emit(cli, &json, &summary)?;
    Ok(ExitCode::SUCCESS)
}
