use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use ncho_cli::report::diagnostics;
use ncho_cli::{
    exit_code, parse_grid, render, run_grid, run_point, MethodSet, OutputFormat, RunConfig,
};
use ncho_core::spectral::{DEFAULT_BASIS, DEFAULT_KEEP};

/// Evaluate the spectral zeta value ζ_Q(2) of the non-commutative harmonic
/// oscillator by several independent methods.
#[derive(Debug, Parser)]
#[command(name = "ncho", version)]
struct Args {
    /// First oscillator parameter (requires alpha*beta > 1).
    #[arg(long, allow_hyphen_values = true, required_unless_present = "grid")]
    alpha: Option<f64>,
    /// Second oscillator parameter.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "grid")]
    beta: Option<f64>,
    /// closed, series, elliptic, euler, spectral, all, or a comma list.
    #[arg(long, default_value = "closed")]
    method: MethodSet,
    /// Maximum number of series terms.
    #[arg(long, default_value_t = 2000)]
    terms: usize,
    /// Target error of the quadrature routes.
    #[arg(long, default_value_t = 1e-13)]
    quad_tol: f64,
    /// Hermite modes per component for the spectral route.
    #[arg(long, default_value_t = DEFAULT_BASIS)]
    basis_size: usize,
    /// Eigenvalues kept per parity block by the spectral route.
    #[arg(long, default_value_t = DEFAULT_KEEP)]
    keep: usize,
    /// text, json or csv.
    #[arg(long, default_value = "text")]
    format: OutputFormat,
    /// CSV file with header `alpha,beta`; evaluates every row.
    #[arg(long, conflicts_with_all = ["alpha", "beta"])]
    grid: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = RunConfig {
        alpha: args.alpha.unwrap_or(f64::NAN),
        beta: args.beta.unwrap_or(f64::NAN),
        methods: args.method,
        series_terms: args.terms,
        quad_tol: args.quad_tol,
        basis_size: args.basis_size,
        keep: args.keep,
        output_format: args.format,
    };

    let (reports, grid) = match &args.grid {
        Some(path) => {
            let points = match File::open(path)
                .map_err(|e| e.to_string())
                .and_then(|f| parse_grid(f).map_err(|e| e.to_string()))
            {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: cannot read grid {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            };
            (run_grid(&points, &cfg), true)
        }
        None => match run_point(&cfg) {
            Ok(r) => (vec![r], false),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };

    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(render(&reports, cfg.output_format, grid).as_bytes());
    let _ = stdout.flush();
    eprint!("{}", diagnostics(&reports));
    ExitCode::from(exit_code(&reports, grid) as u8)
}
