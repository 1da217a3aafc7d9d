//! Dispatch of methods at single points and over grids.

use std::thread;
use std::time::Instant;

use ncho_core::quad::DEFAULT_N_MAX;
use ncho_core::{ncho, spectral, Error, Method, NchoParams, Result, ZetaResult};

use crate::config::{MethodSet, RunConfig};
use crate::grid::GridPoint;
use crate::report::{MethodRecord, PointReport};

pub fn evaluate(p: &NchoParams, method: Method, cfg: &RunConfig) -> Result<ZetaResult> {
    match method {
        Method::Closed => ncho::zeta2_closed(p),
        Method::Series => ncho::zeta2_series(p, cfg.series_terms),
        Method::Elliptic => ncho::zeta2_elliptic_with(p, DEFAULT_N_MAX, cfg.quad_tol),
        Method::Euler => ncho::zeta2_euler_with(p, DEFAULT_N_MAX, cfg.quad_tol),
        Method::Spectral => spectral::zeta2_spectral(p, cfg.basis_size, cfg.keep),
    }
}

/// Rejects invalid parameters up front; per-method failures are kept in
/// the report.
pub fn run_point(cfg: &RunConfig) -> Result<PointReport> {
    let p = cfg.params()?;
    let records = cfg
        .methods
        .resolve(&p)
        .into_iter()
        .map(|method| {
            let start = Instant::now();
            let outcome = evaluate(&p, method, cfg);
            MethodRecord {
                method,
                outcome,
                elapsed: start.elapsed(),
            }
        })
        .collect();
    Ok(PointReport {
        alpha: cfg.alpha,
        beta: cfg.beta,
        param_error: None,
        records,
    })
}

fn rejected(cfg: &RunConfig, e: Error) -> PointReport {
    let methods = match &cfg.methods {
        MethodSet::All => Method::ALL.to_vec(),
        MethodSet::Only(m) => m.clone(),
    };
    PointReport {
        alpha: cfg.alpha,
        beta: cfg.beta,
        param_error: Some(e.clone()),
        records: methods
            .into_iter()
            .map(|method| MethodRecord {
                method,
                outcome: Err(e.clone()),
                elapsed: Default::default(),
            })
            .collect(),
    }
}

/// Evaluates every row, in parallel, and returns reports in input order.
pub fn run_grid(points: &[GridPoint], cfg: &RunConfig) -> Vec<PointReport> {
    let workers = thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(points.len().max(1));
    let mut out: Vec<Option<PointReport>> = vec![None; points.len()];
    let chunk = points.len().div_ceil(workers).max(1);
    thread::scope(|s| {
        for (rows, slots) in points.chunks(chunk).zip(out.chunks_mut(chunk)) {
            s.spawn(move || {
                for (pt, slot) in rows.iter().zip(slots) {
                    let c = cfg.at(pt.alpha, pt.beta);
                    *slot = Some(run_point(&c).unwrap_or_else(|e| rejected(&c, e)));
                }
            });
        }
    });
    out.into_iter()
        .map(|r| r.expect("every row evaluated"))
        .collect()
}

/// 0 ok, 2 invalid parameters, 3 convergence or numerical failure,
/// 4 some grid rows failed.
pub fn exit_code(reports: &[PointReport], grid: bool) -> i32 {
    let Some(err) = reports.iter().find_map(PointReport::first_error) else {
        return 0;
    };
    if grid {
        return 4;
    }
    match err {
        Error::InvalidParams { .. } | Error::Domain { .. } => 2,
        _ => 3,
    }
}
