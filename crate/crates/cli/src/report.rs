//! Result records and their text / JSON / CSV encodings.
//!
//! Data records never contain timings, so the same configuration always
//! renders to the same bytes; elapsed times go to [`diagnostics`].

use std::fmt::Write as _;
use std::time::Duration;

use ncho_core::{Error, Method, ZetaResult};
use serde::{Deserialize, Serialize};

use crate::config::OutputFormat;

#[derive(Debug, Clone, PartialEq)]
pub struct MethodRecord {
    pub method: Method,
    pub outcome: Result<ZetaResult, Error>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discrepancy {
    pub max_rel: f64,
    pub pair: (Method, Method),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointReport {
    pub alpha: f64,
    pub beta: f64,
    /// Set when the parameters themselves were rejected; `records` then
    /// holds one failed record per requested method.
    pub param_error: Option<Error>,
    pub records: Vec<MethodRecord>,
}

impl PointReport {
    pub fn failed(&self) -> bool {
        self.param_error.is_some() || self.records.iter().any(|r| r.outcome.is_err())
    }

    pub fn first_error(&self) -> Option<&Error> {
        self.param_error
            .as_ref()
            .or_else(|| self.records.iter().find_map(|r| r.outcome.as_ref().err()))
    }

    /// Largest pairwise relative difference among successful methods.
    pub fn discrepancy(&self) -> Option<Discrepancy> {
        self.max_pairwise(|_| true)
    }

    /// As [`Self::discrepancy`] but without the spectral estimate.
    pub fn analytic_discrepancy(&self) -> Option<Discrepancy> {
        self.max_pairwise(|m| m != Method::Spectral)
    }

    fn max_pairwise(&self, keep: impl Fn(Method) -> bool) -> Option<Discrepancy> {
        let ok: Vec<(Method, f64)> = self
            .records
            .iter()
            .filter(|r| keep(r.method))
            .filter_map(|r| r.outcome.as_ref().ok().map(|z| (r.method, z.value)))
            .collect();
        let mut best: Option<Discrepancy> = None;
        for (i, &(mi, vi)) in ok.iter().enumerate() {
            for &(mj, vj) in &ok[i + 1..] {
                let d = (vi - vj).abs() / vi.abs().max(vj.abs());
                if best.is_none_or(|b| d > b.max_rel) {
                    best = Some(Discrepancy {
                        max_rel: d,
                        pair: (mi, mj),
                    });
                }
            }
        }
        best
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonParams {
    pub alpha: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonResult {
    pub method: String,
    pub value: Option<f64>,
    pub err: Option<f64>,
    pub terms: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonDiscrepancy {
    pub max_rel: f64,
    pub pair: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonPoint {
    pub params: JsonParams,
    pub results: Vec<JsonResult>,
    pub discrepancy: Option<JsonDiscrepancy>,
    pub analytic_discrepancy: Option<JsonDiscrepancy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl From<Discrepancy> for JsonDiscrepancy {
    fn from(d: Discrepancy) -> Self {
        Self {
            max_rel: d.max_rel,
            pair: [d.pair.0.to_string(), d.pair.1.to_string()],
        }
    }
}

impl From<&PointReport> for JsonPoint {
    fn from(r: &PointReport) -> Self {
        JsonPoint {
            params: JsonParams {
                alpha: r.alpha,
                beta: r.beta,
            },
            results: r
                .records
                .iter()
                .map(|rec| match &rec.outcome {
                    Ok(z) => JsonResult {
                        method: rec.method.to_string(),
                        value: Some(z.value),
                        err: Some(z.err_estimate),
                        terms: Some(z.terms_or_nodes),
                        error: None,
                    },
                    Err(e) => JsonResult {
                        method: rec.method.to_string(),
                        value: None,
                        err: None,
                        terms: None,
                        error: Some(e.to_string()),
                    },
                })
                .collect(),
            discrepancy: r.discrepancy().map(Into::into),
            analytic_discrepancy: r.analytic_discrepancy().map(Into::into),
            error: r.param_error.as_ref().map(ToString::to_string),
        }
    }
}

/// One CSV row; columns alpha,beta,method,value,err,terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub alpha: f64,
    pub beta: f64,
    pub method: String,
    pub value: Option<f64>,
    pub err: Option<f64>,
    pub terms: Option<usize>,
}

/// Shortest representation that parses back to the same f64.
fn num(x: f64) -> String {
    if x == 0.0 || (1e-4..1e16).contains(&x.abs()) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn render(reports: &[PointReport], format: OutputFormat, grid: bool) -> String {
    match format {
        OutputFormat::Text => render_text(reports),
        OutputFormat::Json => render_json(reports, grid),
        OutputFormat::Csv => render_csv(reports),
    }
}

fn render_text(reports: &[PointReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "alpha = {}  beta = {}", r.alpha, r.beta);
        if let Some(e) = &r.param_error {
            let _ = writeln!(out, "  error: {e}");
            continue;
        }
        let _ = writeln!(
            out,
            "  {:<9} {:<24} {:<24} {:>8}",
            "method", "value", "err", "terms"
        );
        for rec in &r.records {
            match &rec.outcome {
                Ok(z) => {
                    let _ = writeln!(
                        out,
                        "  {:<9} {:<24} {:<24} {:>8}",
                        rec.method.as_str(),
                        num(z.value),
                        num(z.err_estimate),
                        z.terms_or_nodes
                    );
                }
                Err(e) => {
                    let _ = writeln!(out, "  {:<9} error: {e}", rec.method.as_str());
                }
            }
        }
        if let Some(d) = r.discrepancy() {
            let _ = writeln!(
                out,
                "  max relative discrepancy {} ({} vs {})",
                num(d.max_rel),
                d.pair.0,
                d.pair.1
            );
        }
        if let (Some(d), Some(all)) = (r.analytic_discrepancy(), r.discrepancy()) {
            if d != all {
                let _ = writeln!(
                    out,
                    "  analytic methods only    {} ({} vs {})",
                    num(d.max_rel),
                    d.pair.0,
                    d.pair.1
                );
            }
        }
    }
    out
}

fn render_json(reports: &[PointReport], grid: bool) -> String {
    let points: Vec<JsonPoint> = reports.iter().map(JsonPoint::from).collect();
    let mut s = if grid || points.len() != 1 {
        serde_json::to_string_pretty(&points)
    } else {
        serde_json::to_string_pretty(&points[0])
    }
    .expect("report values serialize");
    s.push('\n');
    s
}

pub fn csv_rows(reports: &[PointReport]) -> Vec<CsvRow> {
    reports
        .iter()
        .flat_map(|r| {
            r.records.iter().map(move |rec| {
                let ok = rec.outcome.as_ref().ok();
                CsvRow {
                    alpha: r.alpha,
                    beta: r.beta,
                    method: rec.method.to_string(),
                    value: ok.map(|z| z.value),
                    err: ok.map(|z| z.err_estimate),
                    terms: ok.map(|z| z.terms_or_nodes),
                }
            })
        })
        .collect()
}

fn render_csv(reports: &[PointReport]) -> String {
    let mut out = String::from("alpha,beta,method,value,err,terms\n");
    for row in csv_rows(reports) {
        let opt = |x: Option<f64>| x.map(num).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            num(row.alpha),
            num(row.beta),
            row.method,
            opt(row.value),
            opt(row.err),
            row.terms.map(|t| t.to_string()).unwrap_or_default()
        );
    }
    out
}

/// Timing and error lines for stderr.
pub fn diagnostics(reports: &[PointReport]) -> String {
    let mut out = String::new();
    for r in reports {
        if let Some(e) = &r.param_error {
            let _ = writeln!(out, "alpha={} beta={} error: {e}", r.alpha, r.beta);
            continue;
        }
        for rec in &r.records {
            let _ = write!(
                out,
                "alpha={} beta={} method={} elapsed_s={:.6}",
                r.alpha,
                r.beta,
                rec.method,
                rec.elapsed.as_secs_f64()
            );
            if let Err(e) = &rec.outcome {
                let _ = write!(out, " error: {e}");
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(method: Method, value: f64) -> MethodRecord {
        MethodRecord {
            method,
            outcome: Ok(ZetaResult {
                value,
                method,
                terms_or_nodes: 1,
                err_estimate: 0.0,
            }),
            elapsed: Duration::from_millis(3),
        }
    }

    #[test]
    fn discrepancy_picks_worst_pair() {
        let r = PointReport {
            alpha: 2.0,
            beta: 3.0,
            param_error: None,
            records: vec![
                record(Method::Closed, 1.0),
                record(Method::Elliptic, 1.0 + 1e-12),
                record(Method::Spectral, 1.0 + 1e-5),
            ],
        };
        let d = r.discrepancy().unwrap();
        assert_eq!(d.pair, (Method::Closed, Method::Spectral));
        let a = r.analytic_discrepancy().unwrap();
        assert_eq!(a.pair, (Method::Closed, Method::Elliptic));
        assert!(a.max_rel < 2e-12);
    }

    #[test]
    fn csv_and_numbers_round_trip() {
        for x in [
            2.132_934_326_528_723_8,
            1e-300,
            4.7e-16,
            218.967_375_864_620_43,
            0.0,
            1e300,
            1e-4,
            3.0,
        ] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
        let r = PointReport {
            alpha: 2.0,
            beta: 3.0,
            param_error: None,
            records: vec![record(Method::Closed, 2.132_934_326_528_723_8)],
        };
        let text = render(&[r], OutputFormat::Csv, false);
        assert!(text.starts_with("alpha,beta,method,value,err,terms\n"));
        assert!(!text.contains("0.003"));
    }
}
