use std::fmt;
use std::str::FromStr;

use ncho_core::spectral;
use ncho_core::{Error, Method, NchoParams};

/// Requested methods, or every method applicable at the point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MethodSet {
    All,
    Only(Vec<Method>),
}

impl MethodSet {
    /// Methods to run for parameters `p`, in the fixed order closed,
    /// series, elliptic, euler, spectral. `All` drops the series route
    /// where it does not converge (αβ ≤ 2).
    pub fn resolve(&self, p: &NchoParams) -> Vec<Method> {
        match self {
            MethodSet::All => Method::ALL
                .into_iter()
                .filter(|m| *m != Method::Series || p.derive().a < 1.0)
                .collect(),
            MethodSet::Only(list) => {
                let mut out: Vec<Method> = Method::ALL
                    .into_iter()
                    .filter(|m| list.contains(m))
                    .collect();
                out.dedup();
                out
            }
        }
    }

    pub fn is_all(&self) -> bool {
        matches!(self, MethodSet::All)
    }
}

impl FromStr for MethodSet {
    type Err = String;

    /// Comma-separated method tags, or `all`.
    fn from_str(s: &str) -> Result<Self, String> {
        let mut list = Vec::new();
        for tag in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if tag == "all" {
                return Ok(MethodSet::All);
            }
            list.push(
                tag.parse::<Method>()
                    .map_err(|_| format!("unknown method `{tag}`"))?,
            );
        }
        if list.is_empty() {
            return Err("no method given".into());
        }
        Ok(MethodSet::Only(list))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub alpha: f64,
    pub beta: f64,
    pub methods: MethodSet,
    pub series_terms: usize,
    pub quad_tol: f64,
    pub basis_size: usize,
    /// Eigenvalues kept per parity block by the spectral route.
    pub keep: usize,
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha: f64::NAN,
            beta: f64::NAN,
            methods: MethodSet::Only(vec![Method::Closed]),
            series_terms: 2000,
            quad_tol: 1e-13,
            basis_size: spectral::DEFAULT_BASIS,
            keep: spectral::DEFAULT_KEEP,
            output_format: OutputFormat::Text,
        }
    }
}

impl RunConfig {
    pub fn params(&self) -> Result<NchoParams, Error> {
        NchoParams::new(self.alpha, self.beta)
    }

    /// Same settings at another parameter point.
    pub fn at(&self, alpha: f64, beta: f64) -> Self {
        Self {
            alpha,
            beta,
            ..self.clone()
        }
    }
}
