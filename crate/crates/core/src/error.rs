use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the domain where the routine is defined.
    Domain {
        what: &'static str,
        value: f64,
    },
    /// Iteration cap reached before the stopping rule was met.
    NoConvergence {
        what: &'static str,
        iterations: usize,
        last_change: f64,
    },
    /// Operator parameters violating α > 0, β > 0, αβ > 1.
    InvalidParams {
        alpha: f64,
        beta: f64,
    },
    /// The two branch choices of the elliptic integrand disagree.
    BranchInconsistency {
        plus: f64,
        minus: f64,
    },
    EigensolveFailure {
        index: usize,
        sweeps: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what}: argument {value} out of domain"),
            Error::NoConvergence {
                what,
                iterations,
                last_change,
            } => write!(
                f,
                "{what}: no convergence after {iterations} iterations (last change {last_change:e})"
            ),
            Error::InvalidParams { alpha, beta } => write!(
                f,
                "invalid parameters alpha={alpha}, beta={beta}: need alpha > 0, beta > 0 and alpha*beta > 1"
            ),
            Error::BranchInconsistency { plus, minus } => write!(
                f,
                "branch choices disagree: +i gives {plus}, -i gives {minus}"
            ),
            Error::EigensolveFailure { index, sweeps } => write!(
                f,
                "tridiagonal QL failed to converge for eigenvalue {index} after {sweeps} sweeps"
            ),
        }
    }
}

impl core::error::Error for Error {}
