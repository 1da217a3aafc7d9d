//! Driver for evaluating ζ_Q(2) at single points or over a grid file and
//! rendering the results as text, JSON or CSV.

pub mod config;
pub mod grid;
pub mod report;
pub mod run;

pub use config::{MethodSet, OutputFormat, RunConfig};
pub use grid::{parse_grid, GridError, GridPoint};
pub use report::{render, Discrepancy, MethodRecord, PointReport};
pub use run::{evaluate, exit_code, run_grid, run_point};
