use std::io::Read;

use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum GridError {
    #[error("grid file header must be `alpha,beta`, found `{0}`")]
    Header(String),
    #[error("grid file: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct GridPoint {
    pub alpha: f64,
    pub beta: f64,
}

/// Reads a `alpha,beta` CSV grid, keeping file order. Parameter validity is
/// not checked here; invalid rows surface as per-row errors when run.
pub fn parse_grid<R: Read>(reader: R) -> Result<Vec<GridPoint>, GridError> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.headers()?.clone();
    if headers.len() != 2 || &headers[0] != "alpha" || &headers[1] != "beta" {
        return Err(GridError::Header(
            headers.iter().collect::<Vec<_>>().join(","),
        ));
    }
    rdr.deserialize()
        .map(|r| r.map_err(GridError::from))
        .collect()
}
