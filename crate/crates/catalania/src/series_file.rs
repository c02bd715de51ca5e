//! Truncated power series as JSON: `{"order": N, "coeffs": ["1", "-1/2", ...]}`.
//!
//! `coeffs` lists `[x^0] .. [x^k]` with `k <= order`; missing coefficients are zero.

use std::path::Path;

use catalania_core::{Rat, Series};
use serde::{Deserialize, Serialize};

use crate::Failure;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SeriesDto {
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl SeriesDto {
    pub fn from_series(s: &Series) -> Self {
        SeriesDto { order: s.order(), coeffs: s.coeffs().iter().map(Rat::to_string).collect() }
    }

    pub fn to_series(&self) -> Result<Series, Failure> {
        if self.coeffs.len() > self.order + 1 {
            return Err(Failure::Usage(format!(
                "series: {} coefficients given for order {}",
                self.coeffs.len(),
                self.order
            )));
        }
        let mut coeffs = Vec::with_capacity(self.order + 1);
        for c in &self.coeffs {
            coeffs.push(c.parse::<Rat>().map_err(|e| Failure::Usage(format!("series: {e}")))?);
        }
        coeffs.resize(self.order + 1, Rat::zero());
        Ok(Series::new(coeffs))
    }
}

pub fn parse_series(text: &str) -> Result<Series, Failure> {
    let dto: SeriesDto = serde_json::from_str(text).map_err(|e| Failure::Usage(format!("series: {e}")))?;
    dto.to_series()
}

pub fn load_series(path: &Path) -> Result<Series, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_series(&text).map_err(|f| match f {
        Failure::Usage(m) => Failure::Usage(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn series_to_json(s: &Series) -> String {
    serde_json::to_string(&SeriesDto::from_series(s)).expect("plain data")
}
