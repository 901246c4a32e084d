use serde::Serialize;

use crate::error::{Error, Result};

/// Slope of `ln n₂` against `ln n₁` between consecutive entries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Slope {
    pub from: i64,
    pub to: i64,
    /// `None` when `ln n₁` does not change (zero denominator).
    pub slope: Option<f64>,
}

pub fn exponent_finite_diff(series: &[(i64, u64, u64)]) -> Result<Vec<Slope>> {
    if series.len() < 2 {
        return Err(Error::UnsupportedParameter(
            "exponent series needs at least 2 entries".into(),
        ));
    }
    if let Some(&(param, ..)) = series.iter().find(|&&(_, a, b)| a < 2 || b < 2) {
        return Err(Error::UnsupportedParameter(format!(
            "sizes must be >= 2 (entry {param})"
        )));
    }
    Ok(series
        .windows(2)
        .map(|w| {
            let (p0, a0, b0) = w[0];
            let (p1, a1, b1) = w[1];
            let dx = (a1 as f64).ln() - (a0 as f64).ln();
            let dy = (b1 as f64).ln() - (b0 as f64).ln();
            Slope {
                from: p0,
                to: p1,
                slope: (dx != 0.0).then(|| dy / dx),
            }
        })
        .collect())
}
