//! Size guards shared by generators and finders.
//!
//! Every limit is multiplied by the integer factor read from the
//! `SQUARELAB_BUDGET` environment variable (default 1).

use crate::error::{Error, Result};

pub const BUDGET_ENV: &str = "SQUARELAB_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest 1D input accepted by `find_centers_1d`.
    pub max_1d_points: u64,
    /// Largest 2D input accepted by the vertex finder.
    pub max_2d_points: u64,
    /// Upper bound on scanned same-row pairs (sum of squared row sizes).
    pub max_pair_work: u64,
    /// Largest dense occupancy grid, in cells.
    pub max_grid_cells: u64,
    /// Upper bound on cell tests times radii in the boundary finder.
    pub max_boundary_work: u64,
    /// Largest materialized generated set, in elements.
    pub max_elements: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_1d_points: 5_000,
            max_2d_points: 2_000_000,
            max_pair_work: 2_000_000_000,
            max_grid_cells: 16_000_000,
            max_boundary_work: 20_000_000_000,
            max_elements: 40_000_000,
        }
    }
}

impl Budget {
    pub fn scaled(factor: u64) -> Self {
        let d = Budget::default();
        let f = factor.max(1);
        Budget {
            max_1d_points: d.max_1d_points.saturating_mul(f),
            max_2d_points: d.max_2d_points.saturating_mul(f),
            max_pair_work: d.max_pair_work.saturating_mul(f),
            max_grid_cells: d.max_grid_cells.saturating_mul(f),
            max_boundary_work: d.max_boundary_work.saturating_mul(f),
            max_elements: d.max_elements.saturating_mul(f),
        }
    }

    /// Reads `SQUARELAB_BUDGET`; an unset variable means the defaults.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => {
                let factor: u64 = raw.trim().parse().map_err(|_| {
                    Error::UnsupportedParameter(format!(
                        "{BUDGET_ENV} must be a positive integer factor, got {raw:?}"
                    ))
                })?;
                if factor == 0 {
                    return Err(Error::UnsupportedParameter(format!(
                        "{BUDGET_ENV} must be at least 1"
                    )));
                }
                Ok(Budget::scaled(factor))
            }
            Err(_) => Ok(Budget::default()),
        }
    }

    pub(crate) fn check(what: &'static str, estimate: u128, limit: u64) -> Result<()> {
        if estimate > limit as u128 {
            Err(Error::budget(what, estimate, limit as u128))
        } else {
            Ok(())
        }
    }
}
