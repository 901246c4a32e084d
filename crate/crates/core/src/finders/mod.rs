//! Inverse problems: recover every center of an axis-parallel square whose
//! vertices (or whole discrete boundary) lie in a given finite set.
//!
//! Centers are reported in doubled coordinates. Output is sorted; scans may
//! run in parallel, ordering is imposed at the end.

mod boundaries;
mod radii;
mod vertices;

use serde::Serialize;

pub use boundaries::{boundary_points, find_boundary_centers_2d};
pub use radii::{count_centers_1d, find_centers_1d, RadiiIndex};
pub use vertices::{count_vertex_centers_2d, find_vertex_centers_2d, vertex_pair_work};

use crate::budget::Budget;
use crate::error::Result;
use crate::grid::{Axis, OccupancyGrid};
use crate::sets::{BoundingBox, DoubledPoint, PointSet2D};

/// Center and doubled radius of a square: vertices `(X ± ρ, Y ± ρ) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CenterWitness {
    pub center: DoubledPoint,
    /// `2r`, always positive.
    pub radius2: i64,
}

impl CenterWitness {
    /// `None` unless `radius2 > 0` and all four vertices are lattice points.
    pub fn new(center: DoubledPoint, radius2: i64) -> Option<Self> {
        let parity_ok =
            (center.x2 - radius2).rem_euclid(2) == 0 && (center.y2 - radius2).rem_euclid(2) == 0;
        (radius2 > 0 && parity_ok).then_some(CenterWitness { center, radius2 })
    }

    pub fn vertices(&self) -> [(i64, i64); 4] {
        let (x, y, r) = (self.center.x2, self.center.y2, self.radius2);
        [
            ((x - r) / 2, (y - r) / 2),
            ((x + r) / 2, (y - r) / 2),
            ((x - r) / 2, (y + r) / 2),
            ((x + r) / 2, (y + r) / 2),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareMode {
    Vertices,
    Boundary,
}

/// Point-query index over a 2D set.
#[derive(Debug, Clone)]
pub struct SquareIndex {
    points: PointSet2D,
    grid: OccupancyGrid,
    bbox: Option<BoundingBox>,
}

impl SquareIndex {
    pub fn new(points: PointSet2D, budget: &Budget) -> Result<Self> {
        let grid = OccupancyGrid::from_points(&points, budget)?;
        let bbox = points.bounding_box();
        Ok(SquareIndex { points, grid, bbox })
    }

    pub fn points(&self) -> &PointSet2D {
        &self.points
    }

    /// Smallest doubled radius of a square centered at `center` whose
    /// vertices (or discrete boundary) lie in the set.
    pub fn has_square_at(&self, center: DoubledPoint, mode: SquareMode) -> Option<i64> {
        let bb = self.bbox?;
        let (x2, y2) = (center.x2, center.y2);
        let inside = (2 * bb.min_x..=2 * bb.max_x).contains(&x2)
            && (2 * bb.min_y..=2 * bb.max_y).contains(&y2);
        if !inside {
            return None;
        }
        // the largest doubled radius keeping every vertex inside the box
        let reach = (x2 - 2 * bb.min_x)
            .min(2 * bb.max_x - x2)
            .min(y2 - 2 * bb.min_y)
            .min(2 * bb.max_y - y2);
        match mode {
            SquareMode::Vertices => {
                if (x2 - y2).rem_euclid(2) != 0 {
                    return None;
                }
                let first = if x2.rem_euclid(2) == 0 { 2 } else { 1 };
                (first..=reach).step_by(2).find(|&r2| {
                    let w = CenterWitness { center, radius2: r2 };
                    w.vertices().iter().all(|&(x, y)| self.points.contains(x, y))
                })
            }
            SquareMode::Boundary => {
                let (x, y) = center.to_lattice()?;
                (1..=reach / 2)
                    .find(|&r| boundary_full(&self.grid, x, y, r))
                    .map(|r| 2 * r)
            }
        }
    }
}

/// Chebyshev sphere of radius `r` around `(x, y)` fully occupied.
pub(crate) fn boundary_full(grid: &OccupancyGrid, x: i64, y: i64, r: i64) -> bool {
    grid.occupied(x - r, y - r)
        && grid.occupied(x + r, y + r)
        && grid.occupied(x - r, y + r)
        && grid.occupied(x + r, y - r)
        && grid.segment_full(Axis::Horizontal, y - r, x - r, x + r)
        && grid.segment_full(Axis::Horizontal, y + r, x - r, x + r)
        && grid.segment_full(Axis::Vertical, x - r, y - r, y + r)
        && grid.segment_full(Axis::Vertical, x + r, y - r, y + r)
}
