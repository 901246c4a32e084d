use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::finders::{boundary_full, CenterWitness};
use crate::grid::OccupancyGrid;
use crate::sets::{DoubledPoint, PointSet2D};

/// The discrete square boundary `{(u, v) : max(|u - x|, |v - y|) = r}`.
pub fn boundary_points(x: i64, y: i64, r: i64) -> PointSet2D {
    let mut pts = Vec::with_capacity(8 * r.max(1) as usize);
    for t in -r..=r {
        pts.extend([(x + t, y - r), (x + t, y + r), (x - r, y + t), (x + r, y + t)]);
    }
    PointSet2D::new(pts).expect("boundary coordinates in range")
}

/// All `(s, r)` with `1 <= r <= r_max` whose discrete boundary lies in `B`.
///
/// Each test is four O(1) segment queries on the occupancy grid. Sorted by
/// center, then radius.
pub fn find_boundary_centers_2d(
    b: &PointSet2D,
    r_max: i64,
    budget: &Budget,
) -> Result<Vec<CenterWitness>> {
    if r_max < 1 {
        return Err(Error::UnsupportedParameter(format!("r_max = {r_max} must be >= 1")));
    }
    let Some(bb) = b.bounding_box() else {
        return Ok(Vec::new());
    };
    let area = bb.width() as u128 * bb.height() as u128;
    let reach = ((bb.width().min(bb.height()) as i64 - 1) / 2).min(r_max);
    Budget::check(
        "boundary finder scan",
        area * reach.max(1) as u128,
        budget.max_boundary_work,
    )?;
    let grid = OccupancyGrid::from_points(b, budget)?;
    let out: Vec<Vec<CenterWitness>> = (bb.min_y..=bb.max_y)
        .into_par_iter()
        .map(|y| {
            let mut row = Vec::new();
            for x in bb.min_x..=bb.max_x {
                let limit = (x - bb.min_x)
                    .min(bb.max_x - x)
                    .min(y - bb.min_y)
                    .min(bb.max_y - y)
                    .min(r_max);
                for r in 1..=limit {
                    if boundary_full(&grid, x, y, r) {
                        row.push(CenterWitness {
                            center: DoubledPoint::from_lattice(x, y),
                            radius2: 2 * r,
                        });
                    }
                }
            }
            row
        })
        .collect();
    let mut flat: Vec<CenterWitness> = out.into_iter().flatten().collect();
    flat.sort_unstable();
    Ok(flat)
}
