//! Dense 0/1 occupancy grid with per-row and per-column prefix sums.

use crate::budget::Budget;
use crate::error::Result;
use crate::sets::PointSet2D;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    /// Segment `{(x, line) : lo ≤ x ≤ hi}`.
    Horizontal,
    /// Segment `{(line, y) : lo ≤ y ≤ hi}`.
    Vertical,
}

#[derive(Debug, Clone)]
pub struct OccupancyGrid {
    origin: (i64, i64),
    width: usize,
    height: usize,
    cells: Vec<bool>,
    // row_prefix[y * (width + 1) + x] = occupied cells in row y with column < x
    row_prefix: Vec<u32>,
    // col_prefix[x * (height + 1) + y] = occupied cells in column x with row < y
    col_prefix: Vec<u32>,
}

impl OccupancyGrid {
    /// Grid covering the bounding box of `points`. An empty set gives a 0×0 grid.
    pub fn from_points(points: &PointSet2D, budget: &Budget) -> Result<Self> {
        let Some(bb) = points.bounding_box() else {
            return Ok(Self::empty());
        };
        let area = bb.width() as u128 * bb.height() as u128;
        Budget::check("occupancy grid", area, budget.max_grid_cells)?;
        let (width, height) = (bb.width() as usize, bb.height() as usize);
        let mut cells = vec![false; width * height];
        for (x, y) in points.iter() {
            cells[(y - bb.min_y) as usize * width + (x - bb.min_x) as usize] = true;
        }
        Ok(Self::from_cells((bb.min_x, bb.min_y), width, height, cells))
    }

    /// Builds from row-major cells (`cells[y * width + x]`).
    pub fn from_cells(origin: (i64, i64), width: usize, height: usize, cells: Vec<bool>) -> Self {
        assert_eq!(cells.len(), width * height);
        let mut row_prefix = vec![0u32; (width + 1) * height];
        for y in 0..height {
            let row = &mut row_prefix[y * (width + 1)..(y + 1) * (width + 1)];
            for x in 0..width {
                row[x + 1] = row[x] + cells[y * width + x] as u32;
            }
        }
        let mut col_prefix = vec![0u32; (height + 1) * width];
        for x in 0..width {
            let col = &mut col_prefix[x * (height + 1)..(x + 1) * (height + 1)];
            for y in 0..height {
                col[y + 1] = col[y] + cells[y * width + x] as u32;
            }
        }
        OccupancyGrid {
            origin,
            width,
            height,
            cells,
            row_prefix,
            col_prefix,
        }
    }

    fn empty() -> Self {
        Self::from_cells((0, 0), 0, 0, Vec::new())
    }

    pub fn origin(&self) -> (i64, i64) {
        self.origin
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn occupied(&self, x: i64, y: i64) -> bool {
        match self.local(x, y) {
            Some((cx, cy)) => self.cells[cy * self.width + cx],
            None => false,
        }
    }

    fn local(&self, x: i64, y: i64) -> Option<(usize, usize)> {
        let cx = x.checked_sub(self.origin.0)?;
        let cy = y.checked_sub(self.origin.1)?;
        (cx >= 0 && cy >= 0 && (cx as usize) < self.width && (cy as usize) < self.height)
            .then_some((cx as usize, cy as usize))
    }

    /// True iff every lattice cell of the closed segment is occupied.
    ///
    /// A segment reaching outside the grid is never full, since cells
    /// outside are unoccupied. `lo > hi` is an empty segment and also
    /// reports `false`.
    pub fn segment_full(&self, axis: Axis, line: i64, lo: i64, hi: i64) -> bool {
        if lo > hi {
            return false;
        }
        let (a, b) = match axis {
            Axis::Horizontal => (self.local(lo, line), self.local(hi, line)),
            Axis::Vertical => (self.local(line, lo), self.local(line, hi)),
        };
        let (Some(a), Some(b)) = (a, b) else {
            return false;
        };
        let len = (hi - lo + 1) as u32;
        match axis {
            Axis::Horizontal => {
                let row = &self.row_prefix[a.1 * (self.width + 1)..];
                row[b.0 + 1] - row[a.0] == len
            }
            Axis::Vertical => {
                let col = &self.col_prefix[a.0 * (self.height + 1)..];
                col[b.1 + 1] - col[a.1] == len
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn naive_full(g: &OccupancyGrid, axis: Axis, line: i64, lo: i64, hi: i64) -> bool {
        lo <= hi
            && (lo..=hi).all(|t| match axis {
                Axis::Horizontal => g.occupied(t, line),
                Axis::Vertical => g.occupied(line, t),
            })
    }

    fn random_grid(rng: &mut ChaCha8Rng, n: usize, density: f64) -> OccupancyGrid {
        let cells = (0..n * n).map(|_| rng.gen_bool(density)).collect();
        OccupancyGrid::from_cells((-3, 5), n, n, cells)
    }

    #[test]
    fn all_ones_and_empty() {
        let g = OccupancyGrid::from_cells((0, 0), 3, 3, vec![true; 9]);
        assert!(g.segment_full(Axis::Horizontal, 1, 0, 2));
        assert!(g.segment_full(Axis::Vertical, 2, 0, 2));
        assert!(!g.segment_full(Axis::Horizontal, 1, 0, 3));
        let e = OccupancyGrid::from_cells((0, 0), 3, 3, vec![false; 9]);
        assert!(!e.segment_full(Axis::Horizontal, 0, 0, 0));
        let z = OccupancyGrid::from_points(&PointSet2D::default(), &Budget::default()).unwrap();
        assert!(!z.segment_full(Axis::Vertical, 0, 0, 0));
    }

    #[test]
    fn out_of_bounds_is_not_full() {
        let g = OccupancyGrid::from_cells((0, 0), 3, 3, vec![true; 9]);
        assert!(!g.segment_full(Axis::Horizontal, 5, 0, 1));
        assert!(!g.segment_full(Axis::Vertical, -1, 0, 1));
        assert!(!g.segment_full(Axis::Horizontal, 0, i64::MIN, i64::MAX));
        assert!(!g.segment_full(Axis::Horizontal, 0, 2, 1));
    }

    #[test]
    fn random_queries_match_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let g = random_grid(&mut rng, 20, 0.85);
            for _ in 0..1000 {
                let axis = if rng.gen() { Axis::Horizontal } else { Axis::Vertical };
                let line = rng.gen_range(-5..28);
                let lo = rng.gen_range(-5..28);
                let hi = lo + rng.gen_range(0..6);
                assert_eq!(
                    g.segment_full(axis, line, lo, hi),
                    naive_full(&g, axis, line, lo, hi)
                );
            }
        }
    }

    #[test]
    fn exhaustive_scan_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let g = random_grid(&mut rng, 12, 0.8);
        let (ox, oy) = g.origin();
        for axis in [Axis::Horizontal, Axis::Vertical] {
            let (line_base, t_base) = match axis {
                Axis::Horizontal => (oy, ox),
                Axis::Vertical => (ox, oy),
            };
            for line in line_base - 1..line_base + 13 {
                for lo in t_base - 1..t_base + 13 {
                    for hi in lo..t_base + 13 {
                        assert_eq!(
                            g.segment_full(axis, line, lo, hi),
                            naive_full(&g, axis, line, lo, hi)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn prefix_tables_agree_with_cells() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_grid(&mut rng, 9, 0.5);
        for y in 0..g.height {
            let count = (0..g.width).filter(|&x| g.cells[y * g.width + x]).count() as u32;
            assert_eq!(g.row_prefix[y * (g.width + 1) + g.width], count);
        }
        for x in 0..g.width {
            let count = (0..g.height).filter(|&y| g.cells[y * g.width + x]).count() as u32;
            assert_eq!(g.col_prefix[x * (g.height + 1) + g.height], count);
        }
    }
}
