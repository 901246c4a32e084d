use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sets::{IntSet1D, PointSet2D};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    /// Interval length in lattice units; an interval covers `length + 1` points.
    pub length: i64,
    pub count: u64,
    /// Set when the input was empty (count 0).
    pub empty_input: bool,
}

/// Minimal number of closed intervals `[t, t + L]` covering `A` (greedy sweep).
pub fn covering_count_1d(a: &IntSet1D, length: i64) -> Result<CoverReport> {
    if length < 1 {
        return Err(Error::UnsupportedParameter(format!(
            "interval length {length} must be positive"
        )));
    }
    let mut count = 0u64;
    let mut reach: Option<i64> = None;
    for v in a.iter() {
        if reach.is_none_or(|end| v > end) {
            count += 1;
            reach = Some(v.saturating_add(length));
        }
    }
    Ok(CoverReport {
        length,
        count,
        empty_input: a.is_empty(),
    })
}

fn cell_shift(frame_bits: u32, m: i32) -> Result<i64> {
    let shift = frame_bits as i64 - m as i64;
    if !(-62..=62).contains(&shift) || m.unsigned_abs() > 62 {
        return Err(Error::UnsupportedParameter(format!(
            "dyadic level m = {m} outside the 62-bit index guard"
        )));
    }
    Ok(shift)
}

/// Distinct half-open dyadic cells of side `2^-m` meeting `P`, where integer
/// coordinates are real coordinates times `2^frame_bits`.
///
/// Cells finer than the lattice (`m > frame_bits`) hold at most one point each.
pub fn dyadic_box_count_2d(p: &PointSet2D, frame_bits: u32, m: i32) -> Result<u64> {
    let shift = cell_shift(frame_bits, m)?;
    if shift <= 0 {
        return Ok(p.len() as u64);
    }
    let cells: HashSet<(i64, i64)> = p.iter().map(|(x, y)| (x >> shift, y >> shift)).collect();
    Ok(cells.len() as u64)
}

/// Maps each point to a representative of its dyadic cell of side `2^-m`.
///
/// For cells of side `2^t`, `t >= 1`, the representative is the cell center
/// `c·2^t + 2^(t-1)`, a lattice point. Cells of side 1 or finer contain a
/// single lattice point, which represents itself.
pub fn snap_to_grid(p: &PointSet2D, frame_bits: u32, m: i32) -> Result<PointSet2D> {
    let shift = cell_shift(frame_bits, m)?;
    if shift <= 0 {
        return Ok(p.clone());
    }
    let half = 1i64 << (shift - 1);
    let center = |v: i64| ((v >> shift) << shift) + half;
    PointSet2D::new(p.iter().map(|(x, y)| (center(x), center(y))))
}
