//! Sharpness examples built from `D_k`: the vertex example `D_k × D_k` and
//! the strip example whose square boundaries cover every center.

use crate::budget::Budget;
use crate::constructions::dk::{gen_dk, k4};
use crate::error::Result;
use crate::sets::{IntSet1D, PointSet2D};

/// Centers `{1, …, k⁴-1}²` shared by both examples.
pub fn example_centers(k: i64, budget: &Budget) -> Result<PointSet2D> {
    let side = (k4(k) - 1) as u128;
    Budget::check("center set", side * side, budget.max_elements)?;
    let e = IntSet1D::new(1..k4(k))?;
    Ok(PointSet2D::product(&e, &e))
}

/// `B = D_k × D_k`, `S = {1, …, k⁴-1}²`.
pub fn gen_vertex_example(k: i64, budget: &Budget) -> Result<(PointSet2D, PointSet2D)> {
    let dk = gen_dk(k, budget)?;
    let n = dk.len() as u128;
    Budget::check("vertex example B", n * n, budget.max_elements)?;
    let s = example_centers(k, budget)?;
    Ok((PointSet2D::product(&dk, &dk), s))
}

/// Exact `|B|` of the strip example: two strips of `|D_k|·(3k⁴+1)` points
/// overlapping in `D_k × D_k`.
pub fn boundary_example_size(dk_len: u64, k: i64) -> u64 {
    let strip = 3 * k4(k) as u64 + 1;
    2 * dk_len * strip - dk_len * dk_len
}

/// `B = (D_k × I) ∪ (I × D_k)` with `I = {-k⁴, …, 2k⁴}`, `S = {1, …, k⁴-1}²`.
pub fn gen_boundary_example(k: i64, budget: &Budget) -> Result<(PointSet2D, PointSet2D)> {
    let dk = gen_dk(k, budget)?;
    let estimate = boundary_example_size(dk.len() as u64, k);
    Budget::check("boundary example B", estimate as u128, budget.max_elements)?;
    let strip = IntSet1D::new(-k4(k)..=2 * k4(k))?;
    let b = PointSet2D::product(&dk, &strip).union(&PointSet2D::product(&strip, &dk));
    let s = example_centers(k, budget)?;
    Ok((b, s))
}
