//! The digit set `D_k` and its witness radius.
//!
//! `D_k` is the set of values `a + b·k + c·k² + d·k³` with every
//! coefficient in `{-k+1, …, 2k-2}` and at least one coefficient zero.
//! For every `x, y ∈ {0, …, k⁴-1}` there is `r ∈ {1, …, k⁴}` such that
//! `x ± r` and `y ± r` all lie in `D_k`.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::sets::{DenseIndex, IntSet1D};

/// Largest supported `k`; keeps `k⁴` and all derived sums well inside i64.
pub const MAX_K: i64 = 1_000;

fn check_k(k: i64) -> Result<()> {
    if k < 2 {
        return Err(Error::UnsupportedParameter(format!(
            "k = {k}: D_k needs k >= 2 (D_1 = {{0}} has no witness r >= 1)"
        )));
    }
    if k > MAX_K {
        return Err(Error::UnsupportedParameter(format!("k = {k} exceeds {MAX_K}")));
    }
    Ok(())
}

/// `k⁴`.
pub fn k4(k: i64) -> i64 {
    k * k * k * k
}

/// The counting bound `(3k-2)⁴ - (3k-3)⁴` on `|D_k|`.
pub fn dk_size_bound(k: i64) -> i64 {
    k4(3 * k - 2) - k4(3 * k - 3)
}

/// Closed-form `|D_k| = 24k³ - 75k² + 102k - 54` for `k >= 2`.
///
/// Matches enumeration for every k the test suite can afford to generate;
/// used where `D_k` itself is too large to materialize.
pub fn dk_cardinality(k: i64) -> Result<i64> {
    check_k(k)?;
    Ok(24 * k * k * k - 75 * k * k + 102 * k - 54)
}

/// Generates `D_k` by enumerating all coefficient tuples with a zero entry.
pub fn gen_dk(k: i64, budget: &Budget) -> Result<IntSet1D> {
    check_k(k)?;
    let span = (3 * k - 2) as u128;
    Budget::check("D_k tuple enumeration", span.pow(4), budget.max_pair_work)?;
    Budget::check("D_k value range", 3 * k4(k) as u128 + 1, budget.max_elements)?;
    let lo = -k + 1;
    let hi = 2 * k - 2;
    let (k2, k3) = (k * k, k * k * k);
    // values lie in [-k⁴, 2k⁴]; index = v + k⁴
    let base = k4(k);
    let mut hit = vec![false; (3 * base + 1) as usize];
    let mut mark = |v: i64| hit[(v + base) as usize] = true;
    for a in lo..=hi {
        for b in lo..=hi {
            for c in lo..=hi {
                let abc = a + b * k + c * k2;
                if a == 0 || b == 0 || c == 0 {
                    for d in lo..=hi {
                        mark(abc + d * k3);
                    }
                } else {
                    mark(abc);
                }
            }
        }
    }
    let elems = hit
        .iter()
        .enumerate()
        .filter_map(|(i, &h)| h.then_some(i as i64 - base))
        .collect();
    Ok(IntSet1D::from_sorted_unchecked(elems))
}

/// Base-`k` digits `(v₀, v₁, v₂, v₃)` of `v ∈ [0, k⁴)`.
pub fn base_k_digits(v: i64, k: i64) -> [i64; 4] {
    [v % k, (v / k) % k, (v / (k * k)) % k, v / (k * k * k)]
}

/// Witness radius `r ∈ {1, …, k⁴}` for the center `(x, y)`.
///
/// Uses `r₀ = x₀ - x₁k + y₂k² - y₃k³` from the base-`k` digits. The
/// memberships are symmetric under `r ↦ -r`, so `|r₀|` is returned; when
/// `r₀ = 0` (exactly when `x₀ = x₁ = y₂ = y₃ = 0`) the radius `1` is used.
pub fn witness_r(x: i64, y: i64, k: i64) -> Result<i64> {
    check_k(k)?;
    let n = k4(k);
    if !(0..n).contains(&x) || !(0..n).contains(&y) {
        return Err(Error::Range(format!(
            "center ({x}, {y}) outside {{0..{}}}² for k = {k}",
            n - 1
        )));
    }
    Ok(raw_witness(x, y, k).abs().max(1))
}

/// `r₀` before sign normalization and the zero fallback.
pub fn raw_witness(x: i64, y: i64, k: i64) -> i64 {
    let xd = base_k_digits(x, k);
    let yd = base_k_digits(y, k);
    xd[0] - xd[1] * k + yd[2] * k * k - yd[3] * k * k * k
}

/// Checks `x ± r, y ± r ∈ D_k` for every center in `{0..k⁴-1}²` using the
/// witness formula. Returns the first failing center, if any.
pub fn verify_dk_exhaustive(k: i64, dk: &IntSet1D) -> Result<Option<(i64, i64)>> {
    use rayon::prelude::*;
    check_k(k)?;
    let index = DenseIndex::new(dk);
    let n = k4(k);
    let fail = (0..n).into_par_iter().find_map_first(|x| {
        (0..n).find_map(|y| {
            let r = witness_r(x, y, k).ok()?;
            let ok = (1..=n).contains(&r)
                && index.contains(x - r)
                && index.contains(x + r)
                && index.contains(y - r)
                && index.contains(y + r);
            (!ok).then_some((x, y))
        })
    });
    Ok(fail)
}
