//! Multiscale sets `A_N = (p!)⁴ · Σ_{k=1..p} D_k / (k!)⁴` with `N = (p!)⁴`.
//!
//! Level `k` is scaled by `w_k = (p!/k!)⁴`, the place value of the
//! mixed-radix digit `u_k ∈ {0, …, k⁴-1}` of a center coordinate. Level 1
//! contributes `D_1 = {0}` and a zero radius; positivity of the total
//! radius comes from levels `k >= 2`.

use crate::budget::Budget;
use crate::constructions::dk::{gen_dk, k4, witness_r};
use crate::error::{Error, Result};
use crate::sets::IntSet1D;

pub const MIN_P: u32 = 2;
pub const MAX_P: u32 = 6;

fn check_p(p: u32) -> Result<()> {
    if !(MIN_P..=MAX_P).contains(&p) {
        return Err(Error::UnsupportedParameter(format!(
            "p = {p}: A_N supports p in {MIN_P}..={MAX_P}"
        )));
    }
    Ok(())
}

/// `(p!)⁴`.
pub fn an_modulus(p: u32) -> i64 {
    let f: i64 = (1..=p as i64).product();
    f.pow(4)
}

/// Place values `w_1, …, w_p` with `w_k = (p!/k!)⁴`.
pub fn level_weights(p: u32) -> Vec<i64> {
    let mut w = vec![1i64; p as usize];
    for k in (1..p as usize).rev() {
        w[k - 1] = w[k] * k4(k as i64 + 1);
    }
    w
}

/// Smallest `p >= 2` with `(p!)⁴ >= n`.
pub fn p_for_modulus(n: i64) -> Result<u32> {
    (MIN_P..=MAX_P)
        .find(|&p| an_modulus(p) >= n)
        .ok_or_else(|| Error::UnsupportedParameter(format!("N = {n} exceeds (6!)^4")))
}

/// `D_1 = {0}` followed by `D_2, …, D_p`.
pub(crate) fn digit_sets(p: u32, budget: &Budget) -> Result<Vec<IntSet1D>> {
    let mut sets = vec![IntSet1D::from_sorted_unchecked(vec![0])];
    for k in 2..=p as i64 {
        sets.push(gen_dk(k, budget)?);
    }
    Ok(sets)
}

/// Sum set `Σ_k w_k · sets[k]` with sort+dedup after each level.
pub(crate) fn weighted_sumset(
    sets: &[IntSet1D],
    weights: &[i64],
    budget: &Budget,
) -> Result<IntSet1D> {
    debug_assert_eq!(sets.len(), weights.len());
    let mut acc = vec![0i64];
    for (set, &w) in sets.iter().zip(weights) {
        let estimate = acc.len() as u128 * set.len() as u128;
        Budget::check("sum-set level", estimate, budget.max_elements)?;
        let mut next = Vec::with_capacity(estimate as usize);
        for &a in &acc {
            for d in set.iter() {
                next.push(a + w * d);
            }
        }
        next.sort_unstable();
        next.dedup();
        acc = next;
    }
    Ok(IntSet1D::from_sorted_unchecked(acc))
}

/// `A_N` for `N = (p!)⁴`, `p ∈ {2, …, 6}`.
pub fn gen_an(p: u32, budget: &Budget) -> Result<IntSet1D> {
    check_p(p)?;
    let sets = digit_sets(p, budget)?;
    let product: u128 = sets.iter().map(|s| s.len() as u128).product();
    let span = 3 * an_modulus(p) as u128 + 1;
    Budget::check("A_N", product.min(span), budget.max_elements)?;
    weighted_sumset(&sets, &level_weights(p), budget)
}

/// Mixed-radix digits `u_1, …, u_p` of `v ∈ [0, (p!)⁴)`, `u_k ∈ [0, k⁴)`.
pub fn level_digits(v: i64, p: u32) -> Vec<i64> {
    let mut rest = v;
    let mut digits = vec![0i64; p as usize];
    for k in (1..=p as usize).rev() {
        let radix = k4(k as i64);
        digits[k - 1] = rest % radix;
        rest /= radix;
    }
    digits
}

/// Radius `r = Σ_k w_k r_k` with `x ± r, y ± r ∈ A_N` and `1 <= r <= 3N`.
pub fn witness_r_an(x: i64, y: i64, p: u32) -> Result<i64> {
    check_p(p)?;
    let n = an_modulus(p);
    if !(0..n).contains(&x) || !(0..n).contains(&y) {
        return Err(Error::Range(format!(
            "center ({x}, {y}) outside {{0..{}}}² for p = {p}",
            n - 1
        )));
    }
    let (xu, yu) = (level_digits(x, p), level_digits(y, p));
    let weights = level_weights(p);
    let mut r = 0;
    for k in 2..=p as usize {
        r += weights[k - 1] * witness_r(xu[k - 1], yu[k - 1], k as i64)?;
    }
    Ok(r)
}
