//! Finite truncations of the Cantor-type sums
//! `A = Σ_k (β_k/k⁴)·D_k` and `T = Σ_k (β_k/k⁴)·E_k`, `β_k = ((k-1)!)^(-8/s)`,
//! `E_k = {0, …, k⁴-1}`.
//!
//! When `8/s` is an integer `e`, every `β_k/k⁴ = 1/(((k-1)!)^e·k⁴)` is
//! rational and the depth-`p` truncation is scaled to integers by
//! `q_p = ((p-1)!)^e·p⁴`, which every earlier denominator divides.
//! Otherwise the sums are evaluated in double precision.

use serde::Serialize;

use crate::budget::Budget;
use crate::constructions::an::{digit_sets, weighted_sumset};
use crate::constructions::dk::k4;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sets::IntSet1D;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CantorMode {
    Exact,
    Float,
    /// Exact when possible, float otherwise.
    Auto,
}

/// Scaled spacing `δ_k` and diameter `d_k = δ_k·(k⁴-1)` of level `k` of `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LevelGap {
    pub k: i64,
    pub delta: i64,
    pub diam: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CantorSets {
    Exact {
        /// Integer denominator the real values were multiplied by.
        scale: i64,
        a: IntSet1D,
        t: IntSet1D,
        levels: Vec<LevelGap>,
    },
    Float {
        a: Vec<f64>,
        t: Vec<f64>,
        /// Absolute error bound on every element.
        error_bound: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CantorTruncation {
    pub s: Rational,
    pub depth: u32,
    pub sets: CantorSets,
}

impl CantorTruncation {
    pub fn scale(&self) -> Option<i64> {
        match &self.sets {
            CantorSets::Exact { scale, .. } => Some(*scale),
            CantorSets::Float { .. } => None,
        }
    }

    /// The scaled `A_p`, in exact mode.
    pub fn scaled_set(&self) -> Option<&IntSet1D> {
        match &self.sets {
            CantorSets::Exact { a, .. } => Some(a),
            CantorSets::Float { .. } => None,
        }
    }

    pub fn scaled_t(&self) -> Option<&IntSet1D> {
        match &self.sets {
            CantorSets::Exact { t, .. } => Some(t),
            CantorSets::Float { .. } => None,
        }
    }

    /// `d_k + δ_k <= δ_{k-1}` for every level `k >= 2` (exact mode only).
    pub fn gap_condition_holds(&self) -> Option<bool> {
        match &self.sets {
            CantorSets::Exact { levels, .. } => Some(
                levels
                    .windows(2)
                    .all(|w| w[1].diam + w[1].delta <= w[0].delta),
            ),
            CantorSets::Float { .. } => None,
        }
    }
}

/// `8/s` as an integer, if it is one.
pub fn exact_exponent(s: Rational) -> Option<i64> {
    let num = 8 * s.den();
    (num % s.num() == 0).then(|| num / s.num())
}

pub fn gen_cantor_truncation(
    s: Rational,
    p: u32,
    mode: CantorMode,
    budget: &Budget,
) -> Result<CantorTruncation> {
    if !s.in_half_open_0_2() {
        return Err(Error::UnsupportedParameter(format!("s = {s} outside (0, 2]")));
    }
    if !(1..=6).contains(&p) {
        return Err(Error::UnsupportedParameter(format!("depth p = {p} outside 1..=6")));
    }
    let exponent = exact_exponent(s);
    let sets = match (mode, exponent) {
        (CantorMode::Exact | CantorMode::Auto, Some(e)) => exact_sets(e, p, budget)?,
        (CantorMode::Exact, None) => {
            return Err(Error::Mode(format!(
                "s = {s}: 8/s is not an integer, so β_k is irrational; use float mode"
            )))
        }
        (CantorMode::Float, _) | (CantorMode::Auto, None) => float_sets(s, p, budget)?,
    };
    Ok(CantorTruncation { s, depth: p, sets })
}

fn factorial(n: i64) -> i64 {
    (1..=n).product()
}

fn exact_sets(e: i64, p: u32, budget: &Budget) -> Result<CantorSets> {
    let overflow = || Error::Range(format!("scale ((p-1)!)^{e}·p⁴ overflows i64 at p = {p}"));
    let denom = |k: i64| -> Result<i64> {
        factorial(k - 1)
            .checked_pow(e as u32)
            .and_then(|v| v.checked_mul(k4(k)))
            .ok_or_else(overflow)
    };
    let scale = denom(p as i64)?;
    // keep the largest element 2·Σ w_k k⁴ ≈ 2.2·scale comfortably in range
    if scale > i64::MAX / 8 {
        return Err(overflow());
    }
    let mut weights = Vec::with_capacity(p as usize);
    let mut levels = Vec::with_capacity(p as usize);
    for k in 1..=p as i64 {
        let w = scale / denom(k)?;
        weights.push(w);
        levels.push(LevelGap {
            k,
            delta: w,
            diam: w * (k4(k) - 1),
        });
    }
    let digits = digit_sets(p, budget)?;
    let t_size: u128 = (1..=p as u128).map(|k| k.pow(4)).product();
    Budget::check("T_p", t_size, budget.max_elements)?;
    let e_sets = (1..=p as i64)
        .map(|k| IntSet1D::new(0..k4(k)))
        .collect::<Result<Vec<_>>>()?;
    let a = weighted_sumset(&digits, &weights, budget)?;
    let t = weighted_sumset(&e_sets, &weights, budget)?;
    Ok(CantorSets::Exact {
        scale,
        a,
        t,
        levels,
    })
}

fn float_sets(s: Rational, p: u32, budget: &Budget) -> Result<CantorSets> {
    let exponent = 8.0 / s.to_f64();
    let mut log_fact = 0.0f64;
    let mut factors = Vec::with_capacity(p as usize);
    for k in 1..=p as i64 {
        // β_k / k⁴ with β_k = ((k-1)!)^(-8/s)
        factors.push((-exponent * log_fact).exp() / k4(k) as f64);
        log_fact += (k as f64).ln();
    }
    let digits = digit_sets(p, budget)?;
    let magnitude: f64 = factors
        .iter()
        .enumerate()
        .map(|(i, f)| f * 2.0 * k4(i as i64 + 1) as f64)
        .sum();
    let error_bound = 4.0 * p as f64 * f64::EPSILON * magnitude.max(1.0);
    let sum = |sets: &[Vec<i64>]| -> Result<Vec<f64>> {
        let mut acc = vec![0.0f64];
        for (set, f) in sets.iter().zip(&factors) {
            let estimate = acc.len() as u128 * set.len() as u128;
            Budget::check("float sum-set level", estimate, budget.max_elements)?;
            let mut next = Vec::with_capacity(estimate as usize);
            for &v in &acc {
                for &d in set {
                    next.push(v + f * d as f64);
                }
            }
            next.sort_unstable_by(f64::total_cmp);
            next.dedup_by(|b, a| (*b - *a).abs() <= error_bound);
            acc = next;
        }
        Ok(acc)
    };
    let a_sets: Vec<Vec<i64>> = digits.iter().map(|d| d.elems().to_vec()).collect();
    let e_sets: Vec<Vec<i64>> = (1..=p as i64).map(|k| (0..k4(k)).collect()).collect();
    Ok(CantorSets::Float {
        a: sum(&a_sets)?,
        t: sum(&e_sets)?,
        error_bound,
    })
}
