//! Finite ratios bounding the box and Hausdorff dimensions of the sum sets
//! `T = Σ (β_j/j⁴)·E_j` and `A = Σ (β_j/j⁴)·D_j`, `β_j = ((j-1)!)^(-8/s)`.
//!
//! Upper ratio: `log(l_1⋯l_j) / (-log d_j)`.
//! Lower ratio: `log(l_1⋯l_j) / (-log(l_{j+1} δ_{j+1}))`.
//!
//! Everything is evaluated from accumulated log-factorials, so `j` can grow
//! far beyond any factorial that fits in a machine word.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub const MAX_J: u32 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioBound {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioFamily {
    /// `l_j = j⁴`, `δ_j = β_j/j⁴`, `d_j = δ_j·(j⁴-1)`; target `s/2`.
    T,
    /// `l_j = |D_j|`, `δ_j = β_j/j⁴`, `d_j = 3β_j`; target `3s/8`.
    A,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioPoint {
    pub j: u32,
    pub value: f64,
    pub target: f64,
}

fn ln_size(family: RatioFamily, j: u32) -> f64 {
    match family {
        RatioFamily::T => 4.0 * (j as f64).ln(),
        RatioFamily::A if j == 1 => 0.0,
        RatioFamily::A => {
            let j = j as i128;
            ((24 * j * j * j - 75 * j * j + 102 * j - 54) as f64).ln()
        }
    }
}

/// Ratios for `j = 2..=j_max`; entries with a non-positive or non-finite
/// denominator are omitted.
pub fn falconer_ratios(
    s: Rational,
    j_max: u32,
    which: RatioBound,
    family: RatioFamily,
) -> Result<Vec<RatioPoint>> {
    if !s.in_half_open_0_2() {
        return Err(Error::UnsupportedParameter(format!("s = {s} outside (0, 2]")));
    }
    if j_max > MAX_J {
        return Err(Error::UnsupportedParameter(format!("j_max = {j_max} exceeds {MAX_J}")));
    }
    let e = 8.0 / s.to_f64();
    let target = match family {
        RatioFamily::T => s.to_f64() / 2.0,
        RatioFamily::A => 3.0 * s.to_f64() / 8.0,
    };
    // ln_fact[n] = ln n!
    let mut ln_fact = vec![0.0f64; j_max as usize + 2];
    for n in 1..ln_fact.len() {
        ln_fact[n] = ln_fact[n - 1] + (n as f64).ln();
    }
    let ln_beta = |j: u32| -e * ln_fact[j as usize - 1];
    let ln_delta = |j: u32| ln_beta(j) - 4.0 * (j as f64).ln();
    let mut numerator = 0.0f64;
    let mut out = Vec::new();
    for j in 1..=j_max {
        numerator += ln_size(family, j);
        if j < 2 {
            continue;
        }
        let denom = match (which, family) {
            (RatioBound::Upper, RatioFamily::T) => {
                let j4 = (j as f64).powi(4);
                -(ln_delta(j) + (j4 - 1.0).ln())
            }
            (RatioBound::Upper, RatioFamily::A) => -(3.0f64.ln() + ln_beta(j)),
            (RatioBound::Lower, _) => -(ln_size(family, j + 1) + ln_delta(j + 1)),
        };
        if denom > 0.0 && denom.is_finite() {
            out.push(RatioPoint {
                j,
                value: numerator / denom,
                target,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(v: &[RatioPoint], j: u32) -> f64 {
        v.iter().find(|p| p.j == j).unwrap().value
    }

    fn lnf(n: u32) -> f64 {
        (1..=n).map(|k| (k as f64).ln()).sum()
    }

    #[test]
    fn t_upper_at_12_matches_direct_evaluation() {
        let v = falconer_ratios(Rational::integer(2), 12, RatioBound::Upper, RatioFamily::T).unwrap();
        // direct: 4 ln 12! / (4 ln 12! - ln(12⁴ - 1))
        let direct = 4.0 * lnf(12) / (4.0 * lnf(12) - (20735f64).ln());
        assert!((at(&v, 12) - direct).abs() < 1e-12);
        // the leading-order form 4 ln 12! / (4 ln 11!)
        assert!((at(&v, 12) - 4.0 * lnf(12) / (4.0 * lnf(11))).abs() < 0.01);
        assert!((at(&v, 12) - 1.142).abs() < 0.01);
    }

    #[test]
    fn t_lower_is_exactly_half_s() {
        for s in [Rational::integer(2), Rational::integer(1), Rational::new(3, 2).unwrap()] {
            let v = falconer_ratios(s, 40, RatioBound::Lower, RatioFamily::T).unwrap();
            for p in &v {
                assert!((p.value - s.to_f64() / 2.0).abs() < 1e-9, "j={}", p.j);
            }
        }
    }

    #[test]
    fn t_upper_decreasing_from_3() {
        let v = falconer_ratios(Rational::integer(2), 200, RatioBound::Upper, RatioFamily::T).unwrap();
        assert!(v.iter().all(|p| p.value.is_finite() && p.value > 0.0));
        for w in v.windows(2).filter(|w| w[0].j >= 3) {
            assert!(w[1].value < w[0].value);
            assert!(w[1].value > 1.0);
        }
    }

    #[test]
    fn a_sequence_target() {
        let v = falconer_ratios(Rational::integer(2), 10_000, RatioBound::Upper, RatioFamily::A).unwrap();
        assert_eq!(v[0].target, 0.75);
        let last = v.last().unwrap();
        assert_eq!(last.j, 10_000);
        assert!(last.value > 0.75 && last.value < 0.9);
    }

    #[test]
    fn guards() {
        assert!(falconer_ratios(Rational::integer(3), 5, RatioBound::Upper, RatioFamily::T).is_err());
        assert!(falconer_ratios(Rational::integer(1), 10_001, RatioBound::Upper, RatioFamily::T).is_err());
    }
}
