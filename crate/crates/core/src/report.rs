//! Inequality checks, exponent scans and construction replays, with the
//! JSON report layout used by the command line tool.
//!
//! Fractional-exponent inequalities are compared through integer powers:
//! `|S| <= (2|B|)^(4/3)` as `|S|³ <= 2⁴·|B|⁴` and
//! `|S| <= 2^(4/3)·|A|^(8/3)` as `|S|³ <= 2⁴·|A|⁸`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::constructions::an::{an_modulus, gen_an, witness_r_an};
use crate::constructions::countable::gen_countable_truncation;
use crate::constructions::dk::{dk_size_bound, gen_dk, k4, witness_r};
use crate::constructions::examples::{boundary_example_size, gen_boundary_example};
use crate::dimension::{covering_count_1d, exponent_finite_diff, Slope};
use crate::error::{Error, Result};
use crate::finders::{count_centers_1d, count_vertex_centers_2d, SquareIndex, SquareMode};
use crate::sets::{DenseIndex, DoubledPoint, IntSet1D, PointSet2D};

/// Seed used by randomized replays unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 0x5eed_0f5a_0a2e;

/// Centers replayed exhaustively up to this count; above it, sampled.
pub const EXHAUSTIVE_LIMIT: u64 = 2_000_000;
pub const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
    pub sizes: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<(i64, i64)>,
}

impl BoundCheck {
    pub fn new(name: impl Into<String>, lhs: f64, rhs: f64, ok: bool) -> Self {
        BoundCheck {
            name: name.into(),
            lhs,
            rhs,
            ok,
            sizes: BTreeMap::new(),
            failure: None,
        }
    }

    pub fn size(mut self, key: &str, v: u64) -> Self {
        self.sizes.insert(key.to_string(), v);
        self
    }
}

fn pow_u128(base: u64, exp: u32) -> Result<u128> {
    (base as u128)
        .checked_pow(exp)
        .ok_or_else(|| Error::Range(format!("{base}^{exp} overflows u128")))
}

/// `|S|³ <= 16·|B|⁴` exactly.
pub fn main_lemma_2d_holds(s: u64, b: u64) -> Result<bool> {
    let rhs = pow_u128(b, 4)?
        .checked_mul(16)
        .ok_or_else(|| Error::Range("16·|B|⁴ overflows u128".into()))?;
    Ok(pow_u128(s, 3)? <= rhs)
}

/// `|S|³ <= 16·|A|⁸` exactly.
pub fn main_lemma_1d_holds(s: u64, a: u64) -> Result<bool> {
    let rhs = pow_u128(a, 8)?
        .checked_mul(16)
        .ok_or_else(|| Error::Range("16·|A|⁸ overflows u128".into()))?;
    Ok(pow_u128(s, 3)? <= rhs)
}

pub fn check_main_lemma_2d(b: &PointSet2D, budget: &Budget) -> Result<BoundCheck> {
    let s = count_vertex_centers_2d(b, budget)?;
    let n = b.len() as u64;
    let ok = main_lemma_2d_holds(s, n)?;
    Ok(
        BoundCheck::new("main_lemma_2d", s as f64, (2.0 * n as f64).powf(4.0 / 3.0), ok)
            .size("B", n)
            .size("S", s),
    )
}

pub fn check_main_lemma_1d(a: &IntSet1D, budget: &Budget) -> Result<BoundCheck> {
    let s = count_centers_1d(a, budget)?;
    let n = a.len() as u64;
    let ok = main_lemma_1d_holds(s, n)?;
    let rhs = 2f64.powf(4.0 / 3.0) * (n as f64).powf(8.0 / 3.0);
    Ok(BoundCheck::new("main_lemma_1d", s as f64, rhs, ok)
        .size("A", n)
        .size("S", s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    DkVertex,
    DkBoundary,
    DkSize,
    AnCover,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::DkVertex => "dk_vertex",
            Family::DkBoundary => "dk_boundary",
            Family::DkSize => "dk_size",
            Family::AnCover => "an_cover",
        }
    }

    pub fn target(self) -> f64 {
        match self {
            Family::DkVertex => 4.0 / 3.0,
            Family::DkBoundary => 7.0 / 8.0,
            Family::DkSize => 3.0,
            Family::AnCover => 0.75,
        }
    }

    /// Axis labels `(x, y)`: slopes are `d ln y / d ln x`.
    pub fn axes(self) -> (&'static str, &'static str) {
        match self {
            Family::DkVertex => ("B", "S"),
            Family::DkBoundary => ("S", "B"),
            Family::DkSize => ("k", "D_k"),
            Family::AnCover => ("N_over_R", "cover"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dk_vertex" => Ok(Family::DkVertex),
            "dk_boundary" => Ok(Family::DkBoundary),
            "dk_size" => Ok(Family::DkSize),
            "an_cover" => Ok(Family::AnCover),
            other => Err(Error::UnsupportedParameter(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExponentRow {
    pub param: i64,
    pub x: u64,
    pub y: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExponentReport {
    pub family: Family,
    pub rows: Vec<ExponentRow>,
    pub slopes: Vec<Slope>,
    pub target: f64,
}

impl ExponentReport {
    pub fn slope_between(&self, from: i64, to: i64) -> Option<f64> {
        self.slopes
            .iter()
            .find(|s| s.from == from && s.to == to)
            .and_then(|s| s.slope)
    }
}

/// Exact sizes over `kmin..=kmax` and the finite-difference slopes.
///
/// For `an_cover` the range selects levels `j` of `A_N` with `p = kmax`;
/// row `j` pairs `(j!)⁴ = N/R_j` with the cover count at `R_j = (p!/j!)⁴`.
pub fn family_scan(family: Family, kmin: i64, kmax: i64, budget: &Budget) -> Result<ExponentReport> {
    if kmin < 2 || kmax > 6 || kmin >= kmax {
        return Err(Error::UnsupportedParameter(format!(
            "k range {kmin}..={kmax} must satisfy 2 <= kmin < kmax <= 6"
        )));
    }
    let mut rows = Vec::new();
    match family {
        Family::AnCover => {
            let p = kmax as u32;
            let a = gen_an(p, budget)?;
            let n = an_modulus(p);
            for j in kmin..=kmax {
                let jf = an_modulus(j as u32);
                let cover = covering_count_1d(&a, n / jf)?;
                rows.push(ExponentRow {
                    param: j,
                    x: jf as u64,
                    y: cover.count,
                });
            }
        }
        _ => {
            for k in kmin..=kmax {
                let d = gen_dk(k, budget)?.len() as u64;
                let s = ((k4(k) - 1) as u64).pow(2);
                let (x, y) = match family {
                    Family::DkVertex => (d * d, s),
                    Family::DkBoundary => (s, boundary_example_size(d, k)),
                    Family::DkSize => (k as u64, d),
                    Family::AnCover => unreachable!(),
                };
                rows.push(ExponentRow { param: k, x, y });
            }
        }
    }
    let series: Vec<(i64, u64, u64)> = rows.iter().map(|r| (r.param, r.x, r.y)).collect();
    let slopes = exponent_finite_diff(&series)?;
    Ok(ExponentReport {
        family,
        rows,
        slopes,
        target: family.target(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Dk { k: i64 },
    An { p: u32 },
    Boundary { k: i64 },
    Countable { alpha: u32, blocks: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    /// Exhaustive up to [`EXHAUSTIVE_LIMIT`] centers, otherwise sampled.
    Auto,
    Exhaustive,
    Sampled(u64),
}

/// Centers to replay: all of `{0..n-1}²`, or seeded uniform samples.
fn center_plan(n: i64, coverage: Coverage, seed: u64) -> Vec<(i64, i64)> {
    let total = (n as u64).saturating_mul(n as u64);
    let samples = match coverage {
        Coverage::Exhaustive => None,
        Coverage::Auto if total <= EXHAUSTIVE_LIMIT => None,
        Coverage::Auto => Some(DEFAULT_SAMPLES),
        Coverage::Sampled(m) => Some(m),
    };
    match samples {
        None => (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect(),
        Some(m) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
        }
    }
}

fn coverage_check<F>(name: &str, centers: &[(i64, i64)], holds: F) -> BoundCheck
where
    F: Fn(i64, i64) -> bool + Sync,
{
    let failures: Vec<(i64, i64)> = centers
        .par_iter()
        .copied()
        .filter(|&(x, y)| !holds(x, y))
        .collect();
    let tested = centers.len() as u64;
    let fraction = if tested == 0 {
        1.0
    } else {
        (tested - failures.len() as u64) as f64 / tested as f64
    };
    let mut check = BoundCheck::new(name, fraction, 1.0, failures.is_empty())
        .size("tested", tested)
        .size("failures", failures.len() as u64);
    check.failure = failures.first().copied();
    check
}

/// Replays the defining property of a construction.
pub fn verify_construction(
    which: Construction,
    coverage: Coverage,
    seed: u64,
    budget: &Budget,
) -> Result<Vec<BoundCheck>> {
    match which {
        Construction::Dk { k } => {
            let d = gen_dk(k, budget)?;
            let idx = DenseIndex::new(&d);
            let n = k4(k);
            let centers = center_plan(n, coverage, seed);
            let property = coverage_check("dk_property", &centers, |x, y| {
                let Ok(r) = witness_r(x, y, k) else { return false };
                (1..=n).contains(&r)
                    && [x - r, x + r, y - r, y + r].iter().all(|&v| idx.contains(v))
            })
            .size("k", k as u64)
            .size("D_k", d.len() as u64);
            let bound = dk_size_bound(k) as u64;
            let size = BoundCheck::new("dk_size_bound", d.len() as f64, bound as f64, d.len() as u64 <= bound)
                .size("k", k as u64);
            let in_range = d.min().is_some_and(|m| m >= -n) && d.max().is_some_and(|m| m <= 2 * n);
            let range = BoundCheck::new("dk_value_range", d.max().unwrap_or(0) as f64, (2 * n) as f64, in_range)
                .size("k", k as u64);
            Ok(vec![property, size, range])
        }
        Construction::An { p } => {
            let a = gen_an(p, budget)?;
            let n = an_modulus(p);
            let centers = center_plan(n, coverage, seed);
            let property = coverage_check("an_property", &centers, |x, y| {
                let Ok(r) = witness_r_an(x, y, p) else { return false };
                (1..=3 * n).contains(&r)
                    && [x - r, x + r, y - r, y + r].iter().all(|&v| a.contains(v))
            })
            .size("p", p as u64)
            .size("N", n as u64)
            .size("A_N", a.len() as u64);
            let mut checks = vec![property];
            let mut product = 1u64;
            for j in 1..=p {
                product *= if j == 1 { 1 } else { gen_dk(j as i64, budget)?.len() as u64 };
                let length = 200 * (n / an_modulus(j.max(1)));
                let cover = covering_count_1d(&a, length)?;
                checks.push(
                    BoundCheck::new(
                        format!("an_cover_j{j}"),
                        cover.count as f64,
                        product as f64,
                        cover.count <= product,
                    )
                    .size("length", length as u64),
                );
            }
            Ok(checks)
        }
        Construction::Boundary { k } => {
            let (b, s) = gen_boundary_example(k, budget)?;
            let (b_len, s_len) = (b.len() as u64, s.len() as u64);
            let idx = SquareIndex::new(b, budget)?;
            let centers: Vec<(i64, i64)> = s.iter().collect();
            let property = coverage_check("boundary_property", &centers, |x, y| {
                idx.has_square_at(DoubledPoint::from_lattice(x, y), SquareMode::Boundary)
                    .is_some()
            })
            .size("k", k as u64)
            .size("B", b_len)
            .size("S", s_len);
            let d_len = gen_dk(k, budget)?.len() as u64;
            let union = 2 * d_len * (3 * k4(k) as u64 + 1);
            let sizes = BoundCheck::new("boundary_size", b_len as f64, union as f64, b_len <= union)
                .size("B", b_len)
                .size("S", s_len);
            Ok(vec![property, sizes])
        }
        Construction::Countable { alpha, blocks } => {
            let c = gen_countable_truncation(alpha, blocks, budget)?;
            let mut checks = Vec::new();
            for block in &c.blocks {
                let idx = SquareIndex::new(block.boundary_set.clone(), budget)?;
                let centers: Vec<(i64, i64)> = block.centers.iter().collect();
                let limit = 3 * block.n;
                let check = coverage_check(&format!("countable_block_{}", block.k), &centers, |x, y| {
                    idx.has_square_at(DoubledPoint::from_lattice(x, y), SquareMode::Boundary)
                        .is_some_and(|r2| r2 <= 2 * limit)
                })
                .size("k", block.k as u64)
                .size("N_k", block.n as u64)
                .size("B_k", block.boundary_set.len() as u64);
                checks.push(check);
            }
            Ok(checks)
        }
    }
}

/// Random instances for the main-lemma sweeps.
pub fn random_point_set(rng: &mut ChaCha8Rng, max_len: usize, span: i64) -> PointSet2D {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| (rng.gen_range(0..=span), rng.gen_range(0..=span)))
        .collect()
}

pub fn random_int_set(rng: &mut ChaCha8Rng, max_len: usize, span: i64) -> IntSet1D {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(0..=span)).collect()
}

/// Sets whose center counts are dense enough to make the bound checks
/// non-trivial: unions of random squares' vertices.
pub fn random_square_soup(rng: &mut ChaCha8Rng, squares: usize, span: i64) -> PointSet2D {
    let mut pts = Vec::with_capacity(4 * squares);
    for _ in 0..squares {
        let r = rng.gen_range(1..=span / 4);
        let (x, y) = (rng.gen_range(r..=span - r), rng.gen_range(r..=span - r));
        pts.extend([(x - r, y - r), (x + r, y - r), (x - r, y + r), (x + r, y + r)]);
    }
    pts.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeEntry {
    pub family: String,
    pub from: i64,
    pub to: i64,
    pub slope: Option<f64>,
    pub target: f64,
}

impl SlopeEntry {
    pub fn from_report(report: &ExponentReport) -> Vec<SlopeEntry> {
        report
            .slopes
            .iter()
            .map(|s| SlopeEntry {
                family: report.family.name().to_string(),
                from: s.from,
                to: s.to,
                slope: s.slope,
                target: report.target,
            })
            .collect()
    }
}

/// `{suite, timestamp, seed, checks, slopes}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub timestamp: String,
    pub seed: u64,
    pub checks: Vec<BoundCheck>,
    pub slopes: Vec<SlopeEntry>,
}

impl Report {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
