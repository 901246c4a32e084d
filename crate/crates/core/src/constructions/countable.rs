//! Finite truncation of the countable union
//! `S = {0} ∪ ⋃_k ((2^-k, 0) + ε_k S_k)`, `B = ⋃_k ((2^-k, 0) + ε_k B_k)`
//! with `N_k = 2^(αk)`, `ε_k = 2^-(1+α)k`,
//! `S_k = {0..N_k-1}²` and `B_k = A_{N_k} × I_k ∪ I_k × A_{N_k}`,
//! `I_k = [-3N_k, 4N_k]`.
//!
//! With integer `α` every offset and scale factor is an integer multiple of
//! `2^-(1+α)K`, so the whole truncation lives on one integer lattice.
//! Blocks keep their unit-lattice sets; [`CountableBlock::scaled_centers`]
//! and [`CountableBlock::scaled_boundary_set`] map them into the global frame.

use crate::budget::Budget;
use crate::constructions::an::{an_modulus, gen_an, p_for_modulus};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sets::{IntSet1D, PointSet2D};

pub const MAX_BLOCKS: u32 = 12;

#[derive(Debug, Clone)]
pub struct CountableBlock {
    pub k: u32,
    /// `N_k = 2^(αk)`.
    pub n: i64,
    /// Depth of the `A_{(p!)⁴}` used for this `N_k`.
    pub an_depth: u32,
    /// `A_{N_k}` restricted to `I_k`.
    pub a: IntSet1D,
    /// `S_k` on the unit lattice.
    pub centers: PointSet2D,
    /// `B_k` on the unit lattice.
    pub boundary_set: PointSet2D,
    /// `(2^-k, 0)` in global units.
    pub offset: (i64, i64),
    /// `ε_k` in global units.
    pub scale: i64,
}

impl CountableBlock {
    pub fn scaled_centers(&self) -> Result<PointSet2D> {
        self.centers.affine(self.scale, self.offset)
    }

    pub fn scaled_boundary_set(&self) -> Result<PointSet2D> {
        self.boundary_set.affine(self.scale, self.offset)
    }

    /// Lower end of `I_k`; `I_k = [-3N_k, 4N_k]`.
    pub fn strip_lo(&self) -> i64 {
        -3 * self.n
    }

    pub fn strip_hi(&self) -> i64 {
        4 * self.n
    }
}

#[derive(Debug, Clone)]
pub struct CountableTruncation {
    pub alpha: u32,
    pub blocks: Vec<CountableBlock>,
    /// Global coordinates are real coordinates times `2^frame_bits`.
    pub frame_bits: u32,
}

impl CountableTruncation {
    /// `s = 2α/(1+α)`.
    pub fn target_dimension(&self) -> Rational {
        Rational::new(2 * self.alpha as i64, 1 + self.alpha as i64).expect("nonzero denominator")
    }

    /// `{0} ∪ ⋃ scaled S_k`.
    pub fn scaled_centers(&self) -> Result<PointSet2D> {
        let mut all = PointSet2D::from_sorted_unchecked(vec![(0, 0)]);
        for b in &self.blocks {
            all = all.union(&b.scaled_centers()?);
        }
        Ok(all)
    }

    pub fn scaled_boundary_set(&self) -> Result<PointSet2D> {
        let mut all = PointSet2D::default();
        for b in &self.blocks {
            all = all.union(&b.scaled_boundary_set()?);
        }
        Ok(all)
    }
}

pub fn gen_countable_truncation(
    alpha: u32,
    blocks: u32,
    budget: &Budget,
) -> Result<CountableTruncation> {
    if alpha == 0 {
        return Err(Error::UnsupportedParameter("alpha must be a positive integer".into()));
    }
    if blocks == 0 || blocks > MAX_BLOCKS {
        return Err(Error::UnsupportedParameter(format!(
            "K = {blocks} outside 1..={MAX_BLOCKS}"
        )));
    }
    let frame_bits = (1 + alpha)
        .checked_mul(blocks)
        .filter(|&b| b <= 48)
        .ok_or_else(|| Error::UnsupportedParameter(format!(
            "(1+alpha)·K exceeds 48 bits for alpha = {alpha}, K = {blocks}"
        )))?;
    let mut out = Vec::with_capacity(blocks as usize);
    for k in 1..=blocks {
        let n = 1i64 << (alpha * k);
        let p = p_for_modulus(n)?;
        let full = gen_an(p, budget)?;
        let a = full.restricted(-3 * n, 4 * n);
        let strip = IntSet1D::new(-3 * n..=4 * n)?;
        let estimate = 2 * a.len() as u128 * strip.len() as u128;
        Budget::check("countable block B_k", estimate, budget.max_elements)?;
        let side = IntSet1D::new(0..n)?;
        let centers = PointSet2D::product(&side, &side);
        let boundary_set = PointSet2D::product(&a, &strip).union(&PointSet2D::product(&strip, &a));
        out.push(CountableBlock {
            k,
            n,
            an_depth: p,
            a,
            centers,
            boundary_set,
            offset: (1i64 << (frame_bits - k), 0),
            scale: 1i64 << ((1 + alpha) * (blocks - k)),
        });
    }
    Ok(CountableTruncation {
        alpha,
        blocks: out,
        frame_bits,
    })
}

/// `N` used for a block and whether it is exactly `(p!)⁴`.
pub fn block_modulus_is_exact(n: i64) -> Result<bool> {
    Ok(an_modulus(p_for_modulus(n)?) == n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_parameters() {
        let c = gen_countable_truncation(1, 3, &Budget::default()).unwrap();
        assert_eq!(c.target_dimension(), Rational::integer(1));
        let ns: Vec<i64> = c.blocks.iter().map(|b| b.n).collect();
        assert_eq!(ns, vec![2, 4, 8]);
        assert_eq!(c.frame_bits, 6);
        let scales: Vec<i64> = c.blocks.iter().map(|b| b.scale).collect();
        assert_eq!(scales, vec![16, 4, 1]);
        let offsets: Vec<i64> = c.blocks.iter().map(|b| b.offset.0).collect();
        assert_eq!(offsets, vec![32, 16, 8]);
        for b in &c.blocks {
            assert_eq!(b.centers.len() as i64, b.n * b.n);
            assert!(b.a.iter().all(|v| (b.strip_lo()..=b.strip_hi()).contains(&v)));
        }
    }

    #[test]
    fn scaled_blocks_are_disjoint_in_x() {
        let c = gen_countable_truncation(1, 4, &Budget::default()).unwrap();
        let mut ranges: Vec<(i64, i64)> = c
            .blocks
            .iter()
            .map(|b| {
                let bb = b.scaled_centers().unwrap().bounding_box().unwrap();
                (bb.min_x, bb.max_x)
            })
            .collect();
        ranges.sort();
        for w in ranges.windows(2) {
            assert!(w[0].1 < w[1].0);
        }
    }

    #[test]
    fn guards() {
        let b = Budget::default();
        assert!(gen_countable_truncation(0, 2, &b).is_err());
        assert!(gen_countable_truncation(1, 0, &b).is_err());
        assert!(gen_countable_truncation(1, 13, &b).is_err());
        assert!(gen_countable_truncation(5, 12, &b).is_err());
        let alpha2 = gen_countable_truncation(2, 1, &b).unwrap();
        assert_eq!(alpha2.target_dimension(), Rational::new(4, 3).unwrap());
    }

    #[test]
    fn modulus_exactness() {
        assert!(block_modulus_is_exact(16).unwrap());
        assert!(!block_modulus_is_exact(8).unwrap());
    }
}
