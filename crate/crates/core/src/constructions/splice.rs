//! Finite-depth splicing of dyadic cell patterns.
//!
//! A depth-`n` dyadic cell of `[0,1]^d` is stored as its per-coordinate
//! integer index in `[0, 2^n)`. Level `j` supplies the cells of its set at
//! depth `a_j - a_{j-1}`; `E_n` is the set of depth-`a_n` cells obtained by
//! concatenating one cell from each level, i.e. per coordinate
//! `index = Σ_j idx_j · 2^(a_n - a_j)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Maximum total depth `a_n`; keeps indices well inside `u64`.
pub const MAX_DEPTH: u32 = 40;

pub type Cell = [u64; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dim {
    One,
    Two,
}

impl Dim {
    pub fn get(self) -> u32 {
        match self {
            Dim::One => 1,
            Dim::Two => 2,
        }
    }
}

/// Cells of one level. In one dimension the second index is always 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPattern {
    pub dim: Dim,
    pub depth: u32,
    pub cells: BTreeSet<Cell>,
}

impl CellPattern {
    pub fn new<I: IntoIterator<Item = Cell>>(dim: Dim, depth: u32, cells: I) -> Result<Self> {
        if depth > MAX_DEPTH {
            return Err(Error::UnsupportedParameter(format!(
                "pattern depth {depth} exceeds {MAX_DEPTH}"
            )));
        }
        let side = 1u64 << depth;
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        for c in &cells {
            let bad = c[0] >= side || (dim == Dim::One && c[1] != 0) || c[1] >= side;
            if bad {
                return Err(Error::Range(format!("cell {c:?} outside depth-{depth} grid")));
            }
        }
        Ok(CellPattern { dim, depth, cells })
    }

    /// Every cell of the unit cube at this depth.
    pub fn full(dim: Dim, depth: u32) -> Result<Self> {
        let side = 1u64 << depth.min(MAX_DEPTH);
        let cells: Vec<Cell> = match dim {
            Dim::One => (0..side).map(|x| [x, 0]).collect(),
            Dim::Two => (0..side).flat_map(|x| (0..side).map(move |y| [x, y])).collect(),
        };
        CellPattern::new(dim, depth, cells)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `X × X'` for two one-dimensional patterns of equal depth.
    pub fn product(&self, other: &CellPattern) -> Result<Self> {
        if self.dim != Dim::One || other.dim != Dim::One || self.depth != other.depth {
            return Err(Error::UnsupportedParameter(
                "product needs two 1D patterns of equal depth".into(),
            ));
        }
        let cells = self
            .cells
            .iter()
            .flat_map(|a| other.cells.iter().map(move |b| [a[0], b[0]]));
        CellPattern::new(Dim::Two, self.depth, cells)
    }
}

/// The default block sequence `a_0 = 0`, `a_n = 2^(2^n) - 1` for `n >= 1`,
/// as far as it fits in `u64`.
pub fn default_sequence(n: u32) -> Result<Vec<u64>> {
    (0..=n)
        .map(|i| {
            if i == 0 {
                return Ok(0);
            }
            1u64.checked_shl(1u32.checked_shl(i).unwrap_or(u32::MAX))
                .map(|v| v - 1)
                .ok_or_else(|| Error::UnsupportedParameter(format!("a_{i} overflows u64")))
        })
        .collect()
}

/// `E_n` at depth `a_n` from the first `n` level patterns.
pub fn splice_en(patterns: &[CellPattern], a: &[u64], n: usize) -> Result<CellPattern> {
    if a.first() != Some(&0) || a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsupportedParameter(
            "a must be strictly increasing with a_0 = 0".into(),
        ));
    }
    if n == 0 || n >= a.len() || n > patterns.len() {
        return Err(Error::UnsupportedParameter(format!(
            "n = {n} needs a_0..a_n and n patterns"
        )));
    }
    if a[n] > MAX_DEPTH as u64 {
        return Err(Error::UnsupportedParameter(format!(
            "depth a_n = {} exceeds {MAX_DEPTH}",
            a[n]
        )));
    }
    let dim = patterns[0].dim;
    let mut acc: Vec<Cell> = vec![[0, 0]];
    for (j, pat) in patterns[..n].iter().enumerate() {
        let step = (a[j + 1] - a[j]) as u32;
        if pat.dim != dim || pat.depth != step {
            return Err(Error::UnsupportedParameter(format!(
                "level {} pattern must be {:?} at depth {step}",
                j + 1,
                dim
            )));
        }
        let mut next = Vec::with_capacity(acc.len() * pat.len());
        for prefix in &acc {
            for c in &pat.cells {
                next.push([(prefix[0] << step) | c[0], (prefix[1] << step) | c[1]]);
            }
        }
        acc = next;
    }
    CellPattern::new(dim, a[n] as u32, acc)
}
