use std::collections::HashMap;

use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::Result;
use crate::sets::{DoubledPoint, IntSet1D};

/// Doubled midpoints `X = a + a'` of pairs `a < a'` of a 1D set, each with
/// the sorted doubled radii `2r = a' - a` realized at that midpoint.
///
/// Radii are stored as indices into a shared radius table so the center
/// scan can group midpoints by radius.
#[derive(Debug, Clone)]
pub struct RadiiIndex {
    /// Distinct midpoints, ascending.
    midpoints: Vec<i64>,
    /// Distinct doubled radii, ascending.
    radii: Vec<i64>,
    /// `by_mid[i]`: radius ids realized at `midpoints[i]`, ascending.
    by_mid: Vec<Vec<u32>>,
    /// `by_radius[j]`: midpoint ids realizing `radii[j]`, ascending.
    by_radius: Vec<Vec<u32>>,
}

impl RadiiIndex {
    pub fn new(a: &IntSet1D) -> Self {
        let elems = a.elems();
        let mut pairs: Vec<(i64, i64)> = Vec::with_capacity(elems.len() * elems.len() / 2);
        for (i, &lo) in elems.iter().enumerate() {
            for &hi in &elems[i + 1..] {
                pairs.push((lo + hi, hi - lo));
            }
        }
        let mut midpoints: Vec<i64> = pairs.iter().map(|p| p.0).collect();
        midpoints.sort_unstable();
        midpoints.dedup();
        let mut radii: Vec<i64> = pairs.iter().map(|p| p.1).collect();
        radii.sort_unstable();
        radii.dedup();
        let mid_id: HashMap<i64, u32> =
            midpoints.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
        let rad_id: HashMap<i64, u32> =
            radii.iter().enumerate().map(|(i, &r)| (r, i as u32)).collect();
        let mut by_mid = vec![Vec::new(); midpoints.len()];
        let mut by_radius = vec![Vec::new(); radii.len()];
        for (m, r) in pairs {
            let (mi, ri) = (mid_id[&m], rad_id[&r]);
            by_mid[mi as usize].push(ri);
            by_radius[ri as usize].push(mi);
        }
        for v in by_mid.iter_mut().chain(by_radius.iter_mut()) {
            v.sort_unstable();
            v.dedup();
        }
        RadiiIndex {
            midpoints,
            radii,
            by_mid,
            by_radius,
        }
    }

    pub fn midpoints(&self) -> &[i64] {
        &self.midpoints
    }

    /// Doubled radii realized at doubled midpoint `x2`.
    pub fn radii_at(&self, x2: i64) -> Vec<i64> {
        match self.midpoints.binary_search(&x2) {
            Ok(i) => self.by_mid[i].iter().map(|&r| self.radii[r as usize]).collect(),
            Err(_) => Vec::new(),
        }
    }

    /// Calls `visit(i, partners)` for each midpoint id `i`, where `partners`
    /// lists the midpoint ids `j` with `R(i) ∩ R(j) ≠ ∅`, ascending.
    fn scan<T, F>(&self, visit: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize, &[u32]) -> T + Sync,
    {
        let n = self.midpoints.len();
        (0..n)
            .into_par_iter()
            .map_init(
                || (vec![false; n], Vec::<u32>::new()),
                |(seen, touched), i| {
                    for &r in &self.by_mid[i] {
                        for &j in &self.by_radius[r as usize] {
                            if !seen[j as usize] {
                                seen[j as usize] = true;
                                touched.push(j);
                            }
                        }
                    }
                    touched.sort_unstable();
                    let out = visit(i, touched);
                    for &j in touched.iter() {
                        seen[j as usize] = false;
                    }
                    touched.clear();
                    out
                },
            )
            .collect()
    }
}

fn check_budget(a: &IntSet1D, budget: &Budget) -> Result<()> {
    Budget::check("1D center finder input", a.len() as u128, budget.max_1d_points)
}

/// Doubled centers `(X, Y)` such that some `r > 0` has `x ± r, y ± r ∈ A`.
pub fn find_centers_1d(a: &IntSet1D, budget: &Budget) -> Result<Vec<DoubledPoint>> {
    check_budget(a, budget)?;
    let idx = RadiiIndex::new(a);
    let rows = idx.scan(|i, partners| {
        let x2 = idx.midpoints[i];
        partners
            .iter()
            .map(|&j| DoubledPoint::new(x2, idx.midpoints[j as usize]))
            .collect::<Vec<_>>()
    });
    Ok(rows.into_iter().flatten().collect())
}

/// `|find_centers_1d(A)|` without materializing the centers.
pub fn count_centers_1d(a: &IntSet1D, budget: &Budget) -> Result<u64> {
    check_budget(a, budget)?;
    let idx = RadiiIndex::new(a);
    Ok(idx.scan(|_, partners| partners.len() as u64).into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_pair() {
        let a = IntSet1D::new([0, 2]).unwrap();
        let s = find_centers_1d(&a, &Budget::default()).unwrap();
        assert_eq!(s, vec![DoubledPoint::new(2, 2)]);
        assert_eq!(count_centers_1d(&a, &Budget::default()).unwrap(), 1);
    }

    #[test]
    fn index_invariant() {
        let a = IntSet1D::new([-3, 0, 1, 5, 9]).unwrap();
        let idx = RadiiIndex::new(&a);
        for &x2 in idx.midpoints() {
            for r2 in idx.radii_at(x2) {
                assert!(r2 > 0);
                assert_eq!((x2 - r2) % 2, 0);
                assert!(a.contains((x2 - r2) / 2) && a.contains((x2 + r2) / 2));
            }
        }
        assert!(idx.radii_at(1000).is_empty());
    }

    #[test]
    fn budget_refusal() {
        let a = IntSet1D::new(0..10).unwrap();
        let tiny = Budget {
            max_1d_points: 5,
            ..Budget::default()
        };
        assert!(find_centers_1d(&a, &tiny).is_err());
        assert!(count_centers_1d(&a, &tiny).is_err());
    }

    #[test]
    fn empty_and_singleton() {
        let b = Budget::default();
        assert!(find_centers_1d(&IntSet1D::default(), &b).unwrap().is_empty());
        assert_eq!(count_centers_1d(&IntSet1D::new([4]).unwrap(), &b).unwrap(), 0);
    }
}
