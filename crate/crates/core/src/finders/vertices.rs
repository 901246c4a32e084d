use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::Result;
use crate::finders::CenterWitness;
use crate::sets::{DoubledPoint, PointSet2D};

fn rows(b: &PointSet2D) -> Vec<(i64, Vec<i64>)> {
    let mut by_row: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for (x, y) in b.iter() {
        by_row.entry(y).or_default().push(x);
    }
    // points are sorted by (x, y), so each row's x list is ascending
    by_row.into_iter().collect()
}

/// `Σ_rows n_row²`, the number of same-row pairs the scan inspects (times two).
pub fn vertex_pair_work(b: &PointSet2D) -> u128 {
    rows(b).iter().map(|(_, xs)| (xs.len() as u128).pow(2)).sum()
}

fn check_budget(b: &PointSet2D, budget: &Budget) -> Result<()> {
    Budget::check("2D vertex finder input", b.len() as u128, budget.max_2d_points)?;
    Budget::check("2D vertex finder pair scan", vertex_pair_work(b), budget.max_pair_work)
}

/// Every doubled center of a square with all four vertices in `B`, each
/// with its smallest doubled radius. Sorted by center.
///
/// Each square is found once, from its bottom edge `(a, y), (c, y)`,
/// `a < c`, by probing the top vertices `(a, y + c - a)`, `(c, y + c - a)`.
pub fn find_vertex_centers_2d(b: &PointSet2D, budget: &Budget) -> Result<Vec<CenterWitness>> {
    check_budget(b, budget)?;
    let members: HashSet<(i64, i64)> = b.iter().collect();
    let best: HashMap<DoubledPoint, i64> = rows(b)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<DoubledPoint, i64>, (y, xs)| {
            for (i, &a) in xs.iter().enumerate() {
                for &c in &xs[i + 1..] {
                    let side = c - a;
                    let top = y + side;
                    if members.contains(&(a, top)) && members.contains(&(c, top)) {
                        let center = DoubledPoint::new(a + c, 2 * y + side);
                        acc.entry(center)
                            .and_modify(|r| *r = (*r).min(side))
                            .or_insert(side);
                    }
                }
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (c, r) in b {
                a.entry(c).and_modify(|v| *v = (*v).min(r)).or_insert(r);
            }
            a
        });
    let mut out: Vec<CenterWitness> = best
        .into_iter()
        .map(|(center, radius2)| CenterWitness { center, radius2 })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Number of distinct vertex centers.
pub fn count_vertex_centers_2d(b: &PointSet2D, budget: &Budget) -> Result<u64> {
    Ok(find_vertex_centers_2d(b, budget)?.len() as u64)
}
