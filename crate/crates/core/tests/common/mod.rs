//! Brute-force oracles, kept deliberately naive.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use squarelab::finders::CenterWitness;
use squarelab::{DoubledPoint, IntSet1D, PointSet2D};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every 4-subset of `B` tested for being the vertex set of an
/// axis-parallel square; smallest radius per center.
pub fn brute_vertex_centers(b: &PointSet2D) -> Vec<CenterWitness> {
    let pts = b.points();
    let n = pts.len();
    let mut best: BTreeMap<DoubledPoint, i64> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let mut q = [pts[i], pts[j], pts[k], pts[l]];
                    q.sort();
                    let (x0, y0) = q[0];
                    let d = q[1].1 - y0;
                    if d > 0 && q[1] == (x0, y0 + d) && q[2] == (x0 + d, y0) && q[3] == (x0 + d, y0 + d) {
                        let c = DoubledPoint::new(2 * x0 + d, 2 * y0 + d);
                        let r = best.entry(c).or_insert(d);
                        *r = (*r).min(d);
                    }
                }
            }
        }
    }
    best.into_iter()
        .map(|(center, radius2)| CenterWitness { center, radius2 })
        .collect()
}

/// `{(x1 + x2, y1 + y2) : x1 < x2, y1 < y2, x2 - x1 = y2 - y1}` by four loops.
pub fn brute_centers_1d(a: &IntSet1D) -> Vec<DoubledPoint> {
    let e = a.elems();
    let mut out = BTreeSet::new();
    for &x1 in e {
        for &x2 in e {
            for &y1 in e {
                for &y2 in e {
                    if x1 < x2 && y1 < y2 && x2 - x1 == y2 - y1 {
                        out.insert(DoubledPoint::new(x1 + x2, y1 + y2));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// All `(s, r)` whose Chebyshev sphere lies in `B`, by enumerating the sphere.
pub fn brute_boundary_centers(b: &PointSet2D, r_max: i64) -> Vec<CenterWitness> {
    let Some(bb) = b.bounding_box() else {
        return Vec::new();
    };
    let members: HashSet<(i64, i64)> = b.iter().collect();
    let mut out = Vec::new();
    for x in bb.min_x..=bb.max_x {
        for y in bb.min_y..=bb.max_y {
            for r in 1..=r_max {
                let full = (-r..=r).all(|t| {
                    members.contains(&(x + t, y - r))
                        && members.contains(&(x + t, y + r))
                        && members.contains(&(x - r, y + t))
                        && members.contains(&(x + r, y + t))
                });
                if full {
                    out.push(CenterWitness {
                        center: DoubledPoint::from_lattice(x, y),
                        radius2: 2 * r,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// Random points on `{0..=span}²`.
pub fn random_points(rng: &mut ChaCha8Rng, len: usize, span: i64) -> PointSet2D {
    (0..len)
        .map(|_| (rng.gen_range(0..=span), rng.gen_range(0..=span)))
        .collect()
}

pub fn random_ints(rng: &mut ChaCha8Rng, len: usize, span: i64) -> IntSet1D {
    (0..len).map(|_| rng.gen_range(-span..=span)).collect()
}

/// A 50×50 grid region mixing random rings, filled rectangles and noise.
pub fn random_ring_field(rng: &mut ChaCha8Rng) -> PointSet2D {
    let mut pts: Vec<(i64, i64)> = Vec::new();
    for _ in 0..rng.gen_range(1..6) {
        let r = rng.gen_range(1..8);
        let (x, y) = (rng.gen_range(r..50 - r), rng.gen_range(r..50 - r));
        for t in -r..=r {
            pts.extend([(x + t, y - r), (x + t, y + r), (x - r, y + t), (x + r, y + t)]);
        }
    }
    for _ in 0..rng.gen_range(0..3) {
        let (x, y) = (rng.gen_range(0..40), rng.gen_range(0..40));
        let (w, h) = (rng.gen_range(1..10), rng.gen_range(1..10));
        pts.extend((x..x + w).flat_map(|u| (y..y + h).map(move |v| (u, v))));
    }
    for _ in 0..rng.gen_range(0..100) {
        pts.push((rng.gen_range(0..50), rng.gen_range(0..50)));
    }
    pts.into_iter().collect()
}
