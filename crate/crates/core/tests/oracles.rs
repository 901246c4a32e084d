mod common;

use proptest::prelude::*;
use squarelab::finders::{
    count_centers_1d, count_vertex_centers_2d, find_boundary_centers_2d, find_centers_1d,
    find_vertex_centers_2d, SquareIndex, SquareMode,
};
use squarelab::{Budget, DoubledPoint, IntSet1D, PointSet2D};

use common::*;

#[test]
fn vertex_finder_matches_brute_force() {
    let mut rng = rng(11);
    let budget = Budget::default();
    for i in 0..60 {
        let b = random_points(&mut rng, 1 + i % 40, 2 + (i as i64 % 10));
        assert_eq!(find_vertex_centers_2d(&b, &budget).unwrap(), brute_vertex_centers(&b), "instance {i}");
    }
}

#[test]
fn centers_1d_match_brute_force() {
    let mut rng = rng(12);
    let budget = Budget::default();
    for i in 0..60 {
        let a = random_ints(&mut rng, 1 + i % 30, 5 + i as i64);
        let fast = find_centers_1d(&a, &budget).unwrap();
        assert_eq!(fast, brute_centers_1d(&a), "instance {i}");
        assert_eq!(count_centers_1d(&a, &budget).unwrap(), fast.len() as u64);
    }
}

#[test]
fn boundary_finder_matches_brute_force() {
    let mut rng = rng(13);
    let budget = Budget::default();
    for i in 0..20 {
        let b = random_ring_field(&mut rng);
        let r_max = 1 + i as i64 % 12;
        assert_eq!(
            find_boundary_centers_2d(&b, r_max, &budget).unwrap(),
            brute_boundary_centers(&b, r_max),
            "instance {i}"
        );
    }
}

#[test]
fn point_queries_agree_with_scans() {
    let mut rng = rng(14);
    let budget = Budget::default();
    for _ in 0..10 {
        let b = random_ring_field(&mut rng);
        let found = find_boundary_centers_2d(&b, 50, &budget).unwrap();
        let idx = SquareIndex::new(b.clone(), &budget).unwrap();
        for w in &found {
            let smallest = found.iter().filter(|v| v.center == w.center).map(|v| v.radius2).min();
            assert_eq!(idx.has_square_at(w.center, SquareMode::Boundary), smallest);
        }
        let verts = find_vertex_centers_2d(&b, &budget).unwrap();
        for w in &verts {
            assert_eq!(idx.has_square_at(w.center, SquareMode::Vertices), Some(w.radius2));
        }
        // an arbitrary center without any square
        let lonely = DoubledPoint::new(-7, -7);
        assert_eq!(idx.has_square_at(lonely, SquareMode::Vertices), None);
    }
}

fn small_set_2d() -> impl Strategy<Value = PointSet2D> {
    prop::collection::vec((0i64..10, 0i64..10), 0..40).prop_map(|v| v.into_iter().collect())
}

fn small_set_1d() -> impl Strategy<Value = IntSet1D> {
    prop::collection::vec(-20i64..20, 0..25).prop_map(|v| v.into_iter().collect())
}

proptest! {
    #[test]
    fn vertex_centers_transpose(b in small_set_2d()) {
        let budget = Budget::default();
        let mut swapped: Vec<_> = find_vertex_centers_2d(&b, &budget).unwrap()
            .into_iter()
            .map(|w| (w.center.y2, w.center.x2, w.radius2))
            .collect();
        swapped.sort();
        let direct: Vec<_> = find_vertex_centers_2d(&b.transposed(), &budget).unwrap()
            .into_iter()
            .map(|w| (w.center.x2, w.center.y2, w.radius2))
            .collect();
        prop_assert_eq!(swapped, direct);
    }

    #[test]
    fn vertex_centers_translate(b in small_set_2d(), dx in -50i64..50, dy in -50i64..50) {
        let budget = Budget::default();
        let moved: Vec<_> = find_vertex_centers_2d(&b, &budget).unwrap()
            .into_iter()
            .map(|w| (w.center.x2 + 2 * dx, w.center.y2 + 2 * dy, w.radius2))
            .collect();
        let direct: Vec<_> = find_vertex_centers_2d(&b.translated(dx, dy).unwrap(), &budget).unwrap()
            .into_iter()
            .map(|w| (w.center.x2, w.center.y2, w.radius2))
            .collect();
        prop_assert_eq!(moved, direct);
    }

    #[test]
    fn vertex_witnesses_are_valid(b in small_set_2d()) {
        for w in find_vertex_centers_2d(&b, &Budget::default()).unwrap() {
            for (x, y) in w.vertices() {
                prop_assert!(b.contains(x, y));
            }
        }
    }

    #[test]
    fn centers_1d_symmetric(a in small_set_1d()) {
        let s = find_centers_1d(&a, &Budget::default()).unwrap();
        for c in &s {
            prop_assert!(s.binary_search(&DoubledPoint::new(c.y2, c.x2)).is_ok());
        }
    }

    #[test]
    fn centers_1d_are_product_vertex_centers(a in small_set_1d()) {
        // a center of A × A without its radius
        let budget = Budget::default();
        let b = PointSet2D::product(&a, &a);
        let from_2d: Vec<_> = find_vertex_centers_2d(&b, &budget).unwrap()
            .into_iter()
            .map(|w| w.center)
            .collect();
        prop_assert_eq!(find_centers_1d(&a, &budget).unwrap(), from_2d.clone());
        prop_assert_eq!(count_vertex_centers_2d(&b, &budget).unwrap(), from_2d.len() as u64);
    }
}
