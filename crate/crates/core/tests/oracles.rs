mod common;

use std::collections::BTreeSet;

use esgame_core::geometry::arrangement::{locate, Arrangement};
use esgame_core::geometry::{convex_hull, convex_layers};
use esgame_core::pattern::{find_convex_kgon, is_convex_position, layer_type};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const INSTANCES: usize = 2_000;

#[test]
fn hull_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..INSTANCES {
        let n = rng.gen_range(3..=10);
        let pts = common::random_points(n, &mut rng);
        let hull: BTreeSet<_> = convex_hull(&pts).unwrap().into_iter().collect();
        assert_eq!(hull, common::hull_set(&pts), "{pts:?}");
        assert_eq!(is_convex_position(&pts).unwrap(), common::is_convex_position(&pts));
    }
}

#[test]
fn layers_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..INSTANCES {
        let n = rng.gen_range(1..=10);
        let pts = common::random_points(n, &mut rng);
        let layers: Vec<BTreeSet<_>> = convex_layers(&pts).unwrap().into_iter().map(|l| l.into_iter().collect()).collect();
        let oracle = common::layer_sets(&pts);
        assert_eq!(layers, oracle, "{pts:?}");
        let sizes: Vec<usize> = oracle.iter().map(BTreeSet::len).collect();
        assert_eq!(layer_type(&pts).unwrap().0, sizes);
    }
}

#[test]
fn detectors_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..INSTANCES {
        let n = rng.gen_range(4..=10);
        let pts = common::random_points(n, &mut rng);
        for k in [4, 5] {
            for empty in [false, true] {
                let found = find_convex_kgon(&pts, k, empty).unwrap();
                assert_eq!(found.is_some(), common::naive_kgon(&pts, k, empty), "k={k} empty={empty} {pts:?}");
                if let Some(w) = found {
                    assert_eq!(w.vertices.len(), k);
                    assert!(common::is_convex_position(&w.vertices));
                    assert_eq!(w.empty, empty);
                    if empty {
                        assert!(!common::has_point_inside(&w.vertices, &pts));
                    }
                }
            }
        }
    }
}

#[test]
fn arrangement_face_count_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..300 {
        let n = rng.gen_range(2..=7);
        let pts = common::random_points(n, &mut rng);
        let arr = Arrangement::new(&pts).unwrap();
        assert_eq!(arr.face_count(), common::naive_face_count(&pts), "{pts:?}");
    }
}

#[test]
fn cell_representatives_lie_in_their_cells() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let n = rng.gen_range(2..=6);
        let pts = common::random_points(n, &mut rng);
        let cells = Arrangement::new(&pts).unwrap().cells();
        let mut seen = BTreeSet::new();
        for c in &cells {
            assert_eq!(locate(&pts, &c.representative), Some(c.signs));
            assert!(seen.insert(c.signs.0));
        }
    }
}
