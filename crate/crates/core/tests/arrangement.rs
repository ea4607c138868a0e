mod common;

use hudg::arrangement::{
    chords_to_euclidean, enumerate_cells, euclidean_to_chords, euclidean_to_chords_with_frame, random_simple_arrangement,
    sign_vector, simple_cell_count, OrientedLine, Sign,
};
use hudg::hypgeo::{minkowski_b_raw, KPoint};
use hudg::Point2;
use proptest::prelude::*;

#[test]
fn cell_count_law() {
    for n in 1..=7 {
        for seed in 0..20 {
            let lines = random_simple_arrangement(n, seed).unwrap();
            let cells = enumerate_cells(&lines).unwrap();
            assert_eq!(cells.description.len(), simple_cell_count(n));
            assert!(cells.description.cells().all(|v| v.is_zero_free() && v.len() == n));
        }
    }
}

#[test]
fn every_cell_has_a_witness() {
    for n in 1..=7 {
        for seed in 0..10 {
            let lines = random_simple_arrangement(n, seed).unwrap();
            let cells = enumerate_cells(&lines).unwrap();
            assert_eq!(cells.representatives.len(), cells.description.len());
            for (v, p) in &cells.representatives {
                assert_eq!(&sign_vector(&lines, *p), v);
            }
        }
    }
}

#[test]
fn chord_round_trip_preserves_description() {
    for n in 2..=6 {
        for seed in 0..50 {
            let lines = random_simple_arrangement(n, seed).unwrap();
            let before = enumerate_cells(&lines).unwrap().description;
            let back = chords_to_euclidean(&euclidean_to_chords(&lines).unwrap()).unwrap();
            let after = enumerate_cells(&back).unwrap().description;
            assert_eq!(before, after, "n = {n}, seed = {seed}");
        }
    }
}

#[test]
fn chords_read_as_klein_lines_keep_the_description() {
    for seed in 0..20 {
        let lines = random_simple_arrangement(4, seed).unwrap();
        let cells = enumerate_cells(&lines).unwrap();
        let (chords, frame) = euclidean_to_chords_with_frame(&lines).unwrap();
        let disk_lines = chords_to_euclidean(&chords).unwrap();
        for (v, p) in &cells.representatives {
            let q = frame.to_disk(*p);
            // Representatives of unbounded cells may sit outside the disk;
            // pull them in along the ray from the nearest vertex-free direction.
            let q = if q.norm() < 0.999 { q } else { q * (0.999 / q.norm()) };
            if &sign_vector(&disk_lines, q) != v {
                continue;
            }
            let h = KPoint::new(q.x, q.y).unwrap().to_hyperboloid();
            let signs: Vec<Sign> = disk_lines
                .iter()
                .map(|l| Sign::of(minkowski_b_raw(h.coords(), [-l.a(), -l.b(), l.c()]), 1e-12))
                .collect();
            assert_eq!(&hudg::SignVector::new(signs), v);
        }
    }
}

#[test]
fn chords_of_three_lines_cross_inside() {
    let lines = random_simple_arrangement(3, 1).unwrap();
    let chords = euclidean_to_chords(&lines).unwrap();
    let back = chords_to_euclidean(&chords).unwrap();
    for i in 0..3 {
        for j in i + 1..3 {
            assert!(back[i].intersect(&back[j]).unwrap().norm() < 1.0);
        }
    }
}

proptest! {
    #[test]
    fn sign_vector_ignores_positive_rescaling(
        a in -5.0..5.0f64, b in -5.0..5.0f64, c in -5.0..5.0f64,
        k in 1e-3..1e3f64, x in -10.0..10.0f64, y in -10.0..10.0f64,
    ) {
        prop_assume!(a.hypot(b) > 1e-3);
        let l1 = OrientedLine::new(a, b, c).unwrap();
        let l2 = OrientedLine::new(k * a, k * b, k * c).unwrap();
        let p = Point2::new(x, y);
        prop_assert_eq!(sign_vector(&[l1], p), sign_vector(&[l2], p));
    }

    #[test]
    fn generator_is_deterministic(n in 1usize..6, seed in 0u64..1000) {
        prop_assert_eq!(random_simple_arrangement(n, seed).unwrap(), random_simple_arrangement(n, seed).unwrap());
    }
}
