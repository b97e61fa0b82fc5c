mod common;

use common::*;
use rand::Rng;
use surface_bundles::braid::garside_equal;
use surface_bundles::invariants::meyer_cocycle;
use surface_bundles::mcg::{twist_action, SpMatrix};

#[test]
fn raag_normal_form_matches_shuffle_search() {
    let (checked, bad) = raag_oracle(20_000, 7);
    assert!(checked > 100_000);
    assert_eq!(bad, 0);
}

#[test]
fn shuffle_search_sanity() {
    let path = vec![vec![false, true], vec![true, false]];
    assert!(brute_trivial(&[(0, 1), (1, 1), (0, -1), (1, -1)], &path));
    let empty = vec![vec![false, false], vec![false, false]];
    assert!(!brute_trivial(&[(0, 1), (1, 1), (0, -1), (1, -1)], &empty));
    assert!(brute_trivial(&[(0, 1), (1, 1), (1, -1), (0, -1)], &empty));
}

#[test]
fn garside_matches_handle_reduction() {
    let (checked, bad) = garside_oracle(2000, 11);
    assert_eq!(checked, 2000);
    assert_eq!(bad, 0);
}

#[test]
fn rewrites_are_detected_equal() {
    let mut r = rng(3);
    for _ in 0..300 {
        let u = random_braid(&mut r, 6, 15);
        let v = braid_rewrite(&mut r, &u, 6, 10);
        assert!(garside_equal(&braid(6, &u), &braid(6, &v)).unwrap());
    }
}

#[test]
fn snf_matches_determinantal_divisors() {
    let (checked, bad) = snf_oracle(500, 5);
    assert_eq!(checked, 500);
    assert_eq!(bad, 0);
}

fn random_sp(r: &mut rand::rngs::StdRng, genus: usize) -> SpMatrix {
    twist_action(&random_twist_word(r, genus, 6))
}

#[test]
fn meyer_cocycle_identity() {
    let mut r = rng(13);
    for _ in 0..100 {
        let g = r.gen_range(1..=2);
        let (a, b, c) = (
            random_sp(&mut r, g),
            random_sp(&mut r, g),
            random_sp(&mut r, g),
        );
        let ab = a.compose(&b).unwrap();
        let bc = b.compose(&c).unwrap();
        let lhs = meyer_cocycle(&a, &b).unwrap() + meyer_cocycle(&ab, &c).unwrap();
        let rhs = meyer_cocycle(&a, &bc).unwrap() + meyer_cocycle(&b, &c).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn meyer_cocycle_basic_values() {
    let mut r = rng(17);
    for _ in 0..30 {
        let a = random_sp(&mut r, 2);
        let id = SpMatrix::identity(2);
        assert_eq!(meyer_cocycle(&a, &id).unwrap(), 0);
        assert_eq!(meyer_cocycle(&a, &a.inverse()).unwrap(), 0);
        let b = random_sp(&mut r, 2);
        assert_eq!(
            meyer_cocycle(&a, &b).unwrap(),
            meyer_cocycle(&b, &a).unwrap()
        );
        assert!(meyer_cocycle(&a, &b).unwrap().abs() <= 4);
    }
}
