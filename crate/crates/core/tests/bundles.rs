mod common;

use common::*;
use surface_bundles::bundles::*;
use surface_bundles::mcg::{twist_action, TwistOrder, TwistWord};
use surface_bundles::Error;

fn tw(g: usize, s: &str) -> TwistWord {
    TwistWord::parse_letters(g, TwistOrder::Left, s).unwrap()
}

#[test]
fn golden_file_format() {
    let f = generate_xn(2, 2, 3).unwrap();
    let expected = "\
bundle v1
fiber-genus 2
base-genus 2
order left
pair 1: A = T2^3 T1^-3 | B = T4^3 T5^3 T4^3 T5^-3
pair 2: A = T3^3 T5^3 T4^3 T5^-3 | B = T5^3 T1^3 T5^-3 T1^-3
verified: raag braid homology
provenance: xn g=2 h=2 n=3 pairing=natural literal-d1=fail
";
    assert_eq!(f.to_string(), expected);
    let torus = generate_torus_bundle(2, 1).unwrap();
    assert_eq!(
        torus.to_string(),
        "bundle v1\nfiber-genus 2\nbase-genus 1\norder left\npair 1: A = T1 T2^-1 T3 T4^-1 | B = 1\n\
         verified: braid homology\nprovenance: torus g=2 k=1\n"
    );
}

#[test]
fn parse_round_trip_keeps_verification() {
    for (g, h, n) in [(2, 3, 3), (3, 2, 5)] {
        let f = generate_xn(g, h, n).unwrap();
        let parsed: MonodromyFactorization = f.to_string().parse().unwrap();
        assert_eq!(parsed.to_string(), f.to_string());
        for level in [Level::Braid, Level::Homology] {
            assert_eq!(
                verify_factorization(&parsed, level).unwrap(),
                verify_factorization(&f, level).unwrap()
            );
        }
    }
}

#[test]
fn parse_errors() {
    for bad in [
        "",
        "bundle v2\n",
        "bundle v1\nfiber-genus x\n",
        "bundle v1\nfiber-genus 2\nbase-genus 1\norder left\npair 2: A = 1 | B = 1\n",
        "bundle v1\nfiber-genus 2\nbase-genus 1\norder left\npair 1: A = T9 | B = 1\n",
        "bundle v1\nfiber-genus 2\nbase-genus 1\norder left\npair 1: A = T1\n",
        "bundle v1\nfiber-genus 2\nbase-genus 2\norder left\npair 1: A = T1 | B = 1\n",
        "bundle v1\nfiber-genus 2\nbase-genus 1\norder sideways\n",
    ] {
        assert!(
            matches!(bad.parse::<MonodromyFactorization>(), Err(Error::Parse(_))),
            "{bad:?}"
        );
    }
}

#[test]
fn right_order_files_are_normalized() {
    let text = "bundle v1\nfiber-genus 2\nbase-genus 1\norder right\npair 1: A = T4^-1 T3 T2^-1 T1 | B = 1\nverified: none\nprovenance: hand\n";
    let f: MonodromyFactorization = text.parse().unwrap();
    assert_eq!(f.pairs()[0].0, tw(2, "T1 T2^-1 T3 T4^-1"));
    assert!(f.verified().is_empty());
}

#[test]
fn third_pair_is_a_conjugate() {
    // the third pair comes from γ₁ δ₁ γ₁⁻¹ and γ₁ δ₂ γ₁⁻¹
    let f2 = generate_xn(2, 2, 3).unwrap();
    let f3 = generate_xn(2, 3, 3).unwrap();
    let c = f2.pairs()[0].0.clone();
    // functional notation reverses: μ(γ₁ δ γ₁⁻¹) = μ(γ₁)⁻¹ μ(δ) μ(γ₁)
    let conj = |w: &TwistWord| w.conjugate_by(&c.inverse()).unwrap();
    for (x, y) in [
        (&f3.pairs()[2].0, &f2.pairs()[1].0),
        (&f3.pairs()[2].1, &f2.pairs()[1].1),
    ] {
        assert_eq!(twist_action(x), twist_action(&conj(y)));
        assert_eq!(x, &conj(y));
    }
}

#[test]
fn exponents_are_multiples_of_n() {
    for (g, h, n) in [(2, 2, 3), (3, 3, 5), (4, 2, 7)] {
        let f = generate_xn(g, h, n).unwrap();
        for (a, b) in f.pairs() {
            for &(_, e) in a.letters().iter().chain(b.letters()) {
                assert_eq!(e % n as i64, 0);
            }
        }
    }
}

#[test]
fn raag_level_needs_provenance() {
    let f = generate_torus_bundle(2, 2).unwrap();
    assert!(matches!(
        verify_factorization(&f, Level::Raag),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn conjugation_keeps_invariants() {
    let mut r = rng(23);
    let f = generate_xn(2, 2, 3).unwrap();
    for _ in 0..5 {
        let c = random_twist_word(&mut r, 2, 6);
        let fc = f.conjugate_by(&c).unwrap();
        assert_eq!(h1_total_space(&fc).unwrap(), h1_total_space(&f).unwrap());
        assert_eq!(signature(&fc).unwrap(), signature(&f).unwrap());
    }
}

#[test]
fn torus_bundle_h1() {
    for g in 2..=3 {
        for k in 1..=6 {
            let f = generate_torus_bundle(g, k).unwrap();
            let expected = if k == 1 {
                "Z^2".to_string()
            } else {
                format!("Z^2 (+) Z/{k}")
            };
            assert_eq!(h1_total_space(&f).unwrap().to_string(), expected);
        }
    }
    assert!(generate_torus_bundle(2, 0).is_err());
    assert!(generate_torus_bundle(1, 3).is_err());
}

#[test]
fn invariants_need_homology_verification() {
    let bad = MonodromyFactorization::new(2, 1, vec![(tw(2, "T1"), tw(2, "T2"))], "hand").unwrap();
    assert!(matches!(h1_total_space(&bad), Err(Error::Verification(_))));
    assert!(matches!(signature(&bad), Err(Error::Verification(_))));
    assert!(matches!(h1_mod_n(&bad, 3), Err(Error::Verification(_))));
}

#[test]
fn fiber_sum_basics() {
    let a = generate_torus_bundle(2, 3).unwrap();
    let b = generate_xn(2, 2, 3).unwrap();
    let plain = fiber_sum(&a, &b, &TwistWord::identity(2, TwistOrder::Left)).unwrap();
    assert_eq!(plain.base_genus(), 3);
    assert_eq!(plain.pairs()[0], a.pairs()[0]);
    assert_eq!(&plain.pairs()[1..], b.pairs());
    assert_eq!(plain.verified(), &[Level::Homology]);
    let glued = fiber_sum(&a, &b, &tw(2, "T1 T5^-2")).unwrap();
    assert!(verify_factorization(&glued, Level::Braid).unwrap().passed);
    let g3 = generate_torus_bundle(3, 2).unwrap();
    assert!(matches!(
        fiber_sum(&a, &g3, &TwistWord::identity(2, TwistOrder::Left)),
        Err(Error::GenusMismatch(2, 3))
    ));
    let broken =
        MonodromyFactorization::new(2, 1, vec![(tw(2, "T1"), tw(2, "T2"))], "hand").unwrap();
    let s = fiber_sum(&broken, &a, &TwistWord::identity(2, TwistOrder::Left)).unwrap();
    assert!(!verify_factorization(&s, Level::Homology).unwrap().passed);
}

fn small_chain_factorization(h: usize) -> MonodromyFactorization {
    // words on c1 and c3 only, which are disjoint
    let pairs = (0..h)
        .map(|j| {
            (
                tw(2, &format!("T1^{} T3^-1", j + 2)),
                tw(2, &format!("T3^{} T1", j + 1)),
            )
        })
        .collect();
    let mut f = MonodromyFactorization::new(2, h, pairs, "chain").unwrap();
    f.verify_levels(&[Level::Braid, Level::Homology]).unwrap();
    assert_eq!(f.verified().len(), 2);
    f
}

#[test]
fn section_sum_lift_zero() {
    let f1 = generate_xn(2, 2, 3).unwrap();
    let f2 = small_chain_factorization(2);
    let s = section_sum(&f1, &f2, 0, &tw(2, "T1 T2")).unwrap();
    assert_eq!(s.fiber_genus(), 4);
    assert_eq!(s.verified(), &[Level::Braid, Level::Homology]);
    // right words moved to c6 and c8
    assert!(s.pairs()[0].0.support().iter().any(|&k| k == 6 || k == 8));
    assert!(s.pairs().iter().all(|(a, b)| a
        .support()
        .iter()
        .chain(&b.support())
        .all(|&k| k != 5 && k != 9)));
}

#[test]
fn section_sum_errors() {
    let f1 = generate_xn(2, 2, 3).unwrap();
    assert!(matches!(
        section_sum(&f1, &f1, 0, &TwistWord::identity(2, TwistOrder::Left)),
        Err(Error::Precondition(_))
    ));
    let f2 = small_chain_factorization(3);
    assert!(section_sum(&f1, &f2, 0, &TwistWord::identity(2, TwistOrder::Left)).is_err());
    // a left product that is not even trivial on homology cannot be T_γ
    let f2 = small_chain_factorization(2);
    let broken = MonodromyFactorization::new(
        2,
        2,
        vec![(tw(2, "T1"), tw(2, "T2")), (tw(2, "T3"), tw(2, "T3"))],
        "hand",
    )
    .unwrap();
    for lift in [0, 1] {
        assert!(matches!(
            section_sum(
                &broken,
                &f2,
                lift,
                &TwistWord::identity(2, TwistOrder::Left)
            ),
            Err(Error::Verification(_))
        ));
    }
}

#[test]
fn chain_boundary_twist_is_homologically_trivial() {
    let t = chain_boundary_twist(2, 2, 1).unwrap();
    assert_eq!(t.letters().len(), 40);
    assert!(twist_action(&t).is_identity());
    let t = chain_boundary_twist(2, 4, -1).unwrap();
    assert!(twist_action(&t).is_identity());
}

#[test]
fn section_sum_with_lift() {
    // pairs (T_γ, 1) act like T_γ on homology, and T_γ is trivial there
    let g1 = 2;
    let tg = chain_boundary_twist(g1, g1, 1).unwrap();
    let left = MonodromyFactorization::new(
        2,
        1,
        vec![(tw(2, "T1"), TwistWord::identity(2, TwistOrder::Left))],
        "hand",
    )
    .unwrap();
    let right =
        MonodromyFactorization::new(2, 1, vec![(tw(2, "T3^2"), tw(2, "T1"))], "hand").unwrap();
    let s = section_sum(&left, &right, 1, &TwistWord::identity(2, TwistOrder::Left)).unwrap();
    assert_eq!(s.verified(), &[Level::Homology]);
    assert!(twist_action(&tg).is_identity());
}

#[test]
fn separation_examples() {
    let xs: Vec<_> = [3, 5, 7]
        .iter()
        .map(|&p| generate_xn(2, 2, p).unwrap())
        .collect();
    let r = homotopy_separation(&xs).unwrap();
    assert!(r.pairwise_distinct());
    let text = r.to_string();
    assert!(text.contains("1 vs 2: distinct"));
}

#[test]
fn certificate_with_dissection() {
    let torus: surface_bundles::dissection::Dissection =
        "genus: 1\ngraph:\nvertices: a b; edges: (a b)\ncurves:\na: x\nb: x\ncrossings:\nx\nfaces:\na+ b+ a- b-\n"
            .parse()
            .unwrap();
    let r = indecomposability_report_with(2, 2, 3, Some(&torus)).unwrap();
    assert!(r.checks[0].name.contains("link"));
    let plain = indecomposability_report(2, 2, 3).unwrap();
    assert_eq!(plain.checks.len(), r.checks.len());
}
