//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p surface-bundles --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use surface_bundles::braid::{check_lonne_relations, lonne_matrix};
use surface_bundles::bundles::*;
use surface_bundles::invariants::meyer_cocycle;
use surface_bundles::mcg::{
    penner_certify, penner_growth, twist_action, PennerData, TwistOrder, TwistWord,
};
use surface_bundles::raag::{check_kim_condition, LabeledGraph};
use surface_bundles::word::Word;

type Outcome = Result<String, String>;

fn grid() -> Vec<(usize, usize, u64)> {
    let mut out = Vec::new();
    for g in [2, 3, 4] {
        for h in [2, 3] {
            for n in [3, 5] {
                out.push((g, h, n));
            }
        }
    }
    out
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn xn(g: usize, h: usize, n: u64) -> Result<MonodromyFactorization, String> {
    generate_xn(g, h, n).map_err(|e| format!("X_{n}({g},{h}): {e}"))
}

fn criterion_1() -> Outcome {
    let mut slowest = 0.0f64;
    for (g, h, n) in grid() {
        let f = xn(g, h, n)?;
        let t = Instant::now();
        let r = verify_factorization(&f, Level::Braid).map_err(|e| e.to_string())?;
        slowest = slowest.max(t.elapsed().as_secs_f64());
        ensure(r.passed, || format!("X_{n}({g},{h}): {}", r.detail))?;
    }
    Ok(format!("12 instances, slowest braid check {slowest:.2}s"))
}

fn criterion_2() -> Outcome {
    for g in [2, 3] {
        for k in 1..=25i64 {
            let f = generate_torus_bundle(g, k).map_err(|e| e.to_string())?;
            let h1 = h1_total_space(&f).map_err(|e| e.to_string())?;
            let torsion: Vec<BigInt> = if k == 1 {
                vec![]
            } else {
                vec![BigInt::from(k)]
            };
            ensure(
                h1.free_rank() == 2 && h1.torsion() == torsion.as_slice(),
                || format!("g={g} k={k}: H1 = {h1}"),
            )?;
        }
    }
    Ok("H1 = Z^2 (+) Z/k for g in {2,3}, k = 1..25".into())
}

fn criterion_3() -> Outcome {
    for (g, h, n) in grid() {
        let r = h1_mod_n(&xn(g, h, n)?, n).map_err(|e| e.to_string())?;
        ensure(r == 2 * g + 2 * h, || {
            format!("X_{n}({g},{h}): rank {r}, expected {}", 2 * g + 2 * h)
        })?;
    }
    Ok("rank 2g+2h on all 12 instances".into())
}

fn criterion_4() -> Outcome {
    for (g, h) in [(2, 2), (2, 3), (3, 2)] {
        let mut groups = Vec::new();
        for p in [3u64, 5, 7] {
            let h1 = h1_total_space(&xn(g, h, p)?).map_err(|e| e.to_string())?;
            let p_power = h1.torsion().iter().any(|d| {
                let mut d = d.clone();
                let p = BigInt::from(p);
                while d.is_multiple_of(&p) && d != BigInt::from(1) {
                    d /= &p;
                }
                d == BigInt::from(1)
            });
            ensure(p_power, || {
                format!("({g},{h}) p={p}: no p-power invariant factor in {h1}")
            })?;
            groups.push(h1);
        }
        let files: Vec<_> = [3, 5, 7]
            .iter()
            .map(|&p| xn(g, h, p))
            .collect::<Result<_, _>>()?;
        let report = homotopy_separation(&files).map_err(|e| e.to_string())?;
        ensure(report.pairwise_distinct(), || {
            format!("({g},{h}): {report}")
        })?;
    }
    Ok("p-power factors present, groups pairwise distinct".into())
}

fn criterion_5() -> Outcome {
    for (g, h, n) in grid() {
        let s = signature(&xn(g, h, n)?).map_err(|e| e.to_string())?;
        ensure(s == 0, || format!("X_{n}({g},{h}): signature {s}"))?;
    }
    for g in [2, 3] {
        for k in 1..=10 {
            let s = signature(&generate_torus_bundle(g, k).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            ensure(s == 0, || format!("torus g={g} k={k}: signature {s}"))?;
        }
    }
    let mut r = rng(101);
    for i in 0..100 {
        let g = 1 + i % 3;
        let m: Vec<_> = (0..3)
            .map(|_| twist_action(&random_twist_word(&mut r, g, 7)))
            .collect();
        let ab = m[0].compose(&m[1]).unwrap();
        let bc = m[1].compose(&m[2]).unwrap();
        let t = |a, b| meyer_cocycle(a, b).map_err(|e| e.to_string());
        let lhs = t(&m[0], &m[1])? + t(&ab, &m[2])?;
        let rhs = t(&m[0], &bc)? + t(&m[1], &m[2])?;
        ensure(lhs == rhs, || {
            format!("cocycle identity fails on triple {i}: {lhs} vs {rhs}")
        })?;
    }
    Ok("signature 0 on 12 X_n and 20 torus bundles; cocycle identity on 100 triples".into())
}

fn criterion_6() -> Outcome {
    for (g, h, n) in grid() {
        let w = step_six_word(g, h, n).map_err(|e| e.to_string())?;
        let pd = PennerData::chain(g).map_err(|e| e.to_string())?;
        ensure(penner_certify(&w, &pd).map_err(|e| e.to_string())?, || {
            format!("step-6 word for ({g},{h},{n}) not certified: {w}")
        })?;
    }
    for g in [2, 3, 4] {
        let pd = PennerData::chain(g).map_err(|e| e.to_string())?;
        for k in 1..=10 {
            let phi = phi_k(g, k).map_err(|e| e.to_string())?;
            ensure(
                penner_certify(&phi, &pd).map_err(|e| e.to_string())?,
                || format!("phi_{k} at g={g}"),
            )?;
        }
    }
    let mut lambdas = Vec::new();
    for g in [2, 3] {
        let pd = PennerData::chain(g).map_err(|e| e.to_string())?;
        let r = penner_growth(&phi_k(g, 1).unwrap(), &pd).map_err(|e| e.to_string())?;
        ensure(r.certified && r.lambda_estimate > 1.0, || {
            format!("phi_1 at g={g}: {r:?}")
        })?;
        lambdas.push(format!("g={g} lambda~{:.3}", r.lambda_estimate));
    }
    Ok(format!(
        "step-6 words and phi_k certified; growth {}",
        lambdas.join(", ")
    ))
}

fn criterion_7() -> Outcome {
    for g in [3, 4, 5] {
        let graph = LabeledGraph::cycle_opposite(2 * g + 1);
        let s: Vec<String> = (4..=2 * g).map(|i| format!("v{i}")).collect();
        let w = kim_word(g, KimWord::Palindrome).map_err(|e| e.to_string())?;
        ensure(
            check_kim_condition(&graph, &s, &w).map_err(|e| e.to_string())?,
            || format!("Kim condition fails at g={g} for {w}"),
        )?;
    }
    let graph = LabeledGraph::cycle_opposite(7);
    let bad = Word::from_pairs([("v4", 1), ("v6", 1)]);
    ensure(
        !check_kim_condition(&graph, &["v4", "v5", "v6"], &bad).map_err(|e| e.to_string())?,
        || "v4 v6 passes the Kim condition".into(),
    )?;
    for n in [1, 2] {
        ensure(lonne_matrix(2, n).is_err(), || {
            format!("lonne_matrix accepts n={n}")
        })?;
    }
    for (g, n) in [(2, 3), (2, 4), (3, 3)] {
        let r = check_lonne_relations(g, n).map_err(|e| e.to_string())?;
        ensure(r.matches(), || {
            format!("commutation pattern differs at (g,n)=({g},{n})")
        })?;
    }
    Ok("Kim passes for g=3,4,5 and fails for v4 v6; n=1,2 rejected; Lonne patterns match".into())
}

fn criterion_8() -> Outcome {
    let (rc, rb) = raag_oracle(30_000, 8);
    ensure(rb == 0, || format!("{rb} RAAG disagreements out of {rc}"))?;
    let (gc, gb) = garside_oracle(2000, 8);
    ensure(gb == 0, || {
        format!("{gb} Garside/handle disagreements out of {gc}")
    })?;
    Ok(format!(
        "{rc} RAAG comparisons, {gc} B5 comparisons, 0 disagreements"
    ))
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    for i in 0..1000 {
        let g = 2 + i % 3;
        let w = random_twist_word(&mut r, g, 15);
        ensure(twist_action(&w).is_symplectic(), || {
            format!("not symplectic: {w}")
        })?;
    }
    Ok("1000 random words at g=2,3,4".into())
}

fn small_chain(h: usize, seed: i64) -> MonodromyFactorization {
    let tw = |s: String| TwistWord::parse_letters(2, TwistOrder::Left, &s).unwrap();
    let pairs = (0..h as i64)
        .map(|j| {
            (
                tw(format!("T1^{} T3^-1", j + seed)),
                tw(format!("T3^{} T1", j + 1)),
            )
        })
        .collect();
    MonodromyFactorization::new(2, h, pairs, "chain").unwrap()
}

fn criterion_10() -> Outcome {
    let mut r = rng(10);
    let id = |g| TwistWord::identity(g, TwistOrder::Left);
    let mut sums = 0;
    // fiber sums over mixed inputs with random glue words
    let mut pool = vec![xn(2, 2, 3)?, xn(2, 3, 5)?];
    for k in 1..=4 {
        pool.push(generate_torus_bundle(2, k).map_err(|e| e.to_string())?);
    }
    for i in 0..20 {
        let a = &pool[r.gen_range(0..pool.len())];
        let b = &pool[r.gen_range(0..pool.len())];
        let phi = if i % 4 == 0 {
            id(2)
        } else {
            random_twist_word(&mut r, 2, 6)
        };
        let s = fiber_sum(a, b, &phi).map_err(|e| e.to_string())?;
        ensure(
            verify_factorization(&s, Level::Homology).unwrap().passed,
            || format!("fiber sum {i} fails"),
        )?;
        let lhs = signature(&s).map_err(|e| e.to_string())?;
        let rhs =
            signature(a).map_err(|e| e.to_string())? + signature(b).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || {
            format!("signature additivity fails on pair {i}: {lhs} vs {rhs}")
        })?;
        sums += 1;
    }
    // section sums with n_lift = 0
    for (f1, h) in [(xn(2, 2, 3)?, 2), (xn(3, 2, 3)?, 2), (xn(2, 3, 3)?, 3)] {
        for seed in [1, 2] {
            let g1 = f1.fiber_genus();
            let phi = TwistWord::parse_letters(g1, TwistOrder::Left, "T1 T2^-1").unwrap();
            let s = section_sum(&f1, &small_chain(h, seed), 0, &phi).map_err(|e| e.to_string())?;
            ensure(
                verify_factorization(&s, Level::Homology).unwrap().passed,
                || format!("section sum of {} fails", f1.provenance()),
            )?;
            sums += 1;
        }
    }
    Ok(format!(
        "{sums} sums verified, signature additive on 20 fiber-sum pairs"
    ))
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (i, run) in criteria {
        match run() {
            Ok(note) => println!("criterion {i}: PASS ({note})"),
            Err(why) => {
                failed += 1;
                println!("criterion {i}: FAIL ({why})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
