//! Independent oracles shared by the oracle tests and the acceptance suite.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use surface_bundles::braid::{garside_equal, handle_trivial, BraidWord};
use surface_bundles::invariants::{smith_normal_form, IntMatrix};
use surface_bundles::mcg::{TwistOrder, TwistWord};
use surface_bundles::raag::{raag_equal, LabeledGraph};
use surface_bundles::word::Word;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- RAAG

/// Unit letter: `(vertex, ±1)`.
pub type Unit = (usize, i8);

/// Whether a word is trivial, by searching shuffles of commuting neighbors
/// and cancelling any adjacent inverse pair that appears.
pub fn brute_trivial(word: &[Unit], adj: &[Vec<bool>]) -> bool {
    let mut current = word.to_vec();
    'outer: loop {
        if current.is_empty() {
            return true;
        }
        let mut seen: HashSet<Vec<Unit>> = HashSet::from([current.clone()]);
        let mut queue = VecDeque::from([current.clone()]);
        while let Some(w) = queue.pop_front() {
            for i in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[i], w[i + 1]);
                if a.0 == b.0 && a.1 == -b.1 {
                    let mut next = w.clone();
                    next.drain(i..i + 2);
                    current = next;
                    continue 'outer;
                }
                if a.0 != b.0 && adj[a.0][b.0] {
                    let mut next = w.clone();
                    next.swap(i, i + 1);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        return false;
    }
}

pub fn to_word(units: &[Unit]) -> Word {
    Word::from_pairs(
        units
            .iter()
            .map(|&(v, e)| (format!("v{}", v + 1), e as i64)),
    )
}

pub fn graph_from_adj(adj: &[Vec<bool>]) -> LabeledGraph {
    let names: Vec<String> = (1..=adj.len()).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..adj.len() {
        for j in i + 1..adj.len() {
            if adj[i][j] {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    LabeledGraph::new(names, &edges).unwrap()
}

/// Every simple graph on `k` labeled vertices.
pub fn all_graphs(k: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let mut adj = vec![vec![false; k]; k];
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    adj[i][j] = true;
                    adj[j][i] = true;
                }
            }
            adj
        })
        .collect()
}

/// Every word of exactly length `len` over `k` generators.
pub fn all_words(k: usize, len: usize) -> Vec<Vec<Unit>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &out {
            for v in 0..k {
                for e in [1i8, -1] {
                    let mut x = w.clone();
                    x.push((v, e));
                    next.push(x);
                }
            }
        }
        out = next;
    }
    out
}

/// Compares `raag_equal(u, v)` with the brute-force triviality of `u v⁻¹`.
pub fn raag_agrees(u: &[Unit], v: &[Unit], adj: &[Vec<bool>], g: &LabeledGraph) -> bool {
    let mut uv = u.to_vec();
    uv.extend(v.iter().rev().map(|&(x, e)| (x, -e)));
    raag_equal(&to_word(u), &to_word(v), g).unwrap() == brute_trivial(&uv, adj)
}

/// `(checked, disagreements)` for the RAAG oracle:
/// - all words of length ≤ 8 over every graph on 2 vertices,
/// - all words of length ≤ 6 over every graph on 3 vertices,
/// - all words of length ≤ 4 over every graph on 4 vertices,
/// - `samples` random pairs with `|u| + |v| ≤ 8` over random graphs on 4 to 6
///   vertices, half of them built to be equal.
pub fn raag_oracle(samples: usize, seed: u64) -> (usize, usize) {
    let mut checked = 0;
    let mut bad = 0;
    for (k, max_len) in [(2, 8), (3, 6), (4, 4)] {
        for adj in all_graphs(k) {
            let g = graph_from_adj(&adj);
            for len in 0..=max_len {
                for w in all_words(k, len) {
                    checked += 1;
                    let eq = raag_equal(&to_word(&w), &Word::empty(), &g).unwrap();
                    if eq != brute_trivial(&w, &adj) {
                        bad += 1;
                    }
                }
            }
        }
    }
    let mut r = rng(seed);
    for i in 0..samples {
        let k = r.gen_range(4..=6);
        let mut adj = vec![vec![false; k]; k];
        for a in 0..k {
            for b in a + 1..k {
                let e = r.gen_bool(0.5);
                adj[a][b] = e;
                adj[b][a] = e;
            }
        }
        let g = graph_from_adj(&adj);
        let random_word = |r: &mut StdRng, len: usize| -> Vec<Unit> {
            (0..len)
                .map(|_| (r.gen_range(0..k), if r.gen_bool(0.5) { 1 } else { -1 }))
                .collect()
        };
        let (u, v) = if i % 2 == 0 {
            let lu = r.gen_range(0..=8);
            let u = random_word(&mut r, lu);
            let lv = r.gen_range(0..=8 - lu);
            let v = random_word(&mut r, lv);
            (u, v)
        } else {
            // v: a random shuffle-and-cancel rewrite of u
            let lu = r.gen_range(0..=4);
            let u = random_word(&mut r, lu);
            let mut v = u.clone();
            for _ in 0..6 {
                if v.len() >= 2 && r.gen_bool(0.6) {
                    let i = r.gen_range(0..v.len() - 1);
                    if adj[v[i].0][v[i + 1].0] {
                        v.swap(i, i + 1);
                    }
                } else if u.len() + v.len() + 2 <= 8 {
                    let p = r.gen_range(0..=v.len());
                    let x = (r.gen_range(0..k), 1i8);
                    v.insert(p, (x.0, -x.1));
                    v.insert(p, x);
                }
            }
            (u, v)
        };
        checked += 1;
        if !raag_agrees(&u, &v, &adj, &g) {
            bad += 1;
        }
    }
    (checked, bad)
}

// ---------------------------------------------------------------- braids

pub fn random_braid(r: &mut StdRng, strands: usize, max_len: usize) -> Vec<i32> {
    let len = r.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = r.gen_range(1..strands) as i32;
            if r.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

pub fn braid(strands: usize, units: &[i32]) -> BraidWord {
    BraidWord::new(
        strands,
        units
            .iter()
            .map(|&x| (x.unsigned_abs() as usize, x.signum() as i64))
            .collect(),
    )
    .unwrap()
}

/// Rewrites `w` by random braid relations, so the result is the same braid.
pub fn braid_rewrite(r: &mut StdRng, w: &[i32], strands: usize, moves: usize) -> Vec<i32> {
    let mut w = w.to_vec();
    for _ in 0..moves {
        match r.gen_range(0..3) {
            0 => {
                let i = r.gen_range(1..strands) as i32;
                let p = r.gen_range(0..=w.len());
                let s = if r.gen_bool(0.5) { 1 } else { -1 };
                w.splice(p..p, [s * i, -s * i]);
            }
            1 if w.len() >= 2 => {
                let p = r.gen_range(0..w.len() - 1);
                if (w[p].abs() - w[p + 1].abs()).abs() >= 2 {
                    w.swap(p, p + 1);
                }
            }
            _ if w.len() >= 3 => {
                let p = r.gen_range(0..w.len() - 2);
                let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
                // σ_i σ_j σ_i = σ_j σ_i σ_j for |i − j| = 1, same signs
                if a == c && (a.abs() - b.abs()).abs() == 1 && a.signum() == b.signum() {
                    w[p] = b;
                    w[p + 1] = a;
                    w[p + 2] = b;
                }
            }
            _ => {}
        }
    }
    w
}

/// `(checked, disagreements)` comparing Garside equality with handle
/// reduction of `u v⁻¹` on random `B₅` words of length ≤ 20.
pub fn garside_oracle(count: usize, seed: u64) -> (usize, usize) {
    let mut r = rng(seed);
    let mut bad = 0;
    let mut checked = 0;
    let mut i = 0;
    while checked < count {
        i += 1;
        let (u, v) = if i % 2 == 0 {
            (random_braid(&mut r, 5, 20), random_braid(&mut r, 5, 20))
        } else {
            // at most 4 insertions keep the rewrite within 20 letters
            let u = random_braid(&mut r, 5, 12);
            let v = braid_rewrite(&mut r, &u, 5, 12);
            if v.len() > 20 {
                continue;
            }
            (u, v)
        };
        let (bu, bv) = (braid(5, &u), braid(5, &v));
        let g = garside_equal(&bu, &bv).unwrap();
        let h = handle_trivial(&bu.concat(&bv.inverse()).unwrap());
        checked += 1;
        if g != h {
            bad += 1;
        }
    }
    (checked, bad)
}

// ---------------------------------------------------------------- twists

pub fn random_twist_word(r: &mut StdRng, genus: usize, max_len: usize) -> TwistWord {
    let len = r.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let e = r.gen_range(1..=3) * if r.gen_bool(0.5) { 1 } else { -1 };
            (r.gen_range(1..=2 * genus + 1), e)
        })
        .collect();
    let order = if r.gen_bool(0.5) {
        TwistOrder::Left
    } else {
        TwistOrder::Right
    };
    TwistWord::new(genus, order, letters).unwrap()
}

// ---------------------------------------------------------------- SNF

fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors `d_k = gcd` of `k × k`
/// minors: `(nonzero invariant factors, rank)`.
pub fn determinantal_invariants(m: &IntMatrix) -> (Vec<BigInt>, usize) {
    let (r, c) = (m.rows(), m.cols());
    let mut d_prev = BigInt::from(1);
    let mut factors = Vec::new();
    for k in 1..=r.min(c) {
        let mut d = BigInt::zero();
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let minor: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
                    .collect();
                d = d.gcd(&det(&minor));
            }
        }
        if d.is_zero() {
            break;
        }
        factors.push(&d / &d_prev);
        d_prev = d;
    }
    let rank = factors.len();
    (factors, rank)
}

/// `(checked, disagreements)` for SNF against determinantal divisors on
/// random matrices up to 5 × 5.
pub fn snf_oracle(count: usize, seed: u64) -> (usize, usize) {
    let mut r = rng(seed);
    let mut bad = 0;
    for _ in 0..count {
        let rows = r.gen_range(1..=5);
        let cols = r.gen_range(1..=5);
        let spread = r.gen_range(1..=12);
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| r.gen_range(-spread..=spread)).collect())
            .collect();
        let m = IntMatrix::from_rows(&data).unwrap();
        let (coker, rank) = smith_normal_form(&m);
        let (factors, orank) = determinantal_invariants(&m);
        let torsion: Vec<BigInt> = factors
            .into_iter()
            .filter(|d| d.abs() != BigInt::from(1))
            .map(|d| d.abs())
            .collect();
        let ok = rank == orank
            && coker.free_rank() == rows - orank
            && coker.torsion() == torsion.as_slice();
        if !ok {
            bad += 1;
        }
    }
    (count, bad)
}
