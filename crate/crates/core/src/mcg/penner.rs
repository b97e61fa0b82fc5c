use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TwistWord;
use crate::error::{Error, Result};

/// Two multicurves `A` and `B` drawn from the chain `c_1, …, c_{2g+1}`,
/// where `c_i` and `c_j` meet once when `j ≡ i ± 1 mod 2g+1` and are
/// disjoint otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PennerData {
    genus: usize,
    a: BTreeSet<usize>,
    b: BTreeSet<usize>,
    filling: bool,
}

fn chain_intersection(genus: usize, i: usize, j: usize) -> u64 {
    let m = 2 * genus + 1;
    let d = (i + m - j) % m;
    u64::from(d == 1 || d == m - 1)
}

/// Number of boundary circles of a regular neighborhood of a path of `m`
/// curves, each meeting the next once, by tracing faces of the ribbon graph.
fn path_neighborhood_boundaries(m: usize) -> usize {
    // vertex p (0-based, between curves p and p+1) carries half-edges
    // 4p..4p+4 in cyclic order: curve p out, curve p+1 out, curve p in, curve p+1 in
    let v = m - 1;
    let h = 4 * v;
    let rotation = |x: usize| 4 * (x / 4) + (x % 4 + 1) % 4;
    let mut pair = vec![0; h];
    let mut link = |x: usize, y: usize| {
        pair[x] = y;
        pair[y] = x;
    };
    for c in 0..m {
        // curve c passes the vertices c-1 (as curve p+1) and c (as curve p)
        let out_at = |p: usize| if p + 1 == c { 4 * p + 1 } else { 4 * p };
        let in_at = |p: usize| if p + 1 == c { 4 * p + 3 } else { 4 * p + 2 };
        let stops: Vec<usize> = [c.checked_sub(1), (c < v).then_some(c)]
            .into_iter()
            .flatten()
            .collect();
        for (s, &p) in stops.iter().enumerate() {
            let q = stops[(s + 1) % stops.len()];
            link(out_at(p), in_at(q));
        }
    }
    let mut seen = vec![false; h];
    let mut faces = 0;
    for start in 0..h {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = rotation(pair[x]);
        }
    }
    faces
}

impl PennerData {
    /// Validates the families. The filling flag is set only when `A ∪ B` is
    /// a path of `2g` consecutive chain curves whose complement is a single
    /// disk by an Euler characteristic count.
    pub fn new(genus: usize, a: &[usize], b: &[usize]) -> Result<Self> {
        if genus < 1 {
            return Err(Error::Precondition("genus must be at least 1".into()));
        }
        let a: BTreeSet<usize> = a.iter().copied().collect();
        let b: BTreeSet<usize> = b.iter().copied().collect();
        for &k in a.iter().chain(&b) {
            if k == 0 || k > 2 * genus + 1 {
                return Err(Error::Precondition(format!("curve index {k} out of range")));
            }
        }
        if a.intersection(&b).next().is_some() {
            return Err(Error::Precondition("A and B must be disjoint".into()));
        }
        for fam in [&a, &b] {
            for &x in fam {
                for &y in fam {
                    if x < y && chain_intersection(genus, x, y) > 0 {
                        return Err(Error::Precondition(format!(
                            "c{x} and c{y} in the same family intersect"
                        )));
                    }
                }
            }
        }
        let mut pd = PennerData {
            genus,
            a,
            b,
            filling: false,
        };
        pd.filling = pd.certify_filling();
        Ok(pd)
    }

    /// `A = {c_i : i odd}`, `B = {c_i : i even}` for `i ≤ 2g`.
    pub fn chain(genus: usize) -> Result<Self> {
        let a: Vec<usize> = (1..=2 * genus).filter(|i| i % 2 == 1).collect();
        let b: Vec<usize> = (1..=2 * genus).filter(|i| i % 2 == 0).collect();
        PennerData::new(genus, &a, &b)
    }

    fn certify_filling(&self) -> bool {
        // 2g of the 2g+1 cyclically arranged curves always form a path
        if self.a.len() + self.b.len() != 2 * self.genus {
            return false;
        }
        let len = 2 * self.genus;
        let vertices = len - 1;
        let edges = 2 * vertices;
        let boundaries = path_neighborhood_boundaries(len);
        // χ(Σ_g) = χ(N) + #complement components, with equality iff all are disks
        let chi_surface = 2 - 2 * self.genus as i64;
        chi_surface - (vertices as i64 - edges as i64) == boundaries as i64
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn a(&self) -> &BTreeSet<usize> {
        &self.a
    }

    pub fn b(&self) -> &BTreeSet<usize> {
        &self.b
    }

    pub fn is_filling(&self) -> bool {
        self.filling
    }

    pub fn intersection(&self, x: usize, y: usize) -> u64 {
        chain_intersection(self.genus, x, y)
    }

    fn curves(&self) -> Vec<usize> {
        self.a.union(&self.b).copied().collect()
    }

    fn require_filling(&self, w: &TwistWord) -> Result<()> {
        if !self.filling {
            return Err(Error::Precondition(
                "A and B are not certified to fill".into(),
            ));
        }
        if w.genus() != self.genus {
            return Err(Error::GenusMismatch(w.genus(), self.genus));
        }
        Ok(())
    }
}

/// Penner's criterion: positive twists on `A`, negative twists on `B`,
/// and every curve of `A ∪ B` used.
pub fn penner_certify(w: &TwistWord, pd: &PennerData) -> Result<bool> {
    pd.require_filling(w)?;
    let signs_ok = w
        .letters()
        .iter()
        .all(|&(k, e)| (pd.a.contains(&k) && e > 0) || (pd.b.contains(&k) && e < 0));
    let used: BTreeSet<usize> = w.letters().iter().map(|&(k, _)| k).collect();
    let all_used = pd.a.iter().chain(&pd.b).all(|k| used.contains(k));
    Ok(signs_ok && all_used)
}

/// Outcome of [`penner_growth`].
#[derive(Clone, Debug, PartialEq)]
pub struct PennerGrowth {
    pub certified: bool,
    pub lambda_estimate: f64,
}

/// Measure-update matrices `I + E_c` multiplied in application order.
/// `certified` holds when the product is primitive and a power of it has
/// all row sums at least 2; `lambda_estimate` comes from power iteration.
///
/// Words that fail [`penner_certify`] are not errors; they simply do not
/// certify.
pub fn penner_growth(w: &TwistWord, pd: &PennerData) -> Result<PennerGrowth> {
    pd.require_filling(w)?;
    let curves = pd.curves();
    let s = curves.len();
    let pos = |k: usize| curves.iter().position(|&c| c == k);
    let mut steps: Vec<usize> = Vec::new();
    for (k, e) in w.application_letters() {
        let p = pos(k).ok_or_else(|| Error::Precondition(format!("c{k} is not in A or B")))?;
        steps.extend(std::iter::repeat_n(p, e.unsigned_abs() as usize));
    }
    let opposite = |p: usize| -> Vec<(usize, u64)> {
        let c = curves[p];
        let other = if pd.a.contains(&c) { &pd.b } else { &pd.a };
        other
            .iter()
            .filter_map(|&d| {
                let i = pd.intersection(c, d);
                (i > 0).then(|| (pos(d).unwrap(), i))
            })
            .collect()
    };
    let updates: Vec<Vec<(usize, u64)>> = (0..s).map(opposite).collect();

    // exact product, as a matrix acting on column vectors
    let mut prod: Vec<Vec<BigInt>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    for &p in &steps {
        // left-multiply by I + E_p: row p gains Σ i(p,d) · row d
        let mut add = vec![BigInt::zero(); s];
        for &(d, i) in &updates[p] {
            for j in 0..s {
                add[j] += &prod[d][j] * i;
            }
        }
        for j in 0..s {
            prod[p][j] += &add[j];
        }
    }

    let wielandt = (s - 1) * (s - 1) + 1;
    let mut power = prod.clone();
    let mut exp = 1;
    while exp < wielandt {
        power = square(&power);
        exp *= 2;
    }
    let positive = power.iter().all(|r| r.iter().all(|v| !v.is_zero()));
    let two = BigInt::from(2);
    let rows_ok = power.iter().all(|r| r.iter().sum::<BigInt>() >= two);
    let certified = positive && rows_ok && s >= 2;

    Ok(PennerGrowth {
        certified,
        lambda_estimate: power_iteration(s, &steps, &updates),
    })
}

fn square(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let s = m.len();
    (0..s)
        .map(|i| {
            (0..s)
                .map(|j| (0..s).map(|k| &m[i][k] * &m[k][j]).sum())
                .collect()
        })
        .collect()
}

fn power_iteration(s: usize, steps: &[usize], updates: &[Vec<(usize, u64)>]) -> f64 {
    let mut v = vec![1.0 / s as f64; s];
    let mut lambda = 1.0;
    for _ in 0..500 {
        for &p in steps {
            let add: f64 = updates[p].iter().map(|&(d, i)| i as f64 * v[d]).sum();
            v[p] += add;
        }
        let total: f64 = v.iter().sum();
        lambda = total;
        for x in v.iter_mut() {
            *x /= total;
        }
    }
    lambda
}
