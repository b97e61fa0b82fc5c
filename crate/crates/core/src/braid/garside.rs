use std::fmt;

use super::BraidWord;
use crate::error::{Error, Result};

/// A positive permutation braid, stored as the permutation `π` of
/// `{0, …, n-1}` it induces (strand at position `j` ends at `π[j]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn delta(n: usize) -> Self {
        Permutation((0..n).rev().collect())
    }

    /// The simple braid `σ_i` (1-indexed generator).
    pub fn generator(n: usize, i: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &p)| j == p)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.0.len();
        self.0.iter().enumerate().all(|(j, &p)| p == n - 1 - j)
    }

    fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.0.len()];
        for (j, &p) in self.0.iter().enumerate() {
            inv[p] = j;
        }
        inv
    }

    /// Conjugation by `Δ`, sending `σ_i` to `σ_{n-i}`.
    fn flip(&self) -> Self {
        let n = self.0.len();
        Permutation((0..n).map(|j| n - 1 - self.0[n - 1 - j]).collect())
    }

    fn flip_times(&self, k: usize) -> Self {
        if k % 2 == 1 {
            self.flip()
        } else {
            self.clone()
        }
    }

    /// `Δ σ_i^{-1}` as a simple braid.
    fn delta_complement(n: usize, i: usize) -> Self {
        let mut p = Permutation::delta(n);
        // right-multiplying by σ_i^{-1} swaps the values i-1, i
        let a = n - i;
        let b = n - 1 - i;
        p.0.swap(a, b);
        p
    }

    /// Generators `σ_i` with `self = σ_i · x` for a simple `x`.
    fn starting_set(&self) -> Vec<usize> {
        (0..self.0.len().saturating_sub(1))
            .filter(|&i| self.0[i] > self.0[i + 1])
            .collect()
    }

    /// Generators `σ_i` with `self = x · σ_i` for a simple `x`.
    fn finishing_set(&self) -> Vec<bool> {
        let inv = self.inverse();
        (0..self.0.len().saturating_sub(1))
            .map(|i| inv[i] > inv[i + 1])
            .collect()
    }

    /// One positive word for this simple braid.
    pub fn to_letters(&self) -> Vec<usize> {
        // bubble sort; the k-th swap is the k-th letter
        let mut p = self.0.clone();
        let mut out = Vec::new();
        loop {
            let mut swapped = false;
            for i in 0..p.len().saturating_sub(1) {
                if p[i] > p[i + 1] {
                    p.swap(i, i + 1);
                    out.push(i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| (p + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Left normal form `Δ^inf · A_1 ⋯ A_k` with every `A_j` simple, neither `Δ`
/// nor the identity, and every pair `(A_j, A_{j+1})` left-weighted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideForm {
    strands: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

impl GarsideForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// True for powers of the full twist `Δ²`, which generate the center.
    pub fn is_central(&self) -> bool {
        self.factors.is_empty() && self.inf % 2 == 0
    }

    /// A word representing the same braid.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut units: Vec<i32> = Vec::new();
        let delta_units: Vec<i32> = Permutation::delta(n)
            .to_letters()
            .into_iter()
            .map(|i| i as i32)
            .collect();
        for _ in 0..self.inf.unsigned_abs() {
            if self.inf > 0 {
                units.extend(&delta_units);
            } else {
                units.extend(delta_units.iter().rev().map(|u| -u));
            }
        }
        for a in &self.factors {
            units.extend(a.to_letters().into_iter().map(|i| i as i32));
        }
        BraidWord::from_units(n, &units)
    }
}

impl fmt::Display for GarsideForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Delta^{}", self.inf)?;
        for a in &self.factors {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

/// Makes `(a, b)` left-weighted in place, returning whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut changed = false;
    loop {
        let fin = a.finishing_set();
        let Some(i) = b.starting_set().into_iter().find(|&i| !fin[i]) else {
            return changed;
        };
        // a ← a σ_i : swap the values i, i+1
        for v in a.0.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        // b ← σ_i^{-1} b : swap positions i, i+1
        b.0.swap(i, i + 1);
        changed = true;
    }
}

/// Computes the left normal form of a braid word.
pub fn garside_normal_form(w: &BraidWord) -> GarsideForm {
    let n = w.strands();
    let mut inf: i64 = 0;
    let mut flips_total = 0usize;
    // each factor is recorded with the flip count at the moment it was pushed
    let mut raw: Vec<(Permutation, usize)> = Vec::new();
    for u in w.unit_letters() {
        let i = u.unsigned_abs() as usize;
        if u > 0 {
            raw.push((Permutation::generator(n, i), flips_total));
        } else {
            // Δ^p F σ_i^{-1} = Δ^{p-1} τ(F) (Δ σ_i^{-1})
            inf -= 1;
            flips_total += 1;
            raw.push((Permutation::delta_complement(n, i), flips_total));
        }
    }
    let mut factors: Vec<Permutation> = Vec::new();
    for (p, at) in raw {
        factors.push(p.flip_times(flips_total - at));
        let mut k = factors.len() - 1;
        while k > 0 {
            let (left, right) = factors.split_at_mut(k);
            if !left_weight(&mut left[k - 1], &mut right[0]) {
                break;
            }
            k -= 1;
        }
    }
    // Δ factors collect at the front, identities at the back
    let leading = factors.iter().take_while(|p| p.is_delta()).count();
    inf += leading as i64;
    let rest: Vec<Permutation> = factors
        .into_iter()
        .skip(leading)
        .filter(|p| !p.is_identity())
        .collect();
    GarsideForm {
        strands: n,
        inf,
        factors: rest,
    }
}

/// Decides equality in `B_n` through left normal forms.
pub fn garside_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    Ok(garside_normal_form(a) == garside_normal_form(b))
}
