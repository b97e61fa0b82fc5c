use std::fmt;

use num_bigint::BigInt;

use super::TwistWord;
use crate::error::{Error, Result};
use crate::invariants::IntMatrix;

/// Intersection form on `H₁(Σ_g)` in the basis `[c_1], …, [c_{2g}]`:
/// `J[i][i+1] = 1`, `J[i+1][i] = −1`.
pub fn intersection_form(genus: usize) -> IntMatrix {
    let n = 2 * genus;
    let mut j = IntMatrix::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        j.set(i, i + 1, BigInt::from(1));
        j.set(i + 1, i, BigInt::from(-1));
    }
    j
}

/// `î(a, b) = aᵀ J b`.
pub fn intersection_number(genus: usize, a: &[i64], b: &[i64]) -> i64 {
    let n = 2 * genus;
    let mut s = 0;
    for i in 0..n.saturating_sub(1) {
        s += a[i] * b[i + 1] - a[i + 1] * b[i];
    }
    s
}

/// Homology class of `c_k`: the basis vector for `k ≤ 2g` and the
/// alternating sum `[c_1] − [c_2] + ⋯ − [c_{2g}]` for `k = 2g+1`.
pub fn curve_class(k: usize, genus: usize) -> Result<Vec<i64>> {
    let n = 2 * genus;
    if k == 0 || k > n + 1 {
        return Err(Error::Precondition(format!(
            "curve index {k} out of range for genus {genus}"
        )));
    }
    if k <= n {
        let mut v = vec![0; n];
        v[k - 1] = 1;
        Ok(v)
    } else {
        Ok((0..n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect())
    }
}

/// An element of `Sp(2g, Z)` for the chain form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpMatrix {
    genus: usize,
    matrix: IntMatrix,
}

impl SpMatrix {
    pub fn new(genus: usize, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != 2 * genus || matrix.cols() != 2 * genus {
            return Err(Error::Precondition(format!(
                "expected a {0}x{0} matrix for genus {genus}",
                2 * genus
            )));
        }
        let m = SpMatrix { genus, matrix };
        if !m.is_symplectic() {
            return Err(Error::NotSymplectic);
        }
        Ok(m)
    }

    pub fn identity(genus: usize) -> Self {
        SpMatrix {
            genus,
            matrix: IntMatrix::identity(2 * genus),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// `MᵀJM = J`.
    pub fn is_symplectic(&self) -> bool {
        let j = intersection_form(self.genus);
        &(&self.matrix.transpose() * &j) * &self.matrix == j
    }

    /// `J⁻¹ Mᵀ J`.
    pub fn inverse(&self) -> SpMatrix {
        let j = intersection_form(self.genus);
        let jinv = j.integer_inverse().expect("chain form is unimodular");
        SpMatrix {
            genus: self.genus,
            matrix: &(&jinv * &self.matrix.transpose()) * &j,
        }
    }

    /// Matrix product `self · other`: `other` acts first.
    pub fn compose(&self, other: &SpMatrix) -> Result<SpMatrix> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch(self.genus, other.genus));
        }
        Ok(SpMatrix {
            genus: self.genus,
            matrix: &self.matrix * &other.matrix,
        })
    }

    pub fn conjugate_by(&self, c: &SpMatrix) -> Result<SpMatrix> {
        c.compose(self)?.compose(&c.inverse())
    }

    /// Image of an integer homology class.
    pub fn act(&self, v: &[i64]) -> Vec<BigInt> {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.matrix.apply(&v)
    }
}

impl fmt::Display for SpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// Transvection `x ↦ x − k î(x, b) b`, i.e. `I + k b bᵀ J`.
fn transvection(genus: usize, b: &[i64], k: i64) -> SpMatrix {
    let n = 2 * genus;
    // row vector bᵀ J
    let bj: Vec<i64> = (0..n)
        .map(|c| {
            let mut s = 0;
            if c >= 1 {
                s += b[c - 1];
            }
            if c + 1 < n {
                s -= b[c + 1];
            }
            s
        })
        .collect();
    let mut m = IntMatrix::identity(n);
    for r in 0..n {
        if b[r] == 0 {
            continue;
        }
        for c in 0..n {
            if bj[c] != 0 {
                let v = m.get(r, c) + BigInt::from(k) * b[r] * bj[c];
                m.set(r, c, v);
            }
        }
    }
    SpMatrix { genus, matrix: m }
}

/// Action of `T_{c_k}^e` on `H₁(Σ_g)`.
pub fn twist_matrix(genus: usize, k: usize, e: i64) -> Result<SpMatrix> {
    Ok(transvection(genus, &curve_class(k, genus)?, e))
}

/// Action of a twist word on `H₁(Σ_g)`; products follow the word's notation.
pub fn twist_action(w: &TwistWord) -> SpMatrix {
    let mut m = SpMatrix::identity(w.genus());
    for (k, e) in w.application_letters() {
        let t = twist_matrix(w.genus(), k, e).expect("letters are in range");
        m = t.compose(&m).expect("same genus");
    }
    m
}

/// The same element computed from the word's own letter order, used as a
/// cross-check of [`twist_action`].
#[cfg(test)]
fn twist_action_left_fold(w: &TwistWord) -> SpMatrix {
    use super::TwistOrder;
    let left = w.with_order(TwistOrder::Left);
    let mut m = SpMatrix::identity(w.genus());
    for &(k, e) in left.letters() {
        m = m.compose(&twist_matrix(w.genus(), k, e).unwrap()).unwrap();
    }
    m
}
