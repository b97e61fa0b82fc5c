use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};
use crate::mcg::{intersection_form, SpMatrix};

type Q = BigRational;

fn to_q(m: &IntMatrix) -> Vec<Vec<Q>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|v| Q::from_integer(v.clone()))
                .collect()
        })
        .collect()
}

/// Basis of the right kernel of `m` over the rationals.
pub(crate) fn rational_kernel(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (k, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[k][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Signature of a symmetric rational matrix by congruence diagonalization.
pub(crate) fn rational_signature(mut g: Vec<Vec<Q>>) -> i64 {
    let mut sig = 0i64;
    loop {
        let n = g.len();
        if n == 0 {
            return sig;
        }
        let pivot = (0..n).find(|&k| !g[k][k].is_zero());
        let k = match pivot {
            Some(k) => k,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !g[i][j].is_zero())
                else {
                    return sig;
                };
                // replace basis vector i by e_i + e_j, making the diagonal 2 g_ij
                for c in 0..n {
                    let v = g[j][c].clone();
                    g[i][c] += v;
                }
                for r in 0..n {
                    let v = g[r][j].clone();
                    g[r][i] += v;
                }
                i
            }
        };
        let p = g[k][k].clone();
        sig += if p.is_positive() { 1 } else { -1 };
        let mut next = Vec::with_capacity(n - 1);
        for i in (0..n).filter(|&i| i != k) {
            let mut row = Vec::with_capacity(n - 1);
            for j in (0..n).filter(|&j| j != k) {
                row.push(&g[i][j] - &g[i][k] * &g[k][j] / &p);
            }
            next.push(row);
        }
        g = next;
    }
}

/// Meyer's cocycle `τ(A, B)`: the signature of the symmetrization of
/// `((x₁,y₁),(x₂,y₂)) ↦ (x₁+y₁)ᵀ J (I−B) y₂` on
/// `V = {(x,y) : (A⁻¹−I)x + (B−I)y = 0}`.
pub fn meyer_cocycle(a: &SpMatrix, b: &SpMatrix) -> Result<i64> {
    if a.genus() != b.genus() {
        return Err(Error::GenusMismatch(a.genus(), b.genus()));
    }
    if !a.is_symplectic() || !b.is_symplectic() {
        return Err(Error::NotSymplectic);
    }
    let n = 2 * a.genus();
    let id = IntMatrix::identity(n);
    let ainv = a.inverse();
    let left = &ainv.matrix().clone() - &id;
    let right = b.matrix() - &id;
    let system = to_q(&left.hcat(&right)?);
    let basis = rational_kernel(&system, 2 * n);
    if basis.is_empty() {
        return Ok(0);
    }
    // J (I - B), applied to y₂
    let jib = to_q(&(&intersection_form(a.genus()) * &(&id - b.matrix())));
    let images: Vec<Vec<Q>> = basis
        .iter()
        .map(|v| {
            (0..n)
                .map(|i| (0..n).map(|k| &jib[i][k] * &v[n + k]).sum())
                .collect()
        })
        .collect();
    let sums: Vec<Vec<Q>> = basis
        .iter()
        .map(|v| (0..n).map(|i| &v[i] + &v[n + i]).collect())
        .collect();
    let form = |u: usize, w: usize| -> Q { (0..n).map(|i| &sums[u][i] * &images[w][i]).sum() };
    let d = basis.len();
    let two = Q::from_integer(BigInt::from(2));
    let gram: Vec<Vec<Q>> = (0..d)
        .map(|u| (0..d).map(|w| (form(u, w) + form(w, u)) / &two).collect())
        .collect();
    Ok(rational_signature(gram))
}
