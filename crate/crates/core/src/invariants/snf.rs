use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// A finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ ⋯ ⊕ Z/d_t` with
/// `d_1 | d_2 | ⋯ | d_t` and every `d_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupInvariants {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    pub fn free(rank: usize) -> Self {
        AbelianGroupInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z^free ⊕ ⨁ Z/o` for arbitrary orders, normalized to invariant
    /// factors. An order of 0 contributes a free summand.
    pub fn from_cyclic(free: usize, orders: &[BigInt]) -> Self {
        let n = orders.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, o) in orders.iter().enumerate() {
            m.set(i, i, o.clone());
        }
        let (g, _) = smith_normal_form(&m);
        AbelianGroupInvariants {
            free_rank: free + g.free_rank,
            torsion: g.torsion,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroupInvariants) -> Self {
        let orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        AbelianGroupInvariants::from_cyclic(self.free_rank + other.free_rank, &orders)
    }

    /// Number of summands that survive as a full `Z/n` after tensoring with
    /// `Z/n`: the free ones and the `Z/d` with `n | d`. For prime `n` this
    /// is the dimension of the tensor product over `F_n`.
    pub fn rank_mod(&self, n: u64) -> usize {
        let n = BigInt::from(n);
        self.free_rank + self.torsion.iter().filter(|d| d.is_multiple_of(&n)).count()
    }
}

impl fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z^{}", self.free_rank)?;
        for d in &self.torsion {
            write!(f, " (+) Z/{d}")?;
        }
        Ok(())
    }
}

fn swap_rows(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    a.swap(i, j);
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Position of the smallest nonzero `|entry|` in the lower-right block.
fn smallest(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Invariant factors of the cokernel `Z^rows / (column space of m)`,
/// together with the rank of `m`.
pub fn smith_normal_form(m: &IntMatrix) -> (AbelianGroupInvariants, usize) {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest(&a, t) else {
            break;
        };
        swap_rows(&mut a, t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let p = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&p);
                    for j in t..cols {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&p);
                    for i in t..rows {
                        let d = &q * &a[i][t];
                        a[i][j] -= d;
                    }
                    dirty |= !a[t][j].is_zero();
                }
            }
            if dirty {
                // a remainder smaller than the pivot appeared; move it in
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                swap_rows(&mut a, t, best.0);
                swap_cols(&mut a, t, best.1);
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        t += 1;
    }
    let torsion: Vec<BigInt> = (0..t)
        .map(|i| a[i][i].abs())
        .filter(|d| !d.is_one())
        .collect();
    (
        AbelianGroupInvariants {
            free_rank: rows - t,
            torsion,
        },
        t,
    )
}
