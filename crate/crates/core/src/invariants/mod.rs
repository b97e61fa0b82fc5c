//! Integer invariants of surface bundles: Smith normal form, first homology
//! of the total space and the signature through Meyer's cocycle.

mod matrix;
mod meyer;
mod snf;

use crate::error::{Error, Result};
use crate::mcg::SpMatrix;

pub use matrix::IntMatrix;
pub use meyer::meyer_cocycle;
pub use snf::{smith_normal_form, AbelianGroupInvariants};

/// `2g × 2g·k` matrix whose columns span the images of `M − I` over all
/// actions `M`. Its cokernel is the coinvariant quotient `H₁(F)/π₁(B)`.
pub fn relation_matrix(genus: usize, actions: &[SpMatrix]) -> Result<IntMatrix> {
    let n = 2 * genus;
    let id = IntMatrix::identity(n);
    let mut out = IntMatrix::zeros(n, 0);
    for m in actions {
        if m.genus() != genus {
            return Err(Error::GenusMismatch(genus, m.genus()));
        }
        out = out.hcat(&(m.matrix() - &id))?;
    }
    Ok(out)
}

/// `H₁(X) ≅ Z^{2h} ⊕ H₁(F)/⟨(M − I)x⟩` for a bundle whose base has genus
/// `h` and whose monodromy generators act by `actions`.
pub fn h1_from_actions(
    base_genus: usize,
    genus: usize,
    actions: &[SpMatrix],
) -> Result<AbelianGroupInvariants> {
    let (coinv, _) = smith_normal_form(&relation_matrix(genus, actions)?);
    Ok(AbelianGroupInvariants::free(2 * base_genus).direct_sum(&coinv))
}

/// `2h + (2g − rank of the relation matrix over Z/n)`, counting a summand
/// `Z/d` of the coinvariants as a full `Z/n` exactly when `n | d`.
pub fn h1_mod_n_from_actions(
    base_genus: usize,
    genus: usize,
    actions: &[SpMatrix],
    n: u64,
) -> Result<usize> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "modulus must be >= 2, got {n}"
        )));
    }
    let (coinv, _) = smith_normal_form(&relation_matrix(genus, actions)?);
    Ok(2 * base_genus + coinv.rank_mod(n))
}

/// `Σ_{i=1}^{m-1} τ(g₁⋯g_i, g_{i+1})` for a relator `g₁⋯g_m = I`.
pub fn signature_of_relator(letters: &[SpMatrix]) -> Result<i64> {
    let Some(first) = letters.first() else {
        return Ok(0);
    };
    let mut partial = first.clone();
    let mut total = 0;
    for g in &letters[1..] {
        total += meyer_cocycle(&partial, g)?;
        partial = partial.compose(g)?;
    }
    if !partial.matrix().is_identity() {
        return Err(Error::Verification(
            "relator does not act trivially on homology".into(),
        ));
    }
    Ok(total)
}
