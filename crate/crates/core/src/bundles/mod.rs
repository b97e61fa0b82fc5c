//! Monodromy factorizations `Π_j [A_j, B_j] = 1` of surface bundles over
//! surfaces: generation, verification at several levels, fiber and section
//! sums, and indecomposability certificates.

mod generate;
mod report;

use std::fmt;
use std::str::FromStr;

use crate::braid::{garside_normal_form, BraidWord};
use crate::error::{Error, Result};
use crate::invariants::{h1_from_actions, AbelianGroupInvariants};
use crate::mcg::{expand_c2g1, twist_action, twists_to_braid, SpMatrix, TwistOrder, TwistWord};
use crate::raag::{normal_form, LabeledGraph};
use crate::word::Word;

pub use generate::{
    generate_torus_bundle, generate_xn, generate_xn_with, kim_word, pairing_tables, phi_k,
    restore_raag_lift, step_six_word, KimWord, PairingTable, XnOptions,
};
pub use report::{
    homotopy_separation, indecomposability_report, indecomposability_report_with,
    torus_bundle_report, CertificateReport, Check, SeparationReport,
};

/// A level at which `Π_j [A_j, B_j] = 1` can be checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    /// Empty normal form of the relator's preimage in `A(C̄_{2g+1})`.
    Raag,
    /// Identity Garside form of the lifted relator in `B_{2g+1}`.
    Braid,
    /// Identity action on `H₁(Σ_g)`.
    Homology,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Raag => "raag",
            Level::Braid => "braid",
            Level::Homology => "homology",
        })
    }
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raag" => Ok(Level::Raag),
            "braid" => Ok(Level::Braid),
            "homology" => Ok(Level::Homology),
            _ => Err(Error::Parse(format!("unknown verification level `{s}`"))),
        }
    }
}

/// Preimages of the pairs in `A(C̄_{2g+1})`, kept when a factorization comes
/// out of the embedding pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaagLift {
    pub graph: LabeledGraph,
    pub pairs: Vec<(Word, Word)>,
}

/// `h` pairs of twist words on `Σ_g`, written in functional notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyFactorization {
    fiber_genus: usize,
    base_genus: usize,
    pairs: Vec<(TwistWord, TwistWord)>,
    verified: Vec<Level>,
    provenance: String,
    raag: Option<RaagLift>,
}

impl MonodromyFactorization {
    pub fn new(
        fiber_genus: usize,
        base_genus: usize,
        pairs: Vec<(TwistWord, TwistWord)>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        if fiber_genus < 2 {
            return Err(Error::Precondition(format!(
                "fiber genus must be >= 2, got {fiber_genus}"
            )));
        }
        if base_genus < 1 {
            return Err(Error::Precondition("base genus must be >= 1".into()));
        }
        if pairs.len() != base_genus {
            return Err(Error::Precondition(format!(
                "base genus {base_genus} needs {base_genus} pairs, got {}",
                pairs.len()
            )));
        }
        for (a, b) in &pairs {
            for w in [a, b] {
                if w.genus() != fiber_genus {
                    return Err(Error::GenusMismatch(fiber_genus, w.genus()));
                }
            }
        }
        let pairs = pairs
            .into_iter()
            .map(|(a, b)| {
                (
                    a.with_order(TwistOrder::Left),
                    b.with_order(TwistOrder::Left),
                )
            })
            .collect();
        Ok(MonodromyFactorization {
            fiber_genus,
            base_genus,
            pairs,
            verified: Vec::new(),
            provenance: provenance.into(),
            raag: None,
        })
    }

    pub fn fiber_genus(&self) -> usize {
        self.fiber_genus
    }

    pub fn base_genus(&self) -> usize {
        self.base_genus
    }

    pub fn pairs(&self) -> &[(TwistWord, TwistWord)] {
        &self.pairs
    }

    pub fn verified(&self) -> &[Level] {
        &self.verified
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn raag_lift(&self) -> Option<&RaagLift> {
        self.raag.as_ref()
    }

    pub(crate) fn with_raag(mut self, lift: RaagLift) -> Self {
        self.raag = Some(lift);
        self
    }

    /// Runs the given checks and records the levels that passed.
    pub fn verify_levels(&mut self, levels: &[Level]) -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for &l in levels {
            let r = verify_factorization(self, l)?;
            if r.passed && !self.verified.contains(&l) {
                self.verified.push(l);
                self.verified.sort();
            }
            out.push(r);
        }
        Ok(out)
    }

    /// Relator letters in the order they are traversed:
    /// `A_1, B_1, A_1⁻¹, B_1⁻¹, A_2, …`.
    pub fn traversal(&self) -> Vec<TwistWord> {
        let mut out = Vec::with_capacity(4 * self.pairs.len());
        for (a, b) in &self.pairs {
            out.push(a.clone());
            out.push(b.clone());
            out.push(a.inverse());
            out.push(b.inverse());
        }
        out
    }

    /// Homology actions of `A_1, B_1, …, A_h, B_h`.
    pub fn actions(&self) -> Vec<SpMatrix> {
        self.pairs
            .iter()
            .flat_map(|(a, b)| [twist_action(a), twist_action(b)])
            .collect()
    }

    /// Conjugates every word by `c` (functional notation: `c w c⁻¹`).
    pub fn conjugate_by(&self, c: &TwistWord) -> Result<Self> {
        let c = c.with_order(TwistOrder::Left);
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| Ok((a.conjugate_by(&c)?, b.conjugate_by(&c)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut f =
            MonodromyFactorization::new(self.fiber_genus, self.base_genus, pairs, "conjugate")?;
        f.verify_levels(&[Level::Homology])?;
        Ok(f)
    }
}

impl fmt::Display for MonodromyFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bundle v1")?;
        writeln!(f, "fiber-genus {}", self.fiber_genus)?;
        writeln!(f, "base-genus {}", self.base_genus)?;
        writeln!(f, "order left")?;
        for (j, (a, b)) in self.pairs.iter().enumerate() {
            writeln!(
                f,
                "pair {}: A = {} | B = {}",
                j + 1,
                a.letters_to_string(),
                b.letters_to_string()
            )?;
        }
        if self.verified.is_empty() {
            writeln!(f, "verified: none")?;
        } else {
            let v: Vec<String> = self.verified.iter().map(Level::to_string).collect();
            writeln!(f, "verified: {}", v.join(" "))?;
        }
        writeln!(f, "provenance: {}", self.provenance)
    }
}

fn expect_line<'a>(lines: &mut impl Iterator<Item = &'a str>, what: &str) -> Result<&'a str> {
    lines
        .next()
        .ok_or_else(|| Error::Parse(format!("unexpected end of file, expected {what}")))
}

fn parse_number(line: &str, key: &str) -> Result<usize> {
    line.strip_prefix(key)
        .map(str::trim)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected `{key} <n>`, got `{line}`")))
}

impl FromStr for MonodromyFactorization {
    type Err = Error;

    /// Reads the `bundle v1` format. The `verified:` line is read back as
    /// recorded; run [`verify_factorization`] to re-establish it.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        if expect_line(&mut lines, "header")? != "bundle v1" {
            return Err(Error::Parse("first line must be `bundle v1`".into()));
        }
        let g = parse_number(expect_line(&mut lines, "fiber-genus")?, "fiber-genus")?;
        let h = parse_number(expect_line(&mut lines, "base-genus")?, "base-genus")?;
        let order: TwistOrder = expect_line(&mut lines, "order")?
            .strip_prefix("order")
            .map(str::trim)
            .ok_or_else(|| Error::Parse("expected `order left`".into()))?
            .parse()?;
        let mut pairs = Vec::new();
        let mut verified = Vec::new();
        let mut provenance = None;
        for line in lines {
            if let Some(rest) = line.strip_prefix("pair ") {
                let (idx, body) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("bad pair line `{line}`")))?;
                if idx.trim().parse::<usize>().ok() != Some(pairs.len() + 1) {
                    return Err(Error::Parse(format!(
                        "pair index out of sequence in `{line}`"
                    )));
                }
                let (a, b) = body.split_once('|').ok_or_else(|| {
                    Error::Parse(format!("pair line needs `A = ... | B = ...`: `{line}`"))
                })?;
                let a = a
                    .trim()
                    .strip_prefix("A =")
                    .ok_or_else(|| Error::Parse(format!("missing `A =` in `{line}`")))?;
                let b = b
                    .trim()
                    .strip_prefix("B =")
                    .ok_or_else(|| Error::Parse(format!("missing `B =` in `{line}`")))?;
                pairs.push((
                    TwistWord::parse_letters(g, order, a)?,
                    TwistWord::parse_letters(g, order, b)?,
                ));
            } else if let Some(rest) = line.strip_prefix("verified:") {
                for tok in rest.split_whitespace() {
                    if tok != "none" {
                        verified.push(tok.parse::<Level>()?);
                    }
                }
            } else if let Some(rest) = line.strip_prefix("provenance:") {
                provenance = Some(rest.trim().to_string());
            } else {
                return Err(Error::Parse(format!("unrecognized line `{line}`")));
            }
        }
        let mut f = MonodromyFactorization::new(g, h, pairs, provenance.unwrap_or_default())
            .map_err(|e| match e {
                Error::Parse(_) => e,
                other => Error::Parse(other.to_string()),
            })?;
        verified.sort();
        verified.dedup();
        f.verified = verified;
        Ok(f)
    }
}

/// Outcome of one verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub level: Level,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({})",
            self.level,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

/// Braid word of the relator `A_1 B_1 A_1⁻¹ B_1⁻¹ ⋯` read in application order.
pub fn relator_braid(f: &MonodromyFactorization) -> Result<BraidWord> {
    let mut out = BraidWord::identity(2 * f.fiber_genus + 1);
    for w in f.traversal() {
        out = out.concat(&twists_to_braid(&w)?)?;
    }
    Ok(out)
}

/// Homology action of the whole relator.
pub fn relator_action(f: &MonodromyFactorization) -> SpMatrix {
    let mut m = SpMatrix::identity(f.fiber_genus);
    for w in f.traversal() {
        m = twist_action(&w).compose(&m).expect("same genus");
    }
    m
}

/// Checks `Π_j [A_j, B_j] = 1` at one level.
pub fn verify_factorization(
    f: &MonodromyFactorization,
    level: Level,
) -> Result<VerificationReport> {
    let (passed, detail) = match level {
        Level::Homology => {
            let m = relator_action(f);
            if m.is_identity() {
                (true, "relator acts trivially on H1".to_string())
            } else {
                (false, format!("relator acts on H1 by\n{m}"))
            }
        }
        Level::Braid => {
            let w = relator_braid(f)?;
            let nf = garside_normal_form(&w);
            if nf.is_identity() {
                (
                    true,
                    format!(
                        "relator of {} letters has identity Garside form",
                        w.unit_letters().len()
                    ),
                )
            } else {
                (false, format!("relator normal form {nf}"))
            }
        }
        Level::Raag => {
            let lift = f.raag.as_ref().ok_or_else(|| {
                Error::Precondition("raag-level check needs pipeline provenance".into())
            })?;
            let mut rel = Word::empty();
            for (a, b) in &lift.pairs {
                rel = rel.concat(&Word::commutator(a, b));
            }
            let nf = normal_form(&rel, &lift.graph)?;
            if nf.is_empty() {
                (
                    true,
                    format!(
                        "relator of {} letters has empty normal form",
                        rel.unit_length()
                    ),
                )
            } else {
                (false, format!("relator normal form {nf}"))
            }
        }
    };
    Ok(VerificationReport {
        level,
        passed,
        detail,
    })
}

fn require_homology(f: &MonodromyFactorization) -> Result<()> {
    if verify_factorization(f, Level::Homology)?.passed {
        Ok(())
    } else {
        Err(Error::Verification(
            "factorization fails the homology check".into(),
        ))
    }
}

/// `H₁(X) = Z^{2h} ⊕ H₁(F)/⟨(M − I)x⟩`.
pub fn h1_total_space(f: &MonodromyFactorization) -> Result<AbelianGroupInvariants> {
    require_homology(f)?;
    h1_from_actions(f.base_genus, f.fiber_genus, &f.actions())
}

/// `2h + (2g − rank of the relation matrix over Z/n)`.
pub fn h1_mod_n(f: &MonodromyFactorization, n: u64) -> Result<usize> {
    require_homology(f)?;
    crate::invariants::h1_mod_n_from_actions(f.base_genus, f.fiber_genus, &f.actions(), n)
}

/// Signature of the total space from Meyer's cocycle along the relator.
pub fn signature(f: &MonodromyFactorization) -> Result<i64> {
    require_homology(f)?;
    // the relator in application order is M_m ⋯ M_1 = I, so the inverses
    // multiply to the identity from left to right
    let letters: Vec<SpMatrix> = f
        .traversal()
        .iter()
        .map(|w| twist_action(w).inverse())
        .collect();
    crate::invariants::signature_of_relator(&letters)
}

/// Fiber sum: `f1`'s pairs conjugated by `φ`, followed by `f2`'s pairs.
pub fn fiber_sum(
    f1: &MonodromyFactorization,
    f2: &MonodromyFactorization,
    phi: &TwistWord,
) -> Result<MonodromyFactorization> {
    if f1.fiber_genus != f2.fiber_genus {
        return Err(Error::GenusMismatch(f1.fiber_genus, f2.fiber_genus));
    }
    if phi.genus() != f1.fiber_genus {
        return Err(Error::GenusMismatch(f1.fiber_genus, phi.genus()));
    }
    let phi = phi.with_order(TwistOrder::Left);
    let mut pairs = Vec::new();
    for (a, b) in &f1.pairs {
        pairs.push((a.conjugate_by(&phi)?, b.conjugate_by(&phi)?));
    }
    pairs.extend(f2.pairs.iter().cloned());
    let mut f = MonodromyFactorization::new(
        f1.fiber_genus,
        f1.base_genus + f2.base_genus,
        pairs,
        format!("fiber-sum glue={}", phi.letters_to_string()),
    )?;
    f.verify_levels(&[Level::Homology])?;
    Ok(f)
}

/// `T_γ` for the boundary `γ` of the left chain `c_1, …, c_{2g₁}`:
/// `(T_{c_1} ⋯ T_{c_{2g₁}})^{4g₁+2}` written on `Σ_g`.
pub fn chain_boundary_twist(left_genus: usize, genus: usize, power: i64) -> Result<TwistWord> {
    let row = TwistWord::new(
        genus,
        TwistOrder::Left,
        (1..=2 * left_genus).map(|k| (k, 1)).collect(),
    )?;
    Ok(row.pow((4 * left_genus as i64 + 2) * power))
}

fn product_of_commutators(pairs: &[(TwistWord, TwistWord)], genus: usize) -> Result<TwistWord> {
    // traversal order A B A⁻¹ B⁻¹, written in functional notation
    let mut out = TwistWord::identity(genus, TwistOrder::Right);
    for (a, b) in pairs {
        for w in [a.clone(), b.clone(), a.inverse(), b.inverse()] {
            out = out.concat(&w.with_order(TwistOrder::Right))?;
        }
    }
    Ok(out.with_order(TwistOrder::Left))
}

fn reindex(w: &TwistWord, genus: usize, shift: usize, limit: usize) -> Result<TwistWord> {
    let mut letters = Vec::new();
    for &(k, e) in w.letters() {
        if k > limit {
            return Err(Error::Precondition(format!(
                "curve c{k} has no place on the right chain (only c1..c{limit} can be re-indexed)"
            )));
        }
        letters.push((k + shift, e));
    }
    TwistWord::new(genus, w.order(), letters)
}

/// Section sum of a genus-`g₁` and a genus-`g₂` factorization over the same
/// base. `f1` is expanded onto `c_1, …, c_{2g₁}` and `f2` is moved to
/// `c_{2g₁+2}, …, c_{2(g₁+g₂)}`, so only its curves `c_1, …, c_{2g₂−1}` can
/// be carried over. Pairs are `(φ A⁺ φ⁻¹ · A⁻, φ B⁺ φ⁻¹ · B⁻)`.
///
/// With `lift ≠ 0` the left product must equal `T_γ^{lift}` and the right
/// product `T_γ^{−lift}`, where `T_γ` is the chain-relation word. A boundary
/// twist has nonzero exponent sum, so it is never a product of commutators
/// in the braid group; those checks run at the homology level only.
pub fn section_sum(
    f1: &MonodromyFactorization,
    f2: &MonodromyFactorization,
    lift: i64,
    phi: &TwistWord,
) -> Result<MonodromyFactorization> {
    if f1.base_genus != f2.base_genus {
        return Err(Error::Precondition(format!(
            "base genera differ: {} vs {}",
            f1.base_genus, f2.base_genus
        )));
    }
    let (g1, g2) = (f1.fiber_genus, f2.fiber_genus);
    let g = g1 + g2;
    if phi.genus() != g1 {
        return Err(Error::GenusMismatch(g1, phi.genus()));
    }
    let left = |w: &TwistWord| -> Result<TwistWord> {
        let e = expand_c2g1(&w.with_order(TwistOrder::Left));
        TwistWord::new(g, TwistOrder::Left, e.letters().to_vec())
    };
    let right = |w: &TwistWord| reindex(&w.with_order(TwistOrder::Left), g, 2 * g1 + 1, 2 * g2 - 1);
    let phi = left(phi)?;

    let left_pairs = f1
        .pairs
        .iter()
        .map(|(a, b)| Ok((left(a)?, left(b)?)))
        .collect::<Result<Vec<_>>>()?;
    let right_pairs = f2
        .pairs
        .iter()
        .map(|(a, b)| Ok((right(a)?, right(b)?)))
        .collect::<Result<Vec<_>>>()?;

    let lp = product_of_commutators(&left_pairs, g)?;
    let rp = product_of_commutators(&right_pairs, g)?;
    if lift == 0 {
        for (side, p) in [("left", &lp), ("right", &rp)] {
            if !garside_normal_form(&twists_to_braid(p)?).is_identity() {
                return Err(Error::Verification(format!(
                    "{side} relator is not trivial in the braid group"
                )));
            }
        }
    } else {
        let t = chain_boundary_twist(g1, g, lift)?;
        if twist_action(&lp) != twist_action(&t) || twist_action(&rp) != twist_action(&t.inverse())
        {
            return Err(Error::Verification(format!(
                "commutator products do not act like T_gamma^(+-{lift}) on H1"
            )));
        }
    }

    let mut pairs = Vec::new();
    for ((a1, b1), (a2, b2)) in left_pairs.iter().zip(&right_pairs) {
        pairs.push((
            a1.conjugate_by(&phi)?.concat(a2)?,
            b1.conjugate_by(&phi)?.concat(b2)?,
        ));
    }
    let mut f = MonodromyFactorization::new(
        g,
        f1.base_genus,
        pairs,
        format!("section-sum lift={lift} glue={}", phi.letters_to_string()),
    )?;
    if lift == 0 && g <= 8 {
        f.verify_levels(&[Level::Braid, Level::Homology])?;
    } else {
        f.verify_levels(&[Level::Homology])?;
    }
    Ok(f)
}
