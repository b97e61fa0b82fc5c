use super::{verify_factorization, Level, MonodromyFactorization, RaagLift};
use crate::braid::lonne_embedding;
use crate::dissection::{covering_pullback, surface_generators, HomRecord};
use crate::error::{Error, Result};
use crate::mcg::{generator_word_to_twists, TwistOrder, TwistWord};
use crate::raag::{co_contraction, kim_embedding, normal_form, LabeledGraph, COLLAPSED_VERTEX};
use crate::word::{GroupMap, MapOrder, Word};

/// Choice of the Kim word `w` sent to the collapsed vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum KimWord {
    /// `v₄ v₅⁻¹ v₆ ⋯ v_{2g} ⋯ v₆ v₅⁻¹ v₄`, exponent `(−1)^i` on `v_i`;
    /// just `v₄` when `g = 2`.
    #[default]
    Palindrome,
    /// `v₄²`, only meaningful for `g = 2`.
    Square,
}

/// Options for [`generate_xn_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct XnOptions {
    pub kim_word: KimWord,
    /// End the image of `δ₁` with `T_{c_{2g+1}}^{−1}` instead of `T_{c_{2g+1}}^{−n}`.
    pub literal_delta1: bool,
}

/// `w` for the collapsed set `{v₄, …, v_{2g}}` of `C̄_{2g+1}`.
pub fn kim_word(g: usize, variant: KimWord) -> Result<Word> {
    if g < 2 {
        return Err(Error::Precondition(format!(
            "fiber genus must be >= 2, got {g}"
        )));
    }
    match variant {
        KimWord::Square if g == 2 => return Ok(Word::from_pairs([("v4", 2)])),
        KimWord::Square => {
            return Err(Error::Precondition(
                "the squared Kim word is only defined for g = 2".into(),
            ))
        }
        KimWord::Palindrome => {}
    }
    let sign = |i: usize| if i % 2 == 0 { 1 } else { -1 };
    let mut pairs: Vec<(String, i64)> = (4..=2 * g).map(|i| (format!("v{i}"), sign(i))).collect();
    pairs.extend((4..2 * g).rev().map(|i| (format!("v{i}"), sign(i))));
    Ok(Word::from_pairs(pairs))
}

/// A way of reading `Π_j [A_j, B_j]` off the generators of `π₁(Σ_h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairingTable {
    pub id: &'static str,
    swap: bool,
    invert: bool,
    delta_first: bool,
}

impl PairingTable {
    /// Pairs of surface words, one per handle.
    pub fn pairs(&self, h: usize) -> Vec<(Word, Word)> {
        let gens = surface_generators(h);
        let mut blocks: Vec<(Word, Word)> = gens
            .chunks(2)
            .map(|c| (Word::generator(c[0].clone()), Word::generator(c[1].clone())))
            .collect();
        if self.delta_first {
            blocks.rotate_left(1);
        }
        blocks
            .into_iter()
            .map(|(x, y)| {
                let (x, y) = if self.swap { (y, x) } else { (x, y) };
                if self.invert {
                    (x.inverse(), y.inverse())
                } else {
                    (x, y)
                }
            })
            .collect()
    }

    /// The relator `Π_j [A_j, B_j]` as a surface word.
    pub fn relator(&self, h: usize) -> Word {
        self.pairs(h).iter().fold(Word::empty(), |acc, (a, b)| {
            acc.concat(&Word::commutator(a, b))
        })
    }
}

/// Candidate tables, tried in this order.
pub fn pairing_tables() -> Vec<PairingTable> {
    let t = |id, swap, invert, delta_first| PairingTable {
        id,
        swap,
        invert,
        delta_first,
    };
    vec![
        t("natural", false, false, false),
        t("swapped", true, false, false),
        t("inverted", false, true, false),
        t("swapped-inverted", true, true, false),
        t("delta-first", false, false, true),
        t("delta-first-swapped", true, false, true),
    ]
}

/// The pipeline `π₁(Σ_h) → π₁(Σ₂) → A(C̄₅) ≅ A(CO̅) → A(C̄_{2g+1}) → B_{2g+1}`.
struct Pipeline {
    genus: usize,
    big: LabeledGraph,
    /// `π₁(Σ₂) → A(C̄_{2g+1})`.
    to_big: GroupMap,
    /// Images of `γ₁, γ₂, δ₁, δ₂` in right order (braid letter order).
    mu2: Vec<(String, TwistWord)>,
}

impl Pipeline {
    fn new(g: usize, n: u64, opts: &XnOptions) -> Result<Self> {
        let record = HomRecord::sigma2();
        let big = LabeledGraph::cycle_opposite(2 * g + 1);
        let s: Vec<String> = (4..=2 * g).map(|i| format!("v{i}")).collect();
        let w = kim_word(g, opts.kim_word)?;
        let co = co_contraction(&big, &s)?;
        let top = format!("v{}", 2 * g + 1);
        let targets = ["v1", "v2", "v3", COLLAPSED_VERTEX, top.as_str()];
        let map: Vec<usize> = targets
            .iter()
            .map(|t| co.index_of(t))
            .collect::<Result<_>>()?;
        if !record.graph.is_isomorphism(&co, &map) {
            return Err(Error::Verification(format!(
                "C5 complement does not match the co-contraction of C{} complement",
                2 * g + 1
            )));
        }
        let relabel = GroupMap::new(
            record.graph.vertices().to_vec(),
            co.vertices().to_vec(),
            targets.iter().map(|t| Word::generator(*t)).collect(),
            MapOrder::Homomorphism,
        )?;
        let kim = kim_embedding(&big, &s, &w)?;
        let to_big = record.map.then(&relabel)?.then(&kim)?;
        let lonne = lonne_embedding(g, n)?;

        let mut mu2 = Vec::new();
        for x in surface_generators(2) {
            let img = lonne.apply(&to_big.apply(&Word::generator(x.clone()))?)?;
            let mut left = generator_word_to_twists(&img, g)?;
            if opts.literal_delta1 && x == "d1" {
                let mut letters = left.letters().to_vec();
                match letters.last_mut() {
                    Some(last) if last.0 == 2 * g + 1 => last.1 = -1,
                    _ => {
                        return Err(Error::Verification(
                            "unexpected shape of the d1 image".into(),
                        ))
                    }
                }
                left = TwistWord::new(g, TwistOrder::Left, letters)?;
            }
            mu2.push((x, left.with_order(TwistOrder::Right)));
        }
        Ok(Pipeline {
            genus: g,
            big,
            to_big,
            mu2,
        })
    }

    /// Image of a `π₁(Σ₂)` word in functional notation.
    fn twist_image(&self, v: &Word) -> Result<TwistWord> {
        let mut out = TwistWord::identity(self.genus, TwistOrder::Right);
        for (x, e) in v.unit_letters() {
            let img = &self
                .mu2
                .iter()
                .find(|(name, _)| name == x)
                .ok_or_else(|| Error::UnknownGenerator(x.to_string()))?
                .1;
            let img = if e > 0 { img.clone() } else { img.inverse() };
            out = out.concat(&img)?;
        }
        Ok(out.with_order(TwistOrder::Left))
    }

    fn raag_image(&self, v: &Word) -> Result<Word> {
        normal_form(&self.to_big.apply(v)?, &self.big)
    }
}

fn check_xn_params(g: usize, h: usize, n: u64) -> Result<()> {
    if g < 2 {
        return Err(Error::Precondition(format!(
            "fiber genus must be >= 2, got {g}"
        )));
    }
    if h < 2 {
        return Err(Error::Precondition(format!(
            "base genus must be >= 2, got {h}"
        )));
    }
    if n < 3 {
        return Err(Error::Precondition(format!(
            "n = {n} violates the Lonne hypothesis n not in {{1, 2}}"
        )));
    }
    Ok(())
}

/// First candidate table whose relator dies in `A(C̄_{2g+1})`.
fn select_table(p: &Pipeline, pull: &GroupMap, h: usize) -> Result<PairingTable> {
    for t in pairing_tables() {
        if p.raag_image(&pull.apply(&t.relator(h))?)?.is_empty() {
            return Ok(t);
        }
    }
    Err(Error::Verification(
        "no pairing table gives a trivial relator".into(),
    ))
}

/// `X_n`: the genus-`g` bundle over `Σ_h` from the embedding pipeline,
/// verified at the raag, braid and homology levels before it is returned.
pub fn generate_xn(g: usize, h: usize, n: u64) -> Result<MonodromyFactorization> {
    generate_xn_with(g, h, n, &XnOptions::default())
}

pub fn generate_xn_with(
    g: usize,
    h: usize,
    n: u64,
    opts: &XnOptions,
) -> Result<MonodromyFactorization> {
    check_xn_params(g, h, n)?;
    let p = Pipeline::new(g, n, opts)?;
    let pull = covering_pullback(h)?;
    let table = select_table(&p, &pull, h)?;

    let mut pairs = Vec::new();
    let mut raag_pairs = Vec::new();
    for (a, b) in table.pairs(h) {
        let (a2, b2) = (pull.apply(&a)?, pull.apply(&b)?);
        pairs.push((p.twist_image(&a2)?, p.twist_image(&b2)?));
        raag_pairs.push((p.raag_image(&a2)?, p.raag_image(&b2)?));
    }

    let mut provenance = format!("xn g={g} h={h} n={n} pairing={}", table.id);
    if opts.kim_word == KimWord::Square {
        provenance.push_str(" w=square");
    }
    if opts.literal_delta1 {
        provenance.push_str(" d1=literal");
    } else {
        let literal_ok = literal_delta1_check(g, h, n)?;
        provenance.push_str(if literal_ok {
            " literal-d1=pass"
        } else {
            " literal-d1=fail"
        });
    }
    let mut f = MonodromyFactorization::new(g, h, pairs, provenance)?;
    if !opts.literal_delta1 {
        f = f.with_raag(RaagLift {
            graph: p.big.clone(),
            pairs: raag_pairs,
        });
    }
    let levels: &[Level] = if opts.literal_delta1 {
        &[Level::Braid, Level::Homology]
    } else {
        &[Level::Raag, Level::Braid, Level::Homology]
    };
    for r in f.verify_levels(levels)? {
        if !r.passed {
            return Err(Error::Verification(format!(
                "X_n fails at {}: {}",
                r.level, r.detail
            )));
        }
    }
    Ok(f)
}

/// Re-derives the raag-level preimages of a factorization whose provenance
/// names a pipeline run, after checking that the words agree.
pub fn restore_raag_lift(f: &MonodromyFactorization) -> Result<MonodromyFactorization> {
    if f.raag_lift().is_some() {
        return Ok(f.clone());
    }
    let missing = || Error::Precondition("raag-level check needs pipeline provenance".into());
    let mut tokens = f.provenance().split_whitespace();
    if tokens.next() != Some("xn") {
        return Err(missing());
    }
    let (mut g, mut h, mut n) = (None, None, None);
    let mut opts = XnOptions::default();
    for tok in tokens {
        match tok.split_once('=') {
            Some(("g", v)) => g = v.parse::<usize>().ok(),
            Some(("h", v)) => h = v.parse::<usize>().ok(),
            Some(("n", v)) => n = v.parse::<u64>().ok(),
            Some(("w", "square")) => opts.kim_word = KimWord::Square,
            Some(("d1", "literal")) => return Err(missing()),
            _ => {}
        }
    }
    let (Some(g), Some(h), Some(n)) = (g, h, n) else {
        return Err(missing());
    };
    let fresh = generate_xn_with(g, h, n, &opts)?;
    if fresh.pairs() != f.pairs() || fresh.fiber_genus() != f.fiber_genus() {
        return Err(Error::Precondition(
            "words differ from the pipeline run named in the provenance".into(),
        ));
    }
    let mut out = f.clone();
    out.raag = fresh.raag;
    Ok(out)
}

/// Image of the loop `γ₂⁻¹ δ₁ γ₁⁻¹` on `Σ_h`:
/// `(T_{c_1}^n T_{c_2}^{−n})^{h−1} T_{c_3}^n W⁻¹`, the word handed to
/// Penner's criterion.
pub fn step_six_word(g: usize, h: usize, n: u64) -> Result<TwistWord> {
    check_xn_params(g, h, n)?;
    let p = Pipeline::new(g, n, &XnOptions::default())?;
    let pull = covering_pullback(h)?;
    let lp: Word = "g2^-1 d1 g1^-1".parse()?;
    p.twist_image(&pull.apply(&lp)?)
}

/// `φ_k = T_{c_1}^k T_{c_2}^{−1} T_{c_3} ⋯ T_{c_{2g}}^{−1}`.
pub fn phi_k(g: usize, k: i64) -> Result<TwistWord> {
    let mut letters = vec![(1, k)];
    letters.extend((2..=2 * g).map(|i| (i, if i % 2 == 0 { -1 } else { 1 })));
    TwistWord::new(g, TwistOrder::Left, letters)
}

/// The genus-`g` bundle over the torus with monodromy `φ_k`.
pub fn generate_torus_bundle(g: usize, k: i64) -> Result<MonodromyFactorization> {
    if g < 2 {
        return Err(Error::Precondition(format!(
            "fiber genus must be >= 2, got {g}"
        )));
    }
    if k < 1 {
        return Err(Error::Precondition(format!("k must be >= 1, got {k}")));
    }
    let pairs = vec![(phi_k(g, k)?, TwistWord::identity(g, TwistOrder::Left))];
    let mut f = MonodromyFactorization::new(g, 1, pairs, format!("torus g={g} k={k}"))?;
    for r in f.verify_levels(&[Level::Braid, Level::Homology])? {
        if !r.passed {
            return Err(Error::Verification(r.detail));
        }
    }
    Ok(f)
}

/// Braid-level check of the literal `δ₁` image.
pub(crate) fn literal_delta1_check(g: usize, h: usize, n: u64) -> Result<bool> {
    check_xn_params(g, h, n)?;
    let opts = XnOptions {
        literal_delta1: true,
        ..XnOptions::default()
    };
    let p = Pipeline::new(g, n, &opts)?;
    let pull = covering_pullback(h)?;
    let table = pairing_tables()[0];
    let mut pairs = Vec::new();
    for (a, b) in table.pairs(h) {
        pairs.push((
            p.twist_image(&pull.apply(&a)?)?,
            p.twist_image(&pull.apply(&b)?)?,
        ));
    }
    let f = MonodromyFactorization::new(g, h, pairs, "literal")?;
    Ok(verify_factorization(&f, Level::Braid)?.passed)
}
