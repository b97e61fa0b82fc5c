//! Dehn twists along the chain `c_1, …, c_{2g+1}` on `Σ_g`: words, the
//! Birman–Hilden dictionary, the symplectic representation and Penner's
//! pseudo-Anosov criterion.

mod penner;
mod symplectic;

use std::fmt;
use std::str::FromStr;

use crate::braid::{BraidWord, BAND_PREFIX};
use crate::error::{Error, Result};
use crate::word::{parse_token, Word};

pub use penner::{penner_certify, penner_growth, PennerData, PennerGrowth};
pub use symplectic::{
    curve_class, intersection_form, intersection_number, twist_action, twist_matrix, SpMatrix,
};

/// How a [`TwistWord`] is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistOrder {
    /// Functional notation: the rightmost letter acts first.
    Left,
    /// Application order: the leftmost letter acts first.
    Right,
}

impl fmt::Display for TwistOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwistOrder::Left => "left",
            TwistOrder::Right => "right",
        })
    }
}

impl FromStr for TwistOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(TwistOrder::Left),
            "right" => Ok(TwistOrder::Right),
            _ => Err(Error::Parse(format!(
                "order must be `left` or `right`, got `{s}`"
            ))),
        }
    }
}

/// A word in the twists `T_{c_1}, …, T_{c_{2g+1}}` on `Σ_g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistWord {
    genus: usize,
    order: TwistOrder,
    letters: Vec<(usize, i64)>,
}

impl TwistWord {
    pub fn new(genus: usize, order: TwistOrder, letters: Vec<(usize, i64)>) -> Result<Self> {
        if genus < 1 {
            return Err(Error::Precondition("genus must be at least 1".into()));
        }
        let mut w = TwistWord::identity(genus, order);
        for (k, e) in letters {
            if k == 0 || k > 2 * genus + 1 {
                return Err(Error::Precondition(format!(
                    "curve index {k} out of range for genus {genus}"
                )));
            }
            if e == 0 {
                return Err(Error::Precondition("zero exponent in twist word".into()));
            }
            w.push(k, e);
        }
        Ok(w)
    }

    pub fn identity(genus: usize, order: TwistOrder) -> Self {
        TwistWord {
            genus,
            order,
            letters: Vec::new(),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn order(&self) -> TwistOrder {
        self.order
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters in the order they act.
    pub fn application_letters(&self) -> Vec<(usize, i64)> {
        match self.order {
            TwistOrder::Right => self.letters.clone(),
            TwistOrder::Left => self.letters.iter().rev().copied().collect(),
        }
    }

    fn push(&mut self, k: usize, e: i64) {
        if let Some(last) = self.letters.last_mut() {
            if last.0 == k {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        if e != 0 {
            self.letters.push((k, e));
        }
    }

    /// The same mapping class written in the other notation.
    pub fn with_order(&self, order: TwistOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        TwistWord {
            genus: self.genus,
            order,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        TwistWord {
            genus: self.genus,
            order: self.order,
            letters: self.letters.iter().rev().map(|&(k, e)| (k, -e)).collect(),
        }
    }

    /// Juxtaposition of letters; both words must use the same notation.
    pub fn concat(&self, other: &TwistWord) -> Result<Self> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch(self.genus, other.genus));
        }
        if self.order != other.order {
            return Err(Error::Precondition(
                "cannot join words written in different orders".into(),
            ));
        }
        let mut out = self.clone();
        for &(k, e) in &other.letters {
            out.push(k, e);
        }
        Ok(out)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = TwistWord::identity(self.genus, self.order);
        for _ in 0..k.unsigned_abs() {
            for &(c, e) in &base.letters {
                out.push(c, e);
            }
        }
        out
    }

    /// `a b a⁻¹ b⁻¹` as written.
    pub fn commutator(a: &TwistWord, b: &TwistWord) -> Result<Self> {
        a.concat(b)?.concat(&a.inverse())?.concat(&b.inverse())
    }

    /// `c w c⁻¹` as written.
    pub fn conjugate_by(&self, c: &TwistWord) -> Result<Self> {
        c.concat(self)?.concat(&c.inverse())
    }

    /// Curves occurring in the word, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.letters.iter().map(|&(k, _)| k).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn parse_letters(genus: usize, order: TwistOrder, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut letters = Vec::new();
        if !(s.is_empty() || s == "1") {
            for tok in s.split_whitespace() {
                let (name, e) = parse_token(tok)?;
                let k: usize = name
                    .strip_prefix('T')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("expected T<k>, got `{tok}`")))?;
                letters.push((k, e));
            }
        }
        TwistWord::new(genus, order, letters).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Letters only; the identity is written `1`.
    pub fn letters_to_string(&self) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&(k, e)| {
                if e == 1 {
                    format!("T{k}")
                } else {
                    format!("T{k}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "twist g={} order={} {}",
            self.genus,
            self.order,
            self.letters_to_string()
        )
    }
}

impl FromStr for TwistWord {
    type Err = Error;

    /// `twist g=<g> order=<left|right>` followed by `T<k>^<e>` tokens.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        if parts.next() != Some("twist") {
            return Err(Error::Parse(
                "twist word must start with `twist g=<g> order=<o>`".into(),
            ));
        }
        let g = parts
            .next()
            .and_then(|t| t.strip_prefix("g="))
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse("missing or bad `g=<g>`".into()))?;
        let order: TwistOrder = parts
            .next()
            .and_then(|t| t.strip_prefix("order="))
            .ok_or_else(|| Error::Parse("missing `order=<left|right>`".into()))?
            .parse()?;
        let rest: Vec<&str> = parts.collect();
        TwistWord::parse_letters(g, order, &rest.join(" "))
    }
}

/// Birman–Hilden: `σ_i ↦ T_{c_i}`. The map reverses products, so the result
/// in functional notation lists the braid's letters backwards.
pub fn braid_to_twists(w: &BraidWord) -> Result<TwistWord> {
    let n = w.strands();
    if n < 5 || n % 2 == 0 {
        return Err(Error::Precondition(format!(
            "Birman-Hilden needs an odd strand count >= 5, got {n}"
        )));
    }
    let right = TwistWord::new((n - 1) / 2, TwistOrder::Right, w.letters().to_vec())?;
    Ok(right.with_order(TwistOrder::Left))
}

/// Same as [`braid_to_twists`] for words over the alphabet
/// `s1, …, s<2g>, b1_<2g+1>`, with the band letter going to `T_{c_{2g+1}}`.
pub fn generator_word_to_twists(w: &Word, genus: usize) -> Result<TwistWord> {
    let band = format!("{BAND_PREFIX}{}", 2 * genus + 1);
    let mut letters = Vec::new();
    for l in w.letters() {
        let k = if l.generator == band {
            2 * genus + 1
        } else {
            l.generator
                .strip_prefix('s')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| 1 <= i && i <= 2 * genus)
                .ok_or_else(|| Error::UnknownGenerator(l.generator.clone()))?
        };
        letters.push((k, l.exponent));
    }
    Ok(TwistWord::new(genus, TwistOrder::Right, letters)?.with_order(TwistOrder::Left))
}

/// `T_{c_{2g+1}}` in functional notation:
/// `(T_{c_{2g}} ⋯ T_{c_2}) T_{c_1} (T_{c_{2g}} ⋯ T_{c_2})^{-1}`.
fn c2g1_left(genus: usize, e: i64) -> Vec<(usize, i64)> {
    let mut out: Vec<(usize, i64)> = (2..=2 * genus).rev().map(|k| (k, 1)).collect();
    out.push((1, e));
    out.extend((2..=2 * genus).map(|k| (k, -1)));
    out
}

/// Replaces every `T_{c_{2g+1}}^e` by its expression in `T_{c_1}, …, T_{c_{2g}}`.
pub fn expand_c2g1(w: &TwistWord) -> TwistWord {
    let left = w.with_order(TwistOrder::Left);
    let top = 2 * w.genus + 1;
    let mut out = TwistWord::identity(w.genus, TwistOrder::Left);
    for &(k, e) in &left.letters {
        if k == top {
            for (c, f) in c2g1_left(w.genus, e) {
                out.push(c, f);
            }
        } else {
            out.push(k, e);
        }
    }
    out.with_order(w.order)
}

/// Artin word of the braid represented by `w` on `2g+1` strands.
pub fn twists_to_braid(w: &TwistWord) -> Result<BraidWord> {
    let right = expand_c2g1(w).with_order(TwistOrder::Right);
    BraidWord::new(2 * w.genus + 1, right.letters)
}
