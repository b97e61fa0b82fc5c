//! Braid groups `B_n`: Artin words, band generators, two independent
//! solutions of the word problem and Lönne's right-angled Artin subgroups.

mod garside;
mod handle;
mod lonne;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::parse_token;

pub use garside::{garside_equal, garside_normal_form, GarsideForm, Permutation};
pub use handle::{handle_reduce, handle_trivial};
pub use lonne::{
    braid_alphabet, check_lonne_relations, generator_word_to_braid, lonne_embedding, lonne_matrix,
    LonneMatrix, LonnePair, LonneReport, BAND_PREFIX,
};

/// A word in the Artin generators `σ_1, …, σ_{n-1}` of `B_n`, composed left
/// to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i64)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i64)>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Precondition(format!(
                "braid group needs n >= 2, got {strands}"
            )));
        }
        for &(i, e) in &letters {
            if i == 0 || i >= strands {
                return Err(Error::Precondition(format!(
                    "generator s{i} out of range for {strands} strands"
                )));
            }
            if e == 0 {
                return Err(Error::Precondition("zero exponent in braid word".into()));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// `σ_i^e`.
    pub fn generator(strands: usize, i: usize, e: i64) -> Result<Self> {
        BraidWord::new(strands, vec![(i, e)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters expanded to `±i`.
    pub fn unit_letters(&self) -> Vec<i32> {
        let mut out = Vec::new();
        for &(i, e) in &self.letters {
            let s = if e > 0 { i as i32 } else { -(i as i32) };
            out.extend(std::iter::repeat_n(s, e.unsigned_abs() as usize));
        }
        out
    }

    pub(crate) fn from_units(strands: usize, units: &[i32]) -> Self {
        let mut w = BraidWord::identity(strands);
        for &u in units {
            w.push(u.unsigned_abs() as usize, u.signum() as i64);
        }
        w
    }

    fn push(&mut self, i: usize, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == i {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((i, e));
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    /// Product `self · other` with adjacent syllables merged.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut out = self.clone();
        for &(i, e) in &other.letters {
            out.push(i, e);
        }
        Ok(out)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::identity(self.strands);
        for _ in 0..k.unsigned_abs() {
            for &(i, e) in &base.letters {
                out.push(i, e);
            }
        }
        out
    }

    pub fn commutator(a: &BraidWord, b: &BraidWord) -> Result<Self> {
        a.concat(b)?.concat(&a.inverse())?.concat(&b.inverse())
    }

    /// `Δ² = (σ_1 ⋯ σ_{n-1})^n`, the generator of the center.
    pub fn full_twist(strands: usize) -> Self {
        let row = BraidWord {
            strands,
            letters: (1..strands).map(|i| (i, 1)).collect(),
        };
        row.pow(strands as i64)
    }

    /// Parses the letter tokens `s<i>^<e>` for a given strand count.
    pub fn parse_letters(strands: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut letters = Vec::new();
        if !(s.is_empty() || s == "1") {
            for tok in s.split_whitespace() {
                let (name, e) = parse_token(tok)?;
                let i: usize = name
                    .strip_prefix('s')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("expected s<i>, got `{tok}`")))?;
                letters.push((i, e));
            }
        }
        BraidWord::new(strands, letters).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Letters only, without the `braid n=` header.
    pub fn letters_to_string(&self) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&(i, e)| {
                if e == 1 {
                    format!("s{i}")
                } else {
                    format!("s{i}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid n={} {}", self.strands, self.letters_to_string())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `braid n=<n>` header followed by letter tokens.
    fn from_str(s: &str) -> Result<Self> {
        let rest = s
            .trim()
            .strip_prefix("braid")
            .ok_or_else(|| Error::Parse("braid word must start with `braid n=<n>`".into()))?;
        let rest = rest.trim_start();
        let rest = rest
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse("missing `n=<n>` in braid header".into()))?;
        let (num, letters) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
        let n: usize = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count `{num}`")))?;
        BraidWord::parse_letters(n, letters)
    }
}

/// Artin word for the band generator
/// `β_{i,j} = (σ_{i+1} ⋯ σ_{j-1})^{-1} σ_i (σ_{i+1} ⋯ σ_{j-1})`.
///
/// For `(1, n)` this is `(σ_2 ⋯ σ_{n-1})^{-1} σ_1 (σ_2 ⋯ σ_{n-1})`. The other
/// common convention `(σ_{j-1} ⋯ σ_{i+1}) σ_i (σ_{j-1} ⋯ σ_{i+1})^{-1}` is its
/// mirror image and a different braid once `j > i + 1`.
pub fn band_to_artin(i: usize, j: usize, strands: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= strands) {
        return Err(Error::Precondition(format!(
            "band generator b{i},{j} needs 1 <= i < j <= {strands}"
        )));
    }
    let run = BraidWord::new(strands, (i + 1..j).map(|k| (k, 1)).collect())?;
    run.inverse()
        .concat(&BraidWord::generator(strands, i, 1)?)?
        .concat(&run)
}
