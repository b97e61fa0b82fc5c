//! Words over named generators and the (anti-)homomorphisms between them.
//!
//! Surface group elements, right-angled Artin group elements and the
//! intermediate braid alphabet of the embedding pipeline are all stored as
//! [`Word`]s: sequences of `generator^exponent` syllables. A [`GroupMap`]
//! records a map on generators together with whether it preserves or
//! reverses the order of composition.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One syllable `generator^exponent` of a word. The exponent is never zero
/// in a stored word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: String,
    pub exponent: i64,
}

impl Letter {
    pub fn new(generator: impl Into<String>, exponent: i64) -> Self {
        Letter {
            generator: generator.into(),
            exponent,
        }
    }

    pub fn inverse(&self) -> Letter {
        Letter::new(self.generator.clone(), -self.exponent)
    }
}

/// A word in named generators. Raw words may be unreduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Words in the generators of a right-angled Artin group.
pub type RaagWord = Word;

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from syllables, dropping zero exponents.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word {
            letters: letters.into_iter().filter(|l| l.exponent != 0).collect(),
        }
    }

    /// Builds a word from `(generator, exponent)` pairs.
    pub fn from_pairs<S: Into<String>>(pairs: impl IntoIterator<Item = (S, i64)>) -> Self {
        Word::from_letters(pairs.into_iter().map(|(g, e)| Letter::new(g, e)))
    }

    pub fn generator(name: impl Into<String>) -> Self {
        Word::from_letters([Letter::new(name, 1)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Length counted in unit letters `x^{±1}`.
    pub fn unit_length(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.exponent.unsigned_abs() as usize)
            .sum()
    }

    /// Expands syllables into unit letters `(generator, ±1)`.
    pub fn unit_letters(&self) -> impl Iterator<Item = (&str, i64)> + '_ {
        self.letters.iter().flat_map(|l| {
            let s = l.exponent.signum();
            std::iter::repeat_n(
                (l.generator.as_str(), s),
                l.exponent.unsigned_abs() as usize,
            )
        })
    }

    pub fn push(&mut self, letter: Letter) {
        if letter.exponent != 0 {
            self.letters.push(letter);
        }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out.letters.extend(base.letters.iter().cloned());
        }
        out
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// `c w c^-1`.
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    /// Free reduction: merges adjacent syllables on the same generator and
    /// drops those that cancel. No commutation is used.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            match out.last_mut() {
                Some(top) if top.generator == l.generator => {
                    top.exponent += l.exponent;
                    if top.exponent == 0 {
                        out.pop();
                    }
                }
                _ => {
                    if l.exponent != 0 {
                        out.push(l.clone());
                    }
                }
            }
        }
        Word { letters: out }
    }

    /// Generators occurring in the word, in first-occurrence order.
    pub fn support(&self) -> Vec<&str> {
        let mut seen: Vec<&str> = Vec::new();
        for l in &self.letters {
            if !seen.contains(&l.generator.as_str()) {
                seen.push(&l.generator);
            }
        }
        seen
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l.exponent == 1 {
                write!(f, "{}", l.generator)?;
            } else {
                write!(f, "{}^{}", l.generator, l.exponent)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses one `name^exp` or `name` token.
pub(crate) fn parse_token(tok: &str) -> Result<(String, i64)> {
    let (name, exp) = match tok.split_once('^') {
        Some((n, e)) => {
            let e: i64 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
            (n, e)
        }
        None => (tok, 1),
    };
    if !is_identifier(name) {
        return Err(Error::Parse(format!("bad generator name in `{tok}`")));
    }
    if exp == 0 {
        return Err(Error::Parse(format!("zero exponent in `{tok}`")));
    }
    Ok((name.to_string(), exp))
}

impl FromStr for Word {
    type Err = Error;

    /// Whitespace separated `x^e` tokens; `1` or the empty string is the
    /// identity.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        let mut w = Word::empty();
        for tok in s.split_whitespace() {
            let (g, e) = parse_token(tok)?;
            w.push(Letter::new(g, e));
        }
        Ok(w)
    }
}

/// Whether a [`GroupMap`] preserves or reverses the order of products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapOrder {
    Homomorphism,
    AntiHomomorphism,
}

impl MapOrder {
    pub fn then(self, other: MapOrder) -> MapOrder {
        if self == other {
            MapOrder::Homomorphism
        } else {
            MapOrder::AntiHomomorphism
        }
    }
}

/// A map between free-group alphabets defined by generator images.
///
/// For an anti-homomorphism, `f(x y) = f(y) f(x)`; images of single
/// generators are stored as they are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMap {
    domain: Vec<String>,
    codomain: Vec<String>,
    images: Vec<Word>,
    order: MapOrder,
}

impl GroupMap {
    pub fn new(
        domain: Vec<String>,
        codomain: Vec<String>,
        images: Vec<Word>,
        order: MapOrder,
    ) -> Result<Self> {
        if domain.len() != images.len() {
            return Err(Error::AlphabetMismatch(format!(
                "{} domain generators but {} images",
                domain.len(),
                images.len()
            )));
        }
        for w in &images {
            for l in w.letters() {
                if !codomain.contains(&l.generator) {
                    return Err(Error::UnknownGenerator(l.generator.clone()));
                }
            }
        }
        Ok(GroupMap {
            domain,
            codomain,
            images,
            order,
        })
    }

    pub fn identity(alphabet: &[String]) -> Self {
        GroupMap {
            domain: alphabet.to_vec(),
            codomain: alphabet.to_vec(),
            images: alphabet
                .iter()
                .map(|g| Word::generator(g.clone()))
                .collect(),
            order: MapOrder::Homomorphism,
        }
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn codomain(&self) -> &[String] {
        &self.codomain
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn order(&self) -> MapOrder {
        self.order
    }

    pub fn image_of(&self, generator: &str) -> Result<&Word> {
        self.domain
            .iter()
            .position(|g| g == generator)
            .map(|i| &self.images[i])
            .ok_or_else(|| Error::UnknownGenerator(generator.to_string()))
    }

    /// Image of a word, freely reduced.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Word::empty();
        let mut push = |l: &Letter| -> Result<()> {
            let img = self.image_of(&l.generator)?;
            out = out.concat(&img.pow(l.exponent));
            Ok(())
        };
        match self.order {
            MapOrder::Homomorphism => w.letters().iter().try_for_each(&mut push)?,
            MapOrder::AntiHomomorphism => w.letters().iter().rev().try_for_each(&mut push)?,
        }
        Ok(out.free_reduce())
    }

    /// `self` followed by `next`: the map `x ↦ next(self(x))`.
    pub fn then(&self, next: &GroupMap) -> Result<GroupMap> {
        if self.codomain != next.domain {
            return Err(Error::AlphabetMismatch(format!(
                "codomain {:?} does not match domain {:?}",
                self.codomain, next.domain
            )));
        }
        let images = self
            .images
            .iter()
            .map(|w| next.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupMap {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            images,
            order: self.order.then(next.order),
        })
    }
}

/// Generator-wise composition `g ∘ f`; `f`'s codomain must be `g`'s domain.
pub fn compose_maps(f: &GroupMap, g: &GroupMap) -> Result<GroupMap> {
    f.then(g)
}
