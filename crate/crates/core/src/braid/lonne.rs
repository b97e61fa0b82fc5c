use std::fmt;

use super::{band_to_artin, garside_normal_form, BraidWord};
use crate::error::{Error, Result};
use crate::raag::LabeledGraph;
use crate::word::{GroupMap, MapOrder, Word};

/// Prefix of the band letter `b1_<2g+1>` in the braid alphabet of
/// [`lonne_embedding`].
pub const BAND_PREFIX: &str = "b1_";

/// Exponent matrix of Lönne's subgroup `B^M_{2g+1}` for the cycle `C_{2g+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LonneMatrix {
    size: usize,
    entries: Vec<Vec<u64>>,
}

impl LonneMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    /// `m_{i,j}` with 1-indexed arguments.
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.entries
    }
}

impl fmt::Display for LonneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let parts: Vec<String> = row.iter().map(|m| m.to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

fn check_params(g: usize, n: u64) -> Result<()> {
    if g < 2 {
        return Err(Error::Precondition(format!(
            "fiber genus must be >= 2, got {g}"
        )));
    }
    if n < 3 {
        return Err(Error::Precondition(format!(
            "exponent n = {n} is not allowed: the subgroup is right-angled only for n not in {{1, 2}} (and n >= 3 here)"
        )));
    }
    Ok(())
}

/// `m_{i,j} = n` when `j ≡ i ± 1 mod 2g+1`, else 0.
pub fn lonne_matrix(g: usize, n: u64) -> Result<LonneMatrix> {
    check_params(g, n)?;
    let size = 2 * g + 1;
    let mut entries = vec![vec![0; size]; size];
    for i in 0..size {
        entries[i][(i + 1) % size] = n;
        entries[(i + 1) % size][i] = n;
    }
    Ok(LonneMatrix { size, entries })
}

/// Alphabet `s1, …, s<2g>, b1_<2g+1>` of the images of [`lonne_embedding`].
pub fn braid_alphabet(g: usize) -> Vec<String> {
    let mut out: Vec<String> = (1..=2 * g).map(|i| format!("s{i}")).collect();
    out.push(format!("{BAND_PREFIX}{}", 2 * g + 1));
    out
}

/// `v_i ↦ σ_i^n` for `i ≤ 2g` and `v_{2g+1} ↦ β_{1,2g+1}^n`.
///
/// The codomain keeps the band generator as a single letter; use
/// [`generator_word_to_braid`] to expand into Artin generators.
pub fn lonne_embedding(g: usize, n: u64) -> Result<GroupMap> {
    check_params(g, n)?;
    let domain: Vec<String> = (1..=2 * g + 1).map(|i| format!("v{i}")).collect();
    let codomain = braid_alphabet(g);
    let images = codomain
        .iter()
        .map(|c| Word::from_pairs([(c.clone(), n as i64)]))
        .collect();
    GroupMap::new(domain, codomain, images, MapOrder::Homomorphism)
}

/// Expands a word over [`braid_alphabet`] into Artin generators of `B_{2g+1}`.
pub fn generator_word_to_braid(w: &Word, g: usize) -> Result<BraidWord> {
    let strands = 2 * g + 1;
    let band = band_to_artin(1, strands, strands)?;
    let band_name = format!("{BAND_PREFIX}{strands}");
    let mut out = BraidWord::identity(strands);
    for l in w.letters() {
        let piece = if l.generator == band_name {
            band.pow(l.exponent)
        } else {
            let i = l
                .generator
                .strip_prefix('s')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| 1 <= i && i <= 2 * g)
                .ok_or_else(|| Error::UnknownGenerator(l.generator.clone()))?;
            BraidWord::generator(strands, i, l.exponent)?
        };
        out = out.concat(&piece)?;
    }
    Ok(out)
}

/// One unordered pair of generators of `B^M_{2g+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LonnePair {
    pub first: usize,
    pub second: usize,
    pub commutes: bool,
    pub expected: bool,
}

/// Commutation pattern of the generators `σ_1^n, …, σ_{2g}^n, β_{1,2g+1}^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LonneReport {
    pub genus: usize,
    pub exponent: u64,
    pub pairs: Vec<LonnePair>,
}

impl LonneReport {
    pub fn matches(&self) -> bool {
        self.pairs.iter().all(|p| p.commutes == p.expected)
    }

    pub fn commuting_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.commutes).count()
    }
}

impl fmt::Display for LonneReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lonne g={} n={}", self.genus, self.exponent)?;
        for p in &self.pairs {
            writeln!(
                f,
                "v{} v{}: {} (expected {})",
                p.first,
                p.second,
                if p.commutes { "commute" } else { "free" },
                if p.expected { "commute" } else { "free" }
            )?;
        }
        write!(
            f,
            "pattern {}",
            if self.matches() { "matches" } else { "differs" }
        )
    }
}

/// Checks every commutator of generator images in `B_{2g+1}` against the
/// edges of `C̄_{2g+1}`.
pub fn check_lonne_relations(g: usize, n: u64) -> Result<LonneReport> {
    let map = lonne_embedding(g, n)?;
    let graph = LabeledGraph::cycle_opposite(2 * g + 1);
    let images = map
        .images()
        .iter()
        .map(|w| generator_word_to_braid(w, g))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for a in 0..images.len() {
        for b in a + 1..images.len() {
            let c = BraidWord::commutator(&images[a], &images[b])?;
            pairs.push(LonnePair {
                first: a + 1,
                second: b + 1,
                commutes: garside_normal_form(&c).is_identity(),
                expected: graph.has_edge(&map.domain()[a], &map.domain()[b])?,
            });
        }
    }
    Ok(LonneReport {
        genus: g,
        exponent: n,
        pairs,
    })
}
