//! Γ-dissections of closed surfaces, the link condition, label reading and
//! the covering `Σ_h → Σ_2` used to pull back the genus-2 record.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::raag::{normal_form, LabeledGraph};
use crate::word::{is_identifier, GroupMap, MapOrder, RaagWord, Word};

/// A curve label together with a crossing direction (`+1` or `-1`).
pub type DirectedLabel = (String, i8);

/// One labeled curve and the crossings it passes, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DissectionCurve {
    pub label: String,
    pub crossings: Vec<String>,
}

/// A Γ-dissection: labeled curves meeting at crossings, with the boundary
/// cycle of every complementary face. A face corner `(v, ±1)` records the
/// directed label read when leaving the face across an arc of a `v`-curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dissection {
    pub genus: usize,
    pub graph: LabeledGraph,
    pub curves: Vec<DissectionCurve>,
    pub crossings: Vec<String>,
    pub faces: Vec<Vec<DirectedLabel>>,
}

/// A loop on the surface recorded by the curves it crosses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceLoop {
    pub crossings: Vec<DirectedLabel>,
}

impl SurfaceLoop {
    /// The word `w(γ)` read off along the loop.
    pub fn word(&self) -> Word {
        Word::from_pairs(
            self.crossings
                .iter()
                .map(|(l, s)| (l.clone(), i64::from(*s))),
        )
    }
}

fn dir_to_string((l, s): &DirectedLabel) -> String {
    format!("{l}{}", if *s > 0 { '+' } else { '-' })
}

fn parse_dir(tok: &str) -> Result<DirectedLabel> {
    let (body, sign) = if let Some(b) = tok.strip_suffix('+') {
        (b, 1)
    } else if let Some(b) = tok.strip_suffix('-') {
        (b, -1)
    } else {
        return Err(Error::Parse(format!("`{tok}` needs a trailing + or -")));
    };
    if !is_identifier(body) {
        return Err(Error::Parse(format!("bad identifier in `{tok}`")));
    }
    Ok((body.to_string(), sign))
}

impl Dissection {
    /// Number of crossings, arcs and faces.
    pub fn cell_counts(&self) -> (usize, usize, usize) {
        let arcs = self.curves.iter().map(|c| c.crossings.len()).sum();
        (self.crossings.len(), arcs, self.faces.len())
    }

    /// Consistency of the incidence data itself. Violations are errors
    /// rather than a `false` verdict.
    fn check_incidence(&self) -> Result<BTreeMap<&str, Vec<&str>>> {
        let mut passages: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for x in &self.crossings {
            if passages.insert(x.as_str(), Vec::new()).is_some() {
                return Err(Error::MalformedDissection(format!(
                    "crossing `{x}` listed twice"
                )));
            }
        }
        for c in &self.curves {
            for x in &c.crossings {
                passages
                    .get_mut(x.as_str())
                    .ok_or_else(|| Error::MalformedDissection(format!("unknown crossing `{x}`")))?
                    .push(c.label.as_str());
            }
        }
        for (x, p) in &passages {
            if p.len() != 2 {
                return Err(Error::MalformedDissection(format!(
                    "crossing `{x}` has {} passages, expected 2",
                    p.len()
                )));
            }
        }
        let (_, arcs, _) = self.cell_counts();
        let sides: usize = self.faces.iter().map(Vec::len).sum();
        if sides != 2 * arcs {
            return Err(Error::MalformedDissection(format!(
                "faces have {sides} sides but {arcs} arcs need {}",
                2 * arcs
            )));
        }
        // every arc is seen once from each side
        let mut per_label: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
        for c in &self.curves {
            per_label.entry(c.label.as_str()).or_default().0 += c.crossings.len();
        }
        for face in &self.faces {
            for (l, s) in face {
                let e = per_label.entry(l.as_str()).or_default();
                if *s > 0 {
                    e.1 += 1;
                } else {
                    e.2 += 1;
                }
            }
        }
        for (l, (arcs, plus, minus)) in per_label {
            if plus != arcs || minus != arcs {
                return Err(Error::MalformedDissection(format!(
                    "label `{l}` has {arcs} arcs but {plus}/{minus} face sides"
                )));
            }
        }
        Ok(passages)
    }
}

/// The three dissection conditions: labels are vertices, each crossing
/// joins two distinct adjacent labels, and the faces are disks by the
/// Euler count `V − E + F = 2 − 2h`.
pub fn check_dissection(d: &Dissection) -> Result<bool> {
    let passages = d.check_incidence()?;
    if !d.curves.iter().all(|c| d.graph.contains(&c.label)) {
        return Ok(false);
    }
    for p in passages.values() {
        if p[0] == p[1] || !d.graph.has_edge(p[0], p[1])? {
            return Ok(false);
        }
    }
    let (v, e, f) = d.cell_counts();
    Ok(v as i64 - e as i64 + f as i64 == 2 - 2 * d.genus as i64)
}

/// Link condition at one face: the corner labels are pairwise distinct,
/// corners with distinct adjacent labels sit next to each other, and the
/// face has at least four corners so its link cycle is not filled in.
fn face_link_ok(graph: &LabeledGraph, face: &[DirectedLabel]) -> Result<bool> {
    let m = face.len();
    if m < 4 {
        return Ok(false);
    }
    for i in 0..m {
        for j in i + 1..m {
            if face[i] == face[j] {
                return Ok(false);
            }
            let (a, b) = (&face[i].0, &face[j].0);
            if a != b && graph.has_edge(a, b)? && !(j == i + 1 || (i == 0 && j == m - 1)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The link condition at every face of a valid dissection.
pub fn link_condition(d: &Dissection) -> Result<bool> {
    if !check_dissection(d)? {
        return Err(Error::Precondition("not a valid dissection".into()));
    }
    for face in &d.faces {
        if !face_link_ok(&d.graph, face)? {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "genus: {}", self.genus)?;
        writeln!(f, "graph:")?;
        writeln!(f, "{}", self.graph)?;
        writeln!(f, "curves:")?;
        for c in &self.curves {
            writeln!(f, "{}: {}", c.label, c.crossings.join(" "))?;
        }
        writeln!(f, "crossings:")?;
        writeln!(f, "{}", self.crossings.join(" "))?;
        writeln!(f, "faces:")?;
        for face in &self.faces {
            let parts: Vec<String> = face.iter().map(dir_to_string).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Dissection {
    type Err = Error;

    /// Sections `genus:`, `graph:`, `curves:`, `crossings:`, `faces:`; one
    /// entry per line, `#` starts a comment.
    fn from_str(s: &str) -> Result<Self> {
        let mut genus = None;
        let mut graph = None;
        let mut curves = Vec::new();
        let mut crossings = Vec::new();
        let mut faces = Vec::new();
        let mut section = "";
        for raw in s.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("genus:") {
                let g: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad genus `{}`", rest.trim())))?;
                genus = Some(g);
                section = "";
                continue;
            }
            if matches!(line, "graph:" | "curves:" | "crossings:" | "faces:") {
                section = line;
                continue;
            }
            match section {
                "graph:" => {
                    if graph.is_some() {
                        return Err(Error::Parse("graph section takes one line".into()));
                    }
                    graph = Some(line.parse::<LabeledGraph>()?);
                }
                "curves:" => {
                    let (label, rest) = line.split_once(':').ok_or_else(|| {
                        Error::Parse(format!("curve line `{line}` needs `label:`"))
                    })?;
                    let label = label.trim();
                    if !is_identifier(label) {
                        return Err(Error::Parse(format!("bad curve label `{label}`")));
                    }
                    let xs: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                    if let Some(x) = xs.iter().find(|x| !is_identifier(x)) {
                        return Err(Error::Parse(format!("bad crossing identifier `{x}`")));
                    }
                    curves.push(DissectionCurve {
                        label: label.to_string(),
                        crossings: xs,
                    });
                }
                "crossings:" => {
                    for x in line.split_whitespace() {
                        if !is_identifier(x) {
                            return Err(Error::Parse(format!("bad crossing identifier `{x}`")));
                        }
                        crossings.push(x.to_string());
                    }
                }
                "faces:" => {
                    faces.push(
                        line.split_whitespace()
                            .map(parse_dir)
                            .collect::<Result<Vec<_>>>()?,
                    );
                }
                _ => return Err(Error::Parse(format!("line outside any section: `{line}`"))),
            }
        }
        Ok(Dissection {
            genus: genus.ok_or_else(|| Error::Parse("missing `genus:`".into()))?,
            graph: graph.ok_or_else(|| Error::Parse("missing `graph:`".into()))?,
            curves,
            crossings,
            faces,
        })
    }
}

/// Names of the standard generators `γ₁, γ₂, δ₁, …, δ_{2h−2}` of `π₁(Σ_h)`.
pub fn surface_generators(h: usize) -> Vec<String> {
    let mut out = vec!["g1".to_string(), "g2".to_string()];
    out.extend((1..=2 * h.saturating_sub(1)).map(|i| format!("d{i}")));
    out
}

/// A homomorphism `π₁(Σ) → A(Γ)` given on generators, with the graph
/// needed to normal-form its values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomRecord {
    pub map: GroupMap,
    pub graph: LabeledGraph,
}

impl HomRecord {
    /// The genus-2 record for `C̄₅`:
    /// `γ₁ ↦ v₁⁻¹v₂`, `γ₂ ↦ v₅⁻¹v₄v₅v₄`, `δ₁ ↦ v₅⁻¹v₄v₅v₃`, `δ₂ ↦ v₁⁻¹v₅⁻¹v₁v₅`.
    pub fn sigma2() -> Self {
        let graph = LabeledGraph::cycle_opposite(5);
        let images: Vec<Word> = [
            "v1^-1 v2",
            "v5^-1 v4 v5 v4",
            "v5^-1 v4 v5 v3",
            "v1^-1 v5^-1 v1 v5",
        ]
        .iter()
        .map(|s| s.parse().expect("literal word"))
        .collect();
        let map = GroupMap::new(
            surface_generators(2),
            graph.vertices().to_vec(),
            images,
            MapOrder::Homomorphism,
        )
        .expect("literal record");
        HomRecord { map, graph }
    }
}

/// Reads a loop through the record and normal-forms the result.
pub fn label_reading(record: &HomRecord, lp: &Word) -> Result<RaagWord> {
    normal_form(&record.map.apply(lp)?, &record.graph)
}

/// `π₁(Σ_h) → π₁(Σ_2)` induced by the `(h−1)`-fold cover:
/// `γ₁ ↦ γ₁^{h−1}`, `γ₂ ↦ γ₂`, `δ_{2k+1} ↦ γ₁^k δ₁ γ₁^{−k}`,
/// `δ_{2k+2} ↦ γ₁^k δ₂ γ₁^{−k}`.
pub fn covering_pullback(h: usize) -> Result<GroupMap> {
    if h < 2 {
        return Err(Error::Precondition(format!(
            "base genus must be >= 2, got {h}"
        )));
    }
    let g1 = Word::generator("g1");
    let mut images = vec![g1.pow(h as i64 - 1), Word::generator("g2")];
    for k in 0..h - 1 {
        let c = g1.pow(k as i64);
        images.push(Word::generator("d1").conjugate_by(&c));
        images.push(Word::generator("d2").conjugate_by(&c));
    }
    let images = images.iter().map(Word::free_reduce).collect();
    GroupMap::new(
        surface_generators(h),
        surface_generators(2),
        images,
        MapOrder::Homomorphism,
    )
}
