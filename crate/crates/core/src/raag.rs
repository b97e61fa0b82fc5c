//! Right-angled Artin groups: graphs, the word problem, co-contraction and
//! Kim's embeddings `A(CO̅(Γ,S)) → A(Γ)`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{is_identifier, GroupMap, Letter, MapOrder, RaagWord, Word};

/// Default name of the collapsed vertex produced by [`co_contraction`].
pub const COLLAPSED_VERTEX: &str = "vS";

/// A finite simple graph with an ordered vertex list. The vertex order is
/// also the generator order used by the shortlex normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    vertices: Vec<String>,
    adjacent: Vec<Vec<bool>>,
}

impl LabeledGraph {
    pub fn new<S: AsRef<str>>(vertices: Vec<String>, edges: &[(S, S)]) -> Result<Self> {
        for (i, v) in vertices.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidGraph(format!("bad vertex name `{v}`")));
            }
            if vertices[..i].contains(v) {
                return Err(Error::InvalidGraph(format!("repeated vertex `{v}`")));
            }
        }
        let n = vertices.len();
        let mut g = LabeledGraph {
            vertices,
            adjacent: vec![vec![false; n]; n],
        };
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = g.index_of(a)?;
            let j = g.index_of(b)?;
            if i == j {
                return Err(Error::InvalidGraph(format!("self-loop at `{a}`")));
            }
            if g.adjacent[i][j] {
                return Err(Error::InvalidGraph(format!("repeated edge ({a} {b})")));
            }
            g.adjacent[i][j] = true;
            g.adjacent[j][i] = true;
        }
        Ok(g)
    }

    fn from_matrix(vertices: Vec<String>, adjacent: Vec<Vec<bool>>) -> Self {
        LabeledGraph { vertices, adjacent }
    }

    /// The cycle `C_k` on `v1, …, vk`.
    pub fn cycle(k: usize) -> Self {
        let vertices: Vec<String> = (1..=k).map(|i| format!("v{i}")).collect();
        let mut adjacent = vec![vec![false; k]; k];
        if k >= 3 {
            for i in 0..k {
                let j = (i + 1) % k;
                adjacent[i][j] = true;
                adjacent[j][i] = true;
            }
        }
        LabeledGraph::from_matrix(vertices, adjacent)
    }

    /// The opposite `C̄_k` of the cycle graph.
    pub fn cycle_opposite(k: usize) -> Self {
        opposite_graph(&LabeledGraph::cycle(k))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, v: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|x| x == v)
            .ok_or_else(|| Error::UnknownGenerator(v.to_string()))
    }

    pub fn contains(&self, v: &str) -> bool {
        self.vertices.iter().any(|x| x == v)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.adjacent[self.index_of(a)?][self.index_of(b)?])
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edge_indices(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adjacent[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edges(&self) -> Vec<(&str, &str)> {
        self.edge_indices()
            .into_iter()
            .map(|(i, j)| (self.vertices[i].as_str(), self.vertices[j].as_str()))
            .collect()
    }

    /// Whether the induced subgraph on `subset` is connected (and nonempty).
    pub fn is_connected_subset(&self, subset: &[usize]) -> bool {
        let Some(&start) = subset.first() else {
            return false;
        };
        let mut seen = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in subset {
                if self.adjacent[u][v] && !seen.contains(&v) {
                    seen.push(v);
                    queue.push_back(v);
                }
            }
        }
        seen.len() == subset.len()
    }

    /// Whether `map` (given as images of this graph's vertices, by index
    /// into `other`) is a graph isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &LabeledGraph, map: &[usize]) -> bool {
        let n = self.vertices.len();
        if n != other.vertices.len() || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in map {
            if m >= n || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.adjacent[i][j] == other.adjacent[map[i]][map[j]]))
    }

    /// One commutator relator `[u, v]` per edge.
    pub fn relators(&self) -> Vec<RaagWord> {
        self.edges()
            .into_iter()
            .map(|(a, b)| Word::commutator(&Word::generator(a), &Word::generator(b)))
            .collect()
    }

    fn subset_indices<S: AsRef<str>>(&self, subset: &[S]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(subset.len());
        for s in subset {
            let i = self.index_of(s.as_ref())?;
            if out.contains(&i) {
                return Err(Error::InvalidGraph(format!(
                    "vertex `{}` repeated in subset",
                    s.as_ref()
                )));
            }
            out.push(i);
        }
        Ok(out)
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices: {}; edges:", self.vertices.join(" "))?;
        for (a, b) in self.edges() {
            write!(f, " ({a} {b})")?;
        }
        Ok(())
    }
}

fn split_numbered(s: &str) -> Option<(&str, usize)> {
    let pos = s.find(|c: char| c.is_ascii_digit())?;
    let (prefix, digits) = s.split_at(pos);
    digits.parse().ok().map(|n| (prefix, n))
}

impl FromStr for LabeledGraph {
    type Err = Error;

    /// `vertices: v1 v2 v3; edges: (v1 v3) ...`; a vertex list of the form
    /// `v1 .. v5` is expanded.
    fn from_str(s: &str) -> Result<Self> {
        let (vpart, epart) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse("graph needs `vertices: ...; edges: ...`".into()))?;
        let vlist = vpart
            .trim()
            .strip_prefix("vertices:")
            .ok_or_else(|| Error::Parse("missing `vertices:`".into()))?;
        let toks: Vec<&str> = vlist.split_whitespace().collect();
        let vertices: Vec<String> = if toks.len() == 3 && toks[1] == ".." {
            let (pa, a) = split_numbered(toks[0])
                .ok_or_else(|| Error::Parse(format!("bad range start `{}`", toks[0])))?;
            let (pb, b) = split_numbered(toks[2])
                .ok_or_else(|| Error::Parse(format!("bad range end `{}`", toks[2])))?;
            if pa != pb || a > b {
                return Err(Error::Parse(format!("bad vertex range `{vlist}`")));
            }
            (a..=b).map(|i| format!("{pa}{i}")).collect()
        } else {
            toks.iter().map(|t| t.to_string()).collect()
        };
        let elist = epart
            .trim()
            .strip_prefix("edges:")
            .ok_or_else(|| Error::Parse("missing `edges:`".into()))?;
        let mut edges = Vec::new();
        let mut rest = elist.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("bad edge list near `{rest}`")))?;
            let ends: Vec<&str> = inner.0.split_whitespace().collect();
            if ends.len() != 2 {
                return Err(Error::Parse(format!("edge `({})` needs two ends", inner.0)));
            }
            edges.push((ends[0].to_string(), ends[1].to_string()));
            rest = inner.1.trim();
        }
        LabeledGraph::new(vertices, &edges)
    }
}

/// The edge complement on the same vertex list.
pub fn opposite_graph(g: &LabeledGraph) -> LabeledGraph {
    let n = g.vertices.len();
    let adjacent = (0..n)
        .map(|i| (0..n).map(|j| i != j && !g.adjacent[i][j]).collect())
        .collect();
    LabeledGraph::from_matrix(g.vertices.clone(), adjacent)
}

/// Unit letter over vertex indices; `sign` is ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Unit {
    vertex: usize,
    sign: i8,
}

fn to_units(w: &RaagWord, g: &LabeledGraph) -> Result<Vec<Unit>> {
    let mut out = Vec::with_capacity(w.unit_length());
    for l in w.letters() {
        let vertex = g.index_of(&l.generator)?;
        let sign = if l.exponent > 0 { 1 } else { -1 };
        for _ in 0..l.exponent.unsigned_abs() {
            out.push(Unit { vertex, sign });
        }
    }
    Ok(out)
}

fn from_units(units: &[Unit], g: &LabeledGraph) -> RaagWord {
    Word::from_letters(
        units
            .iter()
            .map(|u| Letter::new(g.vertices[u.vertex].clone(), u.sign as i64)),
    )
    .free_reduce()
}

/// Piling of a word: one stack per vertex holding `±1` letter entries and
/// `0` markers left by non-commuting letters.
struct Piling<'g> {
    graph: &'g LabeledGraph,
    piles: Vec<Vec<i8>>,
}

impl<'g> Piling<'g> {
    fn new(graph: &'g LabeledGraph) -> Self {
        Piling {
            graph,
            piles: vec![Vec::new(); graph.vertex_count()],
        }
    }

    fn push(&mut self, u: Unit) {
        let n = self.piles.len();
        if self.piles[u.vertex].last() == Some(&-u.sign) {
            self.piles[u.vertex].pop();
            for v in 0..n {
                if v != u.vertex && !self.graph.adjacent[u.vertex][v] {
                    let top = self.piles[v].pop();
                    debug_assert_eq!(top, Some(0));
                }
            }
        } else {
            self.piles[u.vertex].push(u.sign);
            for v in 0..n {
                if v != u.vertex && !self.graph.adjacent[u.vertex][v] {
                    self.piles[v].push(0);
                }
            }
        }
    }

    /// Reads the reduced word back, always taking the least available
    /// vertex first; this yields the shortlex-least representative.
    fn read_shortlex(mut self) -> Vec<Unit> {
        let n = self.piles.len();
        // Read from the bottom: reverse each pile so the bottom is the top.
        for p in &mut self.piles {
            p.reverse();
        }
        let mut out = Vec::new();
        loop {
            let next = (0..n).find(|&v| matches!(self.piles[v].last(), Some(&s) if s != 0));
            let Some(v) = next else { break };
            let sign = self.piles[v].pop().unwrap();
            for u in 0..n {
                if u != v && !self.graph.adjacent[v][u] {
                    let m = self.piles[u].pop();
                    debug_assert_eq!(m, Some(0));
                }
            }
            out.push(Unit { vertex: v, sign });
        }
        debug_assert!(self.piles.iter().all(|p| p.is_empty()));
        out
    }
}

/// Canonical form of `w` in `A(g)`: fully reduced and shortlex-least among
/// its commutation-equivalent rearrangements, for the vertex order of `g`.
pub fn normal_form(w: &RaagWord, g: &LabeledGraph) -> Result<RaagWord> {
    let units = to_units(w, g)?;
    let mut piling = Piling::new(g);
    for u in units {
        piling.push(u);
    }
    Ok(from_units(&piling.read_shortlex(), g))
}

/// Word problem in `A(g)`.
pub fn raag_equal(w1: &RaagWord, w2: &RaagWord, g: &LabeledGraph) -> Result<bool> {
    Ok(normal_form(&w1.concat(&w2.inverse()), g)?.is_empty())
}

/// Whether `s` induces a connected subgraph of the opposite graph.
pub fn is_anti_connected<S: AsRef<str>>(g: &LabeledGraph, s: &[S]) -> Result<bool> {
    let idx = g.subset_indices(s)?;
    Ok(opposite_graph(g).is_connected_subset(&idx))
}

/// `CO̅(g, s) = opposite(contraction(opposite(g), s))`, with the collapsed
/// vertex named [`COLLAPSED_VERTEX`] and placed where the first member of
/// `s` sat in the vertex order.
pub fn co_contraction<S: AsRef<str>>(g: &LabeledGraph, s: &[S]) -> Result<LabeledGraph> {
    co_contraction_named(g, s, COLLAPSED_VERTEX)
}

pub fn co_contraction_named<S: AsRef<str>>(
    g: &LabeledGraph,
    s: &[S],
    collapsed: &str,
) -> Result<LabeledGraph> {
    if s.is_empty() {
        return Err(Error::Precondition(
            "co-contraction needs a nonempty vertex set".into(),
        ));
    }
    let idx = g.subset_indices(s)?;
    let opp = opposite_graph(g);
    if !opp.is_connected_subset(&idx) {
        return Err(Error::NotAntiConnected(
            s.iter().map(|x| x.as_ref().to_string()).collect(),
        ));
    }
    if !is_identifier(collapsed)
        || (g.contains(collapsed) && !s.iter().any(|x| x.as_ref() == collapsed))
    {
        return Err(Error::InvalidGraph(format!(
            "cannot name collapsed vertex `{collapsed}`"
        )));
    }
    let first = *idx.iter().min().unwrap();
    // Old index per new vertex; `None` marks the collapsed vertex.
    let mut order: Vec<Option<usize>> = Vec::new();
    for i in 0..g.vertex_count() {
        if i == first {
            order.push(None);
        } else if !idx.contains(&i) {
            order.push(Some(i));
        }
    }
    let names: Vec<String> = order
        .iter()
        .map(|o| match o {
            Some(i) => g.vertices[*i].clone(),
            None => collapsed.to_string(),
        })
        .collect();
    let m = order.len();
    let mut contracted = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            contracted[a][b] = match (order[a], order[b]) {
                (Some(i), Some(j)) => opp.adjacent[i][j],
                (None, Some(j)) | (Some(j), None) => idx.iter().any(|&s| opp.adjacent[s][j]),
                (None, None) => false,
            };
        }
    }
    Ok(opposite_graph(&LabeledGraph::from_matrix(
        names, contracted,
    )))
}

/// Unit letter sequence of `w` with exponents stripped.
fn vertex_sequence(w: &RaagWord, g: &LabeledGraph) -> Result<Vec<usize>> {
    Ok(to_units(w, g)?.into_iter().map(|u| u.vertex).collect())
}

/// Kim's sufficient condition for injectivity of `v_S ↦ w`: for each
/// ordered pair of distinct vertices of `s` some edge path between them in
/// the opposite graph restricted to `s` appears in `w` as a subsequence.
pub fn check_kim_condition<S: AsRef<str>>(g: &LabeledGraph, s: &[S], w: &RaagWord) -> Result<bool> {
    Ok(kim_witness(g, s, w)?.is_none())
}

/// `None` when the condition holds, otherwise the first failing pair.
fn kim_witness<S: AsRef<str>>(
    g: &LabeledGraph,
    s: &[S],
    w: &RaagWord,
) -> Result<Option<(usize, usize)>> {
    let idx = g.subset_indices(s)?;
    if idx.is_empty() {
        return Err(Error::Precondition(
            "Kim condition needs a nonempty vertex set".into(),
        ));
    }
    let opp = opposite_graph(g);
    if !opp.is_connected_subset(&idx) {
        return Err(Error::NotAntiConnected(
            s.iter().map(|x| x.as_ref().to_string()).collect(),
        ));
    }
    for l in w.letters() {
        if !idx.contains(&g.index_of(&l.generator)?) {
            return Err(Error::Precondition(format!(
                "letter `{}` lies outside the collapsed set",
                l.generator
            )));
        }
    }
    let seq = vertex_sequence(w, g)?;
    let next_occurrence =
        |v: usize, after: usize| seq[after..].iter().position(|&x| x == v).map(|p| p + after);
    for &from in &idx {
        for &to in &idx {
            if from == to {
                continue;
            }
            // Greedy earliest matching: states are (vertex, end position).
            let Some(p0) = next_occurrence(from, 0) else {
                return Ok(Some((from, to)));
            };
            let mut best = vec![usize::MAX; g.vertex_count()];
            best[from] = p0;
            let mut queue = VecDeque::from([from]);
            while let Some(u) = queue.pop_front() {
                for &x in &idx {
                    if !opp.adjacent[u][x] {
                        continue;
                    }
                    if let Some(p) = next_occurrence(x, best[u] + 1) {
                        if p < best[x] {
                            best[x] = p;
                            queue.push_back(x);
                        }
                    }
                }
            }
            if best[to] == usize::MAX {
                return Ok(Some((from, to)));
            }
        }
    }
    Ok(None)
}

/// The embedding `A(CO̅(g, s)) → A(g)` fixing every generator outside `s`
/// and sending the collapsed vertex to `w`. Refuses to build the map when
/// Kim's condition does not hold.
pub fn kim_embedding<S: AsRef<str>>(g: &LabeledGraph, s: &[S], w: &RaagWord) -> Result<GroupMap> {
    if let Some((from, to)) = kim_witness(g, s, w)? {
        return Err(Error::KimConditionFailed {
            from: g.vertices[from].clone(),
            to: g.vertices[to].clone(),
        });
    }
    let domain = co_contraction(g, s)?;
    let images = domain
        .vertices()
        .iter()
        .map(|v| {
            if v == COLLAPSED_VERTEX {
                w.clone()
            } else {
                Word::generator(v.clone())
            }
        })
        .collect();
    GroupMap::new(
        domain.vertices().to_vec(),
        g.vertices().to_vec(),
        images,
        MapOrder::Homomorphism,
    )
}
