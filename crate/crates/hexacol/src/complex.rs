//! Ordered-vertex simplicial complexes: construction, validation, links,
//! staircase products, bundled fixtures, and file I/O.
//!
//! A `Triangulation` is a pure complex given by its top simplices with
//! 1-based vertex labels; every tuple is stored sorted ascending and all
//! lower-dimensional simplices are indexed in lexicographic order. Vertex
//! labels may have gaps internally (moves that delete a vertex leave one),
//! but the file formats insist on contiguous `1..N` labels.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

pub type Vertex = u32;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {0} out of declared range 1..={1}")]
    VertexOutOfRange(Vertex, usize),
    #[error("declared vertex {0} is not used by any top simplex")]
    UnusedVertex(Vertex),
    #[error("repeated vertex in simplex {0:?}")]
    RepeatedVertex(Vec<Vertex>),
    #[error("duplicate top simplex {0:?}")]
    DuplicateFacet(Vec<Vertex>),
    #[error("top simplices of unequal dimension: {0:?} vs {1:?}")]
    NotPure(Vec<Vertex>, Vec<Vertex>),
    #[error("empty complex")]
    Empty,
    #[error("simplex {0:?} not in the complex")]
    SimplexNotFound(Vec<Vertex>),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture `{0}` is unavailable: no triangulation is bundled for it")]
    UnavailableFixture(String),
    #[error("vertex labels are not contiguous 1..N (use renumbering first)")]
    NotContiguous,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// All n-simplices of one dimension, lexicographically sorted, with O(1)
/// position lookup.
#[derive(Debug, Clone)]
pub struct SimplexIndex {
    list: Vec<Vec<Vertex>>,
    pos: HashMap<Vec<Vertex>, usize>,
}

impl SimplexIndex {
    fn from_set(set: BTreeSet<Vec<Vertex>>) -> SimplexIndex {
        let list: Vec<Vec<Vertex>> = set.into_iter().collect();
        let pos = list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        SimplexIndex { list, pos }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, i: usize) -> &[Vertex] {
        &self.list[i]
    }

    pub fn position(&self, s: &[Vertex]) -> Option<usize> {
        self.pos.get(s).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<Vertex>> {
        self.list.iter()
    }

    pub fn all(&self) -> &[Vec<Vertex>] {
        &self.list
    }
}

#[derive(Debug, Clone)]
pub struct Triangulation {
    dim: usize,
    vertices: Vec<Vertex>,
    /// Indexed skeleta; `skeleta[n]` holds the n-simplices. The top index
    /// equals the facet list.
    skeleta: Vec<SimplexIndex>,
}

fn subsets_of_size(s: &[Vertex], k: usize, out: &mut BTreeSet<Vec<Vertex>>) {
    let n = s.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.insert(idx.iter().map(|&i| s[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

impl Triangulation {
    /// Build from top simplices (any vertex labels; tuples need not be
    /// pre-sorted). Rejects repeated vertices, duplicates, mixed dimension.
    pub fn new(facets_in: Vec<Vec<Vertex>>) -> Result<Triangulation, ComplexError> {
        if facets_in.is_empty() {
            return Err(ComplexError::Empty);
        }
        let mut facets: Vec<Vec<Vertex>> = Vec::with_capacity(facets_in.len());
        let size = facets_in[0].len();
        for mut f in facets_in {
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::RepeatedVertex(f));
            }
            if f.len() != size {
                return Err(ComplexError::NotPure(facets[0].clone(), f));
            }
            facets.push(f);
        }
        facets.sort();
        if let Some(w) = facets.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateFacet(w[0].clone()));
        }
        let dim = size - 1;
        let mut skeleta = Vec::with_capacity(dim + 1);
        for n in 0..=dim {
            let mut set = BTreeSet::new();
            for f in &facets {
                subsets_of_size(f, n + 1, &mut set);
            }
            skeleta.push(SimplexIndex::from_set(set));
        }
        let vertices: Vec<Vertex> = skeleta[0].iter().map(|v| v[0]).collect();
        Ok(Triangulation { dim, vertices, skeleta })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vertices actually used.
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// N_n: the number of n-simplices.
    pub fn n_simplices(&self, n: usize) -> usize {
        if n <= self.dim {
            self.skeleta[n].len()
        } else {
            0
        }
    }

    pub fn simplices(&self, n: usize) -> &SimplexIndex {
        &self.skeleta[n]
    }

    pub fn facets(&self) -> &SimplexIndex {
        &self.skeleta[self.dim]
    }

    pub fn contains(&self, s: &[Vertex]) -> bool {
        let mut t = s.to_vec();
        t.sort_unstable();
        !t.is_empty() && t.len() <= self.dim + 1 && self.skeleta[t.len() - 1].position(&t).is_some()
    }

    pub fn index_of(&self, s: &[Vertex]) -> Option<usize> {
        if s.is_empty() || s.len() > self.dim + 1 {
            return None;
        }
        self.skeleta[s.len() - 1].position(s)
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.dim)
            .map(|n| {
                let c = self.skeleta[n].len() as i64;
                if n % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let n = self.vertices.len();
        let vpos: HashMap<Vertex, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        if self.dim >= 1 {
            for e in self.skeleta[1].iter() {
                let (a, b) = (vpos[&e[0]], vpos[&e[1]]);
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let root = find(&mut parent, 0);
        (0..n).all(|i| find(&mut parent, i) == root)
    }

    /// The link of `b`: all simplices `B` disjoint from `b` such that
    /// `b ∪ B` is in the complex. For a pure complex its top simplices are
    /// `f \ b` over facets `f ⊇ b`.
    pub fn link(&self, b: &[Vertex]) -> Result<Triangulation, ComplexError> {
        let mut bs = b.to_vec();
        bs.sort_unstable();
        if !self.contains(&bs) {
            return Err(ComplexError::SimplexNotFound(bs));
        }
        let mut facets = Vec::new();
        for f in self.facets().iter() {
            if bs.iter().all(|v| f.binary_search(v).is_ok()) {
                let rest: Vec<Vertex> = f.iter().copied().filter(|v| !bs.contains(v)).collect();
                if rest.is_empty() {
                    return Err(ComplexError::Empty);
                }
                facets.push(rest);
            }
        }
        Triangulation::new(facets)
    }

    /// Whether the used vertex labels are exactly 1..=N.
    pub fn is_contiguous(&self) -> bool {
        self.vertices.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Relabel vertices to 1..=N preserving order; returns the new
    /// triangulation and the old label of each new vertex (index i holds
    /// the old label of new vertex i+1).
    pub fn renumber_compact(&self) -> (Triangulation, Vec<Vertex>) {
        let old_of_new = self.vertices.clone();
        let new_of_old: HashMap<Vertex, Vertex> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, (i + 1) as Vertex)).collect();
        let facets = self
            .facets()
            .iter()
            .map(|f| f.iter().map(|v| new_of_old[v]).collect())
            .collect();
        (Triangulation::new(facets).expect("relabeling preserves validity"), old_of_new)
    }
}

// ---------------------------------------------------------------------------
// closedness / pseudomanifold validation

/// Outcome of the closed-pseudomanifold check: ridge degrees plus link
/// connectivity. `pass` is the conjunction; the lists name the offenders.
#[derive(Debug, Clone)]
pub struct ClosednessReport {
    pub pass: bool,
    /// ridges ((dim-1)-simplices) not contained in exactly two facets,
    /// with their actual facet counts
    pub bad_ridges: Vec<(Vec<Vertex>, usize)>,
    /// edges whose link is disconnected (empty below dimension 2)
    pub disconnected_edge_links: Vec<Vec<Vertex>>,
    /// vertices whose link is disconnected
    pub disconnected_vertex_links: Vec<Vertex>,
}

impl Triangulation {
    /// Check that the complex looks like a closed manifold: every ridge in
    /// exactly two facets, every edge link connected, every vertex link
    /// connected. (Full PL sphere recognition of links is not attempted.)
    pub fn validate_closed(&self) -> ClosednessReport {
        let mut report = ClosednessReport {
            pass: true,
            bad_ridges: Vec::new(),
            disconnected_edge_links: Vec::new(),
            disconnected_vertex_links: Vec::new(),
        };
        if self.dim == 0 {
            return report; // a finite set of points is a closed 0-manifold
        }
        let mut ridge_count: HashMap<&[Vertex], usize> = HashMap::new();
        for r in self.skeleta[self.dim - 1].iter() {
            ridge_count.insert(r.as_slice(), 0);
        }
        for f in self.facets().iter() {
            for omit in 0..f.len() {
                let ridge: Vec<Vertex> = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != omit)
                    .map(|(_, &v)| v)
                    .collect();
                *ridge_count.get_mut(ridge.as_slice()).unwrap() += 1;
            }
        }
        for r in self.skeleta[self.dim - 1].iter() {
            let c = ridge_count[r.as_slice()];
            if c != 2 {
                report.bad_ridges.push((r.clone(), c));
            }
        }
        report.bad_ridges.sort();
        // links are only forced connected in codimension >= 2 (an edge link
        // in a surface is two points)
        if self.dim >= 2 {
            for v in self.skeleta[0].iter() {
                match self.link(v) {
                    Ok(l) if l.is_connected() => {}
                    _ => report.disconnected_vertex_links.push(v[0]),
                }
            }
        }
        if self.dim >= 3 {
            for e in self.skeleta[1].iter() {
                match self.link(e) {
                    Ok(l) if l.is_connected() => {}
                    _ => report.disconnected_edge_links.push(e.clone()),
                }
            }
        }
        report.pass = report.bad_ridges.is_empty()
            && report.disconnected_edge_links.is_empty()
            && report.disconnected_vertex_links.is_empty();
        report
    }
}

// ---------------------------------------------------------------------------
// file formats

impl Triangulation {
    /// Text format: `vertices N` then one `pentachoron i1 i2 i3 i4 i5` line
    /// per top simplex (keyword `simplex` for dimensions other than 4;
    /// either keyword is accepted on input when the arity matches). `#`
    /// starts a comment line. Labels must be exactly 1..N with every
    /// vertex used.
    pub fn parse_text(doc: &str) -> Result<Triangulation, ComplexError> {
        let mut declared: Option<usize> = None;
        let mut facets: Vec<Vec<Vertex>> = Vec::new();
        for (lineno, raw) in doc.lines().enumerate() {
            let line = raw.trim();
            let lineno = lineno + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap();
            match keyword {
                "vertices" => {
                    if declared.is_some() {
                        return Err(ComplexError::Parse {
                            line: lineno,
                            msg: "second `vertices` line".into(),
                        });
                    }
                    let n: usize = words
                        .next()
                        .ok_or(ComplexError::Parse {
                            line: lineno,
                            msg: "missing vertex count".into(),
                        })?
                        .parse()
                        .map_err(|_| ComplexError::Parse {
                            line: lineno,
                            msg: "vertex count is not a number".into(),
                        })?;
                    if words.next().is_some() {
                        return Err(ComplexError::Parse {
                            line: lineno,
                            msg: "trailing tokens after vertex count".into(),
                        });
                    }
                    declared = Some(n);
                }
                "pentachoron" | "simplex" => {
                    let mut tuple = Vec::new();
                    for w in words {
                        let v: Vertex = w.parse().map_err(|_| ComplexError::Parse {
                            line: lineno,
                            msg: format!("bad vertex `{w}`"),
                        })?;
                        tuple.push(v);
                    }
                    if keyword == "pentachoron" && tuple.len() != 5 {
                        return Err(ComplexError::Parse {
                            line: lineno,
                            msg: format!("pentachoron needs 5 vertices, got {}", tuple.len()),
                        });
                    }
                    if tuple.is_empty() {
                        return Err(ComplexError::Parse {
                            line: lineno,
                            msg: "empty simplex".into(),
                        });
                    }
                    facets.push(tuple);
                }
                other => {
                    return Err(ComplexError::Parse {
                        line: lineno,
                        msg: format!("unknown keyword `{other}`"),
                    });
                }
            }
        }
        let declared = declared.ok_or(ComplexError::Parse {
            line: 0,
            msg: "missing `vertices N` header".into(),
        })?;
        Self::finish_parse(declared, facets)
    }

    /// JSON format: `{"vertices": N, "pentachora": [[...], ...]}` (key
    /// `simplices` for dimensions other than 4; either accepted).
    pub fn parse_json(doc: &str) -> Result<Triangulation, ComplexError> {
        #[derive(serde::Deserialize)]
        struct Doc {
            vertices: usize,
            #[serde(default)]
            pentachora: Option<Vec<Vec<Vertex>>>,
            #[serde(default)]
            simplices: Option<Vec<Vec<Vertex>>>,
        }
        let doc: Doc = serde_json::from_str(doc).map_err(|e| ComplexError::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        let facets = match (doc.pentachora, doc.simplices) {
            (Some(p), None) => {
                if let Some(bad) = p.iter().find(|t| t.len() != 5) {
                    return Err(ComplexError::Parse {
                        line: 0,
                        msg: format!("pentachoron needs 5 vertices, got {}", bad.len()),
                    });
                }
                p
            }
            (None, Some(s)) => s,
            _ => {
                return Err(ComplexError::Parse {
                    line: 0,
                    msg: "need exactly one of `pentachora` / `simplices`".into(),
                })
            }
        };
        Self::finish_parse(doc.vertices, facets)
    }

    /// Accepts either format, sniffing for a leading `{`.
    pub fn parse(doc: &str) -> Result<Triangulation, ComplexError> {
        if doc.trim_start().starts_with('{') {
            Self::parse_json(doc)
        } else {
            Self::parse_text(doc)
        }
    }

    fn finish_parse(declared: usize, facets: Vec<Vec<Vertex>>) -> Result<Triangulation, ComplexError> {
        for f in &facets {
            for &v in f {
                if v == 0 || v as usize > declared {
                    return Err(ComplexError::VertexOutOfRange(v, declared));
                }
            }
        }
        let t = Triangulation::new(facets)?;
        for want in 1..=declared {
            if t.vertices.binary_search(&(want as Vertex)).is_err() {
                return Err(ComplexError::UnusedVertex(want as Vertex));
            }
        }
        Ok(t)
    }

    /// Canonical text serialization: header, then facets in lexicographic
    /// order with sorted tuples. Requires contiguous labels so that
    /// parse(serialize(T)) reproduces T exactly.
    pub fn serialize_text(&self) -> Result<String, ComplexError> {
        if !self.is_contiguous() {
            return Err(ComplexError::NotContiguous);
        }
        let keyword = if self.dim == 4 { "pentachoron" } else { "simplex" };
        let mut out = format!("vertices {}\n", self.n_vertices());
        for f in self.facets().iter() {
            out.push_str(keyword);
            for v in f {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        Ok(out)
    }

    /// Canonical JSON serialization (compact, key order fixed).
    pub fn serialize_json(&self) -> Result<String, ComplexError> {
        if !self.is_contiguous() {
            return Err(ComplexError::NotContiguous);
        }
        let key = if self.dim == 4 { "pentachora" } else { "simplices" };
        let mut out = format!("{{\"vertices\":{},\"{key}\":[", self.n_vertices());
        for (i, f) in self.facets().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('[');
            for (j, v) in f.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{v}");
            }
            out.push(']');
        }
        out.push_str("]}");
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// staircase products

/// Staircase (lexicographic shuffle) triangulation of `|A| × |B|`.
///
/// Vertices are pairs `(i, j)` flattened to `(i-1)·N₀(B) + j`, so the
/// product order of pairs matches the numeric order of the flattened
/// labels. Each pair of facets (σ, τ) contributes one top simplex per
/// monotone staircase path from `(σ_first, τ_first)` to `(σ_last, τ_last)`
/// — `C(dim σ + dim τ, dim σ)` of them, all sharing the two corners.
pub fn staircase_product(a: &Triangulation, b: &Triangulation) -> Result<Triangulation, ComplexError> {
    if !a.is_contiguous() || !b.is_contiguous() {
        return Err(ComplexError::NotContiguous);
    }
    let nb = b.n_vertices() as Vertex;
    let flat = |i: Vertex, j: Vertex| -> Vertex { (i - 1) * nb + j };
    let da = a.dim();
    let db = b.dim();
    let mut facets = Vec::new();
    // enumerate shuffles as bitmasks: bit set = advance in A, clear = in B
    let total = da + db;
    for fa in a.facets().iter() {
        for fb in b.facets().iter() {
            for mask in 0u32..(1 << total) {
                if (mask.count_ones() as usize) != da {
                    continue;
                }
                let mut ia = 0usize;
                let mut ib = 0usize;
                let mut simplex = Vec::with_capacity(total + 1);
                simplex.push(flat(fa[0], fb[0]));
                for step in 0..total {
                    if (mask >> step) & 1 == 1 {
                        ia += 1;
                    } else {
                        ib += 1;
                    }
                    simplex.push(flat(fa[ia], fb[ib]));
                }
                facets.push(simplex);
            }
        }
    }
    Triangulation::new(facets)
}

// ---------------------------------------------------------------------------
// fixtures

/// Names accepted by [`fixture`], in listing order.
pub const FIXTURE_NAMES: &[&str] = &[
    "S4", "CP2", "RP4", "S2xS2", "S2xS2tw", "S2xT2", "RP2xS2", "RP2xT2", "RP2xRP2", "T4", "S2",
    "RP2", "T2", "S1",
];

const CP2_DATA: &str = include_str!("../data/cp2.tri");
const RP4_DATA: &str = include_str!("../data/rp4.tri");
const RP2_DATA: &str = include_str!("../data/rp2.tri");
const T2_DATA: &str = include_str!("../data/t2.tri");
const S1_DATA: &str = include_str!("../data/s1.tri");

/// Boundary of the n-simplex on vertices 1..=n+1 (an (n-1)-sphere).
pub fn simplex_boundary(n: usize) -> Triangulation {
    let all: Vec<Vertex> = (1..=(n as Vertex + 1)).collect();
    let facets = (0..all.len())
        .map(|omit| {
            all.iter().enumerate().filter(|(i, _)| *i != omit).map(|(_, &v)| v).collect()
        })
        .collect();
    Triangulation::new(facets).expect("simplex boundary is a valid complex")
}

/// The bundled and product-generated example triangulations.
///
/// 4-manifolds: `S4` (boundary of the 5-simplex), `CP2` (9 vertices,
/// bundled), `RP4` (31 vertices, bundled), and the staircase products
/// `S2xS2`, `S2xT2`, `RP2xS2`, `RP2xT2`, `RP2xRP2`, `T4`. Lower
/// dimensions, mostly as product factors: `S2` (boundary of the
/// 4-vertex tetrahedron), `RP2` (6 vertices), `T2` (7 vertices), `S1`
/// (3 vertices). `S2xS2tw` — the twisted bundle — has no bundled
/// triangulation and always reports itself unavailable.
pub fn fixture(name: &str) -> Result<Triangulation, ComplexError> {
    let parse = |doc: &str| Triangulation::parse_text(doc).expect("bundled fixture data parses");
    let product = |x: &str, y: &str| {
        staircase_product(&fixture(x).unwrap(), &fixture(y).unwrap())
            .expect("product of bundled fixtures")
    };
    Ok(match name {
        "S4" => simplex_boundary(5),
        "S2" => simplex_boundary(3),
        "CP2" => parse(CP2_DATA),
        "RP4" => parse(RP4_DATA),
        "RP2" => parse(RP2_DATA),
        "T2" => parse(T2_DATA),
        "S1" => parse(S1_DATA),
        "S2xS2" => product("S2", "S2"),
        "S2xT2" => product("S2", "T2"),
        "RP2xS2" => product("RP2", "S2"),
        "RP2xT2" => product("RP2", "T2"),
        "RP2xRP2" => product("RP2", "RP2"),
        "T4" => product("T2", "T2"),
        "S2xS2tw" => return Err(ComplexError::UnavailableFixture(name.into())),
        _ => return Err(ComplexError::UnknownFixture(name.into())),
    })
}

/// The closed 4-manifold fixtures with bundled or generated data.
pub const CLOSED_4MANIFOLD_FIXTURES: &[&str] =
    &["S4", "CP2", "RP4", "S2xS2", "S2xT2", "RP2xS2", "RP2xT2", "RP2xRP2", "T4"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_boundary_counts() {
        let s4 = simplex_boundary(5);
        assert_eq!(s4.dim(), 4);
        assert_eq!(s4.n_simplices(0), 6);
        assert_eq!(s4.n_simplices(1), 15);
        assert_eq!(s4.n_simplices(2), 20);
        assert_eq!(s4.n_simplices(3), 15);
        assert_eq!(s4.n_simplices(4), 6);
        assert_eq!(s4.euler_characteristic(), 2);
        assert!(s4.validate_closed().pass);
    }

    #[test]
    fn single_pentachoron_has_boundary() {
        let t = Triangulation::new(vec![vec![1, 2, 3, 4, 5]]).unwrap();
        let rep = t.validate_closed();
        assert!(!rep.pass);
        assert_eq!(rep.bad_ridges.len(), 5);
        assert!(rep.bad_ridges.iter().all(|(_, c)| *c == 1));
    }

    #[test]
    fn parse_rejects_bad_documents() {
        assert!(matches!(
            Triangulation::parse_text("vertices 5\npentachoron 1 1 2 3 4\n"),
            Err(ComplexError::RepeatedVertex(_))
        ));
        assert!(matches!(
            Triangulation::parse_text("vertices 4\npentachoron 1 2 3 4 5\n"),
            Err(ComplexError::VertexOutOfRange(5, 4))
        ));
        assert!(matches!(
            Triangulation::parse_text("vertices 6\npentachoron 1 2 3 4 5\n"),
            Err(ComplexError::UnusedVertex(6))
        ));
        assert!(matches!(
            Triangulation::parse_text("pentachoron 1 2 3 4 5\n"),
            Err(ComplexError::Parse { .. })
        ));
        assert!(matches!(
            Triangulation::parse_text("vertices 5\npentachoron 1 2 3 4 5\npentachoron 5 4 3 2 1\n"),
            Err(ComplexError::DuplicateFacet(_))
        ));
        assert!(matches!(
            Triangulation::parse_text("vertices 5\nsimplex 1 2 3\npentachoron 1 2 3 4 5\n"),
            Err(ComplexError::NotPure(..))
        ));
    }

    #[test]
    fn text_round_trip_is_bit_exact() {
        let t = fixture("CP2").unwrap();
        let doc = t.serialize_text().unwrap();
        let t2 = Triangulation::parse_text(&doc).unwrap();
        assert_eq!(t2.serialize_text().unwrap(), doc);
        assert_eq!(t2.facets().all(), t.facets().all());
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        for name in ["S4", "T2"] {
            let t = fixture(name).unwrap();
            let doc = t.serialize_json().unwrap();
            let t2 = Triangulation::parse_json(&doc).unwrap();
            assert_eq!(t2.serialize_json().unwrap(), doc);
            // and the sniffing entry point agrees
            let t3 = Triangulation::parse(&doc).unwrap();
            assert_eq!(t3.serialize_json().unwrap(), doc);
        }
    }

    #[test]
    fn links_in_simplex_boundary() {
        let s4 = simplex_boundary(5);
        let l = s4.link(&[1, 2]).unwrap();
        assert_eq!(l.dim(), 2);
        assert_eq!(l.vertices(), &[3, 4, 5, 6]);
        assert_eq!(l.n_simplices(2), 4); // boundary of the tetrahedron 3456
        assert_eq!(l.euler_characteristic(), 2);
        let lv = s4.link(&[1]).unwrap();
        assert_eq!(lv.dim(), 3);
        assert_eq!(lv.n_simplices(3), 5);
        assert!(s4.link(&[7]).is_err());
    }

    #[test]
    fn product_counts_and_euler() {
        let s2s2 = fixture("S2xS2").unwrap();
        assert_eq!(s2s2.n_vertices(), 16);
        assert_eq!(s2s2.n_simplices(4), 96);
        assert_eq!(s2s2.euler_characteristic(), 4);
        assert!(s2s2.validate_closed().pass);

        let s2t2 = fixture("S2xT2").unwrap();
        assert_eq!(s2t2.n_simplices(4), 336);
        assert_eq!(s2t2.euler_characteristic(), 0);
        assert!(s2t2.validate_closed().pass);
    }

    #[test]
    fn product_with_point_is_identity() {
        let point = Triangulation::new(vec![vec![1]]).unwrap();
        let t2 = fixture("T2").unwrap();
        let p = staircase_product(&t2, &point).unwrap();
        assert_eq!(p.facets().all(), t2.facets().all());
        let q = staircase_product(&point, &t2).unwrap();
        assert_eq!(q.facets().all(), t2.facets().all());
    }

    #[test]
    fn euler_characteristic_multiplies_over_products() {
        let rp2 = fixture("RP2").unwrap();
        assert_eq!(rp2.euler_characteristic(), 1);
        let t2 = fixture("T2").unwrap();
        assert_eq!(t2.euler_characteristic(), 0);
        let rp2rp2 = fixture("RP2xRP2").unwrap();
        assert_eq!(rp2rp2.euler_characteristic(), 1);
        let t4 = fixture("T4").unwrap();
        assert_eq!(t4.euler_characteristic(), 0);
    }

    #[test]
    fn bundled_fixtures_validate() {
        for name in ["CP2", "RP4", "RP2", "T2", "S1"] {
            let t = fixture(name).unwrap();
            let rep = t.validate_closed();
            assert!(rep.pass, "{name}: {rep:?}");
            assert!(t.is_connected(), "{name} disconnected");
        }
        let cp2 = fixture("CP2").unwrap();
        assert_eq!(cp2.n_vertices(), 9);
        assert_eq!(cp2.n_simplices(4), 36);
        let rp4 = fixture("RP4").unwrap();
        assert_eq!(rp4.n_vertices(), 31);
        assert_eq!(
            (1..=4).map(|n| rp4.n_simplices(n)).collect::<Vec<_>>(),
            vec![270, 780, 900, 360]
        );
    }

    #[test]
    fn fixture_errors() {
        assert!(matches!(fixture("S2xS2tw"), Err(ComplexError::UnavailableFixture(_))));
        assert!(matches!(fixture("nope"), Err(ComplexError::UnknownFixture(_))));
    }

    #[test]
    fn edge_links_of_4_manifolds_are_2_spheres() {
        for name in ["S4", "CP2"] {
            let t = fixture(name).unwrap();
            for e in t.simplices(1).iter() {
                let l = t.link(e).unwrap();
                assert_eq!(l.euler_characteristic(), 2, "{name} edge {e:?}");
                assert!(l.is_connected());
                assert!(l.validate_closed().pass);
            }
        }
    }

    #[test]
    fn renumbering_compacts_gapped_labels() {
        let t = Triangulation::new(vec![vec![2, 5, 9], vec![2, 5, 11]]).unwrap();
        assert!(!t.is_contiguous());
        assert!(t.serialize_text().is_err());
        let (c, old) = t.renumber_compact();
        assert!(c.is_contiguous());
        assert_eq!(old, vec![2, 5, 9, 11]);
        assert_eq!(c.facets().all(), [vec![1, 2, 3], vec![1, 2, 4]]);
    }
}
