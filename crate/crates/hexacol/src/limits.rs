//! The constant edge-functional table as a formal o → 0 limit of a
//! one-parameter family built from a simplicial 2-cocycle.
//!
//! The family attaches to each triangle ijk the unit ω_ijk = 1 + o·ρ_ijk,
//! where ρ is a 2-cocycle with values in the base field and o is a formal
//! Laurent variable. A tetrahedron's 6×2 functional matrix then has
//! ω-entries. Right-multiplying by A_o = (1 o⁻¹; 0 −o⁻¹), taking the
//! entrywise limit at o = 0, and applying the constant shears/scalings
//! A₁, A₂ reproduces the constant table exactly — for every ρ that is
//! generic in the sense that ρ_abc ≠ ρ_abd on each tetrahedron abcd (the
//! denominator appearing in A₂).
//!
//! Edge vectors reach the same limit dually. Colorings transform
//! contragrediently to functionals, v ↦ T⁻¹v per tetrahedron with
//! T = A_o·A₁·A₂, and [`edge_vector_limit_check`] verifies on the model
//! pentachoron that for each edge, the kernel line of the one-parameter
//! functional matrix supported on the tetrahedra containing that edge is
//! carried — after stripping its o-valuation and setting o = 0 — onto the
//! constant edge-vector table, up to a nonzero scalar per edge (the
//! natural freedom when limiting lines rather than vectors).
//!
//! Everything is exact: o is never a numeric epsilon, limits are symbolic
//! substitutions, and finite characteristic is fully supported.

use std::collections::BTreeMap;

use rand::Rng;
use thiserror::Error;

use crate::algebra::{Elt, Field, Matrix};
use crate::coloring;
use crate::complex::Vertex;

#[derive(Debug, Error)]
pub enum LimitError {
    #[error("2-cocycle condition fails on tetrahedron {0:?}")]
    CocycleCondition(Vec<Vertex>),
    #[error("no value for triangle {0:?}")]
    MissingTriangle(Vec<Vertex>),
    #[error("vertex labels must be ascending and within 1..={1}, got {0:?}")]
    BadVertices(Vec<Vertex>, Vertex),
    #[error("degenerate cocycle: equal values on the two leading triangles of tetrahedron {0:?}")]
    Degenerate(Vec<Vertex>),
    #[error("entry ({row}, {col}) keeps a pole at o = 0")]
    ResidualPole { row: usize, col: usize },
    #[error("cannot multiply a {0}×{1} matrix by a {2}×{3} one")]
    Shape(usize, usize, usize, usize),
    #[error("no generic cocycle found in {0} attempts")]
    GenericSearchExhausted(usize),
    #[error("evaluation at o = 0 is only defined for nonnegative powers")]
    NegativePower,
}

// ---------------------------------------------------------------------------
// Laurent polynomials in the limit parameter

/// A finite Laurent polynomial in the limit parameter `o`: finitely many
/// terms c·oᵏ with k possibly negative, coefficients in a fixed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laurent {
    field: Field,
    /// exponent → nonzero coefficient
    coeffs: BTreeMap<i64, Elt>,
}

impl Laurent {
    pub fn zero(field: &Field) -> Laurent {
        Laurent { field: field.clone(), coeffs: BTreeMap::new() }
    }

    pub fn constant(field: &Field, c: Elt) -> Laurent {
        Laurent::term(field, 0, c)
    }

    /// The single term c·oᵏ.
    pub fn term(field: &Field, k: i64, c: Elt) -> Laurent {
        let mut coeffs = BTreeMap::new();
        if c != field.zero() {
            coeffs.insert(k, c);
        }
        Laurent { field: field.clone(), coeffs }
    }

    /// The variable o itself.
    pub fn o(field: &Field) -> Laurent {
        Laurent::term(field, 1, field.one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> Elt {
        self.coeffs.get(&k).copied().unwrap_or_else(|| self.field.zero())
    }

    /// Smallest exponent with a nonzero coefficient; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&k, &c) in &other.coeffs {
            let s = self.field.add(out.coeff(k), c);
            if s == self.field.zero() {
                out.coeffs.remove(&k);
            } else {
                out.coeffs.insert(k, s);
            }
        }
        out
    }

    pub fn neg(&self) -> Laurent {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = self.field.neg(*c);
        }
        out
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero(&self.field);
        for (&ka, &ca) in &self.coeffs {
            for (&kb, &cb) in &other.coeffs {
                let t = Laurent::term(&self.field, ka + kb, self.field.mul(ca, cb));
                out = out.add(&t);
            }
        }
        out
    }

    pub fn scale(&self, c: Elt) -> Laurent {
        self.mul(&Laurent::constant(&self.field, c))
    }

    /// Multiply by oᵏ (k may be negative).
    pub fn shift(&self, k: i64) -> Laurent {
        let mut out = Laurent::zero(&self.field);
        for (&e, &c) in &self.coeffs {
            out.coeffs.insert(e + k, c);
        }
        out
    }

    /// Value at o = 0: the constant coefficient, defined only when no
    /// negative power survives.
    pub fn at_zero(&self) -> Result<Elt, LimitError> {
        match self.valuation() {
            Some(v) if v < 0 => Err(LimitError::NegativePower),
            _ => Ok(self.coeff(0)),
        }
    }

    /// Value at a nonzero field element.
    pub fn eval(&self, o_val: Elt) -> Result<Elt, LimitError> {
        let f = &self.field;
        let mut acc = f.zero();
        for (&k, &c) in &self.coeffs {
            let base = if k >= 0 {
                o_val
            } else {
                f.inv(o_val).map_err(|_| LimitError::NegativePower)?
            };
            let mut p = f.one();
            for _ in 0..k.unsigned_abs() {
                p = f.mul(p, base);
            }
            acc = f.add(acc, f.mul(c, p));
        }
        Ok(acc)
    }

    /// `3*o^-1 + 1 + 2*o^2` style, ascending powers; `0` when zero.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&k, &c) in &self.coeffs {
            let cs = crate::algebra::coeff_string(&self.field, c);
            parts.push(match k {
                0 => cs,
                1 if cs == "1" => "o".into(),
                1 => format!("{cs}*o"),
                _ if cs == "1" => format!("o^{k}"),
                _ => format!("{cs}*o^{k}"),
            });
        }
        parts.join(" + ")
    }
}

/// A dense matrix of Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Laurent>,
}

impl LaurentMatrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> LaurentMatrix {
        LaurentMatrix { rows, cols, entries: vec![Laurent::zero(field); rows * cols] }
    }

    /// Lift an exact matrix to constant Laurent entries.
    pub fn from_const(m: &Matrix) -> LaurentMatrix {
        let mut out = LaurentMatrix::zero(m.field(), m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                out.set(r, c, Laurent::constant(m.field(), m.get(r, c)));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Laurent {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Laurent) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &LaurentMatrix) -> Result<LaurentMatrix, LimitError> {
        if self.cols != other.rows {
            return Err(LimitError::Shape(self.rows, self.cols, other.rows, other.cols));
        }
        let field = &self.entries[0].field;
        let mut out = LaurentMatrix::zero(field, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Laurent::zero(field);
                for t in 0..self.cols {
                    acc = acc.add(&self.get(r, t).mul(other.get(t, c)));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Entrywise value at o = 0; errors if any entry keeps a pole.
    pub fn limit_at_zero(&self) -> Result<Matrix, LimitError> {
        let field = self.entries[0].field.clone();
        let mut out = Matrix::zero(&field, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self
                    .get(r, c)
                    .at_zero()
                    .map_err(|_| LimitError::ResidualPole { row: r, col: c })?;
                out.set(r, c, v);
            }
        }
        Ok(out)
    }

    /// Entrywise value at a nonzero field element.
    pub fn eval(&self, o_val: Elt) -> Result<Matrix, LimitError> {
        let field = self.entries[0].field.clone();
        let mut out = Matrix::zero(&field, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).eval(o_val)?);
            }
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// cocycle data

/// Values ρ_ijk of a simplicial 2-cocycle on the complete complex over
/// vertices 1..=n, together with the derived units ω_ijk = 1 + o·ρ_ijk.
/// The constructor enforces the cocycle condition
/// ρ_bcd − ρ_acd + ρ_abd − ρ_abc = 0 on every tetrahedron abcd, which is
/// exactly what makes ω a 2-cocycle for every value of o.
#[derive(Debug, Clone)]
pub struct CocycleData2 {
    field: Field,
    n: Vertex,
    values: BTreeMap<[Vertex; 3], Elt>,
}

impl CocycleData2 {
    pub fn new(
        field: &Field,
        n: Vertex,
        values: BTreeMap<[Vertex; 3], Elt>,
    ) -> Result<CocycleData2, LimitError> {
        let data = CocycleData2 { field: field.clone(), n, values };
        for tri in combinations(n, 3) {
            let key = [tri[0], tri[1], tri[2]];
            if !data.values.contains_key(&key) {
                return Err(LimitError::MissingTriangle(key.to_vec()));
            }
        }
        for tet in combinations(n, 4) {
            let [a, b, c, d] = [tet[0], tet[1], tet[2], tet[3]];
            let s = data.field.add(
                data.field.sub(data.rho([b, c, d])?, data.rho([a, c, d])?),
                data.field.sub(data.rho([a, b, d])?, data.rho([a, b, c])?),
            );
            if s != data.field.zero() {
                return Err(LimitError::CocycleCondition(tet));
            }
        }
        Ok(data)
    }

    /// The coboundary of a 1-cochain η: ρ_ijk = η_jk − η_ik + η_ij. Always
    /// a 2-cocycle, and every 2-cocycle on a complete complex arises this
    /// way.
    pub fn from_potential(
        field: &Field,
        n: Vertex,
        eta: &BTreeMap<[Vertex; 2], Elt>,
    ) -> Result<CocycleData2, LimitError> {
        let get = |i: Vertex, j: Vertex| -> Result<Elt, LimitError> {
            eta.get(&[i, j]).copied().ok_or(LimitError::MissingTriangle(vec![i, j]))
        };
        let mut values = BTreeMap::new();
        for tri in combinations(n, 3) {
            let [i, j, k] = [tri[0], tri[1], tri[2]];
            let v = field.add(field.sub(get(j, k)?, get(i, k)?), get(i, j)?);
            values.insert([i, j, k], v);
        }
        CocycleData2::new(field, n, values)
    }

    /// A random cocycle that is generic on every tetrahedron (the A₂
    /// denominator ρ_abc − ρ_abd is nonzero), drawn as the coboundary of a
    /// uniform random 1-cochain and retried until generic.
    pub fn random_generic<R: Rng>(
        field: &Field,
        n: Vertex,
        rng: &mut R,
    ) -> Result<CocycleData2, LimitError> {
        const ATTEMPTS: usize = 1000;
        for _ in 0..ATTEMPTS {
            let mut eta = BTreeMap::new();
            for e in combinations(n, 2) {
                eta.insert([e[0], e[1]], rng.gen_range(0..field.order()));
            }
            let data = CocycleData2::from_potential(field, n, &eta)?;
            if data.is_generic() {
                return Ok(data);
            }
        }
        Err(LimitError::GenericSearchExhausted(ATTEMPTS))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> Vertex {
        self.n
    }

    pub fn rho(&self, tri: [Vertex; 3]) -> Result<Elt, LimitError> {
        if !(tri[0] < tri[1] && tri[1] < tri[2] && tri[2] <= self.n && tri[0] >= 1) {
            return Err(LimitError::BadVertices(tri.to_vec(), self.n));
        }
        self.values.get(&tri).copied().ok_or(LimitError::MissingTriangle(tri.to_vec()))
    }

    /// The unit ω_ijk = 1 + o·ρ_ijk as a Laurent polynomial.
    pub fn omega(&self, tri: [Vertex; 3]) -> Result<Laurent, LimitError> {
        let one = Laurent::constant(&self.field, self.field.one());
        Ok(one.add(&Laurent::term(&self.field, 1, self.rho(tri)?)))
    }

    /// The A₂ denominator ρ_abc − ρ_abd of a tetrahedron.
    pub fn denominator(&self, tet: &[Vertex]) -> Result<Elt, LimitError> {
        let [a, b, c, d] = tet_labels(tet, self.n)?;
        Ok(self.field.sub(self.rho([a, b, c])?, self.rho([a, b, d])?))
    }

    /// The A₁ shear ρ_acd − ρ_abd of a tetrahedron.
    pub fn shear(&self, tet: &[Vertex]) -> Result<Elt, LimitError> {
        let [a, b, c, d] = tet_labels(tet, self.n)?;
        Ok(self.field.sub(self.rho([a, c, d])?, self.rho([a, b, d])?))
    }

    /// Generic on every tetrahedron of the complete complex.
    pub fn is_generic(&self) -> bool {
        combinations(self.n, 4)
            .into_iter()
            .all(|t| self.denominator(&t).map(|d| d != self.field.zero()).unwrap_or(false))
    }
}

fn combinations(n: Vertex, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: Vertex, n: Vertex, k: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

fn tet_labels(tet: &[Vertex], n: Vertex) -> Result<[Vertex; 4], LimitError> {
    if tet.len() != 4
        || tet.windows(2).any(|w| w[0] >= w[1])
        || tet[0] < 1
        || tet[3] > n
    {
        return Err(LimitError::BadVertices(tet.to_vec(), n));
    }
    Ok([tet[0], tet[1], tet[2], tet[3]])
}

// ---------------------------------------------------------------------------
// the one-parameter functional family and its limit

/// The 6×2 one-parameter functional matrix of a tetrahedron abcd: rows for
/// its edges in lexicographic order, entries built from the units ω.
pub fn nonconstant_rows(rho: &CocycleData2, tet: &[Vertex]) -> Result<LaurentMatrix, LimitError> {
    let [a, b, c, d] = tet_labels(tet, rho.n())?;
    let f = rho.field();
    let w = |x, y, z| rho.omega([x, y, z]);
    let zero = Laurent::zero(f);
    let rows: [[Laurent; 2]; 6] = [
        [w(b, c, d)?.sub(&w(a, c, d)?), zero.clone()],
        [w(a, b, d)?, w(b, c, d)?],
        [w(a, b, c)?.neg(), w(b, c, d)?.neg()],
        [w(a, b, d)?.neg(), w(a, c, d)?.neg()],
        [w(a, b, c)?, w(a, c, d)?],
        [zero, w(a, b, c)?.sub(&w(a, b, d)?)],
    ];
    let mut m = LaurentMatrix::zero(f, 6, 2);
    for (r, row) in rows.into_iter().enumerate() {
        let [x, y] = row;
        m.set(r, 0, x);
        m.set(r, 1, y);
    }
    Ok(m)
}

/// The family for the model tetrahedron 1234.
pub fn nonconstant_functionals(rho: &CocycleData2) -> Result<LaurentMatrix, LimitError> {
    nonconstant_rows(rho, &[1, 2, 3, 4])
}

/// A_o = (1 o⁻¹; 0 −o⁻¹), the o-dependent change of coloring coordinates.
pub fn a_o(field: &Field) -> LaurentMatrix {
    let mut m = LaurentMatrix::zero(field, 2, 2);
    m.set(0, 0, Laurent::constant(field, field.one()));
    m.set(0, 1, Laurent::term(field, -1, field.one()));
    m.set(1, 1, Laurent::term(field, -1, field.neg(field.one())));
    m
}

/// A₁ = (1 ρ_acd−ρ_abd; 0 1) for a tetrahedron abcd.
pub fn a_1(rho: &CocycleData2, tet: &[Vertex]) -> Result<LaurentMatrix, LimitError> {
    let f = rho.field();
    let mut m = LaurentMatrix::from_const(&Matrix::identity(f, 2));
    m.set(0, 1, Laurent::constant(f, rho.shear(tet)?));
    Ok(m)
}

/// A₂ = (1 0; 0 (ρ_abc−ρ_abd)⁻¹) for a tetrahedron abcd; errors when the
/// denominator vanishes.
pub fn a_2(rho: &CocycleData2, tet: &[Vertex]) -> Result<LaurentMatrix, LimitError> {
    let f = rho.field();
    let d = rho.denominator(tet)?;
    let inv = f.inv(d).map_err(|_| LimitError::Degenerate(tet.to_vec()))?;
    let mut m = LaurentMatrix::from_const(&Matrix::identity(f, 2));
    m.set(1, 1, Laurent::constant(f, inv));
    Ok(m)
}

/// Step-by-step limit for the model tetrahedron 1234: right-multiply by
/// A_o, take the entrywise limit at o = 0, then apply A₁ and A₂. The
/// result is an exact matrix over the base field; for every generic ρ it
/// equals the constant functional table.
pub fn limit_transform(m: &LaurentMatrix, rho: &CocycleData2) -> Result<Matrix, LimitError> {
    limit_transform_for(m, rho, &[1, 2, 3, 4])
}

/// The same, for an arbitrary tetrahedron's family.
pub fn limit_transform_for(
    m: &LaurentMatrix,
    rho: &CocycleData2,
    tet: &[Vertex],
) -> Result<Matrix, LimitError> {
    let prime = m.mul(&a_o(rho.field()))?.limit_at_zero()?;
    let sheared = LaurentMatrix::from_const(&prime).mul(&a_1(rho, tet)?)?.mul(&a_2(rho, tet)?)?;
    sheared.limit_at_zero()
}

/// One-shot variant: multiply by the whole product A_o·A₁·A₂ first, then
/// take the limit. Agrees with [`limit_transform_for`] whenever both are
/// defined.
pub fn limit_transform_one_shot(
    m: &LaurentMatrix,
    rho: &CocycleData2,
    tet: &[Vertex],
) -> Result<Matrix, LimitError> {
    m.mul(&a_o(rho.field()))?.mul(&a_1(rho, tet)?)?.mul(&a_2(rho, tet)?)?.limit_at_zero()
}

/// The constant 6×2 functional table the limit must reproduce: rows for
/// the edges of the model tetrahedron in lexicographic order.
pub fn constant_functional_target(field: &Field) -> Matrix {
    let u = [1, 2, 3, 4, 5];
    let t = [1, 2, 3, 4];
    let mut m = Matrix::zero(field, 6, 2);
    for (r, e) in coloring::edge_pairs(&t).into_iter().enumerate() {
        let (x, y) = coloring::edge_functional_block(field, &u, e, &t)
            .expect("model tetrahedron blocks exist");
        m.set(r, 0, x);
        m.set(r, 1, y);
    }
    m
}

// ---------------------------------------------------------------------------
// edge vectors through the limit

/// The intermediate ρ-difference matrix: the entrywise limit of
/// (family)·A_o before the shears, exposed for step-by-step inspection.
pub fn pre_shear_limit(m: &LaurentMatrix, field: &Field) -> Result<Matrix, LimitError> {
    m.mul(&a_o(field))?.limit_at_zero()
}

/// The one-parameter functional matrix of the model pentachoron 12345:
/// one row per edge (lexicographic), one (x, y) column pair per
/// tetrahedron (lexicographic), per-tetrahedron blocks signed by the
/// position of the omitted vertex exactly as in the constant theory.
pub fn nonconstant_pentachoron_matrix(rho: &CocycleData2) -> Result<LaurentMatrix, LimitError> {
    let f = rho.field();
    let verts: Vec<Vertex> = (1..=5).collect();
    let tets = combinations(5, 4);
    let edges = combinations(5, 2);
    let mut m = LaurentMatrix::zero(f, edges.len(), 2 * tets.len());
    for (r, e) in edges.iter().enumerate() {
        for (ti, tet) in tets.iter().enumerate() {
            if !e.iter().all(|v| tet.contains(v)) {
                continue;
            }
            let rows = nonconstant_rows(rho, tet)?;
            let pos = coloring::edge_pairs(tet)
                .into_iter()
                .position(|(a, b)| a == e[0] && b == e[1])
                .expect("edge is in the tetrahedron");
            let omitted = verts.iter().position(|v| !tet.contains(v)).expect("proper face");
            let neg = omitted % 2 == 1; // sign (-1)^(i+1), i = omitted+1
            let (mut x, mut y) = (rows.get(pos, 0).clone(), rows.get(pos, 1).clone());
            if neg {
                x = x.neg();
                y = y.neg();
            }
            m.set(r, 2 * ti, x);
            m.set(r, 2 * ti + 1, y);
        }
    }
    Ok(m)
}

fn laurent_det(m: &[Vec<Laurent>], field: &Field) -> Laurent {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = Laurent::zero(field);
    for (i, row) in m.iter().enumerate() {
        if row[0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Laurent>> = m
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let term = row[0].mul(&laurent_det(&minor, field));
        acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Verify, on the model pentachoron, that edge vectors pass to the
/// constant table through the dual limit. For each edge: the kernel line
/// of the one-parameter functional matrix among colorings supported on
/// the tetrahedra containing the edge is derived by polynomial Cramer
/// cofactors, certified by formally annihilating all ten functional rows,
/// transformed per tetrahedron by (A_o·A₁·A₂)⁻¹, stripped of its common
/// o-valuation, and evaluated at o = 0. Returns true iff every edge lands
/// on a nonzero scalar multiple of its constant edge-vector blocks.
pub fn edge_vector_limit_check(rho: &CocycleData2) -> Result<bool, LimitError> {
    let f = rho.field().clone();
    let phi = nonconstant_pentachoron_matrix(rho)?;
    let tets = combinations(5, 4);
    for e in combinations(5, 2) {
        // the three tetrahedra containing the edge, and their column pairs
        let sup: Vec<usize> = (0..tets.len())
            .filter(|&ti| e.iter().all(|v| tets[ti].contains(v)))
            .collect();
        let cols: Vec<usize> = sup.iter().flat_map(|&ti| [2 * ti, 2 * ti + 1]).collect();
        let restricted: Vec<Vec<Laurent>> = (0..phi.rows())
            .map(|r| cols.iter().map(|&c| phi.get(r, c).clone()).collect())
            .collect();

        // Cramer cofactors of the first five-row subset with a nonzero
        // cofactor vector
        let mut kernel: Option<Vec<Laurent>> = None;
        'subsets: for rows in subsets_of_five(phi.rows()) {
            let sub: Vec<&Vec<Laurent>> = rows.iter().map(|&r| &restricted[r]).collect();
            let mut cof = Vec::with_capacity(6);
            for j in 0..6 {
                let minor: Vec<Vec<Laurent>> = sub
                    .iter()
                    .map(|row| {
                        row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect()
                    })
                    .collect();
                let d = laurent_det(&minor, &f);
                cof.push(if j % 2 == 0 { d } else { d.neg() });
            }
            if cof.iter().any(|c| !c.is_zero()) {
                kernel = Some(cof);
                break 'subsets;
            }
        }
        let Some(mut w) = kernel else { return Ok(false) };

        // certificate: w annihilates every functional row, identically in o
        for row in &restricted {
            let mut s = Laurent::zero(&f);
            for (a, b) in row.iter().zip(&w) {
                s = s.add(&a.mul(b));
            }
            if !s.is_zero() {
                return Ok(false);
            }
        }

        // strip the common o-valuation, transform contragrediently per
        // tetrahedron, strip again, and set o = 0
        strip_valuation(&mut w);
        let mut transformed = Vec::with_capacity(6);
        for (bi, &ti) in sup.iter().enumerate() {
            let tet = &tets[ti];
            let dd = rho.denominator(tet)?;
            if dd == f.zero() {
                return Err(LimitError::Degenerate(tet.clone()));
            }
            let ee = rho.shear(tet)?;
            let (x, y) = (&w[2 * bi], &w[2 * bi + 1]);
            // (A_o)⁻¹ = (1 1; 0 −o), then (A₁)⁻¹ = (1 −E; 0 1), then
            // (A₂)⁻¹ = (1 0; 0 D)
            let x1 = x.add(y);
            let y1 = y.mul(&Laurent::o(&f)).neg();
            let x2 = x1.sub(&y1.scale(ee));
            let y2 = y1;
            transformed.push(x2);
            transformed.push(y2.scale(dd));
        }
        strip_valuation(&mut transformed);
        let mut limit = Vec::with_capacity(6);
        for v in &transformed {
            limit.push(v.at_zero()?);
        }

        // compare with the constant blocks up to one nonzero scalar
        let mut target = Vec::with_capacity(6);
        for &ti in &sup {
            let (x, y) = coloring::edge_vector_block(&f, &tets[ti], (e[0], e[1]))
                .expect("edge is in the tetrahedron");
            target.push(x);
            target.push(y);
        }
        let Some(i0) = target.iter().position(|&v| v != f.zero()) else { return Ok(false) };
        if limit[i0] == f.zero() {
            return Ok(false);
        }
        let s = f.mul(target[i0], f.inv(limit[i0]).expect("nonzero"));
        if (0..6).any(|i| f.mul(limit[i], s) != target[i]) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn strip_valuation(v: &mut [Laurent]) {
    let val = v.iter().filter_map(|w| w.valuation()).min();
    if let Some(val) = val {
        for w in v.iter_mut() {
            *w = w.shift(-val);
        }
    }
}

fn subsets_of_five(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() == 5 {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out
}
