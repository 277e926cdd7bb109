//! Polynomial and bilinear cochains on permitted colorings of standard
//! simplices, their coboundary, and bounded-degree cohomology.
//!
//! A degree-n cochain lives on `V_{Δⁿ}`, the permitted colorings of the
//! standard n-simplex on vertices `1..n+1`. We parametrize `V_{Δⁿ}` once
//! and for all by the non-pivot ambient coordinates of the reduced
//! constraint system, so a cochain has a unique canonical form: a formal
//! polynomial in those free coordinates (two disjoint copies of them for a
//! bilinear form). The coboundary transports a cochain to the n+1 facets
//! of `Δ^{n+1}` by order-preserving vertex maps, restricts each copy to
//! `V_{Δ^{n+1}}`, and sums with alternating signs.

use std::collections::HashMap;

use thiserror::Error;

use crate::algebra::{Elt, Field, Matrix, MPoly, Subspace};
use crate::coloring;
use crate::complex::{Triangulation, Vertex};

#[derive(Debug, Error)]
pub enum HexError {
    #[error("standard simplex degree must be at least 3, got {0}")]
    DegreeTooLow(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("primed variable `{0}` in a polynomial (non-bilinear) cochain")]
    UnexpectedPrime(String),
    #[error("bilinear cochain must have degree (1,1) in the two slots")]
    NotBilinear,
    #[error("cochain literal: {0}")]
    Literal(String),
    #[error("unknown built-in cocycle `{0}`")]
    UnknownCocycle(String),
    #[error("built-in cocycle `{0}` requires characteristic 2, field has characteristic {1}")]
    WrongCharacteristic(String, u64),
    #[error("monomial basis would have {0} elements, above the cap {1}")]
    ResourceCap(usize, usize),
}

/// How many monomial columns `hex_cohomology` may allocate before giving
/// up with a resource error.
pub const MONOMIAL_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Polynomial,
    Bilinear,
}

/// The permitted-coloring space of the standard n-simplex with a fixed
/// parametrization.
///
/// Ambient coordinates are `x_t, y_t` over the tetrahedra of `Δⁿ` in
/// index order; the constraint system is reduced once, its pivot
/// variables are expressed through the free (non-pivot) ones, and those
/// free ambient variables are the canonical coordinates of every cochain.
#[derive(Debug, Clone)]
pub struct SimplexColorings {
    n: usize,
    field: Field,
    complex: Triangulation,
    /// ambient indices of the free variables, ascending
    free: Vec<usize>,
    /// row per ambient variable: its expression over the free coordinates
    param: Vec<Vec<Elt>>,
}

impl SimplexColorings {
    pub fn new(field: &Field, n: usize) -> Result<SimplexColorings, HexError> {
        if n < 3 {
            return Err(HexError::DegreeTooLow(n));
        }
        let complex = Triangulation::new(vec![(1..=(n as Vertex + 1)).collect()])
            .expect("standard simplex is a valid complex");
        let mut constraints =
            coloring::functional_matrix(field, &complex).expect("dimension at least 3");
        let pivots = constraints.rref();
        let ambient = coloring::ambient_dim(&complex);
        let mut pivot_row_of: Vec<Option<usize>> = vec![None; ambient];
        for (i, &p) in pivots.iter().enumerate() {
            pivot_row_of[p] = Some(i);
        }
        let free: Vec<usize> = (0..ambient).filter(|a| pivot_row_of[*a].is_none()).collect();
        let free_pos: HashMap<usize, usize> =
            free.iter().enumerate().map(|(j, &a)| (a, j)).collect();
        let param: Vec<Vec<Elt>> = (0..ambient)
            .map(|a| {
                let mut row = vec![0; free.len()];
                match pivot_row_of[a] {
                    None => row[free_pos[&a]] = 1,
                    Some(i) => {
                        // pivot var = − Σ (RREF entry over free columns) · free var
                        for (&fa, &j) in free_pos.iter() {
                            let e = constraints.get(i, fa);
                            if e != 0 {
                                row[j] = field.neg(e);
                            }
                        }
                    }
                }
                row
            })
            .collect();
        Ok(SimplexColorings { n, field: field.clone(), complex, free, param })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn complex(&self) -> &Triangulation {
        &self.complex
    }

    /// dim `V_{Δⁿ}` = number of free coordinates.
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient_dim(&self) -> usize {
        coloring::ambient_dim(&self.complex)
    }

    /// Ambient indices of the canonical coordinates.
    pub fn free_vars(&self) -> &[usize] {
        &self.free
    }

    /// The constraint space itself (kernel of all edge functionals).
    pub fn subspace(&self) -> Subspace {
        coloring::permitted_space(&self.field, &self.complex).expect("dimension at least 3")
    }

    /// Names of the canonical coordinates, e.g. `y[1234]`; second-slot
    /// copies get a prime after the letter: `y'[1234]`.
    pub fn coordinate_names(&self, kind: Kind) -> Vec<String> {
        let base: Vec<String> =
            self.free.iter().map(|&a| coloring::coordinate_name(&self.complex, a)).collect();
        match kind {
            Kind::Polynomial => base,
            Kind::Bilinear => {
                let mut v = base.clone();
                v.extend(base.iter().map(|s| {
                    let (letter, rest) = s.split_at(1);
                    format!("{letter}'{rest}")
                }));
                v
            }
        }
    }

    /// Substitution rows sending each ambient variable to its expression
    /// over the free coordinates; for bilinear cochains the primed ambient
    /// block maps to the primed free block.
    fn param_rows(&self, kind: Kind) -> Vec<Vec<Elt>> {
        let d = self.dim();
        match kind {
            Kind::Polynomial => self.param.clone(),
            Kind::Bilinear => {
                let mut rows = Vec::with_capacity(2 * self.param.len());
                for r in &self.param {
                    let mut row = vec![0; 2 * d];
                    row[..d].copy_from_slice(r);
                    rows.push(row);
                }
                for r in &self.param {
                    let mut row = vec![0; 2 * d];
                    row[d..].copy_from_slice(r);
                    rows.push(row);
                }
                rows
            }
        }
    }

    /// Number of ambient variables a raw polynomial must have for `kind`.
    pub fn ambient_nvars(&self, kind: Kind) -> usize {
        match kind {
            Kind::Polynomial => self.ambient_dim(),
            Kind::Bilinear => 2 * self.ambient_dim(),
        }
    }

    /// Restrict an ambient polynomial to `V_{Δⁿ}`: substitute the
    /// parametrization, producing the canonical form.
    pub fn ambient_to_canonical(&self, kind: Kind, f: &MPoly) -> Result<HexCochain, HexError> {
        assert_eq!(f.nvars(), self.ambient_nvars(kind), "ambient variable count");
        let d = self.dim();
        let target = match kind {
            Kind::Polynomial => d,
            Kind::Bilinear => 2 * d,
        };
        let poly = f.substitute_linear(&self.param_rows(kind), target);
        if kind == Kind::Bilinear && !poly.is_zero() && poly.bidegree(d) != Some((1, 1)) {
            return Err(HexError::NotBilinear);
        }
        Ok(HexCochain { n: self.n, kind, poly })
    }
}

/// A constant hexagon cochain in canonical form: a formal polynomial in
/// the free coordinates of `V_{Δⁿ}` (two copies of them when bilinear).
/// Equality is equality of canonical forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexCochain {
    pub n: usize,
    pub kind: Kind,
    pub poly: MPoly,
}

impl HexCochain {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn render(&self, sc: &SimplexColorings) -> String {
        assert_eq!(sc.n(), self.n);
        self.poly.render(&sc.coordinate_names(self.kind))
    }
}

/// δc on `Δ^{n+1}`: alternating sum over the facets `1…k̂…(n+2)` of the
/// transported, restricted copies of `c`.
pub fn coboundary(field: &Field, c: &HexCochain) -> Result<HexCochain, HexError> {
    let sc_lo = SimplexColorings::new(field, c.n)?;
    let sc_hi = SimplexColorings::new(field, c.n + 1)?;
    let d_lo = sc_lo.dim();
    let ambient_hi = sc_hi.ambient_nvars(c.kind);
    let half_lo = sc_lo.ambient_dim();
    let half_hi = sc_hi.ambient_dim();
    let mut total = HexCochain {
        n: c.n + 1,
        kind: c.kind,
        poly: MPoly::zero(field, match c.kind {
            Kind::Polynomial => sc_hi.dim(),
            Kind::Bilinear => 2 * sc_hi.dim(),
        }),
    };
    let verts_hi: Vec<Vertex> = (1..=(c.n as Vertex + 2)).collect();
    for k in 1..=c.n + 2 {
        // order-preserving vertex map of the facet omitting k
        let image: Vec<Vertex> =
            verts_hi.iter().copied().filter(|&v| v as usize != k).collect();
        // canonical var j of c ↦ ambient var of Δ^{n+1}
        let map_one = |a_lo: usize| -> usize {
            let t_lo = sc_lo.complex().simplices(3).get(a_lo / 2);
            let t_hi: Vec<Vertex> = t_lo.iter().map(|&v| image[(v - 1) as usize]).collect();
            let ti = sc_hi.complex().index_of(&t_hi).expect("image tetrahedron exists");
            2 * ti + a_lo % 2
        };
        let var_map: Vec<usize> = match c.kind {
            Kind::Polynomial => sc_lo.free_vars().iter().map(|&a| map_one(a)).collect(),
            Kind::Bilinear => {
                let mut m: Vec<usize> =
                    sc_lo.free_vars().iter().map(|&a| map_one(a)).collect();
                m.extend(sc_lo.free_vars().iter().map(|&a| map_one(a) + half_hi));
                m
            }
        };
        debug_assert_eq!(var_map.len(), match c.kind {
            Kind::Polynomial => d_lo,
            Kind::Bilinear => 2 * d_lo,
        });
        let _ = half_lo;
        let transported = c.poly.map_vars(&var_map, ambient_hi);
        let restricted = sc_hi.ambient_to_canonical(c.kind, &transported)?;
        let signed = if k % 2 == 1 { restricted.poly } else { restricted.poly.neg() };
        total.poly = total.poly.add(&signed);
    }
    Ok(total)
}

/// Formal vanishing of δc on `V_{Δ^{n+1}}`.
pub fn is_cocycle(field: &Field, c: &HexCochain) -> Result<bool, HexError> {
    Ok(coboundary(field, c)?.is_zero())
}

// ---------------------------------------------------------------------------
// built-in cocycles

/// The four explicit cocycles: `c3_bilinear` = −x y′ − y x′ on the
/// tetrahedron; `c4_bilinear` = y_2345 y′_1234; and, in characteristic 2
/// only, the cubics `c4_cubic_1` = y_2345 y_1234² and `c4_cubic_2` =
/// bde + bce + ace + acd + abd where a = x_2345 + y_2345, …, e = x_1234 +
/// y_1234 (opposite-vertex order).
pub const BUILTIN_COCYCLES: &[&str] = &["c3_bilinear", "c4_bilinear", "c4_cubic_1", "c4_cubic_2"];

pub fn builtin_cocycle(field: &Field, name: &str) -> Result<HexCochain, HexError> {
    let c = match name {
        "c3_bilinear" => {
            let sc = SimplexColorings::new(field, 3)?;
            // ambient bilinear variables: x, y, x', y'
            let nv = sc.ambient_nvars(Kind::Bilinear);
            let var = |i| MPoly::var(field, nv, i);
            let f = var(0).mul(&var(3)).add(&var(1).mul(&var(2))).neg();
            sc.ambient_to_canonical(Kind::Bilinear, &f)?
        }
        "c4_bilinear" => {
            let sc = SimplexColorings::new(field, 4)?;
            let nv = sc.ambient_nvars(Kind::Bilinear);
            let half = sc.ambient_dim();
            let y = |t: &[Vertex]| 2 * sc.complex().index_of(t).unwrap() + 1;
            let f = MPoly::var(field, nv, y(&[2, 3, 4, 5]))
                .mul(&MPoly::var(field, nv, half + y(&[1, 2, 3, 4])));
            sc.ambient_to_canonical(Kind::Bilinear, &f)?
        }
        "c4_cubic_1" | "c4_cubic_2" => {
            if field.characteristic() != 2 {
                return Err(HexError::WrongCharacteristic(
                    name.into(),
                    field.characteristic(),
                ));
            }
            let sc = SimplexColorings::new(field, 4)?;
            let nv = sc.ambient_nvars(Kind::Polynomial);
            let xv = |t: &[Vertex]| {
                MPoly::var(field, nv, 2 * sc.complex().index_of(t).unwrap())
            };
            let yv = |t: &[Vertex]| {
                MPoly::var(field, nv, 2 * sc.complex().index_of(t).unwrap() + 1)
            };
            let f = if name == "c4_cubic_1" {
                yv(&[2, 3, 4, 5]).mul(&yv(&[1, 2, 3, 4]).pow(2))
            } else {
                // per-tetrahedron sums x_t + y_t, letters in opposite-vertex
                // order: a ↔ 2345, b ↔ 1345, c ↔ 1245, d ↔ 1235, e ↔ 1234
                let s = |t: &[Vertex]| xv(t).add(&yv(t));
                let (a, b, c, d, e) = (
                    s(&[2, 3, 4, 5]),
                    s(&[1, 3, 4, 5]),
                    s(&[1, 2, 4, 5]),
                    s(&[1, 2, 3, 5]),
                    s(&[1, 2, 3, 4]),
                );
                b.mul(&d).mul(&e)
                    .add(&b.mul(&c).mul(&e))
                    .add(&a.mul(&c).mul(&e))
                    .add(&a.mul(&c).mul(&d))
                    .add(&a.mul(&b).mul(&d))
            };
            sc.ambient_to_canonical(Kind::Polynomial, &f)?
        }
        _ => return Err(HexError::UnknownCocycle(name.into())),
    };
    assert!(
        is_cocycle(field, &c)?,
        "built-in cochain {name} failed its cocycle check over {}",
        field.spec_string()
    );
    Ok(c)
}

/// The documented basis-change utility: substitute, per tetrahedron,
/// `x_t ← −x_t + y_t` and `y_t ← x_t` (in each slot of a bilinear form),
/// then restrict back to canonical coordinates. This is the coordinate
/// change relating the `(x, y)` tables used here to the tilded variables
/// some other normalizations prefer; it is not an involution and carries
/// no cocycle-preservation claim.
pub fn xy_tilde_transform(field: &Field, c: &HexCochain) -> Result<HexCochain, HexError> {
    let sc = SimplexColorings::new(field, c.n)?;
    let half = sc.ambient_dim();
    let nv = sc.ambient_nvars(c.kind);
    let image_of = |a: usize| -> MPoly {
        let (base, off) = if a < half { (a, 0) } else { (a - half, half) };
        let t = base / 2;
        let xvar = MPoly::var(field, nv, off + 2 * t);
        let yvar = MPoly::var(field, nv, off + 2 * t + 1);
        if base % 2 == 0 {
            xvar.neg().add(&yvar) // x ↦ −x + y
        } else {
            xvar // y ↦ x
        }
    };
    let images: Vec<MPoly> = match c.kind {
        Kind::Polynomial => sc.free_vars().iter().map(|&a| image_of(a)).collect(),
        Kind::Bilinear => {
            let mut v: Vec<MPoly> = sc.free_vars().iter().map(|&a| image_of(a)).collect();
            v.extend(sc.free_vars().iter().map(|&a| image_of(a + half)));
            v
        }
    };
    let ambient = c.poly.subst(&images);
    sc.ambient_to_canonical(c.kind, &ambient)
}

// ---------------------------------------------------------------------------
// bounded-degree cohomology

/// All exponent vectors over `nvars` variables with total degree ≤ `d`,
/// in graded-lex descending order (matching polynomial term order).
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Vec<u8>> {
    fn rec(nvars: usize, left: u32, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == nvars {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=left {
            prefix.push(e as u8);
            rec(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| {
        let da: u32 = a.iter().map(|&x| x as u32).sum();
        let db: u32 = b.iter().map(|&x| x as u32).sum();
        db.cmp(&da).then_with(|| b.cmp(a))
    });
    out
}

/// The degree-(1,1) monomials `z_i z'_j` over two blocks of `d` variables,
/// in graded-lex descending order.
pub fn bilinear_monomials(d: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let mut e = vec![0u8; 2 * d];
            e[i] = 1;
            e[d + j] = 1;
            out.push(e);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HexDims {
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

/// Dimensions and representatives of `ker δ_n / im δ_{n-1}` on cochains of
/// polynomial degree ≤ D (for the bilinear kind the degree is fixed at
/// (1,1) and D is ignored). `homogeneous` restricts both sides to
/// homogeneous degree exactly D — δ preserves homogeneous degree, so the
/// two conventions decompose consistently.
#[derive(Debug, Clone)]
pub struct HexCohomologyReport {
    pub n: usize,
    pub degree_bound: u32,
    pub kind: Kind,
    /// monomial basis of the level-n cochain space, canonical order
    pub monomials: Vec<Vec<u8>>,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    pub le_degree: HexDims,
    pub homogeneous: HexDims,
    /// canonical coset representatives of the ≤-D quotient
    pub representatives: Vec<MPoly>,
}

impl HexCohomologyReport {
    /// Coefficient vector of a canonical cochain over `monomials`.
    pub fn coeff_vector(&self, field: &Field, c: &HexCochain) -> Result<Vec<Elt>, HexError> {
        assert_eq!(c.n, self.n);
        assert_eq!(c.kind, self.kind);
        let pos: HashMap<&[u8], usize> =
            self.monomials.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
        let mut v = vec![0; self.monomials.len()];
        for (e, coeff) in c.poly.terms() {
            let Some(&i) = pos.get(e.as_slice()) else {
                return Err(HexError::Literal(format!(
                    "cochain has a term outside the degree bound: exponents {e:?}"
                )));
            };
            v[i] = field.add(v[i], *coeff);
        }
        Ok(v)
    }
}

/// Degree-≤-D monomial basis for one level of the complex.
fn level_basis(kind: Kind, dim: usize, d_bound: u32) -> Vec<Vec<u8>> {
    match kind {
        Kind::Polynomial => monomials_up_to(dim, d_bound),
        Kind::Bilinear => bilinear_monomials(dim),
    }
}

/// Matrix of δ from level n (columns) to level n+1 (rows) on coefficient
/// vectors over the given monomial bases.
fn delta_matrix(
    field: &Field,
    n: usize,
    kind: Kind,
    src_monomials: &[Vec<u8>],
    dst_monomials: &[Vec<u8>],
) -> Result<Matrix, HexError> {
    let dst_pos: HashMap<&[u8], usize> =
        dst_monomials.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut m = Matrix::zero(field, dst_monomials.len(), src_monomials.len());
    let src_nvars = src_monomials.first().map_or(0, Vec::len);
    for (col, mono) in src_monomials.iter().enumerate() {
        let c = HexCochain {
            n,
            kind,
            poly: MPoly::from_terms(field, src_nvars, vec![(mono.clone(), 1)]),
        };
        let dc = coboundary(field, &c)?;
        for (e, coeff) in dc.poly.terms() {
            let &row = dst_pos
                .get(e.as_slice())
                .expect("coboundary cannot raise the polynomial degree");
            m.set(row, col, *coeff);
        }
    }
    Ok(m)
}

pub fn hex_cohomology(
    field: &Field,
    n: usize,
    degree_bound: u32,
    kind: Kind,
) -> Result<HexCohomologyReport, HexError> {
    if n < 3 {
        return Err(HexError::DegreeTooLow(n));
    }
    let sc_n = SimplexColorings::new(field, n)?;
    let sc_up = SimplexColorings::new(field, n + 1)?;
    let level_n = level_basis(kind, sc_n.dim(), degree_bound);
    let level_up = level_basis(kind, sc_up.dim(), degree_bound);
    for count in [level_n.len(), level_up.len()] {
        if count > MONOMIAL_CAP {
            return Err(HexError::ResourceCap(count, MONOMIAL_CAP));
        }
    }
    let delta_n = delta_matrix(field, n, kind, &level_n, &level_up)?;
    let cocycles = Subspace::kernel_of(&delta_n);
    let coboundaries = if n == 3 {
        // the complex starts at level 3: nothing maps in
        Subspace::zero(field, level_n.len())
    } else {
        let sc_dn = SimplexColorings::new(field, n - 1)?;
        let level_dn = level_basis(kind, sc_dn.dim(), degree_bound);
        if level_dn.len() > MONOMIAL_CAP {
            return Err(HexError::ResourceCap(level_dn.len(), MONOMIAL_CAP));
        }
        let delta_dn = delta_matrix(field, n - 1, kind, &level_dn, &level_n)?;
        Subspace::from_matrix(delta_dn.transpose())
    };
    let le_degree = HexDims {
        cocycles: cocycles.dim(),
        coboundaries: coboundaries.dim(),
        cohomology: cocycles.dim() - coboundaries.dim(),
    };

    // homogeneous slice: restrict to monomials of degree exactly D
    let deg_of = |m: &Vec<u8>| -> u32 { m.iter().map(|&x| x as u32).sum() };
    let homog_cols: Vec<usize> = (0..level_n.len())
        .filter(|&i| deg_of(&level_n[i]) == degree_bound)
        .collect();
    let homogeneous = {
        let cocycles_h = {
            let keep = cocycles.basis().select_columns(&homog_cols);
            // a cocycle splits into homogeneous parts that are cocycles
            // separately (δ is degree-preserving), so projecting the basis
            // onto the degree-D coordinates spans the degree-D cocycles
            Subspace::from_matrix(keep)
        };
        let coboundaries_h = Subspace::from_matrix(
            coboundaries.basis().select_columns(&homog_cols),
        );
        HexDims {
            cocycles: cocycles_h.dim(),
            coboundaries: coboundaries_h.dim(),
            cohomology: cocycles_h.dim() - coboundaries_h.dim(),
        }
    };

    let quotient = crate::algebra::QuotientSpace::new(&cocycles, &coboundaries);
    let src_nvars = level_n.first().map_or(0, Vec::len);
    let representatives: Vec<MPoly> = (0..quotient.dim())
        .map(|i| {
            let mut coords = vec![0; quotient.dim()];
            coords[i] = 1;
            let v = quotient.rep(&coords);
            let terms: Vec<(Vec<u8>, Elt)> = v
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(j, &c)| (level_n[j].clone(), c))
                .collect();
            MPoly::from_terms(field, src_nvars, terms)
        })
        .collect();
    Ok(HexCohomologyReport {
        n,
        degree_bound,
        kind,
        monomials: level_n,
        cocycles,
        coboundaries,
        le_degree,
        homogeneous,
        representatives,
    })
}

// ---------------------------------------------------------------------------
// cochain literals

/// Parse a cochain literal such as `- x[1234]*y'[1235] + y[2345]^2`.
///
/// Grammar (whitespace free between tokens):
///   expr   := [sign] term { sign term }
///   term   := factor { "*" factor }
///   factor := integer | variable [ "^" integer ]
///   variable := ("x" | "y") [ "'" ] "[" digits "]"
/// Digits are the (single-digit, ascending) vertices of a tetrahedron of
/// the standard simplex. Primes select the second slot of a bilinear
/// cochain. On the 3-simplex, whose coloring space has a single
/// tetrahedron, the brackets may be dropped: `x`, `y'`.
pub fn parse_cochain(
    field: &Field,
    n: usize,
    kind: Kind,
    text: &str,
) -> Result<HexCochain, HexError> {
    let sc = SimplexColorings::new(field, n)?;
    let nv = sc.ambient_nvars(kind);
    let half = sc.ambient_dim();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0usize;
    let err = |msg: &str| HexError::Literal(msg.to_string());

    let mut total = MPoly::zero(field, nv);
    let mut pending_sign: i64 = 1;
    let mut started = false;
    loop {
        // skip whitespace
        while i < chars.len() && chars[i].is_whitespace() {
            i += 1;
        }
        if i >= chars.len() {
            if !started {
                return Err(err("empty literal"));
            }
            break;
        }
        match chars[i] {
            '+' => {
                pending_sign = 1;
                i += 1;
                started = true;
                continue;
            }
            '-' => {
                pending_sign = -pending_sign;
                i += 1;
                started = true;
                continue;
            }
            _ => {}
        }
        // one term: factors separated by '*'
        let mut term = MPoly::constant(field, nv, field.from_int(pending_sign));
        pending_sign = 1;
        started = true;
        loop {
            while i < chars.len() && chars[i].is_whitespace() {
                i += 1;
            }
            if i >= chars.len() {
                break;
            }
            let ch = chars[i];
            if ch.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: i64 = chars[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| err("integer literal out of range"))?;
                term = term.scale(field.from_int(lit));
            } else if ch == 'x' || ch == 'y' {
                let letter = ch;
                i += 1;
                let primed = i < chars.len() && chars[i] == '\'';
                if primed {
                    i += 1;
                }
                let var_name = |suffix: &str| {
                    format!("{letter}{}{suffix}", if primed { "'" } else { "" })
                };
                if primed && kind == Kind::Polynomial {
                    return Err(HexError::UnexpectedPrime(var_name("")));
                }
                let ambient_base = if i < chars.len() && chars[i] == '[' {
                    i += 1;
                    let start = i;
                    while i < chars.len() && chars[i] != ']' {
                        i += 1;
                    }
                    if i >= chars.len() {
                        return Err(err("unterminated `[`"));
                    }
                    let digits: Vec<char> = chars[start..i].iter().copied().collect();
                    i += 1;
                    let mut tet: Vec<Vertex> = Vec::new();
                    for d in &digits {
                        let v = d
                            .to_digit(10)
                            .ok_or_else(|| err("tetrahedron label must be digits"))?;
                        tet.push(v);
                    }
                    let bad_label = || {
                        HexError::UnknownVariable(var_name(&format!(
                            "[{}]",
                            digits.iter().collect::<String>()
                        )))
                    };
                    if tet.len() != 4 || !tet.windows(2).all(|w| w[0] < w[1]) {
                        return Err(bad_label());
                    }
                    let ti = sc.complex().index_of(&tet).ok_or_else(bad_label)?;
                    2 * ti + if letter == 'y' { 1 } else { 0 }
                } else {
                    // bare x / y: only unambiguous with a single tetrahedron
                    if sc.complex().n_simplices(3) != 1 {
                        return Err(HexError::UnknownVariable(var_name("")));
                    }
                    if letter == 'y' {
                        1
                    } else {
                        0
                    }
                };
                let ambient = if primed { half + ambient_base } else { ambient_base };
                let mut exp: u32 = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = chars[start..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| err("bad exponent"))?;
                }
                term = term.mul(&MPoly::var(field, nv, ambient).pow(exp));
            } else {
                return Err(err(&format!("unexpected character `{ch}`")));
            }
            // continue the term only across '*'
            while i < chars.len() && chars[i].is_whitespace() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '*' {
                i += 1;
            } else {
                break;
            }
        }
        total = total.add(&term);
    }
    sc.ambient_to_canonical(kind, &total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }
    fn f3() -> Field {
        Field::prime(3).unwrap()
    }
    fn f4() -> Field {
        Field::new(2, 2).unwrap()
    }
    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn constraint_space_dimensions() {
        let f = f3();
        assert_eq!(SimplexColorings::new(&f, 3).unwrap().dim(), 2);
        assert_eq!(SimplexColorings::new(&f, 4).unwrap().dim(), 5);
        // Δ⁵: two independent elimination routes must agree
        let sc5 = SimplexColorings::new(&f, 5).unwrap();
        let generic = coloring::functional_matrix_with(&f, sc5.complex(), true).unwrap();
        assert_eq!(sc5.dim(), sc5.ambient_dim() - generic.rank());
        assert_eq!(sc5.dim(), sc5.subspace().dim());
    }

    #[test]
    fn parametrization_kills_every_functional() {
        for n in [4usize, 5] {
            let f = f3();
            let sc = SimplexColorings::new(&f, n).unwrap();
            let m = coloring::functional_matrix(&f, sc.complex()).unwrap();
            for r in 0..m.rows() {
                let row = m.row(r);
                let ambient_poly = MPoly::from_terms(
                    &f,
                    sc.ambient_dim(),
                    row.iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(j, &c)| {
                            let mut e = vec![0u8; sc.ambient_dim()];
                            e[j] = 1;
                            (e, c)
                        })
                        .collect(),
                );
                let canon = sc.ambient_to_canonical(Kind::Polynomial, &ambient_poly).unwrap();
                assert!(canon.is_zero(), "functional row {r} of Δ^{n} survives restriction");
            }
        }
    }

    #[test]
    fn constant_cochain_coboundary_is_constant() {
        let f = f3();
        let sc3 = SimplexColorings::new(&f, 3).unwrap();
        let one = HexCochain {
            n: 3,
            kind: Kind::Polynomial,
            poly: MPoly::constant(&f, sc3.dim(), 1),
        };
        let d = coboundary(&f, &one).unwrap();
        let sc4 = SimplexColorings::new(&f, 4).unwrap();
        assert_eq!(d.poly, MPoly::constant(&f, sc4.dim(), 1));
    }

    #[test]
    fn builtin_cocycles_check_out() {
        for f in [f2(), f3(), f4(), f5()] {
            assert!(is_cocycle(&f, &builtin_cocycle(&f, "c3_bilinear").unwrap()).unwrap());
            assert!(is_cocycle(&f, &builtin_cocycle(&f, "c4_bilinear").unwrap()).unwrap());
        }
        for f in [f2(), f4()] {
            for name in ["c4_cubic_1", "c4_cubic_2"] {
                let c = builtin_cocycle(&f, name).unwrap();
                assert!(is_cocycle(&f, &c).unwrap());
                assert_eq!(c.poly.degree(), 3);
            }
        }
        assert!(matches!(
            builtin_cocycle(&f3(), "c4_cubic_1"),
            Err(HexError::WrongCharacteristic(_, 3))
        ));
        assert!(matches!(builtin_cocycle(&f2(), "zzz"), Err(HexError::UnknownCocycle(_))));
    }

    fn random_cochain(
        field: &Field,
        n: usize,
        kind: Kind,
        max_deg: u32,
        rng: &mut rand_chacha::ChaCha8Rng,
    ) -> HexCochain {
        let sc = SimplexColorings::new(field, n).unwrap();
        let monos = level_basis(kind, sc.dim(), max_deg);
        let nvars = monos[0].len();
        let terms: Vec<(Vec<u8>, Elt)> = monos
            .iter()
            .map(|m| (m.clone(), field.from_int(rng.gen_range(0..field.order() as i64))))
            .collect();
        HexCochain { n, kind, poly: MPoly::from_terms(field, nvars, terms) }
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for f in [f2(), f3(), f4()] {
            for kind in [Kind::Polynomial, Kind::Bilinear] {
                for n in [3usize, 4] {
                    let c = random_cochain(&f, n, kind, 2, &mut rng);
                    let dd = coboundary(&f, &coboundary(&f, &c).unwrap()).unwrap();
                    assert!(
                        dd.is_zero(),
                        "δδ ≠ 0: field {} kind {kind:?} n {n}",
                        f.spec_string()
                    );
                }
            }
        }
    }

    #[test]
    fn random_cubic_is_not_a_cocycle() {
        let f = f2();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let mut any_noncocycle = false;
        for _ in 0..5 {
            let c = random_cochain(&f, 4, Kind::Polynomial, 3, &mut rng);
            if !is_cocycle(&f, &c).unwrap() {
                any_noncocycle = true;
            }
        }
        assert!(any_noncocycle);
    }

    #[test]
    fn cubic_4_cohomology_has_two_independent_classes() {
        let f = f2();
        let rep = hex_cohomology(&f, 4, 3, Kind::Polynomial).unwrap();
        assert!(rep.le_degree.cohomology >= 2, "{:?}", rep.le_degree);
        let c1 = builtin_cocycle(&f, "c4_cubic_1").unwrap();
        let c2 = builtin_cocycle(&f, "c4_cubic_2").unwrap();
        let v1 = rep.coeff_vector(&f, &c1).unwrap();
        let v2 = rep.coeff_vector(&f, &c2).unwrap();
        assert!(rep.cocycles.contains(&v1));
        assert!(rep.cocycles.contains(&v2));
        let base = rep.coboundaries.dim();
        let plus = rep
            .coboundaries
            .sum(&Subspace::from_rows(&f, &[v1, v2]));
        assert_eq!(plus.dim(), base + 2, "cubic classes dependent modulo coboundaries");
        // both quotient conventions agree here (δ preserves degree)
        assert_eq!(rep.homogeneous.cohomology + lower_cohomology(&f), rep.le_degree.cohomology);
    }

    /// cohomology of the ≤-2 part at n = 4 (the complement of the
    /// homogeneous cubic slice inside the ≤-3 report)
    fn lower_cohomology(f: &Field) -> usize {
        hex_cohomology(f, 4, 2, Kind::Polynomial).unwrap().le_degree.cohomology
    }

    #[test]
    fn degree3_has_no_coboundaries() {
        let f = f3();
        let rep = hex_cohomology(&f, 3, 1, Kind::Polynomial).unwrap();
        assert_eq!(rep.le_degree.coboundaries, 0);
        assert_eq!(rep.le_degree.cocycles, rep.le_degree.cohomology);
    }

    #[test]
    fn bilinear_4_cohomology_contains_c4() {
        let f = f2();
        let rep = hex_cohomology(&f, 4, 1, Kind::Bilinear).unwrap();
        let c4 = builtin_cocycle(&f, "c4_bilinear").unwrap();
        let v = rep.coeff_vector(&f, &c4).unwrap();
        assert!(rep.cocycles.contains(&v));
        let grown = rep.coboundaries.sum(&Subspace::from_rows(&f, &[v]));
        assert_eq!(grown.dim(), rep.coboundaries.dim() + 1, "c4 class is trivial");
    }

    #[test]
    fn literals_reproduce_builtins() {
        let f = f2();
        let c1 = parse_cochain(&f, 4, Kind::Polynomial, "y[2345]*y[1234]^2").unwrap();
        assert_eq!(c1, builtin_cocycle(&f, "c4_cubic_1").unwrap());
        let f3 = f3();
        let c3 = parse_cochain(&f3, 3, Kind::Bilinear, "- x*y' - y*x'").unwrap();
        assert_eq!(c3, builtin_cocycle(&f3, "c3_bilinear").unwrap());
        // bracketed form of the same thing
        let c3b =
            parse_cochain(&f3, 3, Kind::Bilinear, "-x[1234]*y'[1234] - y[1234]*x'[1234]").unwrap();
        assert_eq!(c3b, c3);
    }

    #[test]
    fn literal_errors() {
        let f = f2();
        assert!(matches!(
            parse_cochain(&f, 4, Kind::Polynomial, "y[9999]"),
            Err(HexError::UnknownVariable(_))
        ));
        assert!(matches!(
            parse_cochain(&f, 4, Kind::Polynomial, "y'[1234]"),
            Err(HexError::UnexpectedPrime(_))
        ));
        assert!(matches!(
            parse_cochain(&f, 4, Kind::Polynomial, "x[1234"),
            Err(HexError::Literal(_))
        ));
        assert!(matches!(
            parse_cochain(&f, 4, Kind::Polynomial, ""),
            Err(HexError::Literal(_))
        ));
        // bare variable is ambiguous on Δ⁴
        assert!(matches!(
            parse_cochain(&f, 4, Kind::Polynomial, "x + y"),
            Err(HexError::UnknownVariable(_))
        ));
    }

    #[test]
    fn formal_vs_function_semantics_on_v() {
        let f = f2();
        let sc = SimplexColorings::new(&f, 3).unwrap();
        let x = parse_cochain(&f, 3, Kind::Polynomial, "x").unwrap();
        let x2 = parse_cochain(&f, 3, Kind::Polynomial, "x^2").unwrap();
        assert_ne!(x, x2);
        // value tables on V agree (Frobenius over F_2)
        for a in 0..2 {
            for b in 0..2 {
                let point = vec![a as Elt, b as Elt];
                assert_eq!(x.poly.eval(&point), x2.poly.eval(&point));
            }
        }
        let _ = sc;
    }

    #[test]
    fn tilde_transform_is_the_stated_substitution() {
        let f = f3();
        let x = parse_cochain(&f, 3, Kind::Polynomial, "x").unwrap();
        let tx = xy_tilde_transform(&f, &x).unwrap();
        let expect = parse_cochain(&f, 3, Kind::Polynomial, "-x + y").unwrap();
        assert_eq!(tx, expect);
        let y = parse_cochain(&f, 3, Kind::Polynomial, "y").unwrap();
        let ty = xy_tilde_transform(&f, &y).unwrap();
        assert_eq!(ty, parse_cochain(&f, 3, Kind::Polynomial, "x").unwrap());
        // inverse substitution x ↦ y, y ↦ x + y undoes it
        let undone = {
            let sc = SimplexColorings::new(&f, 3).unwrap();
            let nv = sc.ambient_nvars(Kind::Polynomial);
            let images = vec![MPoly::var(&f, nv, 1), MPoly::var(&f, nv, 0).add(&MPoly::var(&f, nv, 1))];
            sc.ambient_to_canonical(Kind::Polynomial, &tx.poly.subst(&images)).unwrap()
        };
        assert_eq!(undone, x);
    }
}
