//! The chain map from hexagon cochains to simplicial cochains, and the
//! induced invariant polynomials on coloring homology.
//!
//! Evaluating a degree-n hexagon cochain on a permitted coloring, one
//! n-simplex at a time through the order-preserving identification with
//! the standard simplex, gives a simplicial n-cochain. Feeding in a
//! *generic* coloring — a formal combination `Σ Xᵢ·vᵢ` over lifts of a
//! coloring-homology basis — and pairing the resulting cochain with
//! homology cycles produces polynomials in X₁…X_d (and a primed copy for
//! bilinear cochains). Those polynomials depend on the chosen basis; the
//! basis-independent summaries (value distributions over field
//! extensions, bilinear ranks, and the q = r verdict) are what this
//! module ultimately reports.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{Elt, Field, MPoly, Matrix};
use crate::coloring::{self, ColoringError, ColoringHomology};
use crate::complex::{Triangulation, Vertex};
use crate::hexagon::{self, HexCochain, HexError, Kind, SimplexColorings};
use crate::homology::{self, HomologyError};

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Hex(#[from] HexError),
    #[error("coloring is not permitted (an edge functional is nonzero on it)")]
    NotPermitted,
    #[error("cochain is not a cocycle; only cocycles induce invariants")]
    NotCocycle,
    #[error("no invariant mapping for cochain degree {0} (only 3 and 4)")]
    DegreeUnsupported(usize),
    #[error("value enumeration needs {points} points, above the cap {cap}")]
    EnumerationCap { points: u128, cap: u128 },
    #[error("extension degree {k} does not contain the coefficient field F_{p}^{base}")]
    BadExtension { p: u64, base: u32, k: u32 },
}

/// Hard ceiling on exhaustive value enumeration (points = |F|^{#vars}).
pub const ENUMERATION_CAP: u128 = 1 << 20;

// ---------------------------------------------------------------------------
// generic colorings

/// A coloring with formal linear entries: `Σ Xᵢ · vᵢ` over lifts `vᵢ` of a
/// coloring-homology basis. Specializing the Xᵢ to field values always
/// lands in the permitted space, since the lifts do.
#[derive(Debug, Clone)]
pub struct GenericColoring {
    /// d × 2N₃ matrix of basis lifts (row i = vᵢ)
    lifts: Matrix,
}

impl GenericColoring {
    pub fn new(h: &ColoringHomology) -> GenericColoring {
        GenericColoring { lifts: h.quotient.coset_basis().clone() }
    }

    /// For perturbation experiments: use explicit lift rows instead of the
    /// canonical coset basis.
    pub fn from_lifts(lifts: Matrix) -> GenericColoring {
        GenericColoring { lifts }
    }

    /// Number of formal coordinates d = dim H_col.
    pub fn d(&self) -> usize {
        self.lifts.rows()
    }

    pub fn lifts(&self) -> &Matrix {
        &self.lifts
    }

    /// Ambient coloring entry `j` as a linear polynomial in the X block
    /// starting at `offset` out of `nvars` variables.
    fn entry(&self, field: &Field, j: usize, nvars: usize, offset: usize) -> MPoly {
        let terms: Vec<(Vec<u8>, Elt)> = (0..self.d())
            .filter_map(|i| {
                let c = self.lifts.get(i, j);
                if c == 0 {
                    return None;
                }
                let mut e = vec![0u8; nvars];
                e[offset + i] = 1;
                Some((e, c))
            })
            .collect();
        MPoly::from_terms(field, nvars, terms)
    }
}

// ---------------------------------------------------------------------------
// the chain map

/// Ambient indices (in K's coloring space) of the canonical coordinates of
/// `Δⁿ`, pulled back along the order-preserving identification of `sigma`
/// with the standard simplex.
fn sigma_coordinate_map(
    sc: &SimplexColorings,
    k: &Triangulation,
    sigma: &[Vertex],
) -> Vec<usize> {
    sc.free_vars()
        .iter()
        .map(|&a| {
            let t_std = sc.complex().simplices(3).get(a / 2);
            let t_k: Vec<Vertex> =
                t_std.iter().map(|&v| sigma[(v - 1) as usize]).collect();
            let ti = k.index_of(&t_k).expect("face of a simplex of K is in K");
            2 * ti + a % 2
        })
        .collect()
}

fn check_permitted(field: &Field, k: &Triangulation, v: &[Elt]) -> Result<(), InvariantError> {
    let m = coloring::functional_matrix(field, k)?;
    if m.mul_vec(v).iter().any(|&x| x != 0) {
        return Err(InvariantError::NotPermitted);
    }
    Ok(())
}

/// Evaluate `c` on a concrete coloring (two colorings for the bilinear
/// kind), one n-simplex at a time: the simplicial n-cochain
/// `σ ↦ c(coloring|_σ)`.
pub fn chain_map_values(
    field: &Field,
    k: &Triangulation,
    c: &HexCochain,
    slots: &[&[Elt]],
) -> Result<Vec<Elt>, InvariantError> {
    let expected = match c.kind {
        Kind::Polynomial => 1,
        Kind::Bilinear => 2,
    };
    assert_eq!(slots.len(), expected, "one coloring per slot of the cochain");
    for v in slots {
        assert_eq!(v.len(), coloring::ambient_dim(k));
        check_permitted(field, k, v)?;
    }
    let sc = SimplexColorings::new(field, c.n)?;
    let simplices = k.simplices(c.n);
    let mut out = Vec::with_capacity(simplices.len());
    for sigma in simplices.iter() {
        let map = sigma_coordinate_map(&sc, k, sigma);
        let mut point: Vec<Elt> = Vec::with_capacity(expected * map.len());
        for v in slots {
            point.extend(map.iter().map(|&j| v[j]));
        }
        out.push(c.poly.eval(&point));
    }
    Ok(out)
}

/// The chain map with a generic coloring: entries are polynomials in
/// X₁…X_d (bilinear cochains read their second slot from a primed copy
/// X′₁…X′_d of the same lifts).
pub fn chain_map_generic(
    field: &Field,
    k: &Triangulation,
    c: &HexCochain,
    g: &GenericColoring,
) -> Result<Vec<MPoly>, InvariantError> {
    let d = g.d();
    let nvars = match c.kind {
        Kind::Polynomial => d,
        Kind::Bilinear => 2 * d,
    };
    let sc = SimplexColorings::new(field, c.n)?;
    let simplices = k.simplices(c.n);
    let mut out = Vec::with_capacity(simplices.len());
    for sigma in simplices.iter() {
        let map = sigma_coordinate_map(&sc, k, sigma);
        let mut images: Vec<MPoly> = Vec::with_capacity(nvars.min(2 * map.len()));
        images.extend(map.iter().map(|&j| g.entry(field, j, nvars, 0)));
        if c.kind == Kind::Bilinear {
            images.extend(map.iter().map(|&j| g.entry(field, j, nvars, d)));
        }
        out.push(c.poly.subst(&images));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// invariant polynomials

/// One output polynomial of the induced mapping on coloring homology: for
/// degree 3 there is one per basis coordinate of H³; degree 4 pairs with
/// the fundamental cycle and yields a single polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantPolynomial {
    pub n: usize,
    pub index: usize,
    pub poly: MPoly,
}

/// The induced mapping for a degree-3 or degree-4 cocycle: evaluate on a
/// generic coloring and pair with the cycle basis of H₃ (n = 3) or with
/// the fundamental cycle (n = 4).
pub fn gcol(
    field: &Field,
    k: &Triangulation,
    c: &HexCochain,
) -> Result<Vec<InvariantPolynomial>, InvariantError> {
    let h = coloring::coloring_homology(field, k)?;
    gcol_with(field, k, c, &GenericColoring::new(&h))
}

/// `gcol` with an explicit generic coloring (used to check that perturbing
/// the lifts inside their homology classes changes nothing).
pub fn gcol_with(
    field: &Field,
    k: &Triangulation,
    c: &HexCochain,
    g: &GenericColoring,
) -> Result<Vec<InvariantPolynomial>, InvariantError> {
    if !hexagon::is_cocycle(field, c)? {
        return Err(InvariantError::NotCocycle);
    }
    let cochain = chain_map_generic(field, k, c, g)?;
    let nvars = match c.kind {
        Kind::Polynomial => g.d(),
        Kind::Bilinear => 2 * g.d(),
    };
    let pair = |cycle: &[Elt]| -> MPoly {
        let mut acc = MPoly::zero(field, nvars);
        for (sigma, coeff) in cycle.iter().enumerate() {
            if *coeff != 0 {
                acc = acc.add(&cochain[sigma].scale(*coeff));
            }
        }
        acc
    };
    match c.n {
        3 => {
            let hb = homology::homology_basis(field, k, 3)?;
            Ok((0..hb.dim())
                .map(|i| InvariantPolynomial { n: 3, index: i, poly: pair(&hb.cycles().row(i)) })
                .collect())
        }
        4 => {
            let z = homology::fundamental_cycle(field, k)?;
            Ok(vec![InvariantPolynomial { n: 4, index: 0, poly: pair(&z) }])
        }
        other => Err(InvariantError::DegreeUnsupported(other)),
    }
}

// ---------------------------------------------------------------------------
// basis-independent summaries

/// Counts of how often a polynomial attains each value when its variables
/// range over a field extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueDistribution {
    /// the extension field the variables range over
    pub field: Field,
    /// its degree over the prime field
    pub k: u32,
    pub counts: BTreeMap<Elt, u64>,
}

/// Exhaustively evaluate over `F_{p^k}` (k = degree over the prime field;
/// the coefficient field must embed, which restricts non-prime coefficient
/// fields to `k` equal to their own degree). Invariant under invertible
/// linear substitutions of the variables, which is the point.
pub fn value_distribution(
    base: &Field,
    p: &InvariantPolynomial,
    k: u32,
) -> Result<ValueDistribution, InvariantError> {
    let ext = if k == base.degree() {
        base.clone()
    } else if base.degree() == 1 {
        Field::new(base.characteristic(), k).expect("valid extension parameters")
    } else {
        return Err(InvariantError::BadExtension {
            p: base.characteristic(),
            base: base.degree(),
            k,
        });
    };
    let nvars = p.poly.nvars();
    let points = (ext.order() as u128).checked_pow(nvars as u32).unwrap_or(u128::MAX);
    if points > ENUMERATION_CAP {
        return Err(InvariantError::EnumerationCap { points, cap: ENUMERATION_CAP });
    }
    // prime-subfield coefficients are the same packed values in the extension
    let poly = MPoly::from_terms(&ext, nvars, p.poly.terms().to_vec());
    let q = ext.order();
    let mut counts: BTreeMap<Elt, u64> = BTreeMap::new();
    let mut point: Vec<Elt> = vec![0; nvars];
    loop {
        *counts.entry(poly.eval(&point)).or_insert(0) += 1;
        // odometer over all points of ext^nvars
        let mut i = 0;
        loop {
            if i == nvars {
                let total: u64 = counts.values().sum();
                debug_assert_eq!(total as u128, points);
                return Ok(ValueDistribution { field: ext, k, counts });
            }
            point[i] += 1;
            if point[i] < q {
                break;
            }
            point[i] = 0;
            i += 1;
        }
    }
}

/// Rank of the coefficient matrix of a bidegree-(1,1) polynomial in blocks
/// of `d` variables; `None` if the polynomial is not bilinear.
pub fn bilinear_rank(p: &InvariantPolynomial, d: usize) -> Option<usize> {
    if p.poly.nvars() != 2 * d {
        return None;
    }
    if !p.poly.is_zero() && p.poly.bidegree(d) != Some((1, 1)) {
        return None;
    }
    Some(p.poly.bilinear_matrix(d).rank())
}

/// Ranks of all nonzero linear combinations of a family of bilinear
/// outputs, sorted: invariant both under basis change in X/X′ (congruence
/// preserves rank) and under invertible mixing of the family.
pub fn rank_multiset(
    field: &Field,
    forms: &[InvariantPolynomial],
    d: usize,
) -> Result<Vec<usize>, InvariantError> {
    let mats: Vec<Matrix> = forms
        .iter()
        .map(|p| {
            assert_eq!(p.poly.nvars(), 2 * d, "bilinear outputs expected");
            p.poly.bilinear_matrix(d)
        })
        .collect();
    let m = mats.len();
    let combos = (field.order() as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if combos > ENUMERATION_CAP {
        return Err(InvariantError::EnumerationCap { points: combos, cap: ENUMERATION_CAP });
    }
    let q = field.order();
    let mut out = Vec::new();
    let mut lambdas: Vec<Elt> = vec![0; m];
    'outer: loop {
        if lambdas.iter().any(|&e| e != 0) {
            let mut acc = Matrix::zero(field, d, d);
            for (i, &lambda) in lambdas.iter().enumerate() {
                if lambda != 0 {
                    for r in 0..d {
                        for c in 0..d {
                            let v = field.add(acc.get(r, c), field.mul(lambda, mats[i].get(r, c)));
                            acc.set(r, c, v);
                        }
                    }
                }
            }
            out.push(acc.rank());
        }
        let mut i = 0;
        loop {
            if i == m {
                break 'outer;
            }
            lambdas[i] += 1;
            if lambdas[i] < q {
                break;
            }
            lambdas[i] = 0;
            i += 1;
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Compare the two cubic degree-4 invariants in the same coloring basis.
/// Equality/inequality is basis-independent because both polynomials are
/// computed over one shared basis.
#[derive(Debug, Clone)]
pub struct EqualityReport {
    pub q: InvariantPolynomial,
    pub r: InvariantPolynomial,
    pub equal: bool,
}

pub fn equality_report(field: &Field, k: &Triangulation) -> Result<EqualityReport, InvariantError> {
    let c1 = hexagon::builtin_cocycle(field, "c4_cubic_1")?;
    let c2 = hexagon::builtin_cocycle(field, "c4_cubic_2")?;
    let h = coloring::coloring_homology(field, k)?;
    let g = GenericColoring::new(&h);
    let q = gcol_with(field, k, &c1, &g)?.remove(0);
    let r = gcol_with(field, k, &c2, &g)?.remove(0);
    let equal = q.poly == r.poly;
    Ok(EqualityReport { q, r, equal })
}

// ---------------------------------------------------------------------------
// basis-change search (small d only)

/// All invertible d×d matrices over the field. Meant for exhaustive
/// basis-change searches with small d; the total candidate count
/// q^(d²) must stay below the enumeration cap.
pub fn gl_matrices(field: &Field, d: usize) -> Vec<Matrix> {
    let total = (field.order() as u128).checked_pow((d * d) as u32).unwrap_or(u128::MAX);
    assert!(total <= ENUMERATION_CAP, "GL enumeration too large: {total} candidates");
    let q = field.order();
    let mut out = Vec::new();
    let mut entries: Vec<Elt> = vec![0; d * d];
    'outer: loop {
        let mut m = Matrix::zero(field, d, d);
        for (i, &e) in entries.iter().enumerate() {
            m.set(i / d, i % d, e);
        }
        if m.rank() == d {
            out.push(m);
        }
        let mut i = 0;
        loop {
            if i == d * d {
                break 'outer;
            }
            entries[i] += 1;
            if entries[i] < q {
                break;
            }
            entries[i] = 0;
            i += 1;
        }
    }
    out
}

/// Apply the substitution `X_i ↦ Σ_j T[i][j]·X_j` to every block of
/// variables (one block for plain polynomials, two for bilinear ones; the
/// same T acts on both blocks).
pub fn substitute_basis_change(p: &MPoly, t: &Matrix, blocks: usize) -> MPoly {
    let d = t.rows();
    assert_eq!(t.cols(), d);
    assert_eq!(p.nvars(), blocks * d);
    let mut linear = Vec::with_capacity(blocks * d);
    for b in 0..blocks {
        for i in 0..d {
            let mut row = vec![0; blocks * d];
            for j in 0..d {
                row[b * d + j] = t.get(i, j);
            }
            linear.push(row);
        }
    }
    p.substitute_linear(&linear, blocks * d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex;
    use crate::hexagon::parse_cochain;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }
    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn constant_cochain_maps_to_all_ones() {
        let f = f3();
        let k = complex::fixture("S4").unwrap();
        let sc = SimplexColorings::new(&f, 3).unwrap();
        let c = HexCochain {
            n: 3,
            kind: Kind::Polynomial,
            poly: MPoly::constant(&f, sc.dim(), 1),
        };
        let zero = vec![0; coloring::ambient_dim(&k)];
        let out = chain_map_values(&f, &k, &c, &[&zero]).unwrap();
        assert_eq!(out, vec![1; k.n_simplices(3)]);
    }

    #[test]
    fn zero_coloring_kills_constant_free_cochains() {
        let f = f3();
        let k = complex::fixture("S4").unwrap();
        let c = parse_cochain(&f, 3, Kind::Polynomial, "x^2 + 2*y").unwrap();
        let zero = vec![0; coloring::ambient_dim(&k)];
        let out = chain_map_values(&f, &k, &c, &[&zero]).unwrap();
        assert!(out.iter().all(|&v| v == 0));
    }

    #[test]
    fn non_permitted_coloring_is_rejected() {
        let f = f2();
        let k = complex::fixture("S4").unwrap();
        let c = parse_cochain(&f, 3, Kind::Polynomial, "x").unwrap();
        // a standard basis vector is (generically) not permitted on S⁴
        let mut v = vec![0; coloring::ambient_dim(&k)];
        v[0] = 1;
        assert!(matches!(
            chain_map_values(&f, &k, &c, &[&v]),
            Err(InvariantError::NotPermitted)
        ));
    }

    /// chain_map intertwines the two coboundaries: evaluating δc equals
    /// the simplicial coboundary of the evaluation of c.
    #[test]
    fn chain_map_commutes_with_coboundaries() {
        let f = f3();
        let k = complex::simplex_boundary(5);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let perm = coloring::permitted_space(&f, &k).unwrap();
        for _ in 0..5 {
            // random permitted coloring
            let coeffs: Vec<Elt> =
                (0..perm.dim()).map(|_| f.from_int(rng.gen_range(0..3))).collect();
            let v = perm.basis().vec_mul(&coeffs);
            // random (non-cocycle) degree-3 cochain
            let sc = SimplexColorings::new(&f, 3).unwrap();
            let monos = hexagon::monomials_up_to(sc.dim(), 2);
            let c = HexCochain {
                n: 3,
                kind: Kind::Polynomial,
                poly: MPoly::from_terms(
                    &f,
                    sc.dim(),
                    monos
                        .iter()
                        .map(|m| (m.clone(), f.from_int(rng.gen_range(0..3))))
                        .collect(),
                ),
            };
            let dc = hexagon::coboundary(&f, &c).unwrap();
            let lhs = chain_map_values(&f, &k, &dc, &[&v]).unwrap();
            let ev = chain_map_values(&f, &k, &c, &[&v]).unwrap();
            let rhs = homology::boundary_matrix(&f, &k, 4).unwrap().transpose().mul_vec(&ev);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cp2_cubic_invariant_is_x1_cubed() {
        let f = f2();
        let k = complex::fixture("CP2").unwrap();
        let c1 = hexagon::builtin_cocycle(&f, "c4_cubic_1").unwrap();
        let out = gcol(&f, &k, &c1).unwrap();
        assert_eq!(out.len(), 1);
        let x1 = MPoly::var(&f, 1, 0);
        assert_eq!(out[0].poly, x1.pow(3));
    }

    #[test]
    fn s4_invariants_are_trivial() {
        let f = f2();
        let k = complex::fixture("S4").unwrap();
        let c3 = hexagon::builtin_cocycle(&f, "c3_bilinear").unwrap();
        assert!(gcol(&f, &k, &c3).unwrap().is_empty());
        let c4 = hexagon::builtin_cocycle(&f, "c4_bilinear").unwrap();
        let out = gcol(&f, &k, &c4).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].poly.is_zero());
    }

    #[test]
    fn rp4_bilinear_3_invariant_matches_up_to_basis_change() {
        let f = f2();
        let k = complex::fixture("RP4").unwrap();
        let c3 = hexagon::builtin_cocycle(&f, "c3_bilinear").unwrap();
        let out = gcol(&f, &k, &c3).unwrap();
        assert_eq!(out.len(), 1, "dim H^3(RP4, F2) = 1");
        let p = &out[0];
        let d = 2;
        assert_eq!(p.poly.bidegree(d), Some((1, 1)));
        // symmetric and rank 2, like X1 X'2 + X2 X'1
        assert_eq!(p.poly.swap_blocks(d), p.poly);
        assert_eq!(bilinear_rank(p, d), Some(2));
        // and exactly equal to it after some change of basis (same T on
        // both slots)
        let table = {
            let x = |i| MPoly::var(&f, 2 * d, i);
            x(0).mul(&x(d + 1)).add(&x(1).mul(&x(d)))
        };
        let hit = gl_matrices(&f, d)
            .iter()
            .any(|t| substitute_basis_change(&p.poly, t, 2) == table);
        assert!(hit, "no GL(2,F2) change matches the expected form");
    }

    #[test]
    fn value_distributions_of_x_cubed() {
        let f = f2();
        let p = InvariantPolynomial { n: 4, index: 0, poly: MPoly::var(&f, 1, 0).pow(3) };
        let d1 = value_distribution(&f, &p, 1).unwrap();
        assert_eq!(d1.counts, BTreeMap::from([(0, 1), (1, 1)]));
        let d2 = value_distribution(&f, &p, 2).unwrap();
        // x³ = 1 for every nonzero x in the 4-element field
        let one = d2.field.from_int(1);
        assert_eq!(d2.counts, BTreeMap::from([(0, 1), (one, 3)]));
    }

    #[test]
    fn zero_polynomial_distribution() {
        let f = f2();
        let p = InvariantPolynomial { n: 4, index: 0, poly: MPoly::zero(&f, 3) };
        let d = value_distribution(&f, &p, 1).unwrap();
        assert_eq!(d.counts, BTreeMap::from([(0, 8)]));
    }

    #[test]
    fn distribution_is_basis_invariant() {
        let f = f2();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let d = 3;
        let monos = hexagon::monomials_up_to(d, 3);
        let poly = MPoly::from_terms(
            &f,
            d,
            monos.iter().map(|m| (m.clone(), rng.gen_range(0..2) as Elt)).collect(),
        );
        let p = InvariantPolynomial { n: 4, index: 0, poly };
        let base = value_distribution(&f, &p, 1).unwrap();
        let gls = gl_matrices(&f, d);
        for t in gls.iter().step_by(29) {
            let moved = InvariantPolynomial {
                n: 4,
                index: 0,
                poly: substitute_basis_change(&p.poly, t, 1),
            };
            assert_eq!(value_distribution(&f, &moved, 1).unwrap().counts, base.counts);
        }
    }

    #[test]
    fn equality_verdicts() {
        let f = f2();
        let cp2 = complex::fixture("CP2").unwrap();
        assert!(equality_report(&f, &cp2).unwrap().equal);
        let rp4 = complex::fixture("RP4").unwrap();
        let rep = equality_report(&f, &rp4).unwrap();
        assert!(!rep.equal);
        assert_eq!(rep.q.poly.degree(), 3);
        assert_eq!(rep.r.poly.degree(), 3);
    }

    #[test]
    fn gcol_ignores_coboundary_shifts() {
        let f = f2();
        let k = complex::fixture("CP2").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let c1 = hexagon::builtin_cocycle(&f, "c4_cubic_1").unwrap();
        let base = gcol(&f, &k, &c1).unwrap();
        let sc3 = SimplexColorings::new(&f, 3).unwrap();
        let monos = hexagon::monomials_up_to(sc3.dim(), 3);
        for _ in 0..3 {
            let u = HexCochain {
                n: 3,
                kind: Kind::Polynomial,
                poly: MPoly::from_terms(
                    &f,
                    sc3.dim(),
                    monos.iter().map(|m| (m.clone(), rng.gen_range(0..2) as Elt)).collect(),
                ),
            };
            let shifted = HexCochain {
                n: 4,
                kind: Kind::Polynomial,
                poly: c1.poly.add(&hexagon::coboundary(&f, &u).unwrap().poly),
            };
            assert_eq!(gcol(&f, &k, &shifted).unwrap(), base);
        }
    }

    #[test]
    fn gcol_ignores_lift_perturbations() {
        let f = f2();
        let k = complex::fixture("CP2").unwrap();
        let c1 = hexagon::builtin_cocycle(&f, "c4_cubic_1").unwrap();
        let h = coloring::coloring_homology(&f, &k).unwrap();
        let base = gcol_with(&f, &k, &c1, &GenericColoring::new(&h)).unwrap();
        let edges = k.simplices(1);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..3 {
            let e = edges.get(rng.gen_range(0..edges.len()));
            let psi = coloring::edge_vector(&f, &k, (e[0], e[1])).unwrap();
            let mut lifts = h.quotient.coset_basis().clone();
            let row = rng.gen_range(0..lifts.rows());
            let perturbed: Vec<Elt> = lifts
                .row(row)
                .iter()
                .zip(&psi)
                .map(|(&a, &b)| f.add(a, b))
                .collect();
            lifts.set_row(row, &perturbed);
            let moved = gcol_with(&f, &k, &c1, &GenericColoring::from_lifts(lifts)).unwrap();
            assert_eq!(moved, base);
        }
    }

    #[test]
    fn rank_multiset_is_mixing_invariant() {
        let f = f2();
        let k = complex::fixture("RP4").unwrap();
        let c3 = hexagon::builtin_cocycle(&f, "c3_bilinear").unwrap();
        let out = gcol(&f, &k, &c3).unwrap();
        let ranks = rank_multiset(&f, &out, 2).unwrap();
        assert_eq!(ranks, vec![2]);
    }
}
