//! Permitted colorings of a triangulation and their homology.
//!
//! A coloring assigns a pair `(x_t, y_t)` to every tetrahedron `t`. Inside
//! each pentachoron, every edge imposes one linear condition (an "edge
//! functional"); colorings satisfying all of them form `V_K`. Every edge of
//! the whole complex also yields a distinguished coloring (an "edge
//! vector"); these span `V_K^(0) ⊆ V_K`, and the quotient
//! `H_col = V_K / V_K^(0)` is the coloring homology.
//!
//! Both constructions are given by fixed 6-column tables over the edges
//! `k1k2, k1k3, k1k4, k2k3, k2k4, k3k4` of a tetrahedron `k1<k2<k3<k4`,
//! transported to arbitrary vertex labels by the order-preserving
//! substitution. The functional additionally carries a sign `(-1)^(i+1)`
//! where the tetrahedron sits opposite the `i`-th vertex of its
//! pentachoron; the edge vectors carry no sign.

use thiserror::Error;

use crate::algebra::{Elt, Field, Matrix, QuotientSpace, Subspace};
use crate::complex::{SimplexIndex, Triangulation, Vertex};

/// Functional blocks `(coeff of x_t, coeff of y_t)` per edge of `t`.
const PHI_ROWS: [[i64; 2]; 6] = [[0, 1], [1, -1], [-1, 0], [-1, 0], [1, 1], [0, -1]];

/// Edge-vector blocks `(x_t, y_t)` per edge of `t`.
const PSI_COLS: [[i64; 2]; 6] = [[1, 0], [-1, 1], [0, -1], [0, -1], [1, 1], [-1, 0]];

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("complex has no tetrahedra (dimension {0} < 3)")]
    NoTetrahedra(usize),
    #[error("edge {0:?} is not in the complex")]
    EdgeNotFound(Vec<Vertex>),
    #[error("simplex {child:?} is not a face of {parent:?}")]
    NotAFace { child: Vec<Vertex>, parent: Vec<Vertex> },
    #[error("edge span escapes the permitted space — this indicates a bug in the tables")]
    InclusionViolated,
}

/// Position of the pair `(s[a], s[b])`, `a < b`, in the lexicographic list
/// of all 2-subsets of `s`.
fn pair_position(len: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < len);
    // pairs (0,1), (0,2), ..., (0,len-1), (1,2), ...
    let before_a: usize = (0..a).map(|i| len - 1 - i).sum();
    before_a + (b - a - 1)
}

/// All 2-subsets of `s` in lexicographic order.
pub fn edge_pairs(s: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            out.push((s[i], s[j]));
        }
    }
    out
}

fn position_in(t: &[Vertex], v: Vertex) -> Option<usize> {
    t.iter().position(|&w| w == v)
}

/// Index (0..6) of edge `{a,b}` among the six edges of tetrahedron `t`.
fn edge_index_in_tet(t: &[Vertex], a: Vertex, b: Vertex) -> Option<usize> {
    let (mut p, mut q) = (position_in(t, a)?, position_in(t, b)?);
    if p > q {
        std::mem::swap(&mut p, &mut q);
    }
    if p == q {
        return None;
    }
    Some(pair_position(4, p, q))
}

/// The `(x_t, y_t)` coefficients of the functional attached to edge
/// `{a, b}` of pentachoron `u`, restricted to tetrahedron `t ⊂ u` — the
/// table row for the edge's position in `t`, times `(-1)^(i+1)` for the
/// vertex `u_i` opposite `t`.
pub fn edge_functional_block(
    field: &Field,
    u: &[Vertex],
    edge: (Vertex, Vertex),
    t: &[Vertex],
) -> Result<(Elt, Elt), ColoringError> {
    let not_face = |child: &[Vertex], parent: &[Vertex]| ColoringError::NotAFace {
        child: child.to_vec(),
        parent: parent.to_vec(),
    };
    if !t.iter().all(|v| u.contains(v)) || t.len() != 4 || u.len() != 5 {
        return Err(not_face(t, u));
    }
    let opposite = u.iter().position(|v| !t.contains(v)).expect("t is a proper face");
    let edge_slice = [edge.0, edge.1];
    let pos = edge_index_in_tet(t, edge.0, edge.1).ok_or_else(|| not_face(&edge_slice, t))?;
    let sign: i64 = if opposite % 2 == 0 { 1 } else { -1 }; // (-1)^(i+1), i = opposite+1
    let [cx, cy] = PHI_ROWS[pos];
    Ok((field.from_int(sign * cx), field.from_int(sign * cy)))
}

/// The `(x_t, y_t)` block of the edge vector of `{a, b}` on a tetrahedron
/// `t` containing it. No sign.
pub fn edge_vector_block(
    field: &Field,
    t: &[Vertex],
    edge: (Vertex, Vertex),
) -> Result<(Elt, Elt), ColoringError> {
    let edge_slice = [edge.0, edge.1];
    let pos = edge_index_in_tet(t, edge.0, edge.1).ok_or(ColoringError::NotAFace {
        child: edge_slice.to_vec(),
        parent: t.to_vec(),
    })?;
    let [x, y] = PSI_COLS[pos];
    Ok((field.from_int(x), field.from_int(y)))
}

/// The tetrahedron index of a complex of dimension >= 3.
pub fn tetrahedra(k: &Triangulation) -> Result<&SimplexIndex, ColoringError> {
    if k.dim() < 3 {
        return Err(ColoringError::NoTetrahedra(k.dim()));
    }
    Ok(k.simplices(3))
}

/// Length of coloring vectors on `k`: one `(x, y)` pair per tetrahedron,
/// tetrahedra in index order, `x` before `y`.
pub fn ambient_dim(k: &Triangulation) -> usize {
    2 * k.n_simplices(3)
}

/// Human name of coordinate `i` of a coloring vector, e.g. `x[1234]`.
/// Labels above 9 are comma-separated inside the brackets.
pub fn coordinate_name(k: &Triangulation, i: usize) -> String {
    let tets = k.simplices(3);
    let t = tets.get(i / 2);
    let letter = if i % 2 == 0 { 'x' } else { 'y' };
    format!("{letter}[{}]", simplex_label(t))
}

/// `1234` when all labels are single digits, else `1.2.3.14` style.
pub fn simplex_label(s: &[Vertex]) -> String {
    if s.iter().all(|&v| v <= 9) {
        s.iter().map(|v| v.to_string()).collect()
    } else {
        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(".")
    }
}

/// The stacked matrix of all edge functionals: one row per
/// (pentachoron, edge) pair — 10 rows per pentachoron, pentachora in index
/// order, edges in lexicographic order — acting on coloring vectors.
pub fn functional_matrix(field: &Field, k: &Triangulation) -> Result<Matrix, ColoringError> {
    functional_matrix_with(field, k, false)
}

/// Same matrix, optionally forced onto the generic element-array storage.
/// The forced path exists so headline dimensions can be recomputed down a
/// second, independent elimination route.
pub fn functional_matrix_with(
    field: &Field,
    k: &Triangulation,
    force_generic: bool,
) -> Result<Matrix, ColoringError> {
    let tets = tetrahedra(k)?;
    let empty: &[Vec<Vertex>] = &[];
    let pentachora = if k.dim() >= 4 { k.simplices(4).all() } else { empty };
    let rows = 10 * pentachora.len();
    let cols = 2 * tets.len();
    let mut m = if force_generic {
        Matrix::zero_generic(field, rows, cols)
    } else {
        Matrix::zero(field, rows, cols)
    };
    for (ui, u) in pentachora.iter().enumerate() {
        for (ei, edge) in edge_pairs(u).into_iter().enumerate() {
            let row = 10 * ui + ei;
            for omit in 0..5 {
                if u[omit] == edge.0 || u[omit] == edge.1 {
                    continue;
                }
                let t: Vec<Vertex> =
                    u.iter().enumerate().filter(|(i, _)| *i != omit).map(|(_, &v)| v).collect();
                let (cx, cy) = edge_functional_block(field, u, edge, &t)?;
                let ti = tets.position(&t).expect("face of a pentachoron is indexed");
                m.set(row, 2 * ti, cx);
                m.set(row, 2 * ti + 1, cy);
            }
        }
    }
    Ok(m)
}

/// `(pentachoron index, edge)` labels for the rows of [`functional_matrix`].
pub fn functional_row_labels(k: &Triangulation) -> Vec<(usize, (Vertex, Vertex))> {
    let empty: &[Vec<Vertex>] = &[];
    let pentachora = if k.dim() >= 4 { k.simplices(4).all() } else { empty };
    let mut out = Vec::with_capacity(10 * pentachora.len());
    for (ui, u) in pentachora.iter().enumerate() {
        for edge in edge_pairs(u) {
            out.push((ui, edge));
        }
    }
    out
}

/// The edge vector of `b`: supported on tetrahedra containing `b`, with
/// per-tetrahedron blocks from the edge-vector table.
pub fn edge_vector(field: &Field, k: &Triangulation, b: (Vertex, Vertex)) -> Result<Vec<Elt>, ColoringError> {
    let tets = tetrahedra(k)?;
    let mut eb = [b.0, b.1];
    eb.sort_unstable();
    if k.index_of(&eb).is_none() {
        return Err(ColoringError::EdgeNotFound(eb.to_vec()));
    }
    let mut v = vec![0; 2 * tets.len()];
    for (ti, t) in tets.iter().enumerate() {
        if edge_index_in_tet(t, b.0, b.1).is_some() {
            let (x, y) = edge_vector_block(field, t, b)?;
            v[2 * ti] = x;
            v[2 * ti + 1] = y;
        }
    }
    Ok(v)
}

/// One row per edge of `k` (index order), each row the edge vector.
pub fn edge_matrix(field: &Field, k: &Triangulation) -> Result<Matrix, ColoringError> {
    let tets = tetrahedra(k)?;
    let edges = k.simplices(1);
    let mut m = Matrix::zero(field, edges.len(), 2 * tets.len());
    for (ti, t) in tets.iter().enumerate() {
        for (a, b) in edge_pairs(t) {
            let ei = k.index_of(&[a, b]).expect("edge of a tetrahedron is indexed");
            let (x, y) = edge_vector_block(field, t, (a, b))?;
            m.set(ei, 2 * ti, x);
            m.set(ei, 2 * ti + 1, y);
        }
    }
    Ok(m)
}

/// `V_K`: colorings annihilated by every edge functional of every
/// pentachoron.
pub fn permitted_space(field: &Field, k: &Triangulation) -> Result<Subspace, ColoringError> {
    Ok(Subspace::kernel_of(&functional_matrix(field, k)?))
}

/// `V_K^(0)`: the span of all edge vectors.
pub fn edge_generated_space(field: &Field, k: &Triangulation) -> Result<Subspace, ColoringError> {
    Ok(Subspace::from_matrix(edge_matrix(field, k)?))
}

/// The coloring homology `H_col = V_K / V_K^(0)` with its canonical coset
/// basis.
#[derive(Debug, Clone)]
pub struct ColoringHomology {
    pub permitted: Subspace,
    pub edge_generated: Subspace,
    pub quotient: QuotientSpace,
}

impl ColoringHomology {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
}

pub fn coloring_homology(field: &Field, k: &Triangulation) -> Result<ColoringHomology, ColoringError> {
    let permitted = permitted_space(field, k)?;
    let edge_generated = edge_generated_space(field, k)?;
    if !permitted.contains_subspace(&edge_generated) {
        return Err(ColoringError::InclusionViolated);
    }
    let quotient = QuotientSpace::new(&permitted, &edge_generated);
    Ok(ColoringHomology { permitted, edge_generated, quotient })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixture;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }
    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn pentachoron() -> Triangulation {
        Triangulation::new(vec![vec![1, 2, 3, 4, 5]]).unwrap()
    }

    #[test]
    fn functional_blocks_match_hand_table() {
        let f = f3();
        let u = [1, 2, 3, 4, 5];
        // edge 12 on 1234 (opposite 5, sign +): (0, 1)
        assert_eq!(edge_functional_block(&f, &u, (1, 2), &[1, 2, 3, 4]).unwrap(), (0, 1));
        // edge 12 on 1235 (opposite 4, sign -): (0, -1)
        assert_eq!(edge_functional_block(&f, &u, (1, 2), &[1, 2, 3, 5]).unwrap(), (0, 2));
        // edge 34 on 1234 (opposite 5, sign +): (0, -1)
        assert_eq!(edge_functional_block(&f, &u, (3, 4), &[1, 2, 3, 4]).unwrap(), (0, 2));
        // errors: edge not in tetrahedron / tet not in pentachoron
        assert!(edge_functional_block(&f, &u, (1, 5), &[1, 2, 3, 4]).is_err());
        assert!(edge_functional_block(&f, &u, (1, 2), &[1, 2, 3, 6]).is_err());
    }

    #[test]
    fn functional_12_gives_the_alternating_y_relation() {
        // phi_12 of the single pentachoron: y_1234 - y_1235 + y_1245 = 0
        let f = f3();
        let k = pentachoron();
        let m = functional_matrix(&f, &k).unwrap();
        let labels = functional_row_labels(&k);
        let row = labels.iter().position(|(_, e)| *e == (1, 2)).unwrap();
        let tets = k.simplices(3);
        let mut expect = vec![0; 10];
        expect[2 * tets.position(&vec![1, 2, 3, 4]).unwrap() + 1] = 1;
        expect[2 * tets.position(&vec![1, 2, 3, 5]).unwrap() + 1] = 2; // -1
        expect[2 * tets.position(&vec![1, 2, 4, 5]).unwrap() + 1] = 1;
        assert_eq!(m.row(row), expect);
    }

    #[test]
    fn edge_vector_blocks_match_hand_table() {
        let f = f3();
        let t = [1, 2, 3, 4];
        assert_eq!(edge_vector_block(&f, &t, (1, 2)).unwrap(), (1, 0));
        assert_eq!(edge_vector_block(&f, &t, (3, 4)).unwrap(), (2, 0)); // (-1, 0)
        assert_eq!(edge_vector_block(&f, &t, (2, 4)).unwrap(), (1, 1));
    }

    #[test]
    fn pentachoron_spaces_have_dim_5_and_coincide() {
        for f in [f2(), f3(), Field::new(2, 2).unwrap(), Field::prime(5).unwrap()] {
            let k = pentachoron();
            let v = permitted_space(&f, &k).unwrap();
            let v0 = edge_generated_space(&f, &k).unwrap();
            assert_eq!(v.dim(), 5, "field {}", f.spec_string());
            assert_eq!(v0.dim(), 5);
            assert_eq!(v.basis(), v0.basis());
        }
    }

    #[test]
    fn brute_force_f2_kernel_of_single_pentachoron() {
        let f = f2();
        let k = pentachoron();
        let m = functional_matrix(&f, &k).unwrap();
        let mut count = 0u32;
        for bits in 0u32..1 << 10 {
            let v: Vec<Elt> = (0..10).map(|i| ((bits >> i) & 1) as Elt).collect();
            if m.mul_vec(&v).iter().all(|&e| e == 0) {
                count += 1;
            }
        }
        assert_eq!(count, 1 << 5);
    }

    #[test]
    fn lone_tetrahedron_admits_all_colorings_and_full_edge_span() {
        let f = f3();
        let k = Triangulation::new(vec![vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(permitted_space(&f, &k).unwrap().dim(), 2);
        assert_eq!(edge_generated_space(&f, &k).unwrap().dim(), 2);
    }

    #[test]
    fn functionals_annihilate_edge_vectors_on_fixtures() {
        let f = f3();
        for name in ["S4", "CP2"] {
            let k = fixture(name).unwrap();
            let phi = functional_matrix(&f, &k).unwrap();
            let psi = edge_matrix(&f, &k).unwrap();
            let product = phi.mat_mul(&psi.transpose());
            assert!(product.is_zero(), "{name}");
        }
    }

    #[test]
    fn homology_dims_s4_and_cp2() {
        let f = f2();
        let h = coloring_homology(&f, &fixture("S4").unwrap()).unwrap();
        assert_eq!(h.dim(), 0);
        let h = coloring_homology(&f, &fixture("CP2").unwrap()).unwrap();
        assert_eq!(h.dim(), 1);
    }

    #[test]
    fn relabeling_transfers_the_tables() {
        // same combinatorics, shifted labels: matrices must agree entry-wise
        let f = f3();
        let k1 = pentachoron();
        let k2 = Triangulation::new(vec![vec![2, 3, 5, 7, 8]]).unwrap();
        let m1 = functional_matrix(&f, &k1).unwrap();
        let m2 = functional_matrix(&f, &k2).unwrap();
        assert!(m1.same_entries(&m2));
        let e1 = edge_matrix(&f, &k1).unwrap();
        let e2 = edge_matrix(&f, &k2).unwrap();
        assert!(e1.same_entries(&e2));
    }

    #[test]
    fn generic_storage_route_agrees_over_f2() {
        let f = f2();
        let k = pentachoron();
        let bit = functional_matrix_with(&f, &k, false).unwrap();
        let gen = functional_matrix_with(&f, &k, true).unwrap();
        assert_eq!(bit.rank(), gen.rank());
        assert!(bit.kernel_basis().same_entries(&gen.kernel_basis()));
    }

    #[test]
    fn coordinate_names_follow_tet_order() {
        let k = pentachoron();
        assert_eq!(coordinate_name(&k, 0), "x[1234]");
        assert_eq!(coordinate_name(&k, 1), "y[1234]");
        assert_eq!(coordinate_name(&k, 9), "y[2345]");
    }
}
