//! Subspaces of `F^n` in canonical form, and quotients `W / W_0`.
//!
//! A subspace is stored as the RREF of any spanning set, so two subspaces
//! are equal iff their stored bases are entry-wise equal. A quotient keeps
//! a coset basis (rows of `W` completing a basis of `W_0`) together with a
//! precomputed solve so that class coordinates are a cheap linear read-off.

use super::field::{Elt, Field};
use super::matrix::{Eliminator, Matrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix, // canonical RREF, no zero rows
}

impl Subspace {
    pub fn from_matrix(mut m: Matrix) -> Subspace {
        m.rref();
        m.trim_zero_rows();
        Subspace { basis: m }
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elt>]) -> Subspace {
        Subspace::from_matrix(Matrix::from_rows(field, rows))
    }

    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::zero(field, 0, ambient) }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::identity(field, ambient) }
    }

    /// Right kernel of `m`, as a subspace of `F^{cols}`.
    pub fn kernel_of(m: &Matrix) -> Subspace {
        Subspace { basis: m.kernel_basis() }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Elt>> {
        (0..self.basis.rows()).map(|r| self.basis.row(r)).collect()
    }

    pub fn contains(&self, v: &[Elt]) -> bool {
        let mut el = Eliminator::new(self.field(), self.ambient_dim());
        for r in 0..self.basis.rows() {
            el.insert(&self.basis.row(r));
        }
        el.contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        let mut el = Eliminator::new(self.field(), self.ambient_dim());
        for r in 0..self.basis.rows() {
            el.insert(&self.basis.row(r));
        }
        (0..other.basis.rows()).all(|r| el.contains(&other.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim(), other.ambient_dim());
        Subspace::from_matrix(Matrix::stack(&self.basis, &other.basis))
    }

    /// Intersection of row spaces via the pair construction: kernel vectors
    /// `(u, w)` of `[A; -B]^T` give exactly the identities `u A = w B`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim(), other.ambient_dim());
        let f = self.field().clone();
        let a = self.basis.rows();
        let mut neg_b = other.basis.clone();
        for r in 0..neg_b.rows() {
            for c in 0..neg_b.cols() {
                let e = neg_b.get(r, c);
                if e != 0 {
                    neg_b.set(r, c, f.neg(e));
                }
            }
        }
        let paired = Matrix::stack(&self.basis, &neg_b).transpose();
        let pair_kernel = paired.kernel_basis();
        let mut rows = Vec::new();
        for r in 0..pair_kernel.rows() {
            let uv = pair_kernel.row(r);
            rows.push(self.basis.vec_mul(&uv[..a]));
        }
        let out = Subspace::from_rows(&f, &rows);
        debug_assert_eq!(
            out.dim() + self.sum(other).dim(),
            self.dim() + other.dim(),
            "dimension formula for sum and intersection"
        );
        out
    }

    /// Image of the subspace under coordinate selection (restriction of
    /// vectors to the listed positions, in the listed order).
    pub fn project_columns(&self, cols: &[usize]) -> Subspace {
        Subspace::from_matrix(self.basis.select_columns(cols))
    }
}

/// `W / W_0` with a fixed coset basis and linear class coordinates.
///
/// The coset basis is chosen deterministically: walk the canonical basis of
/// `W` in row order and keep each row that is independent of `W_0` plus the
/// rows already kept. `coords` then maps any `v` in `W` to its coefficient
/// vector over the coset basis (coefficients over `W_0` are discarded), so
/// vectors are in the same class iff their coordinate vectors are equal.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    field: Field,
    ambient: usize,
    denom: Subspace,
    coset: Matrix,
    /// RREF of `[denom; coset]` …
    solve_rref: Matrix,
    /// … its pivot columns …
    solve_pivots: Vec<usize>,
    /// … and the row-operation transform: `solve_rref = transform * [denom; coset]`.
    transform: Matrix,
}

impl QuotientSpace {
    /// Panics if `denom` is not contained in `numer`.
    pub fn new(numer: &Subspace, denom: &Subspace) -> QuotientSpace {
        assert_eq!(numer.ambient_dim(), denom.ambient_dim());
        assert!(
            numer.contains_subspace(denom),
            "quotient denominator must be a subspace of the numerator"
        );
        let field = numer.field().clone();
        let ambient = numer.ambient_dim();
        let mut el = Eliminator::new(&field, ambient);
        for r in 0..denom.basis().rows() {
            el.insert(&denom.basis().row(r));
        }
        let mut coset_rows = Vec::new();
        for r in 0..numer.basis().rows() {
            let row = numer.basis().row(r);
            if el.insert(&row) {
                coset_rows.push(row);
            }
        }
        let coset = if coset_rows.is_empty() {
            Matrix::zero(&field, 0, ambient)
        } else {
            Matrix::from_rows(&field, &coset_rows)
        };
        let stacked = Matrix::stack(denom.basis(), &coset);
        let mut solve_rref = stacked.clone();
        let mut transform = Matrix::identity(&field, stacked.rows());
        let solve_pivots = solve_rref.rref_with(Some(&mut transform));
        debug_assert_eq!(solve_pivots.len(), stacked.rows(), "stacked basis rows independent");
        QuotientSpace {
            field,
            ambient,
            denom: denom.clone(),
            coset,
            solve_rref,
            solve_pivots,
            transform,
        }
    }

    pub fn dim(&self) -> usize {
        self.coset.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denom
    }

    pub fn coset_basis(&self) -> &Matrix {
        &self.coset
    }

    /// Class coordinates of `v`, or `None` if `v` is outside the numerator.
    ///
    /// Writes `v = sum_j v[p_j] * rref_row_j` (valid exactly when the
    /// residual vanishes), converts to coefficients over the stacked basis
    /// through the tracked transform, and keeps the coset block.
    pub fn coords(&self, v: &[Elt]) -> Option<Vec<Elt>> {
        assert_eq!(v.len(), self.ambient);
        let f = &self.field;
        let r = self.solve_rref.rows();
        let mut residual = v.to_vec();
        let mut rref_coeffs = vec![0; r];
        for (j, &p) in self.solve_pivots.iter().enumerate() {
            let c = residual[p];
            if c != 0 {
                rref_coeffs[j] = c;
                let nf = f.neg(c);
                for t in 0..self.ambient {
                    let e = self.solve_rref.get(j, t);
                    if e != 0 {
                        residual[t] = f.add(residual[t], f.mul(nf, e));
                    }
                }
            }
        }
        if residual.iter().any(|&x| x != 0) {
            return None;
        }
        let stacked_coeffs = self.transform.vec_mul(&rref_coeffs);
        let d0 = self.denom.dim();
        Some(stacked_coeffs[d0..].to_vec())
    }

    /// The canonical representative with the given class coordinates.
    pub fn rep(&self, coords: &[Elt]) -> Vec<Elt> {
        assert_eq!(coords.len(), self.dim());
        self.coset.vec_mul(coords)
    }

    pub fn same_class(&self, a: &[Elt], b: &[Elt]) -> Option<bool> {
        Some(self.coords(a)? == self.coords(b)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn sum_intersect_dimension_formula() {
        let f = f5();
        let a = Subspace::from_rows(&f, &[vec![1, 0, 0, 2], vec![0, 1, 0, 3]]);
        let b = Subspace::from_rows(&f, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);
        let s = a.sum(&b);
        let i = a.intersect(&b);
        assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        assert!(a.contains_subspace(&i));
        assert!(b.contains_subspace(&i));
        assert!(s.contains_subspace(&a));
    }

    #[test]
    fn canonical_equality_is_representation_independent() {
        let f = f5();
        let a = Subspace::from_rows(&f, &[vec![1, 2, 3], vec![0, 1, 4]]);
        // same span, different generators (scaled and mixed)
        let b = Subspace::from_rows(&f, &[vec![2, 4, 1], vec![1, 3, 2], vec![1, 2, 3]]);
        assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn quotient_coords_are_linear_and_class_invariant() {
        let f = f5();
        let w = Subspace::from_rows(&f, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let w0 = Subspace::from_rows(&f, &[vec![1, 1, 1]]);
        let q = QuotientSpace::new(&w, &w0);
        assert_eq!(q.dim(), 2);
        let v = vec![2, 3, 4];
        let shifted = vec![3, 4, 0]; // v + (1,1,1)
        assert_eq!(q.coords(&v), q.coords(&shifted));
        // linearity: coords(2v) = 2 * coords(v)
        let two_v = vec![4, 1, 3];
        let cv = q.coords(&v).unwrap();
        let c2v = q.coords(&two_v).unwrap();
        let doubled: Vec<Elt> = cv.iter().map(|&x| f.mul(2, x)).collect();
        assert_eq!(c2v, doubled);
        // representative maps back to its own coordinates
        let rep = q.rep(&cv);
        assert_eq!(q.coords(&rep).unwrap(), cv);
    }

    #[test]
    fn quotient_rejects_vectors_outside_numerator() {
        let f = f5();
        let w = Subspace::from_rows(&f, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let w0 = Subspace::from_rows(&f, &[vec![1, 0, 0]]);
        let q = QuotientSpace::new(&w, &w0);
        assert_eq!(q.dim(), 1);
        assert!(q.coords(&[0, 0, 1]).is_none());
        assert!(q.coords(&[1, 2, 0]).is_some());
    }

    #[test]
    fn zero_quotient_when_numerator_equals_denominator() {
        let f = f5();
        let w = Subspace::from_rows(&f, &[vec![1, 2, 0], vec![0, 0, 1]]);
        let q = QuotientSpace::new(&w, &w);
        assert_eq!(q.dim(), 0);
        assert_eq!(q.coords(&[1, 2, 0]).unwrap(), Vec::<Elt>::new());
    }
}
