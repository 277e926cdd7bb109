//! Ordinary simplicial homology and cohomology with field coefficients.
//!
//! Chains are coefficient vectors over the indexed n-simplices; the
//! boundary of a simplex is the alternating sum of its vertex-dropped
//! faces, signs following the ascending vertex order. Cohomology bases are
//! chosen *dual* to the homology cycle bases under the evaluation pairing,
//! so reading off the coordinates of a cocycle class is literally
//! evaluation on the stored cycles.

use thiserror::Error;

use crate::algebra::{Elt, Field, Matrix, QuotientSpace, Subspace};
use crate::complex::Triangulation;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("degree {0} out of range for a {1}-dimensional complex")]
    DegreeOutOfRange(usize, usize),
    #[error("cochain is not a cocycle")]
    NotCocycle,
    #[error("complex is not closed (top boundary of the candidate cycle does not vanish)")]
    NotClosed,
    #[error("no top cycle over characteristic {0} — complex is non-orientable")]
    NonOrientable(u64),
    #[error("complex is disconnected; split into components first")]
    Disconnected,
}

/// `∂_n`: the `N_{n-1} × N_n` matrix with column `j` the signed facet sum
/// of n-simplex `j`. `n = 0` gives the empty matrix over `N_0` columns.
pub fn boundary_matrix(field: &Field, k: &Triangulation, n: usize) -> Result<Matrix, HomologyError> {
    if n > k.dim() {
        return Err(HomologyError::DegreeOutOfRange(n, k.dim()));
    }
    if n == 0 {
        return Ok(Matrix::zero(field, 0, k.n_simplices(0)));
    }
    let rows = k.n_simplices(n - 1);
    let cols = k.n_simplices(n);
    let mut m = Matrix::zero(field, rows, cols);
    let simplices = k.simplices(n);
    for (j, s) in simplices.iter().enumerate() {
        for drop in 0..s.len() {
            let face: Vec<_> =
                s.iter().enumerate().filter(|(i, _)| *i != drop).map(|(_, &v)| v).collect();
            let i = k.index_of(&face).expect("face of an indexed simplex is indexed");
            let sign = if drop % 2 == 0 { 1 } else { -1 };
            m.set(i, j, field.from_int(sign));
        }
    }
    Ok(m)
}

/// Cycles `ker ∂_n` as a subspace of `F^{N_n}`.
pub fn cycle_space(field: &Field, k: &Triangulation, n: usize) -> Result<Subspace, HomologyError> {
    Ok(Subspace::kernel_of(&boundary_matrix(field, k, n)?))
}

/// Boundaries `im ∂_{n+1}` as a subspace of `F^{N_n}`.
pub fn boundary_space(field: &Field, k: &Triangulation, n: usize) -> Result<Subspace, HomologyError> {
    if n >= k.dim() {
        return Ok(Subspace::zero(field, k.n_simplices(n)));
    }
    Ok(Subspace::from_matrix(boundary_matrix(field, k, n + 1)?.transpose()))
}

/// Homology in degree `n`: the quotient `ker ∂_n / im ∂_{n+1}` with its
/// canonical cycle representatives.
#[derive(Debug, Clone)]
pub struct HomologyBasis {
    pub n: usize,
    pub quotient: QuotientSpace,
}

impl HomologyBasis {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Chosen cycle representatives, one row per class.
    pub fn cycles(&self) -> &Matrix {
        self.quotient.coset_basis()
    }
}

pub fn homology_basis(field: &Field, k: &Triangulation, n: usize) -> Result<HomologyBasis, HomologyError> {
    let z = cycle_space(field, k, n)?;
    let b = boundary_space(field, k, n)?;
    Ok(HomologyBasis { n, quotient: QuotientSpace::new(&z, &b) })
}

/// Cohomology in degree `n`, represented by cocycles dual to a
/// [`HomologyBasis`]: evaluation of representative `i` on cycle `j` is
/// `δ_ij`.
#[derive(Debug, Clone)]
pub struct CohomologyBasis {
    pub n: usize,
    /// one row per class; row `i` evaluates to `e_i` on the homology basis
    pub cocycles: Matrix,
    /// the cocycle condition matrix `∂_{n+1}ᵀ` (empty in top degree),
    /// kept for membership checks
    coboundary_of: Matrix,
    /// span of coboundaries `δ C^{n-1} = im ∂_nᵀ`
    coboundaries: Subspace,
}

impl CohomologyBasis {
    pub fn dim(&self) -> usize {
        self.cocycles.rows()
    }

    pub fn is_cocycle(&self, c: &[Elt]) -> bool {
        self.coboundary_of.mul_vec(c).iter().all(|&e| e == 0)
    }

    pub fn is_coboundary(&self, c: &[Elt]) -> bool {
        self.coboundaries.contains(c)
    }
}

/// Build the dual cohomology basis to `homology_basis(field, k, n)`.
pub fn cohomology_basis(field: &Field, k: &Triangulation, n: usize) -> Result<CohomologyBasis, HomologyError> {
    let hb = homology_basis(field, k, n)?;
    let nn = k.n_simplices(n);
    // cocycles: functionals vanishing on boundaries = ker ∂_{n+1}ᵀ
    let dual_boundary = if n >= k.dim() {
        Matrix::zero(field, 0, nn)
    } else {
        boundary_matrix(field, k, n + 1)?.transpose()
    };
    let cocycle_span = dual_boundary.kernel_basis();
    // pairing P[r][j] = <cocycle_r, cycle_j>
    let pairing = cocycle_span.mat_mul(&hb.cycles().transpose());
    // solve A x = e_i with A = pairingᵀ (dim H × #cocycle gens)
    let a = pairing.transpose();
    let mut r = a.clone();
    let mut t = Matrix::identity(field, a.rows());
    let pivots = r.rref_with(Some(&mut t));
    if pivots.len() != a.rows() {
        // the evaluation pairing between cocycles and homology classes is
        // nondegenerate over a field; anything else is an internal error
        panic!("degenerate cocycle/cycle pairing: rank {} of {}", pivots.len(), a.rows());
    }
    let h = hb.dim();
    let mut duals = Matrix::zero(field, h, nn);
    for i in 0..h {
        // x supported on pivot columns: x[p_j] = (T e_i)_j
        let mut coeffs = vec![0; cocycle_span.rows()];
        for (j, &p) in pivots.iter().enumerate() {
            coeffs[p] = t.get(j, i);
        }
        let alpha = cocycle_span.vec_mul(&coeffs);
        duals.set_row(i, &alpha);
    }
    let coboundaries = if n == 0 {
        Subspace::zero(field, nn)
    } else {
        Subspace::from_matrix(boundary_matrix(field, k, n)?)
    };
    Ok(CohomologyBasis { n, cocycles: duals, coboundary_of: dual_boundary, coboundaries })
}

/// Coordinates of the class of cocycle `c` in the basis dual to the
/// homology cycles: the vector of evaluations on those cycles.
pub fn class_coordinates(
    field: &Field,
    hb: &HomologyBasis,
    cohom: &CohomologyBasis,
    c: &[Elt],
) -> Result<Vec<Elt>, HomologyError> {
    if !cohom.is_cocycle(c) {
        return Err(HomologyError::NotCocycle);
    }
    let cycles = hb.cycles();
    let f = field;
    Ok((0..cycles.rows())
        .map(|j| {
            let z = cycles.row(j);
            let mut acc = 0;
            for (a, b) in c.iter().zip(&z) {
                acc = f.add(acc, f.mul(*a, *b));
            }
            acc
        })
        .collect())
}

/// A generator of the top cycle space of a closed connected complex.
///
/// Over characteristic 2 this is the all-ones vector (checked to be a
/// cycle); otherwise it is solved from `ker ∂_top`, which detects
/// non-orientability as an empty kernel. Normalized so the first facet has
/// coefficient 1.
pub fn fundamental_cycle(field: &Field, k: &Triangulation) -> Result<Vec<Elt>, HomologyError> {
    if !k.is_connected() {
        return Err(HomologyError::Disconnected);
    }
    let top = k.dim();
    let d_top = boundary_matrix(field, k, top)?;
    if field.characteristic() == 2 {
        let ones = vec![1; k.n_simplices(top)];
        if d_top.mul_vec(&ones).iter().any(|&e| e != 0) {
            return Err(HomologyError::NotClosed);
        }
        return Ok(ones);
    }
    let kernel = d_top.kernel_basis();
    match kernel.rows() {
        0 => Err(HomologyError::NonOrientable(field.characteristic())),
        1 => Ok(kernel.row(0)),
        // connected closed complexes have a 1-dimensional top cycle space;
        // more kernel vectors means the input was not a closed manifold
        _ => Err(HomologyError::NotClosed),
    }
}

/// `dim H_n(K, F)` for `n = 0..=dim`.
pub fn betti_numbers(field: &Field, k: &Triangulation) -> Result<Vec<usize>, HomologyError> {
    (0..=k.dim()).map(|n| Ok(homology_basis(field, k, n)?.dim())).collect()
}
