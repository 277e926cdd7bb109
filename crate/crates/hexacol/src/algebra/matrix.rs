//! Dense exact matrices with two storage layouts.
//!
//! Over `F_2` rows are packed 64 columns to a word and elimination is XOR;
//! over every other field rows are flat arrays of packed elements. The two
//! layouts sit behind one type so callers never branch. Reduction is full
//! Gauss-Jordan with the pivot always taken in the smallest eligible column
//! and the topmost eligible row, which makes every reduced form (and hence
//! every basis derived from one) canonical for its row space.

use super::field::{Elt, Field};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Storage {
    /// words_per_row, then row-major packed bits (LSB of word 0 = column 0).
    Bit(usize, Vec<u64>),
    Gen(Vec<Elt>),
}

#[derive(Debug, Clone)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    st: Storage,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        let st = if field.is_f2() {
            let wpr = cols.div_ceil(64);
            Storage::Bit(wpr, vec![0u64; rows * wpr])
        } else {
            Storage::Gen(vec![0; rows * cols])
        };
        Matrix { rows, cols, field: field.clone(), st }
    }

    /// Force element-array storage even over `F_2`. Exists so that ranks and
    /// kernels can be recomputed down an entirely separate code path when a
    /// result is important enough to double-derive.
    pub fn zero_generic(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, field: field.clone(), st: Storage::Gen(vec![0; rows * cols]) }
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elt>]) -> Matrix {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zero(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &e) in r.iter().enumerate() {
                m.set(i, j, e);
            }
        }
        m
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elt {
        debug_assert!(r < self.rows && c < self.cols);
        match &self.st {
            Storage::Bit(wpr, w) => (w[r * wpr + c / 64] >> (c % 64)) & 1,
            Storage::Gen(v) => v[r * self.cols + c],
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, e: Elt) {
        debug_assert!(r < self.rows && c < self.cols);
        match &mut self.st {
            Storage::Bit(wpr, w) => {
                let idx = r * *wpr + c / 64;
                let mask = 1u64 << (c % 64);
                if e & 1 == 1 {
                    w[idx] |= mask;
                } else {
                    w[idx] &= !mask;
                }
            }
            Storage::Gen(v) => v[r * self.cols + c] = e,
        }
    }

    pub fn row(&self, r: usize) -> Vec<Elt> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn set_row(&mut self, r: usize, vals: &[Elt]) {
        assert_eq!(vals.len(), self.cols);
        for (c, &e) in vals.iter().enumerate() {
            self.set(r, c, e);
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.st {
            Storage::Bit(_, w) => w.iter().all(|&x| x == 0),
            Storage::Gen(v) => v.iter().all(|&x| x == 0),
        }
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        match &self.st {
            Storage::Bit(wpr, w) => w[r * wpr..(r + 1) * wpr].iter().all(|&x| x == 0),
            Storage::Gen(v) => v[r * self.cols..(r + 1) * self.cols].iter().all(|&x| x == 0),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        match &mut self.st {
            Storage::Bit(wpr, w) => {
                for j in 0..*wpr {
                    w.swap(a * *wpr + j, b * *wpr + j);
                }
            }
            Storage::Gen(v) => {
                for j in 0..self.cols {
                    v.swap(a * self.cols + j, b * self.cols + j);
                }
            }
        }
    }

    /// `row[dst] += f * row[src]` (over `F_2` with `f = 1` this is an XOR).
    fn addmul_row(&mut self, dst: usize, src: usize, f: Elt) {
        if f == 0 {
            return;
        }
        match &mut self.st {
            Storage::Bit(wpr, w) => {
                let (d0, s0) = (dst * *wpr, src * *wpr);
                for j in 0..*wpr {
                    let s = w[s0 + j];
                    w[d0 + j] ^= s;
                }
            }
            Storage::Gen(v) => {
                let fld = &self.field;
                for j in 0..self.cols {
                    let s = v[src * self.cols + j];
                    if s != 0 {
                        let d = v[dst * self.cols + j];
                        v[dst * self.cols + j] = fld.add(d, fld.mul(f, s));
                    }
                }
            }
        }
    }

    fn scale_row(&mut self, r: usize, f: Elt) {
        if f == 1 {
            return;
        }
        match &mut self.st {
            Storage::Bit(..) => unreachable!("only scalar 1 is a unit times anything in F_2"),
            Storage::Gen(v) => {
                let fld = &self.field;
                for j in 0..self.cols {
                    v[r * self.cols + j] = fld.mul(v[r * self.cols + j], f);
                }
            }
        }
    }

    /// Reduce to canonical RREF in place; returns pivot columns in
    /// increasing order. If `companion` is given, the identical row
    /// operations are applied to it (for solving / transform tracking).
    pub fn rref_with(&mut self, mut companion: Option<&mut Matrix>) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..self.cols {
            // topmost eligible row below the current rank
            let mut piv = None;
            for r in rank..self.rows {
                if self.get(r, col) != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            self.swap_rows(rank, piv);
            if let Some(c) = companion.as_deref_mut() {
                c.swap_rows(rank, piv);
            }
            let lead = self.get(rank, col);
            if lead != 1 {
                let inv = self.field.inv(lead).expect("pivot is nonzero");
                self.scale_row(rank, inv);
                if let Some(c) = companion.as_deref_mut() {
                    c.scale_row(rank, inv);
                }
            }
            for r in 0..self.rows {
                if r != rank {
                    let f = self.get(r, col);
                    if f != 0 {
                        let nf = self.field.neg(f);
                        self.addmul_row(r, rank, nf);
                        if let Some(c) = companion.as_deref_mut() {
                            c.addmul_row(r, rank, nf);
                        }
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rref(&mut self) -> Vec<usize> {
        self.rref_with(None)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Canonical basis (RREF rows) of the right kernel `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let piv_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| piv_of_col[*c].is_none()).collect();
        let mut gens = Matrix::like_storage(self, free.len(), self.cols);
        for (gi, &fc) in free.iter().enumerate() {
            gens.set(gi, fc, 1);
            for (pi, &pc) in pivots.iter().enumerate() {
                let e = m.get(pi, fc);
                if e != 0 {
                    gens.set(gi, pc, self.field.neg(e));
                }
            }
        }
        // canonicalize the generating set itself
        gens.rref();
        gens.trim_zero_rows();
        gens
    }

    /// New zero matrix with the same storage flavor as `self` (so forced
    /// generic inputs produce forced generic outputs).
    fn like_storage(&self, rows: usize, cols: usize) -> Matrix {
        match &self.st {
            Storage::Bit(..) => Matrix::zero(&self.field, rows, cols),
            Storage::Gen(_) => Matrix::zero_generic(&self.field, rows, cols),
        }
    }

    pub fn trim_zero_rows(&mut self) {
        let keep: Vec<usize> = (0..self.rows).filter(|&r| !self.row_is_zero(r)).collect();
        if keep.len() == self.rows {
            return;
        }
        let mut out = self.like_storage(keep.len(), self.cols);
        for (ni, &oi) in keep.iter().enumerate() {
            for c in 0..self.cols {
                let e = self.get(oi, c);
                if e != 0 {
                    out.set(ni, c, e);
                }
            }
        }
        *self = out;
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = self.like_storage(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.get(r, c);
                if e != 0 {
                    out.set(c, r, e);
                }
            }
        }
        out
    }

    pub fn mat_mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b != 0 {
                        let cur = out.get(r, c);
                        out.set(r, c, self.field.add(cur, self.field.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    /// `M v` for a column vector.
    pub fn mul_vec(&self, v: &[Elt]) -> Vec<Elt> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0;
                for (c, &x) in v.iter().enumerate() {
                    if x != 0 {
                        acc = f.add(acc, f.mul(self.get(r, c), x));
                    }
                }
                acc
            })
            .collect()
    }

    /// `v^T M` for a row vector.
    pub fn vec_mul(&self, v: &[Elt]) -> Vec<Elt> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut acc = vec![0; self.cols];
        for (r, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (c, a) in acc.iter_mut().enumerate() {
                let e = self.get(r, c);
                if e != 0 {
                    *a = f.add(*a, f.mul(x, e));
                }
            }
        }
        acc
    }

    pub fn stack(top: &Matrix, bottom: &Matrix) -> Matrix {
        assert_eq!(top.cols, bottom.cols);
        let mut out = top.like_storage(top.rows + bottom.rows, top.cols);
        for r in 0..top.rows {
            for c in 0..top.cols {
                let e = top.get(r, c);
                if e != 0 {
                    out.set(r, c, e);
                }
            }
        }
        for r in 0..bottom.rows {
            for c in 0..bottom.cols {
                let e = bottom.get(r, c);
                if e != 0 {
                    out.set(top.rows + r, c, e);
                }
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = self.like_storage(self.rows, cols.len());
        for r in 0..self.rows {
            for (nc, &oc) in cols.iter().enumerate() {
                let e = self.get(r, oc);
                if e != 0 {
                    out.set(r, nc, e);
                }
            }
        }
        out
    }

    /// Entry-wise equality (storage-agnostic).
    pub fn same_entries(&self, other: &Matrix) -> bool {
        if self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) != other.get(r, c) {
                    return false;
                }
            }
        }
        true
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.same_entries(other)
    }
}
impl Eq for Matrix {}

/// Incremental row-reduction: feed vectors one at a time, keeping a reduced
/// independent set. Used for greedy basis completion and rank tracking.
pub struct Eliminator {
    mat: Matrix,
    pivots: Vec<usize>,
    n_rows: usize,
}

impl Eliminator {
    pub fn new(field: &Field, ncols: usize) -> Eliminator {
        Eliminator { mat: Matrix::zero(field, 0, ncols), pivots: Vec::new(), n_rows: 0 }
    }

    pub fn rank(&self) -> usize {
        self.n_rows
    }

    /// Reduce `v` against the current rows; returns the residual.
    pub fn reduce(&self, v: &[Elt]) -> Vec<Elt> {
        let f = self.mat.field().clone();
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c != 0 {
                let nf = f.neg(c);
                for j in 0..w.len() {
                    let e = self.mat.get(i, j);
                    if e != 0 {
                        w[j] = f.add(w[j], f.mul(nf, e));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Elt]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Insert if independent; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Elt]) -> bool {
        let f = self.mat.field().clone();
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[p]).expect("leading entry nonzero");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // back-reduce existing rows so the set stays fully reduced
        let mut grown = Matrix::zero(&f, self.n_rows + 1, w.len());
        for r in 0..self.n_rows {
            for c in 0..w.len() {
                let e = self.mat.get(r, c);
                if e != 0 {
                    grown.set(r, c, e);
                }
            }
        }
        grown.set_row(self.n_rows, &w);
        for r in 0..self.n_rows {
            let c = grown.get(r, p);
            if c != 0 {
                let nf = f.neg(c);
                grown.addmul_row(r, self.n_rows, nf);
            }
        }
        self.mat = grown;
        self.n_rows += 1;
        // keep rows sorted by pivot column so the basis stays canonical
        let mut order: Vec<usize> = (0..self.n_rows).collect();
        let mut pivots = self.pivots.clone();
        pivots.push(p);
        order.sort_by_key(|&i| pivots[i]);
        let mut sorted = Matrix::zero(&f, self.n_rows, self.mat.cols());
        let mut sorted_pivots = Vec::with_capacity(self.n_rows);
        for (ni, &oi) in order.iter().enumerate() {
            for c in 0..self.mat.cols() {
                let e = self.mat.get(oi, c);
                if e != 0 {
                    sorted.set(ni, c, e);
                }
            }
            sorted_pivots.push(pivots[oi]);
        }
        self.mat = sorted;
        self.pivots = sorted_pivots;
        true
    }

    pub fn into_matrix(self) -> Matrix {
        self.mat
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }
}
