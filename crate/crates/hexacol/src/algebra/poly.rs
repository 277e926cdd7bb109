//! Sparse multivariate polynomials with formal (not functional) semantics.
//!
//! Terms are kept in graded-lex descending order with zero coefficients
//! dropped, so equal polynomials are structurally equal. Formal means
//! `x^2` and `x` are different polynomials over `F_2` even though they
//! agree at every point; evaluation only happens where a caller explicitly
//! asks for values.

use super::field::{Elt, Field};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    field: Field,
    nvars: usize,
    /// (exponent vector, coefficient), graded-lex descending, coeffs nonzero.
    terms: Vec<(Vec<u8>, Elt)>,
}

/// Graded-lex: higher total degree first, ties broken lexicographically
/// (larger exponent on an earlier variable first).
fn term_order(a: &[u8], b: &[u8]) -> std::cmp::Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl MPoly {
    pub fn zero(field: &Field, nvars: usize) -> MPoly {
        MPoly { field: field.clone(), nvars, terms: Vec::new() }
    }

    pub fn constant(field: &Field, nvars: usize, c: Elt) -> MPoly {
        let mut p = MPoly::zero(field, nvars);
        if c != 0 {
            p.terms.push((vec![0; nvars], c));
        }
        p
    }

    pub fn var(field: &Field, nvars: usize, i: usize) -> MPoly {
        assert!(i < nvars);
        let mut e = vec![0u8; nvars];
        e[i] = 1;
        MPoly { field: field.clone(), nvars, terms: vec![(e, 1)] }
    }

    pub fn from_terms(field: &Field, nvars: usize, terms: Vec<(Vec<u8>, Elt)>) -> MPoly {
        let mut p = MPoly { field: field.clone(), nvars, terms };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        self.terms.sort_by(|a, b| term_order(&b.0, &a.0));
        let mut out: Vec<(Vec<u8>, Elt)> = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.drain(..) {
            assert_eq!(e.len(), self.nvars, "exponent vector length");
            if let Some(last) = out.last_mut() {
                if last.0 == e {
                    last.1 = self.field.add(last.1, c);
                    continue;
                }
            }
            out.push((e, c));
        }
        out.retain(|(_, c)| *c != 0);
        self.terms = out;
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Vec<u8>, Elt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        // graded order puts the highest-degree term first
        self.terms.first().map_or(0, |(e, _)| e.iter().map(|&x| x as u32).sum())
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().map(|&x| x as u32).sum::<u32>() == d)
    }

    pub fn homogeneous_part(&self, d: u32) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().map(|&x| x as u32).sum::<u32>() == d)
            .cloned()
            .collect();
        MPoly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.field, other.field);
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        MPoly::from_terms(&self.field, self.nvars, terms)
    }

    pub fn neg(&self) -> MPoly {
        let terms =
            self.terms.iter().map(|(e, c)| (e.clone(), self.field.neg(*c))).collect();
        MPoly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Elt) -> MPoly {
        if c == 0 {
            return MPoly::zero(&self.field, self.nvars);
        }
        let terms =
            self.terms.iter().map(|(e, k)| (e.clone(), self.field.mul(*k, c))).collect();
        MPoly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.field, other.field);
        assert_eq!(self.nvars, other.nvars);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u8> = ea
                    .iter()
                    .zip(eb)
                    .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                    .collect();
                terms.push((e, self.field.mul(*ca, *cb)));
            }
        }
        MPoly::from_terms(&self.field, self.nvars, terms)
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::constant(&self.field, self.nvars, 1);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[Elt]) -> Elt {
        assert_eq!(point.len(), self.nvars);
        let f = &self.field;
        let mut acc = 0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    t = f.mul(t, f.pow(point[i], exp as u64));
                }
            }
            acc = f.add(acc, t);
        }
        acc
    }

    /// Substitute `var i := images[i]` for every variable. All images must
    /// share one variable set, which becomes the result's.
    pub fn subst(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.nvars);
        let (new_field, new_nvars) = match images.first() {
            Some(p) => (p.field.clone(), p.nvars),
            None => (self.field.clone(), 0),
        };
        for p in images {
            assert_eq!(p.field, new_field);
            assert_eq!(p.nvars, new_nvars);
        }
        // cache image powers; degrees stay tiny in every use here
        let mut pows: Vec<Vec<MPoly>> =
            images.iter().map(|p| vec![MPoly::constant(&new_field, new_nvars, 1), p.clone()]).collect();
        let mut acc = MPoly::zero(&new_field, new_nvars);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(&new_field, new_nvars, *c);
            for (i, &exp) in e.iter().enumerate() {
                let exp = exp as usize;
                if exp == 0 {
                    continue;
                }
                while pows[i].len() <= exp {
                    let next = pows[i].last().unwrap().mul(&images[i]);
                    pows[i].push(next);
                }
                t = t.mul(&pows[i][exp]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute `var i := sum_j linear[i][j] * new_var_j + consts[i]`.
    /// Degree never increases.
    pub fn substitute_affine(
        &self,
        linear: &[Vec<Elt>],
        consts: &[Elt],
        new_nvars: usize,
    ) -> MPoly {
        assert_eq!(linear.len(), self.nvars);
        assert_eq!(consts.len(), self.nvars);
        let images: Vec<MPoly> = linear
            .iter()
            .zip(consts)
            .map(|(row, &c0)| {
                assert_eq!(row.len(), new_nvars);
                let mut terms: Vec<(Vec<u8>, Elt)> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(j, &c)| {
                        let mut e = vec![0u8; new_nvars];
                        e[j] = 1;
                        (e, c)
                    })
                    .collect();
                if c0 != 0 {
                    terms.push((vec![0; new_nvars], c0));
                }
                MPoly::from_terms(&self.field, new_nvars, terms)
            })
            .collect();
        let out = self.subst(&images);
        debug_assert!(out.degree() <= self.degree());
        out
    }

    pub fn substitute_linear(&self, linear: &[Vec<Elt>], new_nvars: usize) -> MPoly {
        self.substitute_affine(linear, &vec![0; self.nvars], new_nvars)
    }

    /// Re-index variables: old var `i` becomes `map[i]` among `new_nvars`
    /// variables. The map must be injective.
    pub fn map_vars(&self, map: &[usize], new_nvars: usize) -> MPoly {
        assert_eq!(map.len(), self.nvars);
        {
            let mut seen = vec![false; new_nvars];
            for &t in map {
                assert!(t < new_nvars && !seen[t], "variable map must be injective");
                seen[t] = true;
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0u8; new_nvars];
                for (i, &exp) in e.iter().enumerate() {
                    ne[map[i]] = exp;
                }
                (ne, *c)
            })
            .collect();
        MPoly::from_terms(&self.field, new_nvars, terms)
    }

    /// For polynomials in variable blocks `[z_1..z_m, z'_1..z'_m]`: the
    /// (first-block degree, second-block degree) common to every term, if any.
    pub fn bidegree(&self, m: usize) -> Option<(u32, u32)> {
        assert!(2 * m == self.nvars, "bidegree needs exactly two equal blocks");
        let mut out = None;
        for (e, _) in &self.terms {
            let d1: u32 = e[..m].iter().map(|&x| x as u32).sum();
            let d2: u32 = e[m..].iter().map(|&x| x as u32).sum();
            match out {
                None => out = Some((d1, d2)),
                Some(bd) if bd == (d1, d2) => {}
                _ => return None,
            }
        }
        out.or(Some((0, 0)))
    }

    /// Coefficient matrix `B[i][j]` = coeff of `z_i z'_j` for a bidegree
    /// (1,1) polynomial. Panics on anything else.
    pub fn bilinear_matrix(&self, m: usize) -> super::matrix::Matrix {
        assert!(
            self.is_zero() || self.bidegree(m) == Some((1, 1)),
            "bilinear matrix requires bidegree (1,1)"
        );
        let mut b = super::matrix::Matrix::zero(&self.field, m, m);
        for (e, c) in &self.terms {
            let i = e[..m].iter().position(|&x| x == 1).unwrap();
            let j = e[m..].iter().position(|&x| x == 1).unwrap();
            b.set(i, j, *c);
        }
        b
    }

    /// Exchange the two variable blocks (z <-> z').
    pub fn swap_blocks(&self, m: usize) -> MPoly {
        assert_eq!(2 * m, self.nvars);
        let map: Vec<usize> = (0..2 * m).map(|i| if i < m { i + m } else { i - m }).collect();
        self.map_vars(&map, 2 * m)
    }

    /// Human-readable form, terms in canonical order: `2*X1^2*X2 + X3`.
    /// Extension-field coefficients print as parenthesized polynomials in t.
    pub fn render(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            let is_const_term = e.iter().all(|&x| x == 0);
            if *c != 1 || is_const_term {
                factors.push(coeff_string(&self.field, *c));
            }
            for (i, &exp) in e.iter().enumerate() {
                if exp == 1 {
                    factors.push(names[i].clone());
                } else if exp > 1 {
                    factors.push(format!("{}^{}", names[i], exp));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// One field element as text: decimal for prime fields, a parenthesized
/// polynomial in `t` otherwise (e.g. `(t+1)` in F_4).
pub fn coeff_string(field: &Field, e: Elt) -> String {
    if field.degree() == 1 {
        return format!("{e}");
    }
    let digits = field.digits(e);
    let mut parts = Vec::new();
    for (i, &d) in digits.iter().enumerate().rev() {
        if d == 0 {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        let part = match (d, i) {
            (_, 0) => format!("{d}"),
            (1, _) => var,
            _ => format!("{d}*{var}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        format!("({})", parts.join("+"))
    }
}

/// Names X1..Xd, then X'1..X'd when `primed` is set.
pub fn coordinate_names(d: usize, primed: bool) -> Vec<String> {
    let mut v: Vec<String> = (1..=d).map(|i| format!("X{i}")).collect();
    if primed {
        v.extend((1..=d).map(|i| format!("X'{i}")));
    }
    v
}
