//! Small finite fields `F_{p^k}` with exact arithmetic.
//!
//! An element is a single `u64` holding the base-`p` digits of its
//! coefficient vector: the element `c_0 + c_1*a + ... + c_{k-1}*a^{k-1}`
//! (with `a` the residue of `x` mod the modulus) is stored as the integer
//! `c_0 + c_1*p + ... + c_{k-1}*p^{k-1}`. Every integer in `0..p^k` is a
//! valid element, so enumeration of the whole field is just a counter. For
//! `p = 2` the digit vector is the bit pattern and addition is XOR.
//!
//! The modulus for an extension field is not caller-supplied: it is the
//! lexicographically least monic irreducible polynomial of degree `k`,
//! comparing coefficient tuples from the highest power below the leading
//! term down to the constant (so `F_8` gets `x^3 + x + 1`, `F_16` gets
//! `x^4 + x + 1`). Two runs can therefore never disagree about what "the"
//! field `F_{p^k}` means.

use std::fmt;

use thiserror::Error;

/// Packed field element. Interpretation depends on the owning [`Field`].
pub type Elt = u64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field too large: p^k must fit in 40 bits (got p={p}, k={k})")]
    TooLarge { p: u64, k: u32 },
    #[error("division by zero in F_{q}", q = .0)]
    DivisionByZero(u64),
    #[error("cannot parse field spec {0:?}; expected \"p\" or \"p^k\"")]
    BadSpec(String),
}

/// A finite field `F_{p^k}`, cheap to clone and pass by value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, ascending coefficients, length `k + 1`; `[0, 1]`
    /// placeholder when `k == 1`.
    modulus: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial helpers over the prime field, on ascending coefficient vectors.
mod fp_poly {
    /// Trim trailing zeros (highest powers) in place.
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    /// Remainder of `a` divided by monic `m`, all coefficients mod `p`.
    pub fn rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
        debug_assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
        let dm = m.len() - 1;
        while a.len() > dm {
            let c = *a.last().unwrap();
            let shift = a.len() - 1 - dm;
            if c != 0 {
                for (j, &mj) in m.iter().enumerate() {
                    let idx = shift + j;
                    a[idx] = (a[idx] + (p - c % p) * mj) % p;
                }
            }
            a.pop();
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        a
    }

    /// Does monic `m` divide monic `f` exactly (mod `p`)?
    pub fn divides(m: &[u64], f: &[u64], p: u64) -> bool {
        rem(f.to_vec(), m, p).is_empty()
    }

    pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
        let mut acc = 0u64;
        for &c in f.iter().rev() {
            acc = (acc * x + c) % p;
        }
        acc
    }
}

/// Is the monic polynomial `f` (ascending coefficients, degree >= 2)
/// irreducible over `F_p`? Checked by absence of roots plus absence of
/// monic factors of degree `2..=deg/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for x in 0..p {
        if fp_poly::eval(f, x, p) == 0 {
            return false;
        }
    }
    for d in 2..=deg / 2 {
        // enumerate monic polynomials of degree d
        let count = p.pow(d as u32);
        for n in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut v = n;
            for _ in 0..d {
                cand.push(v % p);
                v /= p;
            }
            cand.push(1);
            if fp_poly::divides(&cand, f, p) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Field::new(p, 1)
    }

    /// `F_{p^k}` with the canonical modulus (see module docs).
    pub fn new(p: u64, k: u32) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let bits = (k as f64) * (p as f64).log2();
        if bits > 40.0 {
            return Err(FieldError::TooLarge { p, k });
        }
        let q = p.pow(k);
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            Self::canonical_modulus(p, k)
        };
        Ok(Field { p, k, q, modulus })
    }

    /// Parse `"p"` or `"p^k"`.
    pub fn parse_spec(s: &str) -> Result<Field, FieldError> {
        let bad = || FieldError::BadSpec(s.to_string());
        if let Some((a, b)) = s.split_once('^') {
            let p: u64 = a.trim().parse().map_err(|_| bad())?;
            let k: u32 = b.trim().parse().map_err(|_| bad())?;
            Field::new(p, k)
        } else {
            let p: u64 = s.trim().parse().map_err(|_| bad())?;
            Field::new(p, 1)
        }
    }

    /// `"p"` for prime fields, `"p^k"` otherwise.
    pub fn spec_string(&self) -> String {
        if self.k == 1 {
            format!("{}", self.p)
        } else {
            format!("{}^{}", self.p, self.k)
        }
    }

    fn canonical_modulus(p: u64, k: u32) -> Vec<u64> {
        // Enumerate monic degree-k candidates ordered by the coefficient
        // tuple (c_{k-1}, ..., c_1, c_0) read lexicographically, i.e. the
        // most significant digits of `n` are the highest powers.
        let count = p.pow(k);
        for n in 0..count {
            let mut coeffs = vec![0u64; k as usize + 1];
            coeffs[k as usize] = 1;
            let mut v = n;
            for i in 0..k as usize {
                // lowest digit of v -> constant coefficient last, so peel
                // digits most-significant-first
                let e = (k as usize - 1) - i;
                let base = p.pow(e as u32);
                coeffs[e] = v / base;
                v %= base;
            }
            if is_irreducible(&coeffs, p) {
                return coeffs;
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Number of elements `p^k`.
    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients (ascending); meaningful only for `k > 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn is_f2(&self) -> bool {
        self.q == 2
    }

    pub fn zero(&self) -> Elt {
        0
    }

    pub fn one(&self) -> Elt {
        1
    }

    /// Embed a (possibly negative) integer through the prime subfield.
    pub fn from_int(&self, n: i64) -> Elt {
        let p = self.p as i64;
        (n.rem_euclid(p)) as u64
    }

    pub fn digits(&self, a: Elt) -> Vec<u64> {
        let mut out = vec![0u64; self.k as usize];
        let mut v = a;
        for d in out.iter_mut() {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[u64]) -> Elt {
        let mut acc = 0u64;
        for &d in digits.iter().rev() {
            acc = acc * self.p + d % self.p;
        }
        acc
    }

    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        debug_assert!(a < self.q && b < self.q);
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    pub fn neg(&self, a: Elt) -> Elt {
        if self.p == 2 {
            return a;
        }
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let da = self.digits(a);
        let nd: Vec<u64> = da.iter().map(|x| (self.p - x) % self.p).collect();
        self.pack(&nd)
    }

    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        debug_assert!(a < self.q && b < self.q);
        if a == 0 || b == 0 {
            return 0;
        }
        if self.k == 1 {
            return (a * b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut conv = vec![0u64; 2 * self.k as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                conv[i + j] = (conv[i + j] + x * y) % self.p;
            }
        }
        let red = fp_poly::rem(conv, &self.modulus, self.p);
        let mut digits = vec![0u64; self.k as usize];
        digits[..red.len()].copy_from_slice(&red);
        self.pack(&digits)
    }

    pub fn pow(&self, mut base: Elt, mut e: u64) -> Elt {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elt) -> Result<Elt, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero(self.q));
        }
        if self.k == 1 {
            return Ok(self.pow(a, self.p - 2));
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// All elements in canonical (counter) order.
    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        0..self.q
    }

    pub fn rand_elt<R: rand::Rng>(&self, rng: &mut R) -> Elt {
        rng.gen_range(0..self.q)
    }

    pub fn rand_nonzero<R: rand::Rng>(&self, rng: &mut R) -> Elt {
        rng.gen_range(1..self.q)
    }

    /// Render the modulus as a human-readable polynomial in `x`.
    pub fn modulus_string(&self) -> String {
        if self.k == 1 {
            return "x".to_string();
        }
        let mut parts = Vec::new();
        for (e, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{}", e),
            };
            let s = if e == 0 {
                format!("{}", c)
            } else if c == 1 {
                var
            } else {
                format!("{}{}", c, var)
            };
            parts.push(s);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{} ({})", self.p, self.k, self.modulus_string())
        }
    }
}
