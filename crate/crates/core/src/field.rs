//! Finite fields `GF(p^t)` in polynomial basis.
//!
//! An element is stored as its index: the coefficient vector `(c_0, …, c_{t-1})`
//! read as a base-`p` integer with `c_0` least significant. Index 0 is zero,
//! index 1 is one, and for `t = 1` the index is the residue itself.

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

/// Largest field order [`gf_make`] will build.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    t: u32,
    /// Low coefficients `c_0..c_{t-1}` of the monic modulus `x^t + …`.
    modulus: Vec<u64>,
}

impl FiniteField {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.t
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.t)
    }

    /// Full coefficient list of the modulus, constant term first, leading 1 last.
    pub fn modulus(&self) -> Vec<u64> {
        let mut m = self.modulus.clone();
        m.push(1);
        m
    }

    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.order()
    }

    pub fn coefficients(&self, x: u64) -> Vec<u64> {
        to_digits(x, self.p, self.t as usize)
    }

    pub fn from_coefficients(&self, c: &[u64]) -> u64 {
        from_digits(c, self.p)
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        let (a, b) = (self.coefficients(x), self.coefficients(y));
        let sum: Vec<u64> = a.iter().zip(&b).map(|(u, v)| (u + v) % self.p).collect();
        self.from_coefficients(&sum)
    }

    pub fn neg(&self, x: u64) -> u64 {
        let c: Vec<u64> = self
            .coefficients(x)
            .iter()
            .map(|&u| (self.p - u) % self.p)
            .collect();
        self.from_coefficients(&c)
    }

    pub fn sub(&self, x: u64, y: u64) -> u64 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        let (a, b) = (self.coefficients(x), self.coefficients(y));
        let mut prod = poly_mul(&a, &b, self.p);
        poly_rem_monic(&mut prod, &self.modulus(), self.p);
        prod.resize(self.t as usize, 0);
        self.from_coefficients(&prod)
    }

    pub fn pow(&self, x: u64, mut e: u64) -> u64 {
        let (mut base, mut acc) = (x, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self, x: u64) -> Option<u64> {
        (x != 0).then(|| self.pow(x, self.order() - 2))
    }
}

fn to_digits(mut x: u64, p: u64, len: usize) -> Vec<u64> {
    let mut d = Vec::with_capacity(len);
    for _ in 0..len {
        d.push(x % p);
        x /= p;
    }
    d
}

fn from_digits(c: &[u64], p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len()];
    for (i, &u) in a.iter().enumerate() {
        if u == 0 {
            continue;
        }
        for (j, &v) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + u * v) % p;
        }
    }
    out
}

/// Reduce `a` in place modulo the monic polynomial `m` (coefficients low to high).
fn poly_rem_monic(a: &mut Vec<u64>, m: &[u64], p: u64) {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().expect("non-empty");
        if lead == 0 {
            continue;
        }
        let shift = a.len() - dm;
        for (k, &mk) in m[..dm].iter().enumerate() {
            a[shift + k] = (a[shift + k] + (p - lead) * mk) % p;
        }
    }
}

/// Irreducibility by trial division with every monic polynomial of degree up to `t/2`.
fn is_irreducible(low: &[u64], p: u64) -> bool {
    let t = low.len();
    let mut m = low.to_vec();
    m.push(1);
    for d in 1..=t / 2 {
        for code in 0..p.pow(d as u32) {
            let mut divisor = to_digits(code, p, d);
            divisor.push(1);
            let mut r = m.clone();
            poly_rem_monic(&mut r, &divisor, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// `GF(p^t)` with the smallest monic irreducible modulus, ordering candidates
/// by their low coefficients read as a base-`p` integer.
pub fn gf_make(p: u64, t: u32) -> Result<FiniteField> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if t == 0 {
        return Err(Error::invalid("field degree must be at least 1"));
    }
    match p.checked_pow(t) {
        Some(q) if q <= MAX_FIELD_ORDER => {}
        _ => {
            return Err(Error::ResourceLimit(format!(
                "GF({p}^{t}) exceeds the field order bound {MAX_FIELD_ORDER}"
            )))
        }
    }
    let modulus = (0..p.pow(t))
        .map(|code| to_digits(code, p, t as usize))
        .find(|low| is_irreducible(low, p))
        .expect("irreducible polynomials exist in every degree");
    Ok(FiniteField { p, t, modulus })
}
