use std::fmt;

use serde::{Deserialize, Serialize};

use super::GaloisError;

/// Dense polynomial over the prime field GF(`base`), lowest degree first.
///
/// The coefficient list never has trailing zeros; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    base: u32,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(base: u32, coeffs: impl Into<Vec<u32>>) -> Self {
        let mut coeffs: Vec<u32> = coeffs.into();
        for c in coeffs.iter_mut() {
            *c %= base;
        }
        let mut p = Poly { base, coeffs };
        p.trim();
        p
    }

    pub fn zero(base: u32) -> Self {
        Poly { base, coeffs: Vec::new() }
    }

    pub fn one(base: u32) -> Self {
        Poly::new(base, vec![1])
    }

    /// The monomial `x^n`.
    pub fn monomial(base: u32, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        Poly { base, coeffs }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(base: u32, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = (coeffs[0] + base - 1) % base;
        Poly::new(base, coeffs)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    fn check_base(&self, other: &Poly) -> Result<(), GaloisError> {
        if self.base != other.base {
            return Err(GaloisError::MixedBase(self.base, other.base));
        }
        Ok(())
    }

    fn inv_mod(&self, a: u32) -> u32 {
        mod_pow(a, self.base - 2, self.base)
    }

    pub fn add(&self, other: &Poly) -> Result<Poly, GaloisError> {
        self.check_base(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % self.base).collect::<Vec<_>>();
        Ok(Poly::new(self.base, coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly, GaloisError> {
        self.check_base(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let p = self.base;
        let coeffs = (0..n).map(|i| (self.coeff(i) + p - other.coeff(i)) % p).collect::<Vec<_>>();
        Ok(Poly::new(p, coeffs))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly, GaloisError> {
        self.check_base(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.base));
        }
        let p = self.base as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Ok(Poly::new(self.base, out.into_iter().map(|c| c as u32).collect::<Vec<_>>()))
    }

    pub fn scale(&self, c: u32) -> Poly {
        let p = self.base as u64;
        Poly::new(self.base, self.coeffs.iter().map(|&a| ((a as u64 * c as u64) % p) as u32).collect::<Vec<_>>())
    }

    /// Quotient and remainder; `deg(rem) < deg(divisor)`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), GaloisError> {
        self.check_base(divisor)?;
        let dd = divisor.degree().ok_or(GaloisError::DivisionByZeroPoly)?;
        let p = self.base as u64;
        let lead_inv = self.inv_mod(divisor.leading().unwrap()) as u64;
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        if rem.len() <= dd {
            return Ok((Poly::zero(self.base), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] * lead_inv % p;
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + p - c * d as u64 % p) % p;
            }
        }
        rem.truncate(dd);
        let to_u32 = |v: Vec<u64>| v.into_iter().map(|c| c as u32).collect::<Vec<_>>();
        Ok((Poly::new(self.base, to_u32(quot)), Poly::new(self.base, to_u32(rem))))
    }

    pub fn divides(&self, other: &Poly) -> Result<bool, GaloisError> {
        Ok(other.divrem(self)?.1.is_zero())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(l) => self.scale(self.inv_mod(l)),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly, GaloisError> {
        self.check_base(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b)?.1;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly) -> Result<Poly, GaloisError> {
        self.check_base(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.base));
        }
        let g = self.gcd(other)?;
        let (q, _) = self.mul(other)?.divrem(&g)?;
        Ok(q.monic())
    }

    /// Evaluate at a prime-field point.
    pub fn eval(&self, x: u32) -> u32 {
        let p = self.base as u64;
        self.coeffs.iter().rev().fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p) as u32
    }
}

pub(crate) fn mod_pow(a: u32, mut e: u32, p: u32) -> u32 {
    let (mut acc, p64) = (1u64, p as u64);
    let mut b = a as u64 % p64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p64;
        }
        b = b * b % p64;
        e >>= 1;
    }
    acc as u32
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

// Serialized as the bare coefficient list; the base travels with the field descriptor.
impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

/// Coefficient list paired with its base, for standalone deserialization.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyRepr {
    pub base: u32,
    pub coeffs: Vec<u32>,
}

impl From<PolyRepr> for Poly {
    fn from(r: PolyRepr) -> Self {
        Poly::new(r.base, r.coeffs)
    }
}
