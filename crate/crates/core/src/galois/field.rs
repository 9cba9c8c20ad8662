use std::fmt;

use serde::{Serialize, Serializer};

use super::{GaloisError, Poly};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Built-in primitive polynomials, coefficients lowest degree first.
///
/// Binary entries are the usual low-weight primitive polynomials; ternary
/// entries for e <= 7 are the Conway polynomials. Any (p, e) missing here
/// uses the first primitive polynomial in the order produced by
/// [`search_primitive`].
const PRIMITIVE_TABLE: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 12, &[1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1]),
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 14, &[1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]),
    (2, 15, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 16, &[1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1]),
    (2, 17, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 18, &[1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 19, &[1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 20, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (3, 7, &[1, 0, 2, 0, 0, 0, 0, 1]),
];

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes `n = p^f` when possible.
pub(crate) fn prime_power(n: u32) -> Option<(u32, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let (mut rest, mut f) = (n, 0);
    while rest % p == 0 {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

/// The finite field GF(p^e) in polynomial basis, with log/antilog tables.
///
/// An element is the integer whose base-p digits are the coordinates on
/// `1, x, ..., x^{e-1}` modulo `modulus`. The distinguished primitive
/// element α is the class of `x`.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    modulus: Poly,
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec").field("p", &self.p).field("e", &self.e).field("modulus", &self.modulus.to_string()).finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// GF(p^e); `modulus` defaults to the built-in table entry.
    pub fn new(p: u32, e: u32, modulus: Option<Poly>) -> Result<Self, GaloisError> {
        if !is_prime(p) {
            return Err(GaloisError::NotPrime(p));
        }
        if e == 0 || (p as u64).checked_pow(e).map_or(true, |o| o > MAX_FIELD_ORDER) {
            return Err(GaloisError::UnsupportedSize { p, e });
        }
        let modulus = match modulus {
            Some(m) => m,
            None => default_modulus(p, e),
        };
        if modulus.base() != p {
            return Err(GaloisError::MixedBase(p, modulus.base()));
        }
        if modulus.degree() != Some(e as usize) {
            return Err(GaloisError::NotPrimitivePolynomial(modulus.to_string()));
        }
        let modulus = modulus.monic();
        let (exp, log) = build_tables(p, e, &modulus).ok_or_else(|| GaloisError::NotPrimitivePolynomial(modulus.to_string()))?;
        Ok(FieldSpec { p, e, order: p.pow(e), modulus, exp, log })
    }

    /// Convenience constructor using the built-in modulus.
    pub fn with_default_modulus(p: u32, e: u32) -> Result<Self, GaloisError> {
        Self::new(p, e, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Order of the multiplicative group, `p^e - 1`.
    pub fn group_order(&self) -> u32 {
        self.order - 1
    }

    pub fn element(&self, rep: u32) -> Result<FieldElement<'_>, GaloisError> {
        if rep >= self.order {
            return Err(GaloisError::OutOfRange { rep, order: self.order });
        }
        Ok(FieldElement { field: self, rep })
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement { field: self, rep: 0 }
    }

    pub fn one(&self) -> FieldElement<'_> {
        FieldElement { field: self, rep: 1 }
    }

    /// The distinguished primitive element α.
    pub fn alpha(&self) -> FieldElement<'_> {
        self.alpha_pow(1)
    }

    /// α^i for any integer exponent (reduced mod p^e - 1).
    pub fn alpha_pow(&self, i: i64) -> FieldElement<'_> {
        let n = self.group_order() as i64;
        FieldElement { field: self, rep: self.exp[i.rem_euclid(n) as usize] }
    }

    // Raw-representation arithmetic; the hot loops use these directly.

    #[inline]
    pub fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| x + y)
    }

    #[inline]
    pub fn sub_raw(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let p = self.p;
        self.digitwise(a, b, |x, y| x + p - y)
    }

    #[inline]
    pub fn neg_raw(&self, a: u32) -> u32 {
        self.sub_raw(0, a)
    }

    #[inline]
    fn digitwise(&self, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let p = self.p;
        let (mut out, mut place) = (0u32, 1u32);
        while a > 0 || b > 0 {
            out += (op(a % p, b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.group_order();
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(if s >= n { s - n } else { s }) as usize]
    }

    #[inline]
    pub fn inv_raw(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.group_order();
        let l = self.log[a as usize];
        Some(self.exp[((n - l) % n) as usize])
    }

    /// `a^k` for a non-negative exponent; `0^0 = 1`.
    #[inline]
    pub fn pow_raw(&self, a: u32, k: u64) -> u32 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.group_order() as u64;
        self.exp[((self.log[a as usize] as u64 * (k % n)) % n) as usize]
    }

    /// Discrete log base α; `None` for zero.
    #[inline]
    pub fn log_raw(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    #[inline]
    pub fn exp_raw(&self, i: u32) -> u32 {
        self.exp[(i % self.group_order()) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: u32) -> Option<u32> {
        let l = self.log_raw(a)?;
        let n = self.group_order();
        Some(n / num_integer::gcd(n, l))
    }

    /// Resolves a subfield order q = p^f (f | e) to its degree f.
    pub fn subfield_degree(&self, q: u32) -> Result<u32, GaloisError> {
        match prime_power(q) {
            Some((p, f)) if p == self.p && self.e % f == 0 => Ok(f),
            _ => Err(GaloisError::NotASubfield { q, p: self.p, e: self.e }),
        }
    }

    /// Descriptor used for serialization and equality.
    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor { p: self.p, e: self.e, modulus: self.modulus.coeffs().to_vec() }
    }
}

fn default_modulus(p: u32, e: u32) -> Poly {
    PRIMITIVE_TABLE
        .iter()
        .find(|(tp, te, _)| *tp == p && *te == e)
        .map(|(_, _, c)| Poly::new(p, c.to_vec()))
        .unwrap_or_else(|| search_primitive(p, e))
}

/// First monic primitive polynomial of degree e, scanning the lower
/// coefficients as a base-p counter (constant term fastest).
pub fn search_primitive(p: u32, e: u32) -> Poly {
    let count = p.pow(e);
    for low in 1..count {
        let mut coeffs = Vec::with_capacity(e as usize + 1);
        let mut r = low;
        for _ in 0..e {
            coeffs.push(r % p);
            r /= p;
        }
        coeffs.push(1);
        let poly = Poly::new(p, coeffs);
        if build_tables(p, e, &poly).is_some() {
            return poly;
        }
    }
    unreachable!("every finite field has a primitive polynomial")
}

/// Powers of x modulo `modulus`; `None` unless x has order p^e - 1.
fn build_tables(p: u32, e: u32, modulus: &Poly) -> Option<(Vec<u32>, Vec<u32>)> {
    let order = p.pow(e);
    let n = (order - 1) as usize;
    if modulus.coeff(0) == 0 {
        return None;
    }
    // multiplication by x on digit vectors
    let top: Vec<u32> = (0..e as usize).map(|i| (p - modulus.coeff(i)) % p).collect();
    let mut digits = vec![0u32; e as usize];
    digits[0] = 1;
    let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
    let mut exp = Vec::with_capacity(n);
    let mut log = vec![u32::MAX; order as usize];
    for i in 0..n {
        let rep = encode(&digits);
        if log[rep as usize] != u32::MAX || rep == 0 {
            return None;
        }
        log[rep as usize] = i as u32;
        exp.push(rep);
        let carry = digits[e as usize - 1];
        for j in (1..e as usize).rev() {
            digits[j] = (digits[j - 1] + carry * top[j]) % p;
        }
        digits[0] = carry * top[0] % p;
    }
    if encode(&digits) != 1 {
        return None;
    }
    log[0] = 0;
    Some((exp, log))
}

/// Serializable field identity `(p, e, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
}

/// An element tied to its field.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f FieldSpec,
    rep: u32,
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})[{}]", self.field.p, self.field.e, self.rep)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep && (std::ptr::eq(self.field, other.field) || self.field == other.field)
    }
}

impl Eq for FieldElement<'_> {}

impl<'f> FieldElement<'f> {
    pub fn rep(&self) -> u32 {
        self.rep
    }

    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    fn same_field(&self, other: &FieldElement<'_>) -> Result<(), GaloisError> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(GaloisError::MixedFields)
        }
    }

    fn wrap(&self, rep: u32) -> FieldElement<'f> {
        FieldElement { field: self.field, rep }
    }

    pub fn add(&self, other: &FieldElement<'_>) -> Result<FieldElement<'f>, GaloisError> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add_raw(self.rep, other.rep)))
    }

    pub fn sub(&self, other: &FieldElement<'_>) -> Result<FieldElement<'f>, GaloisError> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.sub_raw(self.rep, other.rep)))
    }

    pub fn mul(&self, other: &FieldElement<'_>) -> Result<FieldElement<'f>, GaloisError> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul_raw(self.rep, other.rep)))
    }

    pub fn neg(&self) -> FieldElement<'f> {
        self.wrap(self.field.neg_raw(self.rep))
    }

    pub fn inv(&self) -> Result<FieldElement<'f>, GaloisError> {
        self.field.inv_raw(self.rep).map(|r| self.wrap(r)).ok_or(GaloisError::DivisionByZero)
    }

    pub fn pow(&self, k: u64) -> FieldElement<'f> {
        self.wrap(self.field.pow_raw(self.rep, k))
    }

    /// Trace onto the subfield GF(q): `Σ_{i<m} x^{q^i}` with m = [GF(p^e) : GF(q)].
    pub fn trace(&self, q: u32) -> Result<FieldElement<'f>, GaloisError> {
        let f = self.field.subfield_degree(q)?;
        let m = self.field.e / f;
        let mut acc = 0u32;
        let mut term = self.rep;
        for _ in 0..m {
            acc = self.field.add_raw(acc, term);
            term = self.field.pow_raw(term, q as u64);
        }
        Ok(self.wrap(acc))
    }

    /// Value in the prime subfield, if the element lies there.
    pub fn as_prime_field(&self) -> Option<u32> {
        (self.rep < self.field.p).then_some(self.rep)
    }
}

impl Serialize for FieldElement<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            rep: u32,
            field: FieldDescriptor,
        }
        Repr { rep: self.rep, field: self.field.descriptor() }.serialize(s)
    }
}
