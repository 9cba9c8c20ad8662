//! Arithmetic in GF(p^e) and polynomials over GF(p).
//!
//! Fields are stored as log/antilog tables over polynomial-basis integers
//! (see [`FieldSpec`]). The distinguished primitive element α is the root of
//! the field modulus; the default moduli are fixed so that α, and with it the
//! coordinate order of every cyclic code built here, is reproducible.
//!
//! Minimal polynomials are products over cyclotomic cosets, which keeps the
//! module free of any factorization machinery.

mod field;
mod poly;

pub use field::{search_primitive, FieldDescriptor, FieldElement, FieldSpec, MAX_FIELD_ORDER};
pub(crate) use field::is_prime;
pub use poly::{Poly, PolyRepr};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} is not primitive of the requested degree")]
    NotPrimitivePolynomial(String),
    #[error("GF({p}^{e}) exceeds the supported field size 2^20")]
    UnsupportedSize { p: u32, e: u32 },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("polynomials over GF({0}) and GF({1}) cannot be combined")]
    MixedBase(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("GF({q}) is not a subfield of GF({p}^{e})")]
    NotASubfield { q: u32, p: u32, e: u32 },
    #[error("minimal polynomials are only computed over the prime subfield (asked for GF({0}))")]
    NonPrimeSubfield(u32),
    #[error("representation {rep} is out of range for a field of order {order}")]
    OutOfRange { rep: u32, order: u32 },
}

/// The q-cyclotomic coset of `i` modulo `n`, in generation order `i, iq, iq^2, ...`.
pub fn cyclotomic_coset(i: u64, q: u64, n: u64) -> Vec<u64> {
    let start = i % n;
    let mut out = vec![start];
    let mut cur = start * q % n;
    while cur != start {
        out.push(cur);
        cur = cur * q % n;
    }
    out
}

/// All q-cyclotomic cosets modulo `n`, each led by its smallest member.
pub fn cyclotomic_cosets(q: u64, n: u64) -> Vec<Vec<u64>> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i as usize] {
            continue;
        }
        let coset = cyclotomic_coset(i, q, n);
        for &c in &coset {
            seen[c as usize] = true;
        }
        out.push(coset);
    }
    out
}

/// Minimal polynomial over GF(q) of `x`; q must be the characteristic.
///
/// Computed as `∏ (X - x^{q^j})` over the conjugates of `x` and then read off
/// in the prime field.
pub fn minimal_polynomial(x: &FieldElement<'_>, q: u32) -> Result<Poly, GaloisError> {
    let field = x.field();
    field.subfield_degree(q)?;
    if q != field.characteristic() {
        return Err(GaloisError::NonPrimeSubfield(q));
    }
    let p = field.characteristic();
    if x.is_zero() {
        return Ok(Poly::monomial(p, 1));
    }
    // distinct conjugates x, x^q, x^{q^2}, ...
    let mut conj = vec![x.rep()];
    let mut cur = field.pow_raw(x.rep(), q as u64);
    while cur != x.rep() {
        conj.push(cur);
        cur = field.pow_raw(cur, q as u64);
    }
    // product over the extension field, coefficients lowest first
    let mut acc = vec![1u32];
    for &root in &conj {
        let neg_root = field.neg_raw(root);
        let mut next = vec![0u32; acc.len() + 1];
        for (i, &c) in acc.iter().enumerate() {
            next[i + 1] = field.add_raw(next[i + 1], c);
            next[i] = field.add_raw(next[i], field.mul_raw(c, neg_root));
        }
        acc = next;
    }
    let coeffs = acc
        .iter()
        .map(|c| {
            assert!(*c < p, "conjugate product left the prime subfield");
            *c
        })
        .collect::<Vec<_>>();
    Ok(Poly::new(p, coeffs))
}

/// Minimal polynomial of α^i over GF(p).
pub fn minimal_polynomial_of_power(field: &FieldSpec, i: i64) -> Poly {
    minimal_polynomial(&field.alpha_pow(i), field.characteristic()).expect("prime subfield always exists")
}

/// Smallest e with n | p^e - 1, i.e. the degree of the splitting field of x^n - 1.
pub fn splitting_degree(p: u32, n: u64) -> Option<u32> {
    if n == 0 || n % p as u64 == 0 {
        return None;
    }
    let mut acc = 1 % n;
    for e in 1..=64u32 {
        acc = acc * p as u64 % n;
        if acc == 1 % n {
            return Some(e);
        }
    }
    None
}

/// Irreducible factors of x^n - 1 over GF(p) (gcd(n, p) = 1), one per
/// cyclotomic coset, ordered by coset leader.
///
/// Factor i is the minimal polynomial of β^{leader}, where β = α^{(p^e-1)/n}
/// in the default field GF(p^e).
pub fn cyclotomic_factors(p: u32, n: u64) -> Result<Vec<(Vec<u64>, Poly)>, GaloisError> {
    let e = splitting_degree(p, n).ok_or(GaloisError::UnsupportedSize { p, e: 0 })?;
    let field = FieldSpec::with_default_modulus(p, e)?;
    let step = (field.group_order() as u64 / n) as i64;
    Ok(cyclotomic_cosets(p as u64, n)
        .into_iter()
        .map(|coset| {
            let poly = minimal_polynomial_of_power(&field, step * coset[0] as i64);
            (coset, poly)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomials_in_gf8() {
        let f = FieldSpec::new(2, 3, Some(Poly::new(2, vec![1, 1, 0, 1]))).unwrap();
        assert_eq!(minimal_polynomial(&f.zero(), 2).unwrap(), Poly::monomial(2, 1));
        assert_eq!(minimal_polynomial(&f.alpha(), 2).unwrap(), Poly::new(2, vec![1, 1, 0, 1]));
        assert_eq!(minimal_polynomial(&f.alpha_pow(3), 2).unwrap(), Poly::new(2, vec![1, 0, 1, 1]));
    }

    #[test]
    fn minimal_polynomial_of_alpha3_by_hand_expansion() {
        // (x - α^3)(x - α^6)(x - α^5) expanded directly in GF(8)
        let f = FieldSpec::new(2, 3, Some(Poly::new(2, vec![1, 1, 0, 1]))).unwrap();
        let roots = [3, 6, 5].map(|i| f.alpha_pow(i).rep());
        let mut c = [1u32, 0, 0, 0];
        for r in roots {
            let mut n = [0u32; 4];
            for i in 0..3 {
                n[i + 1] ^= c[i];
                n[i] ^= f.mul_raw(c[i], r);
            }
            c = n;
        }
        assert_eq!(c, [1, 0, 1, 1]);
    }

    #[test]
    fn non_prime_subfield_is_refused() {
        let f = FieldSpec::with_default_modulus(2, 4).unwrap();
        assert_eq!(minimal_polynomial(&f.alpha(), 4), Err(GaloisError::NonPrimeSubfield(4)));
        assert!(matches!(minimal_polynomial(&f.alpha(), 8), Err(GaloisError::NotASubfield { .. })));
    }

    #[test]
    fn coset_invariance_and_degrees() {
        for (p, e) in [(2, 4), (2, 5), (2, 6), (3, 3), (3, 4), (5, 2)] {
            let f = FieldSpec::with_default_modulus(p, e).unwrap();
            let n = f.group_order() as i64;
            for i in 0..n {
                let mi = minimal_polynomial_of_power(&f, i);
                assert_eq!(mi, minimal_polynomial_of_power(&f, i * p as i64));
                let coset = cyclotomic_coset(i as u64, p as u64, n as u64);
                assert_eq!(mi.degree(), Some(coset.len()));
                assert!(mi.divides(&Poly::x_pow_minus_one(p, n as usize)).unwrap());
            }
        }
    }

    #[test]
    fn cyclotomic_factorization_multiplies_back() {
        for (p, n) in [(2u32, 7u64), (2, 15), (2, 21), (3, 13), (3, 8), (3, 26), (5, 6)] {
            let factors = cyclotomic_factors(p, n).unwrap();
            let prod = factors.iter().fold(Poly::one(p), |acc, (_, f)| acc.mul(f).unwrap());
            assert_eq!(prod, Poly::x_pow_minus_one(p, n as usize), "p={p} n={n}");
        }
    }
}
