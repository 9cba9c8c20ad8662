//! MacWilliams transform and closed-form weight distributions.
//!
//! The transform computes, for a code of length v and dimension κ over GF(q),
//!
//! ```text
//! A⊥_k = q^{-κ} Σ_i A_i K_k(i),
//! K_k(x) = Σ_j (-1)^j (q-1)^{k-j} C(x, j) C(v-x, k-j),
//! ```
//!
//! where `K_k(i)` is the coefficient of z^k in `(1-z)^i (1+(q-1)z)^{v-i}`.
//! Krawtchouk values are generated by the three-term recurrence
//!
//! ```text
//! (k+1) K_{k+1}(x) = (k + (q-1)(v-k) - q x) K_k(x) - (q-1)(v-k+1) K_{k-1}(x)
//! ```
//!
//! with `K_0 = 1`, `K_1 = (q-1)v - q x`. [`macwilliams_naive`] expands the
//! polynomials directly and serves as a cross-check.

mod catalog;
pub mod predicted;
mod report;

pub use catalog::{eval_closed_form, table_rows, FormulaParams, SpectrumFormulaId, MAX_CONVOLUTION_LENGTH, MAX_DENSE_LENGTH};
pub use report::{distribution_csv, distribution_json};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::codes::{big_pow, CodeError, WeightDistribution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("inconsistent input distribution: {0}")]
    InconsistentInput(String),
    #[error("transformed count at weight {weight} is not an integer; the input is not a weight distribution of a linear code")]
    NonIntegralResult { weight: usize },
    #[error("transformed count at weight {weight} is negative; the input is not a weight distribution of a linear code")]
    NegativeResult { weight: usize },
    #[error("{formula} is undefined for {params}: {reason}")]
    OutOfDomain { formula: SpectrumFormulaId, params: String, reason: String },
    #[error("{formula}: {reason}")]
    FormulaInconsistent { formula: SpectrumFormulaId, reason: String },
    #[error(transparent)]
    Code(#[from] CodeError),
}

fn check_input(wd: &WeightDistribution) -> Result<(), SpectraError> {
    let total: BigUint = wd.counts().iter().sum();
    if total != big_pow(wd.q(), wd.kappa()) || wd.counts().len() != wd.len() + 1 {
        return Err(SpectraError::InconsistentInput(format!("counts sum to {total}, expected {}^{}", wd.q(), wd.kappa())));
    }
    Ok(())
}

fn finish(wd: &WeightDistribution, sums: Vec<BigInt>) -> Result<WeightDistribution, SpectraError> {
    let denom = BigInt::from(big_pow(wd.q(), wd.kappa()));
    let mut counts = Vec::with_capacity(sums.len());
    for (k, s) in sums.into_iter().enumerate() {
        let (quot, rem) = s.div_rem(&denom);
        if !rem.is_zero() {
            return Err(SpectraError::NonIntegralResult { weight: k });
        }
        if quot.is_negative() {
            return Err(SpectraError::NegativeResult { weight: k });
        }
        counts.push(quot.to_biguint().unwrap());
    }
    WeightDistribution::new(wd.len(), wd.q(), wd.len() - wd.kappa(), counts)
        .map_err(|e| SpectraError::InconsistentInput(e.to_string()))
}

/// Krawtchouk values `K_0(x), ..., K_v(x)`.
pub fn krawtchouk_row(v: usize, q: u32, x: usize) -> Vec<BigInt> {
    let q1 = BigInt::from(q - 1);
    let mut row = Vec::with_capacity(v + 1);
    row.push(BigInt::one());
    if v == 0 {
        return row;
    }
    row.push(&q1 * v - BigInt::from(q) * x);
    for k in 1..v {
        let lead = BigInt::from(k) + &q1 * (v - k) - BigInt::from(q) * x;
        let next = lead * &row[k] - &q1 * (v - k + 1) * &row[k - 1];
        debug_assert!(next.is_multiple_of(&BigInt::from(k + 1)));
        row.push(next / (k + 1));
    }
    row
}

/// Dual weight distribution by Krawtchouk accumulation over the nonzero `A_i`.
pub fn macwilliams_transform(wd: &WeightDistribution) -> Result<WeightDistribution, SpectraError> {
    check_input(wd)?;
    let v = wd.len();
    let mut sums = vec![BigInt::zero(); v + 1];
    for (i, a) in wd.nonzero() {
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        for (s, kr) in sums.iter_mut().zip(krawtchouk_row(v, wd.q(), i)) {
            *s += &a * kr;
        }
    }
    finish(wd, sums)
}

/// Coefficients of `(1 - z)^i (1 + (q-1) z)^{v-i}`, by repeated multiplication.
pub fn substitution_poly(v: usize, q: u32, i: usize) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    let mul = |p: &[BigInt], c0: i64, c1: i64| {
        let mut out = vec![BigInt::zero(); p.len() + 1];
        for (n, x) in p.iter().enumerate() {
            out[n] += x * c0;
            out[n + 1] += x * c1;
        }
        out
    };
    for _ in 0..i {
        poly = mul(&poly, 1, -1);
    }
    for _ in i..v {
        poly = mul(&poly, 1, q as i64 - 1);
    }
    poly
}

/// The transform by literal polynomial substitution.
pub fn macwilliams_naive(wd: &WeightDistribution) -> Result<WeightDistribution, SpectraError> {
    check_input(wd)?;
    let v = wd.len();
    let mut sums = vec![BigInt::zero(); v + 1];
    for (i, a) in wd.nonzero() {
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        for (s, c) in sums.iter_mut().zip(substitution_poly(v, wd.q(), i)) {
            *s += &a * c;
        }
    }
    finish(wd, sums)
}

/// Sparse rendering such as `1 + 30z^8 + z^16`.
pub fn weight_enumerator_string(wd: &WeightDistribution) -> String {
    wd.enumerator_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wd(v: usize, q: u32, k: usize, pairs: &[(usize, u64)]) -> WeightDistribution {
        WeightDistribution::from_sparse(v, q, k, pairs.iter().map(|&(w, c)| (w, BigUint::from(c)))).unwrap()
    }

    #[test]
    fn simplex_to_hamming() {
        let out = macwilliams_transform(&wd(7, 2, 3, &[(4, 7)])).unwrap();
        assert_eq!(out.to_string(), "1 + 7z^3 + 7z^4 + z^7");
        assert_eq!(out.kappa(), 4);
    }

    #[test]
    fn zero_code_goes_to_full_space() {
        let out = macwilliams_transform(&wd(4, 3, 0, &[])).unwrap();
        assert_eq!(out.to_string(), "1 + 8z + 24z^2 + 32z^3 + 16z^4");
    }

    #[test]
    fn recurrence_matches_expansion() {
        for (v, q) in [(9usize, 2u32), (8, 3), (6, 5), (1, 2), (0, 3)] {
            for x in 0..=v {
                assert_eq!(krawtchouk_row(v, q, x), substitution_poly(v, q, x), "v={v} q={q} x={x}");
            }
        }
    }

    #[test]
    fn corrupted_input_is_detected() {
        assert_eq!(macwilliams_transform(&wd(3, 2, 2, &[(1, 3)])), Err(SpectraError::NonIntegralResult { weight: 1 }));
        assert_eq!(macwilliams_naive(&wd(3, 2, 2, &[(1, 3)])), Err(SpectraError::NonIntegralResult { weight: 1 }));
    }
}
