//! Closed-form weight distributions, evaluated literally as binomial sums.
//!
//! Each evaluator produces numerators, divides them exactly by the stated
//! power of q, and checks that the counts sum to q^κ for the stated κ.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::SpectraError;
use crate::codes::WeightDistribution;
use crate::combinatorics::binomial_row;
use crate::galois::is_prime;

/// Largest code length the convolution formulas will expand.
pub const MAX_CONVOLUTION_LENGTH: u64 = 1 << 13;
/// Largest length for which a table formula is expanded into a dense distribution.
pub const MAX_DENSE_LENGTH: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SpectrumFormulaId {
    /// RM(m-2, m).
    RmDual,
    /// The cyclic Hamming-like code C_(q,m).
    Hamming,
    /// Three-weight binary dual, length 2^m - 1.
    Table1Dual,
    /// Primal of a code whose dual follows `TABLE1_DUAL`.
    GoldlikePrimal,
    /// Extension of the `GOLDLIKE_PRIMAL` code.
    GoldlikeExtended,
    /// Dual of the `GOLDLIKE_EXTENDED` code.
    GoldlikeExtDual,
    /// Three-weight ternary dual, length 3^m - 1.
    Table2Dual,
    /// Dual of the extended ternary code, length 3^m.
    Table3ExtDual,
    /// Extension of the ternary code whose dual follows `TABLE2_DUAL`.
    TernaryExtended,
    /// Projective ternary three-weight dual, length (3^m - 1)/2.
    TableGg2Dual,
    /// Primal of a code whose dual follows `TABLE_GG2_DUAL`.
    ProjectiveTernaryPrimal,
}

impl SpectrumFormulaId {
    pub const ALL: [SpectrumFormulaId; 11] = [
        Self::RmDual,
        Self::Hamming,
        Self::Table1Dual,
        Self::GoldlikePrimal,
        Self::GoldlikeExtended,
        Self::GoldlikeExtDual,
        Self::Table2Dual,
        Self::Table3ExtDual,
        Self::TernaryExtended,
        Self::TableGg2Dual,
        Self::ProjectiveTernaryPrimal,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Self::RmDual => "RM_DUAL",
            Self::Hamming => "HAMMING",
            Self::Table1Dual => "TABLE1_DUAL",
            Self::GoldlikePrimal => "GOLDLIKE_PRIMAL",
            Self::GoldlikeExtended => "GOLDLIKE_EXTENDED",
            Self::GoldlikeExtDual => "GOLDLIKE_EXT_DUAL",
            Self::Table2Dual => "TABLE2_DUAL",
            Self::Table3ExtDual => "TABLE3_EXT_DUAL",
            Self::TernaryExtended => "TERNARY_EXTENDED",
            Self::TableGg2Dual => "TABLE_GG2_DUAL",
            Self::ProjectiveTernaryPrimal => "PROJECTIVE_TERNARY_PRIMAL",
        }
    }

    /// Whether the formula needs a length-sized convolution (as opposed to a table lookup).
    pub fn is_convolution(self) -> bool {
        !matches!(self, Self::Table1Dual | Self::GoldlikeExtDual | Self::Table2Dual | Self::Table3ExtDual | Self::TableGg2Dual)
    }
}

impl fmt::Display for SpectrumFormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SpectrumFormulaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Self::ALL.into_iter().find(|id| id.tag() == norm).ok_or_else(|| format!("unknown formula tag {s:?}"))
    }
}

/// A formula tag with its parameters. `q` only matters for `HAMMING`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaParams {
    pub id: SpectrumFormulaId,
    pub q: u32,
    pub m: u32,
}

impl FormulaParams {
    pub fn new(id: SpectrumFormulaId, m: u32) -> Self {
        let q = match id {
            SpectrumFormulaId::Table2Dual
            | SpectrumFormulaId::Table3ExtDual
            | SpectrumFormulaId::TernaryExtended
            | SpectrumFormulaId::TableGg2Dual
            | SpectrumFormulaId::ProjectiveTernaryPrimal => 3,
            _ => 2,
        };
        FormulaParams { id, q, m }
    }

    pub fn hamming(q: u32, m: u32) -> Self {
        FormulaParams { id: SpectrumFormulaId::Hamming, q, m }
    }

    fn out_of_domain(&self, reason: impl Into<String>) -> SpectraError {
        SpectraError::OutOfDomain { formula: self.id, params: self.describe(), reason: reason.into() }
    }

    pub fn describe(&self) -> String {
        format!("q={}, m={}", self.q, self.m)
    }

    /// Length of the code the formula describes.
    pub fn length(&self) -> BigUint {
        use SpectrumFormulaId::*;
        let m = self.m;
        match self.id {
            RmDual | GoldlikeExtended | GoldlikeExtDual => pow(2, m),
            Table1Dual | GoldlikePrimal => pow(2, m) - 1u32,
            Hamming => (pow(self.q, m) - 1u32) / (self.q - 1),
            Table2Dual => pow(3, m) - 1u32,
            Table3ExtDual | TernaryExtended => pow(3, m),
            TableGg2Dual | ProjectiveTernaryPrimal => (pow(3, m) - 1u32) / 2u32,
        }
    }

    fn check_domain(&self) -> Result<(), SpectraError> {
        self.check_stated_domain()?;
        let envelope = if self.id.is_convolution() { MAX_CONVOLUTION_LENGTH } else { MAX_DENSE_LENGTH };
        if self.length() > BigUint::from(envelope) {
            return Err(self.out_of_domain(format!("length exceeds the evaluation envelope {envelope}")));
        }
        Ok(())
    }

    /// The domain stated with the formula, without any size envelope.
    fn check_stated_domain(&self) -> Result<(), SpectraError> {
        use SpectrumFormulaId::*;
        let m = self.m;
        let expected_q = FormulaParams::new(self.id, m).q;
        if self.id != Hamming && self.q != expected_q {
            return Err(self.out_of_domain(format!("the formula is over GF({expected_q})")));
        }
        let odd = |min: u32| {
            if m % 2 == 1 && m >= min {
                Ok(())
            } else {
                Err(self.out_of_domain(format!("m must be odd and at least {min}")))
            }
        };
        match self.id {
            RmDual => {
                if m < 3 {
                    return Err(self.out_of_domain("m must be at least 3"));
                }
            }
            Hamming => {
                if !is_prime(self.q) {
                    return Err(self.out_of_domain("q must be prime"));
                }
                if m < 2 || (self.q == 2 && m < 3) {
                    return Err(self.out_of_domain("m must be at least 3 for q = 2 and at least 2 otherwise"));
                }
                if (self.q as u64 - 1).gcd(&(m as u64)) != 1 {
                    return Err(self.out_of_domain("gcd(q-1, m) must be 1"));
                }
            }
            Table1Dual | Table2Dual | Table3ExtDual | TernaryExtended | TableGg2Dual | ProjectiveTernaryPrimal => {
                odd(3)?
            }
            GoldlikePrimal | GoldlikeExtended | GoldlikeExtDual => odd(5)?,
        }
        Ok(())
    }

    /// Named constants of the formula (a, b, c or u, v), where it has any.
    pub fn constants(&self) -> Vec<(&'static str, BigInt)> {
        use SpectrumFormulaId::*;
        let m = self.m;
        match self.id {
            Table1Dual | GoldlikePrimal => {
                let [a, b, c] = table1(m).map(|(_, n)| n);
                vec![("a", a), ("b", b), ("c", c)]
            }
            GoldlikeExtended | GoldlikeExtDual => {
                let (u, v) = goldlike_uv(m);
                vec![("u", u), ("v", v)]
            }
            Table2Dual => {
                let [a, b, c] = table2(m).map(|(_, n)| n);
                vec![("a", a), ("b", b), ("c", c)]
            }
            Table3ExtDual | TernaryExtended => {
                let (u, v) = ternary_uv(m);
                vec![("u", u), ("v", v)]
            }
            TableGg2Dual | ProjectiveTernaryPrimal => {
                let [a, b, c] = table_gg2(m).map(|(_, n)| n);
                vec![("a", a), ("b", b), ("c", c)]
            }
            RmDual | Hamming => Vec::new(),
        }
    }

    /// Dimension of the code as stated alongside the formula.
    pub fn kappa(&self) -> usize {
        use SpectrumFormulaId::*;
        let m = self.m as usize;
        let v = usize::try_from(self.length()).unwrap_or(usize::MAX);
        match self.id {
            RmDual => v - m - 1,
            Hamming => v - m,
            Table1Dual | Table2Dual | TableGg2Dual => 2 * m,
            GoldlikeExtDual | Table3ExtDual => 2 * m + 1,
            GoldlikePrimal | ProjectiveTernaryPrimal => v - 2 * m,
            GoldlikeExtended | TernaryExtended => v - 1 - 2 * m,
        }
    }
}

fn pow(q: u32, e: u32) -> BigUint {
    num_traits::pow(BigUint::from(q), e as usize)
}

fn ipow(q: u32, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(q), e as usize)
}

fn idx(n: &BigInt) -> usize {
    usize::try_from(n).expect("weight index fits in usize")
}

/// Coefficients of `(1 - z)^n_a (1 + c z)^n_b`, i.e. for each k the sum
/// `Σ_{i+j=k} (-1)^i C(n_a, i) c^j C(n_b, j)`.
fn conv(n_a: usize, n_b: usize, c: u32) -> Vec<BigInt> {
    let row_a: Vec<BigInt> = binomial_row(n_a as u64)
        .into_iter()
        .enumerate()
        .map(|(i, b)| if i % 2 == 0 { BigInt::from(b) } else { -BigInt::from(b) })
        .collect();
    let mut cj = BigInt::one();
    let row_b: Vec<BigInt> = binomial_row(n_b as u64)
        .into_iter()
        .map(|b| {
            let t = BigInt::from(b) * &cj;
            cj *= c;
            t
        })
        .collect();
    let mut out = vec![BigInt::zero(); n_a + n_b + 1];
    for (i, a) in row_a.iter().enumerate() {
        for (j, b) in row_b.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn add_scaled(acc: &mut [BigInt], coeffs: &[BigInt], scale: &BigInt) {
    for (a, c) in acc.iter_mut().zip(coeffs) {
        *a += c * scale;
    }
}

fn table1(m: u32) -> [(BigInt, BigInt); 3] {
    let two = |e: u32| ipow(2, e);
    let n = two(m) - 1;
    let h = two((m - 1) / 2);
    let g = two((m - 3) / 2);
    [
        (two(m - 1) - &h, &n * (&h + 1) * &g),
        (two(m - 1), &n * (two(m - 1) + 1)),
        (two(m - 1) + &h, &n * (&h - 1) * &g),
    ]
}

fn goldlike_uv(m: u32) -> (BigInt, BigInt) {
    (ipow(2, 2 * m - 1) - ipow(2, m - 1), ipow(2, 2 * m) + ipow(2, m) - 2)
}

fn table2(m: u32) -> [(BigInt, BigInt); 3] {
    let three = |e: u32| ipow(3, e);
    let n = three(m) - 1;
    let h = three((m - 1) / 2);
    [
        (2 * three(m - 1) - &h, &n * (three(m - 1) + &h)),
        (2 * three(m - 1), &n * (three(m - 1) + 1)),
        (2 * three(m - 1) + &h, &n * (three(m - 1) - &h)),
    ]
}

fn ternary_uv(m: u32) -> (BigInt, BigInt) {
    (ipow(3, 2 * m) - ipow(3, m), (ipow(3, m) + 3) * (ipow(3, m) - 1))
}

fn table_gg2(m: u32) -> [(BigInt, BigInt); 3] {
    let three = |e: u32| ipow(3, e);
    let n = three(m) - 1;
    let h = three((m - 1) / 2);
    [
        (three(m - 1) - &h, (three(m - 1) + &h) * &n / 2),
        (three(m - 1), (three(m) - three(m - 1) + 1) * &n),
        (three(m - 1) + &h, (three(m - 1) - &h) * &n / 2),
    ]
}

/// The nonzero rows `(weight, count)` of a table formula, including weight 0,
/// without expanding to a dense distribution. Works far beyond [`MAX_DENSE_LENGTH`].
pub fn table_rows(params: &FormulaParams) -> Result<Vec<(BigUint, BigUint)>, SpectraError> {
    use SpectrumFormulaId::*;
    params.check_stated_domain()?;
    let m = params.m;
    let rows: Vec<(BigInt, BigInt)> = match params.id {
        Table1Dual => table1(m).to_vec(),
        Table2Dual => table2(m).to_vec(),
        TableGg2Dual => table_gg2(m).to_vec(),
        GoldlikeExtDual => {
            let (u, vv) = goldlike_uv(m);
            let [(w1, _), (w2, _), (w3, _)] = table1(m);
            vec![(w1, u.clone()), (w2, vv), (w3, u), (ipow(2, m), BigInt::one())]
        }
        Table3ExtDual => {
            let (u, vv) = ternary_uv(m);
            let [(w1, _), (w2, _), (w3, _)] = table2(m);
            vec![(w1, u.clone()), (w2, vv), (w3, u), (ipow(3, m), 2.into())]
        }
        _ => return Err(params.out_of_domain("not a table formula")),
    };
    let mut out = vec![(BigUint::zero(), BigUint::one())];
    for (w, c) in rows {
        match (w.to_biguint(), c.to_biguint()) {
            (Some(w), Some(c)) => out.push((w, c)),
            _ => {
                return Err(SpectraError::FormulaInconsistent { formula: params.id, reason: "negative table entry".into() })
            }
        }
    }
    Ok(out)
}

/// Evaluates the closed form and checks it against q^κ.
pub fn eval_closed_form(params: &FormulaParams) -> Result<WeightDistribution, SpectraError> {
    use SpectrumFormulaId::*;
    params.check_domain()?;
    let m = params.m;
    let q = params.q;
    let v = idx(&BigInt::from(params.length()));
    let (numerators, denom): (Vec<BigInt>, BigInt) = match params.id {
        RmDual => {
            let n = 1usize << m;
            let full = binomial_row(n as u64);
            let half = binomial_row((n / 2) as u64);
            let c = ipow(2, m + 1) - 2;
            let mut out = vec![BigInt::zero(); n + 1];
            for k in 0..=n / 4 {
                out[4 * k] = 2 * BigInt::from(full[4 * k].clone()) + &c * BigInt::from(half[2 * k].clone());
            }
            for k in 0..n / 4 {
                out[4 * k + 2] = 2 * BigInt::from(full[4 * k + 2].clone()) - &c * BigInt::from(half[2 * k + 1].clone());
            }
            (out, ipow(2, m + 1))
        }
        Hamming => {
            let top = idx(&((ipow(q, m - 1) - 1) / (q - 1)));
            let mid = idx(&ipow(q, m - 1));
            let qm1 = ipow(q, m) - 1;
            let (rows_i, rows_j) = (binomial_row(top as u64), binomial_row(mid as u64));
            let mut out = vec![BigInt::zero(); v + 1];
            let mut q1_pow = vec![BigInt::one()];
            for k in 0..v {
                let next = &q1_pow[k] * (q - 1);
                q1_pow.push(next);
            }
            let rows_j: Vec<BigInt> = rows_j.into_iter().map(BigInt::from).collect();
            for (i, ci) in rows_i.into_iter().enumerate() {
                let ci = BigInt::from(ci);
                let tail = &q1_pow[i] * &qm1;
                for (j, cj) in rows_j.iter().enumerate() {
                    let k = i + j;
                    let term = if j % 2 == 0 { &q1_pow[k] + &tail } else { &q1_pow[k] - &tail };
                    out[k] += &ci * cj * term;
                }
            }
            (out, ipow(q, m))
        }
        Table1Dual | Table2Dual | TableGg2Dual | GoldlikeExtDual | Table3ExtDual => {
            let mut out = vec![BigInt::zero(); v + 1];
            for (w, c) in table_rows(params)? {
                out[usize::try_from(&w).expect("weight index fits in usize")] += BigInt::from(c);
            }
            (out, BigInt::one())
        }
        GoldlikePrimal => {
            let mut out: Vec<BigInt> = binomial_row(v as u64).into_iter().map(BigInt::from).collect();
            for (w, count) in table1(m) {
                let w = idx(&w);
                add_scaled(&mut out, &conv(w, v - w, 1), &count);
            }
            (out, ipow(2, 2 * m))
        }
        GoldlikeExtended => {
            let (u, vv) = goldlike_uv(m);
            let n = v;
            let full = binomial_row(n as u64);
            let half = binomial_row((n / 2) as u64);
            let mut out = vec![BigInt::zero(); n + 1];
            for k in 0..=n {
                if k % 2 == 0 {
                    out[k] += 2 * BigInt::from(full[k].clone());
                    let sign = if (k / 2) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    out[k] += sign * BigInt::from(half[k / 2].clone()) * &vv;
                }
            }
            let [(w1, _), _, (w3, _)] = table1(m);
            for w in [w1, w3] {
                let w = idx(&w);
                add_scaled(&mut out, &conv(w, n - w, 1), &u);
            }
            (out, ipow(2, 2 * m + 1))
        }
        TernaryExtended => {
            let (u, vv) = ternary_uv(m);
            let n = v;
            let mut out: Vec<BigInt> = binomial_row(n as u64)
                .into_iter()
                .enumerate()
                .map(|(k, b)| {
                    let sign = if k % 2 == 0 { 2 } else { -2 };
                    BigInt::from(b) * (num_traits::pow(BigInt::from(2), k) + sign)
                })
                .collect();
            let t = idx(&ipow(3, m - 1));
            add_scaled(&mut out, &conv(2 * t, t, 2), &vv);
            let [(w1, _), _, (w3, _)] = table2(m);
            for w in [w1, w3] {
                let w = idx(&w);
                add_scaled(&mut out, &conv(w, n - w, 2), &u);
            }
            (out, ipow(3, 2 * m + 1))
        }
        ProjectiveTernaryPrimal => {
            let mut out: Vec<BigInt> = binomial_row(v as u64)
                .into_iter()
                .enumerate()
                .map(|(k, b)| BigInt::from(b) * num_traits::pow(BigInt::from(2), k))
                .collect();
            for (w, count) in table_gg2(m) {
                let w = idx(&w);
                add_scaled(&mut out, &conv(w, v - w, 2), &count);
            }
            (out, ipow(3, 2 * m))
        }
    };
    let mut counts = Vec::with_capacity(numerators.len());
    for (k, n) in numerators.into_iter().enumerate() {
        let (quot, rem) = n.div_rem(&denom);
        if !rem.is_zero() || quot.is_negative() {
            return Err(SpectraError::FormulaInconsistent {
                formula: params.id,
                reason: format!("count at weight {k} is not a nonnegative integer"),
            });
        }
        counts.push(quot.to_biguint().unwrap());
    }
    WeightDistribution::new(v, q, params.kappa(), counts)
        .map_err(|e| SpectraError::FormulaInconsistent { formula: params.id, reason: e.to_string() })
}
