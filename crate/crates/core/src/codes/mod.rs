//! Linear codes over prime fields GF(q).
//!
//! A [`LinearCode`] keeps its generator matrix in reduced row echelon form, so
//! two codes are equal exactly when their row spaces are. Cyclic codes index
//! coordinate i by x^i (equivalently by β^i for the chosen n-th root of unity
//! β), and that labeling is what the design layer sees.
//!
//! Exhaustive work (weight distributions, minimum distance, codewords of a
//! given weight) is charged against a budget measured in visited codewords.

mod construct;
mod enumerate;
mod mitm;
pub(crate) mod packed;
mod weights;

pub use construct::{cyclic_code, hamming_like_code, reed_muller};
pub use enumerate::{
    codewords_of_weight, codewords_of_weight_via, minimum_distance, supports_of_weight_raw, weight_distribution_bruteforce,
    Route, SupportSet,
};
pub use weights::WeightDistribution;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::binomial;
use crate::galois::{is_prime, GaloisError, Poly};

/// Default enumeration budget in codewords.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("codes are supported over prime fields only (got q = {0})")]
    UnsupportedField(u32),
    #[error("generator polynomial does not divide x^{v} - 1 over GF({q})")]
    GeneratorDoesNotDivide { q: u32, v: usize },
    #[error("length {v} is not coprime to q = {q}")]
    NonCoprimeLength { q: u32, v: usize },
    #[error("Reed-Muller order r = {r} is outside 0..={m}")]
    BadOrder { r: u32, m: u32 },
    #[error("symbol {symbol} is not an element of GF({q})")]
    SymbolOutOfRange { symbol: u32, q: u32 },
    #[error("generator row has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error(
        "enumeration needs about {} steps but the budget is {budget}; \
         enumerate the dual code (dimension {dual_dim}) and apply the MacWilliams transform instead",
        if *required == u128::MAX { "2^128 or more".to_string() } else { required.to_string() }
    )]
    BudgetExceeded { required: u128, budget: u64, dual_dim: usize },
    #[error("minimum distance {0} is even; no packing radius")]
    EvenMinimumDistance(usize),
    #[error("the zero code has no nonzero codeword")]
    ZeroCode,
    #[error("inconsistent weight distribution: {0}")]
    InconsistentDistribution(String),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

/// Generator polynomial of a cyclic code plus its coordinate convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicMeta {
    pub generator: Poly,
    pub convention: &'static str,
}

pub const CYCLIC_CONVENTION: &str = "coordinate i is the coefficient of x^i";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    q: u32,
    len: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
    cyclic: Option<CyclicMeta>,
}

pub(crate) fn inverse_table(q: u32) -> Vec<u8> {
    let mut inv = vec![0u8; q as usize];
    for a in 1..q {
        for b in 1..q {
            if a * b % q == 1 {
                inv[a as usize] = b as u8;
            }
        }
    }
    inv
}

/// Reduced row echelon form; zero rows are dropped. Returns rows and pivot columns.
fn rref(q: u32, mut rows: Vec<Vec<u8>>, len: usize) -> (Vec<Vec<u8>>, Vec<usize>) {
    let inv = inverse_table(q);
    let qq = q as u16;
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..len {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let s = inv[rows[r][col] as usize] as u16;
        for x in rows[r].iter_mut() {
            *x = (*x as u16 * s % qq) as u8;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let f = row[col] as u16;
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = ((*x as u16 + (qq - f) * p as u16) % qq) as u8;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

impl LinearCode {
    /// Row space of `rows` over GF(q); dependent rows are discarded, so the
    /// dimension is the rank.
    pub fn from_generator(q: u32, len: usize, rows: Vec<Vec<u32>>) -> Result<Self, CodeError> {
        if !is_prime(q) || q > 255 {
            return Err(CodeError::UnsupportedField(q));
        }
        let mut bytes = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != len {
                return Err(CodeError::LengthMismatch { expected: len, got: row.len() });
            }
            if let Some(&symbol) = row.iter().find(|&&s| s >= q) {
                return Err(CodeError::SymbolOutOfRange { symbol, q });
            }
            bytes.push(row.into_iter().map(|s| s as u8).collect());
        }
        Ok(Self::from_bytes(q, len, bytes))
    }

    pub(crate) fn from_bytes(q: u32, len: usize, rows: Vec<Vec<u8>>) -> Self {
        let (rows, pivots) = rref(q, rows, len);
        LinearCode { q, len, rows, pivots, cyclic: None }
    }

    pub fn zero(q: u32, len: usize) -> Result<Self, CodeError> {
        Self::from_generator(q, len, Vec::new())
    }

    pub(crate) fn with_cyclic(mut self, generator: Poly) -> Self {
        self.cyclic = Some(CyclicMeta { generator, convention: CYCLIC_CONVENTION });
        self
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Basis in reduced row echelon form.
    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn cyclic_meta(&self) -> Option<&CyclicMeta> {
        self.cyclic.as_ref()
    }

    /// Number of codewords, `q^k`, saturating.
    pub fn size(&self) -> u128 {
        (self.q as u128).checked_pow(self.dim() as u32).unwrap_or(u128::MAX)
    }

    /// Codeword for the information vector `info` (one symbol per basis row).
    pub fn encode(&self, info: &[u8]) -> Vec<u8> {
        let q = self.q as u16;
        let mut out = vec![0u8; self.len];
        for (&c, row) in info.iter().zip(&self.rows) {
            if c == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = ((*o as u16 + c as u16 * g as u16) % q) as u8;
            }
        }
        out
    }

    /// Information vector of a codeword: its symbols at the pivot columns.
    pub fn info_of(&self, word: &[u8]) -> Vec<u8> {
        self.pivots.iter().map(|&p| word[p]).collect()
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        word.len() == self.len && self.encode(&self.info_of(word)) == word
    }

    /// Dual code under the standard inner product.
    pub fn dual(&self) -> LinearCode {
        let q = self.q as u16;
        let mut is_pivot = vec![false; self.len];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.len)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![0u8; self.len];
                x[f] = 1;
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = ((q - row[f] as u16) % q) as u8;
                }
                x
            })
            .collect();
        LinearCode::from_bytes(self.q, self.len, rows)
    }

    /// Appends the negated coordinate sum to every codeword.
    pub fn extend(&self) -> LinearCode {
        let q = self.q;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let s: u32 = row.iter().map(|&x| x as u32).sum::<u32>() % q;
                let mut r = row.clone();
                r.push(((q - s) % q) as u8);
                r
            })
            .collect();
        LinearCode::from_bytes(self.q, self.len + 1, rows)
    }

    /// Generator rows as plain integers.
    pub fn generator_rows(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(|r| r.iter().map(|&x| x as u32).collect()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "q": self.q,
            "v": self.len,
            "dim": self.dim(),
            "generator_rows": self.generator_rows(),
            "cyclic_generator": self.cyclic.as_ref().map(|c| c.generator.coeffs().to_vec()),
        })
    }
}

impl Serialize for LinearCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// `q^k · Σ_{i≤e} C(v,i)(q-1)^i == q^v`.
pub fn sphere_packing_equality(q: u32, v: usize, k: usize, e: usize) -> bool {
    let ball: BigUint = (0..=e.min(v))
        .map(|i| binomial(v as u64, i as u64) * Pow::pow(BigUint::from(q - 1), i as u32))
        .sum();
    Pow::pow(BigUint::from(q), k as u32) * ball == Pow::pow(BigUint::from(q), v as u32)
}

/// Whether the code is perfect, together with its packing radius.
pub fn is_perfect(code: &LinearCode, budget: u64) -> Result<(bool, usize), CodeError> {
    let d = minimum_distance(code, budget)?.ok_or(CodeError::ZeroCode)?;
    if d % 2 == 0 {
        return Err(CodeError::EvenMinimumDistance(d));
    }
    let e = (d - 1) / 2;
    Ok((sphere_packing_equality(code.q, code.len, code.dim(), e), e))
}

pub(crate) fn big_pow(q: u32, k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for _ in 0..k {
        acc *= q;
    }
    acc
}
