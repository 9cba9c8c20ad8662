//! Exact binomial coefficients and colex ranking of small subsets.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// `C(n, k)` as an arbitrary-precision integer (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The whole row `C(n, 0), ..., C(n, n)`.
pub fn binomial_row(n: u64) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut cur = BigUint::one();
    row.push(cur.clone());
    for i in 0..n {
        cur = cur * (n - i) / (i + 1);
        row.push(cur.clone());
    }
    row
}

/// Signed variant used by the enumerator formulas.
pub fn binomial_signed(n: u64, k: u64) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// `C(n, k)` in machine arithmetic; `None` on overflow.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Table of `C(n, j)` for `n < rows`, `j <= cols`, used to rank t-subsets.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    cols: usize,
    data: Vec<u64>,
}

impl BinomialTable {
    pub fn new(rows: usize, cols: usize) -> Self {
        let mut data = vec![0u64; rows * (cols + 1)];
        for n in 0..rows {
            data[n * (cols + 1)] = 1;
            for j in 1..=cols.min(n) {
                let above = if n > 0 { data[(n - 1) * (cols + 1) + j] } else { 0 };
                let diag = if n > 0 { data[(n - 1) * (cols + 1) + j - 1] } else { 0 };
                data[n * (cols + 1) + j] = above.saturating_add(diag);
            }
        }
        BinomialTable { cols, data }
    }

    #[inline]
    pub fn get(&self, n: usize, j: usize) -> u64 {
        debug_assert!(j <= self.cols);
        self.data[n * (self.cols + 1) + j]
    }

    /// Colex rank of a strictly increasing point list.
    #[inline]
    pub fn rank(&self, subset: &[u16]) -> usize {
        subset
            .iter()
            .enumerate()
            .map(|(i, &p)| self.get(p as usize, i + 1) as usize)
            .sum()
    }

    /// Inverse of [`rank`](Self::rank) for subsets of size `t` drawn from `0..v`.
    pub fn unrank(&self, mut rank: u64, t: usize, v: usize) -> Vec<u16> {
        let mut out = vec![0u16; t];
        let mut hi = v;
        for i in (0..t).rev() {
            let mut p = hi;
            while p > 0 && self.get(p - 1, i + 1) > rank {
                p -= 1;
            }
            let p = p - 1;
            out[i] = p as u16;
            rank -= self.get(p, i + 1);
            hi = p;
        }
        out
    }
}
