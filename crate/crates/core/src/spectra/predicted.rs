//! Closed-form design indices and individual counts for specific weights.
//!
//! Every function returns `None` when its formula is not an integer for the
//! given parameters or the weight is not covered.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

fn p2(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(2), e as usize)
}

fn p3(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(3), e as usize)
}

fn exact(num: BigInt, den: i64) -> Option<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    r.is_zero().then_some(q)
}

/// `2·2^{3h} - 25·2^{2h} + 123·2^h - 190`, h = m - 1.
fn cubic(m: u32) -> BigInt {
    let h = m - 1;
    2 * p2(3 * h) - 25 * p2(2 * h) + 123 * p2(h) - 190
}

/// `A_3 = (q^m - 1)(q^m - q)/6` for the Hamming-like code.
pub fn hamming_a3(q: u32, m: u32) -> Option<BigInt> {
    let qm = num_traits::pow(BigInt::from(q), m as usize);
    exact((&qm - 1) * (&qm - q), 6)
}

/// λ of the 2-design held by the weight-k codewords of the binary Hamming code, 3 ≤ k ≤ 7.
pub fn binary_hamming_lambda(m: u32, k: usize) -> Option<BigInt> {
    if m < 3 {
        return None;
    }
    let h = p2(m - 1);
    match k {
        3 => Some(BigInt::from(1)),
        4 => Some(&h - 2),
        5 => exact(2 * (&h - 2) * (&h - 4), 3),
        6 => exact((&h - 2) * (&h - 3) * (&h - 4), 3),
        7 => exact((&h - 2) * (&h - 3) * (4 * p2(2 * (m - 1)) - 30 * &h + 71), 30),
        _ => None,
    }
}

/// λ = (q-1) q^{m-2} of the 2-design held by the weight-q^{m-1} dual codewords.
pub fn hamming_dual_lambda(q: u32, m: u32) -> Option<BigInt> {
    if m < 2 {
        return None;
    }
    Some(BigInt::from(q - 1) * num_traits::pow(BigInt::from(q), (m - 2) as usize))
}

/// `A_5 = (4·2^{3m-5} - 22·2^{2m-4} + 26·2^{m-3} - 2)/15` for the two-zero binary code.
pub fn goldlike_a5(m: u32) -> Option<BigInt> {
    if m < 5 {
        return None;
    }
    exact(4 * p2(3 * m - 5) - 22 * p2(2 * m - 4) + 26 * p2(m - 3) - 2, 15)
}

/// λ of the 2-design at primal weight k ∈ {5, 6, 7, 8} of the two-zero binary code.
pub fn goldlike_lambda(m: u32, k: usize) -> Option<BigInt> {
    if m < 5 {
        return None;
    }
    match k {
        5 => exact(p2(m - 1) - 4, 3),
        6 => exact((p2(m - 2) - 2) * (p2(m - 1) - 3), 3),
        7 => exact(cubic(m), 30),
        8 => exact((p2(m - 2) - 2) * cubic(m), 45),
        _ => None,
    }
}

/// λ of the 2-designs held by the three dual weights of the two-zero binary code.
pub fn goldlike_dual_lambda(m: u32, k: usize) -> Option<BigInt> {
    if m < 5 || m % 2 == 0 {
        return None;
    }
    let r = p2((m - 1) / 2);
    let low = p2(m - 1) - &r;
    let high = p2(m - 1) + &r;
    if BigInt::from(k) == low {
        Some(p2(m - 3) * (low - 1))
    } else if BigInt::from(k) == high {
        Some(p2(m - 3) * (high - 1))
    } else if BigInt::from(k) == p2(m - 1) {
        Some(p2(m - 2) * (p2(m - 1) + 1))
    } else {
        None
    }
}

/// λ of the 3-design at weight k ∈ {6, 8, 10} of the extended two-zero binary code.
pub fn goldlike_ext_lambda(m: u32, k: usize) -> Option<BigInt> {
    if m < 5 {
        return None;
    }
    let h = m - 1;
    match k {
        6 => exact(p2(h) - 4, 3),
        8 => exact(cubic(m), 30),
        10 => exact((p2(h) - 4) * (2 * p2(4 * h) - 34 * p2(3 * h) + 235 * p2(2 * h) - 931 * p2(h) + 1358), 315),
        _ => None,
    }
}

/// λ of the 3-designs held by the dual of the extended two-zero binary code.
pub fn goldlike_ext_dual_lambda(m: u32, k: usize) -> Option<BigInt> {
    if m < 5 || m % 2 == 0 {
        return None;
    }
    let r = p2((m - 1) / 2);
    let s = p2((m - 3) / 2);
    if BigInt::from(k) == p2(m - 1) - &r {
        Some((p2(m - 3) - &s) * (p2(m - 1) - &r - 1))
    } else if BigInt::from(k) == p2(m - 1) + &r {
        Some((p2(m - 3) + &s) * (p2(m - 1) + &r - 1))
    } else if BigInt::from(k) == p2(m - 1) {
        Some((p2(m - 1) + 1) * (p2(m - 2) - 1))
    } else {
        None
    }
}

/// `Ā_5 = (3^{3m-1} - 4·3^{2m-1} + 3^m)/4` for the extended ternary code.
pub fn ternary_ext_a5(m: u32) -> Option<BigInt> {
    if m < 3 {
        return None;
    }
    exact(p3(3 * m - 1) - 4 * p3(2 * m - 1) + p3(m), 4)
}

/// λ = 5(3^{m-1} - 1)/2 of the weight-5 design of the extended ternary code.
pub fn ternary_ext_lambda5(m: u32) -> Option<BigInt> {
    if m < 3 {
        return None;
    }
    exact(5 * (p3(m - 1) - 1), 2)
}

/// λ = w(w-1)/2, w = 2·3^{m-1} - 3^{(m-1)/2}, at the minimum weight of the extended ternary dual.
pub fn ternary_ext_dual_min_lambda(m: u32) -> Option<BigInt> {
    if m < 3 || m % 2 == 0 {
        return None;
    }
    let w = 2 * p3(m - 1) - p3((m - 1) / 2);
    exact(&w * (&w - 1), 2)
}
