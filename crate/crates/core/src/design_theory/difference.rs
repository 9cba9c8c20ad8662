use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::{verify_t_design, DesignError};
use crate::combinatorics::binomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferenceFamilyReport {
    pub v: usize,
    pub k: usize,
    pub delta: Option<u64>,
    /// Entry g counts ordered pairs (x, y), x ≠ y, in a common block with x - y ≡ g. Entry 0 is always 0.
    pub histogram: Vec<u64>,
}

/// Within-block differences in Z_v.
pub fn difference_multiset(v: usize, blocks: &[Vec<u16>]) -> DifferenceFamilyReport {
    let mut histogram = vec![0u64; v];
    for b in blocks {
        for (i, &x) in b.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                if i != j {
                    histogram[(x as usize + v - y as usize % v) % v] += 1;
                }
            }
        }
    }
    let k = blocks.first().map_or(0, Vec::len);
    let delta = match histogram.get(1..) {
        Some([first, rest @ ..]) if rest.iter().all(|c| c == first) => Some(*first),
        _ => None,
    };
    DifferenceFamilyReport { v, k, delta, histogram }
}

/// `vλ·C(v-2, t-2)/C(k-2, t-2)`, the difference index of the 2-design induced by a t-design.
pub fn design_family_delta(t: usize, v: usize, k: usize, lambda: u64) -> Result<BigUint, DesignError> {
    if t < 2 {
        return Err(DesignError::StrengthBelowTwo(t));
    }
    let err = DesignError::NonIntegralDelta { t, v, k, lambda };
    if k < t || v < t {
        return Err(err);
    }
    let num = BigUint::from(v) * BigUint::from(lambda) * binomial((v - 2) as u64, (t - 2) as u64);
    let (q, r) = num.div_rem(&binomial((k - 2) as u64, (t - 2) as u64));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(err)
    }
}

/// Tests "difference family with index δ implies a 2-design with λ = δ/v" on one block set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConverseCheck {
    pub delta: Option<u64>,
    pub lambda: Option<u64>,
    /// The block set is a difference family yet not a 2-(v, k, δ/v) design.
    pub counterexample: bool,
}

pub fn converse_check(v: usize, blocks: &[Vec<u16>]) -> Result<ConverseCheck, DesignError> {
    let report = difference_multiset(v, blocks);
    let lambda = verify_t_design(v, blocks, 2)?.lambda();
    let counterexample = match report.delta {
        Some(d) => lambda.map_or(true, |l| l * v as u64 != d),
        None => false,
    };
    Ok(ConverseCheck { delta: report.delta, lambda, counterexample })
}
