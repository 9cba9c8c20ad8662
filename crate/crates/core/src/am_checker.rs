//! Assmus–Mattson sufficient conditions and the divisibility conditions for t-designs.
//!
//! The checker works on weight distributions only, so it applies equally to
//! enumerated codes and to closed-form spectra far beyond enumeration range.
//! A report with `holds == false` means the theorem is silent, not that no
//! design exists.
//!
//! The full-support weight `v` is never listed as a design weight: a single
//! block equal to the point set falls outside the `v > k` convention.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::codes::WeightDistribution;
use crate::combinatorics::binomial;
use crate::spectra::macwilliams_transform;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AmError {
    #[error("the two distributions are not MacWilliams duals of each other")]
    InconsistentPair,
    #[error("strength t = {t} must satisfy 1 <= t < d = {d}")]
    StrengthTooLarge { t: usize, d: usize },
    #[error("a zero code has no minimum distance")]
    ZeroCode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AMReport {
    pub q: u32,
    pub v: usize,
    pub t: usize,
    pub d: usize,
    pub d_perp: Option<usize>,
    /// Nonzero dual weights in `(0, v - t]`.
    pub s: usize,
    pub w: usize,
    pub w_perp: usize,
    pub holds: bool,
    pub primal_design_weights: Vec<usize>,
    pub dual_design_weights: Vec<usize>,
}

/// Largest `w ≤ v` with `w - ⌊(w + q - 2)/(q - 1)⌋ < d`; equals `v` for q = 2.
pub fn nonbinary_cutoff(v: usize, q: u32, d: usize) -> usize {
    let q1 = q as usize - 1;
    (0..=v).rev().find(|&w| w - (w + q1 - 1) / q1 < d).unwrap_or(0)
}

/// Applies the binary theorem for q = 2 and the nonbinary one otherwise.
pub fn am_check(primal: &WeightDistribution, dual: &WeightDistribution, t: usize) -> Result<AMReport, AmError> {
    if primal.len() != dual.len() || primal.q() != dual.q() {
        return Err(AmError::InconsistentPair);
    }
    match macwilliams_transform(primal) {
        Ok(ref d) if d == dual => {}
        _ => return Err(AmError::InconsistentPair),
    }
    let (q, v) = (primal.q(), primal.len());
    let d = primal.min_distance().ok_or(AmError::ZeroCode)?;
    if t == 0 || t >= d {
        return Err(AmError::StrengthTooLarge { t, d });
    }
    let d_perp = dual.min_distance();
    let s = (1..=v - t).filter(|&i| !dual.count(i).is_zero()).count();
    let (w, w_perp) = if q == 2 {
        (v, v)
    } else {
        (nonbinary_cutoff(v, q, d), d_perp.map_or(v, |dp| nonbinary_cutoff(v, q, dp)))
    };
    let holds = s + t <= d;
    let (mut primal_design_weights, mut dual_design_weights) = (Vec::new(), Vec::new());
    if holds {
        let full = v.saturating_sub(1);
        primal_design_weights = (d..=w.min(full)).filter(|&i| !primal.count(i).is_zero()).collect();
        if let Some(dp) = d_perp {
            let top = if q == 2 { full } else { w_perp.min(v - t) };
            dual_design_weights = (dp..=top).filter(|&i| !dual.count(i).is_zero()).collect();
        }
    }
    Ok(AMReport { q, v, t, d, d_perp, s, w, w_perp, holds, primal_design_weights, dual_design_weights })
}

/// Result of the necessary divisibility conditions `C(k-i, t-i) | λ C(v-i, t-i)`, 0 ≤ i ≤ t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Divisibility {
    pub holds: bool,
    pub first_failing_i: Option<usize>,
}

pub fn divisibility_check(t: usize, v: usize, k: usize, lambda: &BigUint) -> Divisibility {
    if t > k || k > v {
        return Divisibility { holds: false, first_failing_i: Some(0) };
    }
    for i in 0..=t {
        let den = binomial((k - i) as u64, (t - i) as u64);
        let num = lambda * binomial((v - i) as u64, (t - i) as u64);
        if !num.is_multiple_of(&den) {
            return Divisibility { holds: false, first_failing_i: Some(i) };
        }
    }
    Divisibility { holds: true, first_failing_i: None }
}
