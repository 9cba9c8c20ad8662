use rayon::prelude::*;
use serde::Serialize;

use super::ConstructionError;
use crate::galois::{FieldSpec, GaloisError};

/// Largest field order for the exhaustive differential count.
pub const MAX_DIFFERENTIAL_ORDER: u32 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentialReport {
    pub p: u32,
    pub m: u32,
    pub s: u64,
    /// max over a ≠ 0 and b of |{x : (x + a)^s - x^s = b}|.
    pub uniformity: u32,
}

impl DifferentialReport {
    pub fn is_apn(&self) -> bool {
        self.uniformity == 2
    }

    pub fn is_planar(&self) -> bool {
        self.uniformity == 1
    }
}

/// Exhaustive differential uniformity of x^s over GF(p^m).
pub fn differential_uniformity(p: u32, m: u32, s: u64) -> Result<DifferentialReport, ConstructionError> {
    let field = FieldSpec::with_default_modulus(p, m)?;
    let order = field.order();
    if order > MAX_DIFFERENTIAL_ORDER {
        return Err(GaloisError::UnsupportedSize { p, e: m }.into());
    }
    let f: Vec<u32> = (0..order).map(|x| if s == 0 { 1 } else { field.pow_raw(x, s) }).collect();
    let uniformity = (1..order)
        .into_par_iter()
        .map_init(
            || vec![0u32; order as usize],
            |hist, a| {
                hist.iter_mut().for_each(|c| *c = 0);
                let mut best = 0;
                for x in 0..order {
                    let b = field.sub_raw(f[field.add_raw(x, a) as usize], f[x as usize]) as usize;
                    hist[b] += 1;
                    best = best.max(hist[b]);
                }
                best
            },
        )
        .max()
        .unwrap_or(0);
    Ok(DifferentialReport { p, m, s, uniformity })
}

pub fn is_apn(s: u64, m: u32) -> Result<DifferentialReport, ConstructionError> {
    differential_uniformity(2, m, s)
}

pub fn is_planar(s: u64, m: u32) -> Result<DifferentialReport, ConstructionError> {
    differential_uniformity(3, m, s)
}
