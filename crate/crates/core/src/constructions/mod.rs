//! Concrete code families keyed by power-function exponents.

mod differential;
mod harness;
mod selector;

pub use differential::{differential_uniformity, is_apn, is_planar, DifferentialReport, MAX_DIFFERENTIAL_ORDER};
pub use harness::{conjecture_harness, HarnessReport, HarnessTest, Status, N_EQUALS_V_NOTE};
pub use selector::{Construction, Selector, Side};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{cyclic_code, CodeError, LinearCode};
use crate::galois::{cyclotomic_coset, minimal_polynomial_of_power, FieldSpec, GaloisError, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("exponent {s} lies in the cyclotomic coset of {base} modulo {n}; the generator would repeat a factor")]
    DegenerateExponent { s: u64, base: u64, n: u64 },
    #[error("{family} is undefined for m={m}{}: {reason}", h.map(|h| format!(", h={h}")).unwrap_or_default())]
    InvalidFamily { family: FamilyTag, m: u32, h: Option<u32>, reason: String },
    #[error("{what} needs {requirement}, got m={m}")]
    BadDegree { what: &'static str, requirement: &'static str, m: u32 },
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyTag {
    Gold,
    Kasami,
    Welch,
    #[serde(rename = "NIHO_1MOD4")]
    Niho1Mod4,
    #[serde(rename = "NIHO_3MOD4")]
    Niho3Mod4,
    #[serde(rename = "PLANAR_3H1")]
    Planar3h1,
    PlanarHalf,
    Raw,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 8] = [
        FamilyTag::Gold,
        FamilyTag::Kasami,
        FamilyTag::Welch,
        FamilyTag::Niho1Mod4,
        FamilyTag::Niho3Mod4,
        FamilyTag::Planar3h1,
        FamilyTag::PlanarHalf,
        FamilyTag::Raw,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FamilyTag::Gold => "GOLD",
            FamilyTag::Kasami => "KASAMI",
            FamilyTag::Welch => "WELCH",
            FamilyTag::Niho1Mod4 => "NIHO_1MOD4",
            FamilyTag::Niho3Mod4 => "NIHO_3MOD4",
            FamilyTag::Planar3h1 => "PLANAR_3H1",
            FamilyTag::PlanarHalf => "PLANAR_HALF",
            FamilyTag::Raw => "RAW",
        }
    }

    /// Field characteristic the family lives in; `None` for raw exponents.
    pub fn characteristic(self) -> Option<u32> {
        match self {
            FamilyTag::Planar3h1 | FamilyTag::PlanarHalf => Some(3),
            FamilyTag::Raw => None,
            _ => Some(2),
        }
    }
}

impl std::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for FamilyTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        FamilyTag::ALL.into_iter().find(|t| t.tag() == norm).ok_or_else(|| format!("unknown exponent family {s:?}"))
    }
}

/// An exponent family member; `h` is the family parameter, or the exponent itself for `Raw`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentFamily {
    pub family: FamilyTag,
    pub h: Option<u32>,
    pub m: u32,
}

impl ExponentFamily {
    pub fn new(family: FamilyTag, h: Option<u32>, m: u32) -> Self {
        ExponentFamily { family, h, m }
    }

    pub fn raw(s: u64, m: u32) -> Self {
        ExponentFamily { family: FamilyTag::Raw, h: Some(s as u32), m }
    }

    fn invalid(&self, reason: impl Into<String>) -> ConstructionError {
        ConstructionError::InvalidFamily { family: self.family, m: self.m, h: self.h, reason: reason.into() }
    }

    /// The exponent s, after checking the family's side conditions.
    pub fn exponent(&self) -> Result<u64, ConstructionError> {
        let m = self.m;
        let need_h = || self.h.ok_or_else(|| self.invalid("parameter h is required"));
        let coprime = |h: u32| -> Result<u32, ConstructionError> {
            if h == 0 || h.gcd(&m) != 1 {
                Err(self.invalid("needs h >= 1 with gcd(h, m) = 1"))
            } else {
                Ok(h)
            }
        };
        let small = |e: u32| -> Result<u32, ConstructionError> {
            if e > 40 {
                Err(self.invalid("exponent too large"))
            } else {
                Ok(e)
            }
        };
        let odd = || if m % 2 == 1 { Ok(()) } else { Err(self.invalid("m must be odd")) };
        Ok(match self.family {
            FamilyTag::Gold => (1u64 << small(coprime(need_h()?)?)?) + 1,
            FamilyTag::Kasami => {
                let h = small(coprime(need_h()?)?)?;
                (1u64 << (2 * h)) - (1u64 << h) + 1
            }
            FamilyTag::Welch => {
                odd()?;
                (1u64 << small((m - 1) / 2)?) + 3
            }
            FamilyTag::Niho1Mod4 => {
                if m % 4 != 1 {
                    return Err(self.invalid("needs m ≡ 1 (mod 4)"));
                }
                (1u64 << small((m - 1) / 2)?) + (1u64 << ((m - 1) / 4)) - 1
            }
            FamilyTag::Niho3Mod4 => {
                if m % 4 != 3 {
                    return Err(self.invalid("needs m ≡ 3 (mod 4)"));
                }
                (1u64 << small((m - 1) / 2)?) + (1u64 << small((3 * m - 1) / 4)?) - 1
            }
            FamilyTag::Planar3h1 => 3u64.pow(small(need_h()?)?) + 1,
            FamilyTag::PlanarHalf => (3u64.pow(small(coprime(need_h()?)?)?) + 1) / 2,
            FamilyTag::Raw => u64::from(need_h()?),
        })
    }
}

/// M_i(x) M_j(x) for β = α^step of order n, rejecting j in the coset of i.
fn two_zero_generator(field: &FieldSpec, step: u64, n: u64, i: u64, j: u64) -> Result<Poly, ConstructionError> {
    let q = field.characteristic() as u64;
    if cyclotomic_coset(i, q, n).contains(&(j % n)) {
        return Err(ConstructionError::DegenerateExponent { s: j, base: i, n });
    }
    let a = minimal_polynomial_of_power(field, (step * (i % n)) as i64);
    let b = minimal_polynomial_of_power(field, (step * (j % n)) as i64);
    Ok(a.mul(&b)?)
}

/// Binary cyclic code of length 2^m - 1 generated by M_1(x) M_s(x).
pub fn binary_two_zero_code(m: u32, s: u64) -> Result<LinearCode, ConstructionError> {
    if m < 2 {
        return Err(ConstructionError::BadDegree { what: "binary_two_zero_code", requirement: "m >= 2", m });
    }
    let field = FieldSpec::with_default_modulus(2, m)?;
    let n = field.group_order() as u64;
    if cyclotomic_coset(1, 2, n).contains(&(s % n)) {
        return Err(ConstructionError::DegenerateExponent { s, base: 1, n });
    }
    let g = two_zero_generator(&field, 1, n, 1, s)?;
    Ok(cyclic_code(2, n as usize, &g)?)
}

/// Ternary cyclic code of length n = 3^m - 1 generated by M_{n-1}(x) M_{n-s}(x).
pub fn ternary_two_zero_code(m: u32, s: u64) -> Result<LinearCode, ConstructionError> {
    if m < 2 {
        return Err(ConstructionError::BadDegree { what: "ternary_two_zero_code", requirement: "m >= 2", m });
    }
    let field = FieldSpec::with_default_modulus(3, m)?;
    let n = field.group_order() as u64;
    if cyclotomic_coset(1, 3, n).contains(&(s % n)) {
        return Err(ConstructionError::DegenerateExponent { s, base: 1, n });
    }
    let g = two_zero_generator(&field, 1, n, n - 1, (n - s % n) % n)?;
    Ok(cyclic_code(3, n as usize, &g)?)
}

fn projective_field(m: u32, what: &'static str) -> Result<(FieldSpec, u64), ConstructionError> {
    if m < 3 || m % 2 == 0 {
        return Err(ConstructionError::BadDegree { what, requirement: "odd m >= 3", m });
    }
    let field = FieldSpec::with_default_modulus(3, m)?;
    let v = field.group_order() as u64 / 2;
    Ok((field, v))
}

/// Designed distance `3^{m-1} - 1 - (3^{(m+1)/2} - 1)/2` of the projective BCH-style code.
pub fn projective_delta(m: u32) -> u64 {
    3u64.pow(m - 1) - 1 - (3u64.pow((m + 1) / 2) - 1) / 2
}

/// Length (3^m - 1)/2 ternary code with generator (x^v - 1)/h(x), h = (x - 1) lcm(M_1, ..., M_{δ-1}) over β = α^2.
pub fn projective_ternary_bch(m: u32) -> Result<LinearCode, ConstructionError> {
    let (field, v) = projective_field(m, "projective_ternary_bch")?;
    let mut h = Poly::new(3, vec![2, 1]);
    let mut seen = vec![false; v as usize];
    seen[0] = true;
    for i in 1..projective_delta(m) {
        if seen[(i % v) as usize] {
            continue;
        }
        for c in cyclotomic_coset(i, 3, v) {
            seen[c as usize] = true;
        }
        h = h.mul(&minimal_polynomial_of_power(&field, 2 * i as i64))?;
    }
    let (g, r) = Poly::x_pow_minus_one(3, v as usize).divrem(&h)?;
    debug_assert!(r.is_zero());
    Ok(cyclic_code(3, v as usize, &g)?)
}

/// Length v = (3^m - 1)/2 ternary code with generator M_{v-1}(x) M_{v-2}(x) over β = α^2.
pub fn projective_ternary_two_zero(m: u32) -> Result<LinearCode, ConstructionError> {
    let (field, v) = projective_field(m, "projective_ternary_two_zero")?;
    let g = two_zero_generator(&field, 2, v, v - 1, v - 2)?;
    Ok(cyclic_code(3, v as usize, &g)?)
}
