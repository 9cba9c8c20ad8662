use serde::{Deserialize, Serialize};

use super::{
    binary_two_zero_code, projective_ternary_bch, projective_ternary_two_zero, ternary_two_zero_code, ConstructionError,
};
use crate::codes::{hamming_like_code, reed_muller, LinearCode};
use crate::spectra::{FormulaParams, SpectrumFormulaId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    ReedMuller { r: u32, m: u32 },
    /// RM(m - 2, m), the dual of RM(1, m).
    RmDual { m: u32 },
    Hamming { q: u32, m: u32 },
    BinaryTwoZero { m: u32, s: u64 },
    TernaryTwoZero { m: u32, s: u64 },
    ProjectiveBch { m: u32 },
    ProjectiveTwoZero { m: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Code,
    Dual,
}

/// A construction, optionally extended by an overall parity coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selector {
    pub construction: Construction,
    pub extended: bool,
}

impl Construction {
    pub fn m(&self) -> u32 {
        match *self {
            Construction::ReedMuller { m, .. }
            | Construction::RmDual { m }
            | Construction::Hamming { m, .. }
            | Construction::BinaryTwoZero { m, .. }
            | Construction::TernaryTwoZero { m, .. }
            | Construction::ProjectiveBch { m }
            | Construction::ProjectiveTwoZero { m } => m,
        }
    }

    pub fn build(&self) -> Result<LinearCode, ConstructionError> {
        Ok(match *self {
            Construction::ReedMuller { r, m } => reed_muller(r, m)?,
            Construction::RmDual { m } => reed_muller(m.saturating_sub(2), m)?,
            Construction::Hamming { q, m } => hamming_like_code(q, m)?,
            Construction::BinaryTwoZero { m, s } => binary_two_zero_code(m, s)?,
            Construction::TernaryTwoZero { m, s } => ternary_two_zero_code(m, s)?,
            Construction::ProjectiveBch { m } => projective_ternary_bch(m)?,
            Construction::ProjectiveTwoZero { m } => projective_ternary_two_zero(m)?,
        })
    }

    pub fn label(&self) -> String {
        match *self {
            Construction::ReedMuller { r, m } => format!("RM({r},{m})"),
            Construction::RmDual { m } => format!("RM({},{m})", m.saturating_sub(2)),
            Construction::Hamming { q, m } => format!("hamming(q={q},m={m})"),
            Construction::BinaryTwoZero { m, s } => format!("binary-two-zero(m={m},s={s})"),
            Construction::TernaryTwoZero { m, s } => format!("ternary-two-zero(m={m},s={s})"),
            Construction::ProjectiveBch { m } => format!("projective-bch(m={m})"),
            Construction::ProjectiveTwoZero { m } => format!("projective-two-zero(m={m})"),
        }
    }
}

impl Selector {
    pub fn new(construction: Construction, extended: bool) -> Self {
        Selector { construction, extended }
    }

    pub fn build(&self) -> Result<LinearCode, ConstructionError> {
        let c = self.construction.build()?;
        Ok(if self.extended { c.extend() } else { c })
    }

    pub fn label(&self) -> String {
        let base = self.construction.label();
        if self.extended {
            format!("extended {base}")
        } else {
            base
        }
    }

    /// The catalog formula describing one side of this code, if there is one.
    ///
    /// Two-zero codes are matched on the family alone; whether a given exponent
    /// actually yields the tabulated spectrum is what the cross-checks test.
    pub fn formula(&self, side: Side) -> Option<FormulaParams> {
        use SpectrumFormulaId as F;
        let m = self.construction.m();
        let id = match (self.construction, self.extended, side) {
            (Construction::RmDual { .. }, false, Side::Code) => F::RmDual,
            (Construction::ReedMuller { r, m }, false, Side::Code) if r + 2 == m => F::RmDual,
            (Construction::Hamming { q, m }, false, Side::Code) => return Some(FormulaParams::hamming(q, m)),
            (Construction::BinaryTwoZero { .. }, false, Side::Code) => F::GoldlikePrimal,
            (Construction::BinaryTwoZero { .. }, false, Side::Dual) => F::Table1Dual,
            (Construction::BinaryTwoZero { .. }, true, Side::Code) => F::GoldlikeExtended,
            (Construction::BinaryTwoZero { .. }, true, Side::Dual) => F::GoldlikeExtDual,
            (Construction::TernaryTwoZero { .. }, false, Side::Dual) => F::Table2Dual,
            (Construction::TernaryTwoZero { .. }, true, Side::Code) => F::TernaryExtended,
            (Construction::TernaryTwoZero { .. }, true, Side::Dual) => F::Table3ExtDual,
            (Construction::ProjectiveBch { .. } | Construction::ProjectiveTwoZero { .. }, false, Side::Code) => {
                F::ProjectiveTernaryPrimal
            }
            (Construction::ProjectiveBch { .. } | Construction::ProjectiveTwoZero { .. }, false, Side::Dual) => {
                F::TableGg2Dual
            }
            _ => return None,
        };
        Some(FormulaParams::new(id, m))
    }
}
