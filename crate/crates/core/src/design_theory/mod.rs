//! Block sets, t-design verification and difference families over Z_v.

mod difference;
mod verify;

pub use difference::{converse_check, design_family_delta, difference_multiset, ConverseCheck, DifferenceFamilyReport};
pub use verify::{count_containing, coverage, verify_t_design, Verification, Witness, MAX_COUNTER_ENTRIES};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{supports_of_weight_raw, CodeError, LinearCode};
use crate::combinatorics::binomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesignError {
    #[error("blocks have different sizes")]
    MixedBlockSizes,
    #[error("strength t = {t} is not below the block size k = {k}")]
    StrengthNotBelowBlockSize { t: usize, k: usize },
    #[error("point {point} is outside 0..{v}")]
    PointOutOfRange { point: u16, v: usize },
    #[error("block {0} is not a strictly increasing point list")]
    UnsortedBlock(usize),
    #[error("block {0} occurs more than once")]
    RepeatedBlock(usize),
    #[error("C({v}, {t}) t-subsets exceed the counter limit")]
    TooLarge { v: usize, t: usize },
    #[error("b·C(k,t)/C(v,t) = {b}·C({k},{t})/C({v},{t}) is not an integer")]
    NonIntegralLambda { v: usize, k: usize, t: usize, b: u64 },
    #[error("the difference index for t={t}, v={v}, k={k}, λ={lambda} is not an integer")]
    NonIntegralDelta { t: usize, v: usize, k: usize, lambda: u64 },
    #[error("difference families need t >= 2, got {0}")]
    StrengthBelowTwo(usize),
    #[error("parameters must satisfy v > k > t, got v={v}, k={k}, t={t}")]
    ParameterOrder { v: usize, k: usize, t: usize },
    #[error("counting identity fails: b={b}, λ={lambda}")]
    CountingIdentity { b: usize, lambda: u64 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Checks that every block is a strictly increasing list in `0..v` and all have one size.
///
/// Returns that size, or `None` for an empty list.
pub(crate) fn check_blocks(v: usize, blocks: &[Vec<u16>]) -> Result<Option<usize>, DesignError> {
    let k = blocks.first().map(Vec::len);
    for (i, b) in blocks.iter().enumerate() {
        if Some(b.len()) != k {
            return Err(DesignError::MixedBlockSizes);
        }
        if let Some(&p) = b.iter().find(|&&p| p as usize >= v) {
            return Err(DesignError::PointOutOfRange { point: p, v });
        }
        if b.windows(2).any(|w| w[0] >= w[1]) {
            return Err(DesignError::UnsortedBlock(i));
        }
    }
    Ok(k)
}

/// Distinct supports of the weight-`w` codewords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Supports {
    pub v: usize,
    pub weight: usize,
    pub blocks: Vec<Vec<u16>>,
    /// A_w.
    pub codewords: u64,
    /// Every support carries exactly q - 1 codewords (its scalar multiples).
    pub scalar_classes: bool,
}

pub fn supports_of_weight(code: &LinearCode, w: usize, budget: u64) -> Result<Supports, DesignError> {
    let raw = supports_of_weight_raw(code, w, budget)?;
    let per = if w == 0 { 1 } else { u64::from(code.q() - 1) };
    let codewords = raw.codeword_count();
    let scalar_classes = raw.supports.iter().all(|(_, c)| *c == per);
    Ok(Supports {
        v: raw.v,
        weight: w,
        blocks: raw.supports.into_iter().map(|(s, _)| s).collect(),
        codewords,
        scalar_classes,
    })
}

/// `b·C(k,t)/C(v,t)`.
pub fn lambda_from_block_count(v: usize, k: usize, t: usize, b: u64) -> Result<BigUint, DesignError> {
    let num = BigUint::from(b) * binomial(k as u64, t as u64);
    let den = binomial(v as u64, t as u64);
    let err = DesignError::NonIntegralLambda { v, k, t, b };
    if den.is_zero() {
        return Err(err);
    }
    let (q, r) = num.div_rem(&den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(err)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Design {
    pub v: usize,
    pub k: usize,
    pub t: usize,
    pub lambda: u64,
    pub blocks: Vec<Vec<u16>>,
}

impl Design {
    /// Validates the structural invariants; coverage itself is not re-verified.
    pub fn new(v: usize, k: usize, t: usize, lambda: u64, mut blocks: Vec<Vec<u16>>) -> Result<Self, DesignError> {
        if !(v > k && k > t) {
            return Err(DesignError::ParameterOrder { v, k, t });
        }
        if check_blocks(v, &blocks)?.is_some_and(|bk| bk != k) {
            return Err(DesignError::MixedBlockSizes);
        }
        blocks.sort();
        if let Some(i) = blocks.windows(2).position(|w| w[0] == w[1]) {
            return Err(DesignError::RepeatedBlock(i + 1));
        }
        let b = blocks.len();
        if BigUint::from(b) * binomial(k as u64, t as u64) != BigUint::from(lambda) * binomial(v as u64, t as u64) {
            return Err(DesignError::CountingIdentity { b, lambda });
        }
        Ok(Design { v, k, t, lambda, blocks })
    }

    /// Runs the verifier and builds the design, or returns the witness.
    pub fn verified(v: usize, t: usize, blocks: Vec<Vec<u16>>) -> Result<Result<Self, Witness>, DesignError> {
        let k = check_blocks(v, &blocks)?.unwrap_or(0);
        match verify_t_design(v, &blocks, t)? {
            Verification::Design { lambda } => Design::new(v, k, t, lambda, blocks).map(Ok),
            Verification::NotDesign(w) => Ok(Err(w)),
        }
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("design serializes")
    }
}

pub fn is_steiner(design: &Design) -> bool {
    design.t >= 2 && design.lambda == 1
}

/// One block per line, points separated by single spaces.
pub fn write_blocks(blocks: &[Vec<u16>]) -> String {
    let mut out = String::new();
    for b in blocks {
        let line: Vec<String> = b.iter().map(u16::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Inverse of [`write_blocks`]; blank lines and `#` comments are skipped, points are sorted.
pub fn parse_blocks(text: &str) -> Result<Vec<Vec<u16>>, DesignError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut b = line
            .split_whitespace()
            .map(|tok| tok.parse::<u16>().map_err(|e| DesignError::Parse { line: n + 1, msg: format!("{tok:?}: {e}") }))
            .collect::<Result<Vec<u16>, _>>()?;
        b.sort_unstable();
        if b.windows(2).any(|w| w[0] == w[1]) {
            return Err(DesignError::Parse { line: n + 1, msg: "repeated point".into() });
        }
        out.push(b);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{hamming_like_code, reed_muller, DEFAULT_BUDGET};

    #[test]
    fn hamming_supports() {
        let h = hamming_like_code(2, 3).unwrap();
        let s = supports_of_weight(&h, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!((s.blocks.len(), s.codewords), (7, 7));
        assert_eq!(verify_t_design(7, &s.blocks, 2).unwrap().lambda(), Some(1));

        let h3 = hamming_like_code(3, 3).unwrap();
        let s = supports_of_weight(&h3, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!((s.blocks.len(), s.codewords), (52, 104));
        assert!(s.scalar_classes);

        let z = supports_of_weight(&h, 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(z.blocks, vec![Vec::<u16>::new()]);
    }

    #[test]
    fn steiner_from_reed_muller() {
        let rm = reed_muller(2, 4).unwrap();
        let s = supports_of_weight(&rm, 4, DEFAULT_BUDGET).unwrap();
        let d = Design::verified(16, 3, s.blocks).unwrap().unwrap();
        assert_eq!((d.b(), d.lambda), (140, 1));
        assert!(is_steiner(&d));
    }

    #[test]
    fn lambda_arithmetic() {
        assert_eq!(lambda_from_block_count(31, 12, 2, 310).unwrap(), BigUint::from(44u32));
        assert_eq!(lambda_from_block_count(16, 4, 3, 140).unwrap(), BigUint::from(1u32));
        assert_eq!(lambda_from_block_count(32, 6, 3, 992).unwrap(), BigUint::from(4u32));
        assert!(matches!(lambda_from_block_count(7, 3, 2, 5), Err(DesignError::NonIntegralLambda { .. })));
    }

    #[test]
    fn design_invariants() {
        let fano: Vec<Vec<u16>> = vec![vec![0, 1, 3], vec![1, 2, 4], vec![2, 3, 5], vec![3, 4, 6], vec![0, 4, 5], vec![1, 5, 6], vec![0, 2, 6]];
        let d = Design::new(7, 3, 2, 1, fano.clone()).unwrap();
        assert!(is_steiner(&d));
        let one = Design::new(7, 3, 1, 3, fano.clone()).unwrap();
        assert!(!is_steiner(&one));
        let mut dup = fano.clone();
        dup.push(vec![0, 1, 3]);
        assert!(matches!(Design::new(7, 3, 2, 1, dup), Err(DesignError::RepeatedBlock(_))));
        assert!(matches!(Design::new(3, 3, 2, 1, vec![]), Err(DesignError::ParameterOrder { .. })));
        assert!(matches!(Design::new(7, 3, 2, 2, fano), Err(DesignError::CountingIdentity { .. })));
    }

    #[test]
    fn block_text_roundtrip() {
        let blocks = vec![vec![0, 1, 3], vec![2, 5, 6]];
        let text = write_blocks(&blocks);
        assert_eq!(text, "0 1 3\n2 5 6\n");
        assert_eq!(parse_blocks(&format!("# header\n{text}\n")).unwrap(), blocks);
        assert!(matches!(parse_blocks("1 x"), Err(DesignError::Parse { line: 1, .. })));
        assert!(matches!(parse_blocks("1 1"), Err(DesignError::Parse { .. })));
    }

    #[test]
    fn json_shape() {
        let d = Design::new(4, 3, 2, 2, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap();
        assert_eq!(d.to_json().to_string(), r#"{"v":4,"k":3,"t":2,"lambda":2,"blocks":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]}"#);
    }
}
