use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{big_pow, CodeError};

/// Weight distribution `A_0, ..., A_v` of a code of dimension `kappa` over GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    v: usize,
    q: u32,
    kappa: usize,
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    /// Checks `A_0 = 1` and `Σ A_i = q^kappa`.
    pub fn new(v: usize, q: u32, kappa: usize, counts: Vec<BigUint>) -> Result<Self, CodeError> {
        if counts.len() != v + 1 {
            return Err(CodeError::InconsistentDistribution(format!("{} counts for length {v}", counts.len())));
        }
        if !counts[0].is_one() {
            return Err(CodeError::InconsistentDistribution(format!("A_0 = {}", counts[0])));
        }
        let total: BigUint = counts.iter().sum();
        if total != big_pow(q, kappa) {
            return Err(CodeError::InconsistentDistribution(format!("counts sum to {total}, not {q}^{kappa}")));
        }
        Ok(WeightDistribution { v, q, kappa, counts })
    }

    /// Builds from `(weight, count)` pairs; unlisted weights are zero and `A_0` defaults to 1.
    pub fn from_sparse(
        v: usize,
        q: u32,
        kappa: usize,
        pairs: impl IntoIterator<Item = (usize, BigUint)>,
    ) -> Result<Self, CodeError> {
        let mut counts = vec![BigUint::zero(); v + 1];
        counts[0] = BigUint::one();
        for (w, c) in pairs {
            if w > v {
                return Err(CodeError::InconsistentDistribution(format!("weight {w} exceeds length {v}")));
            }
            counts[w] = c;
        }
        Self::new(v, q, kappa, counts)
    }

    pub fn len(&self) -> usize {
        self.v
    }

    pub fn is_empty(&self) -> bool {
        self.v == 0
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, w: usize) -> BigUint {
        self.counts.get(w).cloned().unwrap_or_default()
    }

    /// Nonzero weights with their counts, including weight 0.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Smallest positive weight present; `None` for the zero code.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts.iter().enumerate().skip(1).find(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }

    /// Sparse rendering, e.g. `1 + 30z^8 + z^16`.
    pub fn enumerator_string(&self) -> String {
        let mut terms = Vec::new();
        for (w, c) in self.nonzero() {
            let coef = if c.is_one() && w > 0 { String::new() } else { c.to_string() };
            terms.push(match w {
                0 => coef,
                1 => format!("{coef}z"),
                _ => format!("{coef}z^{w}"),
            });
        }
        terms.join(" + ")
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.enumerator_string())
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    v: usize,
    q: u32,
    kappa: usize,
    counts: Vec<String>,
}

impl Serialize for WeightDistribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr { v: self.v, q: self.q, kappa: self.kappa, counts: self.counts.iter().map(|c| c.to_string()).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = Repr::deserialize(d)?;
        let counts = r
            .counts
            .iter()
            .map(|c| c.parse::<BigUint>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        WeightDistribution::new(r.v, r.q, r.kappa, counts).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn enumerator_rendering() {
        let wd = WeightDistribution::from_sparse(16, 2, 5, [(8, big(30)), (16, big(1))]).unwrap();
        assert_eq!(wd.to_string(), "1 + 30z^8 + z^16");
        let zero = WeightDistribution::from_sparse(4, 3, 0, []).unwrap();
        assert_eq!(zero.to_string(), "1");
        assert_eq!(zero.min_distance(), None);
        let full = WeightDistribution::from_sparse(1, 2, 1, [(1, big(1))]).unwrap();
        assert_eq!(full.to_string(), "1 + z");
    }

    #[test]
    fn consistency_checks() {
        assert!(WeightDistribution::from_sparse(7, 2, 3, [(4, big(6))]).is_err());
        assert!(WeightDistribution::new(2, 2, 1, vec![big(2), big(0), big(0)]).is_err());
    }

    #[test]
    fn json_roundtrip_uses_decimal_strings() {
        let wd = WeightDistribution::from_sparse(7, 2, 3, [(4, big(7))]).unwrap();
        let s = serde_json::to_string(&wd).unwrap();
        assert_eq!(s, r#"{"v":7,"q":2,"kappa":3,"counts":["1","0","0","0","7","0","0","0"]}"#);
        let back: WeightDistribution = serde_json::from_str(&s).unwrap();
        assert_eq!(back, wd);
    }
}
