use rayon::prelude::*;
use serde::Serialize;

use super::{check_blocks, DesignError};
use crate::combinatorics::{binomial_u64, BinomialTable};

/// Two t-subsets whose coverage differs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub most_covered: Vec<u16>,
    pub most_count: u64,
    pub least_covered: Vec<u16>,
    pub least_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Verification {
    Design { lambda: u64 },
    NotDesign(Witness),
}

impl Verification {
    pub fn lambda(&self) -> Option<u64> {
        match self {
            Verification::Design { lambda } => Some(*lambda),
            Verification::NotDesign(_) => None,
        }
    }
}

/// Largest number of t-subsets the counter array may hold.
pub const MAX_COUNTER_ENTRIES: u64 = 1 << 28;

/// Calls `f` with each t-subset of `block` (given as increasing points).
fn for_each_subset(block: &[u16], t: usize, f: &mut impl FnMut(&[u16])) {
    let k = block.len();
    let mut idx: Vec<usize> = (0..t).collect();
    let mut sub = vec![0u16; t];
    loop {
        for (s, &i) in sub.iter_mut().zip(&idx) {
            *s = block[i];
        }
        f(&sub);
        // advance to the next combination in lexicographic order
        let Some(pos) = (0..t).rev().find(|&p| idx[p] != p + k - t) else {
            return;
        };
        idx[pos] += 1;
        for p in pos + 1..t {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

/// Counts, for every t-subset of `0..v`, the blocks containing it.
///
/// Entry `r` belongs to the subset of colex rank `r`.
pub fn coverage(v: usize, blocks: &[Vec<u16>], t: usize) -> Result<Vec<u64>, DesignError> {
    let k = check_blocks(v, blocks)?;
    if let Some(k) = k {
        if t >= k {
            return Err(DesignError::StrengthNotBelowBlockSize { t, k });
        }
    }
    let entries = binomial_u64(v as u64, t as u64).filter(|&n| n <= MAX_COUNTER_ENTRIES).ok_or(DesignError::TooLarge {
        v,
        t,
    })? as usize;
    let table = BinomialTable::new(v + 1, t);
    if t == 0 {
        return Ok(vec![blocks.len() as u64]);
    }
    let counts = blocks
        .par_chunks(256)
        .fold(
            || vec![0u32; entries],
            |mut acc, chunk| {
                for b in chunk {
                    for_each_subset(b, t, &mut |s| acc[table.rank(s)] += 1);
                }
                acc
            },
        )
        .map(|c| c.into_iter().map(u64::from).collect::<Vec<u64>>())
        .reduce(
            || vec![0u64; entries],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(counts)
}

/// λ if every t-subset of `0..v` lies in the same number of blocks, otherwise a witness.
pub fn verify_t_design(v: usize, blocks: &[Vec<u16>], t: usize) -> Result<Verification, DesignError> {
    let counts = coverage(v, blocks, t)?;
    let table = BinomialTable::new(v + 1, t);
    let (mut hi, mut lo) = (0usize, 0usize);
    for (r, &c) in counts.iter().enumerate() {
        if c > counts[hi] {
            hi = r;
        }
        if c < counts[lo] {
            lo = r;
        }
    }
    if counts.is_empty() || counts[hi] == counts[lo] {
        return Ok(Verification::Design { lambda: counts.first().copied().unwrap_or(0) });
    }
    Ok(Verification::NotDesign(Witness {
        most_covered: table.unrank(hi as u64, t, v),
        most_count: counts[hi],
        least_covered: table.unrank(lo as u64, t, v),
        least_count: counts[lo],
    }))
}

/// Number of blocks containing `subset`, by a direct scan.
pub fn count_containing(blocks: &[Vec<u16>], subset: &[u16]) -> u64 {
    blocks.iter().filter(|b| subset.iter().all(|p| b.binary_search(p).is_ok())).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_in_order() {
        let mut seen = Vec::new();
        for_each_subset(&[1, 4, 6, 9], 2, &mut |s| seen.push(s.to_vec()));
        assert_eq!(seen, vec![vec![1, 4], vec![1, 6], vec![1, 9], vec![4, 6], vec![4, 9], vec![6, 9]]);
    }

    #[test]
    fn fano_plane() {
        let blocks: Vec<Vec<u16>> = (0..7u16)
            .map(|i| {
                let mut b = vec![(i + 1) % 7, (i + 2) % 7, (i + 4) % 7];
                b.sort();
                b
            })
            .collect();
        assert_eq!(verify_t_design(7, &blocks, 2).unwrap(), Verification::Design { lambda: 1 });
    }

    #[test]
    fn witness_for_two_blocks() {
        let blocks = vec![vec![0, 1, 2], vec![0, 1, 3]];
        let Verification::NotDesign(w) = verify_t_design(4, &blocks, 2).unwrap() else { panic!("not a design") };
        assert_eq!((w.most_covered.as_slice(), w.most_count), (&[0u16, 1][..], 2));
        assert_eq!((w.least_covered.as_slice(), w.least_count), (&[2u16, 3][..], 0));
        assert_eq!(count_containing(&blocks, &w.most_covered), 2);
        assert_eq!(count_containing(&blocks, &w.least_covered), 0);
    }

    #[test]
    fn input_errors() {
        assert_eq!(verify_t_design(4, &[vec![0, 1], vec![0, 1, 2]], 1), Err(DesignError::MixedBlockSizes));
        assert_eq!(verify_t_design(4, &[vec![0, 1]], 2), Err(DesignError::StrengthNotBelowBlockSize { t: 2, k: 2 }));
        assert_eq!(verify_t_design(3, &[vec![0, 3]], 1), Err(DesignError::PointOutOfRange { point: 3, v: 3 }));
    }
}
