//! Weight-restricted enumeration by syndrome matching.
//!
//! A word x is a codeword iff `H x = 0` for a parity-check matrix H. Split
//! the coordinates into halves L and R; a weight-w codeword splits into
//! weight a on L and w - a on R with `H x_L = -H x_R`. For each a the
//! smaller half is tabulated by syndrome and the other half is streamed
//! against it. Each codeword arises from exactly one (a, x_L, x_R).

use rustc_hash::FxHashMap;

use rayon::prelude::*;

use super::packed::Packed;
use super::LinearCode;
use crate::combinatorics::binomial_u64;

fn count(n: usize, a: usize, q: u32) -> u128 {
    let c = binomial_u64(n as u64, a as u64).map(|c| c as u128).unwrap_or(u128::MAX);
    c.saturating_mul((q as u128 - 1).saturating_pow(a as u32))
}

fn weight_splits(v: usize, w: usize) -> impl Iterator<Item = (usize, usize)> {
    let h = v / 2;
    (w.saturating_sub(v - h)..=w.min(h)).map(move |a| (a, w - a))
}

/// Vectors touched while listing weight-`w` codewords.
pub(crate) fn cost(code: &LinearCode, w: usize) -> u128 {
    let v = code.len();
    let h = v / 2;
    weight_splits(v, w)
        .map(|(a, b)| count(h, a, code.q()).saturating_add(count(v - h, b, code.q())))
        .fold(0u128, |acc, c| acc.saturating_add(c))
}

struct Halves<P> {
    q: u32,
    /// `cols[c - 1][i]` is column i of H scaled by c.
    cols: Vec<Vec<P>>,
    /// `units[c - 1][i]` is c times the i-th unit vector.
    units: Vec<Vec<P>>,
    syn_zero: P,
    word_zero: P,
}

impl<P: Packed> Halves<P> {
    fn new(code: &LinearCode) -> Self {
        let q = code.q();
        let v = code.len();
        let h = code.dual();
        let cols: Vec<P> = (0..v)
            .map(|i| P::pack(q, &h.basis().iter().map(|row| row[i]).collect::<Vec<u8>>()))
            .collect();
        let units: Vec<P> = (0..v)
            .map(|i| {
                let mut e = vec![0u8; v];
                e[i] = 1;
                P::pack(q, &e)
            })
            .collect();
        let scale = |xs: &[P]| (1..q as u8).map(|c| xs.iter().map(|x| x.scaled(c)).collect()).collect();
        let syn_zero = P::pack(q, &vec![0u8; h.dim()]);
        let word_zero = P::pack(q, &vec![0u8; v]);
        Halves { q, cols: scale(&cols), units: scale(&units), syn_zero, word_zero }
    }

    /// Calls `f(syndrome, word)` for every word of weight `wt` supported on `start..end`
    /// whose first nonzero position is `first` (any position when `first` is `None`).
    fn walk(&self, start: usize, end: usize, wt: usize, first: Option<usize>, f: &mut impl FnMut(&P, &P)) {
        let mut stack = vec![(self.syn_zero.clone(), self.word_zero.clone()); wt + 1];
        if wt == 0 {
            f(&stack[0].0, &stack[0].1);
        } else if end >= start + wt {
            match first {
                Some(i) => self.step(&mut stack, 0, i, i + 1, end, f),
                None => (start..=end - wt).for_each(|i| self.step(&mut stack, 0, i, i + 1, end, f)),
            }
        }
    }

    /// Set position `i` at depth `d` to each nonzero scalar, then recurse on `next..end`.
    fn step(&self, stack: &mut [(P, P)], d: usize, i: usize, next: usize, end: usize, f: &mut impl FnMut(&P, &P)) {
        let left = stack.len() - 2 - d;
        for c in 0..self.q as usize - 1 {
            let (lo, hi) = stack.split_at_mut(d + 1);
            let (s, x) = &mut hi[0];
            s.clone_from(&lo[d].0);
            s.add_assign(&self.cols[c][i]);
            x.clone_from(&lo[d].1);
            x.add_assign(&self.units[c][i]);
            if left == 0 {
                f(s, x);
            } else if end >= next + left {
                for j in next..=end - left {
                    self.step(stack, d + 1, j, j + 1, end, f);
                }
            }
        }
    }

    /// Same as [`walk`](Self::walk), fanned out over the first chosen position.
    fn par_walk<T: Send>(
        &self,
        start: usize,
        end: usize,
        wt: usize,
        f: &(impl Fn(&P, &P, &mut Vec<T>) + Sync),
    ) -> Vec<T> {
        if wt == 0 || end < start + wt {
            let mut out = Vec::new();
            self.walk(start, end, wt, None, &mut |s, x| f(s, x, &mut out));
            return out;
        }
        let chunks: Vec<Vec<T>> = (start..=end - wt)
            .into_par_iter()
            .map(|i| {
                let mut out = Vec::new();
                self.walk(start, end, wt, Some(i), &mut |s, x| f(s, x, &mut out));
                out
            })
            .collect();
        chunks.into_iter().flatten().collect()
    }
}

/// `map` applied to every codeword of weight exactly `w` (w ≥ 1).
pub(crate) fn weight_exactly<P: Packed, T: Send>(code: &LinearCode, w: usize, map: &(impl Fn(&P) -> T + Sync)) -> Vec<T> {
    let q = code.q();
    let v = code.len();
    let h = v / 2;
    let halves = Halves::<P>::new(code);
    let neg = (q - 1) as u8;
    let mut out = Vec::new();
    for (a, b) in weight_splits(v, w) {
        // tabulate the smaller side
        let left_small = count(h, a, q) <= count(v - h, b, q);
        let (table_range, table_wt, stream_range, stream_wt) =
            if left_small { ((0, h), a, (h, v), b) } else { ((h, v), b, (0, h), a) };
        // keyed by the negated syndrome so that streamed syndromes look up as-is
        let mut table: FxHashMap<P, Vec<P>> = FxHashMap::default();
        halves.walk(table_range.0, table_range.1, table_wt, None, &mut |s, x| {
            table.entry(s.scaled(neg)).or_default().push(x.clone());
        });
        let found = halves.par_walk(stream_range.0, stream_range.1, stream_wt, &|s, x, acc: &mut Vec<T>| {
            if let Some(partners) = table.get(s) {
                for p in partners {
                    acc.push(map(&p.add(x)));
                }
            }
        });
        out.extend(found);
    }
    out
}
