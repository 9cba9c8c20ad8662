//! Packed codeword representations used by the enumeration kernels.
//!
//! * binary: one bit per coordinate, weight is a popcount;
//! * ternary: two bit planes, `one` marks symbols equal to 1 and `two`
//!   marks symbols equal to 2 (so each coordinate costs two bits). Addition
//!   uses the branch-free formula
//!   `t = (a1 | b2) ^ (a2 | b1); s1 = (a2 | b2) ^ t; s2 = (a1 | b1) ^ t`,
//!   negation swaps the planes and weight is `popcount(one | two)`;
//! * anything else falls back to a byte per symbol.
//!
//! The word type is generic over [`PrimInt`], so the same kernel serves
//! `u64` and `u128` codewords.

use std::hash::Hash;

use num_traits::PrimInt;

pub(crate) trait Packed: Clone + Send + Sync + Eq + Hash {
    type Support: Ord + Hash + Clone + Send + Sync;

    fn pack(q: u32, symbols: &[u8]) -> Self;
    fn add_assign(&mut self, other: &Self);
    /// Multiply by a nonzero scalar of GF(q).
    fn scaled(&self, c: u8) -> Self;
    fn weight(&self) -> u32;
    fn symbol(&self, i: usize) -> u8;
    fn support(&self) -> Self::Support;
    fn support_points(s: &Self::Support, out: &mut Vec<u16>);

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    fn symbols(&self, len: usize) -> Vec<u8> {
        (0..len).map(|i| self.symbol(i)).collect()
    }
}

pub(crate) trait Word: PrimInt + Hash + Send + Sync + 'static {}
impl<W: PrimInt + Hash + Send + Sync + 'static> Word for W {}

#[inline]
fn bit<W: Word>(i: usize) -> W {
    W::one() << i
}

#[inline]
fn has_bit<W: Word>(w: W, i: usize) -> bool {
    (w >> i) & W::one() == W::one()
}

fn mask_points<W: Word>(mut w: W, out: &mut Vec<u16>) {
    out.clear();
    while w != W::zero() {
        let i = w.trailing_zeros();
        out.push(i as u16);
        w = w & (w - W::one());
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Binary<W>(pub W);

impl<W: Word> Packed for Binary<W> {
    type Support = W;

    fn pack(_q: u32, symbols: &[u8]) -> Self {
        let mut w = W::zero();
        for (i, &s) in symbols.iter().enumerate() {
            if s & 1 == 1 {
                w = w | bit(i);
            }
        }
        Binary(w)
    }

    #[inline]
    fn add_assign(&mut self, other: &Self) {
        self.0 = self.0 ^ other.0;
    }

    #[inline]
    fn scaled(&self, _c: u8) -> Self {
        *self
    }

    #[inline]
    fn weight(&self) -> u32 {
        self.0.count_ones()
    }

    fn symbol(&self, i: usize) -> u8 {
        has_bit(self.0, i) as u8
    }

    #[inline]
    fn support(&self) -> W {
        self.0
    }

    fn support_points(s: &W, out: &mut Vec<u16>) {
        mask_points(*s, out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Ternary<W> {
    one: W,
    two: W,
}

impl<W: Word> Packed for Ternary<W> {
    type Support = W;

    fn pack(_q: u32, symbols: &[u8]) -> Self {
        let (mut one, mut two) = (W::zero(), W::zero());
        for (i, &s) in symbols.iter().enumerate() {
            match s % 3 {
                1 => one = one | bit(i),
                2 => two = two | bit(i),
                _ => {}
            }
        }
        Ternary { one, two }
    }

    #[inline]
    fn add_assign(&mut self, other: &Self) {
        let t = (self.one | other.two) ^ (self.two | other.one);
        let one = (self.two | other.two) ^ t;
        let two = (self.one | other.one) ^ t;
        self.one = one;
        self.two = two;
    }

    #[inline]
    fn scaled(&self, c: u8) -> Self {
        if c % 3 == 2 {
            Ternary { one: self.two, two: self.one }
        } else {
            *self
        }
    }

    #[inline]
    fn weight(&self) -> u32 {
        (self.one | self.two).count_ones()
    }

    fn symbol(&self, i: usize) -> u8 {
        if has_bit(self.one, i) {
            1
        } else if has_bit(self.two, i) {
            2
        } else {
            0
        }
    }

    #[inline]
    fn support(&self) -> W {
        self.one | self.two
    }

    fn support_points(s: &W, out: &mut Vec<u16>) {
        mask_points(*s, out)
    }
}

/// One byte per symbol, any prime q below 256.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Symbols {
    q: u8,
    s: Vec<u8>,
}

impl Packed for Symbols {
    type Support = Vec<u16>;

    fn pack(q: u32, symbols: &[u8]) -> Self {
        Symbols { q: q as u8, s: symbols.iter().map(|&x| x % q as u8).collect() }
    }

    fn add_assign(&mut self, other: &Self) {
        let q = self.q as u16;
        for (a, &b) in self.s.iter_mut().zip(&other.s) {
            let t = *a as u16 + b as u16;
            *a = (if t >= q { t - q } else { t }) as u8;
        }
    }

    fn scaled(&self, c: u8) -> Self {
        let q = self.q as u16;
        Symbols { q: self.q, s: self.s.iter().map(|&a| ((a as u16 * c as u16) % q) as u8).collect() }
    }

    fn weight(&self) -> u32 {
        self.s.iter().filter(|&&a| a != 0).count() as u32
    }

    fn symbol(&self, i: usize) -> u8 {
        self.s.get(i).copied().unwrap_or(0)
    }

    fn support(&self) -> Vec<u16> {
        self.s.iter().enumerate().filter(|(_, &a)| a != 0).map(|(i, _)| i as u16).collect()
    }

    fn support_points(s: &Vec<u16>, out: &mut Vec<u16>) {
        out.clear();
        out.extend_from_slice(s);
    }
}

/// Runs `$body` with `$P` bound to the packed type suited to (q, len).
macro_rules! with_packed {
    ($q:expr, $len:expr, $P:ident => $body:expr) => {{
        use $crate::codes::packed::{Binary, Symbols, Ternary};
        match ($q, $len) {
            (2, n) if n <= 64 => {
                type $P = Binary<u64>;
                $body
            }
            (2, n) if n <= 128 => {
                type $P = Binary<u128>;
                $body
            }
            (3, n) if n <= 64 => {
                type $P = Ternary<u64>;
                $body
            }
            (3, n) if n <= 128 => {
                type $P = Ternary<u128>;
                $body
            }
            _ => {
                type $P = Symbols;
                $body
            }
        }
    }};
}
pub(crate) use with_packed;

#[cfg(test)]
mod tests {
    use super::*;

    fn check_against_symbols<P: Packed>(q: u32, len: usize) {
        // every pair of short vectors, compared with plain modular arithmetic
        let total = (q as usize).pow(len as u32);
        let decode = |mut n: usize| {
            (0..len)
                .map(|_| {
                    let d = (n % q as usize) as u8;
                    n /= q as usize;
                    d
                })
                .collect::<Vec<u8>>()
        };
        for a in 0..total {
            let va = decode(a);
            let pa = P::pack(q, &va);
            assert_eq!(pa.symbols(len), va);
            assert_eq!(pa.weight() as usize, va.iter().filter(|&&x| x != 0).count());
            for c in 1..q as u8 {
                let want: Vec<u8> = va.iter().map(|&x| ((x as u32 * c as u32) % q) as u8).collect();
                assert_eq!(pa.scaled(c).symbols(len), want);
            }
            for b in 0..total {
                let vb = decode(b);
                let want: Vec<u8> = va.iter().zip(&vb).map(|(&x, &y)| ((x as u32 + y as u32) % q) as u8).collect();
                assert_eq!(pa.add(&P::pack(q, &vb)).symbols(len), want);
            }
        }
    }

    #[test]
    fn binary_kernel() {
        check_against_symbols::<Binary<u64>>(2, 5);
        check_against_symbols::<Binary<u128>>(2, 4);
    }

    #[test]
    fn ternary_kernel() {
        check_against_symbols::<Ternary<u64>>(3, 4);
        check_against_symbols::<Ternary<u128>>(3, 3);
    }

    #[test]
    fn symbol_fallback() {
        check_against_symbols::<Symbols>(5, 3);
    }

    #[test]
    fn supports() {
        let w = Ternary::<u64>::pack(3, &[0, 2, 1, 0, 2]);
        let mut pts = Vec::new();
        Ternary::<u64>::support_points(&w.support(), &mut pts);
        assert_eq!(pts, vec![1, 2, 4]);
        let w = Binary::<u128>::pack(2, &[1, 0, 0, 1]);
        Binary::<u128>::support_points(&w.support(), &mut pts);
        assert_eq!(pts, vec![0, 3]);
    }
}
