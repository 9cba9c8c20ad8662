#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use tdesign::codes::{cyclic_code, LinearCode};
use tdesign::galois::{cyclotomic_factors, Poly};

/// A random cyclic code over GF(q) of length `v`: a random product of the irreducible factors of x^v - 1.
pub fn random_cyclic(rng: &mut impl Rng, q: u32, v: usize) -> LinearCode {
    let factors = cyclotomic_factors(q, v as u64).unwrap();
    let mut g = Poly::one(q);
    for (_, f) in &factors {
        if rng.gen_bool(0.5) {
            g = g.mul(f).unwrap();
        }
    }
    cyclic_code(q, v, &g).unwrap()
}

/// Lengths ≤ 31 coprime to q whose splitting field is supported.
pub fn lengths(q: u32) -> Vec<usize> {
    (2..=31).filter(|&v| v % q as usize != 0 && cyclotomic_factors(q, v as u64).is_ok()).collect()
}

/// Random cyclic code whose smaller side has at most `max_words` codewords.
pub fn small_random_cyclic(rng: &mut impl Rng, max_words: u128) -> LinearCode {
    loop {
        let q = *[2u32, 3].choose(rng).unwrap();
        let v = *lengths(q).choose(rng).unwrap();
        let c = random_cyclic(rng, q, v);
        let small = c.dim().min(c.len() - c.dim());
        if (q as u128).pow(small as u32) <= max_words {
            return c;
        }
    }
}

/// Random generator matrix over GF(q).
pub fn random_code(rng: &mut impl Rng, q: u32, v: usize, k: usize) -> LinearCode {
    let rows = (0..k).map(|_| (0..v).map(|_| rng.gen_range(0..q)).collect()).collect();
    LinearCode::from_generator(q, v, rows).unwrap()
}
