use num_integer::Integer;

use super::{CodeError, LinearCode};
use crate::galois::{is_prime, minimal_polynomial_of_power, FieldSpec, Poly};

/// Cyclic code of length `v` over GF(q) generated by `g`.
///
/// Basis rows are the shifts `x^i g(x)`, `0 ≤ i < v - deg g`.
pub fn cyclic_code(q: u32, v: usize, g: &Poly) -> Result<LinearCode, CodeError> {
    if !is_prime(q) || q > 255 {
        return Err(CodeError::UnsupportedField(q));
    }
    if v == 0 || (v as u64).gcd(&(q as u64)) != 1 {
        return Err(CodeError::NonCoprimeLength { q, v });
    }
    let g = if g.base() == q { g.monic() } else { return Err(CodeError::GeneratorDoesNotDivide { q, v }) };
    if g.is_zero() || !g.divides(&Poly::x_pow_minus_one(q, v))? {
        return Err(CodeError::GeneratorDoesNotDivide { q, v });
    }
    let deg = g.degree().unwrap();
    let rows = (0..v - deg)
        .map(|shift| {
            let mut row = vec![0u8; v];
            for (j, &c) in g.coeffs().iter().enumerate() {
                row[shift + j] = c as u8;
            }
            row
        })
        .collect();
    Ok(LinearCode::from_bytes(q, v, rows).with_cyclic(g))
}

/// Binary Reed–Muller code RM(r, m).
///
/// Point j of GF(2)^m is the integer j, with bit i giving the value of x_i;
/// rows are evaluations of the monomials of degree at most r, ordered by
/// degree and then by variable mask.
pub fn reed_muller(r: u32, m: u32) -> Result<LinearCode, CodeError> {
    if r > m || m > 16 {
        return Err(CodeError::BadOrder { r, m });
    }
    let n = 1usize << m;
    let mut masks: Vec<u32> = (0..1u32 << m).filter(|mask| mask.count_ones() <= r).collect();
    masks.sort_by_key(|mask| (mask.count_ones(), *mask));
    let rows = masks
        .into_iter()
        .map(|mask| (0..n).map(|pt| ((pt as u32 & mask) == mask) as u8).collect())
        .collect();
    Ok(LinearCode::from_bytes(2, n, rows))
}

/// The cyclic code of length (q^m - 1)/(q - 1) generated by the minimal
/// polynomial of β = α^{q-1}, α primitive in GF(q^m).
pub fn hamming_like_code(q: u32, m: u32) -> Result<LinearCode, CodeError> {
    if !is_prime(q) || q > 255 {
        return Err(CodeError::UnsupportedField(q));
    }
    if m < 2 {
        return Err(CodeError::UnsupportedField(q));
    }
    let field = FieldSpec::with_default_modulus(q, m)?;
    let v = ((field.order() - 1) / (q - 1)) as usize;
    let g = minimal_polynomial_of_power(&field, (q - 1) as i64);
    cyclic_code(q, v, &g)
}
