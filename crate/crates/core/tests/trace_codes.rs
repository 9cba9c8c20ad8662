//! Cyclic codes against their trace descriptions: a cyclic code with zeros
//! γ^{e_1}, ..., γ^{e_r} has dual `{ (Tr(Σ a_j γ^{e_j t}))_t }`.

use tdesign::codes::{hamming_like_code, LinearCode};
use tdesign::constructions::{binary_two_zero_code, projective_ternary_two_zero, ternary_two_zero_code};
use tdesign::galois::FieldSpec;

/// The code spanned by `t ↦ Tr(a γ^{e t})` for every exponent e and every a in a basis of the field, γ = α^step.
fn trace_code(p: u32, m: u32, len: usize, step: i64, exponents: &[i64]) -> LinearCode {
    let f = FieldSpec::with_default_modulus(p, m).unwrap();
    let mut rows = Vec::new();
    for &e in exponents {
        for i in 0..m as i64 {
            let a = f.alpha_pow(i);
            let row = (0..len as i64)
                .map(|t| a.mul(&f.alpha_pow(step * e * t)).unwrap().trace(p).unwrap().as_prime_field().unwrap())
                .collect();
            rows.push(row);
        }
    }
    LinearCode::from_generator(p, len, rows).unwrap()
}

fn assert_dual_is(code: &LinearCode, trace: &LinearCode) {
    let dual = code.dual();
    assert_eq!(trace.dim(), dual.dim());
    for row in trace.basis() {
        assert!(dual.contains(row));
    }
}

#[test]
fn binary_two_zero_duals() {
    for (m, s) in [(5, 3), (5, 5), (5, 13), (7, 3), (7, 9)] {
        let code = binary_two_zero_code(m, s).unwrap();
        assert_dual_is(&code, &trace_code(2, m, code.len(), 1, &[1, s as i64]));
    }
}

#[test]
fn ternary_two_zero_duals() {
    for (m, s) in [(3, 2), (3, 4), (3, 10), (5, 2)] {
        let code = ternary_two_zero_code(m, s).unwrap();
        assert_dual_is(&code, &trace_code(3, m, code.len(), 1, &[-1, -(s as i64)]));
    }
}

#[test]
fn projective_two_zero_duals() {
    for m in [3, 5] {
        let code = projective_ternary_two_zero(m).unwrap();
        assert_dual_is(&code, &trace_code(3, m, code.len(), 2, &[-1, -2]));
    }
}

#[test]
fn hamming_duals_are_simplex_trace_codes() {
    for (q, m) in [(2, 3), (2, 4), (3, 3), (5, 2)] {
        let code = hamming_like_code(q, m).unwrap();
        assert_dual_is(&code, &trace_code(q, m, code.len(), q as i64 - 1, &[1]));
    }
}
