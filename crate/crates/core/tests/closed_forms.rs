use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use tdesign::codes::{hamming_like_code, reed_muller, weight_distribution_bruteforce, LinearCode, WeightDistribution, DEFAULT_BUDGET};
use tdesign::combinatorics::binomial;
use tdesign::constructions::{
    binary_two_zero_code, projective_ternary_bch, projective_ternary_two_zero, ternary_two_zero_code,
};
use tdesign::spectra::predicted::*;
use tdesign::spectra::{eval_closed_form, macwilliams_transform, table_rows, FormulaParams, SpectrumFormulaId as F};

fn brute(c: &LinearCode) -> WeightDistribution {
    weight_distribution_bruteforce(c, DEFAULT_BUDGET).unwrap()
}

fn closed(id: F, m: u32) -> WeightDistribution {
    eval_closed_form(&FormulaParams::new(id, m)).unwrap()
}

/// λ = b·C(k,t)/C(v,t), or `None` if that is not an integer.
fn lambda(v: &BigUint, k: usize, t: usize, b: &BigUint) -> Option<BigInt> {
    let v = u64::try_from(v).unwrap();
    let (q, r) = (b * binomial(k as u64, t as u64)).div_rem(&binomial(v, t as u64));
    r.is_zero().then(|| BigInt::from(q))
}

#[test]
fn reed_muller_closed_form() {
    for m in 3..=4 {
        assert_eq!(brute(&reed_muller(m - 2, m).unwrap()), closed(F::RmDual, m), "m = {m}");
    }
    for m in 3..=7 {
        let via = macwilliams_transform(&brute(&reed_muller(1, m).unwrap())).unwrap();
        assert_eq!(via, closed(F::RmDual, m), "m = {m}");
    }
}

#[test]
fn hamming_closed_form() {
    for (q, m) in [(2, 3), (2, 4), (2, 5), (2, 6), (3, 3), (3, 5), (5, 3), (11, 3)] {
        let code = hamming_like_code(q, m).unwrap();
        let via = macwilliams_transform(&brute(&code.dual())).unwrap();
        assert_eq!(via, eval_closed_form(&FormulaParams::hamming(q, m)).unwrap(), "q = {q}, m = {m}");
    }
    assert_eq!(brute(&hamming_like_code(2, 4).unwrap()), eval_closed_form(&FormulaParams::hamming(2, 4)).unwrap());
}

#[test]
fn binary_two_zero_families() {
    // Gold, Kasami, Welch and Niho exponents
    for (m, s) in [(5, 3), (5, 5), (5, 7), (5, 13), (7, 3), (7, 5), (7, 11), (7, 13), (7, 39)] {
        let code = binary_two_zero_code(m, s).unwrap();
        let dual = brute(&code.dual());
        assert_eq!(dual, closed(F::Table1Dual, m), "m = {m}, s = {s}");
        assert_eq!(macwilliams_transform(&dual).unwrap(), closed(F::GoldlikePrimal, m), "m = {m}, s = {s}");
        let ext_dual = brute(&code.extend().dual());
        assert_eq!(ext_dual, closed(F::GoldlikeExtDual, m), "m = {m}, s = {s}");
        assert_eq!(macwilliams_transform(&ext_dual).unwrap(), closed(F::GoldlikeExtended, m), "m = {m}, s = {s}");
    }
    assert_eq!(brute(&binary_two_zero_code(5, 3).unwrap()), closed(F::GoldlikePrimal, 5));
}

#[test]
fn ternary_two_zero_families() {
    // 3^h + 1 for h = 0, 1, 2 and (3^h + 1)/2 for odd h coprime to m
    for (m, s) in [(3, 2), (3, 4), (3, 10), (5, 2), (5, 4), (5, 10), (5, 14)] {
        let code = ternary_two_zero_code(m, s).unwrap();
        assert_eq!(brute(&code.dual()), closed(F::Table2Dual, m), "m = {m}, s = {s}");
        let ext_dual = brute(&code.extend().dual());
        assert_eq!(ext_dual, closed(F::Table3ExtDual, m), "m = {m}, s = {s}");
        assert_eq!(macwilliams_transform(&ext_dual).unwrap(), closed(F::TernaryExtended, m), "m = {m}, s = {s}");
    }
}

#[test]
fn projective_ternary_codes() {
    for m in [3, 5] {
        for code in [projective_ternary_bch(m).unwrap(), projective_ternary_two_zero(m).unwrap()] {
            assert_eq!(code.dim(), code.len() - 2 * m as usize);
            let dual = brute(&code.dual());
            assert_eq!(dual, closed(F::TableGg2Dual, m), "m = {m}");
            assert_eq!(macwilliams_transform(&dual).unwrap(), closed(F::ProjectiveTernaryPrimal, m), "m = {m}");
        }
    }
}

#[test]
fn table_rows_sum_to_code_size() {
    for id in [F::Table1Dual, F::GoldlikeExtDual, F::Table2Dual, F::Table3ExtDual, F::TableGg2Dual] {
        for m in (3..=25).step_by(2) {
            let p = FormulaParams::new(id, m);
            let Ok(rows) = table_rows(&p) else { continue };
            let total: BigUint = rows.iter().map(|(_, c)| c).sum();
            assert_eq!(total, num_traits::pow(BigUint::from(p.q), p.kappa()), "{id} m = {m}");
        }
    }
}

#[test]
fn convolution_forms_beyond_enumeration() {
    for m in [9, 11] {
        for id in [F::GoldlikePrimal, F::GoldlikeExtended] {
            let wd = closed(id, m);
            assert_eq!(wd.min_distance(), Some(if id == F::GoldlikePrimal { 5 } else { 6 }), "{id} m = {m}");
        }
    }
    assert_eq!(closed(F::TernaryExtended, 5).min_distance(), Some(5));
    assert_eq!(closed(F::ProjectiveTernaryPrimal, 5).min_distance(), Some(4));
}

#[test]
fn design_indices_agree_with_counts() {
    for m in 3..=8 {
        let wd = eval_closed_form(&FormulaParams::hamming(2, m)).unwrap();
        let v = BigUint::from(wd.len());
        for k in 3..=7 {
            assert_eq!(binary_hamming_lambda(m, k), lambda(&v, k, 2, &wd.count(k)), "m = {m}, k = {k}");
        }
        assert_eq!(hamming_a3(2, m), Some(BigInt::from(wd.count(3))));
    }
    for (q, m) in [(3u32, 3u32), (3, 5), (5, 3), (7, 4)] {
        let v = (q.pow(m) - 1) / (q - 1);
        let k = q.pow(m - 1) as usize;
        let blocks = BigUint::from(v);
        assert_eq!(hamming_dual_lambda(q, m), lambda(&BigUint::from(v), k, 2, &blocks), "q = {q}, m = {m}");
    }
    for m in [5, 7, 9] {
        let wd = closed(F::GoldlikePrimal, m);
        let v = BigUint::from(wd.len());
        assert_eq!(goldlike_a5(m), Some(BigInt::from(wd.count(5))));
        for k in 5..=8 {
            assert_eq!(goldlike_lambda(m, k), lambda(&v, k, 2, &wd.count(k)), "m = {m}, k = {k}");
        }
        let ext = closed(F::GoldlikeExtended, m);
        let v = BigUint::from(ext.len());
        for k in [6, 8, 10] {
            assert_eq!(goldlike_ext_lambda(m, k), lambda(&v, k, 3, &ext.count(k)), "m = {m}, k = {k}");
        }
    }
    for m in (5..=25).step_by(2) {
        let rows = table_rows(&FormulaParams::new(F::Table1Dual, m)).unwrap();
        let v = num_traits::pow(BigUint::from(2u32), m as usize) - 1u32;
        for (w, c) in &rows[1..] {
            let k = usize::try_from(w).unwrap();
            assert_eq!(goldlike_dual_lambda(m, k), lambda(&v, k, 2, c), "m = {m}, k = {k}");
        }
        let rows = table_rows(&FormulaParams::new(F::GoldlikeExtDual, m)).unwrap();
        let v = &v + 1u32;
        for (w, c) in &rows[1..rows.len() - 1] {
            let k = usize::try_from(w).unwrap();
            assert_eq!(goldlike_ext_dual_lambda(m, k), lambda(&v, k, 3, c), "m = {m}, k = {k}");
        }
    }
    for m in [3, 5] {
        let wd = closed(F::TernaryExtended, m);
        assert_eq!(ternary_ext_a5(m), Some(BigInt::from(wd.count(5))));
        let blocks = wd.count(5) / 2u32;
        assert_eq!(ternary_ext_lambda5(m), lambda(&BigUint::from(wd.len()), 5, 2, &blocks), "m = {m}");
    }
    for m in (3..=25).step_by(2) {
        let rows = table_rows(&FormulaParams::new(F::Table3ExtDual, m)).unwrap();
        let v = num_traits::pow(BigUint::from(3u32), m as usize);
        let (w, c) = &rows[1];
        let k = usize::try_from(w).unwrap();
        assert_eq!(ternary_ext_dual_min_lambda(m), lambda(&v, k, 2, &(c / 2u32)), "m = {m}");
    }
}
