//! Acceptance checks. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits nonzero if any criterion fails.

mod common;

use std::error::Error;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use num_bigint::{BigInt, BigUint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tdesign::am_checker::{am_check, divisibility_check};
use tdesign::codes::{
    hamming_like_code, minimum_distance, reed_muller, weight_distribution_bruteforce, LinearCode, WeightDistribution,
    DEFAULT_BUDGET,
};
use tdesign::constructions::{
    binary_two_zero_code, conjecture_harness, is_apn, is_planar, projective_ternary_bch, projective_ternary_two_zero,
    ternary_two_zero_code, Status,
};
use tdesign::design_theory::{
    design_family_delta, difference_multiset, lambda_from_block_count, supports_of_weight, verify_t_design, Verification,
};
use tdesign::spectra::predicted::*;
use tdesign::spectra::{eval_closed_form, macwilliams_transform, FormulaParams, SpectrumFormulaId as F};

type Res<T = String> = Result<T, Box<dyn Error>>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+).into());
        }
    };
}

struct Verified {
    label: String,
    v: usize,
    k: usize,
    t: usize,
    lambda: u64,
    blocks: Vec<Vec<u16>>,
}

#[derive(Default)]
struct Ctx {
    designs: Vec<Verified>,
}

impl Ctx {
    /// Verifies that the weight-`w` supports of `code` form a t-design and returns λ.
    fn design(&mut self, label: &str, code: &LinearCode, w: usize, t: usize) -> Res<u64> {
        let s = supports_of_weight(code, w, DEFAULT_BUDGET)?;
        match verify_t_design(code.len(), &s.blocks, t)? {
            Verification::Design { lambda } => {
                self.designs.push(Verified { label: format!("{label} w={w}"), v: code.len(), k: w, t, lambda, blocks: s.blocks });
                Ok(lambda)
            }
            Verification::NotDesign(wit) => Err(format!("{label} weight {w} is not a {t}-design: {wit:?}").into()),
        }
    }

    /// Like [`design`](Self::design) but a non-design is data rather than an error.
    fn maybe_design(&mut self, label: &str, code: &LinearCode, w: usize, t: usize) -> Res<Option<u64>> {
        let s = supports_of_weight(code, w, DEFAULT_BUDGET)?;
        Ok(match verify_t_design(code.len(), &s.blocks, t)? {
            Verification::Design { lambda } => {
                self.designs.push(Verified { label: format!("{label} w={w}"), v: code.len(), k: w, t, lambda, blocks: s.blocks });
                Some(lambda)
            }
            Verification::NotDesign(_) => None,
        })
    }
}

fn brute(code: &LinearCode) -> Res<WeightDistribution> {
    Ok(weight_distribution_bruteforce(code, DEFAULT_BUDGET)?)
}

/// Weight distributions of a code and its dual, enumerating only the dual.
fn from_dual(code: &LinearCode) -> Res<(WeightDistribution, WeightDistribution)> {
    let dual = brute(&code.dual())?;
    Ok((macwilliams_transform(&dual)?, dual))
}

fn closed(id: F, m: u32) -> Res<WeightDistribution> {
    Ok(eval_closed_form(&FormulaParams::new(id, m))?)
}

fn sparse(wd: &WeightDistribution) -> Vec<(usize, u64)> {
    wd.nonzero().map(|(w, c)| (w, u64::try_from(c).unwrap())).collect()
}

fn int(x: u64) -> Option<BigInt> {
    Some(BigInt::from(x))
}

fn c1(_: &mut Ctx) -> Res {
    let mut out = Vec::new();
    for (r, m) in [(2, 4), (3, 5)] {
        let code = reed_muller(r, m)?;
        let bf = brute(&code)?;
        let cf = closed(F::RmDual, m)?;
        let mw = macwilliams_transform(&brute(&reed_muller(1, m)?)?)?;
        ensure!(bf == cf && bf == mw, "RM({r},{m}): brute {bf:?}, closed {cf:?}, macwilliams {mw:?}");
        out.push(format!("RM({r},{m}) = {}", bf.enumerator_string()));
    }
    let a4 = brute(&reed_muller(2, 4)?)?.count(4);
    ensure!(a4 == BigUint::from(140u32), "A_4(RM(2,4)) = {a4}");
    Ok(format!("{}; A_4 = 140", out.join("; ")))
}

fn c2(ctx: &mut Ctx) -> Res {
    let rm = reed_muller(2, 4)?;
    let l = ctx.design("RM(2,4)", &rm, 4, 3)?;
    ensure!(l == 1, "RM(2,4) weight 4: λ = {l}");
    let ham = hamming_like_code(2, 4)?;
    ensure!((ham.len(), ham.dim()) == (15, 11), "Hamming code is [{}, {}]", ham.len(), ham.dim());
    let l = ctx.design("Hamming(2,4)", &ham, 3, 2)?;
    ensure!(l == 1, "Hamming weight 3: λ = {l}");
    Ok("3-(16,4,1) and 2-(15,3,1) verified".into())
}

fn c3(ctx: &mut Ctx) -> Res {
    let ham = hamming_like_code(2, 4)?;
    let mut got = Vec::new();
    for k in 4..=7 {
        let measured = ctx.design("Hamming(2,4)", &ham, k, 2)?;
        let formula = binary_hamming_lambda(4, k);
        ensure!(formula == int(measured), "weight {k}: verified λ = {measured}, formula {formula:?}");
        got.push(format!("λ{k}={measured}"));
    }
    Ok(format!("{} (verified = formula at m=4)", got.join(" ")))
}

fn c4(ctx: &mut Ctx) -> Res {
    let code = hamming_like_code(3, 3)?;
    ensure!((code.len(), code.dim()) == (13, 10), "code is [{}, {}]", code.len(), code.dim());
    ensure!(minimum_distance(&code, DEFAULT_BUDGET)? == Some(3), "d != 3");
    let l = ctx.design("Hamming(3,3)", &code, 3, 2)?;
    ensure!(l == 2, "weight 3: λ = {l}");
    let ld = ctx.design("Hamming(3,3) dual", &code.dual(), 9, 2)?;
    ensure!(int(ld) == hamming_dual_lambda(3, 3) && ld == 6, "dual weight 9: λ = {ld}");
    Ok("2-(13,3,2) and 2-(13,9,6) verified".into())
}

fn c5(ctx: &mut Ctx) -> Res {
    let code = binary_two_zero_code(5, 3)?;
    let d = minimum_distance(&code, DEFAULT_BUDGET)?;
    ensure!((code.len(), code.dim(), d) == (31, 21, Some(5)), "parameters [{}, {}, {d:?}]", code.len(), code.dim());
    let bf = brute(&code)?;
    let lemma = closed(F::GoldlikePrimal, 5)?;
    ensure!(bf == lemma, "primal spectrum: brute {bf:?}, closed form {lemma:?}");
    let a5 = bf.count(5);
    ensure!(
        a5 == BigUint::from(186u32) && lemma.count(5) == a5 && goldlike_a5(5) == int(186),
        "A_5: brute {a5}, closed {}, formula {:?}",
        lemma.count(5),
        goldlike_a5(5)
    );
    let dual = brute(&code.dual())?;
    ensure!(dual == closed(F::Table1Dual, 5)?, "dual spectrum differs from its table");
    ensure!(sparse(&dual) == [(0, 1), (12, 310), (16, 527), (20, 186)], "dual spectrum {:?}", sparse(&dual));
    let am = am_check(&bf, &dual, 2)?;
    ensure!(am.holds, "Assmus–Mattson does not apply: {am:?}");
    let mut got = Vec::new();
    for w in [12, 16, 20] {
        let l = ctx.design("Gold dual", &code.dual(), w, 2)?;
        ensure!(int(l) == goldlike_dual_lambda(5, w), "dual weight {w}: λ = {l}, formula {:?}", goldlike_dual_lambda(5, w));
        got.push(format!("d{w}:{l}"));
    }
    ensure!(got[0] == "d12:44", "λ(12) = {}", got[0]);
    for w in 5..=8 {
        let l = ctx.design("Gold", &code, w, 2)?;
        ensure!(int(l) == goldlike_lambda(5, w), "weight {w}: λ = {l}, formula {:?}", goldlike_lambda(5, w));
        got.push(format!("{w}:{l}"));
    }
    Ok(format!("[31,21,5], A_5 = 186, λ {}", got.join(" ")))
}

fn c6(ctx: &mut Ctx) -> Res {
    let code = binary_two_zero_code(5, 3)?.extend();
    let d = minimum_distance(&code, DEFAULT_BUDGET)?;
    ensure!((code.len(), code.dim(), d) == (32, 21, Some(6)), "parameters [{}, {}, {d:?}]", code.len(), code.dim());
    let dual = brute(&code.dual())?;
    ensure!(dual == closed(F::GoldlikeExtDual, 5)?, "extended dual differs from its closed form");
    let s = dual.enumerator_string();
    ensure!(s == "1 + 496z^12 + 1054z^16 + 496z^20 + z^32", "extended dual enumerator {s}");
    let mut got = Vec::new();
    for w in [6, 8] {
        let l = ctx.design("extended Gold", &code, w, 3)?;
        ensure!(int(l) == goldlike_ext_lambda(5, w), "weight {w}: λ = {l}, formula {:?}", goldlike_ext_lambda(5, w));
        got.push(format!("{w}:{l}"));
    }
    ensure!(got[0] == "6:4", "weight 6: {}", got[0]);
    let l = ctx.design("extended Gold dual", &code.dual(), 16, 3)?;
    ensure!(l == 119 && int(l) == goldlike_ext_dual_lambda(5, 16), "dual weight 16: λ = {l}");
    Ok(format!("[32,21,6], {s}, 3-design λ {} d16:{l}", got.join(" ")))
}

fn c7(ctx: &mut Ctx) -> Res {
    let code = ternary_two_zero_code(3, 2)?;
    let dual = brute(&code.dual())?;
    ensure!(dual == closed(F::Table2Dual, 3)?, "dual differs from its table");
    ensure!(sparse(&dual) == [(0, 1), (15, 312), (18, 260), (21, 156)], "dual spectrum {:?}", sparse(&dual));
    let ext = code.extend();
    let (wd, ext_dual) = from_dual(&ext)?;
    ensure!(
        (ext.len(), ext.dim(), wd.min_distance()) == (27, 20, Some(5)),
        "extended parameters [{}, {}, {:?}]",
        ext.len(),
        ext.dim(),
        wd.min_distance()
    );
    ensure!(minimum_distance(&ext, DEFAULT_BUDGET)? == Some(5), "enumerated minimum distance is not 5");
    ensure!(ext_dual == closed(F::Table3ExtDual, 3)?, "extended dual differs from its table");
    ensure!(wd == closed(F::TernaryExtended, 3)?, "extended primal differs from its closed form");
    ensure!(
        sparse(&ext_dual) == [(0, 1), (15, 702), (18, 780), (21, 702), (27, 2)],
        "extended dual spectrum {:?}",
        sparse(&ext_dual)
    );
    let l5 = ctx.design("extended ternary", &ext, 5, 2)?;
    ensure!(l5 == 20 && int(l5) == ternary_ext_lambda5(3), "weight 5: λ = {l5}");
    let ld = ctx.design("extended ternary dual", &ext.dual(), 15, 2)?;
    ensure!(ld == 105 && int(ld) == ternary_ext_dual_min_lambda(3), "dual weight 15: λ = {ld}");
    let mut data = Vec::new();
    for w in 6..=10 {
        let l = ctx.maybe_design("extended ternary", &ext, w, 2)?;
        data.push(format!("{w}:{}", l.map_or("not a design".into(), |l| l.to_string())));
    }
    Ok(format!("tables 2 and 3 match, [27,20,5], λ5 = 20, λd15 = 105; empirical λ {}", data.join(" ")))
}

fn c8(_: &mut Ctx) -> Res {
    for (name, code) in [("bch", projective_ternary_bch(3)?), ("two-zero", projective_ternary_two_zero(3)?)] {
        let d = minimum_distance(&code, DEFAULT_BUDGET)?;
        ensure!((code.len(), code.dim(), d) == (13, 7, Some(4)), "{name}: [{}, {}, {d:?}]", code.len(), code.dim());
        let dual = brute(&code.dual())?;
        ensure!(dual == closed(F::TableGg2Dual, 3)?, "{name}: dual differs from its table");
        ensure!(sparse(&dual) == [(0, 1), (6, 156), (9, 494), (12, 78)], "{name}: dual {:?}", sparse(&dual));
    }
    let report = conjecture_harness(3, DEFAULT_BUDGET)?;
    let mut out = Vec::new();
    for name in ["projective-bch", "projective-two-zero"] {
        let t = report.find(name, 2, 4).ok_or("no conjecture 2 entry")?;
        ensure!(t.status == Status::Pass && t.block_count == 13, "{name}: {t:?}");
        out.push(format!("{name} {} b={}", t.status, t.block_count));
    }
    Ok(format!("[13,7,4] twice, dual table matches; conjecture 2: {}", out.join(", ")))
}

fn c9(_: &mut Ctx) -> Res {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    let mut expect = |label: String, got: bool, want: bool| {
        seen.push(format!("{label}={got}"));
        if got != want {
            bad.push(format!("{label} is {got}"));
        }
    };
    expect("is_apn(3,5)".into(), is_apn(3, 5)?.is_apn(), true);
    expect("is_apn(1,5)".into(), is_apn(1, 5)?.is_apn(), false);
    for s in [2, 4, 5, 14] {
        let r = is_planar(s, 3)?;
        expect(format!("is_planar({s},3)"), r.is_planar(), true);
    }
    ensure!(bad.is_empty(), "{} (exhaustive differential counts)", bad.join(", "));
    Ok(seen.join(" "))
}

fn c10(ctx: &mut Ctx) -> Res {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut fields = [0usize; 2];
    for _ in 0..50 {
        let c = common::small_random_cyclic(&mut rng, 1 << 16);
        fields[(c.q() == 3) as usize] += 1;
        let side = if c.dim() * 2 <= c.len() { c.clone() } else { c.dual() };
        let wd = brute(&side)?;
        let back = macwilliams_transform(&macwilliams_transform(&wd)?)?;
        ensure!(back == wd, "involution fails on a [{}, {}] code over GF({})", side.len(), side.dim(), side.q());
    }
    ensure!(fields[0] > 0 && fields[1] > 0, "fields sampled {fields:?}");
    ensure!(!ctx.designs.is_empty(), "no verified designs to check");
    for d in &ctx.designs {
        let b = d.blocks.len() as u64;
        let lambda = BigUint::from(d.lambda);
        let div = divisibility_check(d.t, d.v, d.k, &lambda);
        ensure!(div.holds, "{}: divisibility fails at i = {:?}", d.label, div.first_failing_i);
        ensure!(lambda_from_block_count(d.v, d.k, d.t, b)? == lambda, "{}: b·C(k,t) != λ·C(v,t)", d.label);
        let delta = design_family_delta(d.t, d.v, d.k, d.lambda)?;
        let got = difference_multiset(d.v, &d.blocks).delta;
        ensure!(got.map(BigUint::from) == Some(delta.clone()), "{}: δ = {got:?}, expected {delta}", d.label);
    }
    Ok(format!("involution on 50 codes ({} binary, {} ternary); {} designs checked", fields[0], fields[1], ctx.designs.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn(&mut Ctx) -> Res); 10] = [
        ("spectrum cross-validation (RM)", c1),
        ("Steiner reproductions", c2),
        ("binary Hamming ladder", c3),
        ("ternary Hamming", c4),
        ("Gold suite m=5", c5),
        ("extended Gold suite m=5", c6),
        ("ternary planar suite m=3", c7),
        ("projective ternary suite m=3", c8),
        ("APN/PN ground truth", c9),
        ("property suites", c10),
    ];
    let mut ctx = Ctx::default();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| f(&mut ctx)));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(Ok(detail)) => println!("[PASS] {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Ok(Err(e)) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {e} ({secs:.1}s)", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: panicked ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
