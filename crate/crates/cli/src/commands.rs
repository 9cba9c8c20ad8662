use num_traits::Zero;
use serde_json::{json, Value};
use tdesign::am_checker::{am_check, divisibility_check, AMReport};
use tdesign::codes::{weight_distribution_bruteforce, CodeError, LinearCode, WeightDistribution};
use tdesign::constructions::{
    conjecture_harness, differential_uniformity, Construction, ExponentFamily, FamilyTag, Selector, Side,
};
use tdesign::design_theory::{is_steiner, lambda_from_block_count, supports_of_weight, Design, DesignError};
use tdesign::spectra::{distribution_json, eval_closed_form, macwilliams_transform, FormulaParams, SpectrumFormulaId};

use crate::args::{
    CodeArgs, ConjecturesArgs, DesignsArgs, DifferentialArgs, Method, Projective, ReproduceArgs, SelectorArgs, SideArg,
    SpectrumArgs,
};
use crate::error::CliError;
use crate::output::Report;

pub fn resolve(sel: &SelectorArgs) -> Result<Selector, CliError> {
    let picked = [sel.family.is_some(), sel.rm.is_some(), sel.rm_dual, sel.hamming, sel.projective.is_some()];
    if picked.iter().filter(|&&b| b).count() != 1 {
        return Err(CliError::Usage(
            "choose exactly one of --family, --rm, --rm-dual, --hamming, --projective".into(),
        ));
    }
    let m = sel.m;
    let construction = if let Some(fam) = &sel.family {
        let tag: FamilyTag = fam.parse().map_err(CliError::Usage)?;
        let s = exponent(tag, sel.h, sel.s, m)?;
        match tag.characteristic().unwrap_or(sel.q) {
            2 => Construction::BinaryTwoZero { m, s },
            3 => Construction::TernaryTwoZero { m, s },
            q => return Err(CliError::Usage(format!("two-zero codes are built over GF(2) or GF(3), not GF({q})"))),
        }
    } else if let Some(r) = sel.rm {
        Construction::ReedMuller { r, m }
    } else if sel.rm_dual {
        Construction::RmDual { m }
    } else if sel.hamming {
        Construction::Hamming { q: sel.q, m }
    } else {
        match sel.projective {
            Some(Projective::Bch) => Construction::ProjectiveBch { m },
            _ => Construction::ProjectiveTwoZero { m },
        }
    };
    Ok(Selector::new(construction, sel.extended))
}

/// `--s` wins; otherwise the family formula, with h = 1 (h = 0 for PLANAR_3H1) when omitted.
fn exponent(tag: FamilyTag, h: Option<u32>, s: Option<u64>, m: u32) -> Result<u64, CliError> {
    if let Some(s) = s {
        return Ok(s);
    }
    if tag == FamilyTag::Raw {
        return Err(CliError::Usage("--family raw needs --s".into()));
    }
    let default_h = if tag == FamilyTag::Planar3h1 { 0 } else { 1 };
    Ok(ExponentFamily::new(tag, Some(h.unwrap_or(default_h)), m).exponent()?)
}

fn side_of(s: SideArg) -> Side {
    match s {
        SideArg::Code => Side::Code,
        SideArg::Dual => Side::Dual,
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Code => "code",
        Side::Dual => "dual",
    }
}

fn build_side(selector: &Selector, side: Side) -> Result<LinearCode, CliError> {
    let code = selector.build()?;
    Ok(match side {
        Side::Code => code,
        Side::Dual => code.dual(),
    })
}

fn transform(wd: &WeightDistribution) -> Result<WeightDistribution, CliError> {
    macwilliams_transform(wd).map_err(|e| CliError::Inconsistent(format!("MacWilliams transform of an enumerated spectrum failed: {e}")))
}

/// (code spectrum, dual spectrum), enumerating whichever side is smaller.
fn spectrum_pair(code: &LinearCode, budget: u64) -> Result<(WeightDistribution, WeightDistribution), CliError> {
    if code.dim() * 2 <= code.len() {
        let wd = weight_distribution_bruteforce(code, budget)?;
        let dual = transform(&wd)?;
        Ok((wd, dual))
    } else {
        let dual = weight_distribution_bruteforce(&code.dual(), budget)?;
        let wd = transform(&dual)?;
        Ok((wd, dual))
    }
}

fn csv_rows(wd: &WeightDistribution) -> Vec<Vec<String>> {
    wd.nonzero().map(|(w, c)| vec![w.to_string(), c.to_string()]).collect()
}

fn formula_json(p: &FormulaParams) -> Value {
    json!({"formula": p.id.tag(), "q": p.q, "m": p.m})
}

pub fn spectrum(a: &SpectrumArgs, budget: u64) -> Result<Report, CliError> {
    let selector = resolve(&a.selector)?;
    let side = side_of(a.side);
    let label = format!("{} ({})", selector.label(), side_name(side));
    let formula = selector.formula(side);
    let methods: Vec<Method> = match a.method {
        Method::All => {
            let mut v = vec![Method::Brute, Method::Macwilliams];
            if formula.is_some() {
                v.push(Method::ClosedForm);
            }
            v
        }
        m => vec![m],
    };
    let code = build_side(&selector, side)?;
    let params = json!({"selector": selector, "side": side_name(side)});
    let mut results: Vec<(&'static str, WeightDistribution)> = Vec::new();
    let mut skipped: Vec<Value> = Vec::new();
    for m in &methods {
        let (name, r) = match m {
            Method::Brute => ("brute", weight_distribution_bruteforce(&code, budget).map_err(CliError::from)),
            Method::Macwilliams => (
                "macwilliams",
                weight_distribution_bruteforce(&code.dual(), budget).map_err(CliError::from).and_then(|d| transform(&d)),
            ),
            Method::ClosedForm => (
                "closed-form",
                formula
                    .ok_or_else(|| CliError::Usage(format!("no closed form is catalogued for {label}")))
                    .and_then(|p| eval_closed_form(&p).map_err(CliError::from)),
            ),
            Method::All => unreachable!(),
        };
        match r {
            Ok(wd) => results.push((name, wd)),
            Err(e) if methods.len() > 1 && e.exit_code() == crate::error::BUDGET => {
                skipped.push(json!({"method": name, "reason": e.to_string()}));
            }
            Err(e) => return Err(e),
        }
    }
    if results.is_empty() {
        return Err(CliError::Code(CodeError::BudgetExceeded {
            required: code.size(),
            budget,
            dual_dim: code.len() - code.dim(),
        }));
    }
    if let Some((_, wd)) = results.iter().find(|(_, wd)| wd.len() != code.len()) {
        return Err(CliError::Inconsistent(format!("spectrum of length {} for a code of length {}", wd.len(), code.len())));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let mut json_methods = Vec::new();
    let mut text = format!("{label}: [{}, {}] over GF({})\n", code.len(), code.dim(), code.q());
    for (name, wd) in &results {
        let mut j = distribution_json(name, params.clone(), wd);
        if *name == "closed-form" {
            j["closed_form"] = formula_json(formula.as_ref().unwrap());
        }
        json_methods.push(j);
        text.push_str(&format!("{name:>12}: {wd}\n"));
    }
    for s in &skipped {
        text.push_str(&format!("{:>12}: skipped ({})\n", s["method"].as_str().unwrap(), s["reason"].as_str().unwrap()));
    }
    let verdict = if results.len() < 2 { "single" } else if agree { "match" } else { "mismatch" };
    text.push_str(&format!("verdict: {verdict}\n"));
    let json = json!({
        "selector": label,
        "v": code.len(),
        "dim": code.dim(),
        "q": code.q(),
        "methods": json_methods,
        "skipped": skipped,
        "verdict": verdict,
    });
    let report = Report::new(json, vec!["weight".into(), "count".into()], csv_rows(&results[0].1), text);
    if !agree {
        return Err(CliError::Inconsistent(format!("methods disagree for {label}")).with_report(report));
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Target {
    side: Side,
    weight: usize,
}

fn parse_weights(spec: &str, primal: &WeightDistribution, dual: &WeightDistribution, am: &AMReport) -> Result<Vec<Target>, CliError> {
    let v = primal.len();
    let listed = |wd: &WeightDistribution, side| {
        wd.nonzero().filter(|&(w, _)| w > 0 && w < v).map(move |(weight, _)| Target { side, weight }).collect::<Vec<_>>()
    };
    let mut out = Vec::new();
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match tok {
            "all" => {
                out.extend(listed(primal, Side::Code));
                out.extend(listed(dual, Side::Dual));
            }
            "primal" | "code" => out.extend(listed(primal, Side::Code)),
            "dual" => out.extend(listed(dual, Side::Dual)),
            "predicted" => {
                out.extend(am.primal_design_weights.iter().map(|&weight| Target { side: Side::Code, weight }));
                out.extend(am.dual_design_weights.iter().map(|&weight| Target { side: Side::Dual, weight }));
            }
            _ => {
                let (side, num) = match tok.strip_prefix('d') {
                    Some(rest) => (Side::Dual, rest),
                    None => (Side::Code, tok),
                };
                let weight = num.parse().map_err(|_| CliError::Usage(format!("bad weight {tok:?}")))?;
                out.push(Target { side, weight });
            }
        }
    }
    let mut seen = Vec::new();
    out.retain(|t| {
        let fresh = !seen.contains(t);
        seen.push(*t);
        fresh
    });
    Ok(out)
}

pub fn designs(a: &DesignsArgs, budget: u64) -> Result<Report, CliError> {
    let selector = resolve(&a.selector)?;
    let code = selector.build()?;
    let dual_code = code.dual();
    let (primal, dual) = spectrum_pair(&code, budget)?;
    let am = am_check(&primal, &dual, a.t)?;
    let targets = parse_weights(&a.weights, &primal, &dual, &am)?;
    let v = code.len();
    let t = a.t;
    let mut results = Vec::new();
    let mut csv = Vec::new();
    let mut text = format!(
        "{}: [{}, {}, {}] over GF({}); Assmus–Mattson t={t}: {} (s={}, d={})\n",
        selector.label(),
        v,
        code.dim(),
        am.d,
        code.q(),
        if am.holds { "holds" } else { "silent" },
        am.s,
        am.d
    );
    let mut broken = Vec::new();
    for target in targets {
        let (c, wd, predicted_list) = match target.side {
            Side::Code => (&code, &primal, &am.primal_design_weights),
            Side::Dual => (&dual_code, &dual, &am.dual_design_weights),
        };
        let predicted = predicted_list.contains(&target.weight);
        let side = side_name(target.side);
        let k = target.weight;
        let mut entry = json!({"side": side, "weight": k, "t": t, "A_w": wd.count(k).to_string(), "predicted": predicted});
        let row = |status: &str, lambda: String, blocks: String| {
            vec![side.to_string(), k.to_string(), t.to_string(), status.to_string(), lambda, blocks, predicted.to_string()]
        };
        if wd.count(k).is_zero() || k >= v || k <= t {
            let why = if wd.count(k).is_zero() { "no codewords of this weight" } else { "weight outside t < k < v" };
            entry["status"] = json!("skipped");
            entry["reason"] = json!(why);
            text.push_str(&format!("{side} weight {k}: skipped ({why})\n"));
            csv.push(row("skipped", String::new(), String::new()));
            results.push(entry);
            continue;
        }
        let supports = match supports_of_weight(c, k, budget) {
            Ok(s) => s,
            Err(DesignError::Code(e @ CodeError::BudgetExceeded { .. })) => {
                entry["status"] = json!("skipped");
                entry["reason"] = json!(e.to_string());
                text.push_str(&format!("{side} weight {k}: skipped (over budget)\n"));
                csv.push(row("skipped", String::new(), String::new()));
                results.push(entry);
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let b = supports.blocks.len();
        entry["block_count"] = json!(b);
        entry["scalar_classes"] = json!(supports.scalar_classes);
        match Design::verified(v, t, supports.blocks)? {
            Ok(design) => {
                let counted = lambda_from_block_count(v, k, t, b as u64)?;
                let div = divisibility_check(t, v, k, &counted);
                entry["status"] = json!("design");
                entry["lambda"] = json!(design.lambda);
                entry["lambda_from_block_count"] = json!(counted.to_string());
                entry["divisibility"] = json!(div.holds);
                entry["steiner"] = json!(is_steiner(&design));
                if a.blocks {
                    entry["design"] = design.to_json();
                }
                text.push_str(&format!(
                    "{side} weight {k}: {t}-({v},{k},{}) design, {b} blocks{}{}\n",
                    design.lambda,
                    if is_steiner(&design) { ", Steiner system" } else { "" },
                    if predicted { ", predicted" } else { "" }
                ));
                csv.push(row("design", design.lambda.to_string(), b.to_string()));
            }
            Err(witness) => {
                if predicted {
                    broken.push(k);
                }
                text.push_str(&format!(
                    "{side} weight {k}: not a {t}-design ({:?} in {} blocks, {:?} in {}){}\n",
                    witness.most_covered,
                    witness.most_count,
                    witness.least_covered,
                    witness.least_count,
                    if predicted { ", CONTRADICTS prediction" } else { "" }
                ));
                entry["status"] = json!("not_design");
                entry["witness"] = json!(witness);
                csv.push(row("not_design", String::new(), b.to_string()));
            }
        }
        results.push(entry);
    }
    let json = json!({
        "selector": selector.label(),
        "v": v,
        "dim": code.dim(),
        "q": code.q(),
        "am": am,
        "results": results,
    });
    let header = ["side", "weight", "t", "status", "lambda", "blocks", "predicted"].map(String::from).to_vec();
    let report = Report::new(json, header, csv, text);
    if !broken.is_empty() {
        return Err(CliError::Inconsistent(format!("predicted designs failed verification at weights {broken:?}")).with_report(report));
    }
    Ok(report)
}

pub fn conjectures(a: &ConjecturesArgs, budget: u64) -> Result<Report, CliError> {
    let r = conjecture_harness(a.m, budget)?;
    let csv = r
        .tests
        .iter()
        .map(|t| {
            vec![
                t.construction.clone(),
                t.conjecture.to_string(),
                t.weight.to_string(),
                t.status.to_string(),
                t.lambda.map(|l| l.to_string()).unwrap_or_default(),
                t.block_count.to_string(),
            ]
        })
        .collect();
    let header = ["construction", "conjecture", "weight", "status", "lambda", "block_count"].map(String::from).to_vec();
    Ok(Report::new(serde_json::to_value(&r).expect("report serializes"), header, csv, r.summary_table()))
}

pub fn reproduce(a: &ReproduceArgs, budget: u64) -> Result<Report, CliError> {
    use SpectrumFormulaId as F;
    let m = a.m;
    let (id, construction, extended) = match a.table.to_ascii_lowercase().as_str() {
        "1" => (F::Table1Dual, Construction::BinaryTwoZero { m, s: 3 }, false),
        "2" => (F::Table2Dual, Construction::TernaryTwoZero { m, s: 2 }, false),
        "3" => (F::Table3ExtDual, Construction::TernaryTwoZero { m, s: 2 }, true),
        "gg2" | "4" | "projective" => (F::TableGg2Dual, Construction::ProjectiveBch { m }, false),
        other => return Err(CliError::Usage(format!("unknown table {other:?}; expected 1, 2, 3 or gg2"))),
    };
    let params = FormulaParams::new(id, m);
    let table = eval_closed_form(&params)?;
    let selector = Selector::new(construction, extended);
    let dual = build_side(&selector, Side::Dual)?;
    let (status, brute) = match weight_distribution_bruteforce(&dual, budget) {
        Ok(wd) if wd == table => ("CONFIRMED", Some(wd)),
        Ok(wd) => ("MISMATCH", Some(wd)),
        Err(CodeError::BudgetExceeded { .. }) => ("SKIPPED", None),
        Err(e) => return Err(e.into()),
    };
    let mut json = distribution_json(id.tag(), formula_json(&params), &table);
    json["brute_force"] = json!({
        "selector": format!("{} (dual)", selector.label()),
        "status": status,
        "distribution": brute.as_ref().map(|b| distribution_json("brute", Value::Null, b)),
    });
    let text = format!("{} at m={m}: {table}\nbrute force on {} (dual): {status}\n", id.tag(), selector.label());
    let report = Report::new(json, vec!["weight".into(), "count".into()], csv_rows(&table), text);
    if status == "MISMATCH" {
        return Err(CliError::Inconsistent(format!("{} disagrees with enumeration at m={m}", id.tag())).with_report(report));
    }
    Ok(report)
}

pub fn code(a: &CodeArgs) -> Result<Report, CliError> {
    let selector = resolve(&a.selector)?;
    let side = side_of(a.side);
    let c = build_side(&selector, side)?;
    let mut json = c.to_json();
    json["selector"] = json!(format!("{} ({})", selector.label(), side_name(side)));
    let mut text = format!("{} ({}): [{}, {}] over GF({})\n", selector.label(), side_name(side), c.len(), c.dim(), c.q());
    let rows = c.generator_rows();
    for r in &rows {
        text.push_str(&r.iter().map(u32::to_string).collect::<String>());
        text.push('\n');
    }
    let width = c.len();
    let header = (0..width).map(|i| format!("c{i}")).collect();
    let csv = rows.iter().map(|r| r.iter().map(u32::to_string).collect()).collect();
    Ok(Report::new(json, header, csv, text))
}

pub fn differential(a: &DifferentialArgs) -> Result<Report, CliError> {
    let (p, s) = match (&a.family, a.s) {
        (_, Some(s)) => {
            let p = match &a.family {
                Some(f) => f.parse::<FamilyTag>().map_err(CliError::Usage)?.characteristic().unwrap_or(a.q),
                None => a.q,
            };
            (p, s)
        }
        (Some(f), None) => {
            let tag: FamilyTag = f.parse().map_err(CliError::Usage)?;
            (tag.characteristic().unwrap_or(a.q), exponent(tag, a.h, None, a.m)?)
        }
        (None, None) => return Err(CliError::Usage("give --s or --family".into())),
    };
    let r = differential_uniformity(p, a.m, s)?;
    let json = json!({"p": p, "m": a.m, "s": s, "uniformity": r.uniformity, "apn": r.is_apn(), "planar": r.is_planar()});
    let text = format!(
        "x^{s} over GF({p}^{}): differential uniformity {}{}\n",
        a.m,
        r.uniformity,
        if r.is_planar() { " (planar)" } else if r.is_apn() { " (APN)" } else { "" }
    );
    let header = ["p", "m", "s", "uniformity", "apn", "planar"].map(String::from).to_vec();
    let row = vec![p.to_string(), a.m.to_string(), s.to_string(), r.uniformity.to_string(), r.is_apn().to_string(), r.is_planar().to_string()];
    Ok(Report::new(json, header, vec![row], text))
}
