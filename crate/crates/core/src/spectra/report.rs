use serde_json::{json, Map, Value};

use crate::codes::WeightDistribution;

/// `{formula, params, counts: {weight: "count"}}` over the nonzero weights.
pub fn distribution_json(formula: &str, params: Value, wd: &WeightDistribution) -> Value {
    let counts: Map<String, Value> = wd.nonzero().map(|(w, c)| (w.to_string(), Value::String(c.to_string()))).collect();
    json!({
        "formula": formula,
        "params": params,
        "v": wd.len(),
        "q": wd.q(),
        "kappa": wd.kappa(),
        "counts": counts,
    })
}

/// `weight,count` rows over the nonzero weights, with a header line.
pub fn distribution_csv(wd: &WeightDistribution) -> String {
    let mut out = String::from("weight,count\n");
    for (w, c) in wd.nonzero() {
        out.push_str(&format!("{w},{c}\n"));
    }
    out
}
