//! Human tables and the documented JSON forms. All output is sorted by
//! the canonical weight order, so identical invocations are byte
//! identical.

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use weylchar::charac::CharacterPoly;
use weylchar::permw::PermutationWeightSet;
use weylchar::subalg::RhoDecomposition;
use weylchar::weylorb::SignedWeight;
use weylchar::Weight;

fn weight_json(w: &Weight) -> Value {
    serde_json::to_value(w).expect("weight serialization is infallible")
}

pub fn orbit_human(seed: &Weight, weights: &[Weight]) -> String {
    let mut out = format!(
        "orbit of {} in {}: {} weights\n",
        seed,
        seed.algebra(),
        weights.len()
    );
    for w in weights {
        out.push_str(&format!("{w}\n"));
    }
    out
}

pub fn orbit_json(seed: &Weight, weights: &[Weight]) -> Value {
    json!({
        "algebra": seed.algebra().to_string(),
        "seed": weight_json(seed),
        "size": weights.len(),
        "signed": false,
        "weights": weights.iter().map(weight_json).collect::<Vec<_>>(),
    })
}

pub fn signed_orbit_human(seed: &Weight, signed: &[SignedWeight]) -> String {
    let mut out = format!(
        "signed orbit of {} in {}: {} weights\n",
        seed,
        seed.algebra(),
        signed.len()
    );
    for s in signed {
        let sign = if s.sign >= 0 { '+' } else { '-' };
        out.push_str(&format!("{sign} {}\n", s.weight));
    }
    out
}

pub fn signed_orbit_json(seed: &Weight, signed: &[SignedWeight]) -> Value {
    json!({
        "algebra": seed.algebra().to_string(),
        "seed": weight_json(seed),
        "size": signed.len(),
        "signed": true,
        "weights": signed
            .iter()
            .map(|s| {
                let mut v = weight_json(&s.weight);
                v["sign"] = json!(s.sign);
                v
            })
            .collect::<Vec<_>>(),
    })
}

pub fn permweights_human(pw: &PermutationWeightSet) -> String {
    let mut out = format!(
        "{} permutation weights of {} in {}, node {} deleted\n",
        pw.len(),
        pw.source_seed(),
        pw.algebra(),
        pw.deleted_node()
    );
    for w in pw.members() {
        out.push_str(&format!("{w}\n"));
    }
    out
}

pub fn permweights_json(pw: &PermutationWeightSet) -> Value {
    json!({
        "algebra": pw.algebra().to_string(),
        "deleted_node": pw.deleted_node(),
        "seed": weight_json(pw.source_seed()),
        "size": pw.len(),
        "members": pw.members().iter().map(weight_json).collect::<Vec<_>>(),
    })
}

pub fn rho_table_human(dec: &RhoDecomposition) -> String {
    let mut out = String::new();
    let width = dec.len().to_string().len();
    for (k, pair) in dec.pairs().iter().enumerate() {
        out.push_str(&format!(
            "rho({:>width$}) = {}   r = {}\n",
            k + 1,
            pair.plus,
            pair.r,
        ));
    }
    out
}

pub fn rho_table_json(dec: &RhoDecomposition) -> Value {
    json!({
        "pairs": dec
            .pairs()
            .iter()
            .map(|pair| {
                json!({
                    "sigma": pair
                        .sigma_pp
                        .parts()
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>(),
                    "r": pair.r.to_string(),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn character_human(ch: &CharacterPoly) -> String {
    let mut out = String::new();
    for (w, m) in ch.multiplicities() {
        out.push_str(&format!("{w}  x {m}\n"));
    }
    out.push_str(&format!("dim = {}\n", ch.dimension()));
    out
}

pub fn character_json(ch: &CharacterPoly) -> Value {
    let dim = ch
        .dimension()
        .to_u64()
        .map(|d| json!(d))
        .unwrap_or_else(|| json!(ch.dimension().to_string()));
    json!({
        "weights": ch
            .multiplicities()
            .iter()
            .map(|(w, m)| {
                json!({
                    "coords": w.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "mult": m,
                })
            })
            .collect::<Vec<_>>(),
        "dim": dim,
    })
}
