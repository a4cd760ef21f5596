//! Text and JSON rendering of core types.
//!
//! JSON objects are built with `serde_json`'s default map, which keeps
//! keys sorted; exact rationals are rendered as strings (`"3/2"`), never
//! floats. Both renderings are deterministic down to the byte.

use serde_json::{json, Value};

use superpose_core::monomial::OrbitSummand;
use superpose_core::oracle::TupleOrbitReport;
use superpose_core::{CycleIndexPoly, CycloNum, PermGroup};

pub fn cyclo_json(c: &CycloNum) -> Value {
    // minimal order keeps the rendering canonical regardless of which
    // arithmetic path produced the value
    let c = c.to_minimal_order();
    json!({
        "order": c.order(),
        "coeffs": c.coeffs().iter().map(|q| q.to_string()).collect::<Vec<String>>(),
    })
}

pub fn poly_json(poly: &CycleIndexPoly) -> Value {
    let terms: Vec<Value> = poly
        .terms()
        .iter()
        .map(|(t, c)| {
            json!({
                "type": t.counts(),
                "coeff": cyclo_json(c),
            })
        })
        .collect();
    json!({
        "degree": poly.degree(),
        "terms": terms,
    })
}

pub fn group_json(group: &PermGroup) -> Value {
    json!({
        "degree": group.degree(),
        "order": group.order(),
        "generators": group
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<String>>(),
    })
}

pub fn group_text(group: &PermGroup) -> String {
    let mut out = format!("degree {}\norder {}\ngenerators:\n", group.degree(), group.order());
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn summand_json(s: &OrbitSummand) -> Value {
    json!({
        "rep": s.rep_indices(),
        "orbit_size": s.orbit_size(),
        "stabilizer_order": s.stabilizer().order(),
        "stabilizer_gens": s
            .stabilizer()
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<String>>(),
        "psi_trivial": s.psi_trivial(),
    })
}

pub fn summand_text(index: usize, s: &OrbitSummand) -> String {
    let gens: Vec<String> = s
        .stabilizer()
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect();
    format!(
        "summand {index}: rep={:?} orbit_size={} stabilizer_order={} stabilizer_gens=[{}] psi_trivial={}",
        s.rep_indices(),
        s.orbit_size(),
        s.stabilizer().order(),
        gens.join(", "),
        s.psi_trivial()
    )
}

pub fn oracle_json(report: &TupleOrbitReport) -> Value {
    json!({
        "degree": report.degree,
        "factors": report.factors,
        "class_count": report.class_count,
        "class_reps": report
            .class_reps
            .iter()
            .map(|tuple| tuple.iter().map(|p| p.to_string()).collect::<Vec<String>>())
            .collect::<Vec<Vec<String>>>(),
        "class_sizes": report.class_sizes,
    })
}
