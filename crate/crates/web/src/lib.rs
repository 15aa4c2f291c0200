//! Browser entry points. Each operation takes plain strings and returns a JSON
//! document; failures come back as `{"error": "..."}` so the page never has to
//! catch exceptions.

use std::collections::BTreeMap;

use gkmin::dyckpar::{depth, is_dyck, level, strip_layers, SkewPartition};
use gkmin::langlands::{gk_dim_class, parameter_from};
use gkmin::symgroup::{bracket_set, v_cycle, y_index};
use gkmin::tableaux::{minimal_element, rs, two_column_shape};
use gkmin::weights::{bernstein_c, dim_f, WeightVector};
use gkmin::{json, Error, Permutation, Rational, Result};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest degree accepted from the page; keeps every operation interactive.
pub const MAX_WEB_N: usize = 12;

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_WEB_N {
        return Err(Error::ResourceLimit(format!("the demo accepts n <= {MAX_WEB_N}, got {n}")));
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut pos = 0;
    let mut parts = Vec::new();
    for tok in s.split(',') {
        let t = tok.trim();
        parts.push(t.parse().map_err(|_| Error::Parse { pos, msg: format!("bad part {t:?}") })?);
        pos += tok.len() + 1;
    }
    Ok(parts)
}

/// Tableaux of `perm`, and for elements of the two-column cell its minimal element `y_k`.
pub fn rs_report(perm: &str) -> Result<Value> {
    let w: Permutation = perm.parse()?;
    check_degree(w.degree())?;
    let (p, q) = rs(&w);
    let in_cell = w.degree() >= 2 && p.shape() == two_column_shape(w.degree());
    let mut out = json!({
        "perm": w.to_string(),
        "P": p.to_json(),
        "Q": q.to_json(),
        "shape": p.shape().to_json(),
        "in_two_column_cell": in_cell,
    });
    if in_cell {
        let m = minimal_element(&w)?;
        out["minimal_element"] = json!(m.to_string());
        out["minimal_index"] = json!(y_index(&m));
    }
    Ok(out)
}

/// Boxes of `outer \ inner` with levels and strip layers, plus the Dyck verdict and depth.
pub fn dyck_report(outer: &str, inner: &str) -> Result<Value> {
    let eta = SkewPartition::from_parts(&parse_parts(outer)?, &parse_parts(inner)?)?;
    if eta.outer().size() > MAX_WEB_N * MAX_WEB_N {
        return Err(Error::ResourceLimit(format!("outer shape has more than {} boxes", MAX_WEB_N * MAX_WEB_N)));
    }
    let boxes = eta.boxes();
    let layers = strip_layers(&boxes);
    let layer_of = |c| layers.iter().position(|l| l.contains(c)).expect("layers partition the boxes");
    let cells: Vec<Value> =
        boxes.iter().map(|c| json!({"row": c.0, "col": c.1, "level": level(c), "layer": layer_of(c)})).collect();
    Ok(json!({
        "outer": eta.outer().to_json(),
        "inner": eta.inner().to_json(),
        "size": eta.size(),
        "boxes": cells,
        "layers": layers.len(),
        "components": boxes.components().len(),
        "dyck": is_dyck(&eta),
        "depth": depth(&eta),
    }))
}

/// Bernstein degrees of the minimal constituents and the table `dim F_{i,j}`, with the
/// degree identity checked entry by entry.
pub fn bernstein_report(lambda: &str) -> Result<Value> {
    let lambda = WeightVector::parse(lambda)?;
    let n = lambda.degree();
    check_degree(n)?;
    let mut cells = Vec::new();
    let mut table = BTreeMap::new();
    for k in 2..=n {
        for l in 2..=n {
            let v = v_cycle(k, l, n)?;
            let c = bernstein_c(&v, &lambda)?;
            let mut cell = json!({"k": k, "l": l, "c": json::rational(&c)});
            // γ_{λ,v} is only a parameter when every a_s - b_t is integral
            if let Ok(gamma) = parameter_from(&lambda, &v) {
                let class = gk_dim_class(&gamma)?;
                cell["class"] = json!(class.name());
                cell["gk_dim"] = json!(class.gk_dim(n));
            }
            cells.push(cell);
            table.insert((k, l), c);
        }
    }
    let mut dims = Vec::new();
    let mut identity_holds = true;
    for i in 1..=n {
        let mut row = Vec::new();
        for j in 1..=n {
            let d = dim_f(i, j, &lambda)?;
            let mut sum = Rational::default();
            for k in bracket_set(i, n)? {
                for l in bracket_set(j, n)? {
                    sum += &table[&(k, l)];
                }
            }
            identity_holds &= sum == d;
            row.push(json::rational(&d));
        }
        dims.push(Value::Array(row));
    }
    Ok(json!({
        "lambda": lambda.to_json(),
        "n": n,
        "bernstein": cells,
        "dim_F": dims,
        "degree_identity": identity_holds,
    }))
}

fn respond(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({"error": e.to_string()}).to_string(),
    }
}

#[wasm_bindgen]
pub fn rs_tableaux(perm: &str) -> String {
    respond(rs_report(perm))
}

#[wasm_bindgen]
pub fn dyck_skew(outer: &str, inner: &str) -> String {
    respond(dyck_report(outer, inner))
}

#[wasm_bindgen]
pub fn bernstein_degrees(lambda: &str) -> String {
    respond(bernstein_report(lambda))
}
