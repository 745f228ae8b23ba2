//! Browser bindings for the static demo page in `www/`.
//!
//! Each export takes plain arguments and returns a JSON string; failures come
//! back as `{"error": ..., "reason": ...}` rather than exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use singvol::catalog;
use singvol::cone::{curve_cone_graph, dyadic_slopes, PolarizedCone};
use singvol::envelope::volume;
use singvol::graph::ResolutionGraph;
use singvol::lattice::{format_rational, parse_rational, qi};
use singvol::Error;

fn render(result: Result<Value, Error>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string(), "reason": e.reason() }).to_string(),
    }
}

fn labelled(g: &ResolutionGraph, d: &[singvol::Rational]) -> Value {
    g.labelled(d).into_iter().map(|(k, v)| json!({ "id": k, "value": v })).collect()
}

fn volume_json(g: &ResolutionGraph) -> Result<Value, Error> {
    let v = volume(g)?;
    let b = g.mumford_pullback_canonical()?;
    Ok(json!({
        "vertices": g.len(),
        "volume": format_rational(&v.volume),
        "is_lc": v.is_lc,
        "b": labelled(g, &b),
        "log_discrepancy": labelled(g, &v.log_discrepancy),
        "P": labelled(g, &v.decomposition.p),
        "N": labelled(g, &v.decomposition.n),
        "active": g.ids(&v.decomposition.active),
        "lc_mod_support": g.ids(&g.lc_modification_support()?),
    }))
}

/// Cone over a genus `g` curve of degree `d`: volume through the graph
/// pipeline next to the closed form `(2g-2)²/d`, plus the volume curve over
/// `d = 1..=d_max` for plotting.
#[wasm_bindgen]
pub fn curve_cone(genus: u32, degree: i32, d_max: i32) -> String {
    render((|| {
        if degree < 1 || d_max < 1 {
            return Err(Error::Domain("degrees must be positive".into()));
        }
        let g = curve_cone_graph(genus, degree as i64)?;
        let mut out = volume_json(&g)?;
        let closed = singvol::lattice::q((2 * genus as i64 - 2).pow(2), degree as i64);
        let closed = if genus >= 2 { closed } else { qi(0) };
        out["closed_form"] = json!(format_rational(&closed));
        let cone = PolarizedCone::curve(genus, degree as i64)?;
        out["lc_boundary"] = serde_json::to_value(cone.lc_boundary_exists()?).expect("serializable");
        let curve: Vec<Value> = (1..=d_max as i64)
            .map(|d| {
                let v = volume(&curve_cone_graph(genus, d)?)?.volume;
                Ok(json!({ "d": d, "volume": format_rational(&v), "approx": approx(&v) }))
            })
            .collect::<Result<_, Error>>()?;
        out["series"] = Value::Array(curve);
        Ok(out)
    })())
}

/// Nef envelope and volume for a catalog name (`E8`, `cusp-4`, ...) or a
/// JSON graph document.
#[wasm_bindgen]
pub fn graph_volume(source: &str) -> String {
    render((|| {
        let source = source.trim();
        let g = if source.starts_with('{') {
            ResolutionGraph::from_json(source)?
        } else {
            catalog::graph(source)?
        };
        volume_json(&g)
    })())
}

/// Bounds on `Vol_m` for the ruled-surface cone polarized by
/// `H = x·C₀ + y·F`, along `a = 2^-k` for `k = 0..=k_max`.
#[wasm_bindgen]
pub fn counterexample_table(h_c0: &str, h_f: &str, k_max: u32) -> String {
    render((|| {
        if k_max > 40 {
            return Err(Error::Domain("k_max must be at most 40".into()));
        }
        let cone = PolarizedCone::ruled_surface_with(parse_rational(h_c0)?, parse_rational(h_f)?)?;
        let report = cone.vol_plus_table(&dyadic_slopes(k_max))?;
        let mut value = serde_json::to_value(&report).expect("serializable");
        value["H_squared"] = json!(format_rational(&cone.h_top_power()));
        let approx_bounds: Vec<f64> = report.rows.iter().map(|r| approx(&r.bound)).collect();
        value["approx_bounds"] = json!(approx_bounds);
        Ok(value)
    })())
}

/// Display-only float for plotting; exact values travel as strings.
fn approx(r: &singvol::Rational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn curve_cone_matches_closed_form() {
        let v = parse(curve_cone(2, 1, 4));
        assert_eq!(v["volume"], "4");
        assert_eq!(v["closed_form"], "4");
        assert_eq!(v["lc_boundary"]["exists"], "false");
        assert_eq!(v["series"].as_array().unwrap().len(), 4);
        assert_eq!(v["series"][1]["volume"], "2");
        assert!(parse(curve_cone(2, 0, 4))["error"].is_string());
    }

    #[test]
    fn graph_volume_sources() {
        assert_eq!(parse(graph_volume("E8"))["volume"], "0");
        assert_eq!(parse(graph_volume("cone-g2-d2"))["volume"], "2");
        let doc = r#"{"vertices":[{"id":"C","self_int":-1,"genus":2}],"edges":[]}"#;
        assert_eq!(parse(graph_volume(doc))["volume"], "4");
        assert_eq!(parse(graph_volume("nope"))["reason"], "malformed_input");
    }

    #[test]
    fn counterexample_bounds() {
        let v = parse(counterexample_table("1", "1", 3));
        let rows = v["rows"].as_array().unwrap();
        let bounds: Vec<&str> = rows.iter().map(|r| r["bound"].as_str().unwrap()).collect();
        assert_eq!(bounds, ["2", "1/4", "1/32", "1/256"]);
        assert_eq!(v["lc_boundary"]["exists"], "false");
        // H = 2C0 + F: H² = 4
        let v = parse(counterexample_table("2", "1", 1));
        assert_eq!(v["H_squared"], "4");
        assert!(parse(counterexample_table("0", "1", 1))["error"].is_string());
    }
}
