//! Deterministic reproduction reports.
//!
//! The fano-lines report assembles the computed invariants of the variety of
//! lines, the two-endpoint gap analysis with its symbolic interval
//! certificate, and the catalog flags into a single JSON document. All maps
//! are ordered (alphabetical keys) and all rationals are canonical `p/q`
//! strings, so the output is byte-identical across runs.

use crate::catalog;
use crate::cone::{gap_report, Cone2, GapReport, Pairing2, Ray2};
use crate::error::Error;
use crate::fano::FanoModel;
use crate::rational::{format_rational, rat, rat_int};
use serde_json::{json, Value};

const CORE_VERSION: &str = env!("CARGO_PKG_VERSION");

fn ray_json(r: &Ray2) -> Value {
    json!([r.x().to_string(), r.y().to_string()])
}

fn cone_json(c: &Cone2) -> Value {
    Value::Array(c.rays().iter().map(ray_json).collect())
}

fn gap_json(gap: &GapReport) -> Value {
    let endpoints: Vec<Value> = gap
        .endpoints
        .iter()
        .map(|e| {
            let dual_rays: Vec<Value> = e
                .dual_ray_pairings
                .iter()
                .map(|(ray, vs_c, vs_gen)| {
                    json!({
                        "ray": ray_json(ray),
                        "vs_c": format_rational(vs_c),
                        "vs_generator": format_rational(vs_gen),
                    })
                })
                .collect();
            json!({
                "c2_nef_against_eff": e.c2_nef_against_eff,
                "c2_vs_c": format_rational(&e.c2_vs_c),
                "c2_vs_generator": format_rational(&e.c2_vs_generator),
                "containment": e.containment.as_str(),
                "dual_rays": dual_rays,
                "eff_rays": cone_json(&e.eff),
                "lambda": format_rational(&e.lambda),
            })
        })
        .collect();

    let cert = &gap.certificate;
    let pairings: Vec<Value> = cert
        .pairings
        .iter()
        .map(|p| {
            json!({
                "degree": p.poly.degree(),
                "name": p.name,
                "poly": p.poly.render(),
            })
        })
        .collect();

    json!({
        "certificate": {
            "all_affine": cert.all_affine,
            "dual_rays_nef_on_interval": cert.dual_rays_nef_on_interval,
            "eff_monotone_on_interval": cert.eff_monotone_on_interval,
            "gram_at_upper_endpoint_positive": cert.gram_at_hi_positive,
            "interval_certified": cert.interval_certified,
            "note": "every listed pairing is affine in l, so endpoint signs certify the whole interval",
            "pairings": pairings,
            "witness": {
                "coord_on_c": cert.witness_coord_on_c.render(),
                "coord_on_generator": cert.witness_coord_on_generator.render(),
                "outside_eff_on_interval": cert.witness_outside_eff_on_interval,
                "ray": ray_json(&cert.witness),
            },
        },
        "endpoints": endpoints,
        "lambda_endpoints": [
            format_rational(&gap.lambda_lo),
            format_rational(&gap.lambda_hi),
        ],
        "nef_strictly_exceeds_eff": gap.nef_strictly_exceeds_eff,
    })
}

/// The full fano-lines reproduction report.
pub fn fano_lines_report() -> Result<Value, Error> {
    let model = FanoModel::new()?;
    let pairing = Pairing2::new(model.pairing_matrix().clone())?;
    let c2 = model.c2();
    let lambda_lo = rat_int(1);
    let lambda_hi = rat(8, 5);
    let gap = gap_report(
        &pairing,
        (&lambda_lo, &lambda_hi),
        &(c2.g2.clone(), c2.c.clone()),
    )?;

    let m = model.pairing_matrix();
    let matrix_json: Vec<Value> = m
        .iter()
        .map(|row| Value::Array(row.iter().map(|v| json!(format_rational(v))).collect()))
        .collect();

    let flags: Vec<Value> = catalog::list_entries("fano-lines")?
        .iter()
        .map(catalog::CatalogEntry::to_json)
        .collect();

    Ok(json!({
        "computed": {
            "c1_g": format_rational(&model.chern_classes_of_x().c1_g),
            "c2": [format_rational(&c2.g2), format_rational(&c2.c)],
            "fundamental_class": model.fundamental_class().to_string(),
            "gap": gap_json(&gap),
            "intersection_numbers": {
                "c.c": format_rational(&m[1][1]),
                "g2.c": format_rational(&m[0][1]),
                "g2.g2": format_rational(&m[0][0]),
            },
            "pairing_matrix": matrix_json,
        },
        "flags": flags,
        "inputs": {
            "lambda_endpoints": [format_rational(&lambda_lo), format_rational(&lambda_hi)],
            "variety": "fano-lines",
        },
        "versions": {
            "cyclecone-core": CORE_VERSION,
        },
    }))
}

/// Pretty-printed report with a trailing newline; the byte-exact CLI output.
pub fn fano_lines_report_string() -> Result<String, Error> {
    let value = fano_lines_report()?;
    let mut s = serde_json::to_string_pretty(&value)
        .map_err(|e| Error::Internal(format!("report serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}
