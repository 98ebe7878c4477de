//! JSON and DOT serialization of plane topologies.
//!
//! Rational endpoints are emitted as exact `"num/den"` strings so output is
//! byte-identical across runs.

use serde_json::{json, Value};

use crate::poly::Rational;
use crate::roots::XPoint;

use super::PlaneTopology;

pub(crate) fn rational_str(r: &Rational) -> String {
    if r.denom() == &num_bigint::BigInt::from(1) {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn xpoint_json(x: &XPoint) -> Value {
    match x {
        XPoint::Rational(r) => json!({ "kind": "rational", "value": rational_str(r) }),
        XPoint::Algebraic(a) => json!({
            "kind": "algebraic",
            "interval": [rational_str(a.interval().lo()), rational_str(a.interval().hi())],
        }),
    }
}

/// JSON form: vertices with interval coordinates, edges as index pairs.
pub fn plane_to_json(t: &PlaneTopology) -> Value {
    let mut vertices = Vec::new();
    for (fi, f) in t.fibers.iter().enumerate() {
        for (pi, p) in f.points.iter().enumerate() {
            vertices.push(json!({
                "id": t.vertex_id((fi, pi)),
                "fiber": fi,
                "x": xpoint_json(&f.x),
                "y": [rational_str(p.y.lo()), rational_str(p.y.hi())],
                "critical": p.is_critical,
                "branch_left": p.branch_left,
                "branch_right": p.branch_right,
            }));
        }
    }
    let edges: Vec<Value> = t
        .edges
        .iter()
        .map(|(a, b)| json!([t.vertex_id(*a), t.vertex_id(*b)]))
        .collect();
    json!({
        "schema": 1,
        "curve": format!("{}", t.polynomial()),
        "vertices": vertices,
        "edges": edges,
        "components": t.component_count(),
        "betti": t.betti(),
    })
}

/// DOT form with one rank per fiber.
pub fn plane_to_dot(t: &PlaneTopology) -> String {
    let mut out = String::from("graph plane_topology {\n  rankdir=LR;\n");
    for (fi, f) in t.fibers.iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_f{} {{\n    rank=same;\n", fi));
        for (pi, p) in f.points.iter().enumerate() {
            let id = t.vertex_id((fi, pi));
            let shape = if p.is_critical { "doublecircle" } else { "circle" };
            out.push_str(&format!(
                "    v{} [shape={}, label=\"f{}p{}\"];\n",
                id, shape, fi, pi
            ));
        }
        out.push_str("  }\n");
    }
    for (a, b) in &t.edges {
        out.push_str(&format!("  v{} -- v{};\n", t.vertex_id(*a), t.vertex_id(*b)));
    }
    out.push_str("}\n");
    out
}
