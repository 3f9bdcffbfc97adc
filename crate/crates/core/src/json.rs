//! Wire formats: digraphs, representations, verdicts, sweep reports and catalogs.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::harness::catalog::ForbiddenCatalog;
use crate::harness::sweep::SweepReport;
use crate::recognition::{Certificate, Verdict, Witness};
use crate::representation::{format_rational, parse_rational, rational_to_f64, CatchRepresentation, Rational};

/// Version tag carried by every verdict document.
pub const VERDICT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DigraphDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// `{"n": <int>, "edges": [[u, v], ...]}`.
pub fn digraph_to_value(g: &Digraph) -> Value {
    let doc = DigraphDoc { n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() };
    serde_json::to_value(doc).expect("plain data")
}

pub fn digraph_to_json(g: &Digraph) -> String {
    serde_json::to_string_pretty(&digraph_to_value(g)).expect("plain data")
}

/// Parses digraph JSON; duplicate edges, loops and out-of-range vertices are errors.
pub fn digraph_from_json(text: &str) -> Result<Digraph> {
    let doc: DigraphDoc = serde_json::from_str(text).map_err(|e| Error::Parse(format!("digraph JSON: {e}")))?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    Digraph::from_edges(doc.n, &edges)
}

/// A rational written as a string (`"p/q"`, integer or decimal) or a JSON number.
fn rational_from_value(v: &Value, field: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(num) => parse_rational(&num.to_string()),
        _ => Err(Error::Parse(format!("field `{field}` must be a string or number"))),
    }
}

fn round4(r: &Rational) -> f64 {
    (rational_to_f64(r) * 1e4).round() / 1e4
}

/// `{"L": "p/q", "arcs": [{"a", "b", "p"}, ...]}` with exact rational strings.
pub fn representation_to_value(rep: &CatchRepresentation) -> Value {
    let arcs: Vec<Value> = (0..rep.n())
        .map(|v| {
            json!({
                "a": format_rational(&rep.arc(v).a().value()),
                "b": format_rational(&rep.arc(v).b().value()),
                "p": format_rational(&rep.point(v).value()),
            })
        })
        .collect();
    json!({ "L": format_rational(&rep.circumference()), "arcs": arcs })
}

/// The same layout with every position rounded to four decimal places.
pub fn representation_decimals(rep: &CatchRepresentation) -> Value {
    let arcs: Vec<Value> = (0..rep.n())
        .map(|v| {
            json!({
                "a": round4(&rep.arc(v).a().value()),
                "b": round4(&rep.arc(v).b().value()),
                "p": round4(&rep.point(v).value()),
            })
        })
        .collect();
    json!({ "L": round4(&rep.circumference()), "arcs": arcs })
}

pub fn representation_to_json(rep: &CatchRepresentation) -> String {
    serde_json::to_string_pretty(&representation_to_value(rep)).expect("plain data")
}

pub fn representation_from_value(v: &Value) -> Result<CatchRepresentation> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("representation must be an object".into()))?;
    if let Some(k) = obj.keys().find(|k| *k != "L" && *k != "arcs") {
        return Err(Error::Parse(format!("unknown field `{k}`")));
    }
    let l = rational_from_value(obj.get("L").ok_or_else(|| Error::Parse("missing field `L`".into()))?, "L")?;
    let arcs = obj
        .get("arcs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing array `arcs`".into()))?;
    let mut triples = Vec::with_capacity(arcs.len());
    for (i, arc) in arcs.iter().enumerate() {
        let get = |key: &str| -> Result<Rational> {
            let field = arc.get(key).ok_or_else(|| Error::Parse(format!("arc {i}: missing field `{key}`")))?;
            rational_from_value(field, key)
        };
        triples.push((get("a")?, get("b")?, get("p")?));
    }
    CatchRepresentation::from_triples(l, &triples)
}

pub fn representation_from_json(text: &str) -> Result<CatchRepresentation> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("representation JSON: {e}")))?;
    representation_from_value(&v)
}

/// Versioned verdict document for the recognizer named `class`.
pub fn verdict_to_value(class: &str, verdict: &Verdict) -> Value {
    let mut doc = json!({
        "version": VERDICT_SCHEMA_VERSION,
        "class": class,
        "accepted": verdict.is_accepted(),
    });
    match verdict {
        Verdict::Accepted(Certificate::Representation { ordering, representation }) => {
            doc["certificate"] = json!({
                "ordering": ordering.as_slice(),
                "representation": representation_to_value(representation),
                "decimal": representation_decimals(representation),
                "proper": representation.is_proper(),
            });
        }
        Verdict::Accepted(Certificate::Path(path)) => {
            doc["certificate"] = json!({ "path": path });
        }
        Verdict::Rejected(Witness::Exhausted { candidates, detail }) => {
            doc["witness"] = json!({ "kind": "exhausted", "candidates": candidates, "detail": detail });
        }
        Verdict::Rejected(Witness::Forbidden { name, vertices }) => {
            doc["witness"] = json!({ "kind": "forbidden", "name": name, "vertices": vertices });
        }
    }
    doc
}

pub fn report_to_value(r: &SweepReport) -> Value {
    let counterexamples: Vec<Value> = r
        .counterexamples
        .iter()
        .map(|c| json!({ "digraph": digraph_to_value(&c.graph), "detail": c.detail }))
        .collect();
    json!({
        "check": r.check,
        "n": r.n,
        "instances": r.instances,
        "failures": r.failures,
        "counterexamples": counterexamples,
        "stats": r.stats,
        "elapsed_ms": r.elapsed_ms as u64,
    })
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

/// Writes `<label>.json` (digraph) and `<label>.meta.json` (annotations) per member, plus `summary.json`.
/// Returns the written paths.
pub fn write_catalog(catalog: &ForbiddenCatalog, dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    fs::create_dir_all(dir).map_err(io)?;
    let mut written = Vec::new();
    let mut labels = Vec::new();
    for (idx, m) in catalog.members.iter().enumerate() {
        let label = m.label(idx);
        let graph_path = dir.join(format!("{label}.json"));
        fs::write(&graph_path, digraph_to_json(&m.graph)).map_err(io)?;
        let meta = json!({
            "label": label,
            "n": m.graph.n(),
            "matches": m.matches,
            "canonical": m.canonical.iter().map(|b| format!("{b:02x}")).collect::<String>(),
        });
        let meta_path = dir.join(format!("{label}.meta.json"));
        fs::write(&meta_path, serde_json::to_string_pretty(&meta).expect("plain data")).map_err(io)?;
        written.push(graph_path);
        written.push(meta_path);
        labels.push(label);
    }
    let classes: serde_json::Map<String, Value> =
        catalog.classes_scanned.iter().map(|(n, c)| (n.to_string(), json!(c))).collect();
    let per_size: serde_json::Map<String, Value> =
        catalog.classes_scanned.keys().map(|&n| (n.to_string(), json!(catalog.members_on(n)))).collect();
    let summary = json!({ "classes_scanned": classes, "members_per_size": per_size, "members": labels });
    let summary_path = dir.join("summary.json");
    fs::write(&summary_path, serde_json::to_string_pretty(&summary).expect("plain data")).map_err(io)?;
    written.push(summary_path);
    Ok(written)
}
