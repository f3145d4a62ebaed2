//! The shared JSON document format: parsing with positioned syntax errors,
//! canonical (byte-stable) serialization, and report payloads.
//!
//! Schema: `{"kind": "double_category", "objects": [...], "hmor":
//! [{"name","src","tgt"}...], "vmor": [...], "hcomp": [[g, f, gf]...],
//! "vcomp": [...], "squares": [{"name","top","bottom","left","right"}...],
//! "sq_hcomp": [[a, b, ab]...], "sq_vcomp": [...]}`. Identity cells and the
//! table entries forced by the unit laws may be omitted. A `hcomp` entry
//! `[g, f, gf]` records the composite `g` after `f`; the square entries are
//! in application order, `[a, b, a|b]` and `[a, b, a/b]`.

use crate::classifiers::{AuditReport, FibrancyTable};
use crate::core::*;
use crate::equivalences::CheckReport;
use crate::lifting::LiftOutcome;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("syntax error at line {line}, column {col}: {detail}")]
    Syntax {
        line: usize,
        col: usize,
        detail: String,
    },
    #[error("unknown document kind {0:?}")]
    UnknownKind(String),
    #[error("schema error: {0}")]
    Schema(String),
}

/// A parsed document; identifier resolution is deferred to the validators.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    DoubleCategory(RawDoubleCategory),
    TwoCategory(RawDoubleCategory),
    DoubleFunctor(FunctorDocument),
    Presentation(PresentationDocument),
    GeneratingSetRef(String),
    Report(Value),
}

/// A functor document references its endpoints by path.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctorDocument {
    pub source: String,
    pub target: String,
    pub data: RawFunctorData,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PresentationDocument {
    pub base: RawDoubleCategory,
    pub new_objects: Vec<String>,
    pub new_hmor: Vec<(String, String, String)>,
    pub new_vmor: Vec<(String, String, String)>,
    pub new_squares: Vec<(String, String, String, String, String)>,
    pub identify_squares: Vec<(String, String)>,
}

pub fn parse_document(text: &str) -> Result<Document, IoError> {
    let value: Value = serde_json::from_str(text).map_err(|e| IoError::Syntax {
        line: e.line(),
        col: e.column(),
        detail: e.to_string(),
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| IoError::Schema("top level must be an object".to_string()))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| IoError::Schema("missing \"kind\" field".to_string()))?;
    match kind {
        "double_category" => Ok(Document::DoubleCategory(parse_dc_payload(obj)?)),
        "two_category" => Ok(Document::TwoCategory(parse_dc_payload(obj)?)),
        "double_functor" => {
            let source = str_field(obj, "source")?;
            let target = str_field(obj, "target")?;
            let data = RawFunctorData {
                on_objects: string_map(obj, "on_objects")?,
                on_hmor: string_map(obj, "on_hmor")?,
                on_vmor: string_map(obj, "on_vmor")?,
                on_squares: string_map(obj, "on_squares")?,
            };
            Ok(Document::DoubleFunctor(FunctorDocument {
                source,
                target,
                data,
            }))
        }
        "presentation" => {
            let base = obj
                .get("base")
                .and_then(Value::as_object)
                .ok_or_else(|| IoError::Schema("presentation needs a \"base\" object".into()))?;
            Ok(Document::Presentation(PresentationDocument {
                base: parse_dc_payload(base)?,
                new_objects: string_list(obj, "new_objects")?,
                new_hmor: mor_records(obj, "new_hmor")?,
                new_vmor: mor_records(obj, "new_vmor")?,
                new_squares: square_records(obj, "new_squares")?,
                identify_squares: pair_list(obj, "identify_squares")?,
            }))
        }
        "generating_set_ref" => Ok(Document::GeneratingSetRef(str_field(obj, "set")?)),
        "report" => Ok(Document::Report(value.clone())),
        other => Err(IoError::UnknownKind(other.to_string())),
    }
}

fn str_field(obj: &Map<String, Value>, key: &str) -> Result<String, IoError> {
    obj.get(key)
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| IoError::Schema(format!("missing string field {key:?}")))
}

fn string_list(obj: &Map<String, Value>, key: &str) -> Result<Vec<String>, IoError> {
    match obj.get(key) {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| IoError::Schema(format!("{key:?} entries must be strings")))
            })
            .collect(),
        Some(_) => Err(IoError::Schema(format!("{key:?} must be an array"))),
    }
}

fn string_map(obj: &Map<String, Value>, key: &str) -> Result<Vec<(String, String)>, IoError> {
    match obj.get(key) {
        None => Ok(Vec::new()),
        Some(Value::Object(m)) => Ok(m
            .iter()
            .map(|(k, v)| {
                v.as_str()
                    .map(|s| (k.clone(), s.to_string()))
                    .ok_or_else(|| IoError::Schema(format!("{key:?} values must be strings")))
            })
            .collect::<Result<Vec<_>, _>>()?),
        Some(_) => Err(IoError::Schema(format!("{key:?} must be an object"))),
    }
}

fn mor_records(
    obj: &Map<String, Value>,
    key: &str,
) -> Result<Vec<(String, String, String)>, IoError> {
    match obj.get(key) {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .map(|v| {
                let m = v
                    .as_object()
                    .ok_or_else(|| IoError::Schema(format!("{key:?} entries must be objects")))?;
                Ok((str_field(m, "name")?, str_field(m, "src")?, str_field(m, "tgt")?))
            })
            .collect(),
        Some(_) => Err(IoError::Schema(format!("{key:?} must be an array"))),
    }
}

fn square_records(
    obj: &Map<String, Value>,
    key: &str,
) -> Result<Vec<(String, String, String, String, String)>, IoError> {
    match obj.get(key) {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .map(|v| {
                let m = v
                    .as_object()
                    .ok_or_else(|| IoError::Schema(format!("{key:?} entries must be objects")))?;
                Ok((
                    str_field(m, "name")?,
                    str_field(m, "top")?,
                    str_field(m, "bottom")?,
                    str_field(m, "left")?,
                    str_field(m, "right")?,
                ))
            })
            .collect(),
        Some(_) => Err(IoError::Schema(format!("{key:?} must be an array"))),
    }
}

fn triple_list(
    obj: &Map<String, Value>,
    key: &str,
) -> Result<Vec<(String, String, String)>, IoError> {
    match obj.get(key) {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .map(|v| {
                let arr = v
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .ok_or_else(|| IoError::Schema(format!("{key:?} entries must be triples")))?;
                let s = |i: usize| -> Result<String, IoError> {
                    arr[i]
                        .as_str()
                        .map(str::to_string)
                        .ok_or_else(|| IoError::Schema(format!("{key:?} entries must be strings")))
                };
                Ok((s(0)?, s(1)?, s(2)?))
            })
            .collect(),
        Some(_) => Err(IoError::Schema(format!("{key:?} must be an array"))),
    }
}

fn pair_list(obj: &Map<String, Value>, key: &str) -> Result<Vec<(String, String)>, IoError> {
    match obj.get(key) {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .map(|v| {
                let arr = v
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| IoError::Schema(format!("{key:?} entries must be pairs")))?;
                let s = |i: usize| -> Result<String, IoError> {
                    arr[i]
                        .as_str()
                        .map(str::to_string)
                        .ok_or_else(|| IoError::Schema(format!("{key:?} entries must be strings")))
                };
                Ok((s(0)?, s(1)?))
            })
            .collect(),
        Some(_) => Err(IoError::Schema(format!("{key:?} must be an array"))),
    }
}

fn parse_dc_payload(obj: &Map<String, Value>) -> Result<RawDoubleCategory, IoError> {
    let mut raw = RawDoubleCategory::new();
    raw.objects = string_list(obj, "objects")?;
    raw.hmor = mor_records(obj, "hmor")?;
    raw.vmor = mor_records(obj, "vmor")?;
    // schema order [g, f, gf] means g after f
    raw.hcomp = triple_list(obj, "hcomp")?
        .into_iter()
        .map(|(g, f, c)| (f, g, c))
        .collect();
    raw.vcomp = triple_list(obj, "vcomp")?
        .into_iter()
        .map(|(g, f, c)| (f, g, c))
        .collect();
    raw.squares = square_records(obj, "squares")?;
    raw.sq_hcomp = triple_list(obj, "sq_hcomp")?;
    raw.sq_vcomp = triple_list(obj, "sq_vcomp")?;
    Ok(raw)
}

/// Serialize a validated double category in canonical form: every identity
/// explicit, sets in canonical order, table entries sorted, keys sorted.
pub fn double_category_value(d: &DoubleCategory, kind: &str) -> Value {
    let mors = |items: Vec<(&str, &str, &str)>| -> Value {
        Value::Array(
            items
                .into_iter()
                .map(|(n, s, t)| json!({"name": n, "src": s, "tgt": t}))
                .collect(),
        )
    };
    let hmor = mors(
        d.hmors()
            .map(|h| {
                let m = d.hmor(h);
                (
                    m.name.as_str(),
                    d.object_name(m.src),
                    d.object_name(m.tgt),
                )
            })
            .collect(),
    );
    let vmor = mors(
        d.vmors()
            .map(|v| {
                let m = d.vmor(v);
                (
                    m.name.as_str(),
                    d.object_name(m.src),
                    d.object_name(m.tgt),
                )
            })
            .collect(),
    );
    let squares = Value::Array(
        d.squares()
            .map(|s| {
                let sq = d.square(s);
                json!({
                    "name": sq.name,
                    "top": d.hmor(sq.top).name,
                    "bottom": d.hmor(sq.bottom).name,
                    "left": d.vmor(sq.left).name,
                    "right": d.vmor(sq.right).name,
                })
            })
            .collect(),
    );
    let mut hcomp: Vec<((usize, usize), Value)> = d
        .hcomp
        .iter()
        .map(|(&(f, g), &c)| {
            (
                (f.0, g.0),
                json!([d.hmor(g).name, d.hmor(f).name, d.hmor(c).name]),
            )
        })
        .collect();
    hcomp.sort_by_key(|(k, _)| *k);
    let mut vcomp: Vec<((usize, usize), Value)> = d
        .vcomp
        .iter()
        .map(|(&(u, w), &c)| {
            (
                (u.0, w.0),
                json!([d.vmor(w).name, d.vmor(u).name, d.vmor(c).name]),
            )
        })
        .collect();
    vcomp.sort_by_key(|(k, _)| *k);
    let mut sq_h: Vec<((usize, usize), Value)> = d
        .sq_h
        .iter()
        .map(|(&(a, b), &c)| {
            (
                (a.0, b.0),
                json!([d.square(a).name, d.square(b).name, d.square(c).name]),
            )
        })
        .collect();
    sq_h.sort_by_key(|(k, _)| *k);
    let mut sq_v: Vec<((usize, usize), Value)> = d
        .sq_v
        .iter()
        .map(|(&(a, b), &c)| {
            (
                (a.0, b.0),
                json!([d.square(a).name, d.square(b).name, d.square(c).name]),
            )
        })
        .collect();
    sq_v.sort_by_key(|(k, _)| *k);

    json!({
        "kind": kind,
        "objects": d.objects().map(|o| d.object_name(o)).collect::<Vec<_>>(),
        "hmor": hmor,
        "vmor": vmor,
        "hcomp": Value::Array(hcomp.into_iter().map(|(_, v)| v).collect()),
        "vcomp": Value::Array(vcomp.into_iter().map(|(_, v)| v).collect()),
        "squares": squares,
        "sq_hcomp": Value::Array(sq_h.into_iter().map(|(_, v)| v).collect()),
        "sq_vcomp": Value::Array(sq_v.into_iter().map(|(_, v)| v).collect()),
    })
}

pub fn serialize_double_category(d: &DoubleCategory) -> String {
    pretty(&double_category_value(d, "double_category"))
}

pub fn serialize_two_category(c: &TwoCategory) -> String {
    pretty(&double_category_value(c.as_double(), "two_category"))
}

/// Serialize a functor document; endpoints are referenced by path.
pub fn functor_value(f: &DoubleFunctor, source: &str, target: &str) -> Value {
    let (src, tgt) = (f.source(), f.target());
    let objects: Map<String, Value> = src
        .objects()
        .map(|o| {
            (
                src.object_name(o).to_string(),
                Value::String(tgt.object_name(f.on_object(o)).to_string()),
            )
        })
        .collect();
    let hmor: Map<String, Value> = src
        .hmors()
        .map(|h| {
            (
                src.hmor(h).name.clone(),
                Value::String(tgt.hmor(f.on_hmor(h)).name.clone()),
            )
        })
        .collect();
    let vmor: Map<String, Value> = src
        .vmors()
        .map(|v| {
            (
                src.vmor(v).name.clone(),
                Value::String(tgt.vmor(f.on_vmor(v)).name.clone()),
            )
        })
        .collect();
    let squares: Map<String, Value> = src
        .squares()
        .map(|s| {
            (
                src.square(s).name.clone(),
                Value::String(tgt.square(f.on_square(s)).name.clone()),
            )
        })
        .collect();
    json!({
        "kind": "double_functor",
        "source": source,
        "target": target,
        "on_objects": objects,
        "on_hmor": hmor,
        "on_vmor": vmor,
        "on_squares": squares,
    })
}

pub fn presentation_value(p: &crate::colimits::Presentation) -> Value {
    json!({
        "kind": "presentation",
        "base": strip_kind(double_category_value(&p.base, "double_category")),
        "new_objects": p.new_objects,
        "new_hmor": p.new_hmor.iter().map(|(n, s, t)| json!({"name": n, "src": s, "tgt": t})).collect::<Vec<_>>(),
        "new_vmor": p.new_vmor.iter().map(|(n, s, t)| json!({"name": n, "src": s, "tgt": t})).collect::<Vec<_>>(),
        "new_squares": p.new_squares.iter().map(|(n, t, b, l, r)| json!({
            "name": n, "top": t, "bottom": b, "left": l, "right": r,
        })).collect::<Vec<_>>(),
        "identify_squares": p.identify_squares.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

fn strip_kind(mut v: Value) -> Value {
    if let Some(obj) = v.as_object_mut() {
        obj.remove("kind");
    }
    v
}

pub fn fibrancy_value(t: &FibrancyTable) -> Value {
    json!({
        "kind": "report",
        "report_type": "fibrancy",
        "entries": t.entries.iter().map(|e| json!({
            "model": e.model.as_str(),
            "fibrant": e.fibrant,
            "witness": e.witness,
        })).collect::<Vec<_>>(),
    })
}

pub fn check_value(property: &str, r: &CheckReport) -> Value {
    json!({
        "kind": "report",
        "report_type": "check",
        "property": property,
        "verdict": r.verdict,
        "failures": r.failures.iter().map(|f| json!({
            "condition": f.condition,
            "witness": f.witness,
        })).collect::<Vec<_>>(),
    })
}

pub fn lift_value(set: &str, outcomes: &[(String, LiftOutcome)]) -> Value {
    json!({
        "kind": "report",
        "report_type": "lift",
        "set": set,
        "holds": outcomes.iter().all(|(_, o)| o.holds()),
        "shapes": outcomes.iter().map(|(name, o)| json!({
            "shape": name,
            "outcome": match o {
                LiftOutcome::Holds => json!("holds"),
                LiftOutcome::Counterexample { detail, .. } => json!({"counterexample": detail}),
            },
        })).collect::<Vec<_>>(),
    })
}

pub fn audit_value(set: &str, r: &AuditReport) -> Value {
    json!({
        "kind": "report",
        "report_type": "audit",
        "set": set,
        "header": r.header,
        "pass": r.pass(),
        "audited": r.audited,
        "skipped": r.skipped,
        "counterexamples": r.counterexamples.iter().map(|c| json!({
            "functor": c.functor,
            "shape": c.shape,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

/// Canonical text form: pretty JSON with sorted keys (the serde_json map is
/// ordered) and a trailing newline.
pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
