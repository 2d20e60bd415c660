//! The certificate document: a canonical JSON rendering of a
//! [`Certificate`].
//!
//! Layout (schema `"1"`): one top-level key per line, one factor per line,
//! arcs as `[tail, head]` pairs. Serialization canonicalizes first (K2*
//! factors, then cycle factors, each group ordered by smallest arc; arcs
//! sorted), so equal certificates serialize to identical bytes. Parsing is
//! strict: an unknown schema, a malformed field, a duplicate arc or a
//! non-canonical order is an error naming its location.

use std::fs;
use std::io;
use std::path::Path;

use hw_digraph::{
    canonical_key, Arc, Certificate, Family, Factor, FactorKind, HostSpec, ParamRequest, Repair,
    Trace,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The only schema version this crate reads and writes.
pub const SCHEMA_VERSION: &str = "1";

/// Why a document could not be read.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    /// Not JSON, or JSON of the wrong shape.
    #[error("malformed document at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    /// A schema version other than [`SCHEMA_VERSION`].
    #[error("unknown schema version {0:?} (expected {SCHEMA_VERSION:?})")]
    UnknownVersion(String),
    /// A field with an invalid value.
    #[error("invalid value at {path}: {message}")]
    Invalid { path: String, message: String },
    /// An arc listed twice in one arc list.
    #[error("duplicate arc {arc} at {path}")]
    DuplicateArc { path: String, arc: Arc },
    /// Valid content in non-canonical order.
    #[error("non-canonical order at {path}: {message}")]
    NonCanonical { path: String, message: String },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    schema: String,
    request: Option<RequestDoc>,
    host: HostDoc,
    expected: Vec<CountDoc>,
    factors: Vec<FactorDoc>,
    trace: TraceDoc,
    #[serde(default)]
    repairs: Vec<RepairDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RequestDoc {
    family: String,
    v: u32,
    m: u32,
    r: u32,
    s: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum HostDoc {
    Complete { order: u32 },
    Equipartite { part_size: u32, part_count: u32 },
    CycleBlowup { m: u32 },
    CycleBlowupPlusI { m: u32 },
    Gamma { m: u32 },
    Explicit { order: u32, arcs: Vec<[u32; 2]> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CountDoc {
    kind: String,
    count: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorDoc {
    kind: String,
    arcs: Vec<[u32; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TraceDoc {
    step: String,
    #[serde(default)]
    params: Vec<[String; 2]>,
    #[serde(default)]
    children: Vec<TraceDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepairDoc {
    factor: usize,
    description: String,
    before: String,
    after: String,
}

fn arc_list<'a>(arcs: impl IntoIterator<Item = &'a Arc>) -> Vec<[u32; 2]> {
    arcs.into_iter().map(|a| [a.tail, a.head]).collect()
}

fn trace_doc(t: &Trace) -> TraceDoc {
    TraceDoc {
        step: t.step.clone(),
        params: t.params.iter().map(|(k, v)| [k.clone(), v.clone()]).collect(),
        children: t.children.iter().map(trace_doc).collect(),
    }
}

fn host_doc(h: &HostSpec) -> HostDoc {
    match h {
        HostSpec::CompleteSymmetric { order } => HostDoc::Complete { order: *order },
        HostSpec::Equipartite { part_size, part_count } => {
            HostDoc::Equipartite { part_size: *part_size, part_count: *part_count }
        }
        HostSpec::CycleBlowup { m } => HostDoc::CycleBlowup { m: *m },
        HostSpec::CycleBlowupPlusI { m } => HostDoc::CycleBlowupPlusI { m: *m },
        HostSpec::Gamma { m } => HostDoc::Gamma { m: *m },
        HostSpec::Explicit { order, arcs } => {
            let mut sorted = arcs.clone();
            sorted.sort();
            HostDoc::Explicit { order: *order, arcs: arc_list(&sorted) }
        }
    }
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("document parts serialize")
}

/// Serializes the canonical form of `c`. Equal certificates give identical
/// bytes.
pub fn to_json(c: &Certificate) -> String {
    let mut c = c.clone();
    c.canonicalize();
    let request = c.request.map(|r| RequestDoc {
        family: r.family.code().to_string(),
        v: r.v,
        m: r.m,
        r: r.r,
        s: r.s,
    });
    let expected: Vec<CountDoc> =
        c.expected.iter().map(|(k, n)| CountDoc { kind: k.code(), count: *n }).collect();
    let factors: Vec<String> = c
        .factors
        .iter()
        .map(|f| compact(&FactorDoc { kind: f.kind.code(), arcs: arc_list(&f.arcs) }))
        .collect();
    let repairs: Vec<RepairDoc> = c
        .repairs
        .iter()
        .map(|r| RepairDoc {
            factor: r.factor,
            description: r.description.clone(),
            before: r.before.clone(),
            after: r.after.clone(),
        })
        .collect();

    let mut out = String::from("{\n");
    out.push_str(&format!("  \"schema\": {},\n", compact(&SCHEMA_VERSION)));
    out.push_str(&format!("  \"request\": {},\n", compact(&request)));
    out.push_str(&format!("  \"host\": {},\n", compact(&host_doc(&c.host))));
    out.push_str(&format!("  \"expected\": {},\n", compact(&expected)));
    if factors.is_empty() {
        out.push_str("  \"factors\": [],\n");
    } else {
        out.push_str("  \"factors\": [\n    ");
        out.push_str(&factors.join(",\n    "));
        out.push_str("\n  ],\n");
    }
    out.push_str(&format!("  \"trace\": {},\n", compact(&trace_doc(&c.trace))));
    out.push_str(&format!("  \"repairs\": {}\n", compact(&repairs)));
    out.push_str("}\n");
    out
}

fn parse_kind(code: &str, path: &str) -> Result<FactorKind, DocumentError> {
    FactorKind::from_code(code).ok_or_else(|| DocumentError::Invalid {
        path: path.to_string(),
        message: format!("unknown factor kind {code:?}"),
    })
}

/// Converts an arc list, requiring strictly increasing order.
fn parse_arcs(raw: &[[u32; 2]], path: &str) -> Result<Vec<Arc>, DocumentError> {
    let arcs: Vec<Arc> = raw.iter().map(|&[t, h]| Arc::new(t, h)).collect();
    for (i, w) in arcs.windows(2).enumerate() {
        let at = format!("{path}[{}]", i + 1);
        if w[0] == w[1] {
            return Err(DocumentError::DuplicateArc { path: at, arc: w[1] });
        }
        if w[0] > w[1] {
            return Err(DocumentError::NonCanonical {
                path: at,
                message: format!("arc {} listed after {}", w[1], w[0]),
            });
        }
    }
    Ok(arcs)
}

fn parse_trace(t: TraceDoc) -> Trace {
    Trace {
        step: t.step,
        params: t.params.into_iter().map(|[k, v]| (k, v)).collect(),
        children: t.children.into_iter().map(parse_trace).collect(),
    }
}

/// Parses a document, enforcing the schema version and canonical order.
pub fn from_json(text: &str) -> Result<Certificate, DocumentError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| DocumentError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if doc.schema != SCHEMA_VERSION {
        return Err(DocumentError::UnknownVersion(doc.schema));
    }
    let request = match doc.request {
        None => None,
        Some(r) => {
            let family = Family::from_code(&r.family).ok_or_else(|| DocumentError::Invalid {
                path: "request.family".into(),
                message: format!("unknown family {:?}", r.family),
            })?;
            Some(ParamRequest::new(family, r.v, r.m, r.r, r.s))
        }
    };
    let host = match doc.host {
        HostDoc::Complete { order } => HostSpec::CompleteSymmetric { order },
        HostDoc::Equipartite { part_size, part_count } => {
            HostSpec::Equipartite { part_size, part_count }
        }
        HostDoc::CycleBlowup { m } => HostSpec::CycleBlowup { m },
        HostDoc::CycleBlowupPlusI { m } => HostSpec::CycleBlowupPlusI { m },
        HostDoc::Gamma { m } => HostSpec::Gamma { m },
        HostDoc::Explicit { order, arcs } => {
            HostSpec::Explicit { order, arcs: parse_arcs(&arcs, "host.arcs")? }
        }
    };

    let mut expected = Vec::new();
    for (i, c) in doc.expected.iter().enumerate() {
        expected.push((parse_kind(&c.kind, &format!("expected[{i}].kind"))?, c.count));
    }
    for (i, w) in expected.windows(2).enumerate() {
        if w[0].0 >= w[1].0 {
            return Err(DocumentError::NonCanonical {
                path: format!("expected[{}]", i + 1),
                message: "kinds must be distinct and sorted".into(),
            });
        }
    }

    let mut factors = Vec::new();
    for (i, f) in doc.factors.iter().enumerate() {
        let kind = parse_kind(&f.kind, &format!("factors[{i}].kind"))?;
        let path = format!("factors[{i}].arcs");
        if f.arcs.is_empty() {
            return Err(DocumentError::Invalid { path, message: "empty factor".into() });
        }
        factors.push(Factor::new(kind, parse_arcs(&f.arcs, &path)?));
    }
    for (i, w) in factors.windows(2).enumerate() {
        if canonical_key(&w[0]) > canonical_key(&w[1]) {
            return Err(DocumentError::NonCanonical {
                path: format!("factors[{}]", i + 1),
                message: "factors must list K2* factors first, then cycle factors, each by smallest arc".into(),
            });
        }
    }

    let repairs = doc
        .repairs
        .into_iter()
        .map(|r| Repair { factor: r.factor, description: r.description, before: r.before, after: r.after })
        .collect();
    Ok(Certificate { request, host, expected, factors, trace: parse_trace(doc.trace), repairs })
}

/// Writes a document atomically: a temporary sibling file is written first
/// and then renamed over `path`.
pub fn write_document(path: &Path, c: &Certificate) -> io::Result<()> {
    let name = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "path has no file name"))?;
    let tmp = path.with_file_name(format!(
        ".{}.{}.tmp",
        name.to_string_lossy(),
        std::process::id()
    ));
    fs::write(&tmp, to_json(c))?;
    fs::rename(&tmp, path)
}

/// Errors of [`read_document`].
#[derive(Debug, Error)]
pub enum ReadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Document { path: String, source: DocumentError },
}

/// Reads and parses a document file.
pub fn read_document(path: &Path) -> Result<Certificate, ReadError> {
    let shown = path.display().to_string();
    let text =
        fs::read_to_string(path).map_err(|source| ReadError::Io { path: shown.clone(), source })?;
    from_json(&text).map_err(|source| ReadError::Document { path: shown, source })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Certificate {
        let factors = vec![
            Factor::double_arcs([(0, 3), (1, 2)]),
            Factor::double_arcs([(0, 1), (2, 3)]),
            Factor::double_arcs([(0, 2), (1, 3)]),
        ];
        Certificate::from_factors(
            HostSpec::CompleteSymmetric { order: 4 },
            factors,
            Trace::new("round-robin").param("n", 4),
        )
    }

    #[test]
    fn round_trip_is_canonical_form() {
        let c = k4();
        let text = to_json(&c);
        let back = from_json(&text).unwrap();
        let mut canon = c.clone();
        canon.canonicalize();
        assert_eq!(back, canon);
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn one_factor_per_line() {
        let text = to_json(&k4());
        assert_eq!(text.lines().filter(|l| l.trim_start().starts_with("{\"kind\"")).count(), 3);
        assert!(text.starts_with("{\n  \"schema\": \"1\""));
    }

    #[test]
    fn rejects_unknown_version() {
        let text = to_json(&k4()).replace("\"schema\": \"1\"", "\"schema\": \"2\"");
        assert_eq!(from_json(&text), Err(DocumentError::UnknownVersion("2".into())));
    }

    #[test]
    fn rejects_duplicate_arc() {
        let text = to_json(&k4()).replacen("[[0,1],[1,0]", "[[0,1],[0,1]", 1);
        assert!(matches!(from_json(&text), Err(DocumentError::DuplicateArc { .. })));
    }

    #[test]
    fn rejects_reordered_factors() {
        let mut c = k4();
        c.canonicalize();
        c.factors.swap(0, 1);
        let mut text = String::from("{\"schema\":\"1\",\"request\":null,\"host\":{\"type\":\"complete\",\"order\":4},\"expected\":[{\"kind\":\"k2\",\"count\":3}],\"factors\":[");
        let parts: Vec<String> = c
            .factors
            .iter()
            .map(|f| compact(&FactorDoc { kind: f.kind.code(), arcs: arc_list(&f.arcs) }))
            .collect();
        text.push_str(&parts.join(","));
        text.push_str("],\"trace\":{\"step\":\"x\"}}");
        let err = from_json(&text).unwrap_err();
        assert!(matches!(err, DocumentError::NonCanonical { ref path, .. } if path == "factors[1]"));
    }

    #[test]
    fn json_errors_carry_location() {
        match from_json("{\n  \"schema\": \"1\",\n  oops") {
            Err(DocumentError::Json { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_kind_is_reported_with_path() {
        let text = to_json(&k4()).replace("\"kind\":\"k2\",\"count\"", "\"kind\":\"q9\",\"count\"");
        assert!(matches!(
            from_json(&text),
            Err(DocumentError::Invalid { ref path, .. }) if path == "expected[0].kind"
        ));
    }
}
