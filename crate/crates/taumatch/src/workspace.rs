//! The JSON workspace format: a quiver, relations, named modules and named pairs.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "quiver": { "vertices": 2, "arrows": [{ "name": "a", "source": 1, "target": 2 }, { "name": "b", "source": 2, "target": 1 }] },
//!   "relations": [["a", "b"], { "terms": [{ "coeff": "1", "path": ["b", "a"] }] }],
//!   "modules": { "M": { "dims": [1, 1], "maps": { "a": [["1"]] } }, "Q": "P1" },
//!   "pairs": { "left": { "T": ["M", "S1"], "P": [] } }
//! }
//! ```
//!
//! Vertices are 1-based. Paths list arrows in the order they are applied, so
//! the composite usually written `ba` (first `a`, then `b`) is `["a", "b"]`.
//! A map for `a: s -> t` has `dims[t]` rows and `dims[s]` columns; omitted
//! arrows act as zero. Entries are strings holding exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde::Deserialize;
use taumatch_core::quiver::DEFAULT_MAX_PATH_LENGTH;
use taumatch_core::{
    Arrow, BoundQuiverAlgebra, Matrix, Quiver, Relation, Representation, Scalar, SupportPair, VertexLabeledModuleName,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWorkspace {
    schema: u32,
    quiver: RawQuiver,
    #[serde(default)]
    relations: Vec<RawRelation>,
    #[serde(default)]
    modules: BTreeMap<String, RawModule>,
    #[serde(default)]
    pairs: BTreeMap<String, RawPair>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuiver {
    vertices: usize,
    arrows: Vec<RawArrow>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArrow {
    name: String,
    source: usize,
    target: usize,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawRelation {
    Monomial(Vec<String>),
    Terms { terms: Vec<RawTerm> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    coeff: String,
    path: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawModule {
    Shorthand(String),
    Explicit {
        dims: Vec<usize>,
        #[serde(default)]
        maps: BTreeMap<String, Vec<Vec<String>>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    #[serde(rename = "T", default)]
    t: Vec<String>,
    #[serde(rename = "P", default)]
    p: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum WorkspaceError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}, column {column} (at `{path}`): {message}")]
    Syntax {
        line: usize,
        column: usize,
        path: String,
        message: String,
    },
    #[error("at `{path}`: {message}")]
    Invalid { path: String, message: String },
}

fn invalid(path: impl Into<String>, message: impl fmt::Display) -> WorkspaceError {
    WorkspaceError::Invalid {
        path: path.into(),
        message: message.to_string(),
    }
}

#[derive(Debug, Clone)]
pub struct NamedPair {
    pub name: String,
    pub t: Vec<String>,
    pub p: Vec<String>,
    pub pair: SupportPair,
}

/// A fully resolved workspace: the algebra is built and every name resolves.
#[derive(Debug, Clone)]
pub struct Workspace {
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub modules: BTreeMap<String, Representation>,
    pub pairs: BTreeMap<String, NamedPair>,
}

pub fn parse_rational(s: &str) -> Option<Scalar> {
    Scalar::from_str(s.trim()).ok()
}

impl Workspace {
    pub fn load(path: &Path, max_path_length: Option<usize>) -> Result<Self, WorkspaceError> {
        let text = std::fs::read_to_string(path).map_err(|source| WorkspaceError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text, max_path_length)
    }

    pub fn parse(text: &str, max_path_length: Option<usize>) -> Result<Self, WorkspaceError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawWorkspace = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            WorkspaceError::Syntax {
                line: inner.line(),
                column: inner.column(),
                path,
                message: inner.to_string(),
            }
        })?;
        resolve(raw, max_path_length.unwrap_or(DEFAULT_MAX_PATH_LENGTH))
    }

    /// A module by workspace name, or by shorthand such as `P2`.
    pub fn module(&self, name: &str) -> Option<Representation> {
        self.modules.get(name).cloned().or_else(|| {
            VertexLabeledModuleName::parse(name, self.algebra.vertex_count()).map(|m| m.build(&self.algebra))
        })
    }
}

fn resolve(raw: RawWorkspace, cutoff: usize) -> Result<Workspace, WorkspaceError> {
    if raw.schema != SCHEMA_VERSION {
        return Err(invalid(
            "schema",
            format!("unsupported schema {}, expected {SCHEMA_VERSION}", raw.schema),
        ));
    }
    let n = raw.quiver.vertices;
    let mut arrows = Vec::with_capacity(raw.quiver.arrows.len());
    for (k, a) in raw.quiver.arrows.iter().enumerate() {
        for (field, v) in [("source", a.source), ("target", a.target)] {
            if v == 0 || v > n {
                return Err(invalid(
                    format!("quiver.arrows[{k}].{field}"),
                    format!("vertex {v} not in 1..={n}"),
                ));
            }
        }
        arrows.push(Arrow {
            name: a.name.clone(),
            source: a.source - 1,
            target: a.target - 1,
        });
    }
    let quiver = Quiver::new(n, arrows).map_err(|e| invalid("quiver", e))?;

    let mut relations = Vec::with_capacity(raw.relations.len());
    for (k, r) in raw.relations.iter().enumerate() {
        let at = format!("relations[{k}]");
        let terms: Vec<(Scalar, Vec<String>)> = match r {
            RawRelation::Monomial(path) => vec![(Scalar::from_integer(1.into()), path.clone())],
            RawRelation::Terms { terms } => terms
                .iter()
                .enumerate()
                .map(|(t, term)| {
                    parse_rational(&term.coeff)
                        .map(|c| (c, term.path.clone()))
                        .ok_or_else(|| invalid(format!("{at}.terms[{t}].coeff"), "not a rational number"))
                })
                .collect::<Result<_, _>>()?,
        };
        let mut indexed = Vec::with_capacity(terms.len());
        for (c, path) in terms {
            let idx = path
                .iter()
                .map(|name| {
                    quiver
                        .arrow_index(name)
                        .ok_or_else(|| invalid(at.clone(), format!("unknown arrow `{name}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            indexed.push((c, idx));
        }
        relations.push(Relation::new(indexed));
    }
    let algebra =
        BoundQuiverAlgebra::build_with_cutoff(quiver, relations, cutoff).map_err(|e| invalid("relations", e))?;

    let mut modules = BTreeMap::new();
    for (name, m) in &raw.modules {
        let at = format!("modules.{name}");
        let rep = match m {
            RawModule::Shorthand(s) => VertexLabeledModuleName::parse(s, n)
                .ok_or_else(|| invalid(&at, format!("`{s}` is not one of P<i>, I<i>, S<i> with i in 1..={n}")))?
                .build(&algebra),
            RawModule::Explicit { dims, maps } => explicit_module(&algebra, &at, dims, maps)?,
        };
        modules.insert(name.clone(), rep);
    }

    let mut ws = Workspace {
        algebra: algebra.clone(),
        modules,
        pairs: BTreeMap::new(),
    };
    for (name, p) in &raw.pairs {
        let lookup = |side: &str, names: &[String]| {
            names
                .iter()
                .enumerate()
                .map(|(k, m)| {
                    ws.module(m)
                        .ok_or_else(|| invalid(format!("pairs.{name}.{side}[{k}]"), format!("unknown module `{m}`")))
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let t = lookup("T", &p.t)?;
        let pp = lookup("P", &p.p)?;
        ws.pairs.insert(
            name.clone(),
            NamedPair {
                name: name.clone(),
                t: p.t.clone(),
                p: p.p.clone(),
                pair: SupportPair::new(&algebra, t, pp),
            },
        );
    }
    Ok(ws)
}

fn explicit_module(
    alg: &Arc<BoundQuiverAlgebra>,
    at: &str,
    dims: &[usize],
    maps: &BTreeMap<String, Vec<Vec<String>>>,
) -> Result<Representation, WorkspaceError> {
    let q = alg.quiver();
    if dims.len() != q.vertex_count() {
        return Err(invalid(
            format!("{at}.dims"),
            format!("expected {} entries, found {}", q.vertex_count(), dims.len()),
        ));
    }
    for name in maps.keys() {
        if q.arrow_index(name).is_none() {
            return Err(invalid(format!("{at}.maps.{name}"), format!("unknown arrow `{name}`")));
        }
    }
    let mut mats = Vec::with_capacity(q.arrows().len());
    for a in q.arrows() {
        let (r, c) = (dims[a.target], dims[a.source]);
        let m = match maps.get(&a.name) {
            None => Matrix::zeros(r, c),
            Some(rows) => {
                let here = format!("{at}.maps.{}", a.name);
                // a map out of or into a zero space may be written as `[]`
                if rows.is_empty() && r * c == 0 {
                    Matrix::zeros(r, c)
                } else {
                    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                        return Err(invalid(here, format!("expected a {r} x {c} matrix")));
                    }
                    let mut entries = Vec::with_capacity(r);
                    for (i, row) in rows.iter().enumerate() {
                        let parsed = row
                            .iter()
                            .enumerate()
                            .map(|(j, e)| {
                                parse_rational(e).ok_or_else(|| {
                                    invalid(format!("{here}[{i}][{j}]"), format!("`{e}` is not a rational"))
                                })
                            })
                            .collect::<Result<Vec<_>, _>>()?;
                        entries.push(parsed);
                    }
                    Matrix::from_rows(entries, c)
                }
            }
        };
        mats.push(m);
    }
    Representation::new(alg, dims.to_vec(), mats).map_err(|e| {
        let msgs: Vec<String> = e.0.iter().map(|v| v.to_string()).collect();
        invalid(at, msgs.join("; "))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINI: &str = r#"{
        "schema": 1,
        "quiver": { "vertices": 2, "arrows": [{ "name": "a", "source": 1, "target": 2 }] },
        "modules": { "M": { "dims": [1, 1], "maps": { "a": [["1"]] } } },
        "pairs": { "p": { "T": ["M", "S2"] } }
    }"#;

    #[test]
    fn parses_minimal() {
        let ws = Workspace::parse(MINI, None).unwrap();
        assert_eq!(ws.modules["M"].dims(), &[1, 1]);
        assert_eq!(ws.pairs["p"].pair.t.len(), 2);
    }

    #[test]
    fn unknown_arrow_in_relation() {
        let text = MINI.replace("\"modules\"", "\"relations\": [[\"z\"]], \"modules\"");
        let err = Workspace::parse(&text, None).unwrap_err();
        assert!(
            matches!(err, WorkspaceError::Invalid { ref path, .. } if path == "relations[0]"),
            "{err}"
        );
    }

    #[test]
    fn unknown_arrow_in_module() {
        let text = MINI.replace("\"a\": [[\"1\"]]", "\"z\": [[\"1\"]]");
        let err = Workspace::parse(&text, None).unwrap_err();
        assert!(err.to_string().contains("modules.M.maps.z"), "{err}");
    }

    #[test]
    fn shape_mismatch() {
        let text = MINI.replace("[[\"1\"]]", "[[\"1\", \"0\"]]");
        let err = Workspace::parse(&text, None).unwrap_err();
        assert!(err.to_string().contains("1 x 1"), "{err}");
    }

    #[test]
    fn dangling_module() {
        let text = MINI.replace("\"S2\"", "\"Q\"");
        let err = Workspace::parse(&text, None).unwrap_err();
        assert!(err.to_string().contains("pairs.p.T[1]"), "{err}");
    }

    #[test]
    fn syntax_error_has_position() {
        let err = Workspace::parse("{\n  \"schema\": 1,\n  \"quiver\": 7\n}", None).unwrap_err();
        match err {
            WorkspaceError::Syntax { line, path, .. } => {
                assert_eq!(line, 3);
                assert_eq!(path, "quiver");
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn empty_modules() {
        let text = r#"{"schema": 1, "quiver": {"vertices": 1, "arrows": []}, "modules": {}}"#;
        let ws = Workspace::parse(text, None).unwrap();
        assert!(ws.modules.is_empty() && ws.pairs.is_empty());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-2/3"), Some(Scalar::new((-2).into(), 3.into())));
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn relation_violation_reported() {
        let text = r#"{"schema": 1,
            "quiver": {"vertices": 1, "arrows": [{"name": "a", "source": 1, "target": 1}]},
            "relations": [["a", "a"]],
            "modules": {"M": {"dims": [1], "maps": {"a": [["1"]]}}}}"#;
        let err = Workspace::parse(text, None).unwrap_err();
        assert!(err.to_string().contains("modules.M"), "{err}");
    }
}
