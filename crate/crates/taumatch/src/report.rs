//! Machine-readable outputs and their human-readable rendering.
//!
//! Every output struct serializes with a fixed key order and deserializes back
//! to an equal value. Indices are 1-based throughout.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use taumatch_core::bijection::RestrictedAnalysis;
use taumatch_core::tau::PairVerification;
use taumatch_core::{BijectionReport, Condition, HallCheck, Matrix, Morphism, PairStatus, Representation};

use crate::workspace::SCHEMA_VERSION;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowMap {
    pub arrow: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleData {
    pub dims: Vec<usize>,
    pub maps: Vec<ArrowMap>,
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
        .collect()
}

impl ModuleData {
    pub fn of(m: &Representation) -> Self {
        let q = m.algebra().quiver();
        ModuleData {
            dims: m.dims().to_vec(),
            maps: q
                .arrows()
                .iter()
                .zip(m.maps())
                .map(|(a, mat)| ArrowMap {
                    arrow: a.name.clone(),
                    matrix: matrix_strings(mat),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauOutput {
    pub schema: u32,
    pub command: String,
    pub module: String,
    pub input: ModuleData,
    pub translate: ModuleData,
    pub is_zero: bool,
    /// Workspace modules and standard `P<i>`, `I<i>`, `S<i>` isomorphic to the translate.
    pub isomorphic_to: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidOutput {
    pub schema: u32,
    pub command: String,
    pub module: String,
    pub rigid: bool,
    pub translate_dims: Vec<usize>,
    /// Per-vertex components of a nonzero map `M -> τM`.
    pub witness: Option<Vec<Vec<Vec<String>>>>,
}

pub fn morphism_strings(f: &Morphism) -> Vec<Vec<Vec<String>>> {
    f.components().iter().map(matrix_strings).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub index: usize,
    pub name: String,
    pub side: String,
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOutput {
    pub schema: u32,
    pub command: String,
    pub pair: String,
    pub status: String,
    pub checks: Vec<CheckResult>,
    pub failure: Option<String>,
    pub summands: Vec<Summand>,
    pub simples: usize,
}

pub fn status_name(s: &PairStatus) -> &'static str {
    match s {
        PairStatus::SupportTauTilting => "support tau-tilting",
        PairStatus::TauRigidPairOnly { .. } => "tau-rigid pair only",
        PairStatus::Failed(_) => "failed",
    }
}

pub fn summand_table(
    names_t: &[String],
    names_p: &[String],
    t: &[Representation],
    p: &[Representation],
) -> Vec<Summand> {
    let t_rows = names_t.iter().zip(t).map(|(n, m)| (n, "T", m));
    let p_rows = names_p.iter().zip(p).map(|(n, m)| (n, "P", m));
    t_rows
        .chain(p_rows)
        .enumerate()
        .map(|(k, (name, side, m))| Summand {
            index: k + 1,
            name: name.clone(),
            side: side.into(),
            dims: m.dims().to_vec(),
        })
        .collect()
}

impl PairOutput {
    pub fn new(name: &str, summands: Vec<Summand>, simples: usize, v: &PairVerification) -> Self {
        use taumatch_core::PairCheck;
        let failed_at = match &v.status {
            PairStatus::Failed(f) => Some(f.check()),
            PairStatus::TauRigidPairOnly { .. } => Some(PairCheck::SummandCount),
            PairStatus::SupportTauTilting => None,
        };
        let checks = PairCheck::ALL
            .iter()
            .map(|&c| CheckResult {
                check: c.name().into(),
                result: if v.passed.contains(&c) {
                    "pass"
                } else if Some(c) == failed_at {
                    "fail"
                } else {
                    "skipped"
                }
                .into(),
            })
            .collect();
        let failure = match &v.status {
            PairStatus::Failed(f) => Some(f.to_string()),
            PairStatus::TauRigidPairOnly { summands, simples } => {
                Some(format!("{summands} summands, but {simples} simple modules"))
            }
            PairStatus::SupportTauTilting => None,
        };
        PairOutput {
            schema: SCHEMA_VERSION,
            command: "check-pair".into(),
            pair: name.into(),
            status: status_name(&v.status).into(),
            checks,
            failure,
            summands,
            simples,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSummary {
    pub name: String,
    pub summands: Vec<Summand>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub j: usize,
    pub conditions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub i: usize,
    pub set: Vec<usize>,
    /// Every `j`, including those outside the set.
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hall {
    pub satisfied: bool,
    pub matching: Option<String>,
    pub deficient: Option<Vec<usize>>,
}

impl Hall {
    fn of(h: &HallCheck) -> Self {
        match h {
            HallCheck::Satisfied(p) => Hall {
                satisfied: true,
                matching: Some(p.to_string()),
                deficient: None,
            },
            HallCheck::Violated(rows) => Hall {
                satisfied: false,
                matching: None,
                deficient: Some(one_based(rows)),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedEdge {
    pub i: usize,
    pub j: usize,
    pub condition: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub permutation: String,
    pub images: Vec<usize>,
    pub edges: Vec<MatchedEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AllMatchings {
    pub permutations: Vec<String>,
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Restricted {
    pub dropped: Vec<String>,
    pub sets: Vec<Vec<usize>>,
    pub hall: Hall,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionOutput {
    pub schema: u32,
    pub command: String,
    pub left: PairSummary,
    pub right: PairSummary,
    pub f_sets: Vec<Row>,
    pub hall: Hall,
    pub matching: Matching,
    pub all_matchings: Option<AllMatchings>,
    pub restricted: Option<Restricted>,
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn letters(cs: &[Condition]) -> Vec<String> {
    cs.iter().map(|c| c.letter().to_string()).collect()
}

impl BijectionOutput {
    pub fn new(left: PairSummary, right: PairSummary, r: &BijectionReport) -> Self {
        let n = r.f.n();
        let f_sets = (0..n)
            .map(|i| Row {
                i: i + 1,
                set: one_based(&r.f.sets[i]),
                edges: (0..n)
                    .map(|j| Edge {
                        j: j + 1,
                        conditions: letters(&r.f.label(i, j).conditions()),
                    })
                    .collect(),
            })
            .collect();
        let matching = Matching {
            permutation: r.matching.to_string(),
            images: one_based(r.matching.images()),
            edges: (0..n)
                .map(|i| MatchedEdge {
                    i: i + 1,
                    j: r.matching.apply(i) + 1,
                    condition: r.chosen[i].letter().to_string(),
                })
                .collect(),
        };
        let restricted = r
            .restricted
            .as_ref()
            .map(|RestrictedAnalysis { dropped, sets, hall }| Restricted {
                dropped: letters(dropped),
                sets: sets.iter().map(|s| one_based(s)).collect(),
                hall: Hall::of(hall),
            });
        BijectionOutput {
            schema: SCHEMA_VERSION,
            command: "bijection".into(),
            left,
            right,
            f_sets,
            hall: Hall::of(&r.hall),
            matching,
            all_matchings: r.all.as_ref().map(|e| AllMatchings {
                permutations: e.permutations.iter().map(|p| p.to_string()).collect(),
                truncated: e.truncated,
            }),
            restricted,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkspaceReport {
    pub schema: u32,
    pub command: String,
    pub pairs: Vec<PairOutput>,
    pub bijections: Vec<BijectionOutput>,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn set_text(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn dims_text(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn matrix_text(m: &[Vec<String>]) -> String {
    if m.is_empty() || m[0].is_empty() {
        return "[]".into();
    }
    let rows: Vec<String> = m.iter().map(|r| r.join(" ")).collect();
    format!("[{}]", rows.join("; "))
}

pub fn render_module(out: &mut String, m: &ModuleData) {
    let _ = writeln!(out, "  dims  {}", dims_text(&m.dims));
    for a in &m.maps {
        let _ = writeln!(out, "  {:<5} {}", a.arrow, matrix_text(&a.matrix));
    }
}

impl TauOutput {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "module {}", self.module);
        render_module(&mut out, &self.input);
        let _ = writeln!(out, "tau {}", self.module);
        render_module(&mut out, &self.translate);
        if self.is_zero {
            let _ = writeln!(out, "  = 0");
        } else if !self.isomorphic_to.is_empty() {
            let _ = writeln!(out, "  ≅ {}", self.isomorphic_to.join(", "));
        }
        out
    }
}

impl RigidOutput {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let verdict = if self.rigid { "tau-rigid" } else { "not tau-rigid" };
        let _ = writeln!(out, "{}: {}", self.module, verdict);
        let _ = writeln!(out, "  dims tau  {}", dims_text(&self.translate_dims));
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "  nonzero map to tau, per vertex:");
            for (v, c) in w.iter().enumerate() {
                let _ = writeln!(out, "    {}  {}", v + 1, matrix_text(c));
            }
        }
        out
    }
}

fn render_summands(out: &mut String, summands: &[Summand]) {
    let _ = writeln!(out, "  {:<4} {:<4} {:<12} dims", "#", "side", "module");
    for s in summands {
        let _ = writeln!(
            out,
            "  {:<4} {:<4} {:<12} {}",
            s.index,
            s.side,
            s.name,
            dims_text(&s.dims)
        );
    }
}

impl PairOutput {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "pair {}", self.pair);
        render_summands(&mut out, &self.summands);
        for c in &self.checks {
            let _ = writeln!(out, "  {:<16} {}", c.check, c.result);
        }
        let _ = writeln!(out, "  status: {}", self.status);
        if let Some(f) = &self.failure {
            let _ = writeln!(out, "  reason: {f}");
        }
        out
    }
}

fn render_hall(out: &mut String, label: &str, h: &Hall) {
    match (&h.matching, &h.deficient) {
        (Some(m), _) => {
            let _ = writeln!(out, "{label}: satisfied, witness {m}");
        }
        (_, Some(d)) => {
            let _ = writeln!(out, "{label}: violated by rows {}", set_text(d));
        }
        _ => {}
    }
}

impl BijectionOutput {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "left pair {}", self.left.name);
        render_summands(&mut out, &self.left.summands);
        let _ = writeln!(out, "right pair {}", self.right.name);
        render_summands(&mut out, &self.right.summands);

        let _ = writeln!(out, "\nconditions");
        let header: Vec<String> = (1..=self.f_sets.len())
            .map(|j| format!("{:<6}", format!("j={j}")))
            .collect();
        let _ = writeln!(out, "  {:<5} {}", "", header.join(" ").trim_end());
        for row in &self.f_sets {
            let cells: Vec<String> = row
                .edges
                .iter()
                .map(|e| {
                    let s = if e.conditions.is_empty() {
                        "-".to_string()
                    } else {
                        e.conditions.concat()
                    };
                    format!("{s:<6}")
                })
                .collect();
            let _ = writeln!(out, "  {:<5} {}", format!("i={}", row.i), cells.join(" ").trim_end());
        }

        let _ = writeln!(out, "\ncandidate sets");
        for row in &self.f_sets {
            let _ = writeln!(out, "  F({}) = {}", row.i, set_text(&row.set));
        }
        out.push('\n');
        render_hall(&mut out, "hall condition", &self.hall);

        let _ = writeln!(out, "\nmatching s = {}", self.matching.permutation);
        for e in &self.matching.edges {
            let _ = writeln!(out, "  s({}) = {}  via ({})", e.i, e.j, e.condition);
        }

        if let Some(all) = &self.all_matchings {
            let _ = writeln!(out, "\nall matchings ({})", all.permutations.len());
            for p in &all.permutations {
                let _ = writeln!(out, "  {p}");
            }
            if all.truncated {
                let _ = writeln!(out, "  (truncated)");
            }
        }

        if let Some(r) = &self.restricted {
            let dropped: Vec<String> = r.dropped.iter().map(|c| format!("({c})")).collect();
            let _ = writeln!(out, "\nwithout {}", dropped.join(", "));
            for (i, s) in r.sets.iter().enumerate() {
                let _ = writeln!(out, "  {}", format_args!("({}) -> {}", i + 1, set_text(s)));
            }
            render_hall(&mut out, "  hall condition", &r.hall);
        }
        out
    }
}

impl WorkspaceReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for p in &self.pairs {
            out.push_str(&p.render());
            out.push('\n');
        }
        for b in &self.bijections {
            let _ = writeln!(out, "== {} -> {} ==", b.left.name, b.right.name);
            out.push_str(&b.render());
            out.push('\n');
        }
        out
    }
}
