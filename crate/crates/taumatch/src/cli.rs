//! Command-line parsing and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use taumatch_core::bijection::{DEFAULT_ENUMERATION_LIMIT, DEFAULT_MAX_ENUMERATION_SIZE};
use taumatch_core::endo::Indecomposable;
use taumatch_core::{
    build_report, is_tau_rigid, tau, verify_support_pair, BijectionError, Condition, ReportOptions,
    VertexLabeledModuleName,
};

use crate::report::{
    morphism_strings, summand_table, to_json, BijectionOutput, ModuleData, PairOutput, PairSummary, RigidOutput,
    TauOutput, WorkspaceReport,
};
use crate::workspace::{NamedPair, Workspace, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "taumatch",
    version,
    about = "Support tau-tilting pairs and their summand bijections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Workspace file (JSON, schema 1).
    #[arg(long, global = true)]
    workspace: Option<PathBuf>,
    /// Also write machine-readable output here; `-` prints only JSON to stdout.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Longest path considered when building the algebra.
    #[arg(long, global = true)]
    max_path_length: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Auslander-Reiten translate of a module.
    Tau { module: String },
    /// Decide whether Hom(M, τM) vanishes.
    CheckRigid { module: String },
    /// Verify that a named pair is a basic support τ-tilting pair.
    CheckPair { pair: String },
    /// Candidate sets and a summand bijection between two pairs.
    Bijection {
        left: String,
        right: String,
        #[command(flatten)]
        opts: MatchOpts,
    },
    /// Check every pair and match every ordered pair of valid ones.
    Report {
        #[command(flatten)]
        opts: MatchOpts,
    },
}

#[derive(Debug, clap::Args)]
struct MatchOpts {
    /// List every valid permutation.
    #[arg(long)]
    all: bool,
    /// Also analyse the candidate sets with this condition ignored.
    #[arg(long, value_parser = ["c", "d"])]
    drop: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    limit: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_ENUMERATION_SIZE)]
    max_enumeration_size: usize,
}

impl MatchOpts {
    fn report_options(&self) -> ReportOptions {
        let mut drop: Vec<Condition> = self
            .drop
            .iter()
            .filter_map(|s| s.chars().next().and_then(Condition::from_letter))
            .collect();
        drop.sort();
        drop.dedup();
        ReportOptions {
            enumerate_all: self.all,
            limit: self.limit,
            max_enumeration_size: self.max_enumeration_size,
            drop,
        }
    }
}

struct Output {
    text: String,
    json: String,
    code: i32,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = catch_unwind(AssertUnwindSafe(|| execute(&cli)));
    match result {
        Ok(Ok(out)) => {
            match cli.json.as_deref() {
                Some(p) if p.as_os_str() == "-" => {
                    let _ = stdout.write_all(out.json.as_bytes());
                }
                Some(p) => {
                    let _ = stdout.write_all(out.text.as_bytes());
                    if let Err(e) = std::fs::write(p, &out.json) {
                        let _ = writeln!(stderr, "error: cannot write {}: {e}", p.display());
                        return EXIT_PARSE;
                    }
                }
                None => {
                    let _ = stdout.write_all(out.text.as_bytes());
                }
            }
            out.code
        }
        Ok(Err(f)) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| panic.downcast_ref::<&str>().copied())
                .unwrap_or("unknown panic");
            let _ = writeln!(stderr, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn load(cli: &Cli) -> Result<Workspace, Failure> {
    let path = cli
        .workspace
        .as_ref()
        .ok_or_else(|| fail(EXIT_PARSE, "--workspace is required"))?;
    Workspace::load(path, cli.max_path_length).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let ws = load(cli)?;
    match &cli.command {
        Command::Tau { module } => tau_cmd(&ws, module),
        Command::CheckRigid { module } => rigid_cmd(&ws, module),
        Command::CheckPair { pair } => {
            let p = lookup_pair(&ws, pair)?;
            let out = check_pair(&ws, p);
            let code = if out.status == "support tau-tilting" {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            };
            Ok(Output {
                text: out.render(),
                json: to_json(&out),
                code,
            })
        }
        Command::Bijection { left, right, opts } => {
            let l = lookup_pair(&ws, left)?;
            let r = lookup_pair(&ws, right)?;
            let out = bijection(l, r, &opts.report_options())?;
            Ok(Output {
                text: out.render(),
                json: to_json(&out),
                code: EXIT_OK,
            })
        }
        Command::Report { opts } => {
            let options = opts.report_options();
            let pairs: Vec<PairOutput> = ws.pairs.values().map(|p| check_pair(&ws, p)).collect();
            let good: Vec<&NamedPair> = ws
                .pairs
                .values()
                .zip(&pairs)
                .filter(|(_, o)| o.status == "support tau-tilting")
                .map(|(p, _)| p)
                .collect();
            let mut bijections = Vec::new();
            for l in &good {
                for r in &good {
                    bijections.push(bijection(l, r, &options)?);
                }
            }
            let code = if good.len() == pairs.len() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            };
            let out = WorkspaceReport {
                schema: SCHEMA_VERSION,
                command: "report".into(),
                pairs,
                bijections,
            };
            Ok(Output {
                text: out.render(),
                json: to_json(&out),
                code,
            })
        }
    }
}

fn lookup_pair<'a>(ws: &'a Workspace, name: &str) -> Result<&'a NamedPair, Failure> {
    ws.pairs
        .get(name)
        .ok_or_else(|| fail(EXIT_PARSE, format!("unknown pair `{name}`")))
}

fn lookup_module(ws: &Workspace, name: &str) -> Result<taumatch_core::Representation, Failure> {
    ws.module(name)
        .ok_or_else(|| fail(EXIT_PARSE, format!("unknown module `{name}`")))
}

fn tau_cmd(ws: &Workspace, name: &str) -> Result<Output, Failure> {
    let m = lookup_module(ws, name)?;
    let t = tau(&m).translate;
    let mut isomorphic_to = Vec::new();
    if let Ok(tc) = Indecomposable::certify(t.clone()) {
        let n = ws.algebra.vertex_count();
        let standard = ["P", "I", "S"]
            .iter()
            .flat_map(|k| (1..=n).map(move |i| format!("{k}{i}")))
            .filter_map(|s| VertexLabeledModuleName::parse(&s, n).map(|v| (s, v.build(&ws.algebra))));
        let named = ws.modules.iter().map(|(k, v)| (k.clone(), v.clone()));
        for (label, rep) in named.chain(standard) {
            if let Ok(c) = Indecomposable::certify(rep) {
                if tc.is_isomorphic(&c) && !isomorphic_to.contains(&label) {
                    isomorphic_to.push(label);
                }
            }
        }
    }
    let out = TauOutput {
        schema: SCHEMA_VERSION,
        command: "tau".into(),
        module: name.into(),
        input: ModuleData::of(&m),
        translate: ModuleData::of(&t),
        is_zero: t.is_zero(),
        isomorphic_to,
    };
    Ok(Output {
        text: out.render(),
        json: to_json(&out),
        code: EXIT_OK,
    })
}

fn rigid_cmd(ws: &Workspace, name: &str) -> Result<Output, Failure> {
    let m = lookup_module(ws, name)?;
    let r = is_tau_rigid(&m);
    let out = RigidOutput {
        schema: SCHEMA_VERSION,
        command: "check-rigid".into(),
        module: name.into(),
        rigid: r.is_rigid(),
        translate_dims: tau(&m).translate.dims().to_vec(),
        witness: r.witness.as_ref().map(morphism_strings),
    };
    Ok(Output {
        text: out.render(),
        json: to_json(&out),
        code: if out.rigid { EXIT_OK } else { EXIT_VERIFICATION },
    })
}

fn summary(p: &NamedPair) -> PairSummary {
    PairSummary {
        name: p.name.clone(),
        summands: summand_table(&p.t, &p.p, &p.pair.t, &p.pair.p),
    }
}

fn check_pair(ws: &Workspace, p: &NamedPair) -> PairOutput {
    let v = verify_support_pair(&p.pair);
    PairOutput::new(&p.name, summary(p).summands, ws.algebra.vertex_count(), &v)
}

fn bijection(l: &NamedPair, r: &NamedPair, options: &ReportOptions) -> Result<BijectionOutput, Failure> {
    match build_report(&l.pair, &r.pair, options) {
        Ok(report) => Ok(BijectionOutput::new(summary(l), summary(r), &report)),
        Err(BijectionError::NotSupportTauTilting { side, status }) => {
            let name = match side {
                taumatch_core::bijection::PairSide::Left => &l.name,
                taumatch_core::bijection::PairSide::Right => &r.name,
            };
            let detail = match status {
                taumatch_core::PairStatus::Failed(f) => format!("{} check failed: {f}", f.check().name()),
                taumatch_core::PairStatus::TauRigidPairOnly { summands, simples } => {
                    format!("summand count check failed: {summands} summands, {simples} simple modules")
                }
                taumatch_core::PairStatus::SupportTauTilting => String::new(),
            };
            Err(fail(
                EXIT_VERIFICATION,
                format!("pair `{name}` is not support tau-tilting: {detail}"),
            ))
        }
        Err(e @ BijectionError::TooLarge { .. }) => Err(fail(EXIT_VERIFICATION, e.to_string())),
        Err(e) => Err(fail(EXIT_INTERNAL, e.to_string())),
    }
}
