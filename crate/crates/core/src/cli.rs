//! The `zinbiel2` command line.
//!
//! Exit codes: 0 success, 1 violations or a failed construction, 2 input error, 3 budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{self, Relation, DEFAULT_BUDGET};
use crate::codec::{self, Document};
use crate::conditions::CheckOptions;
use crate::error::Error;
use crate::exact_linear::{FieldSpec, LinMap, TwoVectorSpace};
use crate::par;
use crate::report::ConditionReport;
use crate::special_products as sp;
use crate::unified_product as up;
use crate::zinbiel_core::{check_crossed_module, check_zinbiel};

#[derive(Parser, Debug)]
#[command(name = "zinbiel2", version, about = "Exact checks, products and censuses for Zinbiel 2-algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Base field (`q` or `gf<p>`), overriding the input files.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Permit GF(2) and GF(3).
    #[arg(long, global = true)]
    pub allow_small_char: bool,
    /// Largest number of candidates an exhaustive search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Treat disagreement between a printed and a corrected condition as a violation.
    #[arg(long, global = true)]
    pub typo_strict: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ListArg {
    /// The general conditions (Z1)-(Z120).
    Z,
    /// The conditions (ZZ1)-(ZZ40) for Z1 = 0.
    Zz,
    /// Build Z♮V and check its axioms.
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RelationArg {
    Equivalent,
    Cohomologous,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Zinbiel identity on a `zinbiel_algebra`.
    CheckZinbiel { file: PathBuf },
    /// Check the crossed-module axioms on a `zinbiel_2_algebra`.
    #[command(name = "check-2alg")]
    Check2alg { file: PathBuf },
    /// Check an `extending_datum`.
    CheckDatum {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ListArg::Z)]
        list: ListArg,
    },
    /// Build the product of an `extending_datum`, `crossed_system` or `matched_pair`.
    BuildProduct { file: PathBuf },
    /// Read the datum off a `complement_split`.
    ExtractDatum { file: PathBuf },
    /// Check a `crossed_system`.
    CheckCrossed { file: PathBuf },
    /// Check a `matched_pair`.
    CheckMatched { file: PathBuf },
    /// Factorize along the inclusions of a `factorization`.
    Factorize { file: PathBuf },
    /// Check the (r, s) maps of an `rs_morphism`.
    CheckMorphism { file: PathBuf },
    /// Enumerate every datum over Z with the given V and count classes.
    Classify {
        /// A `zinbiel_2_algebra` file.
        #[arg(long)]
        z: PathBuf,
        /// dim V1,dim V0.
        #[arg(long, value_parser = parse_dims)]
        vdims: (usize, usize),
        /// A LinMap file for d: V1 → V0 (default zero).
        #[arg(long)]
        d: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = RelationArg::Equivalent)]
        relation: RelationArg,
    },
}

fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected two dimensions such as 0,1")?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad dimension `{t}`: {e}"));
    Ok((p(a)?, p(b)?))
}

/// What a command produced.
enum Outcome {
    Report(ConditionReport, Option<Value>),
    Built(Value),
    Census(classify::Census),
}

enum Failure {
    Input(String),
    Budget(String),
    Failed(Value, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Linear(_) | Error::Shape(_) | Error::NeedsFiniteField(_) => Failure::Input(e.to_string()),
            Error::InfeasibleSearch { .. } | Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::Precondition { ref report, .. } => {
                let v = json!({"ok": false, "error": e.to_string(), "report": codec::report_json(report)});
                Failure::Failed(v, e.to_string())
            }
            _ => Failure::Failed(json!({"ok": false, "error": e.to_string()}), e.to_string()),
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    field: Option<FieldSpec>,
}

impl Ctx<'_> {
    fn read_src(&self, path: &Path) -> Result<(String, FieldSpec, Document), Failure> {
        let src = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let (spec, doc) = codec::parse_document(&src, self.field, self.cli.allow_small_char)
            .map_err(|e| Failure::Input(format!("{}:{e}", path.display())))?;
        Ok((src, spec, doc))
    }

    fn wrong_kind(path: &Path, src: &str, want: &str, got: &str) -> Failure {
        let (line, col) = codec::locate(src, &[codec::Seg::Key("kind".into())]);
        Failure::Input(format!("{}:{line}:{col}: at $.kind: expected {want}, got `{got}`", path.display()))
    }

    fn expect<T>(&self, path: &Path, want: &str, pick: impl FnOnce(Document) -> Option<T>) -> Result<(FieldSpec, T), Failure> {
        let (src, spec, doc) = self.read_src(path)?;
        let kind = doc.kind();
        pick(doc).map(|t| (spec, t)).ok_or_else(|| Self::wrong_kind(path, &src, want, kind))
    }

    fn opts(&self) -> CheckOptions {
        CheckOptions::default()
    }
}

fn dispatch(ctx: &Ctx) -> Result<Outcome, Failure> {
    let opts = ctx.opts();
    Ok(match &ctx.cli.command {
        Command::CheckZinbiel { file } => {
            let (_, a) = ctx.expect(file, "zinbiel_algebra", |d| match d {
                Document::Algebra(a) => Some(a),
                _ => None,
            })?;
            Outcome::Report(check_zinbiel(&a), None)
        }
        Command::Check2alg { file } => {
            let (_, t) = ctx.expect(file, "zinbiel_2_algebra", |d| match d {
                Document::TwoAlgebra(t) => Some(t),
                _ => None,
            })?;
            Outcome::Report(check_crossed_module(&t)?, None)
        }
        Command::CheckDatum { file, list } => {
            let (_, d) = ctx.expect(file, "extending_datum", |d| match d {
                Document::Datum(d) => Some(d),
                _ => None,
            })?;
            let rep = match list {
                ListArg::Z => up::check_datum_conditions_with(&d, &opts)?,
                ListArg::Zz => up::check_trivialz1_conditions_with(&d, &opts)?,
                ListArg::Direct => up::check_datum_direct(&d)?,
            };
            Outcome::Report(rep, None)
        }
        Command::BuildProduct { file } => {
            let (src, _, doc) = ctx.read_src(file)?;
            let e = match doc {
                Document::Datum(d) => up::build_unified_product(&d)?,
                Document::CrossedSystem(cs) => sp::build_crossed_product(&cs)?,
                Document::MatchedPair(mp) => sp::build_bicrossed_product(&mp)?,
                other => {
                    let want = "extending_datum, crossed_system or matched_pair";
                    return Err(Ctx::wrong_kind(file, &src, want, other.kind()));
                }
            };
            Outcome::Built(codec::two_algebra_json(&e))
        }
        Command::ExtractDatum { file } => {
            let (_, s) = ctx.expect(file, "complement_split", |d| match d {
                Document::Split(s) => Some(s),
                _ => None,
            })?;
            Outcome::Built(codec::datum_json(&up::extract_datum(&s)?))
        }
        Command::CheckCrossed { file } => {
            let (_, cs) = ctx.expect(file, "crossed_system", |d| match d {
                Document::CrossedSystem(cs) => Some(cs),
                _ => None,
            })?;
            Outcome::Report(sp::check_crossed_system_with(&cs, &opts)?, None)
        }
        Command::CheckMatched { file } => {
            let (_, mp) = ctx.expect(file, "matched_pair", |d| match d {
                Document::MatchedPair(mp) => Some(mp),
                _ => None,
            })?;
            Outcome::Report(sp::check_matched_pair_with(&mp, &opts)?, None)
        }
        Command::Factorize { file } => {
            let (_, (e, iz, iv)) = ctx.expect(file, "factorization", |d| match d {
                Document::Factorization { e, iota_z, iota_v } => Some((e, iota_z, iota_v)),
                _ => None,
            })?;
            Outcome::Built(codec::matched_pair_json(&sp::factorize(&e, &iz, &iv)?))
        }
        Command::CheckMorphism { file } => {
            let (_, (d1, d2, rs)) = ctx.expect(file, "rs_morphism", |d| match d {
                Document::RsMorphism { d1, d2, rs } => Some((d1, d2, rs)),
                _ => None,
            })?;
            let rep = classify::check_rs_conditions_with(&rs, &d1, &d2, &opts)?;
            let iso = rep.ok() && classify::is_isomorphism(&rs, &d1, &d2)?;
            Outcome::Report(rep, Some(json!({"isomorphism": iso})))
        }
        Command::Classify { z, vdims, d, relation } => {
            let (spec, t) = ctx.expect(z, "zinbiel_2_algebra", |d| match d {
                Document::TwoAlgebra(t) => Some(t),
                _ => None,
            })?;
            let dm = match d {
                Some(p) => {
                    let src = std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
                    let m = codec::parse_linmap(&src, spec.field)
                        .map_err(|e| Failure::Input(format!("{}:{e}", p.display())))?;
                    if (m.rows(), m.cols()) != (vdims.1, vdims.0) {
                        return Err(Failure::Input(format!(
                            "{}:1:1: at $: d must be {}×{}",
                            p.display(),
                            vdims.1,
                            vdims.0
                        )));
                    }
                    m
                }
                None => LinMap::zero(spec.field, vdims.1, vdims.0),
            };
            let rel = match relation {
                RelationArg::Equivalent => Relation::Equivalent,
                RelationArg::Cohomologous => Relation::Cohomologous,
            };
            Outcome::Census(classify::census(&t, TwoVectorSpace::new(dm), rel, ctx.cli.budget)?)
        }
    })
}

fn label(id: &str) -> String {
    format!("({id})")
}

fn tuple(w: &[usize]) -> String {
    let parts: Vec<String> = w.iter().map(|i| i.to_string()).collect();
    format!("({})", parts.join(","))
}

fn vector(v: &[crate::exact_linear::Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn report_text(r: &ConditionReport, extra: Option<&Value>) -> String {
    let mut s = String::new();
    if r.ok() {
        s.push_str("ok\n");
    } else {
        s.push_str(&format!("{} violation(s)\n", r.violations.len() + r.truncated));
    }
    for v in &r.violations {
        let inst = v.instance.as_ref().map(|i| format!(" [{i}]")).unwrap_or_default();
        s.push_str(&format!(
            "{}{inst} at {}: {} != {}\n",
            label(&v.id),
            tuple(&v.witness),
            vector(&v.lhs),
            vector(&v.rhs)
        ));
    }
    if r.truncated > 0 {
        s.push_str(&format!("... {} more\n", r.truncated));
    }
    for t in &r.typo_suspects {
        s.push_str(&format!("typo suspect {}: {}\n", label(&t.id), t.note));
    }
    if !r.conforming_field {
        s.push_str("note: characteristic 2 or 3\n");
    }
    if let Some(Value::Object(m)) = extra {
        for (k, v) in m {
            s.push_str(&format!("{k}: {v}\n"));
        }
    }
    s
}

fn census_text(c: &classify::Census) -> String {
    let mut s = format!(
        "field: {}\nVdims: ({}, {})\nvalid data: {}\nrelation: {}\nclasses: {}\n",
        codec::field_tag(c.field),
        c.vdims.0,
        c.vdims.1,
        c.valid_count,
        c.relation.name(),
        c.orbit_count()
    );
    for (i, r) in c.representatives.iter().enumerate() {
        s.push_str(&format!("[{i}] {}\n", codec::canonical_string(&codec::datum_maps_json(r))));
    }
    s
}

fn pretty(v: &Value) -> String {
    codec::to_pretty(v)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    execute(&cli, out, err)
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let field = match &cli.field {
        Some(s) => match FieldSpec::parse(s, cli.allow_small_char) {
            Ok(f) => Some(f),
            Err(e) => {
                let _ = writeln!(err, "error: --field: {e}");
                return 2;
            }
        },
        None => None,
    };
    let ctx = Ctx { cli, field };
    let result = par::with_jobs(cli.jobs, || dispatch(&ctx));
    let text = cli.format == Format::Text;
    let (body, code) = match result {
        Ok(Outcome::Report(rep, extra)) => {
            let failed = !rep.ok() || (cli.typo_strict && !rep.typo_suspects.is_empty());
            let body = if text {
                report_text(&rep, extra.as_ref())
            } else {
                let mut v = codec::report_json(&rep);
                if let (Some(Value::Object(m)), Value::Object(o)) = (extra, &mut v) {
                    o.extend(m);
                }
                pretty(&v)
            };
            (body, i32::from(failed))
        }
        Ok(Outcome::Built(v)) => (pretty(&v), 0),
        Ok(Outcome::Census(c)) => {
            (if text { census_text(&c) } else { pretty(&codec::census_json(&c)) }, 0)
        }
        Err(Failure::Failed(v, msg)) => (if text { format!("failed: {msg}\n") } else { pretty(&v) }, 1),
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 3;
        }
    };
    let _ = out.write_all(body.as_bytes());
    code
}
