//! The `ck` command line: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 when every verdict passes (expected failures included),
//! 1 when a verification fails, 2 on usage or engine errors.

mod render;

use std::collections::HashMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactcas::{parse_rational, parse_scalar, CasError, Scalar};
use crate::expand::{
    atlas_arrows, build_j, build_primed_generators, numeric_residuals, run_atlas, run_expansion,
    split_casimirs, AtlasEntry, ExpandError, ExpandOptions, ExpansionProblem, ExpansionReport,
    NumericResidual,
};
use crate::liealg::{
    algebra_from_json, apply_involution, builtin_algebra, cartan_check, catalog, catalog_lookup,
    check_structure, contract, make_ck_algebra, AlgebraDefinition, CartanReport,
    ContractionKind, Family, InvolutionKind, InvolutionReport, LieAlgebra, LieError, ParamMode,
    StructureReport,
};
use crate::liealg::catalog::{lookup_signs, name_for_values, Sign};
use crate::uea::{casimir, is_central, UeaError};

pub const DEGREE_BOUND_VAR: &str = "CK_DEGREE_BOUND";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("bad parameter `{0}`: expected w1=VALUE or w2=VALUE with an integer, a rational or `sym`")]
    BadParameter(String),
    #[error("bad value assignment `{0}`: expected NAME=NUMBER")]
    BadAssignment(String),
    #[error("{DEGREE_BOUND_VAR} must be a non-negative integer, got `{0}`")]
    BadDegreeBound(String),
    #[error("choose one algebra: a built-in name, --ck or --file")]
    AlgebraChoice,
    #[error("no built-in expansion from `{0}` along axis {1}")]
    NoArrow(String, u8),
    #[error("cannot read {0}: {1}")]
    Io(PathBuf, String),
    #[error(transparent)]
    Cas(#[from] CasError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Uea(#[from] UeaError),
    #[error(transparent)]
    Expand(#[from] ExpandError),
}

#[derive(Parser, Debug)]
#[command(name = "ck", version, about = "Cayley-Klein algebras: structure checks, contractions and Casimir expansions")]
pub struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Nonzero coefficients stay symbolic.
    Symbolic,
    /// Nonzero coefficients become +1 or -1.
    Representative,
}

impl From<Mode> for ParamMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Symbolic => ParamMode::Symbolic,
            Mode::Representative => ParamMode::Representative,
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct AlgebraArgs {
    /// Built-in key (e.g. `so22`), sign pair (`+-`) or unique algebra name.
    pub name: Option<String>,
    /// A family member from its coefficients, e.g. `--ck w1=0 w2=-1`;
    /// values are integers, rationals or `sym`.
    #[arg(long, num_args = 1..=2, value_name = "wN=VALUE")]
    pub ck: Option<Vec<String>>,
    /// Algebra definition JSON.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Show an algebra: bracket table, Casimirs, involutions.
    Algebra {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Print the bracket table and the involution details.
        #[arg(long)]
        show: bool,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: Mode,
    },
    /// Antisymmetry, Jacobi identities and Casimir centrality.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// All nine family members.
        #[arg(long)]
        all_ck: bool,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: Mode,
    },
    /// Contract an algebra along one axis.
    Contract {
        /// Built-in key, sign pair or unique algebra name.
        #[arg(long)]
        from: Option<String>,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_parser = parse_kind)]
        kind: ContractionKind,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: Mode,
    },
    /// Expand a built-in algebra along one axis.
    Expand {
        #[arg(long)]
        from: String,
        /// Target key; all built-in targets along the axis when omitted.
        #[arg(long)]
        to: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        axis: u8,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: Mode,
        /// Numeric check at the given values, e.g. `--at a1=0.5 --at c1=2`.
        #[arg(long = "at", value_name = "NAME=VALUE")]
        at: Vec<String>,
        /// Largest accepted numeric residual.
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Every built-in expansion, including the one expected to fail.
    Atlas {
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: Mode,
    },
}

fn parse_kind(s: &str) -> Result<ContractionKind, String> {
    ContractionKind::parse(s).ok_or_else(|| format!("unknown contraction kind `{s}` (space-time or speed-space)"))
}

/// Echo of the command, verdict and payload. Holds no timings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub verb: String,
    pub ok: bool,
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Algebra(AlgebraPayload),
    Verify(VerifyPayload),
    Contract(ContractPayload),
    Expand(ExpandPayload),
    Atlas(AtlasPayload),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CasimirEntry {
    pub name: String,
    pub element: String,
    pub central: bool,
    /// First nonzero commutator, as `"[C,X] = ..."`.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvolutionEntry {
    pub report: InvolutionReport,
    pub cartan: CartanReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraPayload {
    pub definition: AlgebraDefinition,
    pub cell: Option<String>,
    pub casimirs: Vec<CasimirEntry>,
    pub involutions: Vec<InvolutionEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub structure: StructureReport,
    pub casimirs: Vec<CasimirEntry>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub algebras: Vec<VerifyEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContractPayload {
    pub contraction: ContractionKind,
    pub source: AlgebraDefinition,
    pub result: AlgebraDefinition,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericEntry {
    pub arrow: String,
    pub values: Vec<(String, f64)>,
    pub residuals: Vec<NumericResidual>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpandPayload {
    pub degree_bound_override: Option<usize>,
    pub reports: Vec<ExpansionReport>,
    pub numeric: Vec<NumericEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtlasPayload {
    pub mode: Mode,
    pub degree_bound_override: Option<usize>,
    pub entries: Vec<AtlasEntry>,
}

/// What a run prints and returns.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn parse_param(text: &str) -> Result<(String, Scalar), CliError> {
    let bad = || CliError::BadParameter(text.into());
    let (name, value) = text.split_once('=').ok_or_else(bad)?;
    let name = name.trim();
    if name != "w1" && name != "w2" {
        return Err(bad());
    }
    let value = value.trim();
    let s = if value == "sym" {
        Scalar::var(name)
    } else {
        Scalar::from_rational(parse_rational(value).map_err(|_| bad())?)
    };
    Ok((name.into(), s))
}

/// `--ck` values; a missing coefficient stays symbolic.
pub fn ck_from_params(params: &[String]) -> Result<LieAlgebra, CliError> {
    let mut w1 = Scalar::var("w1");
    let mut w2 = Scalar::var("w2");
    for p in params {
        match parse_param(p)? {
            (n, v) if n == "w1" => w1 = v,
            (_, v) => w2 = v,
        }
    }
    let name = name_for_values(&w1, &w2);
    Ok(make_ck_algebra(w1, w2).with_name(name))
}

fn resolve(args: &AlgebraArgs, from: Option<&str>, mode: Mode) -> Result<(LieAlgebra, Option<String>), CliError> {
    let name = from.map(str::to_string).or_else(|| args.name.clone());
    match (name, &args.ck, &args.file) {
        (Some(n), None, None) => {
            let key = if n == crate::liealg::catalog::EXT_GALILEI_KEY {
                n
            } else {
                catalog_lookup(&n)?.key
            };
            Ok((builtin_algebra(&key, mode.into())?, Some(key)))
        }
        (None, Some(params), None) => Ok((ck_from_params(params)?, None)),
        (None, None, Some(path)) => {
            let src = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(path.clone(), e.to_string()))?;
            Ok((algebra_from_json(&src)?, None))
        }
        _ => Err(CliError::AlgebraChoice),
    }
}

fn degree_bound_override() -> Result<Option<usize>, CliError> {
    match std::env::var(DEGREE_BOUND_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::BadDegreeBound(v)),
        Err(_) => Ok(None),
    }
}

fn casimir_entries(g: &LieAlgebra) -> Result<Vec<CasimirEntry>, CliError> {
    if !matches!(g.family(), Family::CayleyKlein { .. }) {
        return Ok(Vec::new());
    }
    let g = Arc::new(g.clone());
    let mut out = Vec::new();
    for index in [1u8, 2] {
        let c = casimir(&g, index)?;
        let check = is_central(&c);
        out.push(CasimirEntry {
            name: format!("C{index}"),
            element: c.to_string(),
            central: check.central,
            witness: check.witness.map(|(x, r)| format!("[C{index},{x}] = {r}")),
        });
    }
    Ok(out)
}

fn involution_entries(g: &LieAlgebra) -> Vec<InvolutionEntry> {
    InvolutionKind::all()
        .into_iter()
        .filter_map(|k| apply_involution(g, k).ok())
        .map(|report| {
            let d = report.decomposition.clone().expect("set by apply_involution");
            InvolutionEntry {
                cartan: cartan_check(g, &d),
                report,
            }
        })
        .collect()
}

fn verify_entry(g: &LieAlgebra) -> Result<VerifyEntry, CliError> {
    let structure = check_structure(g);
    let casimirs = casimir_entries(g)?;
    let passed = structure.passed && casimirs.iter().all(|c| c.central);
    Ok(VerifyEntry {
        structure,
        casimirs,
        passed,
    })
}

fn parse_values(at: &[String]) -> Result<Vec<(String, f64)>, CliError> {
    at.iter()
        .map(|a| {
            let bad = || CliError::BadAssignment(a.clone());
            let (name, value) = a.split_once('=').ok_or_else(bad)?;
            let value = match value.trim().parse::<f64>() {
                Ok(v) => v,
                Err(_) => parse_scalar(value)
                    .ok()
                    .and_then(|s| s.eval_f64(&HashMap::new()))
                    .ok_or_else(bad)?,
            };
            Ok((name.trim().to_string(), value))
        })
        .collect()
}

fn targets(from: &str, to: Option<&str>, axis: u8) -> Result<Vec<String>, CliError> {
    if let Some(t) = to {
        let key = if t == crate::liealg::catalog::EXT_GALILEI_KEY {
            t.to_string()
        } else {
            catalog_lookup(t)?.key
        };
        return Ok(vec![key]);
    }
    let found: Vec<String> = atlas_arrows()
        .into_iter()
        .filter(|a| a.source == from && a.axis == axis)
        .map(|a| a.target)
        .collect();
    if found.is_empty() {
        return Err(CliError::NoArrow(from.into(), axis));
    }
    Ok(found)
}

fn source_key(from: &str) -> Result<String, CliError> {
    if from == crate::liealg::catalog::EXT_GALILEI_KEY {
        Ok(from.into())
    } else {
        Ok(catalog_lookup(from)?.key)
    }
}

fn execute(cmd: &Command) -> Result<(Payload, bool), CliError> {
    match cmd {
        Command::Algebra { algebra, mode, .. } => {
            let (g, cell) = resolve(algebra, None, *mode)?;
            let payload = AlgebraPayload {
                definition: AlgebraDefinition::from_algebra(&g),
                cell,
                casimirs: casimir_entries(&g)?,
                involutions: involution_entries(&g),
            };
            Ok((Payload::Algebra(payload), true))
        }
        Command::Verify { algebra, all_ck, mode } => {
            let algebras = if *all_ck {
                catalog()
                    .into_iter()
                    .filter(|e| e.signs.is_some())
                    .map(|e| builtin_algebra(&e.key, (*mode).into()))
                    .collect::<Result<Vec<_>, _>>()?
            } else {
                vec![resolve(algebra, None, *mode)?.0]
            };
            let algebras = algebras
                .iter()
                .map(verify_entry)
                .collect::<Result<Vec<_>, _>>()?;
            let ok = algebras.iter().all(|a| a.passed);
            Ok((Payload::Verify(VerifyPayload { algebras }), ok))
        }
        Command::Contract { from, algebra, kind, mode } => {
            let (g, cell) = resolve(algebra, from.as_deref(), *mode)?;
            let mut c = contract(&g, *kind)?;
            // symbolic coefficients lose the sign, the cell still knows it
            if let Some((s1, s2)) = cell.and_then(|k| catalog_lookup(&k).ok()).and_then(|e| e.signs) {
                let (s1, s2) = match kind {
                    ContractionKind::SpaceTime => (Sign::Zero, s2),
                    ContractionKind::SpeedSpace => (s1, Sign::Zero),
                };
                c = c.with_name(lookup_signs(s1, s2).algebra);
            }
            let payload = ContractPayload {
                contraction: *kind,
                source: AlgebraDefinition::from_algebra(&g),
                result: AlgebraDefinition::from_algebra(&c),
            };
            Ok((Payload::Contract(payload), true))
        }
        Command::Expand { from, to, axis, mode, at, tolerance } => {
            let bound = degree_bound_override()?;
            let opts = ExpandOptions { degree_bound: bound };
            let from = source_key(from)?;
            let values = parse_values(at)?;
            let mut reports = Vec::new();
            let mut numeric = Vec::new();
            for target in targets(&from, to.as_deref(), *axis)? {
                let p = ExpansionProblem::from_keys(&from, &target, *axis, (*mode).into())?;
                let report = run_expansion(&p, &opts)?;
                if !values.is_empty() {
                    let (j, _) = build_j(&split_casimirs(&p)?)?;
                    let primed = build_primed_generators(&p.initial, &j)?;
                    let map: HashMap<String, f64> = values.iter().cloned().collect();
                    let residuals = numeric_residuals(&p, &primed, &map, &opts)?;
                    let passed = residuals.iter().all(|r| r.max_abs <= *tolerance);
                    numeric.push(NumericEntry {
                        arrow: report.arrow.clone(),
                        values: values.clone(),
                        residuals,
                        passed,
                    });
                }
                reports.push(report);
            }
            let ok = reports.iter().all(|r| r.verdict.is_ok()) && numeric.iter().all(|n| n.passed);
            let payload = ExpandPayload {
                degree_bound_override: bound,
                reports,
                numeric,
            };
            Ok((Payload::Expand(payload), ok))
        }
        Command::Atlas { mode } => {
            let bound = degree_bound_override()?;
            let entries = run_atlas((*mode).into(), &ExpandOptions { degree_bound: bound });
            let ok = entries.iter().all(|e| e.verdict.is_ok());
            let payload = AtlasPayload {
                mode: *mode,
                degree_bound_override: bound,
                entries,
            };
            Ok((Payload::Atlas(payload), ok))
        }
    }
}

fn verb(cmd: &Command) -> &'static str {
    match cmd {
        Command::Algebra { .. } => "algebra",
        Command::Verify { .. } => "verify",
        Command::Contract { .. } => "contract",
        Command::Expand { .. } => "expand",
        Command::Atlas { .. } => "atlas",
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let command: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let started = Instant::now();
    let (payload, ok) = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let report = RunReport {
        command,
        verb: verb(&cli.command).into(),
        ok,
        payload,
    };
    let json = serde_json::to_string_pretty(&report).expect("plain data") + "\n";
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, &json) {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
    }
    let stdout = match cli.format {
        Format::Json => json,
        Format::Text => {
            let show = matches!(cli.command, Command::Algebra { show: true, .. });
            render::text(&report, show, started.elapsed())
        }
    };
    Outcome {
        code: if ok { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}
