//! Argument parsing and dispatch for the `tdmc` binary.

use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use tdmc_core::cohomology::cohomology_cstar;
use tdmc_core::group::{group_from_spec, GroupSpec};
use tdmc_core::report::{breakdown_entries, build_report, render_table};
use tdmc_core::session::{Limits, Session};
use tdmc_core::subgroup::DEFAULT_MAX_ORDER;
use tdmc_core::verify::{parse_golden, verify_paper, Golden};

pub const MAX_ORDER_ENV: &str = "TDMC_MAX_ORDER";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("bad group spec: {0}")]
    BadGroupSpec(String),
    #[error(transparent)]
    Engine(#[from] tdmc_core::Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::BadGroupSpec(_) => 2,
            CliError::Engine(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "tdmc", version, about = "Module categories over twisted Drinfeld doubles of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Args)]
struct GroupArgs {
    /// Builtin name, inline JSON spec, or @path to a JSON spec.
    #[arg(long)]
    group: String,
    /// ω = k·ω₀ for a fixed generator ω₀ of H³(G, ℂ*).
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    omega: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Classify the indecomposable module categories.
    Classify(GroupArgs),
    /// Rank of one module category.
    Rank {
        #[command(flatten)]
        group: GroupArgs,
        /// Class label, e.g. H7 or C3.
        #[arg(long)]
        subgroup: String,
        /// Comma-separated H² coordinates of ψ relative to the base trivialization.
        #[arg(long, default_value = "")]
        psi: String,
    },
    /// Module categories of rank one.
    FiberFunctors(GroupArgs),
    /// Hⁿ(G, ℂ*) for n = 2 or 3.
    Cohomology {
        #[arg(long)]
        group: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        degree: u8,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Recompute the S3 tables and compare with the embedded golden data.
    VerifyPaper {
        /// Alternative golden data file.
        #[arg(long)]
        golden: Option<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    Classify,
    Rank { subgroup: String, psi: Vec<u64> },
    FiberFunctors,
    Cohomology { degree: usize },
    VerifyPaper { golden: Option<String> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub action: Action,
    pub group: Option<GroupSpec>,
    /// Unreduced; reduced modulo the order of ω₀ when run.
    pub omega: i64,
    pub format: Format,
    pub limits: Limits,
}

fn parse_group(text: &str) -> Result<GroupSpec, CliError> {
    let body = match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(Path::new(path))
            .map_err(|e| CliError::BadGroupSpec(format!("cannot read {path}: {e}")))?,
        None => text.to_string(),
    };
    let spec = GroupSpec::parse(body.trim()).map_err(|e| CliError::BadGroupSpec(e.to_string()))?;
    group_from_spec(&spec).map_err(|e| CliError::BadGroupSpec(e.to_string()))?;
    Ok(spec)
}

fn parse_psi(text: &str) -> Result<Vec<u64>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CliError::Usage(format!("bad ψ coordinate `{s}`"))))
        .collect()
}

fn limits_from_env() -> Result<Limits, CliError> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|max_order| Limits { max_order })
            .map_err(|_| CliError::Usage(format!("{MAX_ORDER_ENV} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(Limits { max_order: DEFAULT_MAX_ORDER }),
    }
}

/// Parses `argv` without the program name.
pub fn parse_command<I, S>(argv: I) -> Result<Command, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("tdmc")).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string()))?;
    let limits = limits_from_env()?;
    let with_group = |g: GroupArgs, action: Action| -> Result<Command, CliError> {
        Ok(Command { action, group: Some(parse_group(&g.group)?), omega: g.omega, format: g.format, limits })
    };
    match cli.command {
        Sub::Classify(g) => with_group(g, Action::Classify),
        Sub::FiberFunctors(g) => with_group(g, Action::FiberFunctors),
        Sub::Rank { group, subgroup, psi } => {
            let psi = parse_psi(&psi)?;
            with_group(group, Action::Rank { subgroup, psi })
        }
        Sub::Cohomology { group, degree, format } => Ok(Command {
            action: Action::Cohomology { degree: degree as usize },
            group: Some(parse_group(&group)?),
            omega: 0,
            format,
            limits,
        }),
        Sub::VerifyPaper { golden } => Ok(Command {
            action: Action::VerifyPaper { golden },
            group: None,
            omega: 0,
            format: Format::Table,
            limits,
        }),
    }
}

/// Standard output and exit status of a successful dispatch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn ok(stdout: String) -> Outcome {
    Outcome { stdout, code: 0 }
}

fn to_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn session(cmd: &Command) -> Result<Session, CliError> {
    let spec = cmd.group.clone().ok_or_else(|| CliError::Usage("missing --group".into()))?;
    Ok(Session::new(spec, cmd.limits)?)
}

pub fn run(cmd: &Command) -> Result<Outcome, CliError> {
    match &cmd.action {
        Action::Classify => {
            let s = session(cmd)?;
            let k = s.reduce_k(cmd.omega);
            let report = build_report(&s, &s.classify(k)?)?;
            Ok(ok(match cmd.format {
                Format::Json => to_json(&serde_json::to_value(&report).expect("report serializes")),
                Format::Table => render_table(&report),
            }))
        }
        Action::Rank { subgroup, psi } => {
            let s = session(cmd)?;
            let k = s.reduce_k(cmd.omega);
            let index = s
                .class_index(subgroup)
                .ok_or_else(|| CliError::Usage(format!("unknown subgroup class `{subgroup}`")))?;
            let r = s.module_rank(k, index, psi)?;
            let value = json!({
                "class": subgroup,
                "omega_k": k,
                "psi": psi,
                "orbit_count": r.orbit_reps.len(),
                "rank": r.total_rank,
                "breakdown": breakdown_entries(&r),
            });
            Ok(ok(match cmd.format {
                Format::Json => to_json(&value),
                Format::Table => {
                    let mut out = format!("{subgroup} psi={psi:?}: rank {}\n", r.total_rank);
                    for e in breakdown_entries(&r) {
                        out.push_str(&format!("  g={} |H^g|={} m={}\n", e.rep, e.stab_order, e.m));
                    }
                    out
                }
            }))
        }
        Action::FiberFunctors => {
            let s = session(cmd)?;
            let k = s.reduce_k(cmd.omega);
            let ff = s.fiber_functors(&s.classify(k)?)?;
            let items: Vec<_> = ff.iter().map(|(i, c)| json!({"class": s.labels[*i], "psi": c})).collect();
            Ok(ok(match cmd.format {
                Format::Json => to_json(&serde_json::Value::Array(items)),
                Format::Table => {
                    let mut out = format!("{} fiber functors\n", ff.len());
                    for (i, c) in &ff {
                        out.push_str(&format!("  {} psi={c:?}\n", s.labels[*i]));
                    }
                    out
                }
            }))
        }
        Action::Cohomology { degree } => {
            let spec = cmd.group.clone().ok_or_else(|| CliError::Usage("missing --group".into()))?;
            let g = group_from_spec(&spec)?;
            let h = cohomology_cstar(&g, *degree)?;
            Ok(ok(match cmd.format {
                Format::Json => to_json(&json!({
                    "group": spec,
                    "degree": degree,
                    "invariant_factors": h.invariant_factors,
                    "order": h.order(),
                })),
                Format::Table => {
                    let parts: Vec<String> = h.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
                    let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
                    format!("H^{degree}(G, C*) = {body}\n")
                }
            }))
        }
        Action::VerifyPaper { golden } => {
            let golden = match golden {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
                    parse_golden(&text)?
                }
                None => Golden::embedded(),
            };
            let outcome = verify_paper(&golden)?;
            Ok(Outcome { stdout: outcome.render(), code: if outcome.passed() { 0 } else { 1 } })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_classify() {
        let c = parse_command(["classify", "--group", "S3", "--omega", "0", "--format", "json"]).unwrap();
        assert_eq!(c.action, Action::Classify);
        assert_eq!(c.group, Some(GroupSpec::builtin("S3")));
        assert_eq!(c.omega, 0);
        assert_eq!(c.format, Format::Json);
    }

    #[test]
    fn parses_verify_paper() {
        let c = parse_command(["verify-paper"]).unwrap();
        assert_eq!(c.action, Action::VerifyPaper { golden: None });
    }

    #[test]
    fn rejects_bad_input() {
        let e = parse_command(["classify", "--group", "nope"]).unwrap_err();
        assert!(matches!(e, CliError::BadGroupSpec(_)));
        assert_eq!(e.exit_code(), 2);
        let e = parse_command(["classify", "--group", "S3", "--bogus"]).unwrap_err();
        assert!(matches!(e, CliError::Usage(_)));
        assert!(matches!(parse_command(["cohomology", "--group", "S3", "--degree", "4"]), Err(CliError::Usage(_))));
        assert!(matches!(parse_command(Vec::<String>::new()), Err(CliError::Usage(_))));
    }

    #[test]
    fn parses_rank_selectors() {
        let c = parse_command(["rank", "--group", "S3", "--omega", "-1", "--subgroup", "H14", "--psi", "1"]).unwrap();
        assert_eq!(c.action, Action::Rank { subgroup: "H14".into(), psi: vec![1] });
        assert_eq!(c.omega, -1);
        let json = r#"{"type":"perm","degree":3,"generators":[[2,1,3],[2,3,1]]}"#;
        assert!(parse_command(["cohomology", "--group", json, "--degree", "3"]).is_ok());
    }
}
