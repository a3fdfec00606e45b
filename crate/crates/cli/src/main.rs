//! `clutterlab` command-line front end.
//!
//! Exit codes: 0 when the command succeeds or the property holds, 1 when the
//! property fails, 2 on usage, parse or limit errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use clutterlab::io::{clutter_to_json, parse_clutter, parse_point_set};
use clutterlab::oracle::{audit_strategy, builtin_strategy, AuditConfig, BUILTIN_STRATEGIES};
use clutterlab::polyhedral::{facet_audit, is_cube_ideal, is_ideal, Limits, VertexCertificate};
use clutterlab::theorem::{verify_theorem, TheoremConfig};
use clutterlab::{cuboid_of, induced_clutter, Clutter, Error, Point, SubsetMask, VERSION};

#[derive(Parser, Debug)]
#[command(
    name = "clutterlab",
    version,
    about = "Exact clutter, cuboid and filter-oracle toolkit"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalArgs {
    /// Basis budget for vertex enumeration and search budgets.
    #[arg(long, global = true, default_value_t = Limits::default().max_bases, value_parser = positive_u128)]
    limit_bases: u128,
    /// Largest dimension accepted by the facet audit.
    #[arg(long, global = true, default_value_t = Limits::default().facet_dim_cap, value_parser = positive_usize)]
    facet_dim_cap: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a clutter is ideal.
    CheckIdeal { path: PathBuf },
    /// Decide whether a point set is cube-ideal.
    CheckCubeIdeal {
        path: PathBuf,
        /// Also run the facet audit on the hull.
        #[arg(long)]
        facets: bool,
    },
    /// Write the minor obtained by deleting and contracting element lists.
    Minor {
        path: PathBuf,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<usize>,
    },
    /// Search for a Δ3 minor; exit 0 when found.
    FindDelta3 { path: PathBuf },
    /// Sweep the hard family S_(p:i,j,k) and its proper supersets.
    VerifyTheorem {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Centres sampled when n > 3.
        #[arg(long, default_value_t = TheoremConfig::default().point_sample, value_parser = positive_usize)]
        point_sample: usize,
        /// Negative control: corrupt each hard instance.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Audit a registered strategy against the query lower bound.
    Audit {
        #[arg(long)]
        strategy: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = AuditConfig::default().requirement_sample)]
        requirement_sample: usize,
        #[arg(long, default_value_t = AuditConfig::default().hard_sample)]
        hard_sample: usize,
    },
    /// Convert a point set file to its cuboid clutter file.
    Cuboid { path: PathBuf },
    /// Write the induced clutter of a point set at a point.
    Induced {
        path: PathBuf,
        /// Point as a 0/1 string, coordinate 1 first.
        #[arg(long)]
        point: String,
    },
}

fn positive_u128(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// A command failure mapped to exit code 2.
#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { line, message } => {
                Failure(format!("parse error at line {line}: {message}"))
            }
            other => Failure(other.to_string()),
        }
    }
}

/// What a command produced: text for the output sink and a property verdict.
struct Outcome {
    text: String,
    holds: bool,
}

impl Outcome {
    fn report(value: Value, holds: bool) -> Self {
        let mut text = serde_json::to_string_pretty(&value).expect("reports serialize");
        text.push('\n');
        Self { text, holds }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}

fn limits_of(g: &GlobalArgs) -> Limits {
    Limits {
        max_bases: g.limit_bases,
        facet_dim_cap: g.facet_dim_cap,
    }
}

fn clutter_value(c: &Clutter) -> Value {
    let members: Vec<Vec<usize>> = c.members().iter().map(|m| m.elements().collect()).collect();
    json!({ "ground_size": c.ground_size(), "members": members })
}

fn certificate_value(cert: &VertexCertificate) -> Value {
    let mut v = serde_json::to_value(cert).expect("certificates serialize");
    let shown: Vec<String> = cert.coordinates.iter().map(|x| x.to_string()).collect();
    v["display"] = json!(shown);
    v
}

fn header(command: &str, g: &GlobalArgs, seed: Option<u64>, extra: Value) -> Value {
    let mut config = json!({ "limits": limits_of(g) });
    if let Value::Object(fields) = extra {
        for (k, v) in fields {
            config[k] = v;
        }
    }
    json!({ "command": command, "version": VERSION, "seed": seed, "config": config })
}

fn merge(mut base: Value, body: Value) -> Value {
    if let Value::Object(fields) = body {
        for (k, v) in fields {
            base[k] = v;
        }
    }
    base
}

fn subset(ground: usize, elements: &[usize], flag: &str) -> Result<SubsetMask, Failure> {
    SubsetMask::from_elements(ground, elements).map_err(|e| Failure(format!("--{flag}: {e}")))
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let g = &cli.global;
    let limits = limits_of(g);
    match &cli.command {
        Command::CheckIdeal { path } => {
            let c = parse_clutter(&read(path)?)?;
            let report = is_ideal(&c, &limits)?;
            let body = json!({
                "input": path.display().to_string(),
                "ideal": report.ideal,
                "degenerate": report.degenerate,
                "witness": report.witness.as_ref().map(certificate_value),
            });
            Ok(Outcome::report(
                merge(header("check-ideal", g, None, json!({})), body),
                report.ideal,
            ))
        }
        Command::CheckCubeIdeal { path, facets } => {
            let s = parse_point_set(&read(path)?)?;
            let result = is_cube_ideal(&s, &limits)?;
            let witness = result.witness.as_ref().map(|w| {
                json!({
                    "point": w.point.to_string(),
                    "induced": clutter_value(&w.induced),
                    "induced_is_delta3": w.induced.is_delta3(),
                    "vertex": certificate_value(&w.vertex),
                })
            });
            let mut body = json!({
                "input": path.display().to_string(),
                "dimension": s.dim(),
                "points": s.len(),
                "cube_ideal": result.cube_ideal,
                "witness": witness,
            });
            if *facets {
                let audit = facet_audit(&s, &limits)?;
                let shown: Vec<String> = audit
                    .facets
                    .iter()
                    .map(|f| f.inequality.to_string())
                    .collect();
                body["facet_audit"] = serde_json::to_value(&audit).expect("audits serialize");
                body["facet_audit"]["display"] = json!(shown);
            }
            let extra = json!({ "facets": facets });
            Ok(Outcome::report(
                merge(header("check-cube-ideal", g, None, extra), body),
                result.cube_ideal,
            ))
        }
        Command::Minor {
            path,
            delete,
            contract,
        } => {
            let c = parse_clutter(&read(path)?)?;
            let n = c.ground_size();
            let minor = c.minor(
                subset(n, delete, "delete")?,
                subset(n, contract, "contract")?,
            )?;
            let map: Vec<String> = (1..=minor.relabeling.len())
                .map(|k| format!("{k}<-{}", minor.relabeling.original_label(k)))
                .collect();
            eprintln!("relabel: {}", map.join(" "));
            Ok(Outcome {
                text: clutter_to_json(&minor.clutter),
                holds: true,
            })
        }
        Command::FindDelta3 { path } => {
            let c = parse_clutter(&read(path)?)?;
            let found = c.find_delta3_minor(g.limit_bases)?;
            let witness = found.map(|w| {
                let minor = c
                    .minor(w.delete, w.contract)
                    .expect("witness sets are disjoint");
                json!({
                    "delete": w.delete.elements().collect::<Vec<_>>(),
                    "contract": w.contract.elements().collect::<Vec<_>>(),
                    "survivors": minor.relabeling.survivors(),
                })
            });
            let body = json!({
                "input": path.display().to_string(),
                "has_delta3_minor": witness.is_some(),
                "witness": witness,
            });
            let holds = found.is_some();
            Ok(Outcome::report(
                merge(header("find-delta3", g, None, json!({})), body),
                holds,
            ))
        }
        Command::VerifyTheorem {
            n,
            seed,
            point_sample,
            inject_fault,
        } => {
            let config = TheoremConfig {
                point_sample: *point_sample,
                seed: *seed,
                limits,
                inject_fault: *inject_fault,
            };
            let report = verify_theorem(*n, &config)?;
            let extra =
                json!({ "n": n, "point_sample": point_sample, "inject_fault": inject_fault });
            let body = json!({
                "n": report.n,
                "polyhedral_checks": report.polyhedral_checks,
                "tuples": report.tuples,
                "pass": report.pass,
            });
            Ok(Outcome::report(
                merge(header("verify-theorem", g, Some(*seed), extra), body),
                report.pass,
            ))
        }
        Command::Audit {
            strategy,
            n,
            seed,
            requirement_sample,
            hard_sample,
        } => {
            let strat = builtin_strategy(strategy, limits).ok_or_else(|| {
                Failure(format!(
                    "unknown strategy `{strategy}`; known: {}",
                    BUILTIN_STRATEGIES.join(", ")
                ))
            })?;
            let config = AuditConfig {
                requirement_sample: *requirement_sample,
                hard_sample: *hard_sample,
                seed: *seed,
                limits,
            };
            let report = audit_strategy(strat.as_ref(), *n, &config)?;
            let mut value = serde_json::to_value(&report).expect("reports serialize");
            value["command"] = json!("audit");
            value["version"] = json!(VERSION);
            Ok(Outcome::report(value, report.pass))
        }
        Command::Cuboid { path } => {
            let s = parse_point_set(&read(path)?)?;
            Ok(Outcome {
                text: clutter_to_json(&cuboid_of(&s)),
                holds: true,
            })
        }
        Command::Induced { path, point } => {
            let s = parse_point_set(&read(path)?)?;
            let p: Point = point
                .parse()
                .map_err(|e: Error| Failure(format!("--point: {e}")))?;
            if p.dim() != s.dim() {
                return Err(Failure(format!(
                    "--point has {} coordinates, point set has {}",
                    p.dim(),
                    s.dim()
                )));
            }
            Ok(Outcome {
                text: clutter_to_json(&induced_clutter(&s, p)?),
                holds: true,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let written = match &cli.global.out {
                Some(path) => fs::write(path, &outcome.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            match written {
                Err(message) => {
                    eprintln!("error: {message}");
                    ExitCode::from(2)
                }
                Ok(()) if outcome.holds => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
            }
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
