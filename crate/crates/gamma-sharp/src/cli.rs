//! Batch command-line front end with machine-readable JSON/CSV output.
//!
//! Exit codes: 0 = all checks agree with the published claims, 1 =
//! verification completed with disagreements, 2 = inconclusive (enclosure
//! too wide, certificate undecided, or solver failure), 3 = usage error.

use crate::analysis::{
    self, discrepancy_report, log_grid, mortici_estimate, order_fit, positivity_certificate,
    second_difference_rational, telescoping_conclusion, verify_inequality, AnalysisError,
    Direction, Theorem,
};
use crate::approx::{residual, ApproximantDef};
use crate::correction::{derive_family, DeriveError, Family};
use crate::kernel::{parse_rat, rat_int, rat_string, Rat};
use crate::oracle::{oracle_gamma, oracle_lngamma, theta_probe};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::process::ExitCode;

const DEFAULT_PRECISION: u32 = 128;

#[derive(Parser)]
#[command(
    name = "gamma-sharp",
    version,
    about = "Derive, evaluate, and verify corrected factorial approximations with exact and interval arithmetic"
)]
struct Cli {
    /// Working precision in bits (overrides GAMMA_SHARP_PRECISION; default 128)
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Also render midpoints for human reading (machine fields keep widths)
    #[arg(long, global = true)]
    midpoint: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct FamilyArgs {
    /// Approximant id: stirling | burnside | gosper | ramanujan-base |
    /// gosper-cf | gosper-product | ramanujan-cf | ramanujan-mixed
    #[arg(long)]
    family: String,
    /// Correction depth for corrected families
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve the correction constants of a family from scratch
    Derive {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Allow depths beyond the published tables (no acceptance claims)
        #[arg(long)]
        experimental: bool,
    },
    /// Print the embedded solved constants for all families
    Constants,
    /// Evaluate one approximant at a point, with residuals
    Eval {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Evaluation point as an exact rational, e.g. 10 or 7/2
        #[arg(long)]
        x: String,
    },
    /// Tabulate all approximants' log-space residuals over a grid
    Table {
        /// Grid as start:stop:scheme[:count], scheme in {linear, log10, pow2}
        #[arg(long)]
        grid: String,
        /// Output format
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Residual of one approximant at a point
    Residual {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        x: String,
    },
    /// Difference-limit estimation (Richardson) and decay-order fit
    Rate {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Order of the difference x^lambda (E(x) - E(x+1))
        #[arg(long)]
        lambda: i64,
        #[arg(long, default_value = "100:10000:log10:9")]
        grid: String,
    },
    /// Verify a published inequality on a grid; direction is measured
    Verify {
        /// Theorem index 1..=4
        #[arg(long)]
        theorem: u8,
        /// Depth k; all stated depths when omitted
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "1:10000:log10:40")]
        grid: String,
    },
    /// Second-derivative sign certificate for a corrected family
    Certify {
        #[command(flatten)]
        fam: FamilyArgs,
    },
    /// Reference enclosures of Gamma, ln Gamma, and the cubic probe theta
    Oracle {
        #[arg(long)]
        x: String,
    },
    /// Full discrepancy report: published vs derived/measured
    Report,
}

pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(3);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let p = cli
        .precision
        .or_else(|| {
            std::env::var("GAMMA_SHARP_PRECISION")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(DEFAULT_PRECISION);
    if p < 32 {
        eprintln!("precision must be at least 32 bits");
        return ExitCode::from(3);
    }
    match dispatch(&cli, p) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Inconclusive(msg)) => {
            eprintln!("inconclusive: {msg}");
            ExitCode::from(2)
        }
    }
}

enum CliError {
    Usage(String),
    Inconclusive(String),
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::WidthExceeded(m) => CliError::Inconclusive(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<crate::approx::ApproxError> for CliError {
    fn from(e: crate::approx::ApproxError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn envelope(config: Value, result: Value) -> Value {
    let timestamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    json!({
        "schemaVersion": crate::SCHEMA_VERSION,
        "timestamp": timestamp,
        "config": config,
        "result": result,
    })
}

fn emit(doc: &Value) {
    println!("{}", serde_json::to_string_pretty(doc).expect("serializable"));
}

fn parse_x(s: &str) -> Result<Rat, CliError> {
    parse_rat(s).map_err(|e| CliError::Usage(format!("bad rational {s:?}: {e}")))
}

fn parse_def(fam: &FamilyArgs) -> Result<ApproximantDef, CliError> {
    ApproximantDef::parse(&fam.family, fam.k).map_err(|e| CliError::Usage(e.to_string()))
}

/// Parses "start:stop:scheme[:count]" into exact rational grid points.
fn parse_grid(spec: &str) -> Result<Vec<Rat>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() < 3 || parts.len() > 4 {
        return Err(CliError::Usage(format!(
            "grid must be start:stop:scheme[:count], got {spec:?}"
        )));
    }
    let start = parse_x(parts[0])?;
    let stop = parse_x(parts[1])?;
    if start >= stop {
        return Err(CliError::Usage("grid start must be below stop".into()));
    }
    let count: usize = match parts.get(3) {
        Some(c) => c
            .parse()
            .map_err(|_| CliError::Usage(format!("bad grid count {c:?}")))?,
        None => 40,
    };
    if count < 2 {
        return Err(CliError::Usage("grid needs at least two points".into()));
    }
    Ok(match parts[2] {
        "linear" => {
            let step = (&stop - &start) / rat_int(count as i64 - 1);
            (0..count)
                .map(|i| &start + &step * rat_int(i as i64))
                .collect()
        }
        "log10" => log_grid(&start, &stop, count),
        "pow2" => {
            let mut v = Vec::new();
            let mut x = start.clone();
            while x <= stop {
                v.push(x.clone());
                x *= rat_int(2);
            }
            v
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown grid scheme {other:?} (linear, log10, pow2)"
            )))
        }
    })
}

fn dispatch(cli: &Cli, p: u32) -> Result<ExitCode, CliError> {
    match &cli.cmd {
        Cmd::Derive { fam, experimental } => cmd_derive(fam, *experimental),
        Cmd::Constants => cmd_constants(),
        Cmd::Eval { fam, x } => cmd_eval(cli, "eval", fam, x, p),
        Cmd::Table { grid, format } => cmd_table(grid, format, p),
        Cmd::Residual { fam, x } => cmd_eval(cli, "residual", fam, x, p),
        Cmd::Rate { fam, lambda, grid } => cmd_rate(fam, *lambda, grid, p),
        Cmd::Verify { theorem, k, grid } => cmd_verify(*theorem, *k, grid, p),
        Cmd::Certify { fam } => cmd_certify(fam),
        Cmd::Oracle { x } => cmd_oracle(x, p),
        Cmd::Report => cmd_report(p),
    }
}

fn cmd_derive(fam: &FamilyArgs, experimental: bool) -> Result<ExitCode, CliError> {
    let family = Family::parse(&fam.family)
        .ok_or_else(|| CliError::Usage(format!("not a corrected family: {:?}", fam.family)))?;
    let k = fam.k.unwrap_or_else(|| family.max_depth());
    match derive_family(family, k, experimental) {
        Ok(rec) => {
            emit(&envelope(
                json!({"command": "derive", "family": family.id(), "k": k,
                       "truncationOrder": rec.truncation_order, "experimental": experimental}),
                rec.to_json(),
            ));
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ DeriveError::DepthCap { .. }) => Err(CliError::Usage(e.to_string())),
        Err(e) => Err(CliError::Inconclusive(format!("solver failure: {e}"))),
    }
}

fn cmd_constants() -> Result<ExitCode, CliError> {
    let families: Vec<Value> = crate::approx::tables::TABLES
        .iter()
        .map(|t| {
            let family = Family::parse(t.family_id).expect("table family ids are valid");
            json!({
                "familyId": t.family_id,
                "truncationOrder": t.truncation_order,
                "levels": t.levels.iter().enumerate().map(|(k, lv)| {
                    let def = ApproximantDef::Corrected { family, k };
                    let leading = analysis::exact_difference_leading(&def).map(|(ord, c)| {
                        json!({"order": ord, "coefficientMagnitude": rat_string(&c)})
                    });
                    json!({
                        "level": k,
                        "constants": lv.constants.iter()
                            .map(|(n, v)| json!({"name": n, "value": v}))
                            .collect::<Vec<_>>(),
                        "mu": lv.survivor_order - 1,
                        "differenceLeading": leading,
                    })
                }).collect::<Vec<_>>(),
            })
        })
        .collect();
    emit(&envelope(
        json!({"command": "constants"}),
        json!({"families": families}),
    ));
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(cli: &Cli, cmd: &str, fam: &FamilyArgs, x: &str, p: u32) -> Result<ExitCode, CliError> {
    let def = parse_def(fam)?;
    let x = parse_x(x)?;
    let value = def.eval_approx(&x, p)?;
    let sample = residual(&def, &x, p)?;
    let mut result = json!({
        "approximant": def.id(),
        "x": rat_string(&x),
        "value": value.to_json(30),
        "E": sample.e.to_json(25),
        "relE": sample.rel_e.to_json(25),
    });
    if cli.midpoint {
        result["valueMidpoint"] = Value::String(value.display(20));
    }
    emit(&envelope(
        json!({"command": cmd, "approximant": def.id(), "x": rat_string(&x), "precision": p}),
        result,
    ));
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(grid: &str, format: &str, p: u32) -> Result<ExitCode, CliError> {
    let points = parse_grid(grid)?;
    let defs = ApproximantDef::all();
    let mut rows = Vec::new();
    for x in &points {
        let mut cells = Vec::new();
        for def in &defs {
            let e = residual(def, x, p)?.e;
            cells.push(e.display(12));
        }
        rows.push((x.clone(), cells));
    }
    if format == "csv" {
        let header: Vec<String> = std::iter::once("x".to_string())
            .chain(defs.iter().map(|d| d.id()))
            .collect();
        println!("{}", header.join(","));
        for (x, cells) in rows {
            println!("{},{}", rat_string(&x), cells.join(","));
        }
    } else if format == "json" {
        emit(&envelope(
            json!({"command": "table", "grid": grid, "precision": p}),
            json!({
                "columns": defs.iter().map(|d| d.id()).collect::<Vec<_>>(),
                "rows": rows.iter().map(|(x, cells)| json!({
                    "x": rat_string(x),
                    "E": cells,
                })).collect::<Vec<_>>(),
            }),
        ));
    } else {
        return Err(CliError::Usage(format!("unknown format {format:?}")));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_rate(fam: &FamilyArgs, lambda: i64, grid: &str, p: u32) -> Result<ExitCode, CliError> {
    let def = parse_def(fam)?;
    let points = parse_grid(grid)?;
    let report = mortici_estimate(&def, lambda, &points, p)?;
    let mu = order_fit(&def, &points, p).ok();
    let mut doc = report.to_json();
    doc["muFit"] = json!(mu);
    emit(&envelope(
        json!({"command": "rate", "approximant": def.id(), "lambda": lambda,
               "grid": grid, "precision": p}),
        doc,
    ));
    // agreement gate: measured limit magnitude within 1% of the exact one
    if let Some(exact) = &report.limit_exact_magnitude {
        let measured = report.limit_check.midpoint().to_f64().abs();
        let expect = exact.numer().to_string().parse::<f64>().unwrap_or(0.0)
            / exact.denom().to_string().parse::<f64>().unwrap_or(1.0);
        if expect > 0.0 && ((measured - expect) / expect).abs() > 0.01 {
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(theorem: u8, k: Option<usize>, grid: &str, p: u32) -> Result<ExitCode, CliError> {
    let thm = Theorem::get(theorem).map_err(|e| CliError::Usage(e.to_string()))?;
    let depths = match k {
        Some(k) if thm.depths().contains(&k) => vec![k],
        Some(k) => {
            return Err(CliError::Usage(format!(
                "theorem {theorem} makes no claim at depth {k}"
            )))
        }
        None => thm.depths(),
    };
    let mut reports = Vec::new();
    let mut any_undecided = false;
    let mut any_disagree = false;
    for k in depths {
        let def = thm.def(k);
        // clip the requested grid to the theorem's stated domain
        let start = rat_int(def.valid_domain());
        let points: Vec<Rat> = parse_grid(grid)?
            .into_iter()
            .filter(|x| *x >= start)
            .collect();
        if points.len() < 2 {
            return Err(CliError::Usage(format!(
                "grid has fewer than two points at or above the domain start {start}"
            )));
        }
        let rep = verify_inequality(theorem, k, &points, p)?;
        match rep.agrees {
            None => any_undecided = true,
            Some(false) => any_disagree = true,
            Some(true) => {}
        }
        reports.push(rep.to_json());
    }
    emit(&envelope(
        json!({"command": "verify", "theorem": theorem, "k": k, "grid": grid, "precision": p}),
        json!({"reports": reports}),
    ));
    Ok(if any_undecided {
        ExitCode::from(2)
    } else if any_disagree {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_certify(fam: &FamilyArgs) -> Result<ExitCode, CliError> {
    let def = parse_def(fam)?;
    let f2 = second_difference_rational(&def)?;
    let start = rat_int(def.valid_domain());
    let cert = positivity_certificate(&f2, &start);
    let deduced = telescoping_conclusion(cert.verdict);
    // certificate signs map to the measured side of Gamma; compare with
    // the published direction when the approximant belongs to a theorem
    let published = match def {
        ApproximantDef::Corrected { family, k } => {
            let thm_id = match family {
                Family::GosperCf => 1,
                Family::GosperProduct => 2,
                Family::RamanujanCf => 3,
                Family::RamanujanMixed => 4,
            };
            let thm = Theorem::get(thm_id).expect("fixed ids");
            thm.depths().contains(&k).then(|| thm.published_direction(k))
        }
        _ => None,
    };
    let agrees = match (deduced, published) {
        (Direction::Undecided, _) | (_, None) => None,
        (d, Some(pd)) => Some(d == pd),
    };
    emit(&envelope(
        json!({"command": "certify", "approximant": def.id()}),
        json!({
            "certificate": cert.to_json(),
            "deducedDirection": deduced.label(),
            "publishedDirection": published.map(|d| d.label()),
            "agrees": agrees,
        }),
    ));
    Ok(match (cert.verdict, agrees) {
        (analysis::Verdict::Inconclusive, _) => ExitCode::from(2),
        (_, Some(false)) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    })
}

fn cmd_oracle(x: &str, p: u32) -> Result<ExitCode, CliError> {
    let x = parse_x(x)?;
    let usage = |e: crate::oracle::OracleError| CliError::Usage(e.to_string());
    let lg = oracle_lngamma(&x, p).map_err(usage)?;
    let gamma = oracle_gamma(&x, p).map_err(usage)?;
    let theta = theta_probe(&x, p).map_err(usage)?;
    emit(&envelope(
        json!({"command": "oracle", "x": rat_string(&x), "precision": p}),
        json!({
            "lngamma": lg.to_json(30),
            "gamma": gamma.to_json(30),
            "theta": theta.to_json(20),
        }),
    ));
    Ok(ExitCode::SUCCESS)
}

fn cmd_report(p: u32) -> Result<ExitCode, CliError> {
    let doc = discrepancy_report(p)?;
    let all_constants_agree = doc["constants"]
        .as_array()
        .map(|rows| rows.iter().all(|r| r["agrees"] == json!(true)))
        .unwrap_or(false);
    let any_direction_undecided = doc["directions"]
        .as_array()
        .map(|rows| rows.iter().any(|r| r["agrees"].is_null()))
        .unwrap_or(true);
    let all_directions_agree = doc["directions"]
        .as_array()
        .map(|rows| rows.iter().all(|r| r["agrees"] == json!(true)))
        .unwrap_or(false);
    emit(&envelope(json!({"command": "report", "precision": p}), doc));
    Ok(if any_direction_undecided {
        ExitCode::from(2)
    } else if !all_constants_agree || !all_directions_agree {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
