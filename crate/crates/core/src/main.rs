use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use sinecert::analysis::{self, ProofConstant};
use sinecert::certify::{self, certify_ps, Mode, ScanParam};
use sinecert::coeffseq::{
    belov_partial, check_condition, dominance, dominates_slices, endpoint_sums, Coeff, CoeffSeq, Condition,
};
use sinecert::{reproduce, Error, Result};

/// Exact and numeric positivity certificates for sine polynomials.
#[derive(Parser)]
#[command(name = "sinecert", version)]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify every partial sum n = 1..N.
    Verify {
        /// Family identifier, e.g. gamma, delta, vietoris_c, phi1:3913/5000, power_phi:0.25.
        #[arg(long, conflicts_with = "coeffs", required_unless_present = "coeffs")]
        family: Option<String>,
        /// Inline coefficients a_1,a_2,... as integers or p/q.
        #[arg(long)]
        coeffs: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// exact, numeric or auto.
        #[arg(long, default_value = "auto", value_parser = parse_mode)]
        mode: Mode,
    },
    /// Check coefficient conditions on a family.
    Check {
        /// Comma-separated: v, kv, kv2, thm1_first, thmc, belov, dominates, endpoint.
        #[arg(long, value_delimiter = ',', required = true)]
        cond: Vec<String>,
        #[arg(long)]
        family: Option<String>,
        /// Dominating sequence for `dominates`.
        #[arg(long)]
        a: Option<String>,
        /// Dominated sequence for `dominates`.
        #[arg(long)]
        b: Option<String>,
        /// Terms compared by `dominates`: odd (odd-order subsequences) or all.
        #[arg(long, default_value = "odd", value_parser = ["odd", "all"])]
        terms: String,
        #[arg(long, default_value_t = 40)]
        n: usize,
    },
    /// Scan a one-parameter family for the partial-sum boundary.
    Scan {
        /// beta or gamma_exp.
        #[arg(long, value_parser = parse_param)]
        param: ScanParam,
        /// lo:hi
        #[arg(long, conflicts_with = "point", required_unless_present = "point", value_parser = parse_range)]
        range: Option<(f64, f64)>,
        #[arg(long)]
        point: Option<f64>,
        #[arg(long, default_value_t = 60)]
        n: usize,
        #[arg(long, default_value_t = certify::NUMERIC_TOL)]
        tol: f64,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        /// Width at which boundary bisection stops.
        #[arg(long, default_value_t = 1e-4)]
        bisect_tol: f64,
        /// CSV of (parameter, first_failing, min_value).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the reproduction suite.
    Reproduce {
        /// Only this criterion (1..12).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=12))]
        criterion: Option<u8>,
    },
    /// Print the constants table.
    Constants,
}

fn parse_mode(s: &str) -> std::result::Result<Mode, String> {
    match s {
        "exact" => Ok(Mode::Exact),
        "numeric" => Ok(Mode::Numeric),
        "auto" => Ok(Mode::Auto),
        _ => Err(format!("unknown mode `{s}`")),
    }
}

fn parse_param(s: &str) -> std::result::Result<ScanParam, String> {
    ScanParam::parse(s).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo: f64 = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: f64 = hi.trim().parse().map_err(|e| format!("{e}"))?;
    if lo.is_nan() || hi.is_nan() || lo >= hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

#[derive(Serialize)]
struct Environment {
    version: &'static str,
    threads: usize,
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    parameters: Value,
    constants: Vec<ProofConstant>,
    certificates: Vec<Value>,
    results: Value,
    pass: bool,
    environment: Environment,
    wall_time: f64,
}

struct Outcome {
    parameters: Value,
    constants: Vec<ProofConstant>,
    certificates: Vec<Value>,
    results: Value,
    pass: bool,
}

fn basic_constants() -> Vec<ProofConstant> {
    vec![analysis::alpha(), analysis::sigma()]
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn resolve_n(seq: &CoeffSeq, n: Option<usize>) -> Result<usize> {
    match n.or(seq.natural_len()) {
        Some(0) => Err(Error::InvalidArgument("n must be at least 1".into())),
        Some(n) => Ok(n),
        None => Err(Error::InvalidArgument(format!("family {} needs --n", seq.id()))),
    }
}

fn verify(family: Option<String>, coeffs: Option<String>, n: Option<usize>, mode: Mode) -> Result<Outcome> {
    let seq = match (&family, &coeffs) {
        (_, Some(list)) => CoeffSeq::parse_custom(list, mode == Mode::Numeric)?,
        (Some(id), None) => CoeffSeq::parse(id)?,
        (None, None) => return Err(Error::InvalidArgument("--family or --coeffs is required".into())),
    };
    let n = resolve_n(&seq, n)?;
    let report = certify_ps(&seq, n, mode)?;
    Ok(Outcome {
        parameters: json!({ "family": seq.id(), "n": n, "mode": report.mode }),
        constants: basic_constants(),
        certificates: report.entries.iter().map(to_value).collect(),
        results: json!({ "all_pass": report.all_pass(), "first_violation": report.first_violation, "violations": report.violations() }),
        pass: report.all_pass(),
    })
}

fn check(
    conds: Vec<String>,
    family: Option<String>,
    a: Option<String>,
    b: Option<String>,
    terms: String,
    n: usize,
) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let need_family = || -> Result<CoeffSeq> {
        CoeffSeq::parse(family.as_deref().ok_or_else(|| Error::InvalidArgument("--family is required".into()))?)
    };
    let mut results = Vec::new();
    let mut pass = true;
    for c in &conds {
        let (ok, v) = match c.as_str() {
            "belov" => {
                let seq = need_family()?;
                let sums: Vec<Coeff> = (1..=n).map(|k| belov_partial(&seq, k)).collect();
                let first = sums.iter().position(Coeff::is_negative).map(|i| i + 1);
                (
                    first.is_none(),
                    json!({ "condition": "belov", "family": seq.id(), "holds": first.is_none(), "first_failing": first, "sums": sums }),
                )
            }
            "dominates" => {
                let need = |s: &Option<String>, flag: &str| -> Result<CoeffSeq> {
                    CoeffSeq::parse(
                        s.as_deref().ok_or_else(|| Error::InvalidArgument(format!("--{flag} is required")))?,
                    )
                };
                let (sa, sb) = (need(&a, "a")?, need(&b, "b")?);
                let r = if terms == "odd" {
                    let odd = |s: &CoeffSeq| s.coeffs(n).into_iter().step_by(2).collect::<Vec<_>>();
                    dominates_slices(&odd(&sa), &odd(&sb))
                } else {
                    dominance(&sa, &sb, n)
                };
                (r.holds, json!({ "condition": "dominates", "a": sa.id(), "b": sb.id(), "terms": terms, "report": r }))
            }
            "endpoint" => {
                let seq = need_family()?;
                let sums: Vec<_> = (1..=n).map(|k| endpoint_sums(&seq.partial_sum(k))).collect();
                let first = sums.iter().position(|e| e.at_pi.is_negative() || e.at_zero.is_negative()).map(|i| i + 1);
                (
                    first.is_none(),
                    json!({ "condition": "endpoint", "family": seq.id(), "holds": first.is_none(), "first_failing": first, "sums": sums }),
                )
            }
            other => {
                let cond = Condition::parse(other)?;
                let seq = need_family()?;
                let r = check_condition(cond, &seq, n);
                (r.holds, json!({ "family": seq.id(), "report": r }))
            }
        };
        pass &= ok;
        results.push(v);
    }
    Ok(Outcome {
        parameters: json!({ "cond": conds, "family": family, "a": a, "b": b, "terms": terms, "n": n }),
        constants: basic_constants(),
        certificates: Vec::new(),
        results: Value::Array(results),
        pass,
    })
}

fn write_csv(path: &PathBuf, points: &[certify::ScanPoint]) -> Result<()> {
    let mut s = String::from("parameter,first_failing,min_value\n");
    for p in points {
        let ff = p.first_failing.map(|n| n.to_string()).unwrap_or_default();
        s.push_str(&format!("{},{},{:e}\n", p.value, ff, p.min_value));
    }
    fs::write(path, s).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

#[allow(clippy::too_many_arguments)]
fn scan(
    param: ScanParam,
    range: Option<(f64, f64)>,
    point: Option<f64>,
    n: usize,
    tol: f64,
    steps: usize,
    bisect_tol: f64,
    csv: Option<PathBuf>,
) -> Result<Outcome> {
    let (points, results, pass) = match (range, point) {
        (_, Some(v)) => {
            let p = certify::scan_point(param, v, n, tol)?;
            let ok = p.passes();
            (vec![p.clone()], to_value(&p), ok)
        }
        (Some((lo, hi)), None) => {
            let r = certify::scan_threshold(param, lo, hi, steps, n, tol, bisect_tol)?;
            (r.points.clone(), to_value(&r), true)
        }
        (None, None) => return Err(Error::InvalidArgument("--range or --point is required".into())),
    };
    if let Some(path) = &csv {
        write_csv(path, &points)?;
    }
    Ok(Outcome {
        parameters: json!({ "param": param, "range": range, "point": point, "n": n, "tol": tol, "steps": steps }),
        constants: basic_constants(),
        certificates: Vec::new(),
        results,
        pass,
    })
}

fn reproduce_cmd(criterion: Option<u8>) -> Result<Outcome> {
    let rows = match criterion {
        Some(c) => reproduce::run_criterion(c)?,
        None => reproduce::run()?,
    };
    for r in &rows {
        eprintln!("[{:>2}] {} {}: {}", r.criterion, if r.pass { "PASS" } else { "FAIL" }, r.name, r.observed);
    }
    let pass = rows.iter().all(|r| r.pass);
    Ok(Outcome {
        parameters: json!({ "criterion": criterion }),
        constants: analysis::constants_table(),
        certificates: Vec::new(),
        results: to_value(&rows),
        pass,
    })
}

fn run(cmd: Command) -> Result<(&'static str, Outcome)> {
    Ok(match cmd {
        Command::Verify { family, coeffs, n, mode } => ("verify", verify(family, coeffs, n, mode)?),
        Command::Check { cond, family, a, b, terms, n } => ("check", check(cond, family, a, b, terms, n)?),
        Command::Scan { param, range, point, n, tol, steps, bisect_tol, csv } => {
            ("scan", scan(param, range, point, n, tol, steps, bisect_tol, csv)?)
        }
        Command::Reproduce { criterion } => ("reproduce", reproduce_cmd(criterion)?),
        Command::Constants => (
            "constants",
            Outcome {
                parameters: json!({}),
                constants: analysis::constants_table(),
                certificates: Vec::new(),
                results: to_value(&analysis::thresholds()),
                pass: true,
            },
        ),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let (command, o) = match run(cli.command) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = RunReport {
        command,
        parameters: o.parameters,
        constants: o.constants,
        certificates: o.certificates,
        results: o.results,
        pass: o.pass,
        environment: Environment { version: env!("CARGO_PKG_VERSION"), threads: rayon::current_num_threads() },
        wall_time: start.elapsed().as_secs_f64(),
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text + "\n") {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{text}"),
    }
    if o.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
