//! `lpm`: evaluate minor lifts, run randomized batteries, and print the
//! Rayleigh-difference certificate.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use lpm_core::cones::{in_cone_matrix, in_cone_vector, ConeReport, CONE_TOL};
use lpm_core::families::{Family, FamilySpec};
use lpm_core::harness::{run_battery, Check, RunConfig};
use lpm_core::inequalities::Tolerance;
use lpm_core::json::{derivation_to_value, matrix_from_json, poly_from_json, rational_string};
use lpm_core::minorlift::minor_lift_eval;
use lpm_core::spectral::derivation_matrix;
use lpm_core::{rayleigh, BigRational, Error, MultiAffinePoly, SymMatrix};

#[derive(Parser)]
#[command(name = "lpm", version, about = "Minor lifts of multiaffine polynomials and their hyperbolicity cones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate P(A) and p(diag A) and report cone membership.
    Eval(EvalArgs),
    /// Run a randomized battery; prints JSON lines and a summary.
    Battery(BatteryArgs),
    /// Print the Rayleigh difference W and its verdicts.
    Rayleigh(RayleighArgs),
    /// Export the derivation matrix D^{k,d} X as JSON.
    Derivation(DerivationArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Polynomial JSON file.
    #[arg(long)]
    poly: PathBuf,
    /// Matrix JSON file.
    #[arg(long)]
    matrix: PathBuf,
    /// Relative cone tolerance.
    #[arg(long, default_value_t = CONE_TOL)]
    cone_tol: f64,
    /// Evaluate with exact rational arithmetic.
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BatteryArgs {
    /// ek, ek-rescaled, tree, derivative-ek, x0-product, linear, ek-perturbed,
    /// degree-n-1 or e2-perturbed.
    #[arg(long)]
    family: String,
    /// fischer, koteljanskii, nlc, diag, monotone, spectral, schur-horn,
    /// majorization, permwalk or renegar.
    #[arg(long)]
    check: String,
    #[arg(long)]
    trials: usize,
    #[arg(long)]
    seed: u64,
    /// Relative inequality tolerance.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Absolute inequality tolerance.
    #[arg(long, default_value_t = 1e-10)]
    abs_tol: f64,
    /// Relative cone tolerance.
    #[arg(long, default_value_t = CONE_TOL)]
    cone_tol: f64,
    /// Fixed variable count; otherwise drawn up to --max-n.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    epsilon: Option<f64>,
    /// Write records here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RayleighArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Sample points and lines for the numeric checks.
    #[arg(long, default_value_t = 10_000)]
    trials: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DerivationArgs {
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cone_value(r: lpm_core::Result<ConeReport>) -> Value {
    match r {
        Ok(rep) => json!(rep),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn eval(args: &EvalArgs) -> Outcome {
    let poly_src = read(&args.poly)?;
    let matrix_src = read(&args.matrix)?;
    let p: MultiAffinePoly<f64> = poly_from_json(&poly_src)?;
    let a: SymMatrix<f64> = matrix_from_json(&matrix_src)?;
    let value = minor_lift_eval(&p, &a)?;
    let diag = a.diagonal();
    let mut report = json!({
        "lpm_value": value,
        "diag_value": p.eval(&diag)?,
        "matrix_cone": cone_value(in_cone_matrix(&p, &a, args.cone_tol)),
        "diagonal_cone": cone_value(in_cone_vector(&p, &diag, args.cone_tol)),
    });
    if args.exact {
        let pq: MultiAffinePoly<BigRational> = poly_from_json(&poly_src)?;
        let aq: SymMatrix<BigRational> = matrix_from_json(&matrix_src)?;
        report["lpm_value_exact"] = rational_string(&minor_lift_eval(&pq, &aq)?).into();
        report["diag_value_exact"] = rational_string(&pq.eval(&aq.diagonal())?).into();
    }
    emit(args.out.as_deref(), &format!("{report}\n"))?;
    Ok(true)
}

fn battery(args: &BatteryArgs) -> Outcome {
    let family: Family = args.family.parse()?;
    let check: Check = args.check.parse()?;
    let mut spec = FamilySpec::new(family).with_max_n(args.max_n);
    if let Some(n) = args.n {
        spec = spec.with_n(n);
    }
    if let Some(k) = args.k {
        spec = spec.with_k(k);
    }
    if let Some(d) = args.d {
        spec = spec.with_d(d);
    }
    if let Some(e) = args.epsilon {
        spec = spec.with_epsilon(e);
    }
    let mut cfg = RunConfig::new(args.seed, args.trials);
    cfg.tol = Tolerance {
        abs: args.abs_tol,
        rel: args.tol,
    };
    cfg.cone_tol = args.cone_tol;
    cfg.out = args.out.clone();
    let report = run_battery(check, &spec, &cfg)?;
    let mut buf = Vec::new();
    report.write_jsonl(&mut buf)?;
    emit(cfg.out.as_deref(), &String::from_utf8_lossy(&buf))?;
    let s = &report.summary;
    eprintln!(
        "{check} on {family}: {} passed, {} violations, {} precondition misses, {} errors; min slack {}",
        s.passed,
        s.violations,
        s.preconditions,
        s.errors,
        s.min_slack.map_or("n/a".to_string(), |v| format!("{v:e}")),
    );
    Ok(s.clean())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn rayleigh_cmd(args: &RayleighArgs) -> Outcome {
    let p = rayleigh::build_p();
    let w = rayleigh::w();
    let coeffs = rayleigh::closed_form_coefficients(&w);
    let closed: Vec<String> = rayleigh::CLOSED_FORM
        .iter()
        .zip(&coeffs)
        .map(|((e, _), c)| {
            let mono: Vec<String> = e
                .iter()
                .zip(rayleigh::VARS)
                .filter(|(&x, _)| x > 0)
                .map(|(&x, v)| if x == 1 { v.to_string() } else { format!("{v}^{x}") })
                .collect();
            format!("({})*{}", rational_string(c), mono.join("*"))
        })
        .collect();
    let identity = rayleigh::verify_w_identity();
    let free = !w.involves("x1")? && !w.involves("x3")?;
    let min = rayleigh::nonneg_sampling(&w, args.trials, args.seed)?;
    let hyp = rayleigh::hyperbolicity_spot_check(&p, args.trials, args.seed)?;
    let sampling_ok = min >= -1e-12;
    let mut text = String::new();
    text.push_str(&format!("p terms: {}\n", p.num_terms()));
    text.push_str(&format!("p(identity): {}\n", rational_string(&rayleigh::value_at_identity(&p)?)));
    text.push_str(&format!("W = {w}\n"));
    text.push_str(&format!("W terms: {}\n", w.num_terms()));
    text.push_str(&format!("W/4 = {}\n", closed.join(" + ")));
    text.push_str(&format!("identity: {}\n", verdict(identity)));
    text.push_str(&format!("independent of x1, x3: {}\n", verdict(free)));
    text.push_str(&format!(
        "sampling minimum ({} points, seed {}): {min:e} {}\n",
        args.trials,
        args.seed,
        verdict(sampling_ok)
    ));
    text.push_str(&format!(
        "hyperbolicity spot check ({} lines, seed {}): {} failures {}\n",
        hyp.trials,
        args.seed,
        hyp.failures,
        verdict(hyp.passed())
    ));
    emit(args.out.as_deref(), &text)?;
    Ok(identity && free && sampling_ok && hyp.passed())
}

fn derivation(args: &DerivationArgs) -> Outcome {
    let x: SymMatrix<f64> = matrix_from_json(&read(&args.matrix)?)?;
    let dm = derivation_matrix(&x, args.k, args.d)?;
    emit(args.out.as_deref(), &format!("{}\n", derivation_to_value(&dm)))?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Eval(a) => eval(a),
        Command::Battery(a) => battery(a),
        Command::Rayleigh(a) => rayleigh_cmd(a),
        Command::Derivation(a) => derivation(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
