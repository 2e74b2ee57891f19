//! Batch command-line interface.
//!
//! Every command produces a JSON payload. With `--out` the payload is
//! wrapped in a [`RunManifest`] and written atomically; `replay` re-runs a
//! manifest's command line and compares payloads.
//!
//! Exit codes: 0 success, 1 failed check or replay mismatch, 2 usage error,
//! 3 numerical-budget failure.

pub mod manifest;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::integrate::{mc_integrate, Estimate, Region};
use crate::measures::{
    constants, density_unchecked, face_density_unchecked, orbit_volume, separability_probability, ConstantEntry,
    MetricKind, Quantity, System,
};
use crate::scenarios::{enumerate_scenarios, evaluate_scenario, CatalogEntry, ConstraintLevel, ScenarioResult, ScenarioSpec};
use crate::weightfit::{
    blend, boundary_probability, fit::set_face_fault, fit_qutrit, fit_two_term, hyperarea_integral, predict,
    volume_integral, Measure, PredictionReport, Targets, WeightingForm, BLEND_WEIGHT,
};
pub use manifest::{round_numbers, sig15, RunManifest};
pub use verify::{Budget, Check, Suite};

/// Environment variable holding the default worker thread count.
pub const THREADS_ENV: &str = "SEPVOL_THREADS";

#[derive(Debug, Parser)]
#[command(name = "sepvol", version, about = "Separable volumes and separability probabilities of two-qubit states")]
pub struct Cli {
    /// Worker threads; defaults to $SEPVOL_THREADS, then to the core count.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate a volume, hyperarea or separability probability.
    Estimate(EstimateArgs),
    /// Evaluate the restricted and nine-dimensional real scenarios.
    Scenarios(ScenarioArgs),
    /// Fit a weighting function and predict non-HS separable volumes.
    FitPredict(FitArgs),
    /// Run the regression suite.
    Verify(VerifyArgs),
    /// Re-run the command recorded in a manifest and compare payloads.
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn parse_samples(s: &str) -> std::result::Result<u64, String> {
    let x: f64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    if !(x >= 0.0) || x.fract() != 0.0 || x > 9.007_199_254_740_992e15 {
        return Err(format!("sample count must be a nonnegative integer, got {s}"));
    }
    Ok(x as u64)
}

fn parse_metric(s: &str) -> std::result::Result<MetricKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_system(s: &str) -> std::result::Result<System, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_quantity(s: &str) -> std::result::Result<Quantity, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_level(s: &str) -> std::result::Result<ConstraintLevel, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[arg(long, value_parser = parse_metric)]
    pub metric: MetricKind,
    #[arg(long, value_parser = parse_system, default_value = "2x2")]
    pub system: System,
    #[arg(long, value_parser = parse_quantity)]
    pub quantity: Quantity,
    /// Sample count, e.g. 1e6; 0 selects deterministic quadrature.
    #[arg(long, value_parser = parse_samples, default_value = "1e6")]
    pub samples: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScenarioArgs {
    /// Only scenarios of this dimension (3, 4, 5, 7 or 9).
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, value_parser = parse_level, default_value = "fully-separable")]
    pub constraint: ConstraintLevel,
    #[arg(long, value_parser = parse_samples, default_value = "1e6")]
    pub samples: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormKind {
    #[value(name = "eq11", alias = "single-term")]
    SingleTerm,
    TwoTerm,
    Blend,
    Qutrit,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long, value_enum)]
    pub form: FormKind,
    #[arg(long, default_value_t = 3)]
    pub m1: u32,
    #[arg(long, default_value_t = 3)]
    pub m2: u32,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    FaceDensity,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    /// Samples per scenario run; state sampling uses a tenth of it.
    #[arg(long, value_parser = parse_samples)]
    pub budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Fault>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Exact,
    Mc,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Exact => Suite::Exact,
            SuiteArg::Mc => Suite::Mc,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
}

/// What a command produced.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub payload: Value,
    /// Text for stdout when the payload is not printed as JSON.
    pub text: Option<String>,
    /// 0, or 1 when a check failed.
    pub status: i32,
    pub seeds: Vec<u64>,
    pub samples: Vec<u64>,
    pub tolerances: Vec<(String, f64)>,
}

impl Outcome {
    fn new(payload: Value) -> Self {
        Self { payload, text: None, status: 0, seeds: Vec::new(), samples: Vec::new(), tolerances: Vec::new() }
    }
}

fn conjecture(metric: MetricKind, system: System, quantity: Quantity) -> Option<ConstantEntry> {
    constants(metric, system, quantity).ok()
}

fn total(metric: MetricKind, system: System, quantity: Quantity, samples: u64, seed: u64) -> Result<(Estimate, &'static str)> {
    let n = system.dim();
    let hyper = quantity == Quantity::TotalHyperarea;
    if samples == 0 {
        let v = if hyper {
            hyperarea_integral(&WeightingForm::Power { coeff: 1.0, k: 0, exponent: 0.0 }, metric, n)?
        } else {
            volume_integral(&WeightingForm::Power { coeff: 1.0, k: 0, exponent: 0.0 }, metric, n)?
        };
        return Ok((Estimate::exact(v), "quadrature"));
    }
    let k = if hyper { n - 2 } else { n - 1 };
    let est = mc_integrate(
        |x| {
            let mut l = [0.0; 8];
            l[..k].copy_from_slice(x);
            l[k] = 1.0 - x.iter().sum::<f64>();
            if hyper {
                face_density_unchecked(metric, &l[..k + 1])
            } else {
                density_unchecked(metric, &l[..k + 1])
            }
        },
        &Region::Simplex { dim: k },
        samples,
        seed,
    )?;
    Ok((est.scaled(orbit_volume(n)), "monte-carlo"))
}

fn cmd_estimate(a: &EstimateArgs) -> Result<Outcome> {
    let sampled = matches!(a.metric, MetricKind::Hs | MetricKind::Bures);
    let (est, method) = match a.quantity {
        Quantity::TotalVolume if a.system == System::RealTwoQubit && a.metric == MetricKind::Hs && a.samples > 0 => {
            let r = evaluate_scenario(&ScenarioSpec::full_real(ConstraintLevel::FeasibleOnly), a.samples, a.seed)?;
            (r.total, "monte-carlo")
        }
        _ if a.system == System::RealTwoQubit => {
            return Err(Error::Unsupported(
                "real two-qubit states support only the HS total volume by sampling; see `scenarios --dim 9`".into(),
            ))
        }
        Quantity::TotalVolume | Quantity::TotalHyperarea => total(a.metric, a.system, a.quantity, a.samples, a.seed)?,
        Quantity::SepProbability | Quantity::SepVolume => {
            if a.samples == 0 || !sampled {
                return Err(Error::Unsupported(format!(
                    "{} for the {} measure needs state sampling (hs or bures, samples > 0)",
                    a.quantity, a.metric
                )));
            }
            let p = separability_probability(a.metric, a.system.dim(), a.samples, a.seed)?;
            if a.quantity == Quantity::SepProbability {
                (p, "monte-carlo")
            } else {
                let (t, _) = total(a.metric, a.system, Quantity::TotalVolume, 0, a.seed)?;
                (p.scaled(t.value), "monte-carlo")
            }
        }
        Quantity::SepHyperarea => {
            return Err(Error::Unsupported("separable hyperareas need rank-deficient sampling".into()))
        }
    };
    let c = conjecture(a.metric, a.system, a.quantity);
    let payload = json!({
        "metric": a.metric,
        "system": a.system,
        "quantity": a.quantity,
        "method": method,
        "estimate": est,
        "conjecture": c.as_ref().map(|c| json!({"symbolic": c.symbolic, "value": c.value})),
        "z_score": c.as_ref().filter(|_| est.stderr > 0.0).map(|c| est.z_score(c.value)),
        "ratio": c.as_ref().map(|c| est.value / c.value),
    });
    let mut o = Outcome::new(payload);
    o.seeds.push(a.seed);
    o.samples.push(a.samples);
    Ok(o)
}

fn scenario_specs(dim: Option<usize>, level: ConstraintLevel) -> Result<Vec<ScenarioSpec>> {
    let dims = match dim {
        Some(d) => vec![d],
        None => vec![7, 5, 4, 3, 9],
    };
    let mut out = Vec::new();
    for d in dims {
        match d {
            9 => out.push(ScenarioSpec::full_real(level)),
            3..=7 => out.extend(enumerate_scenarios(d)?.into_iter().map(|e: CatalogEntry| e.spec.with_constraint(level))),
            other => return Err(Error::InvalidInput(format!("no scenarios of dimension {other}"))),
        }
    }
    for s in &out {
        s.validate()?;
    }
    Ok(out)
}

fn scenario_row(r: &ScenarioResult) -> Value {
    let cmp: Vec<Value> = r
        .comparisons()
        .into_iter()
        .map(|(name, est, t)| {
            json!({"quantity": name, "symbolic": t.symbolic, "target": t.value, "z_score": (est.stderr > 0.0).then(|| est.z_score(t.value))})
        })
        .collect();
    json!({
        "label": r.spec.to_string(),
        "dimension": r.spec.dimension(),
        "zeroed": r.spec.zeroed_labels(),
        "constraint": r.spec.constraint,
        "trivial": r.spec.b_equals_d(),
        "total": r.total,
        "separable": r.separable,
        "probability": r.probability,
        "targets": cmp,
    })
}

fn scenario_csv(results: &[ScenarioResult]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidInput(e.to_string());
    w.write_record([
        "label", "dimension", "constraint", "trivial", "total", "total_stderr", "separable", "separable_stderr",
        "probability", "probability_stderr", "target_total", "target_separable", "target_probability",
    ])
    .map_err(io)?;
    let num = |x: f64| format!("{:.14e}", x);
    let tgt = |t: &Option<crate::scenarios::Target>| t.as_ref().map(|t| t.symbolic.clone()).unwrap_or_default();
    for r in results {
        w.write_record([
            r.spec.to_string(),
            r.spec.dimension().to_string(),
            r.spec.constraint.to_string(),
            r.spec.b_equals_d().to_string(),
            num(r.total.value),
            num(r.total.stderr),
            num(r.separable.value),
            num(r.separable.stderr),
            num(r.probability.value),
            num(r.probability.stderr),
            tgt(&r.expected.total),
            tgt(&r.expected.separable),
            tgt(&r.expected.probability),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

fn cmd_scenarios(a: &ScenarioArgs) -> Result<Outcome> {
    let specs = scenario_specs(a.dim, a.constraint)?;
    let results = specs.iter().map(|s| evaluate_scenario(s, a.samples, a.seed)).collect::<Result<Vec<_>>>()?;
    let mut o = Outcome::new(json!({ "rows": results.iter().map(scenario_row).collect::<Vec<_>>() }));
    if a.format == Format::Csv {
        o.text = Some(scenario_csv(&results)?);
    }
    o.seeds.push(a.seed);
    o.samples.push(a.samples);
    Ok(o)
}

fn verdict(name: &str, ratio: Option<f64>, target: f64, tol: f64) -> Value {
    let passed = ratio.is_some_and(|r| (r / target - 1.0).abs() <= tol);
    json!({"indicator": name, "ratio": ratio, "target": target, "tolerance": tol, "passed": passed})
}

fn reports(form: &WeightingForm, metrics: &[MetricKind]) -> Result<Vec<PredictionReport>> {
    let mut out = Vec::new();
    for &m in metrics {
        for q in [Measure::Volume, Measure::Hyperarea] {
            out.push(predict(form, m, q)?);
        }
    }
    Ok(out)
}

fn indicator_verdicts(reports: &[PredictionReport], targets: &[(MetricKind, Measure, f64)], tol: f64) -> Vec<Value> {
    targets
        .iter()
        .map(|&(m, q, t)| {
            let r = reports.iter().find(|r| r.metric == m && r.quantity == q).and_then(|r| r.ratio);
            verdict(&format!("{m} {q}"), r, t, tol)
        })
        .collect()
}

const FIVE: [(MetricKind, Measure); 5] = [
    (MetricKind::Bures, Measure::Volume),
    (MetricKind::KuboMori, Measure::Volume),
    (MetricKind::AvgMonotone, Measure::Volume),
    (MetricKind::WignerYanase, Measure::Volume),
    (MetricKind::Bures, Measure::Hyperarea),
];

fn cmd_fit_predict(a: &FitArgs) -> Result<Outcome> {
    let t = Targets::hs_two_qubit();
    let all = MetricKind::ALL;
    let (form, fit, metrics): (WeightingForm, Value, &[MetricKind]) = match a.form {
        FormKind::SingleTerm => (WeightingForm::single_term(), Value::Null, &all),
        FormKind::TwoTerm => {
            let f = fit_two_term(a.m1, a.m2, t)?;
            let v = json!({"m1": f.m1, "m2": f.m2, "a": f.a, "b": f.b, "b_over_a": f.b / f.a, "negative_coefficient": f.has_negative_coefficient()});
            (f.form(), v, &all)
        }
        FormKind::Blend => {
            let f33 = fit_two_term(3, 3, t)?;
            let f43 = fit_two_term(4, 3, t)?;
            let v = json!({"weights": [BLEND_WEIGHT, 1.0 - BLEND_WEIGHT], "parts": [[f33.a, f33.b], [f43.a, f43.b]]});
            (blend(vec![(f33.form(), BLEND_WEIGHT), (f43.form(), 1.0 - BLEND_WEIGHT)])?, v, &all)
        }
        FormKind::Qutrit => {
            let q = fit_qutrit(Targets::hs(System::QubitQutrit).volume)?;
            (q.form(), json!({"c": q.c, "moment": q.moment}), &[MetricKind::Hs, MetricKind::Bures])
        }
    };
    let reps = reports(&form, metrics)?;
    let verdicts = match a.form {
        FormKind::SingleTerm => {
            let quoted = [0.938275, 0.910768, 0.903281, 0.919585, 0.940364];
            let targets: Vec<_> = FIVE.iter().zip(quoted).map(|(&(m, q), p)| (m, q, p)).collect();
            let mut v = indicator_verdicts(&reps, &targets, 5e-3);
            v.push(verdict("kubo-mori boundary probability", Some(boundary_probability(&form, MetricKind::KuboMori)?), 0.0214689, 5e-3));
            v
        }
        FormKind::TwoTerm => indicator_verdicts(&reps, &FIVE.map(|(m, q)| (m, q, 1.0)), 0.05),
        FormKind::Blend => indicator_verdicts(&reps, &FIVE.map(|(m, q)| (m, q, 1.0)), 0.0411),
        FormKind::Qutrit => {
            let c = fit.get("c").and_then(Value::as_f64).unwrap_or(f64::NAN);
            let mut v = indicator_verdicts(
                &reps,
                &[(MetricKind::Hs, Measure::Hyperarea, 1.0), (MetricKind::Bures, Measure::Volume, 1.82587), (MetricKind::Bures, Measure::Hyperarea, 1.91223)],
                0.02,
            );
            v.push(verdict("constant", Some(c), 986304.0, 0.01));
            v
        }
    };
    let mut o = Outcome::new(json!({"form": form, "label": form.label(), "fit": fit, "reports": reps, "verdicts": verdicts}));
    if a.format == Format::Csv {
        let mut buf = Vec::new();
        crate::weightfit::predict::write_csv(&reps, &mut buf)?;
        o.text = Some(String::from_utf8(buf).expect("csv is utf-8"));
    }
    Ok(o)
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome> {
    let budget = a.budget.map_or_else(Budget::standard, Budget::from_samples);
    set_face_fault(a.inject_fault == Some(Fault::FaceDensity));
    let checks = verify::run(a.suite.into(), budget, a.seed);
    set_face_fault(false);
    let checks = checks?;
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let mut text: String = checks.iter().map(|c| format!("{c}\n")).collect();
    text.push_str(&format!("{} checks, {} failed\n", checks.len(), failed.len()));
    let mut o = Outcome::new(json!({
        "suite": a.suite.to_possible_value().map(|v| v.get_name().to_string()),
        "budget": budget,
        "passed": failed.is_empty(),
        "failed": failed.iter().map(|c| c.name.clone()).collect::<Vec<_>>(),
        "checks": checks,
    }));
    o.status = if failed.is_empty() { 0 } else { 1 };
    o.text = Some(text);
    o.seeds.push(a.seed);
    o.samples.extend([budget.scenario_samples, budget.state_samples, budget.ks_samples]);
    o.tolerances = vec![("scenario_sigma".into(), 3.0), ("scenario_rel".into(), 0.005), ("state_sigma".into(), 4.0), ("state_rel".into(), 0.01)];
    Ok(o)
}

/// Runs a parsed command without writing anything.
pub fn execute(cmd: &Command) -> Result<Outcome> {
    let mut o = match cmd {
        Command::Estimate(a) => cmd_estimate(a)?,
        Command::Scenarios(a) => cmd_scenarios(a)?,
        Command::FitPredict(a) => cmd_fit_predict(a)?,
        Command::Verify(a) => cmd_verify(a)?,
        Command::Replay(_) => return Err(Error::InvalidInput("replay cannot be nested".into())),
    };
    o.payload = round_numbers(o.payload);
    Ok(o)
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Estimate(_) => "estimate",
        Command::Scenarios(_) => "scenarios",
        Command::FitPredict(_) => "fit-predict",
        Command::Verify(_) => "verify",
        Command::Replay(_) => "replay",
    }
}

fn out_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Estimate(a) => a.out.as_ref(),
        Command::Scenarios(a) => a.out.as_ref(),
        Command::FitPredict(a) => a.out.as_ref(),
        Command::Verify(a) => a.out.as_ref(),
        Command::Replay(_) => None,
    }
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoConvergence { .. } | Error::NonFinite { .. } | Error::SingularSystem { .. } => 3,
        _ => 2,
    }
}

fn replay(a: &ReplayArgs) -> i32 {
    let m = match RunManifest::read(&a.manifest) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", a.manifest.display());
            return 2;
        }
    };
    let argv = std::iter::once(OsString::from("sepvol")).chain(m.command_line.iter().map(OsString::from));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: manifest command line does not parse: {e}");
            return 2;
        }
    };
    if m.constants_version != manifest::RunManifest::new(Vec::new(), "").constants_version {
        eprintln!("warning: manifest written with constants version {}", m.constants_version);
    }
    match execute(&cli.command) {
        Ok(o) if o.payload == m.payload => {
            println!("replay matches: {}", m.command_line.join(" "));
            0
        }
        Ok(o) => {
            println!("replay differs from the recorded payload");
            println!("{}", serde_json::to_string_pretty(&o.payload).expect("payload serializes"));
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn init_threads(flag: Option<usize>) {
    let n = flag.or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.parse().ok()));
    if let Some(n) = n.filter(|&n| n > 0) {
        // a second initialization in the same process is harmless to skip
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    init_threads(cli.threads);
    if let Command::Replay(a) = &cli.command {
        return replay(a);
    }
    let start = Instant::now();
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    match &outcome.text {
        Some(t) => print!("{t}"),
        None => println!("{}", serde_json::to_string_pretty(&outcome.payload).expect("payload serializes")),
    }
    if let Some(path) = out_path(&cli.command) {
        let command_line = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
        let mut m = RunManifest::new(command_line, command_name(&cli.command));
        m.seeds = outcome.seeds.clone();
        m.samples = outcome.samples.clone();
        m.tolerances = outcome.tolerances.iter().cloned().collect();
        m.wall_time_s = start.elapsed().as_secs_f64();
        m.payload = outcome.payload.clone();
        if let Err(e) = m.write(path) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    outcome.status
}

/// Entry point for the binary.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_counts() {
        assert_eq!(parse_samples("1e6"), Ok(1_000_000));
        assert_eq!(parse_samples("0"), Ok(0));
        assert!(parse_samples("1.5").is_err());
        assert!(parse_samples("-3").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_from(["sepvol", "estimate", "--metric", "gks", "--quantity", "sep-volume"]), 2);
        assert_eq!(
            run_from(["sepvol", "estimate", "--metric", "kubo-mori", "--quantity", "sep-probability", "--samples", "1e4"]),
            2
        );
        assert_eq!(run_from(["sepvol", "scenarios", "--dim", "7", "--constraint", "one-2x2-pt-minor"]), 2);
    }

    #[test]
    fn quadrature_route_for_totals() {
        let cli = Cli::try_parse_from(["sepvol", "estimate", "--metric", "hs", "--quantity", "total-volume", "--samples", "0"]).unwrap();
        let o = execute(&cli.command).unwrap();
        let v = o.payload["estimate"]["value"].as_f64().unwrap();
        assert!((v / (std::f64::consts::PI.powi(6) / 851_350_500.0) - 1.0).abs() < 1e-9);
        assert_eq!(o.payload["method"], "quadrature");
    }
}
