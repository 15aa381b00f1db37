//! mllab: evaluate Mittag-Leffler functions and mechanically verify the
//! Turán/Lazarević/Wilker inequality suite over parameter grids.
//!
//! Exit codes: 0 success, 1 at least one check failed, 2 configuration or
//! domain error, 3 confirmed counterexample candidate from a search.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mllab_core::checks::Tolerance;
use mllab_core::exec;
use mllab_core::grid::GridSpec;
use mllab_core::probe::{search_problem1, search_problem2, SearchRanges, SearchResult, Verdict};
use mllab_core::report::{ProbeReport, RunReport};
use mllab_core::runner::{run_checks, run_probes, CheckId, ProbeId, RunShim};
use mllab_core::series::{
    eval_ml, eval_ml_normalized, Family, MLParams, SeriesConfig, Summation,
};

#[derive(Parser)]
#[command(name = "mllab", version, about = "Mittag-Leffler function evaluation and inequality verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function value with its truncation-error accounting.
    Eval(EvalArgs),
    /// Run inequality checks over a parameter grid and report verdicts.
    Check(CheckArgs),
    /// Run monotonicity/limit probes over the preset grids.
    Probe(ProbeArgs),
    /// Randomized counterexample search for the open generalizations.
    Search(SearchArgs),
    /// Enumerate check and probe identifiers.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Classical,
    Prabhakar,
    Fourparam,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct SeriesArgs {
    /// Relative truncation tolerance.
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Absolute truncation floor.
    #[arg(long)]
    abs_tol: Option<f64>,
    /// Term budget per evaluation.
    #[arg(long)]
    max_terms: Option<u32>,
    /// Consecutive below-threshold terms required to stop.
    #[arg(long)]
    consecutive_small: Option<u32>,
    /// Domain guard on |z|.
    #[arg(long)]
    z_abs_max: Option<f64>,
    /// Plain (uncompensated) summation.
    #[arg(long)]
    plain_sum: bool,
}

impl SeriesArgs {
    fn apply(&self, cfg: &mut SeriesConfig) {
        if let Some(v) = self.rel_tol {
            cfg.rel_tol = v;
        }
        if let Some(v) = self.abs_tol {
            cfg.abs_tol = v;
        }
        if let Some(v) = self.max_terms {
            cfg.max_terms = v;
        }
        if let Some(v) = self.consecutive_small {
            cfg.consecutive_small = v;
        }
        if let Some(v) = self.z_abs_max {
            cfg.z_abs_max = v;
        }
        if self.plain_sum {
            cfg.summation = Summation::Plain;
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    beta: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    gamma: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    q: f64,
    #[arg(long, allow_hyphen_values = true)]
    z: f64,
    /// Evaluate the Γ(β)-normalized function instead.
    #[arg(long)]
    normalized: bool,
    #[command(flatten)]
    series: SeriesArgs,
}

#[derive(Args)]
struct CheckArgs {
    /// Comma-separated check ids, or "all".
    #[arg(long, default_value = "all")]
    checks: String,
    /// Grid preset: smoke, standard or deep.
    #[arg(long)]
    preset: Option<String>,
    /// Axis overrides, e.g. "z=0:0.99:10,log=false;beta=0.5:4:5".
    #[arg(long)]
    grid: Option<String>,
    /// TOML configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Report output path.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Include every record in text/JSON output (CSV always carries all).
    #[arg(long)]
    records: bool,
    /// Verdict tolerance floor.
    #[arg(long)]
    eps_abs: Option<f64>,
    /// Verdict tolerance relative to scale.
    #[arg(long)]
    eps_rel: Option<f64>,
    #[command(flatten)]
    series: SeriesArgs,
    /// Test shim; "negate-residuals" flips verdict residuals.
    #[arg(long, hide = true)]
    shim: Option<String>,
}

#[derive(Args)]
struct ProbeArgs {
    /// Comma-separated probe ids, or "all".
    #[arg(long, default_value = "all")]
    probes: String,
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Run a single probe instance at these parameters instead of the grid.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    q: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    beta1: Option<f64>,
    #[arg(long)]
    beta2: Option<f64>,
    /// Fixed z for the successor-ratio probe.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<f64>,
    #[command(flatten)]
    series: SeriesArgs,
}

#[derive(Args)]
struct SearchArgs {
    /// 1 = tail Turán inequality for general q; 2 = monotonicity of H.
    #[arg(long)]
    problem: u8,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated q values to sample.
    #[arg(long)]
    q_set: Option<String>,
    /// Comma-separated n values to sample.
    #[arg(long)]
    n_set: Option<String>,
    /// Sampling range lo:hi.
    #[arg(long)]
    alpha_range: Option<String>,
    #[arg(long)]
    beta_range: Option<String>,
    #[arg(long)]
    gamma_range: Option<String>,
    #[arg(long)]
    z_range: Option<String>,
    /// SearchResult output path (JSON).
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    series: SeriesArgs,
    /// Test shim; "force-candidate" forces the counterexample verdict.
    #[arg(long, hide = true)]
    shim: Option<String>,
}

/// Subset of the configuration file mirroring SeriesConfig/Tolerance/grid.
#[derive(Default, serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    series: Option<FileSeries>,
    tolerance: Option<FileTolerance>,
    grid: Option<FileGrid>,
}

#[derive(Default, serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct FileSeries {
    rel_tol: Option<f64>,
    abs_tol: Option<f64>,
    max_terms: Option<u32>,
    consecutive_small: Option<u32>,
    z_abs_max: Option<f64>,
    summation: Option<String>,
}

#[derive(Default, serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct FileTolerance {
    eps_abs: Option<f64>,
    eps_rel: Option<f64>,
}

#[derive(Default, serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct FileGrid {
    preset: Option<String>,
    overrides: Option<String>,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<mllab_core::Error> for CliError {
    fn from(e: mllab_core::Error) -> Self {
        CliError {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: 2,
            message: format!("i/o error: {e}"),
        }
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<FileConfig, CliError> {
    match path {
        None => Ok(FileConfig::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::config(format!("--config {}: {e}", p.display())))?;
            toml::from_str(&text)
                .map_err(|e| CliError::config(format!("--config {}: {e}", p.display())))
        }
    }
}

fn resolve_series(file: &FileConfig, flags: &SeriesArgs) -> Result<SeriesConfig, CliError> {
    let mut cfg = SeriesConfig::default();
    if let Some(fs) = &file.series {
        if let Some(v) = fs.rel_tol {
            cfg.rel_tol = v;
        }
        if let Some(v) = fs.abs_tol {
            cfg.abs_tol = v;
        }
        if let Some(v) = fs.max_terms {
            cfg.max_terms = v;
        }
        if let Some(v) = fs.consecutive_small {
            cfg.consecutive_small = v;
        }
        if let Some(v) = fs.z_abs_max {
            cfg.z_abs_max = v;
        }
        if let Some(s) = &fs.summation {
            cfg.summation = match s.as_str() {
                "compensated" => Summation::Compensated,
                "plain" => Summation::Plain,
                other => {
                    return Err(CliError::config(format!(
                        "config series.summation: unknown value '{other}'"
                    )));
                }
            };
        }
    }
    flags.apply(&mut cfg);
    cfg.validate()?;
    Ok(cfg)
}

fn resolve_grid(
    file: &FileConfig,
    preset_flag: &Option<String>,
    grid_flag: &Option<String>,
) -> Result<GridSpec, CliError> {
    let preset_name = preset_flag
        .clone()
        .or_else(|| file.grid.as_ref().and_then(|g| g.preset.clone()))
        .unwrap_or_else(|| "standard".to_string());
    let mut grid = GridSpec::by_name(&preset_name)?;
    if let Some(fg) = &file.grid {
        if let Some(ov) = &fg.overrides {
            grid.apply_overrides(ov)?;
        }
    }
    if let Some(ov) = grid_flag {
        grid.apply_overrides(ov)?;
    }
    Ok(grid)
}

fn resolve_tolerance(
    file: &FileConfig,
    eps_abs: Option<f64>,
    eps_rel: Option<f64>,
) -> Tolerance {
    let mut tol = Tolerance::default();
    if let Some(ft) = &file.tolerance {
        if let Some(v) = ft.eps_abs {
            tol.eps_abs = v;
        }
        if let Some(v) = ft.eps_rel {
            tol.eps_rel = v;
        }
    }
    if let Some(v) = eps_abs {
        tol.eps_abs = v;
    }
    if let Some(v) = eps_rel {
        tol.eps_rel = v;
    }
    tol
}

fn parse_range(name: &str, s: &str) -> Result<(f64, f64), CliError> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| CliError::config(format!("--{name}: expected lo:hi, got '{s}'")))?;
    let lo: f64 = lo
        .trim()
        .parse()
        .map_err(|_| CliError::config(format!("--{name}: bad number '{lo}'")))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .map_err(|_| CliError::config(format!("--{name}: bad number '{hi}'")))?;
    Ok((lo, hi))
}

fn parse_f64_list(name: &str, s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| CliError::config(format!("--{name}: bad number '{x}'")))
        })
        .collect()
}

fn parse_u32_list(name: &str, s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| CliError::config(format!("--{name}: bad integer '{x}'")))
        })
        .collect()
}

fn write_or_print(out: &Option<PathBuf>, body: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn cmd_eval(args: EvalArgs) -> Result<u8, CliError> {
    let mut cfg = SeriesConfig::default();
    args.series.apply(&mut cfg);
    let p = match args.family {
        FamilyArg::Classical => MLParams::classical(args.alpha, args.beta),
        FamilyArg::Prabhakar => MLParams::prabhakar(args.alpha, args.beta, args.gamma),
        FamilyArg::Fourparam => {
            MLParams::four_parameter(args.alpha, args.beta, args.gamma, args.q)
        }
    };
    let r = if args.normalized {
        eval_ml_normalized(&p, args.z, &cfg)?
    } else {
        eval_ml(&p, args.z, &cfg)?
    };
    println!("family      = {}", p.family);
    println!(
        "params      = alpha={} beta={} gamma={} q={} z={}",
        p.alpha, p.beta, p.gamma, p.q, args.z
    );
    println!("value       = {:e}", r.value);
    println!("ln|value|   = {}", r.log_abs);
    println!("sign        = {:+}", r.sign);
    println!("trunc_bound = {:e}", r.trunc_error_bound);
    println!("round_est   = {:e}", r.round_error_est);
    println!("rel_bound   = {:e}", r.rel_error_bound);
    println!("terms_used  = {}", r.terms_used);
    println!("converged   = {}", r.converged);
    Ok(0)
}

fn parse_check_ids(spec: &str) -> Result<Vec<CheckId>, CliError> {
    if spec.trim() == "all" {
        return Ok(CheckId::all().to_vec());
    }
    spec.split(',')
        .map(|s| CheckId::parse(s.trim()).map_err(CliError::from))
        .collect()
}

fn cmd_check(args: CheckArgs) -> Result<u8, CliError> {
    let file = load_config(&args.config)?;
    let cfg = resolve_series(&file, &args.series)?;
    let tol = resolve_tolerance(&file, args.eps_abs, args.eps_rel);
    let grid = resolve_grid(&file, &args.preset, &args.grid)?;
    let ids = parse_check_ids(&args.checks)?;
    let shim = match args.shim.as_deref() {
        None => RunShim::default(),
        Some("negate-residuals") => RunShim {
            negate_residuals: true,
        },
        Some(other) => return Err(CliError::config(format!("unknown shim '{other}'"))),
    };

    let started = Instant::now();
    let run = run_checks(&ids, &grid, &cfg, &tol, shim)?;
    let wall_time_ms = started.elapsed().as_millis() as u64;
    let failed = run.total_failed();

    let report = RunReport::new(
        ids.iter().map(|i| i.id().to_string()).collect(),
        cfg,
        tol,
        grid,
        run,
        wall_time_ms,
    );
    let body = match args.format {
        FormatArg::Text => report.render_text(args.records),
        FormatArg::Json => report.render_json(args.records),
        FormatArg::Csv => report.render_csv(),
    };
    write_or_print(&args.out, &body)?;
    if args.out.is_some() {
        // Keep the console summary even when the report goes to a file.
        print!("{}", report.render_text(false));
    }
    Ok(if failed > 0 { 1 } else { 0 })
}

#[allow(clippy::too_many_arguments)]
fn single_probe(
    id: ProbeId,
    args: &ProbeArgs,
    grid: &GridSpec,
    cfg: &SeriesConfig,
) -> Result<mllab_core::probe::MonotonicityReport, CliError> {
    use mllab_core::probe;
    let alpha = args.alpha.unwrap_or(1.0);
    let gamma = args.gamma.unwrap_or(1.0);
    let q = args.q.unwrap_or(1.0);
    let family = if args.q.is_some() {
        Family::FourParameter
    } else if args.gamma.is_some() {
        Family::Prabhakar
    } else {
        Family::Classical
    };
    let z_grid = &grid.probe_z.points;
    match id {
        ProbeId::Hn => Ok(probe::probe_hn(
            alpha,
            args.beta.unwrap_or(1.0),
            args.n.unwrap_or(0),
            z_grid,
            cfg,
        )?),
        ProbeId::HPrabhakar => Ok(probe::probe_h_prabhakar(
            alpha,
            args.beta.unwrap_or(1.0),
            gamma,
            args.n.unwrap_or(0),
            z_grid,
            cfg,
        )?),
        ProbeId::BetaRatio => {
            let b1 = args
                .beta1
                .ok_or_else(|| CliError::config("--beta1 is required for beta_ratio".to_string()))?;
            let b2 = args
                .beta2
                .ok_or_else(|| CliError::config("--beta2 is required for beta_ratio".to_string()))?;
            Ok(probe::probe_beta_ratio(
                family, alpha, b1, b2, gamma, q, z_grid, cfg,
            )?)
        }
        ProbeId::SuccessorRatio => Ok(probe::probe_normalized_successor_ratio(
            family,
            alpha,
            &grid.probe_beta.points,
            gamma,
            q,
            args.z.unwrap_or(1.0),
            cfg,
        )?),
    }
}

fn cmd_probe(args: ProbeArgs) -> Result<u8, CliError> {
    let file = load_config(&args.config)?;
    let cfg = resolve_series(&file, &args.series)?;
    let grid = resolve_grid(&file, &args.preset, &None)?;
    let ids: Vec<ProbeId> = if args.probes.trim() == "all" {
        ProbeId::all().to_vec()
    } else {
        args.probes
            .split(',')
            .map(|s| ProbeId::parse(s.trim()).map_err(CliError::from))
            .collect::<Result<_, _>>()?
    };

    let explicit = args.alpha.is_some()
        || args.beta.is_some()
        || args.beta1.is_some()
        || args.n.is_some()
        || args.z.is_some();

    let started = Instant::now();
    let run = if explicit {
        let mut reports = Vec::new();
        for &id in &ids {
            reports.push(single_probe(id, &args, &grid, &cfg)?);
        }
        let violations = reports.iter().filter(|r| !r.passed).count() as u64;
        let guard_excluded = reports.iter().map(|r| u64::from(r.guard_excluded)).sum();
        mllab_core::runner::ProbeRun {
            reports,
            violations,
            guard_excluded,
        }
    } else {
        run_probes(&ids, &grid, &cfg)?
    };
    let wall_time_ms = started.elapsed().as_millis() as u64;
    let violations = run.violations;

    let report = ProbeReport::new(cfg, run, wall_time_ms);
    let body = match args.format {
        FormatArg::Text => report.render_text(),
        FormatArg::Json => report.render_json(),
        FormatArg::Csv => report.render_csv(),
    };
    write_or_print(&args.out, &body)?;
    if args.out.is_some() {
        print!("{}", report.render_text());
    }
    Ok(if violations > 0 { 1 } else { 0 })
}

fn cmd_search(args: SearchArgs) -> Result<u8, CliError> {
    let mut cfg = SeriesConfig::default();
    args.series.apply(&mut cfg);
    cfg.validate()?;

    let mut ranges = SearchRanges::default();
    if let Some(s) = &args.alpha_range {
        ranges.alpha = parse_range("alpha-range", s)?;
    }
    if let Some(s) = &args.beta_range {
        ranges.beta = parse_range("beta-range", s)?;
    }
    if let Some(s) = &args.gamma_range {
        ranges.gamma = parse_range("gamma-range", s)?;
    }
    if let Some(s) = &args.z_range {
        ranges.z = parse_range("z-range", s)?;
    }
    if let Some(s) = &args.q_set {
        ranges.q_set = parse_f64_list("q-set", s)?;
    }
    if let Some(s) = &args.n_set {
        ranges.n_set = parse_u32_list("n-set", s)?;
    }

    let mut result: SearchResult = match args.problem {
        1 => search_problem1(&ranges, args.trials, args.seed, &cfg)?,
        2 => search_problem2(&ranges, args.trials, args.seed, &cfg)?,
        other => {
            return Err(CliError::config(format!(
                "--problem must be 1 or 2, got {other}"
            )));
        }
    };
    match args.shim.as_deref() {
        None => {}
        Some("force-candidate") => result.verdict = Verdict::CounterexampleCandidate,
        Some(other) => return Err(CliError::config(format!("unknown shim '{other}'"))),
    }

    let body = serde_json::to_string_pretty(&result).unwrap() + "\n";
    write_or_print(&args.out, &body)?;
    if args.out.is_some() {
        println!(
            "problem {:?}: trials={} evaluated={} skipped={} worst_residual={:e} verdict={:?}",
            result.problem,
            result.trials,
            result.evaluated,
            result.skipped,
            result.worst_residual,
            result.verdict
        );
    }
    Ok(if result.verdict == Verdict::CounterexampleCandidate {
        3
    } else {
        0
    })
}

fn cmd_list() -> u8 {
    println!("checks:");
    for &id in CheckId::all() {
        println!("  {:<8} {}", id.id(), id.describe());
    }
    println!("\nprobes:");
    for &id in ProbeId::all() {
        println!("  {:<16} {}", id.id(), id.describe());
    }
    0
}

fn main() -> ExitCode {
    exec::init_threads(exec::thread_cap_from_env());
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Check(a) => cmd_check(a),
        Command::Probe(a) => cmd_probe(a),
        Command::Search(a) => cmd_search(a),
        Command::List => Ok(cmd_list()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
