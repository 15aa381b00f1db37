//! Monotonicity and limit probes for section-ratio functions, plus
//! randomized counterexample searches for the two open generalizations.
//!
//! Monotonicity is tested by consecutive-pair comparison with a relative
//! tolerance, not by numerical differentiation: the underlying claims are
//! order-theoretic and pairwise checks are robust to evaluation noise.
//! Searches sample log-uniformly in (α, β, γ, z), uniformly over the small
//! discrete q and n sets, and are deterministic for a given seed: every
//! trial derives its own RNG substream, so results do not depend on the
//! worker count. A candidate violation is reported only after it survives
//! re-evaluation at 50-digit precision.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::checks::GUARD_REL_ACCURACY;
use crate::error::{Error, Result};
use crate::exec;
use crate::oracle::{eval_tail_oracle, OracleConfig, OracleValue};
use crate::series::{
    eval_ml_normalized, eval_tail, eval_tail_any, Family, MLParams, SeriesConfig,
};

/// Default per-pair relative tolerance for monotonicity verdicts.
pub const TOL_MONO: f64 = 1e-9;

/// Normalized-residual tolerance for the searches; a candidate must fall
/// below −10·TOL_SEARCH and survive high-precision confirmation.
pub const TOL_SEARCH: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// Verdict for one monotonicity claim along a sampled grid.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct MonotonicityReport {
    pub function_id: String,
    pub direction: Direction,
    /// (coordinate, value) pairs actually compared, coordinate-increasing.
    pub sample_points: Vec<(f64, f64)>,
    /// Largest raw step against the claimed direction (0 when monotone).
    pub max_violation: f64,
    pub passed: bool,
    /// Value at the smallest coordinate, when a limit is claimed.
    pub limit_at_zero: Option<f64>,
    /// The sharp constant the z→0⁺ limit must match, when defined.
    pub limit_reference: Option<f64>,
    /// Grid points dropped by the positivity guard.
    pub guard_excluded: u32,
}

fn validate_grid(grid: &[f64], min_points: usize, min_decades: f64) -> Result<()> {
    if grid.len() < min_points {
        return Err(Error::DegenerateGrid(format!(
            "need at least {min_points} grid points, got {}",
            grid.len()
        )));
    }
    if grid.iter().any(|z| !z.is_finite() || *z <= 0.0) {
        return Err(Error::DegenerateGrid("grid points must be positive and finite".to_string()));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::DegenerateGrid("grid must be strictly increasing".to_string()));
    }
    if min_decades > 0.0 {
        let span = (grid[grid.len() - 1] / grid[0]).log10();
        if span < min_decades {
            return Err(Error::DegenerateGrid(format!(
                "grid must span at least {min_decades} decades, got {span:.2}"
            )));
        }
    }
    Ok(())
}

fn assess(points: &[(f64, f64)], direction: Direction) -> (f64, bool) {
    let mut max_violation = 0.0f64;
    let mut passed = true;
    for w in points.windows(2) {
        let (a, b) = (w[0].1, w[1].1);
        let against = match direction {
            Direction::Increasing => a - b,
            Direction::Decreasing => b - a,
        };
        if against > max_violation {
            max_violation = against;
        }
        if against > TOL_MONO * a.abs().max(b.abs()).max(f64::MIN_POSITIVE) {
            passed = false;
        }
    }
    (max_violation, passed)
}

fn resolved_tail_log(p: &MLParams, n: u32, z: f64, cfg: &SeriesConfig) -> Result<f64> {
    let r = eval_tail(p, n, z, cfg)?;
    if !r.resolves(GUARD_REL_ACCURACY) {
        return Err(Error::domain(format!(
            "tail section not resolvable at z = {z} within the truncation budget"
        )));
    }
    Ok(r.log_abs)
}

/// Ratio of classical tail sections h_n(z) = Eⁿ·Eⁿ⁺²/(Eⁿ⁺¹)², increasing on
/// (0, ∞) with z→0⁺ limit Γ²(β+(n+2)α)/(Γ(β+(n+1)α)Γ(β+(n+3)α)).
pub fn probe_hn(
    alpha: f64,
    beta: f64,
    n: u32,
    z_grid: &[f64],
    cfg: &SeriesConfig,
) -> Result<MonotonicityReport> {
    validate_grid(z_grid, 8, 2.0)?;
    let p = MLParams::classical(alpha, beta);
    p.validate()?;
    let mut points = Vec::with_capacity(z_grid.len());
    for &z in z_grid {
        let l0 = resolved_tail_log(&p, n, z, cfg)?;
        let l1 = resolved_tail_log(&p, n + 1, z, cfg)?;
        let l2 = resolved_tail_log(&p, n + 2, z, cfg)?;
        points.push((z, (l0 + l2 - 2.0 * l1).exp()));
    }
    let (max_violation, passed) = assess(&points, Direction::Increasing);
    let limit_reference = crate::checks::sharp_tail_constant_ln(alpha, beta, n).exp();
    Ok(MonotonicityReport {
        function_id: format!("hn[alpha={alpha},beta={beta},n={n}]"),
        direction: Direction::Increasing,
        limit_at_zero: Some(points[0].1),
        limit_reference: Some(limit_reference),
        sample_points: points,
        max_violation,
        passed,
        guard_excluded: 0,
    })
}

/// Ratio of Prabhakar tail sections H(z), increasing on (0, ∞) with the
/// sharp-constant z→0⁺ limit.
pub fn probe_h_prabhakar(
    alpha: f64,
    beta: f64,
    gamma: f64,
    n: u32,
    z_grid: &[f64],
    cfg: &SeriesConfig,
) -> Result<MonotonicityReport> {
    validate_grid(z_grid, 8, 2.0)?;
    let p = MLParams::prabhakar(alpha, beta, gamma);
    p.validate()?;
    let mut points = Vec::with_capacity(z_grid.len());
    for &z in z_grid {
        let l0 = resolved_tail_log(&p, n, z, cfg)?;
        let l1 = resolved_tail_log(&p, n + 1, z, cfg)?;
        let l2 = resolved_tail_log(&p, n + 2, z, cfg)?;
        points.push((z, (l0 + l2 - 2.0 * l1).exp()));
    }
    let (max_violation, passed) = assess(&points, Direction::Increasing);
    let limit_reference = crate::checks::sharp_prabhakar_constant_ln(alpha, beta, gamma, n).exp();
    Ok(MonotonicityReport {
        function_id: format!("H[alpha={alpha},beta={beta},gamma={gamma},n={n}]"),
        direction: Direction::Increasing,
        limit_at_zero: Some(points[0].1),
        limit_reference: Some(limit_reference),
        sample_points: points,
        max_violation,
        passed,
        guard_excluded: 0,
    })
}

/// Ratio E_{α,β₁}/E_{α,β₂} along z: increasing when β₁ < β₂, decreasing
/// when β₁ > β₂. The classical theorem assumes β₁, β₂ > 1; the generalized
/// families only need positivity.
#[allow(clippy::too_many_arguments)]
pub fn probe_beta_ratio(
    family: Family,
    alpha: f64,
    beta1: f64,
    beta2: f64,
    gamma: f64,
    q: f64,
    z_grid: &[f64],
    cfg: &SeriesConfig,
) -> Result<MonotonicityReport> {
    if beta1 == beta2 {
        return Err(Error::domain("beta1 and beta2 must differ".to_string()));
    }
    if family == Family::Classical && !(beta1 > 1.0 && beta2 > 1.0) {
        return Err(Error::domain(
            "the classical ratio claim requires beta1, beta2 > 1".to_string(),
        ));
    }
    validate_grid(z_grid, 2, 0.0)?;
    let make = |b: f64| match family {
        Family::Classical => MLParams::classical(alpha, b),
        Family::Prabhakar => MLParams::prabhakar(alpha, b, gamma),
        Family::FourParameter => MLParams::four_parameter(alpha, b, gamma, q),
    };
    let p1 = make(beta1);
    let p2 = make(beta2);
    p1.validate()?;
    let mut points = Vec::with_capacity(z_grid.len());
    for &z in z_grid {
        let r1 = crate::series::eval_ml(&p1, z, cfg)?;
        let r2 = crate::series::eval_ml(&p2, z, cfg)?;
        if !(r1.resolves(GUARD_REL_ACCURACY) && r2.resolves(GUARD_REL_ACCURACY)) {
            return Err(Error::domain(format!(
                "ratio not resolvable at z = {z} within the truncation budget"
            )));
        }
        points.push((z, (r1.log_abs - r2.log_abs).exp()));
    }
    let direction = if beta1 < beta2 {
        Direction::Increasing
    } else {
        Direction::Decreasing
    };
    let (max_violation, passed) = assess(&points, direction);
    Ok(MonotonicityReport {
        function_id: format!("beta_ratio[{family},alpha={alpha},beta1={beta1},beta2={beta2}]"),
        direction,
        sample_points: points,
        max_violation,
        passed,
        limit_at_zero: None,
        limit_reference: None,
        guard_excluded: 0,
    })
}

/// The map β ↦ 𝔼_{α,β+1}(z)/𝔼_{α,β}(z) at fixed z, nondecreasing in β.
/// Grid points failing the positivity guard are excluded, not failed.
pub fn probe_normalized_successor_ratio(
    family: Family,
    alpha: f64,
    beta_grid: &[f64],
    gamma: f64,
    q: f64,
    z: f64,
    cfg: &SeriesConfig,
) -> Result<MonotonicityReport> {
    if beta_grid.len() < 2 {
        return Err(Error::DegenerateGrid("need at least 2 beta points".to_string()));
    }
    if beta_grid
        .iter()
        .any(|b| !b.is_finite() || *b <= 0.0)
    {
        return Err(Error::DegenerateGrid("beta grid must be positive".to_string()));
    }
    if beta_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::DegenerateGrid("beta grid must be strictly increasing".to_string()));
    }
    let make = |b: f64| match family {
        Family::Classical => MLParams::classical(alpha, b),
        Family::Prabhakar => MLParams::prabhakar(alpha, b, gamma),
        Family::FourParameter => MLParams::four_parameter(alpha, b, gamma, q),
    };
    let mut points = Vec::with_capacity(beta_grid.len());
    let mut guard_excluded = 0u32;
    let floor = (1e-12f64).ln();
    for &b in beta_grid {
        let lo = eval_ml_normalized(&make(b), z, cfg)?;
        let hi = eval_ml_normalized(&make(b + 1.0), z, cfg)?;
        let ok = |r: &crate::series::EvalResult| {
            r.resolves(GUARD_REL_ACCURACY) && r.sign > 0 && r.log_abs > floor
        };
        if ok(&lo) && ok(&hi) {
            points.push((b, (hi.log_abs - lo.log_abs).exp()));
        } else {
            guard_excluded += 1;
        }
    }
    let (max_violation, passed) = assess(&points, Direction::Increasing);
    Ok(MonotonicityReport {
        function_id: format!("successor_ratio[{family},alpha={alpha},z={z}]"),
        direction: Direction::Increasing,
        sample_points: points,
        max_violation,
        passed,
        limit_at_zero: None,
        limit_reference: None,
        guard_excluded,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ProblemId {
    Problem1,
    Problem2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Verdict {
    NoCounterexampleFound,
    CounterexampleCandidate,
}

/// Parameter point at which the worst residual was observed. For Problem 2
/// the pair (z_lo, z_hi) brackets the worst monotonicity step; for
/// Problem 1 both equal the sampled z.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SearchPoint {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub q: f64,
    pub n: u32,
    pub z_lo: f64,
    pub z_hi: f64,
}

/// Sampling ranges for the searches. Continuous parameters are sampled
/// log-uniformly; q and n uniformly over their sets.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SearchRanges {
    pub alpha: (f64, f64),
    pub beta: (f64, f64),
    pub gamma: (f64, f64),
    pub q_set: Vec<f64>,
    pub n_set: Vec<u32>,
    pub z: (f64, f64),
}

impl Default for SearchRanges {
    fn default() -> Self {
        SearchRanges {
            alpha: (0.1, 5.0),
            beta: (0.1, 5.0),
            gamma: (0.1, 5.0),
            q_set: vec![0.25, 0.5, 0.75, 2.0, 3.0],
            n_set: vec![0, 1, 2],
            z: (1e-3, 10.0),
        }
    }
}

impl SearchRanges {
    fn validate(&self) -> Result<()> {
        for (name, (lo, hi)) in [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("gamma", self.gamma),
            ("z", self.z),
        ] {
            if !(lo > 0.0 && lo.is_finite() && hi.is_finite() && lo <= hi) {
                return Err(Error::config(format!(
                    "{name} range must satisfy 0 < lo <= hi, got ({lo}, {hi})"
                )));
            }
        }
        if self.z.0 >= self.z.1 {
            return Err(Error::DegenerateGrid(
                "z range must span an interval (identical endpoints rejected)".to_string(),
            ));
        }
        if self.q_set.is_empty() || self.n_set.is_empty() {
            return Err(Error::config("q_set and n_set must be non-empty".to_string()));
        }
        for &q in &self.q_set {
            if !(q.is_finite() && q > 0.0 && (q < 1.0 || q.fract() == 0.0)) {
                return Err(Error::config(format!(
                    "q must lie in (0,1) or be a positive integer, got {q}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SearchResult {
    pub problem: ProblemId,
    pub trials: u64,
    pub seed: u64,
    /// Trials whose evaluations all resolved.
    pub evaluated: u64,
    /// Trials dropped because some evaluation left the verified domain.
    pub skipped: u64,
    /// Most negative normalized residual observed (>= 0 means no violation
    /// anywhere). The residual is never asserted, only reported.
    pub worst_residual: f64,
    pub worst_params: Option<SearchPoint>,
    pub verdict: Verdict,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ trial.wrapping_mul(0x9E3779B97F4A7C15)))
}

fn sample_log_uniform(rng: &mut ChaCha8Rng, range: (f64, f64)) -> f64 {
    if range.0 == range.1 {
        return range.0;
    }
    let (llo, lhi) = (range.0.ln(), range.1.ln());
    (llo + rng.gen::<f64>() * (lhi - llo)).exp()
}

fn sample_point(rng: &mut ChaCha8Rng, ranges: &SearchRanges) -> SearchPoint {
    let alpha = sample_log_uniform(rng, ranges.alpha);
    let beta = sample_log_uniform(rng, ranges.beta);
    let gamma = sample_log_uniform(rng, ranges.gamma);
    let q = ranges.q_set[rng.gen_range(0..ranges.q_set.len())];
    let n = ranges.n_set[rng.gen_range(0..ranges.n_set.len())];
    let z = sample_log_uniform(rng, ranges.z);
    SearchPoint {
        alpha,
        beta,
        gamma,
        q,
        n,
        z_lo: z,
        z_hi: z,
    }
}

fn tail_ratio_log(point: &SearchPoint, z: f64, cfg: &SeriesConfig) -> Option<f64> {
    let p = MLParams::four_parameter(point.alpha, point.beta, point.gamma, point.q);
    let mut logs = [0.0f64; 3];
    for (i, shift) in [0u32, 1, 2].iter().enumerate() {
        let r = eval_tail_any(&p, point.n + shift, z, cfg).ok()?;
        if !r.resolves(GUARD_REL_ACCURACY) {
            return None;
        }
        logs[i] = r.log_abs;
    }
    Some(logs[0] + logs[2] - 2.0 * logs[1])
}

/// Normalized Turán residual (Tⁿ⁺¹)² − Tⁿ·Tⁿ⁺² over (Tⁿ⁺¹)², i.e. 1 − H(z).
fn problem1_residual(point: &SearchPoint, cfg: &SeriesConfig) -> Option<f64> {
    tail_ratio_log(point, point.z_lo, cfg).map(|l| 1.0 - l.exp())
}

fn oracle_tail_ratio_log(point: &SearchPoint, z: f64, ocfg: &OracleConfig) -> Option<f64> {
    let p = MLParams::four_parameter(point.alpha, point.beta, point.gamma, point.q);
    let mut logs = [0.0f64; 3];
    for (i, shift) in [0u32, 1, 2].iter().enumerate() {
        match eval_tail_oracle(&p, point.n + shift, z, ocfg) {
            OracleValue::Finite { log_abs, sign, .. } | OracleValue::OverflowsF64 { log_abs, sign } => {
                if sign < 0 {
                    return None;
                }
                logs[i] = log_abs;
            }
            _ => return None,
        }
    }
    Some(logs[0] + logs[2] - 2.0 * logs[1])
}

fn confirm_problem1(point: &SearchPoint) -> bool {
    let ocfg = OracleConfig::default();
    match oracle_tail_ratio_log(point, point.z_lo, &ocfg) {
        Some(l) => 1.0 - l.exp() < -10.0 * TOL_SEARCH,
        None => false,
    }
}

fn confirm_problem2(point: &SearchPoint) -> bool {
    let ocfg = OracleConfig::default();
    match (
        oracle_tail_ratio_log(point, point.z_lo, &ocfg),
        oracle_tail_ratio_log(point, point.z_hi, &ocfg),
    ) {
        (Some(lo), Some(hi)) => {
            let (a, b) = (lo.exp(), hi.exp());
            (b - a) / a.abs().max(b.abs()) < -10.0 * TOL_SEARCH
        }
        _ => false,
    }
}

fn finish_search(
    problem: ProblemId,
    trials: u64,
    seed: u64,
    outcomes: Vec<Option<(f64, SearchPoint)>>,
    confirm: impl Fn(&SearchPoint) -> bool,
) -> SearchResult {
    let mut evaluated = 0u64;
    let mut worst: Option<(f64, SearchPoint)> = None;
    for outcome in outcomes {
        if let Some((residual, point)) = outcome {
            evaluated += 1;
            let better = match &worst {
                None => true,
                Some((w, _)) => residual < *w,
            };
            if better {
                worst = Some((residual, point));
            }
        }
    }
    let (worst_residual, worst_params) = match worst {
        Some((r, p)) => (r, Some(p)),
        None => (f64::INFINITY, None),
    };
    let verdict = if worst_residual < -10.0 * TOL_SEARCH
        && worst_params.map(|p| confirm(&p)).unwrap_or(false)
    {
        Verdict::CounterexampleCandidate
    } else {
        Verdict::NoCounterexampleFound
    };
    SearchResult {
        problem,
        trials,
        seed,
        evaluated,
        skipped: trials - evaluated,
        worst_residual,
        worst_params,
        verdict,
    }
}

/// Does the tail Turán inequality survive for general q? Reports the worst
/// normalized residual of (Tⁿ⁺¹)² − Tⁿ·Tⁿ⁺² over the sampled points.
pub fn search_problem1(
    ranges: &SearchRanges,
    trials: u64,
    seed: u64,
    cfg: &SeriesConfig,
) -> Result<SearchResult> {
    ranges.validate()?;
    if trials < 1 {
        return Err(Error::config("trials must be >= 1".to_string()));
    }
    let cfg = *cfg;
    let ranges_owned = ranges.clone();
    let outcomes = exec::map((0..trials).collect(), move |t| {
        let mut rng = trial_rng(seed, t);
        let point = sample_point(&mut rng, &ranges_owned);
        problem1_residual(&point, &cfg).map(|r| (r, point))
    });
    Ok(finish_search(
        ProblemId::Problem1,
        trials,
        seed,
        outcomes,
        confirm_problem1,
    ))
}

/// Is H^{γ,q,n} still monotone increasing for general q? Reports the worst
/// normalized step of H along a log-spaced z grid per sampled parameter
/// point.
pub fn search_problem2(
    ranges: &SearchRanges,
    trials: u64,
    seed: u64,
    cfg: &SeriesConfig,
) -> Result<SearchResult> {
    ranges.validate()?;
    if trials < 1 {
        return Err(Error::config("trials must be >= 1".to_string()));
    }
    const GRID_POINTS: usize = 16;
    let (zl, zh) = (ranges.z.0.ln(), ranges.z.1.ln());
    let z_grid: Vec<f64> = (0..GRID_POINTS)
        .map(|i| (zl + (zh - zl) * i as f64 / (GRID_POINTS - 1) as f64).exp())
        .collect();

    let cfg = *cfg;
    let ranges_owned = ranges.clone();
    let z_grid_shared = z_grid;
    let outcomes = exec::map((0..trials).collect(), move |t| {
        let mut rng = trial_rng(seed, t);
        let point = sample_point(&mut rng, &ranges_owned);
        let mut values = Vec::with_capacity(z_grid_shared.len());
        for &z in &z_grid_shared {
            values.push(tail_ratio_log(&point, z, &cfg)?.exp());
        }
        let mut worst = f64::INFINITY;
        let mut bracket = (point.z_lo, point.z_hi);
        for (w, zw) in values.windows(2).zip(z_grid_shared.windows(2)) {
            let (a, b) = (w[0], w[1]);
            let step = (b - a) / a.abs().max(b.abs()).max(f64::MIN_POSITIVE);
            if step < worst {
                worst = step;
                bracket = (zw[0], zw[1]);
            }
        }
        let point = SearchPoint {
            z_lo: bracket.0,
            z_hi: bracket.1,
            ..point
        };
        Some((worst, point))
    });
    Ok(finish_search(
        ProblemId::Problem2,
        trials,
        seed,
        outcomes,
        confirm_problem2,
    ))
}
