//! Every inequality as a residual-producing check with a uniform verdict
//! contract.
//!
//! Residuals are oriented so that the claimed direction corresponds to
//! `residual >= 0`, and a check passes when `residual >= -tol_used` with
//! `tol_used = max(eps_abs, eps_rel * scale)`. Products of function values
//! are assembled as sums of logarithms and the signed difference is formed
//! at matched magnitude, so verdicts stay exact even when the linear
//! quantities overflow f64.
//!
//! A point where some required evaluation cannot be resolved to well below
//! the verdict tolerance — truncation budget exhausted, divergent
//! four-parameter series, catastrophic alternating-sum cancellation, or a
//! non-positive value under a real-exponent inequality — is reported as
//! `GuardExcluded` ("outside verified domain"), never as a failure.

use crate::error::{Error, Result};
use crate::gamma::{ln_gamma_raw, GAMMA_MIN_ABSCISSA};
use crate::series::{
    eval_ml, eval_ml_normalized, eval_tail, EvalResult, MLParams, SeriesConfig,
};

/// Relative accuracy an evaluation must reach before its point counts as
/// verifiable; a quarter of the default relative verdict tolerance.
pub const GUARD_REL_ACCURACY: f64 = 2.5e-10;

/// Positivity floor for inequalities that raise function values to real
/// powers.
const GUARD_LOG_FLOOR: f64 = -27.631021115928547; // ln(1e-12)

/// Verdict tolerances: pass iff residual >= -max(eps_abs, eps_rel * scale).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Tolerance {
    pub eps_abs: f64,
    pub eps_rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_abs: 1e-12,
            eps_rel: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Passed,
    Failed,
    /// Outside the numerically verified domain: positivity guard violated or
    /// the evaluation could not be resolved at verdict accuracy.
    GuardExcluded,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Passed => "passed",
            CheckStatus::Failed => "failed",
            CheckStatus::GuardExcluded => "guard",
        }
    }
}

/// One inequality verdict at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CheckRecord {
    pub equation_id: &'static str,
    pub alpha: f64,
    pub beta: f64,
    pub beta2: Option<f64>,
    pub gamma: Option<f64>,
    pub q: Option<f64>,
    pub n: Option<u32>,
    pub z: f64,
    /// Signed; >= 0 means the inequality holds as stated. NaN for
    /// guard-excluded points.
    pub residual: f64,
    pub scale: f64,
    pub passed: bool,
    pub status: CheckStatus,
    pub tol_used: f64,
}

#[derive(Debug, Clone, Copy)]
struct Meta {
    equation_id: &'static str,
    alpha: f64,
    beta: f64,
    beta2: Option<f64>,
    gamma: Option<f64>,
    q: Option<f64>,
    n: Option<u32>,
    z: f64,
}

impl Meta {
    fn new(equation_id: &'static str, alpha: f64, beta: f64, z: f64) -> Self {
        Meta {
            equation_id,
            alpha,
            beta,
            beta2: None,
            gamma: None,
            q: None,
            n: None,
            z,
        }
    }

    fn beta2(mut self, b: f64) -> Self {
        self.beta2 = Some(b);
        self
    }

    fn gamma(mut self, g: f64) -> Self {
        self.gamma = Some(g);
        self
    }

    fn q(mut self, q: f64) -> Self {
        self.q = Some(q);
        self
    }

    fn n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }

    fn guard_excluded(self) -> CheckRecord {
        CheckRecord {
            equation_id: self.equation_id,
            alpha: self.alpha,
            beta: self.beta,
            beta2: self.beta2,
            gamma: self.gamma,
            q: self.q,
            n: self.n,
            z: self.z,
            residual: f64::NAN,
            scale: f64::NAN,
            passed: false,
            status: CheckStatus::GuardExcluded,
            tol_used: f64::NAN,
        }
    }

    fn record(self, residual: f64, scale: f64, passed: bool, tol_used: f64) -> CheckRecord {
        CheckRecord {
            equation_id: self.equation_id,
            alpha: self.alpha,
            beta: self.beta,
            beta2: self.beta2,
            gamma: self.gamma,
            q: self.q,
            n: self.n,
            z: self.z,
            residual,
            scale,
            passed,
            status: if passed {
                CheckStatus::Passed
            } else {
                CheckStatus::Failed
            },
            tol_used,
        }
    }
}

/// A product of function values in log form, entering the residual with the
/// given sign.
#[derive(Debug, Clone, Copy)]
struct LogTerm {
    log: f64,
    negative: bool,
}

impl LogTerm {
    fn pos(log: f64) -> Self {
        LogTerm {
            log,
            negative: false,
        }
    }

    fn neg(log: f64) -> Self {
        LogTerm {
            log,
            negative: true,
        }
    }
}

/// Form Σ ± e^{log_i} at matched magnitude and apply the verdict contract
/// against scale = e^{log_scale}.
fn combine(meta: Meta, terms: &[LogTerm], log_scale: f64, tol: &Tolerance) -> CheckRecord {
    let m = terms
        .iter()
        .map(|t| t.log)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut rs = 0.0f64;
    for t in terms {
        let v = (t.log - m).exp();
        rs += if t.negative { -v } else { v };
    }
    let ss = (log_scale - m).exp();
    let tol_scaled = (tol.eps_abs * (-m).exp()).max(tol.eps_rel * ss);
    let passed = rs >= -tol_scaled;

    let residual = if rs == 0.0 {
        0.0
    } else {
        rs.signum() * (m + rs.abs().ln()).exp()
    };
    let scale = log_scale.exp();
    let tol_used = tol.eps_abs.max(tol.eps_rel * scale);
    meta.record(residual, scale, passed, tol_used)
}

/// Residual already on the additive (log) scale, verdicted against scale 1.
fn log_scale_record(meta: Meta, residual: f64, tol: &Tolerance) -> CheckRecord {
    let tol_used = tol.eps_abs.max(tol.eps_rel);
    meta.record(residual, 1.0, residual >= -tol_used, tol_used)
}

fn resolved_log(r: &EvalResult) -> Option<f64> {
    if r.resolves(GUARD_REL_ACCURACY) && r.sign > 0 {
        Some(r.log_abs)
    } else {
        None
    }
}

/// Log of a normalized value under the positivity guard for real-exponent
/// inequalities: must be resolved, positive and above the 1e-12 floor.
fn guarded_log(r: &EvalResult) -> Option<f64> {
    match resolved_log(r) {
        Some(l) if l > GUARD_LOG_FLOOR => Some(l),
        _ => None,
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::domain(format!("{name} must be > 0, got {v}")));
    }
    Ok(())
}

macro_rules! try_log {
    ($meta:expr, $ev:expr) => {
        match resolved_log(&$ev) {
            Some(l) => l,
            None => return Ok($meta.guard_excluded()),
        }
    };
}

macro_rules! try_guarded {
    ($meta:expr, $ev:expr) => {
        match guarded_log(&$ev) {
            Some(l) => l,
            None => return Ok($meta.guard_excluded()),
        }
    };
}

/// Turán inequality for the normalized classical family:
/// 𝔼_{α,β}·𝔼_{α,β+2} − 𝔼²_{α,β+1} ≥ 0.
pub fn check_turan_classical(
    alpha: f64,
    beta: f64,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    positive("beta", beta)?;
    positive("z", z)?;
    let meta = Meta::new("eq6", alpha, beta, z);
    let l0 = try_log!(meta, eval_ml_normalized(&MLParams::classical(alpha, beta), z, cfg)?);
    let l1 = try_log!(meta, eval_ml_normalized(&MLParams::classical(alpha, beta + 1.0), z, cfg)?);
    let l2 = try_log!(meta, eval_ml_normalized(&MLParams::classical(alpha, beta + 2.0), z, cfg)?);
    Ok(combine(
        meta,
        &[LogTerm::pos(l0 + l2), LogTerm::neg(2.0 * l1)],
        2.0 * l1,
        tol,
    ))
}

/// Exponential corollary (e^z−1)² ≤ 2e^z(e^z−1−z), assembled from the
/// α = β = 1 family members rather than a hard-coded exponential.
pub fn check_exp_corollary(z: f64, cfg: &SeriesConfig, tol: &Tolerance) -> Result<CheckRecord> {
    positive("z", z)?;
    let meta = Meta::new("eq66", 1.0, 1.0, z);
    let l11 = try_log!(meta, eval_ml(&MLParams::classical(1.0, 1.0), z, cfg)?);
    let l12 = try_log!(meta, eval_ml(&MLParams::classical(1.0, 2.0), z, cfg)?);
    let l13 = try_log!(meta, eval_ml(&MLParams::classical(1.0, 3.0), z, cfg)?);
    let ln_z = z.ln();
    // 2 e^z (e^z−1−z) = 2 E_{1,1} z² E_{1,3};   (e^z−1)² = (z E_{1,2})².
    let l_pos = std::f64::consts::LN_2 + l11 + 2.0 * ln_z + l13;
    let l_neg = 2.0 * (ln_z + l12);
    Ok(combine(
        meta,
        &[LogTerm::pos(l_pos), LogTerm::neg(l_neg)],
        l_neg,
        tol,
    ))
}

/// Tail-section Turán inequality Eⁿ·Eⁿ⁺² ≤ (Eⁿ⁺¹)² for the classical family.
pub fn check_tail_turan_classical(
    alpha: f64,
    beta: f64,
    n: u32,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    positive("beta", beta)?;
    positive("z", z)?;
    let meta = Meta::new("eq8", alpha, beta, z).n(n);
    let p = MLParams::classical(alpha, beta);
    let t0 = try_log!(meta, eval_tail(&p, n, z, cfg)?);
    let t1 = try_log!(meta, eval_tail(&p, n + 1, z, cfg)?);
    let t2 = try_log!(meta, eval_tail(&p, n + 2, z, cfg)?);
    Ok(combine(
        meta,
        &[LogTerm::pos(2.0 * t1), LogTerm::neg(t0 + t2)],
        2.0 * t1,
        tol,
    ))
}

/// Shifted-order Turán inequality
/// E_{α,β+(n+1)α}·E_{α,β+(n+3)α} ≤ E²_{α,β+(n+2)α}.
pub fn check_shifted_turan(
    alpha: f64,
    beta: f64,
    n: u32,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    if !beta.is_finite() || beta < 0.0 {
        return Err(Error::domain(format!("beta must be >= 0, got {beta}")));
    }
    positive("z", z)?;
    let b1 = beta + f64::from(n + 1) * alpha;
    if b1 <= 0.0 {
        return Err(Error::domain(format!(
            "beta + (n+1) alpha must be > 0, got {b1}"
        )));
    }
    let meta = Meta::new("eq09", alpha, beta, z).n(n);
    let order = |shift: u32| beta + f64::from(n + shift) * alpha;
    let l1 = try_log!(meta, eval_ml(&MLParams::classical(alpha, order(1)), z, cfg)?);
    let l2 = try_log!(meta, eval_ml(&MLParams::classical(alpha, order(2)), z, cfg)?);
    let l3 = try_log!(meta, eval_ml(&MLParams::classical(alpha, order(3)), z, cfg)?);
    Ok(combine(
        meta,
        &[LogTerm::pos(2.0 * l2), LogTerm::neg(l1 + l3)],
        2.0 * l2,
        tol,
    ))
}

/// Sharp-constant tail inequality C·(Eⁿ⁺¹)² ≤ Eⁿ·Eⁿ⁺² with
/// C = Γ²(β+(n+2)α) / (Γ(β+(n+1)α)·Γ(β+(n+3)α)).
pub fn check_sharp_turan_tail(
    alpha: f64,
    beta: f64,
    n: u32,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    positive("beta", beta)?;
    positive("z", z)?;
    let meta = Meta::new("eq999", alpha, beta, z).n(n);
    let p = MLParams::classical(alpha, beta);
    let t0 = try_log!(meta, eval_tail(&p, n, z, cfg)?);
    let t1 = try_log!(meta, eval_tail(&p, n + 1, z, cfg)?);
    let t2 = try_log!(meta, eval_tail(&p, n + 2, z, cfg)?);
    let ln_c = sharp_tail_constant_ln(alpha, beta, n);
    Ok(combine(
        meta,
        &[LogTerm::pos(t0 + t2), LogTerm::neg(ln_c + 2.0 * t1)],
        2.0 * t1,
        tol,
    ))
}

/// ln of the sharp constant in the classical tail inequality; also the z→0⁺
/// limit of the tail ratio h_n.
pub fn sharp_tail_constant_ln(alpha: f64, beta: f64, n: u32) -> f64 {
    let order = |shift: u32| beta + f64::from(n + shift) * alpha;
    2.0 * ln_gamma_raw(order(2)) - ln_gamma_raw(order(1)) - ln_gamma_raw(order(3))
}

/// Ratio-monotonicity Turán inequality for β₂ > β₁ > 1:
/// E_{α,β₂}E_{α,β₁−1} − E_{α,β₁}E_{α,β₂−1} + (β₂−β₁)E_{α,β₁}E_{α,β₂} ≥ 0.
pub fn check_ratio_turan_classical(
    alpha: f64,
    beta1: f64,
    beta2: f64,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    positive("z", z)?;
    if !(beta2 > beta1 && beta1 > 1.0) {
        return Err(Error::domain(format!(
            "requires beta2 > beta1 > 1, got beta1={beta1}, beta2={beta2}"
        )));
    }
    let meta = Meta::new("eq7777", alpha, beta1, z).beta2(beta2);
    let at = |b: f64| -> Result<EvalResult> { eval_ml(&MLParams::classical(alpha, b), z, cfg) };
    let l1 = try_log!(meta, at(beta1)?);
    let l2 = try_log!(meta, at(beta2)?);
    let l1m = try_log!(meta, at(beta1 - 1.0)?);
    let l2m = try_log!(meta, at(beta2 - 1.0)?);
    Ok(combine(
        meta,
        &[
            LogTerm::pos(l2 + l1m),
            LogTerm::neg(l1 + l2m),
            LogTerm::pos((beta2 - beta1).ln() + l1 + l2),
        ],
        l1 + l2,
        tol,
    ))
}

/// Specialization of the ratio inequality at β₁ = β+1, β₂ = β+2:
/// E_{α,β}E_{α,β+2} − E²_{α,β+1} + (β+1)E_{α,β+1}E_{α,β+2} ≥ 0.
pub fn check_ratio_turan_special(
    alpha: f64,
    beta: f64,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    positive("beta", beta)?;
    positive("z", z)?;
    let meta = Meta::new("eq8888", alpha, beta, z);
    let at = |b: f64| -> Result<EvalResult> { eval_ml(&MLParams::classical(alpha, b), z, cfg) };
    let l0 = try_log!(meta, at(beta)?);
    let l1 = try_log!(meta, at(beta + 1.0)?);
    let l2 = try_log!(meta, at(beta + 2.0)?);
    Ok(combine(
        meta,
        &[
            LogTerm::pos(l0 + l2),
            LogTerm::neg(2.0 * l1),
            LogTerm::pos((beta + 1.0).ln() + l1 + l2),
        ],
        l1 + l2,
        tol,
    ))
}

/// Lazarević-type inequality for the normalized classical family,
/// compared in log space:
/// (β₁−1)⁻¹·ln 𝔼_{α,β₁} ≤ (β₂−1)⁻¹·ln 𝔼_{α,β₂} for β₁ ≥ β₂ > 1, z ≥ 0.
///
/// Negative arguments are outside the verified domain: to first order in z
/// the residual is z times a positive constant, so the stated real-line form
/// flips sign for z < 0 (closed-form counterexample at α = 1, β₁ = 3,
/// β₂ = 2, z = −1: √(2e⁻¹) > 1 − e⁻¹).
pub fn check_lazarevic_classical(
    alpha: f64,
    beta1: f64,
    beta2: f64,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    if !(beta1 >= beta2 && beta2 > 1.0) {
        return Err(Error::domain(format!(
            "requires beta1 >= beta2 > 1, got beta1={beta1}, beta2={beta2}"
        )));
    }
    if !z.is_finite() {
        return Err(Error::domain(format!("z must be finite, got {z}")));
    }
    let meta = Meta::new("a1", alpha, beta1, z).beta2(beta2);
    if z < 0.0 {
        return Ok(meta.guard_excluded());
    }
    let l1 = try_guarded!(
        meta,
        eval_ml_normalized(&MLParams::classical(alpha, beta1), z, cfg)?
    );
    let l2 = if beta1 == beta2 {
        l1
    } else {
        try_guarded!(
            meta,
            eval_ml_normalized(&MLParams::classical(alpha, beta2), z, cfg)?
        )
    };
    let residual = l2 / (beta2 - 1.0) - l1 / (beta1 - 1.0);
    Ok(log_scale_record(meta, residual, tol))
}

/// Wilker-type inequality for the normalized classical family:
/// [𝔼_{α,β₂}]^{(β₁−β₂)/(β₂−1)} + 𝔼_{α,β₂}/𝔼_{α,β₁} ≥ 2 for β₁ ≥ β₂ > 1,
/// z ≥ 0. Negative arguments are outside the verified domain for the same
/// first-order reason as the Lazarević form.
pub fn check_wilker_classical(
    alpha: f64,
    beta1: f64,
    beta2: f64,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    if !(beta1 >= beta2 && beta2 > 1.0) {
        return Err(Error::domain(format!(
            "requires beta1 >= beta2 > 1, got beta1={beta1}, beta2={beta2}"
        )));
    }
    if !z.is_finite() {
        return Err(Error::domain(format!("z must be finite, got {z}")));
    }
    let meta = Meta::new("a4", alpha, beta1, z).beta2(beta2);
    if z < 0.0 {
        return Ok(meta.guard_excluded());
    }
    let l1 = try_guarded!(
        meta,
        eval_ml_normalized(&MLParams::classical(alpha, beta1), z, cfg)?
    );
    let l2 = if beta1 == beta2 {
        l1
    } else {
        try_guarded!(
            meta,
            eval_ml_normalized(&MLParams::classical(alpha, beta2), z, cfg)?
        )
    };
    let exponent = (beta1 - beta2) / (beta2 - 1.0);
    let lhs = (exponent * l2).exp() + (l2 - l1).exp();
    Ok(log_scale_record(meta, lhs - 2.0, tol))
}

/// Turán inequality for the normalized four-parameter family:
/// (𝔼^{γ,q}_{α,β+1})² ≤ 𝔼^{γ,q}_{α,β}·𝔼^{γ,q}_{α,β+2}.
pub fn check_turan_generalized(
    alpha: f64,
    beta: f64,
    gamma: f64,
    q: f64,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    positive("beta", beta)?;
    positive("z", z)?;
    let meta = Meta::new("eq666", alpha, beta, z).gamma(gamma).q(q);
    let at = |b: f64| -> Result<EvalResult> {
        eval_ml_normalized(&MLParams::four_parameter(alpha, b, gamma, q), z, cfg)
    };
    let l0 = try_log!(meta, at(beta)?);
    let l1 = try_log!(meta, at(beta + 1.0)?);
    let l2 = try_log!(meta, at(beta + 2.0)?);
    Ok(combine(
        meta,
        &[LogTerm::pos(l0 + l2), LogTerm::neg(2.0 * l1)],
        2.0 * l1,
        tol,
    ))
}

/// Bounded Turán inequality for the Prabhakar family on z ∈ [0, 1):
/// E^γ_{α,β}E^γ_{α,β+2} ≥ (E^γ_{α,β+1})² − [Γ(β+1)Γ(β+2)(1−z)²]⁻¹,
/// for γ ∈ (0,1] and β above the Γ-minimum abscissa minus one.
pub fn check_bounded_turan_prabhakar(
    alpha: f64,
    beta: f64,
    gamma: f64,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    if !(gamma > 0.0 && gamma <= 1.0) {
        return Err(Error::domain(format!("requires gamma in (0, 1], got {gamma}")));
    }
    if !(beta > GAMMA_MIN_ABSCISSA - 1.0) {
        return Err(Error::domain(format!(
            "requires beta > {}, got {beta}",
            GAMMA_MIN_ABSCISSA - 1.0
        )));
    }
    if !(0.0..1.0).contains(&z) {
        return Err(Error::domain(format!("requires z in [0, 1), got {z}")));
    }
    let meta = Meta::new("eq001", alpha, beta, z).gamma(gamma);
    let at = |b: f64| -> Result<EvalResult> {
        eval_ml(&MLParams::prabhakar(alpha, b, gamma), z, cfg)
    };
    let l0 = try_log!(meta, at(beta)?);
    let l1 = try_log!(meta, at(beta + 1.0)?);
    let l2 = try_log!(meta, at(beta + 2.0)?);
    let correction =
        -ln_gamma_raw(beta + 1.0) - ln_gamma_raw(beta + 2.0) - 2.0 * (1.0 - z).ln();
    Ok(combine(
        meta,
        &[
            LogTerm::pos(l0 + l2),
            LogTerm::neg(2.0 * l1),
            LogTerm::pos(correction),
        ],
        2.0 * l1,
        tol,
    ))
}

/// Four-parameter version of the ratio-monotonicity Turán inequality.
pub fn check_ratio_turan_generalized(
    alpha: f64,
    beta1: f64,
    beta2: f64,
    gamma: f64,
    q: f64,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    positive("z", z)?;
    if !(beta2 > beta1 && beta1 > 1.0) {
        return Err(Error::domain(format!(
            "requires beta2 > beta1 > 1, got beta1={beta1}, beta2={beta2}"
        )));
    }
    let meta = Meta::new("eq7777g", alpha, beta1, z)
        .beta2(beta2)
        .gamma(gamma)
        .q(q);
    let at = |b: f64| -> Result<EvalResult> {
        eval_ml(&MLParams::four_parameter(alpha, b, gamma, q), z, cfg)
    };
    let l1 = try_log!(meta, at(beta1)?);
    let l2 = try_log!(meta, at(beta2)?);
    let l1m = try_log!(meta, at(beta1 - 1.0)?);
    let l2m = try_log!(meta, at(beta2 - 1.0)?);
    Ok(combine(
        meta,
        &[
            LogTerm::pos(l2 + l1m),
            LogTerm::neg(l1 + l2m),
            LogTerm::pos((beta2 - beta1).ln() + l1 + l2),
        ],
        l1 + l2,
        tol,
    ))
}

/// Tail-section Turán inequality for the Prabhakar family (q = 1).
///
/// Verified for γ ≥ 1, where it is provable term by term: the series
/// coefficients of Tⁿ·Tⁿ⁺² − (Tⁿ⁺¹)² carry the factor
/// (n+2)(γ+k−1)·Γ(β+α(n+2))Γ(β+α(k−1)) − k(γ+n+1)·Γ(β+α(n+1))Γ(β+αk),
/// and (n+2)(γ+k−1) − k(γ+n+1) = (k−n−2)(1−γ) cooperates with the
/// gamma-ratio inequality exactly when γ ≥ 1. For γ < 1 the inequality is
/// genuinely false (e.g. −2.2% relative at α = 0.25, β = 1, γ = 0.5,
/// n = 0, z ≈ 0.595, confirmed at 40-digit precision), so those points
/// report as outside the verified domain; the open-problem search covers
/// the small-γ regime exploratively.
pub fn check_tail_turan_prabhakar(
    alpha: f64,
    beta: f64,
    gamma: f64,
    n: u32,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    positive("beta", beta)?;
    positive("gamma", gamma)?;
    positive("z", z)?;
    let meta = Meta::new("kk1", alpha, beta, z).gamma(gamma).n(n);
    if gamma < 1.0 {
        return Ok(meta.guard_excluded());
    }
    let p = MLParams::prabhakar(alpha, beta, gamma);
    let t0 = try_log!(meta, eval_tail(&p, n, z, cfg)?);
    let t1 = try_log!(meta, eval_tail(&p, n + 1, z, cfg)?);
    let t2 = try_log!(meta, eval_tail(&p, n + 2, z, cfg)?);
    Ok(combine(
        meta,
        &[LogTerm::pos(2.0 * t1), LogTerm::neg(t0 + t2)],
        2.0 * t1,
        tol,
    ))
}

/// ln of the sharp constant in the Prabhakar tail inequality, i.e. the
/// z→0⁺ limit of the tail ratio H: with c_m the m-th series coefficient the
/// limit is c_{n+1}c_{n+3}/c²_{n+2}, which evaluates to
/// (n+2)(γ+n+2)/[(n+3)(γ+n+1)] · Γ²(β+α(n+2))/(Γ(β+α(n+1))Γ(β+α(n+3))).
/// At γ = 1 the prefactor collapses to 1 and the classical tail constant is
/// recovered.
pub fn sharp_prabhakar_constant_ln(alpha: f64, beta: f64, gamma: f64, n: u32) -> f64 {
    let nf = f64::from(n);
    let order = |shift: u32| beta + f64::from(n + shift) * alpha;
    (nf + 2.0).ln() + (gamma + nf + 2.0).ln() - (nf + 3.0).ln() - (gamma + nf + 1.0).ln()
        + 2.0 * ln_gamma_raw(order(2))
        - ln_gamma_raw(order(1))
        - ln_gamma_raw(order(3))
}

/// Sharp-constant tail inequality for the Prabhakar family:
/// C′·(Eⁿ⁺¹)² ≤ Eⁿ·Eⁿ⁺² with C′ the z→0⁺ limit of the tail ratio
/// (see [`sharp_prabhakar_constant_ln`]).
///
/// Verified for γ ≥ 1 only. Below γ = 1 the tail ratio H is not monotone
/// (at α = 0.5, β = 1.5, γ = 0.5, n = 0 it falls from its limit 0.98175 to
/// 0.97686 near z = 0.3 before recovering), so no constant of this form is
/// attained at z → 0⁺ and γ < 1 points report as outside the verified
/// domain.
pub fn check_sharp_turan_prabhakar(
    alpha: f64,
    beta: f64,
    gamma: f64,
    n: u32,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    positive("beta", beta)?;
    positive("gamma", gamma)?;
    positive("z", z)?;
    let meta = Meta::new("ss", alpha, beta, z).gamma(gamma).n(n);
    if gamma < 1.0 {
        return Ok(meta.guard_excluded());
    }
    let p = MLParams::prabhakar(alpha, beta, gamma);
    let t0 = try_log!(meta, eval_tail(&p, n, z, cfg)?);
    let t1 = try_log!(meta, eval_tail(&p, n + 1, z, cfg)?);
    let t2 = try_log!(meta, eval_tail(&p, n + 2, z, cfg)?);
    let ln_c = sharp_prabhakar_constant_ln(alpha, beta, gamma, n);
    Ok(combine(
        meta,
        &[LogTerm::pos(t0 + t2), LogTerm::neg(ln_c + 2.0 * t1)],
        2.0 * t1,
        tol,
    ))
}

/// Lazarević-type inequality for the normalized four-parameter family:
/// [𝔼^{γ,q}_{α,β₁+1}]^{β₂} ≤ [𝔼^{γ,q}_{α,β₂+1}]^{β₁} for β₁ ≥ β₂ > 0,
/// z ≥ 0. Negative arguments are outside the verified domain, as in the
/// classical Lazarević form.
pub fn check_lazarevic_generalized(
    alpha: f64,
    beta1: f64,
    beta2: f64,
    gamma: f64,
    q: f64,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    if !(beta1 >= beta2 && beta2 > 0.0) {
        return Err(Error::domain(format!(
            "requires beta1 >= beta2 > 0, got beta1={beta1}, beta2={beta2}"
        )));
    }
    if !z.is_finite() {
        return Err(Error::domain(format!("z must be finite, got {z}")));
    }
    let meta = Meta::new("eq07", alpha, beta1, z)
        .beta2(beta2)
        .gamma(gamma)
        .q(q);
    if z < 0.0 {
        return Ok(meta.guard_excluded());
    }
    let at = |b: f64| -> Result<EvalResult> {
        eval_ml_normalized(&MLParams::four_parameter(alpha, b, gamma, q), z, cfg)
    };
    let l1 = try_guarded!(meta, at(beta1 + 1.0)?);
    let l2 = if beta1 == beta2 {
        l1
    } else {
        try_guarded!(meta, at(beta2 + 1.0)?)
    };
    let residual = beta1 * l2 - beta2 * l1;
    Ok(log_scale_record(meta, residual, tol))
}

/// Wilker-type inequality for the normalized four-parameter family:
/// [𝔼^{γ,q}_{α,β₂+1}]^{(β₁−β₂)/β₂} + 𝔼^{γ,q}_{α,β₂+1}/𝔼^{γ,q}_{α,β₁+1} ≥ 2
/// for z ≥ 0; negative arguments are outside the verified domain.
pub fn check_wilker_generalized(
    alpha: f64,
    beta1: f64,
    beta2: f64,
    gamma: f64,
    q: f64,
    z: f64,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    positive("alpha", alpha)?;
    if !(beta1 >= beta2 && beta2 > 0.0) {
        return Err(Error::domain(format!(
            "requires beta1 >= beta2 > 0, got beta1={beta1}, beta2={beta2}"
        )));
    }
    if !z.is_finite() {
        return Err(Error::domain(format!("z must be finite, got {z}")));
    }
    let meta = Meta::new("eq08", alpha, beta1, z)
        .beta2(beta2)
        .gamma(gamma)
        .q(q);
    if z < 0.0 {
        return Ok(meta.guard_excluded());
    }
    let at = |b: f64| -> Result<EvalResult> {
        eval_ml_normalized(&MLParams::four_parameter(alpha, b, gamma, q), z, cfg)
    };
    let l1 = try_guarded!(meta, at(beta1 + 1.0)?);
    let l2 = if beta1 == beta2 {
        l1
    } else {
        try_guarded!(meta, at(beta2 + 1.0)?)
    };
    let exponent = (beta1 - beta2) / beta2;
    let lhs = (exponent * l2).exp() + (l2 - l1).exp();
    Ok(log_scale_record(meta, lhs - 2.0, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    const E: f64 = std::f64::consts::E;

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn assert_near(got: f64, want: f64, tol_rel: f64) {
        assert!(
            (got - want).abs() <= tol_rel * want.abs().max(1.0),
            "got {got:e}, want {want:e}"
        );
    }

    #[test]
    fn turan_classical_closed_form() {
        // residual at α=β=z=1 is e² − 2e − 1.
        let r = check_turan_classical(1.0, 1.0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 0.95249244201255975651, 1e-11);
        assert_near(r.scale, (E - 1.0) * (E - 1.0), 1e-11);
        assert!(check_turan_classical(1.0, 1.0, -1.0, &cfg(), &tol()).is_err());
        // oracle-checked point
        let r = check_turan_classical(0.5, 0.5, 2.0, &cfg(), &tol()).unwrap();
        assert!(r.passed && r.residual >= 0.0);
    }

    #[test]
    fn exp_corollary_values() {
        let r = check_exp_corollary(1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 0.95249244201255975651, 1e-10);
        // small-z residual = z³/3 + O(z⁴)
        let r = check_exp_corollary(1e-3, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 3.3366685007224484722e-10, 1e-6);
        let r = check_exp_corollary(10.0, &cfg(), &tol()).unwrap();
        assert!(r.passed && r.residual > 0.0);
        // Verdicts survive linear overflow: z = 600 has e^{2z} ≈ e^{1200}.
        let r = check_exp_corollary(600.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert!(r.residual.is_infinite() && r.residual > 0.0);
    }

    #[test]
    fn tail_turan_closed_form() {
        let r = check_tail_turan_classical(1.0, 1.0, 0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 0.14085908577047738232, 1e-11);
        let r = check_tail_turan_classical(2.0, 0.5, 1, 3.0, &cfg(), &tol()).unwrap();
        assert!(r.passed && r.residual >= 0.0);
    }

    #[test]
    fn shifted_turan_closed_form() {
        // α=1, β=0, n=0 at z=1: residual is exactly 1.
        let r = check_shifted_turan(1.0, 0.0, 0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 1.0, 1e-11);
        let r = check_shifted_turan(0.7, 1.3, 2, 5.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn sharp_tail_constant_and_residual() {
        // C(1,1,0) = Γ(3)²/(Γ(2)Γ(4)) = 2/3.
        assert_near(sharp_tail_constant_ln(1.0, 1.0, 0).exp(), 2.0 / 3.0, 1e-13);
        let r = check_sharp_turan_tail(1.0, 1.0, 0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 0.031117175927679046277, 1e-10);
    }

    #[test]
    fn ratio_turan_closed_forms() {
        let r = check_ratio_turan_classical(1.0, 2.0, 3.0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 0.23421061355351452115, 1e-10);
        assert!(check_ratio_turan_classical(1.0, 3.0, 2.0, 1.0, &cfg(), &tol()).is_err());
        assert!(check_ratio_turan_classical(1.0, 0.5, 2.0, 1.0, &cfg(), &tol()).is_err());

        let r = check_ratio_turan_special(1.0, 1.0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 1.4684212271070290423, 1e-10);
        let r = check_ratio_turan_special(2.0, 0.3, 4.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn lazarevic_and_wilker_classical() {
        // z = 0: both sides equal, residual 0.
        let r = check_lazarevic_classical(1.0, 2.5, 1.5, 0.0, &cfg(), &tol()).unwrap();
        assert!(r.passed && r.residual == 0.0);
        let r = check_wilker_classical(1.0, 2.5, 1.5, 0.0, &cfg(), &tol()).unwrap();
        assert!(r.passed && r.residual == 0.0);

        // The 𝔼_{1,5/2}(1) ≤ 𝔼³_{1,3/2}(1) instance, from frozen references.
        let n15 = 2.0300784692787049755f64;
        let n25 = 1.5451177039180574633f64;
        let r = check_lazarevic_classical(1.0, 2.5, 1.5, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 2.0 * n15.ln() - (1.0 / 1.5) * n25.ln(), 1e-10);

        let r = check_wilker_classical(1.0, 2.5, 1.5, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, n15 * n15 + n15 / n25 - 2.0, 1e-10);

        // Negative arguments are outside the verified domain.
        let r = check_lazarevic_classical(2.0, 3.0, 2.0, -1.0, &cfg(), &tol()).unwrap();
        assert_eq!(r.status, CheckStatus::GuardExcluded);
        let r = check_wilker_classical(2.0, 3.0, 2.0, -1.0, &cfg(), &tol()).unwrap();
        assert_eq!(r.status, CheckStatus::GuardExcluded);
        // β₁ = β₂ degenerates to an exact zero residual.
        let r = check_lazarevic_classical(0.7, 2.0, 2.0, 3.0, &cfg(), &tol()).unwrap();
        assert!(r.passed && r.residual == 0.0);
    }

    #[test]
    fn lazarevic_fails_for_negative_arguments() {
        // Why z < 0 is excluded: at α = 1, β₁ = 3, β₂ = 2, z = −1 the
        // closed forms give 𝔼_{1,3}(−1) = 2e⁻¹ and 𝔼_{1,2}(−1) = 1 − e⁻¹,
        // and √(2e⁻¹) = 0.8578 > 1 − e⁻¹ = 0.6321 violates the claimed
        // direction outright (both values positive and well-resolved).
        let cfg = cfg();
        let l3 = eval_ml_normalized(&MLParams::classical(1.0, 3.0), -1.0, &cfg).unwrap();
        let l2 = eval_ml_normalized(&MLParams::classical(1.0, 2.0), -1.0, &cfg).unwrap();
        assert!(l3.sign > 0 && l2.sign > 0);
        let two_over_e = 2.0 * (-1.0f64).exp();
        let one_minus = 1.0 - (-1.0f64).exp();
        assert!((l3.value - two_over_e).abs() < 1e-12);
        assert!((l2.value - one_minus).abs() < 1e-12);
        let residual = l2.log_abs / 1.0 - l3.log_abs / 2.0;
        assert!(residual < -0.1, "expected a clear violation, got {residual}");
    }

    #[test]
    fn guard_exclusions_are_not_failures() {
        // E_{0.5,·}(-5) cannot be resolved in f64 (alternating cancellation).
        let r = check_lazarevic_classical(0.5, 2.5, 1.5, -5.0, &cfg(), &tol()).unwrap();
        assert_eq!(r.status, CheckStatus::GuardExcluded);
        assert!(!r.passed && r.residual.is_nan());

        // Divergent four-parameter series (q = 1+α, |z| > radius).
        let r = check_turan_generalized(1.0, 0.5, 2.5, 2.0, 0.7, &cfg(), &tol()).unwrap();
        assert_eq!(r.status, CheckStatus::GuardExcluded);
    }

    #[test]
    fn turan_generalized_reduces_and_holds() {
        let r = check_turan_generalized(1.0, 1.0, 1.0, 1.0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 0.95249244201255975651, 1e-10);
        // Inside the radius for q = 1 + α.
        let r = check_turan_generalized(1.0, 0.5, 2.5, 2.0, 0.2, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        let r = check_turan_generalized(1.5, 2.0, 2.0, 2.0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn bounded_turan_prabhakar() {
        // z = 0 residual in closed form; exactly 0 at β = 1.
        let r = check_bounded_turan_prabhakar(1.0, 1.0, 1.0, 0.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert!(r.residual.abs() < 1e-12);
        let r = check_bounded_turan_prabhakar(0.6, 0.7, 0.4, 0.9, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        let r = check_bounded_turan_prabhakar(1.0, 1.0, 1.0, 0.5, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert!(check_bounded_turan_prabhakar(1.0, 1.0, 1.5, 0.5, &cfg(), &tol()).is_err());
        assert!(check_bounded_turan_prabhakar(1.0, 0.3, 1.0, 0.5, &cfg(), &tol()).is_err());
        assert!(check_bounded_turan_prabhakar(1.0, 1.0, 1.0, 1.0, &cfg(), &tol()).is_err());
    }

    #[test]
    fn prabhakar_tail_checks() {
        // γ = 1 reduces to the classical values.
        let r = check_tail_turan_prabhakar(1.0, 1.0, 1.0, 0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 0.14085908577047738232, 1e-10);
        let r = check_tail_turan_prabhakar(1.0, 2.0, 2.5, 1, 2.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        // Below γ = 1 the inequality fails outright at some points, so the
        // whole region reports as outside the verified domain.
        let r = check_tail_turan_prabhakar(0.25, 1.0, 0.5, 0, 0.59, &cfg(), &tol()).unwrap();
        assert_eq!(r.status, CheckStatus::GuardExcluded);
        let r = check_sharp_turan_prabhakar(0.5, 1.5, 0.5, 0, 0.3, &cfg(), &tol()).unwrap();
        assert_eq!(r.status, CheckStatus::GuardExcluded);

        // At γ = 1 the sharp constant must agree with the classical one:
        // anything else would contradict H ≡ h_n under (1)_k = k!.
        assert_near(
            sharp_prabhakar_constant_ln(1.0, 1.0, 1.0, 0).exp(),
            2.0 / 3.0,
            1e-13,
        );
        assert_near(
            sharp_prabhakar_constant_ln(0.7, 1.9, 1.0, 2).exp(),
            sharp_tail_constant_ln(0.7, 1.9, 2).exp(),
            1e-13,
        );
        // mpmath: H(1e-8) at (1, 1, γ=2, n=0) = 16/27.
        assert_near(
            sharp_prabhakar_constant_ln(1.0, 1.0, 2.0, 0).exp(),
            16.0 / 27.0,
            1e-13,
        );
        let r = check_sharp_turan_prabhakar(1.0, 1.0, 1.0, 0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        // γ = 1 residual equals the classical sharp-tail residual.
        assert_near(r.residual, 0.031117175927679046277, 1e-10);
        let r = check_sharp_turan_prabhakar(1.0, 1.0, 2.0, 0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn lazarevic_and_wilker_generalized() {
        let r = check_lazarevic_generalized(1.0, 1.5, 0.5, 1.0, 1.0, 0.0, &cfg(), &tol()).unwrap();
        assert!(r.passed && r.residual == 0.0);
        // γ=1, q=1 instance at z=1 against frozen normalized values.
        let n15 = 2.0300784692787049755f64;
        let n25 = 1.5451177039180574633f64;
        let r = check_lazarevic_generalized(1.0, 1.5, 0.5, 1.0, 1.0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, 1.5 * n15.ln() - 0.5 * n25.ln(), 1e-10);

        let r = check_wilker_generalized(1.0, 1.5, 0.5, 1.0, 1.0, 1.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        assert_near(r.residual, n15 * n15 + n15 / n25 - 2.0, 1e-10);

        let r = check_wilker_generalized(0.5, 3.0, 1.5, 2.0, 0.5, 2.0, &cfg(), &tol()).unwrap();
        assert!(r.passed);
        let r = check_lazarevic_generalized(2.0, 2.0, 1.0, 3.0, 2.0, -1.0, &cfg(), &tol()).unwrap();
        assert!(r.status == CheckStatus::Passed || r.status == CheckStatus::GuardExcluded);
    }

    // z→0⁺ orientation: the analytically forced limits, reached through
    // two-point Richardson extrapolation (kills the O(z) correction).
    fn richardson<F: Fn(f64) -> f64>(f: F) -> f64 {
        let z1 = 1e-8;
        2.0 * f(z1) - f(2.0 * z1)
    }

    fn g(x: f64) -> f64 {
        ln_gamma_raw(x).exp()
    }

    #[test]
    fn small_z_limits_match_k0_terms() {
        let cfg = cfg();
        let tol = tol();

        // eq6 → 0
        let lim = richardson(|z| check_turan_classical(1.3, 0.8, z, &cfg, &tol).unwrap().residual);
        assert!(lim.abs() <= 1e-10, "{lim:e}");

        // eq66 → 0
        let lim = richardson(|z| check_exp_corollary(z, &cfg, &tol).unwrap().residual);
        assert!(lim.abs() <= 1e-10, "{lim:e}");

        // eq8, scaled by z^{2n+4} → c_{n+2}² − c_{n+1}c_{n+3}, c_m = 1/Γ(αm+β)
        let (alpha, beta, n) = (1.2, 0.7, 1u32);
        let c = |m: u32| 1.0 / g(alpha * f64::from(m) + beta);
        let want = c(n + 2) * c(n + 2) - c(n + 1) * c(n + 3);
        let lim = richardson(|z| {
            check_tail_turan_classical(alpha, beta, n, z, &cfg, &tol)
                .unwrap()
                .residual
                / z.powi(2 * n as i32 + 4)
        });
        assert_near(lim, want, 1e-10);
        assert!(want >= 0.0);

        // eq09 → 1/Γ(β+(n+2)α)² − 1/(Γ(β+(n+1)α)Γ(β+(n+3)α))
        let (alpha, beta, n) = (0.9, 0.4, 0u32);
        let ord = |s: u32| beta + f64::from(n + s) * alpha;
        let want = 1.0 / (g(ord(2)) * g(ord(2))) - 1.0 / (g(ord(1)) * g(ord(3)));
        let lim =
            richardson(|z| check_shifted_turan(alpha, beta, n, z, &cfg, &tol).unwrap().residual);
        assert_near(lim, want, 1e-10);

        // eq999 scaled → 0 (sharpness)
        let lim = richardson(|z| {
            check_sharp_turan_tail(1.1, 1.4, 0, z, &cfg, &tol).unwrap().residual / z.powi(4)
        });
        assert!(lim.abs() <= 1e-10, "{lim:e}");

        // eq7777 → (β₂−β₁)/(Γβ₁Γβ₂) + 1/(Γβ₂ Γ(β₁−1)) − 1/(Γβ₁ Γ(β₂−1)),
        // which collapses to zero identically via Γ(β) = (β−1)Γ(β−1).
        let (alpha, b1, b2) = (1.5, 1.8, 3.2);
        let want = (b2 - b1) / (g(b1) * g(b2)) + 1.0 / (g(b2) * g(b1 - 1.0))
            - 1.0 / (g(b1) * g(b2 - 1.0));
        assert!(want.abs() < 1e-10, "k=0 combination is identically zero, got {want:e}");
        let lim = richardson(|z| {
            check_ratio_turan_classical(alpha, b1, b2, z, &cfg, &tol).unwrap().residual
        });
        assert!(lim.abs() <= 1e-10, "{lim:e}");

        // eq8888 → 1/(ΓβΓ(β+2)) − 1/Γ(β+1)² + (β+1)/(Γ(β+1)Γ(β+2))
        let (alpha, beta) = (0.8, 1.1);
        let want = 1.0 / (g(beta) * g(beta + 2.0)) - 1.0 / (g(beta + 1.0) * g(beta + 1.0))
            + (beta + 1.0) / (g(beta + 1.0) * g(beta + 2.0));
        let lim =
            richardson(|z| check_ratio_turan_special(alpha, beta, z, &cfg, &tol).unwrap().residual);
        assert_near(lim, want, 1e-10);
        assert!(want > 0.0);

        // eq666 → 0
        let lim = richardson(|z| {
            check_turan_generalized(0.7, 1.2, 2.5, 0.5, z, &cfg, &tol).unwrap().residual
        });
        assert!(lim.abs() <= 1e-10, "{lim:e}");

        // eq7777g → the same identically-zero k=0 combination
        let (alpha, b1, b2) = (1.5, 1.8, 3.2);
        let lim = richardson(|z| {
            check_ratio_turan_generalized(alpha, b1, b2, 1.7, 0.5, z, &cfg, &tol)
                .unwrap()
                .residual
        });
        assert!(lim.abs() <= 1e-10, "{lim:e}");

        // kk1 scaled → d_{n+2}² − d_{n+1}d_{n+3}, d_m = (γ)_m/(m!Γ(αm+β))
        let (alpha, beta, gm, n) = (1.3, 0.9, 1.6, 0u32);
        let d = |m: u32| {
            let mf = f64::from(m);
            (g(gm + mf) / g(gm)) / (g(mf + 1.0) * g(alpha * mf + beta))
        };
        let want = d(n + 2) * d(n + 2) - d(n + 1) * d(n + 3);
        let lim = richardson(|z| {
            check_tail_turan_prabhakar(alpha, beta, gm, n, z, &cfg, &tol)
                .unwrap()
                .residual
                / z.powi(2 * n as i32 + 4)
        });
        assert_near(lim, want, 1e-10);
        assert!(want >= 0.0);

        // ss scaled → 0 (sharpness)
        let lim = richardson(|z| {
            check_sharp_turan_prabhakar(1.0, 1.0, 2.0, 0, z, &cfg, &tol).unwrap().residual
                / z.powi(4)
        });
        assert!(lim.abs() <= 1e-10, "{lim:e}");

        // eq001 at z = 0 exactly
        let (beta, gm) = (0.8, 0.5);
        let r = check_bounded_turan_prabhakar(1.7, beta, gm, 0.0, &cfg, &tol).unwrap();
        let want = 1.0 / (g(beta) * g(beta + 2.0)) - 1.0 / (g(beta + 1.0) * g(beta + 1.0))
            + 1.0 / (g(beta + 1.0) * g(beta + 2.0));
        assert_near(r.residual, want, 1e-10);
    }
}
