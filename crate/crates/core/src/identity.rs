//! Exact functional identities: parameter-shift recurrences and the
//! differentiation formula, each exposed with its residual so the test
//! suites can cross-check the series engine against independent algebra.

use crate::error::{Error, Result};
use crate::gamma::ln_gamma_raw;
use crate::series::{eval_ml, EvalResult, Family, MLParams, SeriesConfig};

/// How a derivative value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeMethod {
    /// The parameter-shift formula dE/dz = [E_{α,β−1} − (β−1) E_{α,β}]/(αz).
    ShiftFormula,
    /// Central finite difference with step h = 1e-5 · max(1, |z|).
    CentralDifference,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeResult {
    pub value: f64,
    pub method: DerivativeMethod,
}

/// Both sides of the shift recurrence
/// zⁿ E_{α,β+nα}(z) = E_{α,β}(z) − Σ_{k=0}^{n−1} z^k/Γ(β+kα).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecurrenceShift {
    /// zⁿ E_{α,β+nα}(z)
    pub lhs: f64,
    /// E_{α,β}(z) − Σ_{k<n} z^k/Γ(β+kα)
    pub rhs: f64,
    pub residual: f64,
}

fn require_classical(p: &MLParams) -> Result<()> {
    if p.family != Family::Classical {
        return Err(Error::domain(
            "this identity is defined for the classical family".to_string(),
        ));
    }
    Ok(())
}

fn require_converged(r: &EvalResult, what: &str) -> Result<f64> {
    if !r.converged || !r.value.is_finite() {
        return Err(Error::domain(format!(
            "{what} did not converge within the truncation budget"
        )));
    }
    Ok(r.value)
}

/// Left side of the shift recurrence together with its residual against the
/// right side.
pub fn recurrence_shift(p: &MLParams, n: u32, z: f64, cfg: &SeriesConfig) -> Result<RecurrenceShift> {
    require_classical(p)?;
    if n < 1 {
        return Err(Error::domain("recurrence shift requires n >= 1".to_string()));
    }
    if !(z > 0.0) {
        return Err(Error::domain(format!("recurrence shift requires z > 0, got {z}")));
    }
    p.validate()?;
    let shifted = p.with_beta(p.beta + f64::from(n) * p.alpha);
    let lhs = z.powi(n as i32) * require_converged(&eval_ml(&shifted, z, cfg)?, "shifted evaluation")?;

    let full = require_converged(&eval_ml(p, z, cfg)?, "base evaluation")?;
    let mut head = 0.0f64;
    let mut comp = 0.0f64;
    for k in 0..n {
        let t = z.powi(k as i32) * (-ln_gamma_raw(p.beta + f64::from(k) * p.alpha)).exp();
        let y = t - comp;
        let s = head + y;
        comp = (s - head) - y;
        head = s;
    }
    let rhs = full - head;
    Ok(RecurrenceShift {
        lhs,
        rhs,
        residual: lhs - rhs,
    })
}

/// Step-down recurrence value z·E_{α,α+β}(z) + 1/Γ(β); equals E_{α,β}(z).
pub fn step_down_recurrence(p: &MLParams, z: f64, cfg: &SeriesConfig) -> Result<f64> {
    require_classical(p)?;
    p.validate()?;
    if z == 0.0 {
        return Err(Error::domain("step-down recurrence requires z != 0".to_string()));
    }
    let up = p.with_beta(p.alpha + p.beta);
    let v = require_converged(&eval_ml(&up, z, cfg)?, "shifted evaluation")?;
    Ok(z * v + (-ln_gamma_raw(p.beta)).exp())
}

fn derivative_by_shift(p: &MLParams, z: f64, cfg: &SeriesConfig) -> Result<f64> {
    if p.beta <= 1.0 {
        return Err(Error::domain(format!(
            "the shift formula needs beta > 1 so beta-1 stays positive, got beta = {}",
            p.beta
        )));
    }
    let lower = require_converged(&eval_ml(&p.with_beta(p.beta - 1.0), z, cfg)?, "E at beta-1")?;
    let here = require_converged(&eval_ml(p, z, cfg)?, "E at beta")?;
    Ok((lower - (p.beta - 1.0) * here) / (p.alpha * z))
}

fn derivative_by_difference(p: &MLParams, z: f64, cfg: &SeriesConfig) -> Result<f64> {
    let h = 1e-5 * z.abs().max(1.0);
    let hi = require_converged(&eval_ml(p, z + h, cfg)?, "E at z+h")?;
    let lo = require_converged(&eval_ml(p, z - h, cfg)?, "E at z-h")?;
    Ok((hi - lo) / (2.0 * h))
}

/// d/dz E_{α,β}(z) for the classical family.
pub fn derivative_classical(
    p: &MLParams,
    z: f64,
    method: DerivativeMethod,
    cfg: &SeriesConfig,
) -> Result<DerivativeResult> {
    require_classical(p)?;
    p.validate()?;
    if !(z > 0.0) {
        return Err(Error::domain(format!("derivative requires z > 0, got {z}")));
    }
    let value = match method {
        DerivativeMethod::ShiftFormula => derivative_by_shift(p, z, cfg)?,
        DerivativeMethod::CentralDifference => derivative_by_difference(p, z, cfg)?,
    };
    Ok(DerivativeResult { value, method })
}

/// d/dz E^{γ,q}_{α,β}(z) for the four-parameter family; the same shift
/// formula holds with the generalized evaluator.
pub fn derivative_generalized(
    p: &MLParams,
    z: f64,
    method: DerivativeMethod,
    cfg: &SeriesConfig,
) -> Result<DerivativeResult> {
    if p.family == Family::Classical {
        return derivative_classical(p, z, method, cfg);
    }
    p.validate()?;
    if !(z > 0.0) {
        return Err(Error::domain(format!("derivative requires z > 0, got {z}")));
    }
    let value = match method {
        DerivativeMethod::ShiftFormula => derivative_by_shift(p, z, cfg)?,
        DerivativeMethod::CentralDifference => derivative_by_difference(p, z, cfg)?,
    };
    Ok(DerivativeResult { value, method })
}

/// Residual of the rearranged differentiation identity
/// E_{α,β}(z) = β·E_{α,β+1}(z) + αz·(d/dz E_{α,β+1})(z),
/// with the derivative taken by central difference so the two routes stay
/// independent.
pub fn composition_identity_residual(p: &MLParams, z: f64, cfg: &SeriesConfig) -> Result<f64> {
    p.validate()?;
    if !(z > 0.0) {
        return Err(Error::domain(format!("identity requires z > 0, got {z}")));
    }
    let up = p.with_beta(p.beta + 1.0);
    let e_here = require_converged(&eval_ml(p, z, cfg)?, "E at beta")?;
    let e_up = require_converged(&eval_ml(&up, z, cfg)?, "E at beta+1")?;
    let d_up = derivative_by_difference(&up, z, cfg)?;
    Ok(p.beta * e_up + p.alpha * z * d_up - e_here)
}
