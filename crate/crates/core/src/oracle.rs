//! High-precision reference evaluation on MPFR floats.
//!
//! This is the independent cross-check route: straightforward truncated
//! summation with MPFR's own log-gamma, sharing no code with the f64
//! engine. It serves two roles: the test suites compare the fast path
//! against it, and the counterexample searches re-evaluate candidate
//! violations here before reporting them.
//!
//! Precision is adaptive: the sum is retried at higher precision until the
//! accumulated cancellation (max term magnitude over result magnitude)
//! leaves the requested number of significant digits intact.

use rug::ops::CompleteRound;
use rug::Float;

use crate::series::{series_diverges_at, Family, MLParams};

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Guaranteed significant decimal digits of the result.
    pub digits: u32,
    /// Term budget per evaluation.
    pub max_terms: u32,
    /// Precision ceiling in bits.
    pub max_prec_bits: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            digits: 50,
            max_terms: 40_000,
            max_prec_bits: 16_384,
        }
    }
}

/// Outcome of a reference evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OracleValue {
    /// Value representable in f64 (correctly rounded from the high-precision
    /// result).
    Finite { value: f64, log_abs: f64, sign: i8 },
    /// Magnitude beyond f64 range; only the log form is reported.
    OverflowsF64 { log_abs: f64, sign: i8 },
    /// The series diverges at this point (q > 1 + α, or q = 1 + α with |z|
    /// at or beyond the convergence radius α^α/q^q).
    Divergent,
    /// Convergent in principle but not within the term or precision budget.
    Infeasible,
}

impl OracleValue {
    pub fn is_value(&self) -> bool {
        matches!(self, OracleValue::Finite { .. } | OracleValue::OverflowsF64 { .. })
    }

    pub fn log_abs(&self) -> Option<f64> {
        match self {
            OracleValue::Finite { log_abs, .. } | OracleValue::OverflowsF64 { log_abs, .. } => {
                Some(*log_abs)
            }
            _ => None,
        }
    }
}

fn ln_gamma(prec: u32, x: &Float) -> Float {
    Float::with_val(prec, x).ln_gamma()
}

fn sum_at_precision(
    p: &MLParams,
    z: f64,
    start_k: u32,
    normalize: bool,
    prec: u32,
    cfg: &OracleConfig,
) -> Option<(Float, f64)> {
    let alpha = Float::with_val(prec, p.alpha);
    let beta = Float::with_val(prec, p.beta);
    let gamma = Float::with_val(prec, p.gamma);
    let ln_abs_z = Float::with_val(prec, z.abs()).ln();
    let ln_gamma_gamma = ln_gamma(prec, &gamma);
    let norm = if normalize {
        ln_gamma(prec, &beta)
    } else {
        Float::with_val(prec, 0)
    };

    let stop_digits = i64::from(cfg.digits) + 12;
    let mut sum = Float::with_val(prec, 0);
    let mut max_log_term = f64::NEG_INFINITY;
    let mut small_streak = 0u32;
    let mut prev_log: Option<f64> = None;

    for k in start_k..start_k.saturating_add(cfg.max_terms) {
        let kf = Float::with_val(prec, k);
        let den_arg = (&alpha * &kf).complete(prec) + &beta;
        let mut log_term = -ln_gamma(prec, &den_arg);
        log_term += (&kf * &ln_abs_z).complete(prec);
        log_term += &norm;
        if p.family != Family::Classical {
            let poch_arg = Float::with_val(prec, p.q) * &kf + &gamma;
            log_term += ln_gamma(prec, &poch_arg) - &ln_gamma_gamma;
            log_term -= ln_gamma(prec, &(kf + 1u32));
        }
        let lt = log_term.to_f64();
        if lt > max_log_term {
            max_log_term = lt;
        }

        let mut term = log_term.exp();
        if z < 0.0 && k % 2 == 1 {
            term = -term;
        }
        sum += &term;

        // Stop once three consecutive terms are negligible and decaying.
        let sum_log = if sum.is_zero() {
            f64::NEG_INFINITY
        } else {
            sum.clone().abs().ln().to_f64()
        };
        let negligible = lt < sum_log - (stop_digits as f64) * std::f64::consts::LN_10;
        let decaying = prev_log.map(|pl| lt < pl).unwrap_or(false);
        if negligible && decaying {
            small_streak += 1;
            if small_streak >= 3 {
                return Some((sum, max_log_term));
            }
        } else {
            small_streak = 0;
        }
        prev_log = Some(lt);
    }
    None
}

fn eval_series(p: &MLParams, z: f64, start_k: u32, normalize: bool, cfg: &OracleConfig) -> OracleValue {
    if p.validate().is_err() {
        return OracleValue::Infeasible;
    }
    if series_diverges_at(p, z) {
        return OracleValue::Divergent;
    }
    if z == 0.0 {
        let prec = 256;
        let lg = ln_gamma(prec, &Float::with_val(prec, p.beta));
        let log_abs = if normalize { 0.0 } else { -lg.to_f64() };
        let value = if normalize {
            1.0
        } else {
            (-lg).exp().to_f64()
        };
        return OracleValue::Finite {
            value,
            log_abs,
            sign: 1,
        };
    }

    let mut prec = 256u32;
    loop {
        match sum_at_precision(p, z, start_k, normalize, prec, cfg) {
            None => return OracleValue::Infeasible,
            Some((sum, max_log_term)) => {
                if sum.is_zero() {
                    // Total cancellation at this precision: retry higher.
                    if prec >= cfg.max_prec_bits {
                        return OracleValue::Infeasible;
                    }
                    prec = (prec * 4).min(cfg.max_prec_bits);
                    continue;
                }
                let log_abs = sum.clone().abs().ln().to_f64();
                // Bits consumed by cancellation plus bits needed for the
                // requested digits.
                let needed = ((max_log_term - log_abs).max(0.0) * std::f64::consts::LOG2_E
                    + f64::from(cfg.digits + 15) * 3.33)
                    .ceil() as u32;
                if needed > prec {
                    if prec >= cfg.max_prec_bits {
                        return OracleValue::Infeasible;
                    }
                    prec = needed.max(prec * 4).min(cfg.max_prec_bits);
                    continue;
                }
                let sign: i8 = if sum.is_sign_negative() { -1 } else { 1 };
                let value = sum.to_f64();
                if value.is_infinite() || value == 0.0 {
                    return OracleValue::OverflowsF64 { log_abs, sign };
                }
                return OracleValue::Finite {
                    value,
                    log_abs,
                    sign,
                };
            }
        }
    }
}

/// Reference evaluation of E(z).
pub fn eval_ml_oracle(p: &MLParams, z: f64, cfg: &OracleConfig) -> OracleValue {
    eval_series(p, z, 0, false, cfg)
}

/// Reference evaluation of Γ(β)·E(z).
pub fn eval_ml_normalized_oracle(p: &MLParams, z: f64, cfg: &OracleConfig) -> OracleValue {
    eval_series(p, z, 0, true, cfg)
}

/// Reference evaluation of the tail section Σ_{k≥n+1}, any family.
pub fn eval_tail_oracle(p: &MLParams, n: u32, z: f64, cfg: &OracleConfig) -> OracleValue {
    if z <= 0.0 {
        return OracleValue::Infeasible;
    }
    eval_series(p, z, n + 1, false, cfg)
}
