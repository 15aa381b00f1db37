//! Property-based invariants for the series engine and the check suite.

use proptest::prelude::*;

use mllab_core::checks::{
    check_lazarevic_classical, check_wilker_classical, CheckStatus, Tolerance,
};
use mllab_core::gamma::{pochhammer_ln, GAMMA_MIN_ABSCISSA};
use mllab_core::oracle::{eval_ml_oracle, OracleConfig, OracleValue};
use mllab_core::series::{
    eval_ml, eval_ml_normalized, eval_tail, partial_sum, MLParams, SeriesConfig,
};

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

// Parameter strategies kept inside the budget-feasible region: α below
// ~0.35 needs more than the default term budget once z approaches 10.
fn alpha() -> impl Strategy<Value = f64> {
    0.35f64..4.0
}

fn beta() -> impl Strategy<Value = f64> {
    0.2f64..5.0
}

fn gamma() -> impl Strategy<Value = f64> {
    0.2f64..4.0
}

fn z_pos() -> impl Strategy<Value = f64> {
    // log-uniform over (1e-6, 10]
    (-6.0f64..1.0).prop_map(|e| 10f64.powf(e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tail_partition_identity(a in alpha(), b in beta(), g in gamma(), z in z_pos(), n in 0u32..4) {
        let cfg = cfg();
        for p in [MLParams::classical(a, b), MLParams::prabhakar(a, b, g)] {
            let full = eval_ml(&p, z, &cfg).unwrap();
            prop_assume!(full.converged && full.value.is_finite());
            let tail = eval_tail(&p, n, z, &cfg).unwrap();
            let head = partial_sum(&p, n, z).unwrap();
            let residual = (tail.value + head - full.value).abs();
            let budget = 8.0 * cfg.abs_tol.max(cfg.rel_tol * full.value.abs())
                + full.round_error_est
                + tail.round_error_est
                + 4e-15 * full.value.abs();
            prop_assert!(
                residual <= budget,
                "partition residual {residual:e} over budget {budget:e} at {p:?}, n={n}, z={z}"
            );
        }
    }

    #[test]
    fn family_reduction(a in alpha(), b in beta(), g in gamma(), z in z_pos()) {
        let cfg = cfg();
        let classical = eval_ml(&MLParams::classical(a, b), z, &cfg).unwrap();
        let four_11 = eval_ml(&MLParams::four_parameter(a, b, 1.0, 1.0), z, &cfg).unwrap();
        if classical.converged && four_11.converged && classical.value.is_finite() {
            prop_assert!(
                (four_11.value - classical.value).abs() <= 4.0 * cfg.rel_tol * classical.value.abs()
            );
        }
        let prab = eval_ml(&MLParams::prabhakar(a, b, g), z, &cfg).unwrap();
        let four_q1 = eval_ml(&MLParams::four_parameter(a, b, g, 1.0), z, &cfg).unwrap();
        if prab.converged && four_q1.converged && prab.value.is_finite() {
            prop_assert!(
                (four_q1.value - prab.value).abs() <= 4.0 * cfg.rel_tol * prab.value.abs()
            );
        }
    }

    #[test]
    fn positivity(a in alpha(), b in beta(), g in gamma(), z in z_pos()) {
        let cfg = cfg();
        for p in [MLParams::classical(a, b), MLParams::prabhakar(a, b, g)] {
            let r = eval_ml(&p, z, &cfg).unwrap();
            prop_assert!(r.sign == 1 && r.log_abs.is_finite());
        }
    }

    #[test]
    fn log_convexity_in_beta(a in alpha(), b in beta(), h in 0.05f64..1.0, z in z_pos()) {
        let cfg = cfg();
        let at = |bb: f64| {
            eval_ml_normalized(&MLParams::classical(a, bb), z, &cfg).map(|r| r.log_abs)
        };
        let l0 = at(b).unwrap();
        let l1 = at(b + h).unwrap();
        let l2 = at(b + 2.0 * h).unwrap();
        prop_assert!(l0 + l2 - 2.0 * l1 >= -1e-10);
    }

    #[test]
    fn lazarevic_implies_wilker(
        a in alpha(),
        b2 in 1.05f64..4.0,
        extra in 0.0f64..3.0,
        z in z_pos(),
    ) {
        // The arithmetic-geometric mean step: wherever the Lazarević check
        // passes with the guard satisfied, the Wilker check passes too.
        let cfg = cfg();
        let tol = Tolerance::default();
        let b1 = b2 + extra;
        let laz = check_lazarevic_classical(a, b1, b2, z, &cfg, &tol).unwrap();
        if laz.status == CheckStatus::Passed {
            let wil = check_wilker_classical(a, b1, b2, z, &cfg, &tol).unwrap();
            prop_assert_eq!(wil.status, CheckStatus::Passed);
        }
    }

    #[test]
    fn pochhammer_recurrence(g in 0.1f64..20.0, t in 0.0f64..60.0) {
        // (γ)_{t+1} = (γ + t) · (γ)_t, in log form.
        let lhs = pochhammer_ln(g, t + 1.0).unwrap();
        let rhs = pochhammer_ln(g, t).unwrap() + (g + t).ln();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn bounded_turan_domain_guard(b in 0.5f64..5.0, g in 0.05f64..1.0, z in 0.0f64..0.999) {
        // Every admissible eq001 point verdicts positive.
        prop_assume!(b > GAMMA_MIN_ABSCISSA - 1.0);
        let r = mllab_core::checks::check_bounded_turan_prabhakar(
            1.3, b, g, z, &cfg(), &Tolerance::default(),
        )
        .unwrap();
        prop_assert!(r.passed, "{r:?}");
    }
}

proptest! {
    // Oracle calls are comparatively expensive; keep the case count low.
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn oracle_agreement(a in alpha(), b in beta(), g in gamma(), z in z_pos()) {
        let cfg = cfg();
        let ocfg = OracleConfig::default();
        for p in [MLParams::classical(a, b), MLParams::prabhakar(a, b, g)] {
            let fast = eval_ml(&p, z, &cfg).unwrap();
            prop_assume!(fast.converged);
            match eval_ml_oracle(&p, z, &ocfg) {
                OracleValue::Finite { value, .. } => {
                    prop_assert!(
                        (fast.value - value).abs() <= 1e-10 * value.abs(),
                        "{p:?} z={z}: fast {} oracle {value}",
                        fast.value
                    );
                }
                OracleValue::OverflowsF64 { log_abs, .. } => {
                    prop_assert!((fast.log_abs - log_abs).abs() <= 1e-10 * log_abs.abs());
                }
                other => prop_assert!(false, "oracle failed: {other:?}"),
            }
        }
    }
}
