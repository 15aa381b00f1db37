//! Grid execution: expand each check or probe over its applicable axes,
//! evaluate the points (in parallel when available) and aggregate
//! deterministic, sorted results.

use crate::checks::{self, CheckRecord, CheckStatus, Tolerance};
use crate::error::{Error, Result};
use crate::exec;
use crate::gamma::GAMMA_MIN_ABSCISSA;
use crate::grid::GridSpec;
use crate::probe::{self, MonotonicityReport};
use crate::series::{Family, SeriesConfig};

/// Identifier of one check operation; the string form doubles as the
/// equation anchor in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    TuranClassical,
    ExpCorollary,
    TailTuranClassical,
    ShiftedTuran,
    SharpTuranTail,
    RatioTuranClassical,
    RatioTuranSpecial,
    LazarevicClassical,
    WilkerClassical,
    TuranGeneralized,
    BoundedTuranPrabhakar,
    RatioTuranGeneralized,
    TailTuranPrabhakar,
    SharpTuranPrabhakar,
    LazarevicGeneralized,
    WilkerGeneralized,
}

impl CheckId {
    pub fn all() -> &'static [CheckId] {
        use CheckId::*;
        &[
            TuranClassical,
            ExpCorollary,
            TailTuranClassical,
            ShiftedTuran,
            SharpTuranTail,
            RatioTuranClassical,
            RatioTuranSpecial,
            LazarevicClassical,
            WilkerClassical,
            TuranGeneralized,
            BoundedTuranPrabhakar,
            RatioTuranGeneralized,
            TailTuranPrabhakar,
            SharpTuranPrabhakar,
            LazarevicGeneralized,
            WilkerGeneralized,
        ]
    }

    pub fn id(&self) -> &'static str {
        use CheckId::*;
        match self {
            TuranClassical => "eq6",
            ExpCorollary => "eq66",
            TailTuranClassical => "eq8",
            ShiftedTuran => "eq09",
            SharpTuranTail => "eq999",
            RatioTuranClassical => "eq7777",
            RatioTuranSpecial => "eq8888",
            LazarevicClassical => "a1",
            WilkerClassical => "a4",
            TuranGeneralized => "eq666",
            BoundedTuranPrabhakar => "eq001",
            RatioTuranGeneralized => "eq7777g",
            TailTuranPrabhakar => "kk1",
            SharpTuranPrabhakar => "ss",
            LazarevicGeneralized => "eq07",
            WilkerGeneralized => "eq08",
        }
    }

    pub fn describe(&self) -> &'static str {
        use CheckId::*;
        match self {
            TuranClassical => "Turan product inequality, normalized classical family",
            ExpCorollary => "exponential corollary (e^z-1)^2 <= 2e^z(e^z-1-z)",
            TailTuranClassical => "tail-section Turan inequality, classical family",
            ShiftedTuran => "Turan inequality along shifted orders beta+k*alpha",
            SharpTuranTail => "sharp-constant tail Turan inequality, classical family",
            RatioTuranClassical => "ratio-monotonicity Turan inequality, classical family",
            RatioTuranSpecial => "ratio Turan inequality at beta1=beta+1, beta2=beta+2",
            LazarevicClassical => "Lazarevic-type power comparison, classical family",
            WilkerClassical => "Wilker-type lower bound, classical family",
            TuranGeneralized => "Turan product inequality, four-parameter family",
            BoundedTuranPrabhakar => "bounded Turan inequality on [0,1), Prabhakar family",
            RatioTuranGeneralized => "ratio-monotonicity Turan inequality, four-parameter family",
            TailTuranPrabhakar => "tail-section Turan inequality, Prabhakar family",
            SharpTuranPrabhakar => "sharp-constant tail Turan inequality, Prabhakar family",
            LazarevicGeneralized => "Lazarevic-type power comparison, four-parameter family",
            WilkerGeneralized => "Wilker-type lower bound, four-parameter family",
        }
    }

    pub fn parse(s: &str) -> Result<CheckId> {
        CheckId::all()
            .iter()
            .copied()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::config(format!("unknown check id '{s}' (see `list`)")))
    }
}

/// One expanded grid point for a check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckPoint {
    pub alpha: f64,
    pub beta: f64,
    pub beta2: Option<f64>,
    pub gamma: Option<f64>,
    pub q: Option<f64>,
    pub n: Option<u32>,
    pub z: f64,
}

impl CheckPoint {
    fn new(alpha: f64, beta: f64, z: f64) -> Self {
        CheckPoint {
            alpha,
            beta,
            beta2: None,
            gamma: None,
            q: None,
            n: None,
            z,
        }
    }
}

fn pairs_strict_gt(betas: &[f64], floor: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for &b1 in betas {
        if b1 <= floor {
            continue;
        }
        for &b2 in betas {
            if b2 > b1 {
                out.push((b1, b2));
            }
        }
    }
    out
}

fn pairs_geq(betas: &[f64], floor: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for &b1 in betas {
        if b1 <= floor {
            continue;
        }
        for &b2 in betas {
            if b2 > floor && b1 >= b2 {
                out.push((b1, b2));
            }
        }
    }
    out
}

fn z_real(grid: &GridSpec) -> Vec<f64> {
    let mut z: Vec<f64> = grid.z_neg.clone();
    z.extend(grid.z_pos.points.iter().copied());
    z
}

/// Expand the applicable parameter axes for one check.
pub fn points_for(id: CheckId, grid: &GridSpec) -> Vec<CheckPoint> {
    let mut pts = Vec::new();
    let alphas = &grid.alpha.points;
    let betas = &grid.beta.points;
    let gammas = &grid.gamma.points;
    let zs = &grid.z_pos.points;
    match id {
        CheckId::TuranClassical | CheckId::RatioTuranSpecial => {
            for &a in alphas {
                for &b in betas {
                    for &z in zs {
                        pts.push(CheckPoint::new(a, b, z));
                    }
                }
            }
        }
        CheckId::ExpCorollary => {
            for &z in zs {
                pts.push(CheckPoint::new(1.0, 1.0, z));
            }
        }
        CheckId::TailTuranClassical | CheckId::ShiftedTuran | CheckId::SharpTuranTail => {
            for &a in alphas {
                for &b in betas {
                    for &n in &grid.n_set {
                        for &z in zs {
                            pts.push(CheckPoint {
                                n: Some(n),
                                ..CheckPoint::new(a, b, z)
                            });
                        }
                    }
                }
            }
        }
        CheckId::RatioTuranClassical => {
            for &a in alphas {
                for (b1, b2) in pairs_strict_gt(betas, 1.0) {
                    for &z in zs {
                        pts.push(CheckPoint {
                            beta2: Some(b2),
                            ..CheckPoint::new(a, b1, z)
                        });
                    }
                }
            }
        }
        CheckId::LazarevicClassical | CheckId::WilkerClassical => {
            for &a in alphas {
                for (b1, b2) in pairs_geq(betas, 1.0) {
                    for z in z_real(grid) {
                        pts.push(CheckPoint {
                            beta2: Some(b2),
                            ..CheckPoint::new(a, b1, z)
                        });
                    }
                }
            }
        }
        CheckId::TuranGeneralized => {
            for &a in alphas {
                for &b in betas {
                    for &g in gammas {
                        for &q in &grid.q_set {
                            for &z in zs {
                                pts.push(CheckPoint {
                                    gamma: Some(g),
                                    q: Some(q),
                                    ..CheckPoint::new(a, b, z)
                                });
                            }
                        }
                    }
                }
            }
        }
        CheckId::BoundedTuranPrabhakar => {
            for &a in alphas {
                for &b in betas {
                    if b <= GAMMA_MIN_ABSCISSA - 1.0 {
                        continue;
                    }
                    for &g in gammas {
                        if g > 1.0 {
                            continue;
                        }
                        for &z in zs {
                            if z >= 1.0 {
                                continue;
                            }
                            pts.push(CheckPoint {
                                gamma: Some(g),
                                ..CheckPoint::new(a, b, z)
                            });
                        }
                    }
                }
            }
        }
        CheckId::RatioTuranGeneralized => {
            for &a in alphas {
                for (b1, b2) in pairs_strict_gt(betas, 1.0) {
                    for &g in gammas {
                        for &q in &grid.q_set {
                            for &z in zs {
                                pts.push(CheckPoint {
                                    beta2: Some(b2),
                                    gamma: Some(g),
                                    q: Some(q),
                                    ..CheckPoint::new(a, b1, z)
                                });
                            }
                        }
                    }
                }
            }
        }
        CheckId::TailTuranPrabhakar | CheckId::SharpTuranPrabhakar => {
            for &a in alphas {
                for &b in betas {
                    for &g in gammas {
                        for &n in &grid.n_set {
                            for &z in zs {
                                pts.push(CheckPoint {
                                    gamma: Some(g),
                                    n: Some(n),
                                    ..CheckPoint::new(a, b, z)
                                });
                            }
                        }
                    }
                }
            }
        }
        CheckId::LazarevicGeneralized | CheckId::WilkerGeneralized => {
            for &a in alphas {
                for (b1, b2) in pairs_geq(betas, 0.0) {
                    for &g in gammas {
                        for &q in &grid.q_set {
                            for z in z_real(grid) {
                                pts.push(CheckPoint {
                                    beta2: Some(b2),
                                    gamma: Some(g),
                                    q: Some(q),
                                    ..CheckPoint::new(a, b1, z)
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    pts
}

/// Run one check at one point. Precondition violations surface as errors
/// only when the point was constructed by hand; grid expansion never emits
/// them.
pub fn run_point(
    id: CheckId,
    pt: &CheckPoint,
    cfg: &SeriesConfig,
    tol: &Tolerance,
) -> Result<CheckRecord> {
    let need = |v: Option<f64>| v.ok_or_else(|| Error::config("missing parameter".to_string()));
    let need_n = |v: Option<u32>| v.ok_or_else(|| Error::config("missing n".to_string()));
    match id {
        CheckId::TuranClassical => checks::check_turan_classical(pt.alpha, pt.beta, pt.z, cfg, tol),
        CheckId::ExpCorollary => checks::check_exp_corollary(pt.z, cfg, tol),
        CheckId::TailTuranClassical => {
            checks::check_tail_turan_classical(pt.alpha, pt.beta, need_n(pt.n)?, pt.z, cfg, tol)
        }
        CheckId::ShiftedTuran => {
            checks::check_shifted_turan(pt.alpha, pt.beta, need_n(pt.n)?, pt.z, cfg, tol)
        }
        CheckId::SharpTuranTail => {
            checks::check_sharp_turan_tail(pt.alpha, pt.beta, need_n(pt.n)?, pt.z, cfg, tol)
        }
        CheckId::RatioTuranClassical => {
            checks::check_ratio_turan_classical(pt.alpha, pt.beta, need(pt.beta2)?, pt.z, cfg, tol)
        }
        CheckId::RatioTuranSpecial => {
            checks::check_ratio_turan_special(pt.alpha, pt.beta, pt.z, cfg, tol)
        }
        CheckId::LazarevicClassical => {
            checks::check_lazarevic_classical(pt.alpha, pt.beta, need(pt.beta2)?, pt.z, cfg, tol)
        }
        CheckId::WilkerClassical => {
            checks::check_wilker_classical(pt.alpha, pt.beta, need(pt.beta2)?, pt.z, cfg, tol)
        }
        CheckId::TuranGeneralized => checks::check_turan_generalized(
            pt.alpha,
            pt.beta,
            need(pt.gamma)?,
            need(pt.q)?,
            pt.z,
            cfg,
            tol,
        ),
        CheckId::BoundedTuranPrabhakar => checks::check_bounded_turan_prabhakar(
            pt.alpha,
            pt.beta,
            need(pt.gamma)?,
            pt.z,
            cfg,
            tol,
        ),
        CheckId::RatioTuranGeneralized => checks::check_ratio_turan_generalized(
            pt.alpha,
            pt.beta,
            need(pt.beta2)?,
            need(pt.gamma)?,
            need(pt.q)?,
            pt.z,
            cfg,
            tol,
        ),
        CheckId::TailTuranPrabhakar => checks::check_tail_turan_prabhakar(
            pt.alpha,
            pt.beta,
            need(pt.gamma)?,
            need_n(pt.n)?,
            pt.z,
            cfg,
            tol,
        ),
        CheckId::SharpTuranPrabhakar => checks::check_sharp_turan_prabhakar(
            pt.alpha,
            pt.beta,
            need(pt.gamma)?,
            need_n(pt.n)?,
            pt.z,
            cfg,
            tol,
        ),
        CheckId::LazarevicGeneralized => checks::check_lazarevic_generalized(
            pt.alpha,
            pt.beta,
            need(pt.beta2)?,
            need(pt.gamma)?,
            need(pt.q)?,
            pt.z,
            cfg,
            tol,
        ),
        CheckId::WilkerGeneralized => checks::check_wilker_generalized(
            pt.alpha,
            pt.beta,
            need(pt.beta2)?,
            need(pt.gamma)?,
            need(pt.q)?,
            pt.z,
            cfg,
            tol,
        ),
    }
}

/// Per-check aggregation; pass + fail + guard_excluded = count.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CheckSummary {
    pub equation_id: &'static str,
    pub count: u64,
    pub passed: u64,
    pub failed: u64,
    pub guard_excluded: u64,
    /// Smallest residual/scale over verdicted points.
    pub min_rel_residual: Option<f64>,
    /// The record attaining the minimum.
    pub argmin: Option<CheckRecord>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRun {
    pub records: Vec<CheckRecord>,
    pub summaries: Vec<CheckSummary>,
}

impl CheckRun {
    pub fn total_failed(&self) -> u64 {
        self.summaries.iter().map(|s| s.failed).sum()
    }

    pub fn total_guard_excluded(&self) -> u64 {
        self.summaries.iter().map(|s| s.guard_excluded).sum()
    }
}

/// Test shim: negate every verdicted residual before deciding pass/fail.
/// Exercises the failure exit path without corrupting real data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunShim {
    pub negate_residuals: bool,
}

fn record_cmp(a: &CheckRecord, b: &CheckRecord) -> std::cmp::Ordering {
    a.equation_id
        .cmp(b.equation_id)
        .then(a.alpha.total_cmp(&b.alpha))
        .then(a.beta.total_cmp(&b.beta))
        .then(
            a.beta2
                .unwrap_or(f64::NEG_INFINITY)
                .total_cmp(&b.beta2.unwrap_or(f64::NEG_INFINITY)),
        )
        .then(
            a.gamma
                .unwrap_or(f64::NEG_INFINITY)
                .total_cmp(&b.gamma.unwrap_or(f64::NEG_INFINITY)),
        )
        .then(
            a.q.unwrap_or(f64::NEG_INFINITY)
                .total_cmp(&b.q.unwrap_or(f64::NEG_INFINITY)),
        )
        .then(a.n.unwrap_or(0).cmp(&b.n.unwrap_or(0)))
        .then(a.z.total_cmp(&b.z))
}

/// Run the given checks over the grid. Records come back sorted by
/// (equation id, parameter tuple) regardless of the execution order.
pub fn run_checks(
    ids: &[CheckId],
    grid: &GridSpec,
    cfg: &SeriesConfig,
    tol: &Tolerance,
    shim: RunShim,
) -> Result<CheckRun> {
    let mut work: Vec<(CheckId, CheckPoint)> = Vec::new();
    for &id in ids {
        for pt in points_for(id, grid) {
            work.push((id, pt));
        }
    }
    let cfg = *cfg;
    let tol = *tol;
    let results = exec::map(work, move |(id, pt)| run_point(id, &pt, &cfg, &tol));
    let mut records = Vec::with_capacity(results.len());
    for r in results {
        let mut rec = r?;
        if shim.negate_residuals && rec.status != CheckStatus::GuardExcluded {
            rec.residual = -rec.residual;
            rec.passed = rec.residual >= -rec.tol_used;
            rec.status = if rec.passed {
                CheckStatus::Passed
            } else {
                CheckStatus::Failed
            };
        }
        records.push(rec);
    }
    records.sort_by(record_cmp);

    let mut summaries: Vec<CheckSummary> = Vec::new();
    for &id in ids {
        let eq = id.id();
        let mut s = CheckSummary {
            equation_id: eq,
            count: 0,
            passed: 0,
            failed: 0,
            guard_excluded: 0,
            min_rel_residual: None,
            argmin: None,
        };
        for rec in records.iter().filter(|r| r.equation_id == eq) {
            s.count += 1;
            match rec.status {
                CheckStatus::Passed => s.passed += 1,
                CheckStatus::Failed => s.failed += 1,
                CheckStatus::GuardExcluded => s.guard_excluded += 1,
            }
            if rec.status != CheckStatus::GuardExcluded {
                let rel = rec.residual / rec.scale;
                if rel.is_finite() && s.min_rel_residual.map(|m| rel < m).unwrap_or(true) {
                    s.min_rel_residual = Some(rel);
                    s.argmin = Some(*rec);
                }
            }
        }
        summaries.push(s);
    }
    summaries.sort_by(|a, b| a.equation_id.cmp(b.equation_id));
    Ok(CheckRun { records, summaries })
}

/// Identifier of one monotonicity probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeId {
    Hn,
    HPrabhakar,
    BetaRatio,
    SuccessorRatio,
}

impl ProbeId {
    pub fn all() -> &'static [ProbeId] {
        &[
            ProbeId::Hn,
            ProbeId::HPrabhakar,
            ProbeId::BetaRatio,
            ProbeId::SuccessorRatio,
        ]
    }

    pub fn id(&self) -> &'static str {
        match self {
            ProbeId::Hn => "hn",
            ProbeId::HPrabhakar => "h_prabhakar",
            ProbeId::BetaRatio => "beta_ratio",
            ProbeId::SuccessorRatio => "successor_ratio",
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            ProbeId::Hn => "tail ratio E^n E^{n+2}/(E^{n+1})^2 increasing in z, sharp z->0 limit",
            ProbeId::HPrabhakar => "Prabhakar tail ratio increasing in z, sharp z->0 limit",
            ProbeId::BetaRatio => "E_{a,b1}/E_{a,b2} monotone in z, direction set by b1 vs b2",
            ProbeId::SuccessorRatio => "normalized successor ratio nondecreasing in beta",
        }
    }

    pub fn parse(s: &str) -> Result<ProbeId> {
        ProbeId::all()
            .iter()
            .copied()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::config(format!("unknown probe id '{s}' (see `list`)")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeRun {
    pub reports: Vec<MonotonicityReport>,
    pub violations: u64,
    pub guard_excluded: u64,
}

/// Four-parameter combinations that stay entire on the probe grid:
/// q < 1 + α strictly.
fn feasible_four_param(grid: &GridSpec) -> Vec<(f64, f64, f64)> {
    let mut out = Vec::new();
    for &a in &grid.alpha.points {
        for &g in &grid.gamma.points {
            for &q in &grid.q_set {
                if q < 1.0 + a - 1e-9 {
                    out.push((a, g, q));
                }
            }
        }
    }
    out
}

/// Run the given probes over the preset probe grids.
pub fn run_probes(ids: &[ProbeId], grid: &GridSpec, cfg: &SeriesConfig) -> Result<ProbeRun> {
    let mut reports = Vec::new();
    let z_grid = &grid.probe_z.points;
    for &id in ids {
        match id {
            ProbeId::Hn => {
                let mut work = Vec::new();
                for &a in &grid.alpha.points {
                    for &b in &grid.beta.points {
                        for &n in &grid.n_set {
                            work.push((a, b, n));
                        }
                    }
                }
                let cfg = *cfg;
                let zg = z_grid.clone();
                let out = exec::map(work, move |(a, b, n)| probe::probe_hn(a, b, n, &zg, &cfg));
                for r in out {
                    reports.push(r?);
                }
            }
            ProbeId::HPrabhakar => {
                let mut work = Vec::new();
                for &a in &grid.alpha.points {
                    for &b in &grid.beta.points {
                        // H is monotone for γ >= 1 only; the increase claim
                        // demonstrably fails below that (see the sharp
                        // Prabhakar tail check).
                        for &g in grid.gamma.points.iter().filter(|g| **g >= 1.0) {
                            for &n in &grid.n_set {
                                work.push((a, b, g, n));
                            }
                        }
                    }
                }
                let cfg = *cfg;
                let zg = z_grid.clone();
                let out = exec::map(work, move |(a, b, g, n)| {
                    probe::probe_h_prabhakar(a, b, g, n, &zg, &cfg)
                });
                for r in out {
                    reports.push(r?);
                }
            }
            ProbeId::BetaRatio => {
                let mut work: Vec<(Family, f64, f64, f64, f64, f64)> = Vec::new();
                let ordered: Vec<(f64, f64)> = {
                    let bs: Vec<f64> = grid.beta.points.iter().copied().filter(|b| *b > 1.0).collect();
                    let mut v = Vec::new();
                    for &b1 in &bs {
                        for &b2 in &bs {
                            if b1 != b2 {
                                v.push((b1, b2));
                            }
                        }
                    }
                    v
                };
                for &a in &grid.alpha.points {
                    for &(b1, b2) in &ordered {
                        work.push((Family::Classical, a, b1, b2, 1.0, 1.0));
                    }
                }
                for (a, g, q) in feasible_four_param(grid) {
                    for &(b1, b2) in &ordered {
                        work.push((Family::FourParameter, a, b1, b2, g, q));
                    }
                }
                let cfg = *cfg;
                let zg = z_grid.clone();
                let out = exec::map(work, move |(fam, a, b1, b2, g, q)| {
                    probe::probe_beta_ratio(fam, a, b1, b2, g, q, &zg, &cfg)
                });
                for r in out {
                    reports.push(r?);
                }
            }
            ProbeId::SuccessorRatio => {
                let mut work: Vec<(Family, f64, f64, f64, f64)> = Vec::new();
                for &a in &grid.alpha.points {
                    for &z in &grid.probe_z_fixed {
                        work.push((Family::Classical, a, 1.0, 1.0, z));
                    }
                }
                for (a, g, q) in feasible_four_param(grid) {
                    for &z in &grid.probe_z_fixed {
                        work.push((Family::FourParameter, a, g, q, z));
                    }
                }
                let cfg = *cfg;
                let betas = grid.probe_beta.points.clone();
                let out = exec::map(work, move |(fam, a, g, q, z)| {
                    probe::probe_normalized_successor_ratio(fam, a, &betas, g, q, z, &cfg)
                });
                for r in out {
                    reports.push(r?);
                }
            }
        }
    }
    let violations = reports.iter().filter(|r| !r.passed).count() as u64;
    let guard_excluded = reports.iter().map(|r| u64::from(r.guard_excluded)).sum();
    Ok(ProbeRun {
        reports,
        violations,
        guard_excluded,
    })
}
