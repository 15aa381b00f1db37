//! Report assembly and rendering: human text, JSON and flat CSV.
//!
//! Reports separate a deterministic body (config echo, summaries, records)
//! from volatile metadata (wall time), so identical configurations produce
//! byte-identical bodies across runs and machines regardless of thread
//! count. The CSV format carries records only and is fully deterministic.

use crate::checks::{CheckRecord, Tolerance};
use crate::grid::GridSpec;
use crate::probe::MonotonicityReport;
use crate::runner::{CheckRun, CheckSummary, ProbeRun};
use crate::series::SeriesConfig;

pub const CSV_HEADER: &str = "equation_id,alpha,beta,beta2,gamma,q,n,z,residual,scale,passed,status";

/// Echo of everything that determines a run.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ConfigEcho {
    pub checks: Vec<String>,
    pub series: SeriesConfig,
    pub tolerance: Tolerance,
    pub grid: GridSpec,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RunReport {
    pub version: String,
    pub config: ConfigEcho,
    pub summaries: Vec<CheckSummary>,
    /// Full records; included in rendered output only when requested.
    pub records: Vec<CheckRecord>,
    pub wall_time_ms: u64,
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn fmt_opt_n(v: Option<u32>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl RunReport {
    pub fn new(
        checks: Vec<String>,
        series: SeriesConfig,
        tolerance: Tolerance,
        grid: GridSpec,
        run: CheckRun,
        wall_time_ms: u64,
    ) -> Self {
        RunReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config: ConfigEcho {
                checks,
                series,
                tolerance,
                grid,
            },
            summaries: run.summaries,
            records: run.records,
            wall_time_ms,
        }
    }

    pub fn total_failed(&self) -> u64 {
        self.summaries.iter().map(|s| s.failed).sum()
    }

    /// Human-readable summary. Everything before the final `# wall_time_ms`
    /// line is deterministic.
    pub fn render_text(&self, include_records: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("mllab v{} check report\n", self.version));
        if let Some(p) = &self.config.grid.preset {
            out.push_str(&format!("preset: {p}\n"));
        }
        out.push_str(&format!("checks: {}\n\n", self.config.checks.join(",")));
        out.push_str("check      count   pass   fail  guard  min(residual/scale) @ argmin\n");
        for s in &self.summaries {
            let min = s
                .min_rel_residual
                .map(|m| format!("{m:.3e}"))
                .unwrap_or_else(|| "-".to_string());
            let argmin = s
                .argmin
                .map(|r| {
                    format!(
                        "alpha={} beta={}{}{}{}{} z={}",
                        r.alpha,
                        r.beta,
                        r.beta2.map(|b| format!(" beta2={b}")).unwrap_or_default(),
                        r.gamma.map(|g| format!(" gamma={g}")).unwrap_or_default(),
                        r.q.map(|q| format!(" q={q}")).unwrap_or_default(),
                        r.n.map(|n| format!(" n={n}")).unwrap_or_default(),
                        r.z
                    )
                })
                .unwrap_or_else(|| "-".to_string());
            out.push_str(&format!(
                "{:<9} {:>6} {:>6} {:>6} {:>6}  {:>12}  {}\n",
                s.equation_id, s.count, s.passed, s.failed, s.guard_excluded, min, argmin
            ));
        }
        let failed = self.total_failed();
        let guard: u64 = self.summaries.iter().map(|s| s.guard_excluded).sum();
        let count: u64 = self.summaries.iter().map(|s| s.count).sum();
        out.push_str(&format!(
            "\ntotal: {count} points, {failed} failed, {guard} outside verified domain\n"
        ));
        if include_records {
            out.push('\n');
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in &self.records {
                out.push_str(&record_csv_row(r));
                out.push('\n');
            }
        }
        out.push_str(&format!("# wall_time_ms: {}\n", self.wall_time_ms));
        out
    }

    /// JSON with the volatile fields confined to `meta`; `body` is
    /// byte-identical for identical configurations.
    pub fn render_json(&self, include_records: bool) -> String {
        let body = serde_json::json!({
            "config": self.config,
            "summary": self.summaries,
            "records": if include_records {
                serde_json::to_value(&self.records).unwrap()
            } else {
                serde_json::Value::Null
            },
        });
        let doc = serde_json::json!({
            "meta": {
                "version": self.version,
                "wall_time_ms": self.wall_time_ms,
            },
            "body": body,
        });
        serde_json::to_string_pretty(&doc).unwrap()
    }

    /// Flat CSV of all records.
    pub fn render_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.records.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            out.push_str(&record_csv_row(r));
            out.push('\n');
        }
        out
    }
}

pub fn record_csv_row(r: &CheckRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        r.equation_id,
        r.alpha,
        r.beta,
        fmt_opt(r.beta2),
        fmt_opt(r.gamma),
        fmt_opt(r.q),
        fmt_opt_n(r.n),
        r.z,
        r.residual,
        r.scale,
        r.passed,
        r.status.as_str()
    )
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ProbeReport {
    pub version: String,
    pub series: SeriesConfig,
    pub reports: Vec<MonotonicityReport>,
    pub violations: u64,
    pub guard_excluded: u64,
    pub wall_time_ms: u64,
}

impl ProbeReport {
    pub fn new(series: SeriesConfig, run: ProbeRun, wall_time_ms: u64) -> Self {
        ProbeReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            series,
            reports: run.reports,
            violations: run.violations,
            guard_excluded: run.guard_excluded,
            wall_time_ms,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("mllab v{} probe report\n\n", self.version));
        for r in &self.reports {
            let limit = match (r.limit_at_zero, r.limit_reference) {
                (Some(got), Some(want)) => {
                    format!("  limit {got:.12} vs reference {want:.12}")
                }
                _ => String::new(),
            };
            out.push_str(&format!(
                "{:<60} {:?} {} max_violation={:.3e}{}{}\n",
                r.function_id,
                r.direction,
                if r.passed { "ok" } else { "VIOLATED" },
                r.max_violation,
                limit,
                if r.guard_excluded > 0 {
                    format!("  (guard-excluded: {})", r.guard_excluded)
                } else {
                    String::new()
                }
            ));
        }
        out.push_str(&format!(
            "\ntotal: {} probes, {} violations, {} guard-excluded points\n",
            self.reports.len(),
            self.violations,
            self.guard_excluded
        ));
        out.push_str(&format!("# wall_time_ms: {}\n", self.wall_time_ms));
        out
    }

    pub fn render_json(&self) -> String {
        let doc = serde_json::json!({
            "meta": {
                "version": self.version,
                "wall_time_ms": self.wall_time_ms,
            },
            "body": {
                "series": self.series,
                "probes": self.reports,
                "violations": self.violations,
                "guard_excluded": self.guard_excluded,
            },
        });
        serde_json::to_string_pretty(&doc).unwrap()
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("function_id,direction,passed,max_violation,limit_at_zero,limit_reference,guard_excluded\n");
        for r in &self.reports {
            out.push_str(&format!(
                "{},{:?},{},{},{},{},{}\n",
                r.function_id,
                r.direction,
                r.passed,
                r.max_violation,
                fmt_opt(r.limit_at_zero),
                fmt_opt(r.limit_reference),
                r.guard_excluded
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runner::{run_checks, CheckId, RunShim};

    fn small_report() -> RunReport {
        let grid = GridSpec::smoke();
        let run = run_checks(
            &[CheckId::ExpCorollary, CheckId::TuranClassical],
            &grid,
            &SeriesConfig::default(),
            &Tolerance::default(),
            RunShim::default(),
        )
        .unwrap();
        RunReport::new(
            vec!["eq66".to_string(), "eq6".to_string()],
            SeriesConfig::default(),
            Tolerance::default(),
            grid,
            run,
            1234,
        )
    }

    #[test]
    fn csv_has_exact_header_and_rows() {
        let rep = small_report();
        let csv = rep.render_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        let first = lines.next().unwrap();
        assert!(first.starts_with("eq6,"));
        assert_eq!(first.split(',').count(), 12);
        assert_eq!(csv.lines().count() as u64, 1 + rep.records.len() as u64);
    }

    #[test]
    fn json_body_excludes_wall_time() {
        let rep = small_report();
        let doc: serde_json::Value = serde_json::from_str(&rep.render_json(true)).unwrap();
        assert!(doc["meta"]["wall_time_ms"].is_u64());
        assert!(doc["body"]["summary"].is_array());
        assert!(doc["body"].get("wall_time_ms").is_none());
        let body = serde_json::to_string(&doc["body"]).unwrap();
        assert!(!body.contains("wall_time_ms"));
    }

    #[test]
    fn text_report_mentions_totals() {
        let rep = small_report();
        let text = rep.render_text(false);
        assert!(text.contains("0 failed"));
        assert!(text.lines().last().unwrap().starts_with("# wall_time_ms"));
    }
}
