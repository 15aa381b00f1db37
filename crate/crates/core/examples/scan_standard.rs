// scratch: full standard-grid scan
use mllab_core::checks::Tolerance;
use mllab_core::grid::GridSpec;
use mllab_core::runner::{run_checks, run_probes, CheckId, ProbeId, RunShim};
use mllab_core::series::SeriesConfig;

fn main() {
    let t0 = std::time::Instant::now();
    let grid = GridSpec::standard();
    let run = run_checks(
        CheckId::all(),
        &grid,
        &SeriesConfig::default(),
        &Tolerance::default(),
        RunShim::default(),
    )
    .unwrap();
    println!("checks done in {:?}", t0.elapsed());
    for s in &run.summaries {
        println!(
            "{:<8} count={:<6} pass={:<6} fail={:<4} guard={:<5} min_rel={:?}",
            s.equation_id, s.count, s.passed, s.failed, s.guard_excluded, s.min_rel_residual
        );
    }
    for r in run.records.iter().filter(|r| r.status == mllab_core::checks::CheckStatus::Failed).take(12) {
        println!("FAIL {:?}", r);
    }
    let t1 = std::time::Instant::now();
    let probes = run_probes(ProbeId::all(), &grid, &SeriesConfig::default()).unwrap();
    println!("probes done in {:?}: {} reports, {} violations, {} guard-excluded",
        t1.elapsed(), probes.reports.len(), probes.violations, probes.guard_excluded);
    for r in probes.reports.iter().filter(|r| !r.passed).take(12) {
        println!("PROBE VIOLATION {} max={:e}", r.function_id, r.max_violation);
    }
}
