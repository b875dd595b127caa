//! Measurement harness: runs the comparison methods over the benchmark
//! scenes, tallies ordering errors against the exact oracle, and fits the
//! per-line timing model.

pub mod experiment;
pub mod fit;
pub mod report;

use quadorder_core::scenes::{gen_nested_spheres, gen_packed_spheres, Scene, SceneKind};
use quadorder_core::tracker::{Method, TrackerConfig};
use quadorder_core::Result;

pub use experiment::{
    run_experiment, ErrorTally, Experiment, RunConfig, TimingRecord, WARMUP_LINES,
};
pub use fit::{adjusted_times, fit_line, fit_plane, r_squared, FitError, FitResult};
pub use report::{format_table, ReportRow};

/// Scene sizes and line counts of the desk-scale experiment matrix.
#[derive(Clone, Debug)]
pub struct MatrixConfig {
    pub nested_sizes: Vec<usize>,
    pub nested_lines: usize,
    pub packed_lines: usize,
    pub seed: u64,
    pub methods: Vec<Method>,
}

impl Default for MatrixConfig {
    fn default() -> Self {
        MatrixConfig {
            nested_sizes: vec![10, 100],
            nested_lines: 1000,
            packed_lines: 11000,
            seed: 1,
            methods: vec![Method::Approximate, Method::extended(), Method::resultant()],
        }
    }
}

#[derive(Clone, Debug)]
pub struct MatrixRun {
    pub kind: SceneKind,
    pub n: usize,
    pub method: Method,
    pub experiment: Experiment,
}

impl MatrixRun {
    pub fn label(&self) -> String {
        match self.kind {
            SceneKind::PackedSpheres => "packed".to_string(),
            SceneKind::NestedSpheres => format!("nested n={}", self.n),
        }
    }
}

/// Every scene of the matrix crossed with every method. Each (scene, method)
/// run uses the same seed, so all methods see the same lines.
pub fn run_matrix(config: &MatrixConfig, mut progress: impl FnMut(&str)) -> Result<Vec<MatrixRun>> {
    let mut scenes: Vec<(Scene, usize)> = Vec::new();
    for &n in &config.nested_sizes {
        scenes.push((gen_nested_spheres(n)?, config.nested_lines));
    }
    if config.packed_lines > 0 {
        scenes.push((gen_packed_spheres()?, config.packed_lines));
    }
    let mut runs = Vec::new();
    for (scene, lines) in &scenes {
        for method in &config.methods {
            progress(&format!(
                "{} n={} {} x{}",
                scene.kind.name(),
                scene.n,
                method.name(),
                lines
            ));
            let run = RunConfig {
                tracker: TrackerConfig::new(*method),
                lines: *lines,
                seed: config.seed,
            };
            let experiment = run_experiment(scene, &run)?;
            runs.push(MatrixRun {
                kind: scene.kind,
                n: scene.n,
                method: *method,
                experiment,
            });
        }
    }
    Ok(runs)
}

/// Timing fit of one scene family under one method: a plane over the pooled
/// nested scenes, a line for the single packed scene.
#[derive(Clone, Debug)]
pub struct FamilyFit {
    pub family: SceneKind,
    pub method: Method,
    pub tally: ErrorTally,
    pub fit: std::result::Result<FitResult, FitError>,
    pub records: Vec<TimingRecord>,
}

pub fn fit_families(runs: &[MatrixRun]) -> Vec<FamilyFit> {
    let mut out = Vec::new();
    for family in [SceneKind::NestedSpheres, SceneKind::PackedSpheres] {
        let mut methods: Vec<Method> = Vec::new();
        for r in runs.iter().filter(|r| r.kind == family) {
            if !methods.contains(&r.method) {
                methods.push(r.method);
            }
        }
        for method in methods {
            let mut tally = ErrorTally::default();
            let mut records = Vec::new();
            for r in runs
                .iter()
                .filter(|r| r.kind == family && r.method == method)
            {
                let t = &r.experiment.tally;
                tally.lines += t.lines;
                tally.error_lines += t.error_lines;
                tally.comparisons += t.comparisons;
                tally.escalations += t.escalations;
                tally.ties += t.ties;
                tally.fallbacks += t.fallbacks;
                tally.phantoms += t.phantoms;
                tally.exact_phantoms += t.exact_phantoms;
                tally.rejected_lines += t.rejected_lines;
                records.extend(r.experiment.timed_records());
            }
            let fit = match family {
                SceneKind::NestedSpheres => fit_plane(&records),
                SceneKind::PackedSpheres => fit_line(&records),
            };
            out.push(FamilyFit {
                family,
                method,
                tally,
                fit,
                records,
            });
        }
    }
    out
}

pub fn report_rows(runs: &[MatrixRun], fits: &[FamilyFit]) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for f in fits {
        let family = match f.family {
            SceneKind::NestedSpheres => "nested (pooled)",
            SceneKind::PackedSpheres => "packed",
        };
        let errors = match f.method {
            Method::Resultant { .. } => None,
            _ => Some((f.tally.error_lines, f.tally.lines)),
        };
        rows.push(ReportRow {
            scene: family.to_string(),
            method: f.method.name().to_string(),
            errors,
            fit: f.fit.as_ref().ok().copied(),
        });
        if f.family == SceneKind::NestedSpheres {
            for r in runs
                .iter()
                .filter(|r| r.kind == f.family && r.method == f.method)
            {
                let t = &r.experiment.tally;
                rows.push(ReportRow {
                    scene: format!("  {}", r.label()),
                    method: f.method.name().to_string(),
                    errors: errors.map(|_| (t.error_lines, t.lines)),
                    fit: None,
                });
            }
        }
    }
    rows
}
