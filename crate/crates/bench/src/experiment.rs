//! Runs one method over many sampled lines of one scene.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use quadorder_core::scenes::{sample_line, Scene};
use quadorder_core::tracker::{exact_phantoms, score_line, track_line, TrackerConfig};
use quadorder_core::Result;

/// Lines at the start of every run that are scored but not timed.
pub const WARMUP_LINES: usize = 10;

/// One sampled line. `comparisons_escalated` is the timing regressor: the
/// number of accurate comparisons, or every comparison for the approximate
/// method, which never escalates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimingRecord {
    pub line_index: usize,
    pub quadrics: usize,
    pub comparisons_escalated: u64,
    pub elapsed_ns: u64,
    pub error_flag: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ErrorTally {
    pub lines: usize,
    pub error_lines: usize,
    pub comparisons: u64,
    pub escalations: u64,
    pub ties: u64,
    pub fallbacks: u64,
    /// Intersections admitted by the storage screen but with no real roots
    /// in working precision.
    pub phantoms: usize,
    /// Of the remaining ones, those with no real roots exactly.
    pub exact_phantoms: usize,
    pub rejected_lines: u64,
}

impl ErrorTally {
    pub fn error_rate(&self) -> f64 {
        if self.lines == 0 {
            0.0
        } else {
            self.error_lines as f64 / self.lines as f64
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub tracker: TrackerConfig,
    pub lines: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct Experiment {
    pub records: Vec<TimingRecord>,
    /// Lines whose sort needed an oracle fallback; excluded from fits.
    pub fallback_lines: Vec<usize>,
    pub tally: ErrorTally,
}

impl Experiment {
    /// Records used for timing fits: warm-up and fallback lines removed.
    pub fn timed_records(&self) -> Vec<TimingRecord> {
        self.records
            .iter()
            .filter(|r| {
                r.line_index >= WARMUP_LINES && !self.fallback_lines.contains(&r.line_index)
            })
            .copied()
            .collect()
    }
}

/// Samples `lines` lines from one seeded stream and tracks each. Only
/// intersection, root computation and sorting are inside the timed region.
pub fn run_experiment(scene: &Scene, config: &RunConfig) -> Result<Experiment> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut records = Vec::with_capacity(config.lines);
    let mut fallback_lines = Vec::new();
    let mut tally = ErrorTally::default();
    for line_index in 0..config.lines {
        let sampled = sample_line(scene, &mut rng)?;
        tally.rejected_lines += u64::from(sampled.rejected);

        let start = Instant::now();
        let outcome = track_line(&sampled.line, &scene.quadrics, &config.tracker)?;
        let elapsed_ns = start.elapsed().as_nanos() as u64;

        let error_flag = score_line(&outcome.order, &outcome.hits);
        let stats = outcome.stats;
        tally.lines += 1;
        tally.error_lines += usize::from(error_flag);
        tally.comparisons += stats.comparisons;
        tally.escalations += stats.escalations;
        tally.ties += stats.ties;
        tally.fallbacks += stats.fallbacks;
        tally.phantoms += outcome.hits.phantoms;
        tally.exact_phantoms += exact_phantoms(&outcome.hits);
        if stats.fallbacks > 0 {
            fallback_lines.push(line_index);
        }
        records.push(TimingRecord {
            line_index,
            quadrics: scene.quadrics.len(),
            comparisons_escalated: stats.regressor(&config.tracker.method),
            elapsed_ns,
            error_flag,
        });
    }
    Ok(Experiment {
        records,
        fallback_lines,
        tally,
    })
}
