//! Deterministic, parallel trial loop.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Counterexample, HppReport, Method, Verdict};

/// Trial count, seed and stopping rule for a randomized search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub trials: u64,
    pub seed: u64,
    /// Stop at the first counterexample instead of counting all of them.
    pub stop_at_first: bool,
}

impl SearchOptions {
    pub fn first(trials: u64, seed: u64) -> Self {
        Self { trials, seed, stop_at_first: true }
    }

    pub fn count(trials: u64, seed: u64) -> Self {
        Self { trials, seed, stop_at_first: false }
    }
}

pub(crate) enum Trial {
    Pass,
    Fail(Counterexample),
    Inconclusive,
}

/// Generator for trial `index`: one ChaCha stream per trial, so results do
/// not depend on how trials are spread over threads.
pub(crate) fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

const BATCH: u64 = 1 << 14;

pub(crate) fn run<F>(method: Method, opts: SearchOptions, trial: F) -> HppReport
where
    F: Fn(&mut ChaCha8Rng) -> Trial + Sync,
{
    let mut report = HppReport {
        method,
        verdict: Verdict::NoCounterexampleFound,
        requested: opts.trials,
        trials: 0,
        counterexamples: 0,
        inconclusive: 0,
        seed: opts.seed,
        first_index: None,
        certificate: None,
    };
    let mut start = 0;
    while start < opts.trials {
        let end = (start + BATCH).min(opts.trials);
        let outcomes: Vec<Trial> = (start..end)
            .into_par_iter()
            .map(|i| trial(&mut trial_rng(opts.seed, i)))
            .collect();
        for (offset, outcome) in outcomes.into_iter().enumerate() {
            let index = start + offset as u64;
            report.trials = index + 1;
            match outcome {
                Trial::Pass => {}
                Trial::Inconclusive => report.inconclusive += 1,
                Trial::Fail(cert) => {
                    report.counterexamples += 1;
                    if report.certificate.is_none() {
                        report.first_index = Some(index);
                        report.certificate = Some(cert);
                        report.verdict = Verdict::Counterexample;
                    }
                    if opts.stop_at_first {
                        return report;
                    }
                }
            }
        }
        start = end;
    }
    report
}
