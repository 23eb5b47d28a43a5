//! Runs suites concurrently and collects a sorted report.

use std::time::Instant;

use superfield::suites::{run_suite, Settings, Suite, SuiteError};

use crate::report::{entry, Report};

/// Each suite runs on its own thread; randomised suites derive their RNG from
/// the shared seed, so the result does not depend on scheduling.
pub fn verify(suites: &[Suite], s: &Settings, timings: bool) -> Result<Report, SuiteError> {
    let mut wanted = suites.to_vec();
    wanted.sort();
    wanted.dedup();
    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = wanted
            .iter()
            .map(|&suite| {
                scope.spawn(move || {
                    let t = Instant::now();
                    let r = run_suite(suite, s);
                    (suite, r, t.elapsed().as_millis() as u64)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    let mut entries = Vec::new();
    for (suite, r, ms) in results {
        let ms = timings.then_some(ms);
        entries.extend(r?.iter().map(|c| entry(suite, c, ms)));
    }
    Ok(Report::new(
        s.seed,
        s.lie.name.clone(),
        s.lattice.len(),
        &wanted,
        entries,
    ))
}
