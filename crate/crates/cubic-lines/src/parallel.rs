//! Census strata run on worker threads. Each stratum is an independent pure
//! computation, so the merged report does not depend on the number of workers.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use cubic_lines_core::census::{census_stratum, smoothness_gate, CensusOptions, CensusReport, StratumCensus};
use cubic_lines_core::grassmann::Stratum;
use cubic_lines_core::threefold::CubicThreefold;
use cubic_lines_core::Result;

/// Per-stratum wall time, for diagnostics only; never part of a report.
pub type Timings = Vec<(Stratum, Duration)>;

pub fn census(x: &CubicThreefold, opts: &CensusOptions, jobs: usize) -> Result<(CensusReport, Timings)> {
    let smooth = smoothness_gate(x, opts)?;
    let strata: Vec<Stratum> = opts.strata.clone().unwrap_or_else(|| Stratum::all().to_vec());
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<(Result<StratumCensus>, Duration)>>> = Mutex::new(vec![None; strata.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs.clamp(1, strata.len().max(1)) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&s) = strata.get(k) else { break };
                let start = Instant::now();
                let r = census_stratum(x, s, &opts.solve);
                slots.lock().expect("no worker panics while holding the lock")[k] = Some((r, start.elapsed()));
            });
        }
    });
    let mut results = Vec::with_capacity(strata.len());
    let mut timings = Vec::with_capacity(strata.len());
    // in stratum order, so the reported error is the same for any job count
    for (k, slot) in slots.into_inner().expect("workers joined").into_iter().enumerate() {
        let (r, t) = slot.expect("every stratum was taken by a worker");
        results.push(r?);
        timings.push((strata[k], t));
    }
    Ok((CensusReport::from_strata(results, smooth)?, timings))
}
