//! Scaling benchmark over generator families.
//!
//! Each level builds its complex once, runs one untimed warmup, then
//! times `trials` stratification calls with a monotonic clock around the
//! call only. Parallel mode farms trials out to a small worker pool; each
//! trial still times its own call, so reported means match the
//! sequential mode up to scheduler noise.

use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use canstrat_core::generators::{maximal_simplices, Family, GenError};
use canstrat_core::{canonical_stratification, SimplicialComplex};

use crate::report::{BenchLevel, BenchReport};

fn time_one(complex: SimplicialComplex) -> f64 {
    let start = Instant::now();
    let s = canonical_stratification(complex, true);
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    std::hint::black_box(&s);
    elapsed
}

fn run_trials(complex: &SimplicialComplex, trials: usize, parallel: bool) -> Vec<f64> {
    if !parallel {
        return (0..trials).map(|_| time_one(complex.clone())).collect();
    }
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(trials);
    let next = AtomicUsize::new(0);
    let times = Mutex::new(Vec::with_capacity(trials));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                if next.fetch_add(1, Ordering::Relaxed) >= trials {
                    break;
                }
                let t = time_one(complex.clone());
                times.lock().unwrap().push(t);
            });
        }
    });
    times.into_inner().unwrap()
}

pub fn run_bench(
    family: Family,
    levels: RangeInclusive<usize>,
    trials: usize,
    parallel: bool,
) -> Result<BenchReport, GenError> {
    assert!(trials >= 1, "at least one trial");
    let mut rows = Vec::new();
    for level in levels {
        let maximal = maximal_simplices(family, level)?;
        let complex =
            SimplicialComplex::build(&maximal).expect("generated families are valid complexes");
        let s = complex.len();
        let s0 = complex.num_simplices(0);
        drop(canonical_stratification(complex.clone(), true));
        let times = run_trials(&complex, trials, parallel);
        let mean = times.iter().sum::<f64>() / trials as f64;
        let var = times.iter().map(|t| (t - mean) * (t - mean)).sum::<f64>() / trials as f64;
        rows.push(BenchLevel { level, s, s0, mean_ms: mean, stddev_ms: var.sqrt() });
    }
    let linear_fit = rows
        .windows(2)
        .map(|w| {
            let time_ratio = w[1].mean_ms / w[0].mean_ms.max(1e-6);
            let size_ratio = w[1].s as f64 / w[0].s as f64;
            time_ratio / size_ratio
        })
        .fold(0.0, f64::max);
    Ok(BenchReport { family: family.name().to_string(), trials, levels: rows, linear_fit })
}
