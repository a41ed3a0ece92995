//! Timing ladder for the edge colourer.
//!
//! Instance `(m, run)` is [`families::bench_instance`] with seed
//! `seed + run`: `m / 2` vertices and `m` edges with uniform endpoints,
//! loops redrawn. Each instance is coloured with its local bound.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::extend::edge_colour;
use crate::families;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub m: usize,
    pub n: usize,
    pub runs: usize,
    pub median: Duration,
    /// Most colours used by any run.
    pub colours: usize,
    /// Largest local bound over the runs.
    pub gamma: usize,
}

fn time_one(m: usize, seed: u64) -> Result<(Duration, usize, usize)> {
    let g = families::bench_instance(m, seed);
    let gamma = g.local_edge_bound().gamma;
    let start = Instant::now();
    let c = edge_colour(&g, gamma)?;
    let took = start.elapsed();
    if c.validate().is_err() || !c.is_complete() {
        return Err(Error::invariant(format!("bench instance m={m} seed={seed} coloured improperly")));
    }
    Ok((took, c.colours_used(), gamma))
}

/// Runs `runs` instances per size on `jobs` threads.
pub fn ladder(ms: &[usize], runs: usize, seed: u64, jobs: usize) -> Result<Vec<BenchRow>> {
    if runs == 0 || jobs == 0 {
        return Err(Error::structure("runs and jobs must be positive"));
    }
    let tasks: Vec<(usize, usize)> = ms.iter().enumerate().flat_map(|(i, _)| (0..runs).map(move |r| (i, r))).collect();
    // (median time, colours, bound) per task
    type Slot = Option<Result<(Duration, usize, usize)>>;
    let results: Mutex<Vec<Slot>> = Mutex::new((0..tasks.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..jobs.min(tasks.len()) {
            s.spawn(|| loop {
                let t = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(i, r)) = tasks.get(t) else { break };
                let out = time_one(ms[i], seed.wrapping_add(r as u64));
                results.lock().expect("no panics while held")[t] = Some(out);
            });
        }
    });
    let mut per_size: Vec<Vec<(Duration, usize, usize)>> = vec![Vec::with_capacity(runs); ms.len()];
    for (t, res) in results.into_inner().expect("threads joined").into_iter().enumerate() {
        per_size[tasks[t].0].push(res.expect("every task ran")?);
    }
    let mut rows = Vec::with_capacity(ms.len());
    for (&m, runs_of) in ms.iter().zip(per_size) {
        let mut times: Vec<Duration> = runs_of.iter().map(|r| r.0).collect();
        times.sort();
        rows.push(BenchRow {
            m,
            n: (m / 2).max(2),
            runs,
            median: times[runs / 2],
            colours: runs_of.iter().map(|r| r.1).max().unwrap_or(0),
            gamma: runs_of.iter().map(|r| r.2).max().unwrap_or(0),
        });
    }
    Ok(rows)
}

/// `m,n,runs,median_ms,ratio,colours,gamma`; `ratio` is the median over
/// the previous row's median, empty on the first row.
pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("m,n,runs,median_ms,ratio,colours,gamma\n");
    for (i, r) in rows.iter().enumerate() {
        let ms = r.median.as_secs_f64() * 1e3;
        let ratio = if i == 0 {
            String::new()
        } else {
            format!("{:.3}", r.median.as_secs_f64() / rows[i - 1].median.as_secs_f64().max(1e-9))
        };
        let _ = writeln!(out, "{},{},{},{ms:.3},{ratio},{},{}", r.m, r.n, r.runs, r.colours, r.gamma);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ladder() {
        let rows = ladder(&[20, 40], 3, 7, 2).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.colours <= r.gamma && r.runs == 3));
        let csv = to_csv(&rows);
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.lines().nth(1).unwrap().starts_with("20,10,3,"));
        assert!(ladder(&[20], 0, 1, 1).is_err());
    }
}
