//! Runs a few reference rows at a chosen replication count and prints them
//! next to the published values.
//!
//! cargo run --release -p unfriend --example reference_rows -- 100 1 3 15 60

use std::time::Instant;

use unfriend::{reference, reference_grid, run_grid, RunOptions, SimParams};

fn main() -> unfriend::Result<()> {
    let mut args = std::env::args().skip(1);
    let reps: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(50);
    let rows: Vec<usize> = args.filter_map(|a| a.parse().ok()).collect();
    let rows = if rows.is_empty() { vec![1, 3, 15, 60] } else { rows };

    let base = SimParams {
        replications: reps,
        ..SimParams::default()
    };
    let cells: Vec<_> = reference_grid(&base)
        .into_iter()
        .filter(|c| rows.contains(&(c.index + 1)))
        .collect();
    let start = Instant::now();
    let out = run_grid(&cells, &RunOptions::default())?;
    println!("{} reps x {} cells in {:.1?}", reps, cells.len(), start.elapsed());
    println!("row   bias    cov  corr0  corr1   fpp0  fpp1   ret | published");
    for (cell, summary) in cells.iter().zip(out) {
        let s = summary?;
        let r = reference::row(cell.index + 1);
        println!(
            "{:>3} {:>6.3} {:>6.3} {:>6.3} {:>6.3} {:>6.2} {:>5.2} {:>5.3} | {:>5.2} {:>4.2} {:>5.2} {:>5.2} {:>4.1} {:>4.1} {:>4.2}",
            r.row,
            s.bias,
            s.coverage,
            s.corr_t0.unwrap_or(f64::NAN),
            s.corr_t1.unwrap_or(f64::NAN),
            s.fpp_t0,
            s.fpp_t1,
            s.retention_rate.unwrap_or(f64::NAN),
            r.bias,
            r.coverage,
            r.corr_t0,
            r.corr_t1,
            r.fpp_t0,
            r.fpp_t1,
            r.retention_rate,
        );
    }
    Ok(())
}
