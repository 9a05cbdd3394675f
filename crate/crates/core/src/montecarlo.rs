//! Replications, grid cells, and bias/coverage aggregation.
//!
//! Every `(cell, replication)` pair is an independent task with its own
//! derived random stream. Tasks run on a rayon pool in any order; results are
//! collected by position and reduced sequentially in replication order, so
//! summaries are bit-identical for every worker count.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::dynamics::{self, TraitPanel};
use crate::error::{Error, Result};
use crate::estimator::{self, DyadRecord};
use crate::netgen;
use crate::network::DirectedNetwork;
use crate::params::{Centering, DegreeConvention, SimParams, T1DyadSet};
use crate::rng::derive_stream;

/// Retention intercepts of the reference grid (outermost loop).
pub const RETENTION_ETA0_LEVELS: [f64; 4] = [0.0, 0.5, 1.0, 1.85];
/// Formation homophily levels of the reference grid.
pub const FORMATION_ETA1_LEVELS: [f64; 5] = [0.0, 0.0125, 0.025, 0.0375, 0.05];
/// Retention homophily levels of the reference grid (innermost loop).
pub const RETENTION_ETA1_LEVELS: [f64; 3] = [0.0, 0.025, 0.05];

/// Everything one replication produces before estimation summaries.
#[derive(Clone, Debug)]
pub struct Simulation {
    pub panel: TraitPanel,
    pub net_t0: DirectedNetwork,
    pub net_t1: DirectedNetwork,
    pub dyads: Vec<DyadRecord>,
}

/// Runs the data-generating process for replication `rep` of cell `cell`.
pub fn simulate(params: &SimParams, cell: usize, rep: usize) -> Result<Simulation> {
    let mut rng = derive_stream(params.master_seed, cell as u64, rep as u64);
    let n = params.n;

    let y_t0 = dynamics::draw_traits(n, params.trait_mean, params.trait_sd, &mut rng);
    let net_t0 = {
        let d0 = netgen::pairwise_difference(&y_t0)?;
        let eta0 = match params.model.centering {
            Centering::Raw => params.eta0_form,
            Centering::Centered => {
                netgen::centered_intercept(params.eta0_form, params.eta1_form, d0.mean_off_diagonal())
            }
        };
        netgen::probit_ties(&d0, eta0, params.eta1_form, &mut rng)?
    };

    let shock = dynamics::draw_shocks(n, params.shock_sd, &mut rng)?;
    let y_t1 = dynamics::update_traits(&y_t0, &shock, &net_t0, params.b1)?;

    let net_t1 = {
        let d1 = netgen::pairwise_difference(&y_t1)?;
        let eta0 = match (params.model.centering, d1.mean_over(&net_t0)) {
            (Centering::Centered, Some(mean)) => netgen::centered_intercept(params.eta0_ret, params.eta1_ret, mean),
            _ => params.eta0_ret,
        };
        netgen::probit_ties(&d1, eta0, params.eta1_ret, &mut rng)?
    };

    let dyads = estimator::extract_dyads(&net_t0, &net_t1, &y_t0, &y_t1)?;
    Ok(Simulation {
        panel: TraitPanel::new(y_t0, shock, y_t1)?,
        net_t0,
        net_t1,
        dyads,
    })
}

/// Network and correlation diagnostics under every supported convention.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Diagnostics {
    pub n: usize,
    pub ties_t0: usize,
    pub ties_t1: usize,
    /// Ties present at both waves.
    pub retained: usize,
    pub corr_t0: Option<f64>,
    pub corr_t1_retained: Option<f64>,
    pub corr_t1_all_t1: Option<f64>,
    pub corr_t1_t0_ties: Option<f64>,
}

impl Diagnostics {
    /// Share of first-wave ties still present at the second wave.
    pub fn retention_rate(&self) -> Option<f64> {
        (self.ties_t0 > 0).then(|| self.retained as f64 / self.ties_t0 as f64)
    }

    pub fn fpp_t0(&self, degree: DegreeConvention) -> f64 {
        per_person(self.ties_t0, self.n, degree)
    }

    pub fn fpp_t1(&self, degree: DegreeConvention, set: T1DyadSet) -> f64 {
        let ties = match set {
            T1DyadSet::Retained => self.retained,
            T1DyadSet::AllT1 => self.ties_t1,
            T1DyadSet::T0Ties => self.ties_t0,
        };
        per_person(ties, self.n, degree)
    }

    pub fn corr_t1(&self, set: T1DyadSet) -> Option<f64> {
        match set {
            T1DyadSet::Retained => self.corr_t1_retained,
            T1DyadSet::AllT1 => self.corr_t1_all_t1,
            T1DyadSet::T0Ties => self.corr_t1_t0_ties,
        }
    }
}

fn per_person(ties: usize, n: usize, degree: DegreeConvention) -> f64 {
    let factor = match degree {
        DegreeConvention::Out => 1.0,
        DegreeConvention::Total => 2.0,
    };
    factor * ties as f64 / n as f64
}

pub fn diagnostics(
    net_t0: &DirectedNetwork,
    net_t1: &DirectedNetwork,
    y_t0: &[f64],
    y_t1: &[f64],
) -> Result<Diagnostics> {
    let n = net_t0.n();
    if net_t1.n() != n || y_t0.len() != n || y_t1.len() != n {
        return Err(Error::Dimension("diagnostics inputs disagree on n".into()));
    }
    let mut c0 = PairCorrelation::new(y_t0);
    let mut c1_ret = PairCorrelation::new(y_t1);
    let mut c1_all = PairCorrelation::new(y_t1);
    let mut c1_t0 = PairCorrelation::new(y_t1);
    let (mut ties_t0, mut ties_t1, mut retained) = (0, 0, 0);
    for i in 0..n {
        for (j, (&a, &b)) in net_t0.row(i).iter().zip(net_t1.row(i)).enumerate() {
            if a {
                ties_t0 += 1;
                c0.push(i, j);
                c1_t0.push(i, j);
            }
            if b {
                ties_t1 += 1;
                c1_all.push(i, j);
            }
            if a && b {
                retained += 1;
                c1_ret.push(i, j);
            }
        }
    }
    Ok(Diagnostics {
        n,
        ties_t0,
        ties_t1,
        retained,
        corr_t0: c0.finish(),
        corr_t1_retained: c1_ret.finish(),
        corr_t1_all_t1: c1_all.finish(),
        corr_t1_t0_ties: c1_t0.finish(),
    })
}

/// Pearson correlation of `(y[i], y[j])` over a set of ordered pairs.
struct PairCorrelation<'a> {
    y: &'a [f64],
    shift: f64,
    count: usize,
    sx: f64,
    sy: f64,
    sxx: f64,
    syy: f64,
    sxy: f64,
}

impl<'a> PairCorrelation<'a> {
    fn new(y: &'a [f64]) -> Self {
        let shift = if y.is_empty() {
            0.0
        } else {
            y.iter().sum::<f64>() / y.len() as f64
        };
        PairCorrelation {
            y,
            shift,
            count: 0,
            sx: 0.0,
            sy: 0.0,
            sxx: 0.0,
            syy: 0.0,
            sxy: 0.0,
        }
    }

    #[inline]
    fn push(&mut self, i: usize, j: usize) {
        let x = self.y[i] - self.shift;
        let y = self.y[j] - self.shift;
        self.count += 1;
        self.sx += x;
        self.sy += y;
        self.sxx += x * x;
        self.syy += y * y;
        self.sxy += x * y;
    }

    fn finish(&self) -> Option<f64> {
        if self.count < 2 {
            return None;
        }
        let m = self.count as f64;
        let vx = self.sxx - self.sx * self.sx / m;
        let vy = self.syy - self.sy * self.sy / m;
        let cxy = self.sxy - self.sx * self.sy / m;
        let denom = (vx * vy).sqrt();
        (denom > 0.0).then(|| (cxy / denom).clamp(-1.0, 1.0))
    }
}

/// Per-replication outcome.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReplicationStats {
    /// NaN when degenerate.
    pub beta3_hat: f64,
    /// NaN when degenerate.
    pub se_beta3: f64,
    pub covers_true: bool,
    pub corr_t0: Option<f64>,
    pub corr_t1: Option<f64>,
    pub friends_per_person_t0: f64,
    pub friends_per_person_t1: f64,
    pub retention_rate: Option<f64>,
    pub degenerate: bool,
    pub diagnostics: Diagnostics,
}

pub fn run_replication(params: &SimParams, cell: usize, rep: usize) -> Result<ReplicationStats> {
    let sim = simulate(params, cell, rep)?;
    let diag = diagnostics(&sim.net_t0, &sim.net_t1, sim.panel.y_t0(), sim.panel.y_t1())?;
    let (beta3_hat, se_beta3, covers_true, degenerate) =
        match estimator::fit_gee_clustered(&sim.dyads, params.model.cluster) {
            Ok(fit) => (fit.beta3(), fit.se_beta3(), estimator::covers(&fit, params.b1), false),
            Err(Error::CollinearDesign | Error::DegenerateReplication { .. }) => (f64::NAN, f64::NAN, false, true),
            Err(e) => return Err(e),
        };
    let model = &params.model;
    Ok(ReplicationStats {
        beta3_hat,
        se_beta3,
        covers_true,
        corr_t0: diag.corr_t0,
        corr_t1: diag.corr_t1(model.corr_t1_set),
        friends_per_person_t0: diag.fpp_t0(model.degree),
        friends_per_person_t1: diag.fpp_t1(model.degree, model.fpp_t1_set),
        retention_rate: diag.retention_rate(),
        degenerate,
        diagnostics: diag,
    })
}

/// Aggregate over one cell's replications.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CellSummary {
    /// Mean estimate minus the true `b1`, over non-degenerate replications.
    pub bias: f64,
    /// Share of non-degenerate replications whose interval covers `b1`.
    pub coverage: f64,
    pub mean_beta3: f64,
    /// Monte Carlo standard deviation of the estimates.
    pub sd_beta3: f64,
    pub mean_se: f64,
    pub corr_t0: Option<f64>,
    pub corr_t1: Option<f64>,
    pub fpp_t0: f64,
    pub fpp_t1: f64,
    pub retention_rate: Option<f64>,
    pub replications: usize,
    pub degenerate: usize,
}

impl CellSummary {
    /// Monte Carlo standard error of the bias.
    pub fn bias_mc_se(&self) -> f64 {
        let used = (self.replications - self.degenerate) as f64;
        self.sd_beta3 / used.sqrt()
    }
}

pub fn summarize(b1: f64, stats: &[ReplicationStats]) -> Result<CellSummary> {
    let fitted: Vec<&ReplicationStats> = stats.iter().filter(|s| !s.degenerate).collect();
    if fitted.is_empty() {
        return Err(Error::CellDegenerate(stats.len()));
    }
    let used = fitted.len() as f64;
    let mean_beta3 = fitted.iter().map(|s| s.beta3_hat).sum::<f64>() / used;
    let sd_beta3 = if fitted.len() > 1 {
        let ss: f64 = fitted.iter().map(|s| (s.beta3_hat - mean_beta3).powi(2)).sum();
        (ss / (used - 1.0)).sqrt()
    } else {
        0.0
    };
    let mean_se = fitted.iter().map(|s| s.se_beta3).sum::<f64>() / used;
    let covered = fitted.iter().filter(|s| s.covers_true).count();
    Ok(CellSummary {
        bias: mean_beta3 - b1,
        coverage: covered as f64 / used,
        mean_beta3,
        sd_beta3,
        mean_se,
        corr_t0: mean_defined(stats.iter().map(|s| s.corr_t0)),
        corr_t1: mean_defined(stats.iter().map(|s| s.corr_t1)),
        fpp_t0: mean(stats.iter().map(|s| s.friends_per_person_t0)),
        fpp_t1: mean(stats.iter().map(|s| s.friends_per_person_t1)),
        retention_rate: mean_defined(stats.iter().map(|s| s.retention_rate)),
        replications: stats.len(),
        degenerate: stats.len() - fitted.len(),
    })
}

pub(crate) fn mean(values: impl Iterator<Item = f64>) -> f64 {
    let (sum, count) = values.fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    sum / count as f64
}

pub(crate) fn mean_defined(values: impl Iterator<Item = Option<f64>>) -> Option<f64> {
    let (sum, count) = values.flatten().fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    (count > 0).then(|| sum / count as f64)
}

/// One cell of a grid. `index` keys the random streams, so a cell run on its
/// own reproduces the same cell inside a larger grid.
#[derive(Clone, Debug, PartialEq)]
pub struct GridCell {
    pub index: usize,
    pub params: SimParams,
}

/// The 60-cell reference grid with `base` supplying everything but the three
/// varied coefficients. Cell `k` is reference row `k + 1`.
pub fn reference_grid(base: &SimParams) -> Vec<GridCell> {
    let mut cells = Vec::with_capacity(60);
    for &eta0_ret in &RETENTION_ETA0_LEVELS {
        for &eta1_form in &FORMATION_ETA1_LEVELS {
            for &eta1_ret in &RETENTION_ETA1_LEVELS {
                cells.push(GridCell {
                    index: cells.len(),
                    params: SimParams {
                        eta0_ret,
                        eta1_form,
                        eta1_ret,
                        ..base.clone()
                    },
                });
            }
        }
    }
    cells
}

/// Execution settings shared by grid runs.
#[derive(Clone, Copy, Default)]
pub struct RunOptions<'a> {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Called as `(finished, total)` after every replication.
    pub progress: Option<&'a (dyn Fn(usize, usize) + Sync)>,
}

impl std::fmt::Debug for RunOptions<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RunOptions")
            .field("threads", &self.threads)
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

impl RunOptions<'_> {
    pub(crate) fn install<R: Send>(&self, job: impl FnOnce() -> R + Send) -> Result<R> {
        match self.threads {
            None => Ok(job()),
            Some(threads) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads.max(1))
                    .build()
                    .map_err(|e| Error::ThreadPool(e.to_string()))?;
                Ok(pool.install(job))
            }
        }
    }
}

/// Runs every replication of every cell, grouped by cell in input order.
pub fn run_grid_replications(cells: &[GridCell], opts: &RunOptions<'_>) -> Result<Vec<Result<Vec<ReplicationStats>>>> {
    let checked: Vec<Result<&GridCell>> = cells.iter().map(|c| c.params.clone().validate().map(|_| c)).collect();
    let tasks: Vec<(usize, usize)> = checked
        .iter()
        .enumerate()
        .filter_map(|(pos, c)| c.as_ref().ok().map(|c| (pos, c.params.replications)))
        .flat_map(|(pos, reps)| (0..reps).map(move |rep| (pos, rep)))
        .collect();
    let total = tasks.len();
    let done = AtomicUsize::new(0);

    let results: Vec<Result<ReplicationStats>> = opts.install(|| {
        tasks
            .par_iter()
            .map(|&(pos, rep)| {
                let cell = &cells[pos];
                let out = run_replication(&cell.params, cell.index, rep);
                if let Some(progress) = opts.progress {
                    progress(done.fetch_add(1, Ordering::Relaxed) + 1, total);
                }
                out
            })
            .collect()
    })?;

    let mut results = results.into_iter();
    Ok(checked
        .into_iter()
        .map(|c| {
            let cell = c?;
            let stats: Vec<ReplicationStats> =
                results.by_ref().take(cell.params.replications).collect::<Result<_>>()?;
            Ok(stats)
        })
        .collect())
}

/// One summary per cell, in input order. A failing cell does not stop the others.
pub fn run_grid(cells: &[GridCell], opts: &RunOptions<'_>) -> Result<Vec<Result<CellSummary>>> {
    let per_cell = run_grid_replications(cells, opts)?;
    Ok(per_cell
        .into_iter()
        .zip(cells)
        .map(|(stats, cell)| stats.and_then(|s| summarize(cell.params.b1, &s)))
        .collect())
}

/// Runs a single cell on the global pool.
pub fn run_cell(params: &SimParams, cell_index: usize) -> Result<CellSummary> {
    let cell = GridCell {
        index: cell_index,
        params: params.clone(),
    };
    run_grid(std::slice::from_ref(&cell), &RunOptions::default())?
        .pop()
        .expect("one cell in, one summary out")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(n: usize, reps: usize) -> SimParams {
        SimParams {
            n,
            replications: reps,
            ..SimParams::default()
        }
    }

    #[test]
    fn reference_grid_layout() {
        let grid = reference_grid(&SimParams::default());
        assert_eq!(grid.len(), 60);
        let row = |k: usize| &grid[k - 1].params;
        assert_eq!((row(1).eta0_ret, row(1).eta1_form, row(1).eta1_ret), (0.0, 0.0, 0.0));
        assert_eq!((row(3).eta0_ret, row(3).eta1_form, row(3).eta1_ret), (0.0, 0.0, 0.05));
        assert_eq!(
            (row(15).eta0_ret, row(15).eta1_form, row(15).eta1_ret),
            (0.0, 0.05, 0.05)
        );
        assert_eq!((row(16).eta0_ret, row(16).eta1_form, row(16).eta1_ret), (0.5, 0.0, 0.0));
        assert_eq!(
            (row(60).eta0_ret, row(60).eta1_form, row(60).eta1_ret),
            (1.85, 0.05, 0.05)
        );
        assert!(grid.iter().enumerate().all(|(k, c)| c.index == k));
    }

    #[test]
    fn identical_networks_retain_everything() {
        let net = DirectedNetwork::from_edges(4, &[(0, 1), (1, 2), (3, 0)]).unwrap();
        let y = [1.0, 5.0, 2.0, 7.0];
        let d = diagnostics(&net, &net, &y, &y).unwrap();
        assert_eq!(d.retention_rate(), Some(1.0));
        assert_eq!(d.fpp_t0(DegreeConvention::Out), 0.75);
        assert_eq!(d.fpp_t0(DegreeConvention::Total), 1.5);
    }

    #[test]
    fn empty_first_wave_has_no_retention() {
        let net = DirectedNetwork::empty(3);
        let y = [1.0, 2.0, 3.0];
        let d = diagnostics(&net, &net, &y, &y).unwrap();
        assert_eq!(d.retention_rate(), None);
        assert_eq!(d.corr_t0, None);
    }

    #[test]
    fn pair_correlation_matches_direct_formula() {
        let y = [3.0, 9.0, 4.0, 1.0, 6.0];
        let pairs = [(0, 1), (1, 2), (2, 4), (3, 0), (4, 3), (1, 3)];
        let mut acc = PairCorrelation::new(&y);
        for &(i, j) in &pairs {
            acc.push(i, j);
        }
        let xs: Vec<f64> = pairs.iter().map(|&(i, _)| y[i]).collect();
        let ys: Vec<f64> = pairs.iter().map(|&(_, j)| y[j]).collect();
        let mx = xs.iter().sum::<f64>() / 6.0;
        let my = ys.iter().sum::<f64>() / 6.0;
        let cov: f64 = xs.iter().zip(&ys).map(|(a, b)| (a - mx) * (b - my)).sum();
        let vx: f64 = xs.iter().map(|a| (a - mx).powi(2)).sum();
        let vy: f64 = ys.iter().map(|b| (b - my).powi(2)).sum();
        let want = cov / (vx * vy).sqrt();
        assert!((acc.finish().unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn no_shock_forces_collinearity() {
        let params = SimParams {
            shock_sd: 0.0,
            ..small(60, 1)
        };
        let sim = simulate(&params, 0, 0).unwrap();
        assert_eq!(sim.panel.y_t0(), sim.panel.y_t1());
        let stats = run_replication(&params, 0, 0).unwrap();
        assert!(stats.degenerate);
        assert!(stats.beta3_hat.is_nan());
    }

    #[test]
    fn replication_is_reproducible() {
        let p = small(80, 1);
        assert_eq!(run_replication(&p, 3, 4).unwrap(), run_replication(&p, 3, 4).unwrap());
    }

    #[test]
    fn all_degenerate_cell_is_an_error() {
        let params = SimParams {
            shock_sd: 0.0,
            ..small(30, 3)
        };
        assert!(matches!(run_cell(&params, 0), Err(Error::CellDegenerate(3))));
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let cells: Vec<GridCell> = reference_grid(&small(60, 6))
            .into_iter()
            .filter(|c| [0, 2, 14].contains(&c.index))
            .collect();
        let one = run_grid(
            &cells,
            &RunOptions {
                threads: Some(1),
                progress: None,
            },
        )
        .unwrap();
        let three = run_grid(
            &cells,
            &RunOptions {
                threads: Some(3),
                progress: None,
            },
        )
        .unwrap();
        assert_eq!(format!("{one:?}"), format!("{three:?}"));
    }

    #[test]
    fn invalid_cell_reported_in_place() {
        let mut cells = reference_grid(&small(40, 2));
        cells.truncate(2);
        cells[0].params.trait_sd = 0.0;
        let out = run_grid(&cells, &RunOptions::default()).unwrap();
        assert!(matches!(out[0], Err(Error::InvalidParam { field: "trait_sd", .. })));
        assert!(out[1].is_ok());
    }
}
