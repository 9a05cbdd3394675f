//! Selection of the conventions the published description leaves open.
//!
//! Three questions are settled by simulating reference cells and scoring each
//! candidate by its squared error against the published columns:
//!
//! 1. Formation intercept (`-2.5` or `-2.75`; the published sources give
//!    both) together with the degree convention (ties sent per person, or
//!    ties sent plus received), scored on friends/person at the first wave
//!    and on the retention rate in the cells without homophily.
//! 2. Whether the dissimilarity is used raw or mean-centered, scored on
//!    first-wave degree, correlation, and retention in the cells with the
//!    strongest formation homophily. The raw index cannot raise tie
//!    probability with homophily, while the published degree column rises.
//! 3. Which dyad set the second-wave degree and correlation columns are
//!    computed over, scored separately for each column.
//!
//! The crate's defaults ([`ModelOptions::default`] and
//! [`CALIBRATED_FORMATION_ETA0`]) are the outcome of this procedure.

use std::fmt::Write as _;

use crate::error::Result;
use crate::montecarlo::{self, mean, mean_defined, reference_grid, GridCell, ReplicationStats, RunOptions};
use crate::params::{Centering, DegreeConvention, ModelOptions, SimParams, T1DyadSet, CALIBRATED_FORMATION_ETA0};
use crate::reference::{self, ReferenceRow};

/// Candidate formation intercepts.
pub const FORMATION_ETA0_CANDIDATES: [f64; 2] = [-2.5, -2.75];
/// Cells with no homophily at either stage, one per retention intercept.
pub const NULL_ROWS: [usize; 4] = [1, 16, 31, 46];
/// Cells with the strongest formation homophily.
pub const HOMOPHILY_ROWS: [usize; 4] = [13, 15, 58, 60];

const DEGREES: [DegreeConvention; 2] = [DegreeConvention::Out, DegreeConvention::Total];
const CENTERINGS: [Centering; 2] = [Centering::Raw, Centering::Centered];
const T1_SETS: [T1DyadSet; 3] = [T1DyadSet::Retained, T1DyadSet::AllT1, T1DyadSet::T0Ties];

#[derive(Clone, Debug, PartialEq)]
pub struct CalibrationReport {
    pub replications: usize,
    pub formation_eta0: f64,
    pub options: ModelOptions,
    /// `(intercept, degree convention, squared error)`.
    pub intercept_scores: Vec<(f64, DegreeConvention, f64)>,
    pub centering_scores: Vec<(Centering, f64)>,
    pub fpp_t1_scores: Vec<(T1DyadSet, f64)>,
    pub corr_t1_scores: Vec<(T1DyadSet, f64)>,
    /// Friends/person at the first wave in each null cell under the chosen
    /// intercept and convention, as `(row, value)`.
    pub null_fpp_t0: Vec<(usize, f64)>,
}

impl CalibrationReport {
    /// Whether the selection agrees with the crate's built-in defaults.
    pub fn matches_defaults(&self) -> bool {
        self.formation_eta0 == CALIBRATED_FORMATION_ETA0 && self.options == ModelOptions::default()
    }

    /// Plain-text `key=value` report.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "calibration.replications={}", self.replications);
        let _ = writeln!(
            out,
            "calibration.note=published sources disagree on the formation intercept \
             (-2.5 in the text, -2.75 in the results table footer) and do not state the \
             friends/person convention; both were simulated and scored"
        );
        for (eta0, degree, sse) in &self.intercept_scores {
            let _ = writeln!(out, "calibration.score.intercept[{eta0}:{degree}]={sse:.6}");
        }
        for (c, sse) in &self.centering_scores {
            let _ = writeln!(out, "calibration.score.centering[{c}]={sse:.6}");
        }
        for (s, sse) in &self.fpp_t1_scores {
            let _ = writeln!(out, "calibration.score.fpp_t1_set[{s}]={sse:.6}");
        }
        for (s, sse) in &self.corr_t1_scores {
            let _ = writeln!(out, "calibration.score.corr_t1_set[{s}]={sse:.6}");
        }
        for (row, fpp) in &self.null_fpp_t0 {
            let _ = writeln!(out, "calibration.fpp_t0[row {row}]={fpp:.3}");
        }
        let _ = writeln!(out, "calibration.chosen.formation_eta0={}", self.formation_eta0);
        out.push_str(&render_options(&self.options, "calibration.chosen."));
        let _ = writeln!(out, "calibration.matches_defaults={}", self.matches_defaults());
        out
    }
}

/// `key=value` lines describing a set of model conventions.
pub fn render_options(options: &ModelOptions, prefix: &str) -> String {
    format!(
        "{prefix}degree={}\n{prefix}centering={}\n{prefix}fpp_t1_set={}\n{prefix}corr_t1_set={}\n{prefix}cluster={}\n",
        options.degree, options.centering, options.fpp_t1_set, options.corr_t1_set, options.cluster
    )
}

/// Cell-level means of every diagnostic variant.
struct CellMeans {
    reference: &'static ReferenceRow,
    stats: Vec<ReplicationStats>,
}

impl CellMeans {
    fn fpp_t0(&self, degree: DegreeConvention) -> f64 {
        mean(self.stats.iter().map(|s| s.diagnostics.fpp_t0(degree)))
    }

    fn fpp_t1(&self, degree: DegreeConvention, set: T1DyadSet) -> f64 {
        mean(self.stats.iter().map(|s| s.diagnostics.fpp_t1(degree, set)))
    }

    fn retention(&self) -> f64 {
        mean_defined(self.stats.iter().map(|s| s.diagnostics.retention_rate())).unwrap_or(f64::NAN)
    }

    fn corr_t0(&self) -> f64 {
        mean_defined(self.stats.iter().map(|s| s.diagnostics.corr_t0)).unwrap_or(f64::NAN)
    }

    fn corr_t1(&self, set: T1DyadSet) -> f64 {
        mean_defined(self.stats.iter().map(|s| s.diagnostics.corr_t1(set))).unwrap_or(f64::NAN)
    }
}

fn run_rows(base: &SimParams, rows: &[usize], opts: &RunOptions<'_>) -> Result<Vec<CellMeans>> {
    let cells: Vec<GridCell> = reference_grid(base)
        .into_iter()
        .filter(|c| rows.contains(&(c.index + 1)))
        .collect();
    let runs = montecarlo::run_grid_replications(&cells, opts)?;
    cells
        .iter()
        .zip(runs)
        .map(|(cell, stats)| {
            Ok(CellMeans {
                reference: reference::row(cell.index + 1),
                stats: stats?,
            })
        })
        .collect()
}

fn sq(x: f64) -> f64 {
    x * x
}

fn argmin<T: Copy>(scores: &[(T, f64)]) -> T {
    scores
        .iter()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .map(|s| s.0)
        .expect("nonempty candidate list")
}

/// Runs the calibration with `replications` per cell. `base` supplies the
/// population and seed; its model options and formation intercept are ignored.
pub fn calibrate(base: &SimParams, replications: usize, opts: &RunOptions<'_>) -> Result<CalibrationReport> {
    let base = SimParams {
        replications,
        model: ModelOptions::default(),
        ..base.clone()
    };

    // 1. intercept x degree convention on the null cells
    let mut null_runs = Vec::new();
    let mut intercept_scores = Vec::new();
    for &eta0 in &FORMATION_ETA0_CANDIDATES {
        let runs = run_rows(
            &SimParams {
                eta0_form: eta0,
                ..base.clone()
            },
            &NULL_ROWS,
            opts,
        )?;
        for &degree in &DEGREES {
            let sse: f64 = runs
                .iter()
                .map(|c| sq(c.fpp_t0(degree) - c.reference.fpp_t0) + sq(c.retention() - c.reference.retention_rate))
                .sum();
            intercept_scores.push(((eta0, degree), sse));
        }
        null_runs.push(runs);
    }
    let (formation_eta0, degree) = argmin(&intercept_scores);
    let null_runs = null_runs.swap_remove(
        FORMATION_ETA0_CANDIDATES
            .iter()
            .position(|&e| e == formation_eta0)
            .expect("chosen from candidates"),
    );

    // 2. raw vs centered dissimilarity on the homophily cells
    let mut centering_scores = Vec::new();
    let mut homophily_runs = Vec::new();
    for &centering in &CENTERINGS {
        let params = SimParams {
            eta0_form: formation_eta0,
            model: ModelOptions {
                centering,
                ..base.model
            },
            ..base.clone()
        };
        let runs = run_rows(&params, &HOMOPHILY_ROWS, opts)?;
        let sse: f64 = runs
            .iter()
            .map(|c| {
                sq(c.fpp_t0(degree) - c.reference.fpp_t0)
                    + sq(c.retention() - c.reference.retention_rate)
                    + sq(c.corr_t0() - c.reference.corr_t0)
            })
            .sum();
        centering_scores.push((centering, sse));
        homophily_runs.push(runs);
    }
    let centering = argmin(&centering_scores);
    let homophily_runs = homophily_runs.swap_remove(
        CENTERINGS
            .iter()
            .position(|&c| c == centering)
            .expect("chosen from candidates"),
    );

    // 3. second-wave dyad sets, scored over every cell run under the choices so far
    let all_runs: Vec<&CellMeans> = null_runs.iter().chain(&homophily_runs).collect();
    let fpp_t1_scores: Vec<(T1DyadSet, f64)> = T1_SETS
        .iter()
        .map(|&set| {
            let sse = all_runs
                .iter()
                .map(|c| sq(c.fpp_t1(degree, set) - c.reference.fpp_t1))
                .sum();
            (set, sse)
        })
        .collect();
    let corr_t1_scores: Vec<(T1DyadSet, f64)> = T1_SETS
        .iter()
        .map(|&set| {
            let sse = all_runs.iter().map(|c| sq(c.corr_t1(set) - c.reference.corr_t1)).sum();
            (set, sse)
        })
        .collect();

    Ok(CalibrationReport {
        replications,
        formation_eta0,
        options: ModelOptions {
            centering,
            degree,
            fpp_t1_set: argmin(&fpp_t1_scores),
            corr_t1_set: argmin(&corr_t1_scores),
            cluster: base.model.cluster,
        },
        intercept_scores: intercept_scores
            .into_iter()
            .map(|((eta0, degree), sse)| (eta0, degree, sse))
            .collect(),
        centering_scores,
        fpp_t1_scores,
        corr_t1_scores,
        null_fpp_t0: null_runs.iter().map(|c| (c.reference.row, c.fpp_t0(degree))).collect(),
    })
}
