//! Grid configuration files.
//!
//! The format is TOML with five optional sections. Scalars may be given
//! wherever a list is accepted. See the guide's configuration chapter for the
//! full grammar; a complete example:
//!
//! ```toml
//! [population]
//! n = 1000
//! trait_mean = 50.0
//! trait_sd = 10.0
//!
//! [formation]
//! eta0 = -2.5
//! eta1 = [0.0, 0.025, 0.05]
//!
//! [retention]
//! eta0 = [0.0, 1.0]
//! eta1 = 0.05
//!
//! [influence]
//! b1 = 0.0
//! shock_sd = 5.0
//!
//! [execution]
//! replications = 200
//! seed = 7
//! threads = 4
//!
//! [model]
//! centering = "centered"
//! degree = "out"
//! fpp_t1_set = "retained"
//! corr_t1_set = "t0-ties"
//! cluster = "ego"
//! ```
//!
//! Cells are the Cartesian product of the formation intercepts, `b1` values,
//! retention intercepts, formation homophily levels, and retention homophily
//! levels, in that nesting order (last varies fastest). Axes that are not
//! given fall back to the reference grid levels (retention intercept,
//! formation and retention homophily), the calibrated formation intercept,
//! and `b1 = 0`. A file without a `formation`, `retention`, or `influence`
//! section defines no cells and is rejected.

use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::montecarlo::{GridCell, FORMATION_ETA1_LEVELS, RETENTION_ETA0_LEVELS, RETENTION_ETA1_LEVELS};
use crate::params::{SimParams, CALIBRATED_FORMATION_ETA0};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    population: Option<RawPopulation>,
    formation: Option<RawStage>,
    retention: Option<RawStage>,
    influence: Option<RawInfluence>,
    execution: Option<RawExecution>,
    model: Option<RawModel>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPopulation {
    n: Option<usize>,
    trait_mean: Option<f64>,
    trait_sd: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStage {
    eta0: Option<OneOrMany>,
    eta1: Option<OneOrMany>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInfluence {
    b1: Option<OneOrMany>,
    shock_sd: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExecution {
    replications: Option<usize>,
    seed: Option<u64>,
    threads: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    centering: Option<String>,
    degree: Option<String>,
    fpp_t1_set: Option<String>,
    corr_t1_set: Option<String>,
    cluster: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(f64),
    Many(Vec<f64>),
}

impl OneOrMany {
    fn into_vec(self) -> Vec<f64> {
        match self {
            OneOrMany::One(v) => vec![v],
            OneOrMany::Many(v) => v,
        }
    }
}

/// Levels along each varied axis.
#[derive(Clone, Debug, PartialEq)]
pub struct GridAxes {
    pub formation_eta0: Vec<f64>,
    pub b1: Vec<f64>,
    pub retention_eta0: Vec<f64>,
    pub formation_eta1: Vec<f64>,
    pub retention_eta1: Vec<f64>,
}

impl GridAxes {
    pub fn cell_count(&self) -> usize {
        self.formation_eta0.len()
            * self.b1.len()
            * self.retention_eta0.len()
            * self.formation_eta1.len()
            * self.retention_eta1.len()
    }
}

/// A parsed configuration: fixed parameters plus grid axes.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// Everything that does not vary across cells.
    pub base: SimParams,
    pub axes: GridAxes,
    pub threads: Option<usize>,
}

impl FromStr for RunConfig {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_config(text)
    }
}

pub fn parse_config(text: &str) -> Result<RunConfig> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| {
        let line = e
            .span()
            .map(|span| text[..span.start.min(text.len())].matches('\n').count() + 1)
            .unwrap_or(0);
        Error::Config {
            line,
            message: e.message().trim().to_string(),
        }
    })?;
    if raw.formation.is_none() && raw.retention.is_none() && raw.influence.is_none() {
        return Err(Error::NoCells);
    }

    let mut base = SimParams::default();
    let population = raw.population.unwrap_or_default();
    set(&mut base.n, population.n);
    set(&mut base.trait_mean, population.trait_mean);
    set(&mut base.trait_sd, population.trait_sd);

    let formation = raw.formation.unwrap_or_default();
    let retention = raw.retention.unwrap_or_default();
    let influence = raw.influence.unwrap_or_default();
    set(&mut base.shock_sd, influence.shock_sd);

    let execution = raw.execution.unwrap_or_default();
    set(&mut base.replications, execution.replications);
    set(&mut base.master_seed, execution.seed);

    let model = raw.model.unwrap_or_default();
    parse_into(&mut base.model.centering, model.centering, "model.centering")?;
    parse_into(&mut base.model.degree, model.degree, "model.degree")?;
    parse_into(&mut base.model.fpp_t1_set, model.fpp_t1_set, "model.fpp_t1_set")?;
    parse_into(&mut base.model.corr_t1_set, model.corr_t1_set, "model.corr_t1_set")?;
    parse_into(&mut base.model.cluster, model.cluster, "model.cluster")?;

    let axis = |v: Option<OneOrMany>, default: &[f64]| v.map_or_else(|| default.to_vec(), OneOrMany::into_vec);
    let axes = GridAxes {
        formation_eta0: axis(formation.eta0, &[CALIBRATED_FORMATION_ETA0]),
        b1: axis(influence.b1, &[0.0]),
        retention_eta0: axis(retention.eta0, &RETENTION_ETA0_LEVELS),
        formation_eta1: axis(formation.eta1, &FORMATION_ETA1_LEVELS),
        retention_eta1: axis(retention.eta1, &RETENTION_ETA1_LEVELS),
    };
    if axes.cell_count() == 0 {
        return Err(Error::NoCells);
    }
    Ok(RunConfig {
        base,
        axes,
        threads: execution.threads,
    })
}

fn set<T>(slot: &mut T, value: Option<T>) {
    if let Some(v) = value {
        *slot = v;
    }
}

fn parse_into<T: FromStr<Err = String>>(slot: &mut T, value: Option<String>, key: &'static str) -> Result<()> {
    if let Some(text) = value {
        *slot = text.parse().map_err(|reason| Error::param(key, reason))?;
    }
    Ok(())
}

impl RunConfig {
    /// Expands the axes into validated cells, numbered from 0.
    pub fn cells(&self) -> Result<Vec<GridCell>> {
        let a = &self.axes;
        let mut cells = Vec::with_capacity(a.cell_count());
        for &eta0_form in &a.formation_eta0 {
            for &b1 in &a.b1 {
                for &eta0_ret in &a.retention_eta0 {
                    for &eta1_form in &a.formation_eta1 {
                        for &eta1_ret in &a.retention_eta1 {
                            let params = SimParams {
                                eta0_form,
                                b1,
                                eta0_ret,
                                eta1_form,
                                eta1_ret,
                                ..self.base.clone()
                            }
                            .validate()?;
                            cells.push(GridCell {
                                index: cells.len(),
                                params,
                            });
                        }
                    }
                }
            }
        }
        if cells.is_empty() {
            return Err(Error::NoCells);
        }
        Ok(cells)
    }
}
