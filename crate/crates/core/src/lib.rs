//! Monte Carlo audit of the dyadic peer-influence regression.
//!
//! A population draws a trait, forms directed friendships through a probit
//! model with homophily, receives independent shocks, and then redraws its
//! ties with (possibly) homophilous retention. Regressing an ego's new trait
//! on its own and its alter's lagged and current traits, over retained
//! friendships only, produces a contagion estimate that should be zero
//! because no influence was simulated. This crate measures how far from zero
//! it lands and how often the nominal 95% interval covers the truth.
//!
//! ```
//! use unfriend::{run_cell, SimParams};
//!
//! let params = SimParams { n: 150, replications: 4, ..SimParams::default() };
//! let summary = run_cell(&params.validate()?, 0)?;
//! assert!((0.0..=1.0).contains(&summary.coverage));
//! # Ok::<(), unfriend::Error>(())
//! ```
//!
//! The guide in `book/` walks through the model, the estimator, and the
//! command-line tool; its code listings are compiled as doc-tests of this
//! crate.

pub mod calibration;
pub mod config;
pub mod dynamics;
pub mod error;
pub mod estimator;
mod linalg;
pub mod montecarlo;
pub mod netgen;
pub mod network;
pub mod normal;
pub mod params;
pub mod reference;
pub mod report;
pub mod rng;

pub use dynamics::{draw_shocks, draw_traits, update_traits, TraitPanel};
pub use error::{Error, Result};
pub use estimator::{covers, extract_dyads, fit_gee, fit_gee_clustered, ClusterKey, DyadRecord, FitResult};
pub use montecarlo::{
    diagnostics, reference_grid, run_cell, run_grid, run_replication, simulate, CellSummary, Diagnostics, GridCell,
    ReplicationStats, RunOptions,
};
pub use netgen::{pairwise_difference, probit_ties, tie_probability, DifferenceMatrix};
pub use network::DirectedNetwork;
pub use params::{Centering, DegreeConvention, ModelOptions, SimParams, T1DyadSet};
pub use rng::{derive_stream, RngStream};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/model.md")]
    mod model {}
    #[doc = include_str!("../../../book/src/ties.md")]
    mod ties {}
    #[doc = include_str!("../../../book/src/estimator.md")]
    mod estimator {}
    #[doc = include_str!("../../../book/src/monte-carlo.md")]
    mod monte_carlo {}
    #[doc = include_str!("../../../book/src/calibration.md")]
    mod calibration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/config.md")]
    mod config {}
}
