//! Dyadic regression of ego outcomes on ego and alter traits.
//!
//! The model is
//!
//! ```text
//! y_i,t1 = β₀ + β₁·y_i,t0 + β₂·y_j,t0 + β₃·y_j,t1 + ε
//! ```
//!
//! over every ordered pair `(i, j)` tied at both waves. It is fitted the way
//! a GEE with identity link and independent working correlation fits it:
//! the point estimates are ordinary least squares (computed here by
//! Householder QR), and inference uses the cluster-robust sandwich
//!
//! ```text
//! V = (XᵀX)⁻¹ · Σ_g (X_gᵀ r_g)(X_gᵀ r_g)ᵀ · (XᵀX)⁻¹
//! ```
//!
//! with no small-sample correction. `β₃` is the contagion coefficient.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Square};
use crate::network::DirectedNetwork;

/// Two-sided 95% normal quantile used for every interval.
pub const Z95: f64 = 1.96;
/// Fewer retained rows than this makes a replication degenerate.
pub const MIN_DYADS: usize = 5;
/// Fewer distinct clusters than this makes a replication degenerate.
pub const MIN_CLUSTERS: usize = 2;
/// Relative singular-value floor below which the design counts as collinear.
pub const RANK_TOLERANCE: f64 = 1e-10;

const P: usize = 4;

/// One regression row.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DyadRecord {
    pub ego: usize,
    pub alter: usize,
    pub y_i_t0: f64,
    pub y_i_t1: f64,
    pub y_j_t0: f64,
    pub y_j_t1: f64,
}

impl DyadRecord {
    #[inline]
    fn regressors(&self) -> [f64; P] {
        [1.0, self.y_i_t0, self.y_j_t0, self.y_j_t1]
    }
}

/// Unit whose rows may be correlated in the sandwich.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClusterKey {
    Ego,
    /// `{i, j}` regardless of direction, so both rows of a mutual pair share a cluster.
    UnorderedDyad,
}

impl ClusterKey {
    fn key(self, d: &DyadRecord) -> (usize, usize) {
        match self {
            ClusterKey::Ego => (d.ego, 0),
            ClusterKey::UnorderedDyad => (d.ego.min(d.alter), d.ego.max(d.alter)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    /// `(β₀, β₁, β₂, β₃)`.
    pub beta: [f64; P],
    pub robust_cov: Square<P>,
    pub ci95_beta3: (f64, f64),
    pub n_dyads: usize,
    pub n_clusters: usize,
}

impl FitResult {
    pub fn beta3(&self) -> f64 {
        self.beta[3]
    }

    pub fn se_beta3(&self) -> f64 {
        self.robust_cov[3][3].max(0.0).sqrt()
    }
}

/// Rows for every ordered pair tied in both networks, row-major by `(ego, alter)`.
pub fn extract_dyads(
    net_t0: &DirectedNetwork,
    net_t1: &DirectedNetwork,
    y_t0: &[f64],
    y_t1: &[f64],
) -> Result<Vec<DyadRecord>> {
    let n = net_t0.n();
    if net_t1.n() != n || y_t0.len() != n || y_t1.len() != n {
        return Err(Error::Dimension(format!(
            "networks {} and {}, traits {} and {}",
            n,
            net_t1.n(),
            y_t0.len(),
            y_t1.len()
        )));
    }
    let mut rows = Vec::new();
    for i in 0..n {
        for (j, (&a, &b)) in net_t0.row(i).iter().zip(net_t1.row(i)).enumerate() {
            if a && b {
                rows.push(DyadRecord {
                    ego: i,
                    alter: j,
                    y_i_t0: y_t0[i],
                    y_i_t1: y_t1[i],
                    y_j_t0: y_t0[j],
                    y_j_t1: y_t1[j],
                });
            }
        }
    }
    Ok(rows)
}

/// Fit with ego clusters.
pub fn fit_gee(dyads: &[DyadRecord]) -> Result<FitResult> {
    fit_gee_clustered(dyads, ClusterKey::Ego)
}

pub fn fit_gee_clustered(dyads: &[DyadRecord], cluster: ClusterKey) -> Result<FitResult> {
    let m = dyads.len();
    let mut clusters: BTreeMap<(usize, usize), [f64; P]> = BTreeMap::new();
    for d in dyads {
        clusters.entry(cluster.key(d)).or_insert([0.0; P]);
    }
    if m < MIN_DYADS || clusters.len() < MIN_CLUSTERS {
        return Err(Error::DegenerateReplication {
            rows: m,
            clusters: clusters.len(),
        });
    }

    let mut cols: [Vec<f64>; P] = std::array::from_fn(|_| Vec::with_capacity(m));
    for d in dyads {
        for (col, x) in cols.iter_mut().zip(d.regressors()) {
            col.push(x);
        }
    }
    let mut qty: Vec<f64> = dyads.iter().map(|d| d.y_i_t1).collect();
    let r = linalg::householder_qr(&mut cols, &mut qty);

    let sv = linalg::singular_values(&r);
    if sv.iter().any(|s| s.is_nan()) || sv[P - 1] < RANK_TOLERANCE * sv[0] {
        return Err(Error::CollinearDesign);
    }
    let beta = linalg::back_substitute(&r, &qty);

    // Scores per cluster: X_gᵀ r_g.
    for d in dyads {
        let x = d.regressors();
        let fitted: f64 = x.iter().zip(&beta).map(|(a, b)| a * b).sum();
        let resid = d.y_i_t1 - fitted;
        let score = clusters.get_mut(&cluster.key(d)).expect("cluster registered");
        for (s, xk) in score.iter_mut().zip(x) {
            *s += xk * resid;
        }
    }
    let mut meat = [[0.0; P]; P];
    for score in clusters.values() {
        for a in 0..P {
            for b in 0..P {
                meat[a][b] += score[a] * score[b];
            }
        }
    }

    // (XᵀX)⁻¹ = R⁻¹ R⁻ᵀ
    let r_inv = linalg::upper_inverse(&r);
    let bread = linalg::mat_mul(&r_inv, &linalg::transpose(&r_inv));
    let raw = linalg::mat_mul(&linalg::mat_mul(&bread, &meat), &bread);
    let mut robust_cov = [[0.0; P]; P];
    for a in 0..P {
        for b in 0..P {
            robust_cov[a][b] = 0.5 * (raw[a][b] + raw[b][a]);
        }
        robust_cov[a][a] = robust_cov[a][a].max(0.0);
    }

    let se = robust_cov[3][3].sqrt();
    Ok(FitResult {
        beta,
        robust_cov,
        ci95_beta3: (beta[3] - Z95 * se, beta[3] + Z95 * se),
        n_dyads: m,
        n_clusters: clusters.len(),
    })
}

/// Whether the 95% interval for `β₃` contains `true_b1` (endpoints included).
pub fn covers(fit: &FitResult, true_b1: f64) -> bool {
    fit.ci95_beta3.0 <= true_b1 && true_b1 <= fit.ci95_beta3.1
}
