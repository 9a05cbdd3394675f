//! Exact rational least squares and sandwich covariance, written directly
//! from the normal equations. Shared by the estimator tests and the
//! acceptance harness.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use unfriend::{derive_stream, ClusterKey, DyadRecord};

type Q = BigRational;

fn q(x: f64) -> Q {
    Q::from_float(x).expect("finite fixture value")
}

fn row(d: &DyadRecord) -> [Q; 4] {
    [Q::from_integer(BigInt::from(1)), q(d.y_i_t0), q(d.y_j_t0), q(d.y_j_t1)]
}

/// Inverse by Gauss-Jordan elimination; `None` if singular.
fn invert(a: &[[Q; 4]; 4]) -> Option<[[Q; 4]; 4]> {
    let mut m: Vec<Vec<Q>> = a.iter().map(|r| r.to_vec()).collect();
    let mut inv: Vec<Vec<Q>> = (0..4)
        .map(|i| (0..4).map(|j| Q::from_integer(BigInt::from((i == j) as i32))).collect())
        .collect();
    for col in 0..4 {
        let pivot = (col..4).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..4 {
            m[col][j] = &m[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..4 {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..4 {
                    let a = &f * &m[col][j];
                    let b = &f * &inv[col][j];
                    m[r][j] -= a;
                    inv[r][j] -= b;
                }
            }
        }
    }
    Some(std::array::from_fn(|i| std::array::from_fn(|j| inv[i][j].clone())))
}

fn quad(a: &[[Q; 4]; 4], m: &[[Q; 4]; 4]) -> [[Q; 4]; 4] {
    // a * m * a, with a symmetric
    let am: [[Q; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| &a[i][k] * &m[k][j]).sum()));
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| &am[i][k] * &a[k][j]).sum()))
}

pub struct Exact {
    pub beta: [f64; 4],
    pub cov: [[f64; 4]; 4],
}

fn cluster_of(d: &DyadRecord, key: ClusterKey) -> (usize, usize) {
    match key {
        ClusterKey::Ego => (d.ego, usize::MAX),
        ClusterKey::UnorderedDyad => (d.ego.min(d.alter), d.ego.max(d.alter)),
    }
}

/// OLS and cluster-robust covariance in exact arithmetic. Passing
/// `None` for the key puts every row in its own cluster (HC0).
pub fn exact_fit(dyads: &[DyadRecord], key: Option<ClusterKey>) -> Option<Exact> {
    let zero = || Q::zero();
    let mut xtx: [[Q; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| zero()));
    let mut xty: [Q; 4] = std::array::from_fn(|_| zero());
    for d in dyads {
        let x = row(d);
        let y = q(d.y_i_t1);
        for i in 0..4 {
            xty[i] += &x[i] * &y;
            for j in 0..4 {
                xtx[i][j] += &x[i] * &x[j];
            }
        }
    }
    let inv = invert(&xtx)?;
    let beta: [Q; 4] = std::array::from_fn(|i| (0..4).map(|k| &inv[i][k] * &xty[k]).sum());

    let mut scores: BTreeMap<(usize, usize), [Q; 4]> = BTreeMap::new();
    for (idx, d) in dyads.iter().enumerate() {
        let x = row(d);
        let fitted: Q = (0..4).map(|k| &x[k] * &beta[k]).sum();
        let e = q(d.y_i_t1) - fitted;
        let g = key.map_or((idx, 0), |k| cluster_of(d, k));
        let s = scores.entry(g).or_insert_with(|| std::array::from_fn(|_| zero()));
        for k in 0..4 {
            s[k] += &x[k] * &e;
        }
    }
    let mut meat: [[Q; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| zero()));
    for s in scores.values() {
        for i in 0..4 {
            for j in 0..4 {
                meat[i][j] += &s[i] * &s[j];
            }
        }
    }
    let cov = quad(&inv, &meat);
    Some(Exact {
        beta: std::array::from_fn(|i| beta[i].to_f64().unwrap()),
        cov: std::array::from_fn(|i| std::array::from_fn(|j| cov[i][j].to_f64().unwrap())),
    })
}

/// Random fixture of `rows` dyads over `egos` egos with a known linear
/// signal plus noise, so no coefficient sits near zero.
pub fn random_fixture(seed: u64, rows: usize, egos: usize) -> Vec<DyadRecord> {
    let mut rng = derive_stream(seed, 9_999, 0);
    let beta = [2.0, 0.6, -0.3, 0.4];
    (0..rows)
        .map(|k| {
            let ego = k % egos;
            let alter = (ego + 1 + (rng.next_u64() % (egos as u64 + 3)) as usize) % (egos + 4);
            let y_i_t0 = rng.normal(50.0, 10.0);
            let y_j_t0 = rng.normal(50.0, 10.0);
            let y_j_t1 = y_j_t0 + rng.normal(0.0, 5.0);
            let y_i_t1 = beta[0] + beta[1] * y_i_t0 + beta[2] * y_j_t0 + beta[3] * y_j_t1 + rng.normal(0.0, 3.0);
            DyadRecord {
                ego,
                alter: if alter == ego { alter + 1 } else { alter },
                y_i_t0,
                y_i_t1,
                y_j_t0,
                y_j_t1,
            }
        })
        .collect()
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}

/// Largest error in the covariance, each entry scaled by
/// `sqrt(V_ii · V_jj)` so near-zero off-diagonals are judged fairly.
pub fn cov_rel_err(got: &[[f64; 4]; 4], want: &[[f64; 4]; 4]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let scale = (want[i][i] * want[j][j]).sqrt();
            worst = worst.max((got[i][j] - want[i][j]).abs() / scale);
        }
    }
    worst
}
