//! Simulation parameters and the model conventions that sit alongside them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimator::ClusterKey;

/// Full parameterization of one grid cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimParams {
    /// Population size.
    pub n: usize,
    pub trait_mean: f64,
    pub trait_sd: f64,
    pub shock_sd: f64,
    /// Probit intercept when ties form.
    pub eta0_form: f64,
    /// Homophily coefficient when ties form.
    pub eta1_form: f64,
    /// Probit intercept when ties are redrawn at the second wave.
    pub eta0_ret: f64,
    /// Homophily coefficient when ties are redrawn at the second wave.
    pub eta1_ret: f64,
    /// True influence weight of alters on egos.
    pub b1: f64,
    pub replications: usize,
    pub master_seed: u64,
    pub model: ModelOptions,
}

/// Minimum population: four regressors need at least four dyad rows.
pub const MIN_POPULATION: usize = 4;

/// Formation intercept that reproduces the reference degree column.
pub const CALIBRATED_FORMATION_ETA0: f64 = -2.5;

impl Default for SimParams {
    fn default() -> Self {
        SimParams {
            n: 1000,
            trait_mean: 50.0,
            trait_sd: 10.0,
            shock_sd: 5.0,
            eta0_form: CALIBRATED_FORMATION_ETA0,
            eta1_form: 0.0,
            eta0_ret: 0.0,
            eta1_ret: 0.0,
            b1: 0.0,
            replications: 1000,
            master_seed: 42,
            model: ModelOptions::default(),
        }
    }
}

impl SimParams {
    /// Returns the parameters unchanged if every invariant holds.
    pub fn validate(self) -> Result<Self> {
        if self.n < MIN_POPULATION {
            return Err(Error::param(
                "n",
                format!(
                    "n too small for 4-regressor fit (got {}, need >= {MIN_POPULATION})",
                    self.n
                ),
            ));
        }
        finite("trait_mean", self.trait_mean)?;
        finite("trait_sd", self.trait_sd)?;
        if self.trait_sd <= 0.0 {
            return Err(Error::param("trait_sd", "trait_sd must be positive"));
        }
        finite("shock_sd", self.shock_sd)?;
        if self.shock_sd < 0.0 {
            return Err(Error::param("shock_sd", "shock_sd must be nonnegative"));
        }
        finite("eta0_form", self.eta0_form)?;
        finite("eta0_ret", self.eta0_ret)?;
        finite("eta1_form", self.eta1_form)?;
        if self.eta1_form < 0.0 {
            return Err(Error::param("eta1_form", "eta1_form must be nonnegative"));
        }
        finite("eta1_ret", self.eta1_ret)?;
        if self.eta1_ret < 0.0 {
            return Err(Error::param("eta1_ret", "eta1_ret must be nonnegative"));
        }
        finite("b1", self.b1)?;
        if !(0.0..=1.0).contains(&self.b1) {
            return Err(Error::param("b1", "b1 must lie in [0, 1]"));
        }
        if self.replications == 0 {
            return Err(Error::param("replications", "replications must be at least 1"));
        }
        Ok(self)
    }
}

fn finite(field: &'static str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::param(field, format!("{field} must be finite")))
    }
}

/// Conventions the published description leaves open. The defaults are the
/// combination selected by [`crate::calibration::calibrate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelOptions {
    pub centering: Centering,
    pub degree: DegreeConvention,
    pub fpp_t1_set: T1DyadSet,
    pub corr_t1_set: T1DyadSet,
    pub cluster: ClusterKey,
}

impl Default for ModelOptions {
    fn default() -> Self {
        ModelOptions {
            centering: Centering::Centered,
            degree: DegreeConvention::Out,
            fpp_t1_set: T1DyadSet::Retained,
            corr_t1_set: T1DyadSet::T0Ties,
            cluster: ClusterKey::Ego,
        }
    }
}

/// How the dyadic dissimilarity enters the probit index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Centering {
    /// `η₀ + η₁·d` with `d = -|Yᵢ - Yⱼ|` as is.
    Raw,
    /// `η₀ + η₁·(d - d̄)`, where `d̄` is the mean dissimilarity over the dyads
    /// at risk in that stage: all ordered pairs at formation, the existing
    /// first-wave ties at retention.
    Centered,
}

/// What "friends per person" counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeConvention {
    /// Directed ties sent, divided by `n`.
    Out,
    /// Ties sent plus ties received, divided by `n` (twice the out figure).
    Total,
}

/// Dyad set used for the second-wave degree and correlation diagnostics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum T1DyadSet {
    /// Pairs tied at both waves (the rows entering the regression).
    Retained,
    /// Every tie in the second-wave network.
    AllT1,
    /// Every first-wave tie, evaluated at second-wave trait values.
    T0Ties,
}

macro_rules! text_enum {
    ($ty:ty { $($name:literal => $variant:expr),+ $(,)? }) => {
        impl FromStr for $ty {
            type Err = String;
            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s {
                    $($name => Ok($variant),)+
                    other => Err(format!(
                        "unknown value `{other}` (expected one of: {})",
                        [$($name),+].join(", ")
                    )),
                }
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                $(if *self == $variant { return f.write_str($name); })+
                unreachable!()
            }
        }
    };
}

text_enum!(Centering { "raw" => Centering::Raw, "centered" => Centering::Centered });
text_enum!(DegreeConvention { "out" => DegreeConvention::Out, "total" => DegreeConvention::Total });
text_enum!(T1DyadSet {
    "retained" => T1DyadSet::Retained,
    "all-t1" => T1DyadSet::AllT1,
    "t0-ties" => T1DyadSet::T0Ties,
});
text_enum!(ClusterKey { "ego" => ClusterKey::Ego, "unordered-dyad" => ClusterKey::UnorderedDyad });

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_scale_accepted() {
        let p = SimParams {
            n: 1000,
            trait_sd: 10.0,
            replications: 1000,
            ..SimParams::default()
        };
        assert_eq!(p.clone().validate().unwrap(), p);
    }

    #[test]
    fn zero_trait_sd_rejected() {
        let err = SimParams {
            trait_sd: 0.0,
            ..SimParams::default()
        }
        .validate()
        .unwrap_err();
        assert!(err.to_string().contains("trait_sd must be positive"), "{err}");
        assert!(matches!(err, Error::InvalidParam { field: "trait_sd", .. }));
    }

    #[test]
    fn tiny_population_rejected() {
        let err = SimParams {
            n: 3,
            ..SimParams::default()
        }
        .validate()
        .unwrap_err();
        assert!(err.to_string().contains("n too small for 4-regressor fit"), "{err}");
    }

    #[test]
    fn other_fields_named() {
        let cases: [(SimParams, &str); 5] = [
            (
                SimParams {
                    shock_sd: -1.0,
                    ..Default::default()
                },
                "shock_sd",
            ),
            (
                SimParams {
                    replications: 0,
                    ..Default::default()
                },
                "replications",
            ),
            (
                SimParams {
                    b1: 1.5,
                    ..Default::default()
                },
                "b1",
            ),
            (
                SimParams {
                    eta1_ret: -0.1,
                    ..Default::default()
                },
                "eta1_ret",
            ),
            (
                SimParams {
                    eta0_form: f64::NAN,
                    ..Default::default()
                },
                "eta0_form",
            ),
        ];
        for (p, field) in cases {
            match p.validate() {
                Err(Error::InvalidParam { field: f, .. }) => assert_eq!(f, field),
                other => panic!("expected rejection of {field}, got {other:?}"),
            }
        }
    }

    #[test]
    fn option_names_round_trip() {
        for s in ["retained", "all-t1", "t0-ties"] {
            assert_eq!(s.parse::<T1DyadSet>().unwrap().to_string(), s);
        }
        assert!("sideways".parse::<Centering>().is_err());
    }
}
