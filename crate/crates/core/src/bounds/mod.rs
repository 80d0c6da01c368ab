//! Sharp two-sided bounds of the form
//!
//! ```text
//! α·hi + (1-α)·lo  <  target  <  β·hi + (1-β)·lo
//! ```
//!
//! Each of the seven inequalities reduces, after `x = a/b`,
//! `t = (x-1)/(x+1)` and `t = sin θ` or `t = tan θ`, to an affine image
//! `p·h(θ) + q` of one monotone kernel, so the best constants are the images
//! of the kernel's endpoint values.

mod certify;
mod extrema;
mod sharp;

use std::f64::consts::{FRAC_PI_4, SQRT_2};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{h_eval, HFunctionId, SpecialAngle};
use crate::means::{arcsin_of_half_sum_ratio, eval_mean, MeanKind, PositivePair};

pub use certify::{
    certify, certify_with, CertificationReport, SharpnessProbe, LARGE_RATIO_PROBE, NEAR_EQUAL_PROBE,
};
pub use extrema::{golden_section_max, numeric_extrema, richardson_limit, Extrapolation, Extrema};
pub use sharp::{sharp_bounds, Approach, SharpBounds};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InequalityId {
    Prop1_1,
    Prop1_2,
    Prop1_3,
    Prop1_4,
    Thm5_1,
    Thm5_2,
    Thm5_3,
}

impl InequalityId {
    pub const ALL: [InequalityId; 7] = [
        InequalityId::Prop1_1,
        InequalityId::Prop1_2,
        InequalityId::Prop1_3,
        InequalityId::Prop1_4,
        InequalityId::Thm5_1,
        InequalityId::Thm5_2,
        InequalityId::Thm5_3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InequalityId::Prop1_1 => "prop1.1",
            InequalityId::Prop1_2 => "prop1.2",
            InequalityId::Prop1_3 => "prop1.3",
            InequalityId::Prop1_4 => "prop1.4",
            InequalityId::Thm5_1 => "thm5.1",
            InequalityId::Thm5_2 => "thm5.2",
            InequalityId::Thm5_3 => "thm5.3",
        }
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InequalityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InequalityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownSpec(s.to_string()))
    }
}

impl Serialize for InequalityId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for InequalityId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which substitution turns `t = (x-1)/(x+1)` into an angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaSubstitution {
    Sin,
    Tan,
}

impl ThetaSubstitution {
    pub fn name(self) -> &'static str {
        match self {
            ThetaSubstitution::Sin => "sin",
            ThetaSubstitution::Tan => "tan",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalitySpec {
    pub id: InequalityId,
    pub target: MeanKind,
    pub hi: MeanKind,
    pub lo: MeanKind,
    pub kernel: HFunctionId,
    pub theta_sub: ThetaSubstitution,
    pub theta_right: SpecialAngle,
    /// `ratio = p·h(θ) + q`
    pub p: Ratio<i64>,
    pub q: Ratio<i64>,
}

impl InequalitySpec {
    pub fn get(id: InequalityId) -> Self {
        use HFunctionId::*;
        use MeanKind::*;
        use SpecialAngle::*;
        use ThetaSubstitution::*;
        let row = |target, hi, lo, kernel, theta_sub, theta_right, p: (i64, i64), q: i64| Self {
            id,
            target,
            hi,
            lo,
            kernel,
            theta_sub,
            theta_right,
            p: Ratio::new(p.0, p.1),
            q: Ratio::from_integer(q),
        };
        match id {
            InequalityId::Prop1_1 => {
                row(SeiffertP, Arithmetic, Harmonic, H1, Sin, HalfPi, (1, 1), 0)
            }
            InequalityId::Prop1_2 => row(
                SeiffertP,
                ContraHarmonic,
                Harmonic,
                H1,
                Sin,
                HalfPi,
                (1, 2),
                0,
            ),
            InequalityId::Prop1_3 => row(
                SeiffertT,
                RootSquare,
                Arithmetic,
                H2,
                Tan,
                QuarterPi,
                (1, 1),
                0,
            ),
            InequalityId::Prop1_4 => {
                row(SeiffertP, Centroidal, Harmonic, H1, Sin, HalfPi, (3, 4), 0)
            }
            InequalityId::Thm5_1 => row(
                SeiffertT,
                ContraHarmonic,
                Harmonic,
                H3,
                Tan,
                QuarterPi,
                (-1, 2),
                1,
            ),
            InequalityId::Thm5_2 => row(
                RootSquare,
                ContraHarmonic,
                SeiffertT,
                H4,
                Tan,
                QuarterPi,
                (1, 1),
                0,
            ),
            InequalityId::Thm5_3 => {
                row(SeiffertP, Arithmetic, Geometric, H2, Sin, HalfPi, (1, 1), 0)
            }
        }
    }

    pub fn all() -> Vec<Self> {
        InequalityId::ALL.into_iter().map(Self::get).collect()
    }

    pub fn from_name(name: &str) -> Result<Self> {
        name.parse().map(Self::get)
    }

    pub fn p_f64(&self) -> f64 {
        ratio_to_f64(self.p)
    }

    pub fn q_f64(&self) -> f64 {
        ratio_to_f64(self.q)
    }

    /// `θ` for a pair: `arcsin u` or `arctan u` with `u = |a-b|/(a+b)`.
    pub fn theta(&self, pair: PositivePair) -> f64 {
        let (hi, lo) = (pair.max(), pair.min());
        match self.theta_sub {
            ThetaSubstitution::Sin => arcsin_of_half_sum_ratio(1.0, lo / hi),
            ThetaSubstitution::Tan => ((hi - lo) / (hi + lo)).atan(),
        }
    }

    /// A pair whose reduction angle is `theta`, with `a > b`.
    ///
    /// Uses `1 - sin θ = 2 sin²(π/4 - θ/2)` and
    /// `(1 - tan θ)/(1 + tan θ) = √2 sin(π/4 - θ) / (cos θ + sin θ)` so the
    /// smaller argument keeps full precision as `θ` nears its right end.
    pub fn pair_at_theta(&self, theta: f64) -> Result<PositivePair> {
        match self.theta_sub {
            ThetaSubstitution::Sin => {
                let s = (FRAC_PI_4 - 0.5 * theta).sin();
                PositivePair::new(1.0 + theta.sin(), 2.0 * s * s)
            }
            ThetaSubstitution::Tan => PositivePair::new(
                theta.cos() + theta.sin(),
                SQRT_2 * (FRAC_PI_4 - theta).sin(),
            ),
        }
    }
}

fn ratio_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `(target - lo) / (hi - lo)`, straight from the means.
pub fn ratio(spec: &InequalitySpec, pair: PositivePair) -> Result<f64> {
    if pair.degenerate() {
        return Err(Error::Degenerate("the bound ratio"));
    }
    let target = eval_mean(spec.target, pair);
    let hi = eval_mean(spec.hi, pair);
    let lo = eval_mean(spec.lo, pair);
    Ok((target - lo) / (hi - lo))
}

/// The same ratio through the kernel: `p·h(θ) + q`.
pub fn reduced_ratio(spec: &InequalitySpec, pair: PositivePair) -> Result<f64> {
    if pair.degenerate() {
        return Err(Error::Degenerate("the bound ratio"));
    }
    let h = h_eval(spec.kernel, spec.theta(pair))?;
    Ok(spec.p_f64() * h + spec.q_f64())
}

/// Number of pairs [`equivalence_check`] samples.
pub const EQUIVALENCE_SAMPLES: usize = 1000;
const EQUIVALENCE_SEED: u64 = 0x5e1f_fe27;
const EQUIVALENCE_TOL: f64 = 1e-12;

/// Checks that the three `h₁`-based inequalities share one kernel: their
/// ratios stand in the proportion of their `p` coefficients.
pub fn equivalence_check() -> bool {
    equivalence_check_with(
        &InequalitySpec::get(InequalityId::Prop1_2),
        &InequalitySpec::get(InequalityId::Prop1_4),
    )
}

/// [`equivalence_check`] with caller-supplied rows standing in for
/// `prop1.2` and `prop1.4` (their `p` is the claimed proportion).
pub fn equivalence_check_with(prop1_2: &InequalitySpec, prop1_4: &InequalitySpec) -> bool {
    let base = InequalitySpec::get(InequalityId::Prop1_1);
    let mut rng = ChaCha8Rng::seed_from_u64(EQUIVALENCE_SEED);
    // x - 1 log-uniform on [0.1, 1e8]
    let (lo, hi) = (0.1f64.ln(), 1e8f64.ln());
    (0..EQUIVALENCE_SAMPLES).all(|_| {
        let x = 1.0 + rng.random_range(lo..hi).exp();
        let pair = PositivePair::new(x, 1.0).expect("x > 1");
        let r = ratio(&base, pair).expect("x != 1");
        [prop1_2, prop1_4].iter().all(|spec| {
            let claimed = spec.p_f64() / base.p_f64() * r;
            let actual = ratio(spec, pair).expect("x != 1");
            (actual - claimed).abs() <= EQUIVALENCE_TOL * actual.abs()
        })
    })
}
