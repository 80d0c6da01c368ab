//! Numerical recovery of the sharp constants, independent of the kernels:
//! the ratio is evaluated from the means alone, its endpoint limits are
//! extrapolated, and a golden-section probe checks that nothing in the
//! interior beats them.

use serde::{Deserialize, Serialize};

use super::{ratio, InequalitySpec};
use crate::error::{Error, Result};

/// Refinement levels `k` of the endpoint sequences `2⁻ᵏ`.
pub const EXTRAPOLATION_LEVELS: std::ops::RangeInclusive<i32> = 4..=16;
/// Largest accepted Richardson error estimate.
pub const EXTRAPOLATION_TOL: f64 = 1e-9;
/// Slack allowed when comparing interior probes to endpoint limits.
pub const INTERIOR_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extrapolation {
    pub value: f64,
    pub error_estimate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extrema {
    pub inf: f64,
    pub sup: f64,
    /// Extrapolated limit as θ → 0⁺ (a → b).
    pub left: Extrapolation,
    /// Extrapolated limit as θ → θ_right (a/b → ∞).
    pub right: Extrapolation,
    pub interior_max: f64,
    pub interior_min: f64,
}

/// Golden-section search for a maximum of `f` on `[a, b]`.
///
/// Returns `(x_max, f_max)`. On a monotone `f` this walks to the larger end.
pub fn golden_section_max(
    f: impl Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    max_evals: usize,
) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut evals = 2;
    while evals < max_evals && (b - a) > 1e-14 * (a.abs() + b.abs()) {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
        evals += 1;
    }
    if f1 > f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Richardson extrapolation of `values[i] = F(h₀ / 2ⁱ)` to `h → 0`, where
/// `F(h) = F(0) + c₁ h^{order(1)} + c₂ h^{order(2)} + …`.
///
/// Returns the diagonal entry of the tableau whose change from the previous
/// diagonal is smallest; that change is the error estimate. This stops the
/// extrapolation before rounding noise in the finest samples dominates.
pub fn richardson_limit(values: &[f64], order: impl Fn(usize) -> f64) -> Extrapolation {
    assert!(
        values.len() >= 2,
        "need at least two samples to extrapolate"
    );
    let mut prev_row: Vec<f64> = vec![values[0]];
    let mut best = Extrapolation {
        value: values[0],
        error_estimate: f64::INFINITY,
    };
    for (i, &v) in values.iter().enumerate().skip(1) {
        let mut row = Vec::with_capacity(i + 1);
        row.push(v);
        for j in 1..=i {
            let factor = 2f64.powf(order(j)) - 1.0;
            let refined = row[j - 1] + (row[j - 1] - prev_row[j - 1]) / factor;
            row.push(refined);
        }
        let error_estimate = (row[i] - prev_row[i - 1]).abs();
        if error_estimate < best.error_estimate {
            best = Extrapolation {
                value: row[i],
                error_estimate,
            };
        }
        prev_row = row;
    }
    best
}

/// Infimum and supremum of the ratio over `θ ∈ (0, θ_right)`.
pub fn numeric_extrema(spec: &InequalitySpec) -> Result<Extrema> {
    let right_end = spec.theta_right.radians();
    let at = |theta: f64| -> f64 {
        spec.pair_at_theta(theta)
            .and_then(|pair| ratio(spec, pair))
            .unwrap_or(f64::NAN)
    };

    let left_samples: Vec<f64> = EXTRAPOLATION_LEVELS.map(|k| at(2f64.powi(-k))).collect();
    let right_samples: Vec<f64> = EXTRAPOLATION_LEVELS
        .map(|k| at(right_end * (1.0 - 2f64.powi(-k))))
        .collect();
    if left_samples
        .iter()
        .chain(&right_samples)
        .any(|v| !v.is_finite())
    {
        return Err(Error::Convergence(format!(
            "{}: non-finite ratio while sampling the endpoints",
            spec.id
        )));
    }
    // the kernels are even in θ, so only even powers appear at the origin
    let left = richardson_limit(&left_samples, |j| 2.0 * j as f64);
    let right = richardson_limit(&right_samples, |j| j as f64);
    for (side, e) in [("left", left), ("right", right)] {
        if e.error_estimate.is_nan() || e.error_estimate > EXTRAPOLATION_TOL {
            return Err(Error::Convergence(format!(
                "{}: {side} extrapolation error estimate {:e} exceeds {EXTRAPOLATION_TOL:e}",
                spec.id, e.error_estimate
            )));
        }
    }

    let (inf, sup) = (left.value.min(right.value), left.value.max(right.value));
    let (lo, hi) = (2f64.powi(-10), right_end * (1.0 - 2f64.powi(-10)));
    let (_, interior_max) = golden_section_max(at, lo, hi, 200);
    let (_, neg_min) = golden_section_max(|t| -at(t), lo, hi, 200);
    let interior_min = -neg_min;
    if interior_max > sup + INTERIOR_SLACK || interior_min < inf - INTERIOR_SLACK {
        return Err(Error::Convergence(format!(
            "{}: interior probe [{interior_min}, {interior_max}] escapes the endpoint limits [{inf}, {sup}]",
            spec.id
        )));
    }
    Ok(Extrema {
        inf,
        sup,
        left,
        right,
        interior_max,
        interior_min,
    })
}
