use serde::{Deserialize, Serialize};

use super::InequalitySpec;
use crate::error::{Error, Result};
use crate::kernels::{h_closed_form, ClosedForm, Monotonicity};

/// Where along the pair space a sharp constant is approached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Approach {
    /// `a/b → ∞` (θ at its right end).
    LargeRatio,
    /// `a → b` (θ → 0).
    EqualArguments,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpBounds {
    pub alpha: f64,
    pub beta: f64,
    pub alpha_exact: String,
    pub beta_exact: String,
    pub alpha_attained: Approach,
    pub beta_attained: Approach,
}

/// Best constants of `spec` from the kernel's closed-form value at the right
/// end of the θ-range and its rational limit at `0⁺`.
pub fn sharp_bounds(spec: &InequalitySpec) -> Result<SharpBounds> {
    let right = h_closed_form(spec.kernel, spec.theta_right).ok_or_else(|| {
        Error::Verification(format!(
            "no closed form for {} at {}",
            spec.kernel,
            spec.theta_right.symbol()
        ))
    })?;
    let left = ClosedForm::rational(spec.kernel.limit_at_zero());
    let right = right.affine(spec.p, spec.q);
    let left = left.affine(spec.p, spec.q);

    let mut direction = spec.kernel.direction();
    if *spec.p.numer() < 0 {
        direction = direction.flipped();
    }
    let ((lo, lo_at), (hi, hi_at)) = match direction {
        Monotonicity::Decreasing => (
            (right, Approach::LargeRatio),
            (left, Approach::EqualArguments),
        ),
        Monotonicity::Increasing => (
            (left, Approach::EqualArguments),
            (right, Approach::LargeRatio),
        ),
    };
    Ok(SharpBounds {
        alpha: lo.value(),
        beta: hi.value(),
        alpha_exact: lo.to_string(),
        beta_exact: hi.to_string(),
        alpha_attained: lo_at,
        beta_attained: hi_at,
    })
}
