//! Bivariate means, the Seiffert means `P` and `T`, four trigonometric
//! kernel functions with Bernoulli-series evaluation near zero, and an engine
//! that derives, recovers and certifies sharp convex-combination bounds
//! between those means.
//!
//! ```
//! use meanbound::{eval_mean, MeanKind, PositivePair};
//!
//! let pair = PositivePair::new(4.0, 1.0).unwrap();
//! assert_eq!(eval_mean(MeanKind::Geometric, pair), 2.0);
//! ```

pub mod bounds;
pub mod cli;
pub mod error;
pub mod kernels;
pub mod means;

pub use bounds::{
    certify, certify_with, equivalence_check, equivalence_check_with, numeric_extrema, ratio,
    sharp_bounds, Approach, CertificationReport, InequalityId, InequalitySpec, SharpBounds,
    ThetaSubstitution,
};
pub use error::{Error, Result};
pub use kernels::{
    bernoulli_table, cot_series, csc_series, csc_sq_series, h_eval, h_eval_with, h_limit,
    BernoulliTable, Endpoint, ExtendedReal, HFunctionId, SeriesEvaluation, SeriesKind,
};
pub use means::{eval_mean, eval_seiffert_p_arctan_form, half_sum_ratio, MeanKind, PositivePair};
