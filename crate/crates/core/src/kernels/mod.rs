//! Bernoulli numbers, the cosecant/cotangent expansions built from them, and
//! the four kernel functions `h₁ … h₄`.

mod bernoulli;
mod hfun;
mod series;

pub use bernoulli::{bernoulli_table, BernoulliTable, SeriesKind, MAX_BERNOULLI_INDEX};
pub use hfun::{
    h_closed_form, h_eval, h_eval_direct, h_eval_series, h_eval_with, h_limit, ClosedForm,
    Endpoint, ExtendedReal, HFunctionId, Monotonicity, SpecialAngle, X_SWITCH,
};
pub use series::{
    cot_series, csc_series, csc_sq_series, SeriesEvaluation, MAX_TERMS, RELATIVE_STOP,
};
