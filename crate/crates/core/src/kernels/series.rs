//! Partial sums of the cosecant, cotangent and squared-cosecant expansions.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::bernoulli::{BernoulliTable, SeriesKind};
use crate::error::{Error, Result};

/// Hard cap on the number of summed terms.
pub const MAX_TERMS: usize = 32;

/// A term smaller than this fraction of the partial sum ends the summation.
pub const RELATIVE_STOP: f64 = 1e-18;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesEvaluation {
    pub value: f64,
    pub terms_used: usize,
    /// Magnitude of the first omitted term.
    pub truncation_bound: f64,
}

/// `Σ cₙ x^{first + 2(n-1)}` added onto `leading`, stopping adaptively.
pub(crate) fn adaptive_sum(
    leading: f64,
    coeffs: &[f64],
    x: f64,
    first_power: i32,
) -> SeriesEvaluation {
    let x2 = x * x;
    let cap = coeffs.len().min(MAX_TERMS);
    let mut power = x.powi(first_power);
    let mut sum = leading;
    let mut last_term = 0.0f64;
    let mut prev_term = 0.0f64;
    for (i, c) in coeffs[..cap].iter().enumerate() {
        let term = c * power;
        if i > 0 && term.abs() < RELATIVE_STOP * sum.abs() {
            return SeriesEvaluation {
                value: sum,
                terms_used: i,
                truncation_bound: term.abs(),
            };
        }
        sum += term;
        prev_term = last_term;
        last_term = term;
        power *= x2;
    }
    let truncation_bound = match coeffs.get(cap) {
        Some(c) => (c * power).abs(),
        // geometric estimate from the last two terms
        None if prev_term != 0.0 => (last_term * last_term / prev_term).abs(),
        None => last_term.abs(),
    };
    SeriesEvaluation {
        value: sum,
        terms_used: cap,
        truncation_bound,
    }
}

fn check_domain(x: f64, what: &str) -> Result<()> {
    if x.is_finite() && x != 0.0 && x.abs() < PI {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{what} series needs 0 < |x| < pi, got x = {x}"
        )))
    }
}

/// `1/sin x` on `0 < |x| < π`.
pub fn csc_series(x: f64, table: &BernoulliTable) -> Result<SeriesEvaluation> {
    check_domain(x, "csc")?;
    Ok(adaptive_sum(
        1.0 / x,
        table.coefficients(SeriesKind::Csc),
        x,
        1,
    ))
}

/// `cot x` on `0 < |x| < π`.
pub fn cot_series(x: f64, table: &BernoulliTable) -> Result<SeriesEvaluation> {
    check_domain(x, "cot")?;
    Ok(adaptive_sum(
        1.0 / x,
        table.coefficients(SeriesKind::Cot),
        x,
        1,
    ))
}

/// `1/sin² x` on `0 < |x| < π`.
pub fn csc_sq_series(x: f64, table: &BernoulliTable) -> Result<SeriesEvaluation> {
    check_domain(x, "csc^2")?;
    Ok(adaptive_sum(
        1.0 / (x * x),
        table.coefficients(SeriesKind::CscSq),
        x,
        0,
    ))
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::kernels::bernoulli_table;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn table() -> BernoulliTable {
        bernoulli_table(64).unwrap()
    }

    fn rel(x: f64, y: f64) -> f64 {
        (x - y).abs() / y.abs()
    }

    #[test]
    fn examples() {
        let t = table();
        // mpmath oracles
        assert!(rel(csc_series(0.1, &t).unwrap().value, 10.016686131634776649) < 1e-15);
        assert!(rel(cot_series(0.1, &t).unwrap().value, 9.9666444232592378598) < 1e-15);
        assert!(rel(csc_sq_series(0.1, &t).unwrap().value, 100.33400105968446607) < 1e-15);
        assert!(rel(csc_series(FRAC_PI_2, &t).unwrap().value, 1.0) < 1e-12);
        assert!(rel(cot_series(FRAC_PI_4, &t).unwrap().value, 1.0) < 1e-12);
        assert!(rel(csc_sq_series(FRAC_PI_2, &t).unwrap().value, 1.0) < 1e-12);
    }

    #[test]
    fn domain_errors() {
        let t = table();
        assert!(matches!(csc_series(PI, &t), Err(Error::Domain(_))));
        assert!(matches!(cot_series(3.2, &t), Err(Error::Domain(_))));
        assert!(csc_sq_series(0.0, &t).is_err());
        assert!(csc_series(f64::NAN, &t).is_err());
        assert!(csc_series(-1.0, &t).is_ok());
    }

    #[test]
    fn odd_series_are_odd() {
        let t = table();
        for x in [0.3, 1.1, 2.0] {
            assert_eq!(
                csc_series(-x, &t).unwrap().value,
                -csc_series(x, &t).unwrap().value
            );
            assert_eq!(
                cot_series(-x, &t).unwrap().value,
                -cot_series(x, &t).unwrap().value
            );
        }
    }

    #[test]
    fn truncation_bookkeeping() {
        let t = table();
        let near_zero = csc_series(0.01, &t).unwrap();
        assert!(near_zero.terms_used < 10);
        let wide = csc_series(FRAC_PI_2, &t).unwrap();
        assert!(wide.terms_used <= MAX_TERMS);
        assert!(wide.truncation_bound >= 0.0 && wide.truncation_bound < 1e-15);
        // close to pi the series is still summable but slow
        let slow = cot_series(3.0, &t).unwrap();
        assert_eq!(slow.terms_used, MAX_TERMS);
        assert!(slow.truncation_bound > 0.0);
    }

    #[test]
    fn short_table_reports_larger_bound() {
        let t = bernoulli_table(8).unwrap();
        let e = csc_series(1.0, &t).unwrap();
        assert_eq!(e.terms_used, 4);
        assert!((e.value - 1.0 / 1f64.sin()).abs() <= 10.0 * e.truncation_bound);
    }
}
