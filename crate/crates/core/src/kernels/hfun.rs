//! The kernel functions
//!
//! ```text
//! h₁(x) = (sin x / x - cos² x) / sin² x            on (0, π)
//! h₂(x) = (sin x - x cos x) / (x (1 - cos x))       on (0, 2π)
//! h₃(x) = (x - sin x cos x) / (x sin² x)            on (0, π)
//! h₄(x) = (x - sin x) cos x / (x - sin x cos x)     on (0, π)
//! ```
//!
//! Each quotient is 0/0 at the origin. Below [`X_SWITCH`] they are summed as
//! power series in `x²` instead: `h₁`, `h₃` from the Bernoulli expansions,
//! `h₂`, `h₄` as a ratio of the Maclaurin series of numerator and
//! denominator.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Ratio;

use super::bernoulli::{BernoulliTable, SeriesKind, MAX_BERNOULLI_INDEX};
use super::series::{adaptive_sum, SeriesEvaluation, RELATIVE_STOP};
use crate::error::{Error, Result};

/// Series below, direct trigonometric formula at or above.
pub const X_SWITCH: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HFunctionId {
    H1,
    H2,
    H3,
    H4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Decreasing,
    Increasing,
}

impl Monotonicity {
    pub fn flipped(self) -> Self {
        match self {
            Monotonicity::Decreasing => Monotonicity::Increasing,
            Monotonicity::Increasing => Monotonicity::Decreasing,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Left,
    Right,
}

/// A limit value: a rational or an infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtendedReal {
    NegInfinity,
    Finite(Ratio<i64>),
    PosInfinity,
}

impl ExtendedReal {
    pub fn to_f64(self) -> f64 {
        match self {
            ExtendedReal::NegInfinity => f64::NEG_INFINITY,
            ExtendedReal::Finite(r) => *r.numer() as f64 / *r.denom() as f64,
            ExtendedReal::PosInfinity => f64::INFINITY,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::NegInfinity => f.write_str("-inf"),
            ExtendedReal::Finite(r) => write!(f, "{r}"),
            ExtendedReal::PosInfinity => f.write_str("+inf"),
        }
    }
}

impl HFunctionId {
    pub const ALL: [HFunctionId; 4] = [
        HFunctionId::H1,
        HFunctionId::H2,
        HFunctionId::H3,
        HFunctionId::H4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HFunctionId::H1 => "h1",
            HFunctionId::H2 => "h2",
            HFunctionId::H3 => "h3",
            HFunctionId::H4 => "h4",
        }
    }

    /// Open interval `(0, right)`.
    pub fn domain(self) -> (f64, f64) {
        match self {
            HFunctionId::H2 => (0.0, 2.0 * PI),
            _ => (0.0, PI),
        }
    }

    pub fn direction(self) -> Monotonicity {
        match self {
            HFunctionId::H3 => Monotonicity::Increasing,
            _ => Monotonicity::Decreasing,
        }
    }

    pub fn limit_at_zero(self) -> Ratio<i64> {
        match self {
            HFunctionId::H1 => Ratio::new(5, 6),
            HFunctionId::H2 | HFunctionId::H3 => Ratio::new(2, 3),
            HFunctionId::H4 => Ratio::new(1, 4),
        }
    }

    pub fn limit_at_right(self) -> ExtendedReal {
        match self {
            HFunctionId::H1 | HFunctionId::H2 => ExtendedReal::NegInfinity,
            HFunctionId::H3 => ExtendedReal::PosInfinity,
            HFunctionId::H4 => ExtendedReal::Finite(Ratio::from_integer(-1)),
        }
    }

    pub fn contains(self, x: f64) -> bool {
        let (lo, hi) = self.domain();
        x > lo && x < hi
    }
}

impl fmt::Display for HFunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HFunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HFunctionId::ALL
            .into_iter()
            .find(|h| h.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown kernel `{s}` (expected h1..h4)")))
    }
}

/// Tabulated one-sided limit.
pub fn h_limit(id: HFunctionId, endpoint: Endpoint) -> ExtendedReal {
    match endpoint {
        Endpoint::Left => ExtendedReal::Finite(id.limit_at_zero()),
        Endpoint::Right => id.limit_at_right(),
    }
}

fn default_table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        BernoulliTable::new(MAX_BERNOULLI_INDEX).expect("the full Bernoulli table verifies")
    })
}

/// `h(x)` using the full 64-index Bernoulli table.
pub fn h_eval(id: HFunctionId, x: f64) -> Result<f64> {
    h_eval_with(id, x, default_table())
}

pub fn h_eval_with(id: HFunctionId, x: f64, table: &BernoulliTable) -> Result<f64> {
    check_domain(id, x)?;
    if x < X_SWITCH {
        Ok(series_branch(id, x, table).value)
    } else {
        Ok(direct_branch(id, x))
    }
}

/// The trigonometric quotient, at any point of the domain.
pub fn h_eval_direct(id: HFunctionId, x: f64) -> Result<f64> {
    check_domain(id, x)?;
    Ok(direct_branch(id, x))
}

/// The small-argument expansion, at any point of the domain. Accuracy is
/// only guaranteed below [`X_SWITCH`].
pub fn h_eval_series(id: HFunctionId, x: f64, table: &BernoulliTable) -> Result<SeriesEvaluation> {
    check_domain(id, x)?;
    Ok(series_branch(id, x, table))
}

fn check_domain(id: HFunctionId, x: f64) -> Result<()> {
    if id.contains(x) {
        Ok(())
    } else {
        let (lo, hi) = id.domain();
        Err(Error::Domain(format!(
            "{id} is defined on ({lo}, {hi}), got x = {x}"
        )))
    }
}

fn direct_branch(id: HFunctionId, x: f64) -> f64 {
    let (s, c) = x.sin_cos();
    match id {
        HFunctionId::H1 => (s / x - c * c) / (s * s),
        HFunctionId::H2 => (s - x * c) / (x * (1.0 - c)),
        HFunctionId::H3 => (x - s * c) / (x * s * s),
        HFunctionId::H4 => (x - s) * c / (x - s * c),
    }
}

fn series_branch(id: HFunctionId, x: f64, table: &BernoulliTable) -> SeriesEvaluation {
    match id {
        HFunctionId::H1 => adaptive_sum(0.0, table.coefficients(SeriesKind::H1), x, 0),
        HFunctionId::H3 => adaptive_sum(0.0, table.coefficients(SeriesKind::H3), x, 0),
        HFunctionId::H2 => {
            // sin x - x cos x = Σ (-1)^{k+1} 2k x^{2k+1} / (2k+1)!
            // x (1 - cos x)   = Σ (-1)^{k+1}    x^{2k+1} / (2k)!
            let num = alternating(x, |k, f| 2.0 * k as f64 / f.odd);
            let den = alternating(x, |_, f| 1.0 / f.even);
            quotient(num, den, 1.0)
        }
        HFunctionId::H4 => {
            // x - sin x       = Σ (-1)^{k+1}     x^{2k+1} / (2k+1)!
            // x - sin x cos x = Σ (-1)^{k+1} 4^k x^{2k+1} / (2k+1)!
            let num = alternating(x, |_, f| 1.0 / f.odd);
            let den = alternating(x, |k, f| 4f64.powi(k as i32) / f.odd);
            quotient(num, den, x.cos())
        }
    }
}

struct Factorials {
    even: f64,
    odd: f64,
}

/// `Σ_{k≥1} (-1)^{k+1} coeff(k) x^{2k-2}` with the alternating-series bound
/// on the remainder.
fn alternating(x: f64, coeff: impl Fn(usize, &Factorials) -> f64) -> SeriesEvaluation {
    const CAP: usize = 40;
    let x2 = x * x;
    let mut f = Factorials {
        even: 2.0,
        odd: 6.0,
    };
    let mut power = 1.0;
    let mut sum = 0.0f64;
    let mut sign = 1.0;
    for k in 1..=CAP {
        let term = sign * coeff(k, &f) * power;
        if k > 1 && term.abs() < RELATIVE_STOP * sum.abs() {
            return SeriesEvaluation {
                value: sum,
                terms_used: k - 1,
                truncation_bound: term.abs(),
            };
        }
        sum += term;
        sign = -sign;
        power *= x2;
        let m = (2 * k + 2) as f64;
        f.even *= (m - 1.0) * m;
        f.odd *= m * (m + 1.0);
    }
    SeriesEvaluation {
        value: sum,
        terms_used: CAP,
        truncation_bound: f64::INFINITY,
    }
}

fn quotient(num: SeriesEvaluation, den: SeriesEvaluation, factor: f64) -> SeriesEvaluation {
    let value = factor * num.value / den.value;
    let rel = num.truncation_bound / num.value.abs() + den.truncation_bound / den.value.abs();
    SeriesEvaluation {
        value,
        terms_used: num.terms_used.max(den.terms_used),
        truncation_bound: value.abs() * rel,
    }
}

/// Angles at which the kernels take the closed-form values used by the
/// sharp bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialAngle {
    QuarterPi,
    HalfPi,
}

impl SpecialAngle {
    pub fn radians(self) -> f64 {
        match self {
            SpecialAngle::QuarterPi => PI / 4.0,
            SpecialAngle::HalfPi => PI / 2.0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            SpecialAngle::QuarterPi => "pi/4",
            SpecialAngle::HalfPi => "pi/2",
        }
    }
}

/// An exact constant: either `r + s/π` with rational `r`, `s`, or an
/// expression kept as text next to its binary64 value.
#[derive(Debug, Clone, PartialEq)]
pub enum ClosedForm {
    PiAffine {
        rational: Ratio<i64>,
        inv_pi: Ratio<i64>,
    },
    Opaque {
        expr: String,
        value: f64,
    },
}

impl ClosedForm {
    pub fn rational(r: Ratio<i64>) -> Self {
        ClosedForm::PiAffine {
            rational: r,
            inv_pi: Ratio::from_integer(0),
        }
    }

    pub fn value(&self) -> f64 {
        let q = |r: &Ratio<i64>| *r.numer() as f64 / *r.denom() as f64;
        match self {
            ClosedForm::PiAffine { rational, inv_pi } => {
                let inv = if *inv_pi.numer() == 0 {
                    0.0
                } else {
                    *inv_pi.numer() as f64 / (*inv_pi.denom() as f64 * PI)
                };
                q(rational) + inv
            }
            ClosedForm::Opaque { value, .. } => *value,
        }
    }

    /// `p·self + q`, exact for the `r + s/π` shape.
    pub fn affine(&self, p: Ratio<i64>, q: Ratio<i64>) -> ClosedForm {
        let one = Ratio::from_integer(1);
        let zero = Ratio::from_integer(0);
        match self {
            ClosedForm::PiAffine { rational, inv_pi } => ClosedForm::PiAffine {
                rational: p * rational + q,
                inv_pi: p * inv_pi,
            },
            opaque if p == one && q == zero => opaque.clone(),
            ClosedForm::Opaque { expr, value } => ClosedForm::Opaque {
                expr: format!("{p}*({expr})+{q}"),
                value: (*p.numer() as f64 / *p.denom() as f64) * value
                    + *q.numer() as f64 / *q.denom() as f64,
            },
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::Opaque { expr, .. } => f.write_str(expr),
            ClosedForm::PiAffine { rational, inv_pi } => {
                let has_rational = *rational.numer() != 0;
                if has_rational || *inv_pi.numer() == 0 {
                    write!(f, "{rational}")?;
                }
                if *inv_pi.numer() != 0 {
                    let n = *inv_pi.numer();
                    let sign = if n < 0 {
                        "-"
                    } else if has_rational {
                        "+"
                    } else {
                        ""
                    };
                    let d = *inv_pi.denom();
                    if d == 1 {
                        write!(f, "{sign}{}/pi", n.abs())?;
                    } else {
                        write!(f, "{sign}{}/({d}*pi)", n.abs())?;
                    }
                }
                Ok(())
            }
        }
    }
}

const PI_LO: f64 = 1.2246467991473532e-16;
const SQRT_2_LO: f64 = -9.667293313452913e-17;

/// Closed-form `h(θ)` at the angles that fix the sharp constants.
pub fn h_closed_form(id: HFunctionId, angle: SpecialAngle) -> Option<ClosedForm> {
    let pi_affine = |r: i64, s: i64| ClosedForm::PiAffine {
        rational: Ratio::from_integer(r),
        inv_pi: Ratio::from_integer(s),
    };
    match (id, angle) {
        (HFunctionId::H1, SpecialAngle::HalfPi) | (HFunctionId::H2, SpecialAngle::HalfPi) => {
            Some(pi_affine(0, 2))
        }
        (HFunctionId::H3, SpecialAngle::QuarterPi) => Some(pi_affine(2, -4)),
        (HFunctionId::H2, SpecialAngle::QuarterPi) => Some(ClosedForm::Opaque {
            expr: "(4-pi)/((sqrt2-1)*pi)".into(),
            value: (4.0 - PI) / ((SQRT_2 - 1.0) * PI),
        }),
        (HFunctionId::H4, SpecialAngle::QuarterPi) => Some(ClosedForm::Opaque {
            expr: "(pi-2*sqrt2)/(sqrt2*pi-2*sqrt2)".into(),
            // pi - 2*sqrt2 is exact in binary64; add back the rounding tails
            value: ((PI - 2.0 * SQRT_2) + (PI_LO - 2.0 * SQRT_2_LO)) / (SQRT_2 * (PI - 2.0)),
        }),
        _ => None,
    }
}
