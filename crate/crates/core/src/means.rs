//! The eight bivariate means: contra-harmonic `C`, centroidal `C̄`,
//! arithmetic `A`, geometric `G`, harmonic `H`, root-square `S`, and the two
//! Seiffert means `P` and `T`.
//!
//! Every mean is homogeneous of degree one, so evaluation first divides both
//! arguments by `max(a, b)` and rescales the result. At `a = b` all means
//! return `a`, the continuous extension of the Seiffert quotients.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Below this `|u| = |a - b| / (a + b)` the Seiffert means switch to their
/// even power series in `u`.
pub const SEIFFERT_SERIES_CUTOFF: f64 = 1e-4;

// u / arcsin(u) = 1 - u²/6 - 17u⁴/360 - 367u⁶/15120 - ...
const ARCSIN_QUOTIENT: [f64; 4] = [1.0, -1.0 / 6.0, -17.0 / 360.0, -367.0 / 15120.0];
// u / arctan(u) = 1 + u²/3 - 4u⁴/45 + 44u⁶/945 - ...
const ARCTAN_QUOTIENT: [f64; 4] = [1.0, 1.0 / 3.0, -4.0 / 45.0, 44.0 / 945.0];

/// A validated pair of positive, finite reals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivePair {
    a: f64,
    b: f64,
}

impl PositivePair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || a <= 0.0 || b <= 0.0 {
            return Err(Error::Domain(format!(
                "means need two positive finite arguments, got a = {a}, b = {b}"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `true` when `a == b`; the Seiffert quotients are 0/0 there.
    pub fn degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn swapped(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }

    pub fn min(&self) -> f64 {
        self.a.min(self.b)
    }

    pub fn max(&self) -> f64 {
        self.a.max(self.b)
    }

    /// `(1, min/max)` and the scale `max`. Ordering the arguments makes
    /// every symmetric mean exactly symmetric in floating point.
    fn canonical(&self) -> (f64, f64, f64) {
        let scale = self.max();
        (1.0, self.min() / scale, scale)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MeanKind {
    ContraHarmonic,
    Centroidal,
    Arithmetic,
    Geometric,
    Harmonic,
    RootSquare,
    SeiffertP,
    SeiffertT,
}

impl MeanKind {
    pub const ALL: [MeanKind; 8] = [
        MeanKind::ContraHarmonic,
        MeanKind::Centroidal,
        MeanKind::Arithmetic,
        MeanKind::Geometric,
        MeanKind::Harmonic,
        MeanKind::RootSquare,
        MeanKind::SeiffertP,
        MeanKind::SeiffertT,
    ];

    /// Short ASCII symbol, as accepted by the CLI.
    pub fn symbol(self) -> &'static str {
        match self {
            MeanKind::ContraHarmonic => "C",
            MeanKind::Centroidal => "Cbar",
            MeanKind::Arithmetic => "A",
            MeanKind::Geometric => "G",
            MeanKind::Harmonic => "H",
            MeanKind::RootSquare => "S",
            MeanKind::SeiffertP => "P",
            MeanKind::SeiffertT => "T",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MeanKind::ContraHarmonic => "contra-harmonic",
            MeanKind::Centroidal => "centroidal",
            MeanKind::Arithmetic => "arithmetic",
            MeanKind::Geometric => "geometric",
            MeanKind::Harmonic => "harmonic",
            MeanKind::RootSquare => "root-square",
            MeanKind::SeiffertP => "seiffert-p",
            MeanKind::SeiffertT => "seiffert-t",
        }
    }
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for MeanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MeanKind::ALL
            .into_iter()
            .find(|k| k.symbol() == s || k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::Domain(format!(
                    "unknown mean `{s}` (expected one of C, Cbar, A, G, H, S, P, T)"
                ))
            })
    }
}

/// Evaluates `kind` at `pair`.
///
/// The result always lies in `[min(a, b), max(a, b)]`.
pub fn eval_mean(kind: MeanKind, pair: PositivePair) -> f64 {
    if pair.degenerate() {
        return pair.a;
    }
    let (x, y, scale) = pair.canonical();
    let value = match kind {
        MeanKind::ContraHarmonic => (x * x + y * y) / (x + y),
        MeanKind::Centroidal => 2.0 * (x * x + x * y + y * y) / (3.0 * (x + y)),
        MeanKind::Arithmetic => 0.5 * (x + y),
        MeanKind::Geometric => (x * y).sqrt(),
        MeanKind::Harmonic => 2.0 * x * y / (x + y),
        MeanKind::RootSquare => (0.5 * (x * x + y * y)).sqrt(),
        MeanKind::SeiffertP => seiffert_p(x, y),
        MeanKind::SeiffertT => seiffert_t(x, y),
    };
    (value * scale).clamp(pair.min(), pair.max())
}

fn seiffert_p(x: f64, y: f64) -> f64 {
    let u = (x - y) / (x + y);
    if u.abs() < SEIFFERT_SERIES_CUTOFF {
        0.5 * (x + y) * even_series(&ARCSIN_QUOTIENT, u)
    } else {
        (x - y) / (2.0 * arcsin_of_half_sum_ratio(x, y))
    }
}

fn seiffert_t(x: f64, y: f64) -> f64 {
    let u = (x - y) / (x + y);
    if u.abs() < SEIFFERT_SERIES_CUTOFF {
        0.5 * (x + y) * even_series(&ARCTAN_QUOTIENT, u)
    } else {
        (x - y) / (2.0 * u.atan())
    }
}

fn even_series(coeffs: &[f64], u: f64) -> f64 {
    let u2 = u * u;
    coeffs.iter().rev().fold(0.0, |acc, c| acc * u2 + c)
}

/// `arcsin((x - y) / (x + y))` without forming `1 - u`, which loses digits
/// as `x / y` grows: `tan` of the angle is `(x - y) / (2 sqrt(xy))`.
pub(crate) fn arcsin_of_half_sum_ratio(x: f64, y: f64) -> f64 {
    (x - y).atan2(2.0 * (x * y).sqrt())
}

/// The first Seiffert mean through its arctangent form
/// `(a - b) / (4 arctan(sqrt(a/b)) - pi)`.
///
/// `4 arctan(sqrt(a/b)) - pi` is rewritten as `4 arctan(w)` with
/// `w = (sqrt a - sqrt b) / (sqrt a + sqrt b)`, which avoids subtracting
/// `pi` from a nearly equal quantity when `a ≈ b`.
pub fn eval_seiffert_p_arctan_form(pair: PositivePair) -> Result<f64> {
    if pair.degenerate() {
        return Err(Error::Degenerate("the arctangent form of P"));
    }
    let (x, y, scale) = pair.canonical();
    let root_sum = x.sqrt() + y.sqrt();
    let w = (x - y) / (root_sum * root_sum);
    Ok((x - y) / (4.0 * w.atan()) * scale)
}

/// `u = (a - b) / (a + b)`, the reduction variable of every ratio.
pub fn half_sum_ratio(pair: PositivePair) -> f64 {
    let (x, y, _) = pair.canonical();
    let u = (x - y) / (x + y);
    if pair.a >= pair.b {
        u
    } else {
        -u
    }
}
