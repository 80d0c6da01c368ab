//! Exact Bernoulli numbers and the coefficient tables of the cosecant,
//! cotangent and squared-cosecant expansions built from them.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest supported index `2n` of `B₂ₙ`.
pub const MAX_BERNOULLI_INDEX: usize = 64;

/// The Laurent/Taylor series whose coefficients are tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `1/sin x = 1/x + Σ 2(2²ⁿ⁻¹-1)|B₂ₙ|/(2n)! x²ⁿ⁻¹`
    Csc,
    /// `cot x = 1/x - Σ 2²ⁿ|B₂ₙ|/(2n)! x²ⁿ⁻¹`
    Cot,
    /// `1/sin² x = 1/x² + Σ 2²ⁿ(2n-1)|B₂ₙ|/(2n)! x²ⁿ⁻²`
    CscSq,
    /// `h₁(x) = 1 + Σ [(1-n)2²ⁿ⁺¹-2]|B₂ₙ|/(2n)! x²ⁿ⁻²`, with the leading
    /// `1` folded into the constant coefficient.
    H1,
    /// `h₃(x) = Σ n·2²ⁿ⁺¹|B₂ₙ|/(2n)! x²ⁿ⁻²`
    H3,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 5] = [
        SeriesKind::Csc,
        SeriesKind::Cot,
        SeriesKind::CscSq,
        SeriesKind::H1,
        SeriesKind::H3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::Csc => "csc",
            SeriesKind::Cot => "cot",
            SeriesKind::CscSq => "cscsq",
            SeriesKind::H1 => "h1",
            SeriesKind::H3 => "h3",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// The power of `x` multiplying the `n`-th coefficient (`n ≥ 1`).
    pub fn power(self, n: usize) -> i32 {
        match self {
            SeriesKind::Csc | SeriesKind::Cot => 2 * n as i32 - 1,
            SeriesKind::CscSq | SeriesKind::H1 | SeriesKind::H3 => 2 * n as i32 - 2,
        }
    }

    /// Singular term that precedes the sum, if any.
    pub fn leading_term(self) -> Option<&'static str> {
        match self {
            SeriesKind::Csc | SeriesKind::Cot => Some("1/x"),
            SeriesKind::CscSq => Some("1/x^2"),
            SeriesKind::H1 | SeriesKind::H3 => None,
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    /// Exact `n`-th coefficient given `|B₂ₙ|`.
    fn coefficient(self, n: usize, abs_b: &BigRational) -> BigRational {
        let big = |v: i64| BigRational::from_integer(BigInt::from(v));
        let pow2 = |e: usize| BigRational::from_integer(BigInt::one() << e);
        let factorial = BigRational::from_integer((1..=2 * n as u64).map(BigInt::from).product());
        let scale = match self {
            SeriesKind::Csc => big(2) * (pow2(2 * n - 1) - big(1)),
            SeriesKind::Cot => -pow2(2 * n),
            SeriesKind::CscSq => pow2(2 * n) * big(2 * n as i64 - 1),
            SeriesKind::H1 => big(1 - n as i64) * pow2(2 * n + 1) - big(2),
            SeriesKind::H3 => big(n as i64) * pow2(2 * n + 1),
        };
        let c = scale * abs_b / factorial;
        if self == SeriesKind::H1 && n == 1 {
            c + big(1)
        } else {
            c
        }
    }
}

/// `B₂, B₄, …, B_{max_index}` as exact rationals, with binary64 copies and
/// the derived series coefficients.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    max_index: usize,
    values: Vec<BigRational>,
    abs_f64: Vec<f64>,
    coefficients: [Vec<f64>; 5],
}

impl BernoulliTable {
    /// Builds and verifies the table; `max_index` must be even and in `[2, 64]`.
    pub fn new(max_index: usize) -> Result<Self> {
        if !(2..=MAX_BERNOULLI_INDEX).contains(&max_index) || !max_index.is_multiple_of(2) {
            return Err(Error::Range(format!(
                "Bernoulli table size must be an even integer in [2, {MAX_BERNOULLI_INDEX}], got {max_index}"
            )));
        }
        let all = bernoulli_recurrence(max_index);
        let values: Vec<BigRational> = (1..=max_index / 2).map(|n| all[2 * n].clone()).collect();
        let abs_f64 = values.iter().map(|b| rational_to_f64(&b.abs())).collect();
        let coefficients = SeriesKind::ALL.map(|kind| {
            values
                .iter()
                .enumerate()
                .map(|(i, b)| rational_to_f64(&kind.coefficient(i + 1, &b.abs())))
                .collect()
        });
        let table = Self {
            max_index,
            values,
            abs_f64,
            coefficients,
        };
        table.verify()?;
        Ok(table)
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    /// Number of stored even-index values, `max_index / 2`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `B₂ₙ` for `1 ≤ n ≤ len()`.
    pub fn b2n(&self, n: usize) -> Option<&BigRational> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn abs_b2n(&self, n: usize) -> Option<BigRational> {
        self.b2n(n).map(Signed::abs)
    }

    pub fn abs_b2n_f64(&self, n: usize) -> Option<f64> {
        n.checked_sub(1).and_then(|i| self.abs_f64.get(i).copied())
    }

    /// Binary64 coefficients `c₁, c₂, …` of `kind`.
    pub fn coefficients(&self, kind: SeriesKind) -> &[f64] {
        &self.coefficients[kind.index()]
    }

    /// The first `order` coefficients of `kind` as exact rationals.
    pub fn exact_coefficients(&self, kind: SeriesKind, order: usize) -> Result<Vec<BigRational>> {
        if order > self.len() {
            return Err(Error::Range(format!(
                "{} coefficients requested but the Bernoulli table only reaches B_{}",
                order, self.max_index
            )));
        }
        Ok(self.values[..order]
            .iter()
            .enumerate()
            .map(|(i, b)| kind.coefficient(i + 1, &b.abs()))
            .collect())
    }

    /// `(-1)ⁿ⁻¹ B₂ₙ > 0` for every stored `n`.
    pub fn signs_alternate(&self) -> bool {
        self.values.iter().enumerate().all(|(i, b)| {
            if i % 2 == 0 {
                b.is_positive()
            } else {
                b.is_negative()
            }
        })
    }

    /// Largest relative gap between `|B₂ₙ|` and `2(2n)! ζ(2n) / (2π)²ⁿ`.
    pub fn zeta_discrepancy(&self) -> f64 {
        let mut factorial = 1.0f64;
        let mut two_pi_pow = 1.0f64;
        let mut worst = 0.0f64;
        for n in 1..=self.len() {
            let m = 2 * n;
            factorial *= ((m - 1) * m) as f64;
            two_pi_pow *= (2.0 * PI) * (2.0 * PI);
            let predicted = 2.0 * factorial * zeta_even(m as i32) / two_pi_pow;
            let stored = self.abs_f64[n - 1];
            worst = worst.max((predicted - stored).abs() / stored);
        }
        worst
    }

    /// Checks B₂, B₄, the sign pattern and the ζ(2n) identity.
    pub fn verify(&self) -> Result<()> {
        let expect = |n: usize, num: i64, den: i64| match self.b2n(n) {
            Some(b) if *b != BigRational::new(num.into(), den.into()) => Err(Error::Verification(
                format!("B_{} = {} (expected {}/{})", 2 * n, b, num, den),
            )),
            _ => Ok(()),
        };
        expect(1, 1, 6)?;
        expect(2, -1, 30)?;
        if !self.signs_alternate() {
            return Err(Error::Verification("B_2n signs do not alternate".into()));
        }
        let gap = self.zeta_discrepancy();
        if gap > 1e-12 {
            return Err(Error::Verification(format!(
                "|B_2n| disagrees with 2(2n)! zeta(2n)/(2 pi)^2n by {gap:e}"
            )));
        }
        Ok(())
    }
}

/// `bernoulli_table(n_max)` with `n_max` the largest index `2n` kept.
pub fn bernoulli_table(n_max: usize) -> Result<BernoulliTable> {
    BernoulliTable::new(n_max)
}

/// `B₀ … B_m` from `Σ_{j=0}^{k} C(k+1, j) B_j = 0`, `k ≥ 1`.
fn bernoulli_recurrence(m: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(m + 1);
    b.push(BigRational::one());
    // row k+1 of Pascal's triangle, updated in place
    let mut binom: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
    for k in 1..=m {
        let mut next = vec![BigInt::one(); binom.len() + 1];
        for j in 1..binom.len() {
            next[j] = &binom[j - 1] + &binom[j];
        }
        binom = next;
        let sum = (0..k).fold(BigRational::zero(), |acc, j| {
            if j > 1 && j % 2 == 1 {
                acc
            } else {
                acc + BigRational::from_integer(binom[j].clone()) * &b[j]
            }
        });
        b.push(-sum / BigRational::from_integer(BigInt::from(k + 1)));
    }
    b
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `ζ(s)` for even `s ≥ 2`: a direct partial sum plus the Euler–Maclaurin tail.
fn zeta_even(s: i32) -> f64 {
    const N: i32 = 1000;
    let sf = s as f64;
    let nf = N as f64;
    let head: f64 = (1..N).rev().map(|k| (k as f64).powi(-s)).sum();
    let tail = nf.powi(1 - s) / (sf - 1.0) + 0.5 * nf.powi(-s) + sf / 12.0 * nf.powi(-s - 1)
        - sf * (sf + 1.0) * (sf + 2.0) / 720.0 * nf.powi(-s - 3);
    head + tail
}
