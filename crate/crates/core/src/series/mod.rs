//! Truncated formal power series over an exact coefficient ring.
//!
//! A `Series<R>` stores exactly `prec` coefficients for the exponents
//! `0..prec`; everything at or above `prec` is unknown. Binary operations
//! truncate to the smaller precision of their operands and nothing ever
//! grows precision silently. Nesting is done by instantiating the
//! coefficient ring with another series, e.g. `Series<Series<Rational>>`
//! for x-series whose coefficients are q-series.

mod offset;
mod rational;

use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use offset::OffsetSeries;
pub use rational::{
    is_canonical, is_integer, parse_rational, rat, ratio, rational_to_string, serde_string, QAlgebra,
    Rational, Ring,
};

/// Truncated q-series with rational coefficients.
pub type QSeries = Series<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("bad constant term: {0}")]
    BadConstantTerm(&'static str),
    #[error("cannot divide by the variable: constant term is nonzero")]
    NonZeroConstantTerm,
    #[error("precision exhausted")]
    PrecisionExhausted,
    #[error("offset {0} is not a half-integer")]
    InvalidOffset(String),
    #[error("offsets differ: {0} vs {1}")]
    OffsetMismatch(String, String),
    #[error("coefficient count {count} does not match precision {prec}")]
    PrecisionMismatch { count: usize, prec: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Series with the given coefficients; precision is their count.
    ///
    /// Panics on an empty coefficient vector: precision 0 carries no
    /// information and has no zero element to build from.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series precision must be at least 1");
        Series { coeffs }
    }

    /// `c + O(t^prec)`.
    pub fn constant(c: R, prec: usize) -> Self {
        assert!(prec >= 1, "series precision must be at least 1");
        let zero = c.zero_like();
        let mut coeffs = vec![zero; prec];
        coeffs[0] = c;
        Series { coeffs }
    }

    /// `c·t^power + O(t^prec)` (zero if `power >= prec`).
    pub fn monomial(c: R, power: usize, prec: usize) -> Self {
        let mut s = Series::constant(c.zero_like(), prec);
        if power < prec {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    pub fn constant_term(&self) -> &R {
        &self.coeffs[0]
    }

    pub fn zero_like_series(&self) -> Self {
        Series::constant(self.coeffs[0].zero_like(), self.prec())
    }

    pub fn one_like_series(&self) -> Self {
        Series::constant(self.coeffs[0].one_like(), self.prec())
    }

    pub fn truncate(&self, prec: usize) -> Self {
        assert!(prec >= 1, "series precision must be at least 1");
        Series { coeffs: self.coeffs[..prec.min(self.prec())].to_vec() }
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Series<S> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec().min(other.prec());
        Series { coeffs: (0..prec).map(|i| self.coeffs[i].plus(&other.coeffs[i])).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let prec = self.prec().min(other.prec());
        Series { coeffs: (0..prec).map(|i| self.coeffs[i].minus(&other.coeffs[i])).collect() }
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(Ring::negate).collect() }
    }

    /// Cauchy product truncated to the smaller precision.
    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec().min(other.prec());
        let mut coeffs = Vec::with_capacity(prec);
        for n in 0..prec {
            let mut acc = self.coeffs[0].times(&other.coeffs[n]);
            for i in 1..=n {
                if self.coeffs[i].is_zero_elem() || other.coeffs[n - i].is_zero_elem() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[i].times(&other.coeffs[n - i]));
            }
            coeffs.push(acc);
        }
        Series { coeffs }
    }

    /// Multiply every coefficient by a ring element.
    pub fn mul_scalar(&self, c: &R) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a.times(c)).collect() }
    }

    /// Multiplicative inverse to the same precision.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(SeriesError::NonUnitConstantTerm)?;
        let prec = self.prec();
        let mut out: Vec<R> = Vec::with_capacity(prec);
        out.push(inv0.clone());
        for n in 1..prec {
            let mut acc = inv0.zero_like();
            for k in 1..=n {
                if self.coeffs[k].is_zero_elem() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[k].times(&out[n - k]));
            }
            out.push(acc.times(&inv0).negate());
        }
        Ok(Series { coeffs: out })
    }

    /// Divide by the variable. Valid only when the constant term is zero;
    /// precision drops by one.
    pub fn shift_down(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero_elem() {
            return Err(SeriesError::NonZeroConstantTerm);
        }
        if self.prec() < 2 {
            return Err(SeriesError::PrecisionExhausted);
        }
        Ok(Series { coeffs: self.coeffs[1..].to_vec() })
    }

    /// Multiply by the variable; precision grows by one since the new
    /// constant term is exactly zero.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.prec() + 1);
        coeffs.push(self.coeffs[0].zero_like());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Substitute `t ↦ c·t`.
    pub fn scale_variable(&self, c: &R) -> Self {
        let mut power = c.one_like();
        let mut coeffs = Vec::with_capacity(self.prec());
        for a in &self.coeffs {
            coeffs.push(a.times(&power));
            power = power.times(c);
        }
        Series { coeffs }
    }

    /// All odd-index coefficients are zero.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Ring::is_zero_elem)
    }

    /// All even-index coefficients are zero.
    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Ring::is_zero_elem)
    }
}

impl<R: QAlgebra> Series<R> {
    /// Truncated exponential; the constant term must be zero.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero_elem() {
            return Err(SeriesError::BadConstantTerm("exp needs constant term 0"));
        }
        let prec = self.prec();
        let mut out: Vec<R> = Vec::with_capacity(prec);
        out.push(self.coeffs[0].one_like());
        // n·b_n = Σ_{k=1..n} k·a_k·b_{n-k}
        for n in 1..prec {
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=n {
                if self.coeffs[k].is_zero_elem() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[k].times(&out[n - k]).scale(&rat(k as i64)));
            }
            out.push(acc.scale(&ratio(1, n as i64)));
        }
        Ok(Series { coeffs: out })
    }

    /// Truncated logarithm; the constant term must be one.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one_elem() {
            return Err(SeriesError::BadConstantTerm("log needs constant term 1"));
        }
        let prec = self.prec();
        let mut out: Vec<R> = Vec::with_capacity(prec);
        out.push(self.coeffs[0].zero_like());
        // n·b_n = n·a_n − Σ_{k=1..n-1} k·b_k·a_{n-k}
        for n in 1..prec {
            let mut acc = self.coeffs[n].scale(&rat(n as i64));
            for k in 1..n {
                if self.coeffs[n - k].is_zero_elem() {
                    continue;
                }
                acc = acc.minus(&out[k].times(&self.coeffs[n - k]).scale(&rat(k as i64)));
            }
            out.push(acc.scale(&ratio(1, n as i64)));
        }
        Ok(Series { coeffs: out })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a.scale(r)).collect() }
    }
}

impl Series<Rational> {
    pub fn zero(prec: usize) -> Self {
        Series::constant(rat(0), prec)
    }

    pub fn one(prec: usize) -> Self {
        Series::constant(rat(1), prec)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `exp(c·t)` to the given precision.
    pub fn exp_linear(c: &Rational, prec: usize) -> Self {
        let mut coeffs = Vec::with_capacity(prec);
        let mut term = rat(1);
        for n in 0..prec {
            coeffs.push(term.clone());
            term = term * c / rat(n as i64 + 1);
        }
        Series::from_coeffs(coeffs)
    }

    /// Lift a rational series into a series over a larger Q-algebra, using
    /// `template` to supply that algebra's context (e.g. q-precision).
    pub fn lift<S: QAlgebra>(&self, template: &S) -> Series<S> {
        self.map(|c| template.from_rational_like(c))
    }
}

impl<R: Ring> Ring for Series<R> {
    fn zero_like(&self) -> Self {
        self.zero_like_series()
    }
    fn one_like(&self) -> Self {
        self.one_like_series()
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero_elem)
    }
    fn plus(&self, other: &Self) -> Self {
        Series::add(self, other)
    }
    fn minus(&self, other: &Self) -> Self {
        Series::sub(self, other)
    }
    fn times(&self, other: &Self) -> Self {
        Series::mul(self, other)
    }
    fn negate(&self) -> Self {
        Series::neg(self)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

impl<R: QAlgebra> QAlgebra for Series<R> {
    fn scale(&self, r: &Rational) -> Self {
        Series::scale(self, r)
    }
}

impl<'a, R: Ring> Add for &'a Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: Self) -> Series<R> {
        Series::add(self, rhs)
    }
}

impl<'a, R: Ring> Sub for &'a Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: Self) -> Series<R> {
        Series::sub(self, rhs)
    }
}

impl<'a, R: Ring> Mul for &'a Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: Self) -> Series<R> {
        Series::mul(self, rhs)
    }
}

impl<'a, R: Ring> Neg for &'a Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        Series::neg(self)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    coeffs: Vec<String>,
    prec: usize,
}

impl Serialize for Series<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesRepr { coeffs: self.coeffs.iter().map(rational_to_string).collect(), prec: self.prec() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Series<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(d)?;
        if repr.coeffs.len() != repr.prec || repr.prec == 0 {
            return Err(D::Error::custom(SeriesError::PrecisionMismatch {
                count: repr.coeffs.len(),
                prec: repr.prec,
            }));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(Series { coeffs })
    }
}
