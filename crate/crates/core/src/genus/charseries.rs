use super::GenusError;
use crate::series::{rat, QAlgebra, QSeries, Rational, Ring, Series};

/// Even characteristic power series `Q(x) = a_0 + a_2·x² + a_4·x⁴ + …`,
/// stored as a series in `y = x²`.
///
/// `a_0` must be a unit but need not be 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CharSeries<R> {
    in_y: Series<R>,
}

impl<R: Ring> CharSeries<R> {
    /// From the coefficients `a_0, a_2, a_4, …` of an even series.
    pub fn from_y_series(in_y: Series<R>) -> Result<Self, GenusError> {
        if in_y.constant_term().try_inverse().is_none() {
            return Err(GenusError::NonUnitLeadingTerm);
        }
        Ok(CharSeries { in_y })
    }

    /// From a full x-series; odd coefficients must vanish.
    pub fn from_x_series(in_x: &Series<R>) -> Result<Self, GenusError> {
        if !in_x.is_even() {
            return Err(GenusError::NotEven);
        }
        let even: Vec<R> = in_x.coeffs().iter().step_by(2).cloned().collect();
        Self::from_y_series(Series::from_coeffs(even))
    }

    pub fn in_y(&self) -> &Series<R> {
        &self.in_y
    }

    pub fn constant_term(&self) -> &R {
        self.in_y.constant_term()
    }

    /// Highest weight whose K-polynomial this series determines.
    pub fn max_weight(&self) -> usize {
        self.in_y.prec() - 1
    }

    /// `Q / a_0`.
    pub fn normalized(&self) -> Result<Series<R>, GenusError> {
        let inv = self.constant_term().try_inverse().ok_or(GenusError::NonUnitLeadingTerm)?;
        Ok(self.in_y.mul_scalar(&inv))
    }
}

fn cosh_over_y(scale: &Rational, terms: usize) -> QSeries {
    // Σ (s·y)^n / (2n)!
    let mut coeffs = Vec::with_capacity(terms);
    let mut fact = rat(1);
    let mut pow = rat(1);
    for n in 0..terms {
        if n > 0 {
            fact = fact * rat((2 * n - 1) as i64) * rat((2 * n) as i64);
            pow = pow * scale;
        }
        coeffs.push(&pow / &fact);
    }
    Series::from_coeffs(coeffs)
}

fn sinhc_over_y(scale: &Rational, terms: usize) -> QSeries {
    // Σ (s·y)^n / (2n+1)!
    let mut coeffs = Vec::with_capacity(terms);
    let mut fact = rat(1);
    let mut pow = rat(1);
    for n in 0..terms {
        if n > 0 {
            fact = fact * rat((2 * n) as i64) * rat((2 * n + 1) as i64);
            pow = pow * scale;
        }
        coeffs.push(&pow / &fact);
    }
    Series::from_coeffs(coeffs)
}

impl CharSeries<Rational> {
    /// `x / tanh(x)` through `x^{2·max_weight}`: the signature.
    pub fn l_genus(max_weight: usize) -> Self {
        let n = max_weight + 1;
        let one = rat(1);
        let q = &cosh_over_y(&one, n) * &sinhc_over_y(&one, n).inverse().expect("unit");
        CharSeries { in_y: q }
    }

    /// `(x/2) / sinh(x/2)` through `x^{2·max_weight}`: the Â-genus.
    pub fn a_hat(max_weight: usize) -> Self {
        let n = max_weight + 1;
        let quarter = Rational::new(1.into(), 4.into());
        CharSeries { in_y: sinhc_over_y(&quarter, n).inverse().expect("unit") }
    }

    /// The constant series 1.
    pub fn trivial(max_weight: usize) -> Self {
        CharSeries { in_y: QSeries::one(max_weight + 1) }
    }
}

impl<R: QAlgebra> CharSeries<R> {
    pub fn scale_series(&self, c: &Rational) -> Result<Self, GenusError> {
        Self::from_y_series(self.in_y.scale(c))
    }
}
