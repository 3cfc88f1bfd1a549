//! The elliptic genus and its two cusp expansions.
//!
//! Three independent routes compute the same q-series:
//!
//! * the genus route: expand `f(x)`, form `Q(x) = x/f(x)` over q-series and
//!   run the multiplicative-sequence machinery of [`crate::genus`];
//! * the product-formula route ([`signature_cusp_expansion`],
//!   [`acusp_expansion`]): a per-root density times the Chern characters of
//!   `S_t` and `Λ_t` written as products over roots, converted to Pontryagin
//!   numbers through the monomial basis;
//! * the brute-force route ([`lambda_sym_bruteforce_oracle`]): every
//!   `Λ^i`/`S^j` term below the requested q-order is multiplied out from
//!   elementary and complete symmetric polynomials in the `e^{root}`.

mod bruteforce;
mod checks;
mod cusp;
mod symmetric;

use serde::Serialize;
use thiserror::Error;

use crate::genus::{evaluate_genus, CharSeries, GenusError, ManifoldData};
use crate::series::{rat, OffsetSeries, QSeries, Series, SeriesError};

pub use bruteforce::{lambda_sym_bruteforce_oracle, BRUTEFORCE_MAX_Q_PREC};
pub use checks::{arithmetic_checks, ArithmeticReport, Check};
pub use cusp::{acusp_expansion, ahat_density, signature_cusp_expansion, signature_density};
pub use symmetric::{zero_one_matrix_count, MonomialPairing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EllipticError {
    #[error(transparent)]
    Genus(#[from] GenusError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("q-precision {0} exceeds the brute-force limit {BRUTEFORCE_MAX_Q_PREC}")]
    PrecisionTooLarge(usize),
    #[error("invalid precision: q_prec = {q_prec}, x_prec = {x_prec}")]
    InvalidPrecision { q_prec: usize, x_prec: usize },
}

/// Which cusp an expansion belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cusp {
    /// `φ(M) = sign(M) + 2·sign(M, T_C M)·q + …`, offset 0.
    Signature,
    /// `φ₀(M) = q^{-k/2}·(Â(M) − Â(M, T_C M)·q ± …)`.
    AHat,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CuspExpansion {
    pub cusp: Cusp,
    pub series: OffsetSeries,
    pub manifold: ManifoldData,
}

impl CuspExpansion {
    pub(crate) fn new(cusp: Cusp, body: QSeries, manifold: &ManifoldData) -> Self {
        let series = match cusp {
            Cusp::Signature => OffsetSeries::unshifted(body),
            Cusp::AHat => OffsetSeries::new(-crate::series::ratio(manifold.k() as i64, 2), body)
                .expect("-k/2 is a half-integer"),
        };
        CuspExpansion { cusp, series, manifold: manifold.clone() }
    }

    pub fn coeffs(&self) -> &[crate::series::Rational] {
        self.series.coeffs()
    }
}

/// `Σ_j c_j x^j` over q-series with `c_j = δ_{j0}·a + b·qⁿ·s^j/j!`, i.e.
/// `a + b·qⁿ·e^{s·x}`.
pub(crate) fn shifted_exponential(a: i64, b: i64, n: usize, s: i64, q_prec: usize, x_prec: usize) -> Series<QSeries> {
    let e = QSeries::exp_linear(&rat(s), x_prec);
    let coeffs = e
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut term = QSeries::monomial(c * rat(b), n, q_prec);
            if j == 0 {
                term = &term + &QSeries::constant(rat(a), q_prec);
            }
            term
        })
        .collect();
    Series::from_coeffs(coeffs)
}

/// The odd x-series
/// `f(x) = (1−e^{−x})/(1+e^{−x}) · ∏_{n≥1} (1−qⁿe^{−x})(1−qⁿe^{x}) / ((1+qⁿe^{−x})(1+qⁿe^{x}))`
/// with coefficients in q-series; factor `n` starts at `qⁿ`, so only
/// `n < q_prec` enters.
pub fn f_series(q_prec: usize, x_prec: usize) -> Result<Series<QSeries>, EllipticError> {
    if q_prec < 1 || x_prec < 2 {
        return Err(EllipticError::InvalidPrecision { q_prec, x_prec });
    }
    let numerator = shifted_exponential(1, -1, 0, -1, q_prec, x_prec);
    let denominator = shifted_exponential(1, 1, 0, -1, q_prec, x_prec);
    let mut f = &numerator * &denominator.inverse()?;
    for n in 1..q_prec {
        let num = &shifted_exponential(1, -1, n, -1, q_prec, x_prec) * &shifted_exponential(1, -1, n, 1, q_prec, x_prec);
        let den = &shifted_exponential(1, 1, n, -1, q_prec, x_prec) * &shifted_exponential(1, 1, n, 1, q_prec, x_prec);
        f = &f * &(&num * &den.inverse()?);
    }
    Ok(f)
}

/// `Q(x) = x/f(x)` as an even characteristic series over q-series.
#[derive(Debug, Clone)]
pub struct EllipticCharSeries {
    pub series: CharSeries<QSeries>,
    pub q_prec: usize,
    pub x_prec: usize,
}

pub fn elliptic_q(q_prec: usize, x_prec: usize) -> Result<EllipticCharSeries, EllipticError> {
    let f = f_series(q_prec, x_prec)?;
    let q = f.shift_down()?.inverse()?;
    let series = CharSeries::from_x_series(&q)?;
    Ok(EllipticCharSeries { series, q_prec, x_prec })
}

/// x-precision needed so that `Q` is known through `x^{2k}`.
pub(crate) fn x_prec_for(m: &ManifoldData) -> usize {
    2 * m.k() as usize + 2
}

/// The elliptic genus through the multiplicative sequence of `x/f(x)`.
pub fn elliptic_genus(m: &ManifoldData, q_prec: usize) -> Result<CuspExpansion, EllipticError> {
    let q = elliptic_q(q_prec, x_prec_for(m))?;
    let value = evaluate_genus(&q.series, m)?;
    Ok(CuspExpansion::new(Cusp::Signature, value, m))
}

/// Constant q-series coefficient of `Q(0)`; exposed for sanity checks.
pub fn elliptic_constant_term(q_prec: usize) -> Result<QSeries, EllipticError> {
    Ok(elliptic_q(q_prec, 2)?.series.constant_term().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::builtin_manifold;
    use crate::series::{ratio, Rational};

    /// q^j slice of an x-series over q-series, as a rational x-series.
    fn slice(s: &Series<QSeries>, j: usize) -> QSeries {
        s.map(|c| c.coeffs()[j].clone())
    }

    #[test]
    fn f_q0_slice_is_tanh_half() {
        let f = f_series(3, 8).unwrap();
        let zero = rat(0);
        let expected = [zero.clone(), ratio(1, 2), zero.clone(), ratio(-1, 24), zero.clone(), ratio(1, 240), zero.clone(), ratio(-17, 40320)];
        assert_eq!(slice(&f, 0).coeffs(), &expected);
    }

    #[test]
    fn f_q1_slice_is_minus_four_tanh_cosh() {
        let prec = 8;
        let f = f_series(3, prec).unwrap();
        let tanh_half = slice(&f, 0);
        let cosh = (&QSeries::exp_linear(&rat(1), prec) + &QSeries::exp_linear(&rat(-1), prec)).scale(&ratio(1, 2));
        let expected = (&tanh_half * &cosh).scale(&rat(-4));
        assert_eq!(slice(&f, 1), expected);
    }

    #[test]
    fn f_is_odd_and_q_is_even() {
        let f = f_series(4, 9).unwrap();
        assert!(f.is_odd());
        let flipped = f.scale_variable(&QSeries::constant(rat(-1), 4));
        assert_eq!(flipped, f.neg());
        let q = elliptic_q(4, 9).unwrap();
        assert_eq!(q.series.in_y().prec(), 4);
    }

    #[test]
    fn q_slices() {
        let q = elliptic_q(3, 8).unwrap();
        let y = q.series.in_y();
        let q0: Vec<Rational> = y.coeffs().iter().map(|c| c.coeffs()[0].clone()).collect();
        assert_eq!(q0[0], rat(2));
        assert_eq!(q0[1], ratio(1, 6));
        assert_eq!(q0[2], ratio(-1, 360));
        // 2·∏((1+qⁿ)/(1−qⁿ))² = 2 + 8q + 24q² + …
        assert_eq!(q.series.constant_term(), &QSeries::from_ints(&[2, 8, 24]));
    }

    #[test]
    fn invalid_precision() {
        assert!(matches!(f_series(0, 4), Err(EllipticError::InvalidPrecision { .. })));
        assert!(matches!(f_series(2, 1), Err(EllipticError::InvalidPrecision { .. })));
    }

    #[test]
    fn signature_at_q0() {
        for (name, p, sign) in [("cp", 2, 1), ("hp", 2, 1), ("k3", 0, -16), ("sphere", 8, 0)] {
            let m = builtin_manifold(name, p).unwrap();
            let e = elliptic_genus(&m, 2).unwrap();
            assert_eq!(e.coeffs()[0], rat(sign), "{name}{p}");
        }
    }
}
