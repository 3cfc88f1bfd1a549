//! Cusp expansions from the index-theoretic product formulas.
//!
//! With Chern roots `±x_1, …, ±x_{2k}` of `T_C M`, both integrands factor
//! over the `x_i`: `∏ᵢ g(xᵢ)` for a single even x-series `g` over q-series.
//! The coefficient of `m_μ(x²)` in that product is `∏_j g_{2μ_j}` (with
//! `g_0` filling the remaining roots), which [`MonomialPairing`] turns into
//! a characteristic number.

use super::symmetric::MonomialPairing;
use super::{shifted_exponential, Cusp, CuspExpansion, EllipticError};
use crate::genus::ManifoldData;
use crate::series::{rat, ratio, QSeries, Series};

/// `x / tanh(x/2) = (eˣ + 1)·x/(eˣ − 1)`.
pub fn signature_density(prec: usize) -> QSeries {
    let e = QSeries::exp_linear(&rat(1), prec + 1);
    let one = QSeries::one(prec + 1);
    let expm1_over_x = (&e - &one).shift_down().expect("zero constant term");
    let plus = (&e + &one).truncate(prec);
    &plus * &expm1_over_x.inverse().expect("unit")
}

/// `(x/2) / sinh(x/2) = x / (e^{x/2} − e^{−x/2})`.
pub fn ahat_density(prec: usize) -> QSeries {
    let half = ratio(1, 2);
    let diff = &QSeries::exp_linear(&half, prec + 1) - &QSeries::exp_linear(&-half, prec + 1);
    diff.shift_down().expect("zero constant term").inverse().expect("unit")
}

fn lift(s: &QSeries, q_prec: usize) -> Series<QSeries> {
    s.lift(&QSeries::one(q_prec))
}

/// `∏_{r = ±x} (1 + c·qⁿ·e^r)`, or its inverse when `invert` is set.
fn root_pair_factor(c: i64, n: usize, invert: bool, q_prec: usize, x_prec: usize) -> Result<Series<QSeries>, EllipticError> {
    let f = &shifted_exponential(1, c, n, 1, q_prec, x_prec) * &shifted_exponential(1, c, n, -1, q_prec, x_prec);
    Ok(if invert { f.inverse()? } else { f })
}

/// Per-root integrand for the signature cusp:
/// `x/tanh(x/2) · ∏_{n≥1} ∏_{r=±x} (1 + qⁿe^r)/(1 − qⁿe^r)`.
pub(crate) fn signature_root_series(q_prec: usize, x_prec: usize) -> Result<Series<QSeries>, EllipticError> {
    let mut g = lift(&signature_density(x_prec), q_prec);
    for n in 1..q_prec {
        // ch Λ_{qⁿ}: ∏(1 + qⁿe^r); ch S_{qⁿ}: ∏(1 − qⁿe^r)^{-1}
        g = &g * &root_pair_factor(1, n, false, q_prec, x_prec)?;
        g = &g * &root_pair_factor(-1, n, true, q_prec, x_prec)?;
    }
    Ok(g)
}

/// Per-root integrand for the Â cusp:
/// `(x/2)/sinh(x/2) · ∏_{n odd} ∏_r (1 − qⁿe^r) · ∏_{n even} ∏_r (1 − qⁿe^r)^{-1}`.
pub(crate) fn ahat_root_series(q_prec: usize, x_prec: usize) -> Result<Series<QSeries>, EllipticError> {
    let mut g = lift(&ahat_density(x_prec), q_prec);
    for n in 1..q_prec {
        g = &g * &root_pair_factor(-1, n, n % 2 == 0, q_prec, x_prec)?;
    }
    Ok(g)
}

fn pair_root_series(g: &Series<QSeries>, m: &ManifoldData, q_prec: usize) -> QSeries {
    let roots = 2 * m.k() as usize;
    let pairing = MonomialPairing::new(m);
    let coeffs: Vec<QSeries> = pairing
        .partitions()
        .iter()
        .map(|mu| {
            let mut c = QSeries::one(q_prec);
            for exponent in mu.padded(roots) {
                c = &c * &g.coeffs()[2 * exponent as usize];
            }
            c
        })
        .collect();
    pairing.pair(&coeffs)
}

fn check_even(g: &Series<QSeries>) {
    debug_assert!(g.is_even(), "per-root integrand must be even in x");
}

/// `φ(M) = sign(M, ⊗_{n≥1} S_{qⁿ}T_C M ⊗ Λ_{qⁿ}T_C M)` via the product formula.
pub fn signature_cusp_expansion(m: &ManifoldData, q_prec: usize) -> Result<CuspExpansion, EllipticError> {
    if q_prec < 1 {
        return Err(EllipticError::InvalidPrecision { q_prec, x_prec: 0 });
    }
    let x_prec = 2 * m.k() as usize + 1;
    let g = signature_root_series(q_prec, x_prec)?;
    check_even(&g);
    Ok(CuspExpansion::new(Cusp::Signature, pair_root_series(&g, m, q_prec), m))
}

/// The bracket of `φ₀(M) = q^{-k/2}·Â(M, ⊗_{n odd} Λ_{-qⁿ}T_C M ⊗ ⊗_{n even} S_{qⁿ}T_C M)`,
/// with offset `-k/2` attached.
pub fn acusp_expansion(m: &ManifoldData, q_prec: usize) -> Result<CuspExpansion, EllipticError> {
    if q_prec < 1 {
        return Err(EllipticError::InvalidPrecision { q_prec, x_prec: 0 });
    }
    let x_prec = 2 * m.k() as usize + 1;
    let g = ahat_root_series(q_prec, x_prec)?;
    check_even(&g);
    Ok(CuspExpansion::new(Cusp::AHat, pair_root_series(&g, m, q_prec), m))
}
