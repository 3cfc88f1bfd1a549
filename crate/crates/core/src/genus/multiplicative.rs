//! Multiplicative sequences: from a characteristic series `Q` to the
//! K-polynomials `K_j(p_1, …, p_j)` with `∏ᵢ Q̃(xᵢ) = Σ_j K_j`.
//!
//! Route: `log Q̃(y) = Σ l_j y^j`, so `Σᵢ log Q̃(yᵢ) = Σ l_j·P_j` with
//! `P_j` the power sums of the squared roots. Newton's identities write
//! `P_j` in the elementary symmetric functions `p_j = e_j(x²)`; the
//! K-polynomials are the graded exponential of that sum.

use std::sync::Mutex;

use super::charseries::CharSeries;
use super::graded::GradedPoly;
use super::manifold::ManifoldData;
use super::partition::Partition;
use super::GenusError;
use crate::series::{rat, QAlgebra, Rational};

/// Power sums `P_1..P_m` of the squared roots in the basis `p_j = e_j`.
pub fn power_sums_in_elementary(m: u32) -> Vec<GradedPoly<Rational>> {
    let e = |j: u32| GradedPoly::monomial(Partition::single(j), rat(1));
    let mut sums: Vec<GradedPoly<Rational>> = vec![GradedPoly::zero()];
    for j in 1..=m {
        // P_j = Σ_{i=1}^{j-1} (-1)^{i-1} e_i P_{j-i} + (-1)^{j-1} j e_j
        let mut pj = e(j).mul_scalar(&rat(if j % 2 == 1 { j as i64 } else { -(j as i64) }));
        for i in 1..j {
            let sign = if i % 2 == 1 { rat(1) } else { rat(-1) };
            pj = pj.add(&e(i).mul(&sums[(j - i) as usize]).mul_scalar(&sign));
        }
        sums.push(pj);
    }
    sums
}

/// `K_0..K_m` for `Q`, normalized by its constant term.
pub fn k_polynomials<R: QAlgebra>(q: &CharSeries<R>, m: usize) -> Result<Vec<GradedPoly<R>>, GenusError> {
    if q.max_weight() < m {
        return Err(GenusError::InsufficientPrecision { needed: m, available: q.max_weight() });
    }
    let normalized = q.normalized()?.truncate(m + 1);
    let logs = normalized.log().map_err(|_| GenusError::NonUnitLeadingTerm)?;
    let unit = normalized.constant_term().clone();
    let power_sums = power_sums_in_elementary(m as u32);

    // weight-j part of Σ l_j P_j
    let log_parts: Vec<GradedPoly<R>> = (0..=m)
        .map(|j| {
            if j == 0 {
                GradedPoly::zero()
            } else {
                power_sums[j].lift_scaled(&unit).mul_scalar(&logs.coeffs()[j])
            }
        })
        .collect();

    // j·K_j = Σ_{i=1}^{j} i·L_i·K_{j-i}
    let mut ks: Vec<GradedPoly<R>> = vec![GradedPoly::constant(unit.clone())];
    for j in 1..=m {
        let mut acc = GradedPoly::zero();
        for i in 1..=j {
            let term = log_parts[i].mul(&ks[j - i]).mul_scalar(&unit.scale(&rat(i as i64)));
            acc = acc.add(&term);
        }
        ks.push(acc.mul_scalar(&unit.scale(&Rational::new(1.into(), (j as i64).into()))));
    }
    Ok(ks)
}

/// `⟨K_k, M⟩ · a_0^{2k}` for a `4k`-manifold.
pub fn evaluate_genus<R: QAlgebra>(q: &CharSeries<R>, m: &ManifoldData) -> Result<R, GenusError> {
    let k = m.k();
    let ks = k_polynomials(q, k as usize)?;
    Ok(pair_top(q, &ks[k as usize], m))
}

fn pair_top<R: QAlgebra>(q: &CharSeries<R>, top: &GradedPoly<R>, m: &ManifoldData) -> R {
    let k = m.k();
    let mut total = q.constant_term().zero_like();
    for (part, c) in top.terms() {
        let number = m.number(part);
        if number == num::BigInt::from(0) {
            continue;
        }
        total = total.plus(&c.scale(&Rational::from_integer(number)));
    }
    let a0 = q.constant_term();
    let mut factor = a0.one_like();
    for _ in 0..2 * k {
        factor = factor.times(a0);
    }
    total.times(&factor)
}

/// A genus with memoized K-polynomials; safe to share between threads.
#[derive(Debug)]
pub struct Genus<R> {
    series: CharSeries<R>,
    cache: Mutex<Vec<GradedPoly<R>>>,
}

impl<R: QAlgebra> Genus<R> {
    pub fn new(series: CharSeries<R>) -> Self {
        Genus { series, cache: Mutex::new(Vec::new()) }
    }

    pub fn series(&self) -> &CharSeries<R> {
        &self.series
    }

    pub fn k_polynomial(&self, j: usize) -> Result<GradedPoly<R>, GenusError> {
        let mut cache = self.cache.lock().expect("k-polynomial cache poisoned");
        if cache.len() <= j {
            *cache = k_polynomials(&self.series, j)?;
        }
        Ok(cache[j].clone())
    }

    pub fn evaluate(&self, m: &ManifoldData) -> Result<R, GenusError> {
        let top = self.k_polynomial(m.k() as usize)?;
        Ok(pair_top(&self.series, &top, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::builtin_manifold;
    use crate::series::ratio;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn newton_power_sums() {
        let ps = power_sums_in_elementary(3);
        // P2 = e1² − 2e2, P3 = e1³ − 3e1e2 + 3e3
        assert_eq!(ps[2].coeff(&p(&[1, 1])), Some(&rat(1)));
        assert_eq!(ps[2].coeff(&p(&[2])), Some(&rat(-2)));
        assert_eq!(ps[3].coeff(&p(&[1, 1, 1])), Some(&rat(1)));
        assert_eq!(ps[3].coeff(&p(&[2, 1])), Some(&rat(-3)));
        assert_eq!(ps[3].coeff(&p(&[3])), Some(&rat(3)));
    }

    #[test]
    fn l_polynomials() {
        let ks = k_polynomials(&CharSeries::l_genus(3), 3).unwrap();
        assert_eq!(ks[0], GradedPoly::constant(rat(1)));
        assert_eq!(ks[1], GradedPoly::monomial(p(&[1]), ratio(1, 3)));
        assert_eq!(ks[2].coeff(&p(&[2])), Some(&ratio(7, 45)));
        assert_eq!(ks[2].coeff(&p(&[1, 1])), Some(&ratio(-1, 45)));
        // L3 = (62 p3 − 13 p2 p1 + 2 p1³)/945
        assert_eq!(ks[3].coeff(&p(&[3])), Some(&ratio(62, 945)));
        assert_eq!(ks[3].coeff(&p(&[2, 1])), Some(&ratio(-13, 945)));
        assert_eq!(ks[3].coeff(&p(&[1, 1, 1])), Some(&ratio(2, 945)));
        for (j, kj) in ks.iter().enumerate() {
            assert!(kj.is_homogeneous_of(j as u32));
        }
    }

    #[test]
    fn trivial_series_has_trivial_sequence() {
        let ks = k_polynomials(&CharSeries::trivial(4), 4).unwrap();
        assert!(ks[1..].iter().all(GradedPoly::is_zero));
    }

    #[test]
    fn a_hat_polynomials() {
        let ks = k_polynomials(&CharSeries::a_hat(2), 2).unwrap();
        assert_eq!(ks[1], GradedPoly::monomial(p(&[1]), ratio(-1, 24)));
        // Â2 = (7p1² − 4p2)/5760
        assert_eq!(ks[2].coeff(&p(&[1, 1])), Some(&ratio(7, 5760)));
        assert_eq!(ks[2].coeff(&p(&[2])), Some(&ratio(-4, 5760)));
    }

    #[test]
    fn evaluation_examples() {
        let l = Genus::new(CharSeries::l_genus(4));
        let ahat = Genus::new(CharSeries::a_hat(4));
        let cp2 = builtin_manifold("cp", 2).unwrap();
        let k3 = builtin_manifold("k3", 0).unwrap();
        let hp2 = builtin_manifold("hp", 2).unwrap();
        let s8 = builtin_manifold("sphere", 8).unwrap();
        assert_eq!(l.evaluate(&cp2).unwrap(), rat(1));
        assert_eq!(l.evaluate(&hp2).unwrap(), rat(1));
        assert_eq!(l.evaluate(&s8).unwrap(), rat(0));
        assert_eq!(ahat.evaluate(&k3).unwrap(), rat(2));
        assert_eq!(ahat.evaluate(&hp2).unwrap(), rat(0));
        assert_eq!(l.evaluate(&k3).unwrap(), rat(-16));
    }

    #[test]
    fn non_normalized_series_scales_by_a0_power() {
        // 2·(x/tanh x) acting on 2k roots multiplies the genus by 2^{2k}.
        let doubled = CharSeries::l_genus(2).scale_series(&rat(2)).unwrap();
        let cp4 = builtin_manifold("cp", 4).unwrap();
        assert_eq!(evaluate_genus(&doubled, &cp4).unwrap(), rat(16));
    }

    #[test]
    fn precision_is_checked() {
        let hp3 = builtin_manifold("hp", 3).unwrap();
        assert!(matches!(
            evaluate_genus(&CharSeries::l_genus(2), &hp3),
            Err(GenusError::InsufficientPrecision { .. })
        ));
    }
}
