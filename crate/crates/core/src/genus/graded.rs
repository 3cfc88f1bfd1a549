use std::collections::BTreeMap;
use std::fmt;

use super::partition::Partition;
use crate::series::{QAlgebra, Rational, Ring};

/// Polynomial in the Pontryagin generators `p_1, p_2, …`, graded by weight
/// (`p_j` has weight `j`). Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedPoly<R> {
    terms: BTreeMap<Partition, R>,
}

impl<R: Ring> Default for GradedPoly<R> {
    fn default() -> Self {
        GradedPoly { terms: BTreeMap::new() }
    }
}

impl<R: Ring> GradedPoly<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    pub fn monomial(p: Partition, c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero_elem() {
            terms.insert(p, c);
        }
        GradedPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Partition) -> Option<&R> {
        self.terms.get(p)
    }

    fn accumulate(&mut self, p: Partition, c: R) {
        if c.is_zero_elem() {
            return;
        }
        match self.terms.remove(&p) {
            Some(old) => {
                let sum = old.plus(&c);
                if !sum.is_zero_elem() {
                    self.terms.insert(p, sum);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.accumulate(p.clone(), c.clone());
        }
        out
    }

    /// Product, discarding every term of weight above `max_weight`.
    pub fn mul_truncated(&self, other: &Self, max_weight: u32) -> Self {
        let mut out = Self::zero();
        for (p, a) in &self.terms {
            for (r, b) in &other.terms {
                if p.weight() + r.weight() > max_weight {
                    continue;
                }
                out.accumulate(p.union(r), a.times(b));
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, u32::MAX)
    }

    pub fn mul_scalar(&self, c: &R) -> Self {
        let mut out = Self::zero();
        for (p, a) in &self.terms {
            out.accumulate(p.clone(), a.times(c));
        }
        out
    }

    /// Weight-`j` homogeneous component.
    pub fn component(&self, j: u32) -> Self {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() == j)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of(&self, j: u32) -> bool {
        self.terms.keys().all(|p| p.weight() == j)
    }
}

impl GradedPoly<Rational> {
    /// Lift rational coefficients into a Q-algebra, scaling `unit`.
    pub fn lift_scaled<R: QAlgebra>(&self, unit: &R) -> GradedPoly<R> {
        let mut out = GradedPoly::zero();
        for (p, c) in &self.terms {
            out.accumulate(p.clone(), unit.scale(c));
        }
        out
    }
}

/// Terms in decreasing lexicographic partition order, e.g.
/// `7/45*p2 + -1/45*p1^2`.
impl<R: Ring + fmt::Display> fmt::Display for GradedPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            let mut parts = p.parts().to_vec();
            parts.dedup();
            for part in parts {
                let mult = p.parts().iter().filter(|&&q| q == part).count();
                if mult == 1 {
                    write!(f, "*p{part}")?;
                } else {
                    write!(f, "*p{part}^{mult}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, ratio};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = GradedPoly::monomial(p(&[1]), rat(3));
        let b = GradedPoly::monomial(p(&[1]), rat(-3));
        assert!(a.add(&b).is_zero());
        assert!(GradedPoly::monomial(p(&[2]), rat(0)).is_zero());
    }

    #[test]
    fn products_merge_partitions() {
        let p1 = GradedPoly::monomial(p(&[1]), rat(1));
        let sq = p1.mul(&p1);
        assert_eq!(sq.coeff(&p(&[1, 1])), Some(&rat(1)));
        assert!(p1.mul_truncated(&p1, 1).is_zero());
        let s = sq.add(&GradedPoly::monomial(p(&[2]), rat(2)));
        assert!(s.is_homogeneous_of(2));
        assert_eq!(s.component(2), s);
        assert!(s.component(1).is_zero());
    }

    #[test]
    fn display_order() {
        let k2 = GradedPoly::monomial(p(&[2]), ratio(7, 45))
            .add(&GradedPoly::monomial(p(&[1, 1]), ratio(-1, 45)));
        assert_eq!(k2.to_string(), "7/45*p2 + -1/45*p1^2");
        assert_eq!(GradedPoly::<Rational>::zero().to_string(), "0");
    }
}
