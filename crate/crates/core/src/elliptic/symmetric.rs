//! Monomial-to-elementary basis change for symmetric functions of the
//! squared roots, and pairing against Pontryagin numbers.
//!
//! The cusp oracles produce the top-degree part of a symmetric integrand as
//! coefficients `c_μ` of monomial symmetric functions `m_μ(x²)`. Writing
//! `e_λ = Σ_μ M_{λμ} m_μ`, where `M_{λμ}` counts 0-1 matrices with row sums
//! `λ` and column sums `μ`, the elementary coefficients solve `Mᵀ d = c`.
//! This avoids Newton's identities entirely, so it is independent of the
//! multiplicative-sequence route in `genus`.

use std::collections::HashMap;

use num::Zero;

use crate::genus::{partitions_of, ManifoldData, Partition};
use crate::series::{rat, QAlgebra, Rational};

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`.
pub fn zero_one_matrix_count(rows: &[u32], cols: &[u32]) -> u64 {
    fn go(rows: &[u32], cols: &mut Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), u64>) -> u64 {
        let Some((&first, rest)) = rows.split_first() else {
            return u64::from(cols.iter().all(|&c| c == 0));
        };
        let key = (rows.len(), cols.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        choose(first, 0, cols, &mut |cols| total += go(rest, cols, memo));
        memo.insert(key, total);
        total
    }
    // pick `need` columns with positive remaining sum, from index `start`
    fn choose(need: u32, start: usize, cols: &mut Vec<u32>, f: &mut dyn FnMut(&mut Vec<u32>)) {
        if need == 0 {
            f(cols);
            return;
        }
        for j in start..cols.len() {
            if cols[j] > 0 {
                cols[j] -= 1;
                choose(need - 1, j + 1, cols, f);
                cols[j] += 1;
            }
        }
    }
    go(rows, &mut cols.to_vec(), &mut HashMap::new())
}

/// For weight `k`, the linear functional sending monomial coefficients
/// `(c_μ)` to `⟨Σ_μ c_μ m_μ(x²), [M]⟩`.
#[derive(Debug, Clone)]
pub struct MonomialPairing {
    partitions: Vec<Partition>,
    weights: Vec<Rational>,
}

impl MonomialPairing {
    pub fn new(m: &ManifoldData) -> Self {
        let partitions = partitions_of(m.k());
        let n = partitions.len();
        // transpose of M: row μ, column λ
        let mut mt: Vec<Vec<Rational>> = vec![vec![rat(0); n]; n];
        for (li, lambda) in partitions.iter().enumerate() {
            for (mi, mu) in partitions.iter().enumerate() {
                mt[mi][li] = rat(zero_one_matrix_count(lambda.parts(), mu.parts()) as i64);
            }
        }
        let inv = invert(mt);
        // d = inv·c and ⟨·⟩ = Σ_λ d_λ p_λ[M], so weight_μ = Σ_λ p_λ[M] inv[λ][μ]
        let numbers: Vec<Rational> =
            partitions.iter().map(|p| Rational::from_integer(m.number(p))).collect();
        let weights = (0..n)
            .map(|mu| (0..n).map(|lambda| &numbers[lambda] * &inv[lambda][mu]).sum())
            .collect();
        MonomialPairing { partitions, weights }
    }

    /// Partitions of `k`, in the order coefficient vectors must follow.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn pair<R: QAlgebra>(&self, coeffs: &[R]) -> R {
        assert_eq!(coeffs.len(), self.weights.len(), "one coefficient per partition");
        let mut total = coeffs[0].zero_like();
        for (c, w) in coeffs.iter().zip(&self.weights) {
            if !w.is_zero() {
                total = total.plus(&c.scale(w));
            }
        }
        total
    }
}

fn invert(mut a: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| rat(i64::from(i == j))).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("basis change is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (ac, ic) = (a[col][j].clone(), inv[col][j].clone());
                    a[r][j] -= &f * ac;
                    inv[r][j] -= &f * ic;
                }
            }
        }
    }
    inv
}

/// Exponent vector of `x^{2μ}` over `vars` variables.
pub fn doubled_exponents(mu: &Partition, vars: usize) -> Vec<u8> {
    mu.padded(vars).iter().map(|&p| (2 * p) as u8).collect()
}
