//! Brute-force cusp expansions.
//!
//! Works with honest multivariate series in the roots `x_1..x_{2k}`: the
//! Chern character of every `Λ^i T_C M` and `S^j T_C M` is built as the
//! elementary/complete symmetric polynomial in the `4k` exponentials
//! `e^{±x_v}`, and all tensor products contributing below the requested
//! q-order are multiplied out term by term. Only monomials dividing some
//! `x^{2μ}` are kept, which is the smallest set closed under the products
//! that feed the targets.

use std::collections::{BTreeMap, HashSet};

use num::Zero;

use super::cusp::{ahat_density, signature_density};
use super::symmetric::{doubled_exponents, MonomialPairing};
use super::{Cusp, CuspExpansion, EllipticError};
use crate::genus::ManifoldData;
use crate::series::{rat, QSeries, Rational};

/// Largest q-precision accepted by [`lambda_sym_bruteforce_oracle`].
pub const BRUTEFORCE_MAX_Q_PREC: usize = 4;

type Exponent = Vec<u8>;

struct Space {
    vars: usize,
    allowed: HashSet<Exponent>,
}

impl Space {
    fn new(targets: &[Exponent], vars: usize) -> Self {
        let mut allowed = HashSet::new();
        for t in targets {
            let mut cur = vec![0u8; vars];
            loop {
                allowed.insert(cur.clone());
                // odometer over the box [0, t]
                let mut i = 0;
                while i < vars && cur[i] == t[i] {
                    cur[i] = 0;
                    i += 1;
                }
                if i == vars {
                    break;
                }
                cur[i] += 1;
            }
        }
        Space { vars, allowed }
    }
}

#[derive(Clone)]
struct Multi(BTreeMap<Exponent, Rational>);

impl Multi {
    fn constant(space: &Space, c: Rational) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(vec![0; space.vars], c);
        }
        Multi(m)
    }

    fn zero() -> Self {
        Multi(BTreeMap::new())
    }

    /// `Σ_j s_j x_v^j` restricted to the space.
    fn univariate(space: &Space, v: usize, coeffs: &[Rational]) -> Self {
        let mut m = BTreeMap::new();
        for (j, c) in coeffs.iter().enumerate() {
            let mut e = vec![0u8; space.vars];
            e[v] = j as u8;
            if !c.is_zero() && space.allowed.contains(&e) {
                m.insert(e, c.clone());
            }
        }
        Multi(m)
    }

    fn add(&self, other: &Multi) -> Multi {
        let mut out = self.0.clone();
        for (e, c) in &other.0 {
            let entry = out.entry(e.clone()).or_insert_with(|| rat(0));
            *entry += c;
            if entry.is_zero() {
                out.remove(e);
            }
        }
        Multi(out)
    }

    fn mul(&self, other: &Multi, space: &Space) -> Multi {
        let mut out: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (a, ca) in &self.0 {
            for (b, cb) in &other.0 {
                let e: Exponent = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if space.allowed.contains(&e) {
                    *out.entry(e).or_insert_with(|| rat(0)) += ca * cb;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Multi(out)
    }

    fn coeff(&self, e: &Exponent) -> Rational {
        self.0.get(e).cloned().unwrap_or_else(|| rat(0))
    }
}

/// `e_0..e_d` and `h_0..h_d` of `e^{±x_v}` over all `v`.
fn symmetric_polys(space: &Space, d: usize, x_prec: usize) -> (Vec<Multi>, Vec<Multi>) {
    let mut e = vec![Multi::zero(); d + 1];
    let mut h = vec![Multi::zero(); d + 1];
    e[0] = Multi::constant(space, rat(1));
    h[0] = Multi::constant(space, rat(1));
    for v in 0..space.vars {
        for s in [1, -1] {
            let z = Multi::univariate(space, v, QSeries::exp_linear(&rat(s), x_prec).coeffs());
            for t in (1..=d).rev() {
                e[t] = e[t].add(&z.mul(&e[t - 1], space));
            }
            for t in 1..=d {
                h[t] = h[t].add(&z.mul(&h[t - 1], space));
            }
        }
    }
    (e, h)
}

/// One tensor factor indexed by `n`: `Λ^b` and `S^a` multiplicities with a sign.
#[derive(Clone, Copy)]
struct Choice {
    n: usize,
    lambda: usize,
    sym: usize,
}

fn enumerate_terms(q_prec: usize, cusp: Cusp) -> Vec<(usize, i64, Vec<Choice>)> {
    fn go(n: usize, budget: usize, q_prec: usize, cusp: Cusp, cur: &mut Vec<Choice>, out: &mut Vec<(usize, i64, Vec<Choice>)>) {
        if n >= q_prec {
            let degree: usize = cur.iter().map(|c| c.n * (c.lambda + c.sym)).sum();
            let sign: i64 = cur
                .iter()
                .map(|c| if cusp == Cusp::AHat && c.lambda % 2 == 1 { -1 } else { 1 })
                .product();
            out.push((degree, sign, cur.clone()));
            return;
        }
        let max = budget / n;
        for lambda in 0..=max {
            for sym in 0..=(max - lambda) {
                let allowed = match cusp {
                    Cusp::Signature => true,
                    // Λ at odd n, S at even n
                    Cusp::AHat => (n % 2 == 1 && sym == 0) || (n % 2 == 0 && lambda == 0),
                };
                if !allowed {
                    continue;
                }
                cur.push(Choice { n, lambda, sym });
                go(n + 1, budget - n * (lambda + sym), q_prec, cusp, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(1, q_prec.saturating_sub(1), q_prec, cusp, &mut Vec::new(), &mut out);
    out
}

/// Cusp expansion from explicit `Λ^i`/`S^j` terms.
pub fn lambda_sym_bruteforce_oracle(m: &ManifoldData, q_prec: usize, cusp: Cusp) -> Result<CuspExpansion, EllipticError> {
    if q_prec > BRUTEFORCE_MAX_Q_PREC {
        return Err(EllipticError::PrecisionTooLarge(q_prec));
    }
    if q_prec == 0 {
        return Err(EllipticError::InvalidPrecision { q_prec, x_prec: 0 });
    }
    let k = m.k() as usize;
    let vars = 2 * k;
    let x_prec = 2 * k + 1;
    let pairing = MonomialPairing::new(m);
    let targets: Vec<Exponent> = pairing.partitions().iter().map(|mu| doubled_exponents(mu, vars)).collect();
    let space = Space::new(&targets, vars);

    let density = match cusp {
        Cusp::Signature => signature_density(x_prec),
        Cusp::AHat => ahat_density(x_prec),
    };
    let mut base = Multi::constant(&space, rat(1));
    for v in 0..vars {
        base = base.mul(&Multi::univariate(&space, v, density.coeffs()), &space);
    }

    let (e, h) = symmetric_polys(&space, q_prec - 1, x_prec);
    // per-target q-coefficients
    let mut body = vec![vec![rat(0); q_prec]; targets.len()];
    for (degree, sign, choices) in enumerate_terms(q_prec, cusp) {
        let mut term = base.clone();
        for c in &choices {
            if c.lambda > 0 {
                term = term.mul(&e[c.lambda], &space);
            }
            if c.sym > 0 {
                term = term.mul(&h[c.sym], &space);
            }
        }
        for (t, target) in targets.iter().enumerate() {
            body[t][degree] += term.coeff(target) * rat(sign);
        }
    }
    let coeffs: Vec<QSeries> = body.into_iter().map(QSeries::from_coeffs).collect();
    Ok(CuspExpansion::new(cusp, pairing.pair(&coeffs), m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{acusp_expansion, signature_cusp_expansion};
    use crate::genus::builtin_manifold;

    #[test]
    fn term_counts() {
        // q-degree < 3 with Λ and S at every n: 1 + 2 + (3 + 2)
        assert_eq!(enumerate_terms(3, Cusp::Signature).len(), 8);
        assert_eq!(enumerate_terms(1, Cusp::AHat).len(), 1);
    }

    #[test]
    fn agrees_with_product_formula() {
        for (name, p) in [("cp", 2), ("k3", 0), ("hp", 2), ("cp", 4)] {
            let m = builtin_manifold(name, p).unwrap();
            assert_eq!(
                lambda_sym_bruteforce_oracle(&m, 3, Cusp::Signature).unwrap(),
                signature_cusp_expansion(&m, 3).unwrap(),
                "{name}{p}"
            );
            assert_eq!(lambda_sym_bruteforce_oracle(&m, 3, Cusp::AHat).unwrap(), acusp_expansion(&m, 3).unwrap(), "{name}{p}");
        }
    }

    #[test]
    fn cap() {
        let k3 = builtin_manifold("k3", 0).unwrap();
        assert_eq!(
            lambda_sym_bruteforce_oracle(&k3, 5, Cusp::AHat).unwrap_err(),
            EllipticError::PrecisionTooLarge(5)
        );
    }
}
