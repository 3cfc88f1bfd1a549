//! Dimension arithmetic behind the intersection, connectedness and
//! periodicity statements. Everything here is integer bookkeeping.

use serde::Serialize;

use super::IsotropyError;

/// Two totally geodesic submanifolds of dimensions `n1`, `n2` in a
/// positively curved `n`-manifold must meet when `n1 + n2 ≥ n`.
pub fn frankel_forces_intersection(n: u64, n1: u64, n2: u64) -> bool {
    n1 + n2 >= n
}

/// Connectivity `n − 2k + 1` of the inclusion of a codimension-`k`
/// submanifold.
pub fn connectivity_degree(n: u64, k: u64) -> Result<i64, IsotropyError> {
    if k == 0 || k > n {
        return Err(IsotropyError::HypothesisViolated(format!("need 0 < k ≤ n, got n = {n}, k = {k}")));
    }
    Ok(n as i64 - 2 * k as i64 + 1)
}

/// Connectivity `n − k1 − k2` of `N₁ ∩ N₂ → N₂` for transversely
/// intersecting submanifolds of codimensions `k1 ≤ k2`.
pub fn pair_connectivity(n: u64, k1: u64, k2: u64) -> Result<i64, IsotropyError> {
    if k1 > k2 {
        return Err(IsotropyError::HypothesisViolated(format!("need k1 ≤ k2, got {k1} > {k2}")));
    }
    if k1 + k2 > n {
        return Err(IsotropyError::HypothesisViolated(format!("need k1 + k2 ≤ n, got {k1} + {k2} > {n}")));
    }
    Ok((n - k1 - k2) as i64)
}

/// An integer interval with explicit endpoint inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Range {
    pub lo: i64,
    pub hi: i64,
    pub lo_inclusive: bool,
    pub hi_inclusive: bool,
}

impl Range {
    pub fn contains(&self, i: i64) -> bool {
        let above = if self.lo_inclusive { i >= self.lo } else { i > self.lo };
        let below = if self.hi_inclusive { i <= self.hi } else { i < self.hi };
        above && below
    }

    pub fn is_empty(&self) -> bool {
        let first = if self.lo_inclusive { self.lo } else { self.lo + 1 };
        let last = if self.hi_inclusive { self.hi } else { self.hi - 1 };
        first > last
    }

    pub fn to_vec(&self) -> Vec<i64> {
        let first = if self.lo_inclusive { self.lo } else { self.lo + 1 };
        let last = if self.hi_inclusive { self.hi } else { self.hi - 1 };
        (first..=last).collect()
    }
}

/// Degrees where multiplication by the Euler class is surjective
/// (`[l, n−k−l)`) and injective (`(l, n−k−l]`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PeriodicityWindow {
    pub surjective: Range,
    pub injective: Range,
}

pub fn periodicity_window(n: i64, k: i64, l: i64) -> PeriodicityWindow {
    let top = n - k - l;
    PeriodicityWindow {
        surjective: Range { lo: l, hi: top, lo_inclusive: true, hi_inclusive: false },
        injective: Range { lo: l, hi: top, lo_inclusive: false, hi_inclusive: true },
    }
}

/// Two transversely intersecting codimension `k1`, `k2` submanifolds give
/// rational 4-periodicity when `2k1 + 2k2 ≤ n`.
pub fn kennard_periodic(n: u64, k1: u64, k2: u64) -> bool {
    2 * k1 + 2 * k2 <= n
}

/// A single submanifold of even codimension `k ≤ n/4` in dimension `n ≥ 8`.
pub fn key_lemma_applies(n: u64, k: u64) -> bool {
    k % 2 == 0 && 4 * k <= n && n >= 8
}
