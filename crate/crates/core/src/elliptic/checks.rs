//! Arithmetic validity predicates on cusp expansions.

use num::{BigInt, Integer, Zero};
use serde::Serialize;

use super::{Cusp, CuspExpansion};
use crate::series::is_integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Pass,
    Fail,
    NotApplicable,
}

impl Check {
    fn from_bool(b: bool) -> Self {
        if b {
            Check::Pass
        } else {
            Check::Fail
        }
    }

    fn gated(applies: bool, f: impl FnOnce() -> bool) -> Self {
        if applies {
            Check::from_bool(f())
        } else {
            Check::NotApplicable
        }
    }

    pub fn is_fail(self) -> bool {
        self == Check::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArithmeticReport {
    /// Spin manifold, Â cusp: every bracket coefficient is an integer.
    pub spin_integrality: Check,
    /// `dim ≡ 4 mod 8`, Â cusp: the offset `-k/2` is not an integer.
    pub half_order_pole: Check,
    /// `dim ≡ 4 mod 8`, spin, signature cusp: `16 | sign(M)`.
    pub signature_divisible_by_16: Check,
    /// Signature cusp only: every `q^{≥1}` coefficient vanishes. This is a
    /// property of the manifold, not a validity check.
    pub constant: Option<bool>,
}

impl ArithmeticReport {
    /// No applicable check failed.
    pub fn all_pass(&self) -> bool {
        ![self.spin_integrality, self.half_order_pole, self.signature_divisible_by_16]
            .iter()
            .any(|c| c.is_fail())
    }
}

pub fn arithmetic_checks(exp: &CuspExpansion) -> ArithmeticReport {
    let m = &exp.manifold;
    let four_mod_eight = m.dim() % 8 == 4;
    let coeffs = exp.coeffs();
    let ahat = exp.cusp == Cusp::AHat;
    let signature = exp.cusp == Cusp::Signature;
    ArithmeticReport {
        spin_integrality: Check::gated(ahat && m.spin(), || coeffs.iter().all(is_integer)),
        half_order_pole: Check::gated(ahat && four_mod_eight, || {
            let o = exp.series.offset();
            !is_integer(o) && is_integer(&(o * BigInt::from(2)))
        }),
        signature_divisible_by_16: Check::gated(signature && four_mod_eight && m.spin(), || {
            is_integer(&coeffs[0]) && coeffs[0].numer().mod_floor(&BigInt::from(16)).is_zero()
        }),
        constant: signature.then(|| coeffs[1..].iter().all(Zero::is_zero)),
    }
}
