//! A quick pass over the library's invariants, for `--selftest`.

use serde::Serialize;

use crate::codes::{BinaryCode, Codeword};
use crate::elliptic::{
    acusp_expansion, arithmetic_checks, elliptic_genus, lambda_sym_bruteforce_oracle, signature_cusp_expansion, Cusp,
};
use crate::genus::{builtin_examples, evaluate_genus, manifold_from_label, CharSeries};
use crate::isotropy::{hs_obligation, vanishing_bound, Parity, VanishingCount, VanishingTheorem};
use crate::series::{is_canonical, rat, QSeries};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestResult {
    pub name: &'static str,
    pub pass: bool,
}

fn series_inverse() -> bool {
    let a = QSeries::from_ints(&[3, -1, 4, 1, -5, 9]);
    let b = a.inverse().expect("unit");
    &a * &b == QSeries::one(6) && b.coeffs().iter().all(is_canonical)
}

fn exp_log() -> bool {
    let a = QSeries::from_ints(&[0, 2, -1, 3, 0, 1]);
    a.exp().and_then(|e| e.log()).is_ok_and(|l| l == a)
}

fn signature_specialization() -> bool {
    let l = CharSeries::l_genus(3);
    builtin_examples().iter().all(|m| {
        let e = elliptic_genus(m, 1).expect("elliptic genus");
        evaluate_genus(&l, m).is_ok_and(|s| s == e.coeffs()[0])
    })
}

fn dual_path() -> bool {
    builtin_examples().iter().all(|m| {
        elliptic_genus(m, 4).expect("genus route").series == signature_cusp_expansion(m, 4).expect("product route").series
    })
}

fn bruteforce() -> bool {
    builtin_examples().iter().all(|m| {
        lambda_sym_bruteforce_oracle(m, 3, Cusp::Signature).ok() == signature_cusp_expansion(m, 3).ok()
            && lambda_sym_bruteforce_oracle(m, 3, Cusp::AHat).ok() == acusp_expansion(m, 3).ok()
    })
}

fn ahat_leading() -> bool {
    let ahat = CharSeries::a_hat(3);
    builtin_examples().iter().all(|m| {
        let phi0 = acusp_expansion(m, 1).expect("Â cusp");
        evaluate_genus(&ahat, m).is_ok_and(|a| a == phi0.coeffs()[0])
    })
}

fn spin_checks() -> bool {
    builtin_examples().iter().filter(|m| m.spin()).all(|m| {
        let a = arithmetic_checks(&acusp_expansion(m, 4).expect("Â cusp"));
        let s = arithmetic_checks(&signature_cusp_expansion(m, 2).expect("signature cusp"));
        a.all_pass() && s.all_pass()
    })
}

fn rigidity() -> bool {
    ["hp2", "hp3"].iter().all(|l| {
        let m = manifold_from_label(l).expect("label");
        arithmetic_checks(&elliptic_genus(&m, 4).expect("elliptic genus")).constant == Some(true)
    })
}

fn multiplicativity() -> bool {
    let cp2 = manifold_from_label("cp2").expect("label");
    let square = manifold_from_label("cp2xcp2").expect("label");
    let phi = elliptic_genus(&cp2, 4).expect("elliptic genus").series;
    let phi_sq = elliptic_genus(&square, 4).expect("elliptic genus").series;
    phi.body() * phi.body() == *phi_sq.body()
}

fn residual_halving() -> bool {
    // every code of length 6 and rank ≤ 2, every pivot
    let words: Vec<Codeword> = (1u32..64).map(|v| Codeword::from_bits(&(0..6).map(|i| v >> i & 1 == 1).collect::<Vec<_>>())).collect();
    words.iter().all(|a| {
        words.iter().all(|b| {
            let c = BinaryCode::from_rows(6, &[a.clone(), b.clone()]).expect("same length");
            let d = c.max_distance().expect("small rank");
            c.max_weight_codewords()
                .expect("small rank")
                .iter()
                .all(|x| c.residual_code(x).and_then(|r| r.max_distance()).is_ok_and(|r| r <= d / 2))
        })
    })
}

fn theorem_formulas() -> bool {
    let count = |t, n, s| match vanishing_bound(t, n, s).conclusion {
        crate::isotropy::Conclusion::Vanishing { count } | crate::isotropy::Conclusion::Dichotomy { count, .. } => count,
        crate::isotropy::Conclusion::Named { .. } => VanishingCount::Finite(0),
    };
    count(VanishingTheorem::A, 16, 4) == VanishingCount::Finite(2)
        && count(VanishingTheorem::A, 32, 5) == VanishingCount::Finite(3)
        && count(VanishingTheorem::B, 24, 4) == VanishingCount::Finite(2)
        && hs_obligation(Parity::Even, 8) == VanishingCount::Finite(2)
        && hs_obligation(Parity::Odd, 0) == VanishingCount::All
        && crate::isotropy::connectivity_degree(16, 4) == Ok(9)
}

fn k3_anchor() -> bool {
    let k3 = manifold_from_label("k3").expect("label");
    let phi0 = acusp_expansion(&k3, 2).expect("Â cusp");
    phi0.coeffs() == [rat(2), rat(40)]
}

/// Run every check; each result names the invariant it covers.
pub fn run() -> Vec<SelftestResult> {
    let checks: [(&'static str, fn() -> bool); 13] = [
        ("series-inverse", series_inverse),
        ("exp-log-round-trip", exp_log),
        ("q0-equals-signature", signature_specialization),
        ("genus-route-equals-product-route", dual_path),
        ("bruteforce-equals-product-route", bruteforce),
        ("ahat-cusp-leading-term", ahat_leading),
        ("ahat-cusp-k3-anchor", k3_anchor),
        ("spin-arithmetic-checks", spin_checks),
        ("quaternionic-rigidity", rigidity),
        ("multiplicativity", multiplicativity),
        ("residual-halving", residual_halving),
        ("theorem-formulas", theorem_formulas),
        ("chain-determinism", || {
            let c = BinaryCode::from_rows(6, &["111100".parse().unwrap(), "001111".parse().unwrap()]).unwrap();
            c.iterated_residual() == c.iterated_residual() && c.iterated_residual().is_ok_and(|r| r.weights == [4, 2])
        }),
    ];
    checks.iter().map(|(name, f)| SelftestResult { name, pass: f() }).collect()
}
