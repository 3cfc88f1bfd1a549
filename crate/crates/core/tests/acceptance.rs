//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs without the libtest harness so the lines always
//! print.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hirzebruch::codes::{BinaryCode, Codeword};
use hirzebruch::elliptic::{
    acusp_expansion, arithmetic_checks, elliptic_genus, lambda_sym_bruteforce_oracle, signature_cusp_expansion, Check,
    Cusp,
};
use hirzebruch::genus::{evaluate_genus, manifold_from_label, CharSeries, ManifoldData};
use hirzebruch::isotropy::{
    analyze_action, connectivity_degree, dichotomy_split, hs_obligation, small_weight_subcode, vanishing_bound,
    ActionOptions, ActionType, Conclusion, Parity, VanishingCount, VanishingTheorem, WeightMatrix,
};
use hirzebruch::series::{is_integer, rat, Rational};

const SEED: u64 = 0x5eed_c0de;

fn m(label: &str) -> ManifoldData {
    manifold_from_label(label).expect("built-in label")
}

fn labels_up_to(dim: u32) -> Vec<&'static str> {
    [
        ("sphere4", 4),
        ("sphere8", 8),
        ("sphere12", 12),
        ("sphere16", 16),
        ("cp2", 4),
        ("cp4", 8),
        ("cp6", 12),
        ("cp8", 16),
        ("hp1", 4),
        ("hp2", 8),
        ("hp3", 12),
        ("hp4", 16),
        ("k3", 4),
    ]
    .into_iter()
    .filter(|&(_, d)| d <= dim)
    .map(|(l, _)| l)
    .collect()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok: &str) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: ok.into() }
    } else {
        Outcome { pass: false, detail: failures.join("; ") }
    }
}

fn c1_specialization() -> Outcome {
    let expected = [
        ("sphere4", 0),
        ("sphere8", 0),
        ("sphere12", 0),
        ("cp2", 1),
        ("cp4", 1),
        ("cp6", 1),
        ("hp2", 1),
        ("hp3", 0),
        ("k3", -16),
    ];
    let mut failures = Vec::new();
    for (label, sign) in expected {
        let man = m(label);
        let q0 = elliptic_genus(&man, 1).expect("elliptic genus").coeffs()[0].clone();
        let l = evaluate_genus(&CharSeries::l_genus(man.k() as usize), &man).expect("L-genus");
        if q0 != l || l != rat(sign) {
            failures.push(format!("{label}: q⁰ = {q0}, L = {l}, expected {sign}"));
        }
    }
    outcome(failures, "q⁰ = L-genus = 0,0,0,1,1,1,1,0,−16")
}

fn c2_dual_path() -> Outcome {
    let labels = labels_up_to(16);
    let mut failures = Vec::new();
    for label in &labels {
        let man = m(label);
        let genus = elliptic_genus(&man, 4).expect("genus route");
        let product = signature_cusp_expansion(&man, 4).expect("product route");
        if genus.series != product.series {
            failures.push(format!("{label}: {:?} vs {:?}", genus.coeffs(), product.coeffs()));
        }
    }
    outcome(failures, &format!("{} manifolds, q⁰..q³ agree", labels.len()))
}

fn c3_bruteforce() -> Outcome {
    let labels = labels_up_to(12);
    let mut failures = Vec::new();
    for label in &labels {
        let man = m(label);
        for cusp in [Cusp::Signature, Cusp::AHat] {
            let brute = lambda_sym_bruteforce_oracle(&man, 3, cusp).expect("brute force");
            let product = match cusp {
                Cusp::Signature => signature_cusp_expansion(&man, 3),
                Cusp::AHat => acusp_expansion(&man, 3),
            }
            .expect("product formula");
            if brute != product {
                failures.push(format!("{label} {cusp:?}: {:?} vs {:?}", brute.coeffs(), product.coeffs()));
            }
        }
    }
    outcome(failures, &format!("{} manifolds × 2 cusps, q⁰..q² agree", labels.len()))
}

fn c4_ahat_anchors() -> Outcome {
    let mut failures = Vec::new();
    for (label, ahat) in [("k3", 2), ("hp2", 0), ("sphere4", 0), ("sphere8", 0), ("sphere12", 0), ("sphere16", 0)] {
        let man = m(label);
        let lead = acusp_expansion(&man, 1).expect("Â cusp").coeffs()[0].clone();
        let direct = evaluate_genus(&CharSeries::a_hat(man.k() as usize), &man).expect("Â-genus");
        if lead != direct || lead != rat(ahat) {
            failures.push(format!("{label}: leading {lead}, Â {direct}, expected {ahat}"));
        }
    }
    let k3 = m("k3");
    let brute = lambda_sym_bruteforce_oracle(&k3, 2, Cusp::AHat).expect("brute force");
    let product = acusp_expansion(&k3, 2).expect("product formula");
    if brute.coeffs()[1] != rat(40) || product.coeffs()[1] != rat(40) {
        failures.push(format!("K3 q¹: brute {}, product {}", brute.coeffs()[1], product.coeffs()[1]));
    }
    outcome(failures, "Â(K3) = 2, Â(HP²) = Â(S^4k) = 0, K3 second coefficient +40")
}

fn c5_rigidity() -> Outcome {
    let mut failures = Vec::new();
    for (label, sign) in [("hp2", 1), ("hp3", 0)] {
        let phi = elliptic_genus(&m(label), 4).expect("elliptic genus");
        let expected: Vec<Rational> = [sign, 0, 0, 0].iter().map(|&c| rat(c)).collect();
        if phi.coeffs() != expected.as_slice() {
            failures.push(format!("{label}: {:?}", phi.coeffs()));
        }
    }
    outcome(failures, "φ(HP²) = 1, φ(HP³) = 0, q¹..q³ vanish")
}

fn c6_integrality() -> Outcome {
    let mut failures = Vec::new();
    for label in ["k3", "hp2", "hp3", "sphere8"] {
        let phi0 = acusp_expansion(&m(label), 5).expect("Â cusp");
        if !phi0.coeffs().iter().all(is_integer) {
            failures.push(format!("{label}: {:?}", phi0.coeffs()));
        }
        if arithmetic_checks(&phi0).spin_integrality != Check::Pass {
            failures.push(format!("{label}: integrality check did not pass"));
        }
    }
    for label in labels_up_to(16).into_iter().filter(|l| m(l).dim() % 8 == 4) {
        let phi0 = acusp_expansion(&m(label), 1).expect("Â cusp");
        let o = phi0.series.offset();
        if is_integer(o) || !phi0.series.has_half_integral_offset() {
            failures.push(format!("{label}: offset {o}"));
        }
        if arithmetic_checks(&phi0).half_order_pole != Check::Pass {
            failures.push(format!("{label}: half-order pole check did not pass"));
        }
    }
    let k3 = signature_cusp_expansion(&m("k3"), 1).expect("signature cusp");
    if k3.coeffs()[0] != rat(-16) || arithmetic_checks(&k3).signature_divisible_by_16 != Check::Pass {
        failures.push(format!("sign(K3) = {}", k3.coeffs()[0]));
    }
    outcome(failures, "φ₀ integral through q⁴; half-integral offsets in dim ≡ 4 mod 8; 16 | sign(K3)")
}

fn c7_multiplicativity() -> Outcome {
    let mut failures = Vec::new();
    let phi = |l: &str| elliptic_genus(&m(l), 4).expect("elliptic genus").series.body().clone();
    let cp2 = phi("cp2");
    if phi("cp2xcp2") != &cp2 * &cp2 {
        failures.push(format!("φ(CP²×CP²) = {:?}", phi("cp2xcp2").coeffs()));
    }
    let mixed = phi("sphere4xcp2");
    if !mixed.coeffs().iter().all(Zero::is_zero) {
        failures.push(format!("φ(S⁴×CP²) = {:?}", mixed.coeffs()));
    }
    outcome(failures, "φ(CP²×CP²) = φ(CP²)², φ(S⁴×CP²) = 0 through q³")
}

/// Every reduced row echelon matrix with `k` rows and `n` columns.
fn for_each_rref(n: usize, k: usize, f: &mut impl FnMut(&[Codeword])) {
    fn pivots(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for p in start..n {
            cur.push(p);
            pivots(n, k, p + 1, cur, f);
            cur.pop();
        }
    }
    pivots(n, k, 0, &mut Vec::new(), &mut |piv| {
        // free positions: right of the row's pivot, not a pivot column
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| ((piv[r] + 1)..n).filter(|c| !piv.contains(c)).map(move |c| (r, c)))
            .collect();
        let mut rows: Vec<Codeword> = Vec::with_capacity(k);
        for bits in 0u64..(1u64 << free.len()) {
            rows.clear();
            for (r, &p) in piv.iter().enumerate() {
                let mut w = Codeword::zero(n);
                w.set(p, true);
                rows.push(w);
                let _ = r;
            }
            for (i, &(r, c)) in free.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    rows[r].set(c, true);
                }
            }
            f(&rows);
        }
    });
}

fn c8_lemma_sweep() -> Outcome {
    let mut codes = 0u64;
    let mut pivot_checks = 0u64;
    let mut failures = Vec::new();
    for n in 1..=10 {
        for k in 0..=3.min(n) {
            for_each_rref(n, k, &mut |rows| {
                let c = BinaryCode::from_rows(n, rows).expect("consistent lengths");
                debug_assert_eq!(c.rank(), k);
                codes += 1;
                let d = c.max_distance().expect("small rank");
                if k == 0 {
                    return;
                }
                for x in c.max_weight_codewords().expect("small rank") {
                    pivot_checks += 1;
                    let r = c.residual_code(&x).expect("x is a nonzero codeword");
                    let rd = r.max_distance().expect("small rank");
                    if rd > d / 2 && failures.len() < 5 {
                        failures.push(format!("n={n} basis {:?} pivot {x}: {rd} > ⌊{d}/2⌋", c.basis()));
                    }
                    if r.length() != n - x.weight() && failures.len() < 5 {
                        failures.push(format!("residual length {} for n={n}, wt={}", r.length(), x.weight()));
                    }
                }
            });
        }
    }
    // number of subspaces of dimension ≤ 3 in F₂ⁿ, summed over n ≤ 10
    let expected: u64 = (1..=10u32).map(|n| (0..=3.min(n)).map(|k| gaussian_binomial(n, k)).sum::<u64>()).sum();
    if codes != expected {
        failures.push(format!("enumerated {codes} codes, expected {expected}"));
    }
    outcome(failures, &format!("{codes} codes, {pivot_checks} maximal-weight pivots, 0 violations"))
}

fn gaussian_binomial(n: u32, k: u32) -> u64 {
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        num *= (1u128 << (n - i)) - 1;
        den *= (1u128 << (i + 1)) - 1;
    }
    (num / den) as u64
}

fn c9_chains() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=16usize);
        let k = rng.gen_range(0..=5usize);
        let rows: Vec<Codeword> =
            (0..k).map(|_| Codeword::from_bits(&(0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>())).collect();
        let c = BinaryCode::from_rows(n, &rows).expect("consistent lengths");
        let d = c.max_distance().expect("small rank");
        let chain = c.iterated_residual().expect("small rank");
        let limit = (usize::BITS - d.leading_zeros()) as usize; // ⌈log₂(d+1)⌉
        let total: usize = chain.weights.iter().sum();
        let ok = chain.steps() <= limit
            && chain.final_length() == n - total
            && *chain.max_distances.last().unwrap() == 0
            && chain.halving_holds;
        if !ok && failures.len() < 5 {
            failures.push(format!("n={n} basis {:?}: {chain:?}", c.basis()));
        }
    }
    outcome(failures, "10⁴ random codes reach the zero code within ⌈log₂(d_max+1)⌉ steps")
}

fn count(report: &hirzebruch::isotropy::TheoremReport) -> VanishingCount {
    match report.conclusion {
        Conclusion::Vanishing { count } | Conclusion::Dichotomy { count, .. } => count,
        Conclusion::Named { .. } => VanishingCount::Finite(u64::MAX),
    }
}

fn c10_formulas() -> Outcome {
    let mut failures = Vec::new();
    let mut expect = |name: &str, got: String, want: &str| {
        if got != want {
            failures.push(format!("{name} = {got}, expected {want}"));
        }
    };
    let fin = |c: VanishingCount| match c {
        VanishingCount::Finite(m) => m.to_string(),
        VanishingCount::All => "ALL".into(),
    };
    expect("vanishing_bound(A,16,4)", fin(count(&vanishing_bound(VanishingTheorem::A, 16, 4))), "2");
    expect("vanishing_bound(A,32,5)", fin(count(&vanishing_bound(VanishingTheorem::A, 32, 5))), "3");
    expect("vanishing_bound(B,24,4)", fin(count(&vanishing_bound(VanishingTheorem::B, 24, 4))), "2");
    expect("hs_obligation(even,8)", fin(hs_obligation(Parity::Even, 8)), "2");
    expect("hs_obligation(odd,·)", fin(hs_obligation(Parity::Odd, 0)), "ALL");
    expect("connectivity_degree(16,4)", format!("{:?}", connectivity_degree(16, 4)), "Ok(9)");
    outcome(failures, "A(16,4)=2, A(32,5)=3, B(24,4)=2, HS(even,8)=2, HS(odd)=ALL, conn(16,4)=9")
}

/// A code of length `n/2` whose nonzero weights are `≤ n/8` or `≥ 3n/8 + 2`:
/// small words live on a support `S` with `|S| ≤ n/8 − 2`, and the optional
/// large word is the complement of `S` plus random bits inside `S`.
fn dichotomous_rows(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<bool>> {
    let half = n / 2;
    let t = rng.gen_range(1..=n / 8 - 2);
    let mut coords: Vec<usize> = (0..half).collect();
    for i in 0..half {
        let j = rng.gen_range(i..half);
        coords.swap(i, j);
    }
    let support = &coords[..t];
    let small = rng.gen_range(1..=t.min(6));
    let mut rows: Vec<Vec<bool>> = (0..small)
        .map(|_| {
            let mut r = vec![false; half];
            for &c in support {
                r[c] = rng.gen_bool(0.5);
            }
            r
        })
        .collect();
    if rng.gen_bool(0.7) {
        let mut large = vec![true; half];
        for &c in support {
            large[c] = rng.gen_bool(0.5);
        }
        rows.push(large);
    }
    rows
}

fn c11_chain_simulation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 11);
    let mut failures = Vec::new();
    let mut with_large = 0;
    for _ in 0..1000 {
        let n = 8 * rng.gen_range(4..=16usize);
        let rows = dichotomous_rows(&mut rng, n);
        let half = n / 2;
        // keep an independent set of rows so the action is effective
        let words: Vec<Codeword> = rows.iter().map(|r| Codeword::from_bits(r)).collect();
        let basis = BinaryCode::from_rows(half, &words).expect("consistent lengths");
        // odd/even integer lifts of the mod-2 rows
        let matrix: Vec<Vec<i64>> = basis
            .basis()
            .iter()
            .map(|b| (0..half).map(|i| i64::from(b.get(i)) + 2 * rng.gen_range(-2..=2i64)).collect())
            .collect();
        let w = WeightMatrix::new(matrix).expect("rectangular").with_flags(true, ActionType::Even);
        let report = match analyze_action(&w, ActionOptions::default()) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("n={n}: {e}"));
                continue;
            }
        };
        let s = report.s;
        let codims: Vec<u64> = report.involutions.iter().map(|i| i.codim).collect();
        if let Err(e) = dichotomy_split(n as u64, &codims) {
            failures.push(format!("n={n}: generated code violates the dichotomy: {e}"));
            continue;
        }
        let (Some(sub), Some(chain)) = (&report.subcode, &report.chain) else {
            failures.push(format!("n={n}: pipeline stopped early"));
            continue;
        };
        if sub.large_words > 0 {
            with_large += 1;
        }
        let direct = small_weight_subcode(&report.code, n as u64).expect("dichotomous");
        let steps_ok = chain.steps.windows(2).all(|p| 2 * p[1].codim <= p[0].codim)
            && chain.steps.iter().all(|st| 2 * st.dim >= n as u64);
        if !(sub.rank + 1 >= s && steps_ok && chain.halving_holds && chain.dims_at_least_half)
            || !sub.closed_under_addition
            || direct != *sub
        {
            failures.push(format!("n={n}, s={s}: rank(C₁)={}, chain {:?}", sub.rank, chain.steps));
        }
    }
    if with_large == 0 {
        failures.push("no generated code had large-weight words".into());
    }
    outcome(failures, &format!("10³ codes ({with_large} with large words): halving, dim N_k ≥ n/2, rk(C₁) ≥ s−1"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 11] = [
        ("1 cusp specialization", c1_specialization, Duration::from_secs(10)),
        ("2 dual-path oracle", c2_dual_path, Duration::from_secs(120)),
        ("3 brute-force bundle oracle", c3_bruteforce, Duration::from_secs(60)),
        ("4 Â-cusp anchors", c4_ahat_anchors, Duration::MAX),
        ("5 rigidity touchstone", c5_rigidity, Duration::MAX),
        ("6 spin integrality", c6_integrality, Duration::MAX),
        ("7 multiplicativity", c7_multiplicativity, Duration::MAX),
        ("8 residual halving sweep", c8_lemma_sweep, Duration::from_secs(300)),
        ("9 iterated residual chains", c9_chains, Duration::MAX),
        ("10 theorem-engine formulas", c10_formulas, Duration::MAX),
        ("11 chain simulation", c11_chain_simulation, Duration::MAX),
    ];
    let mut all = true;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let mut out = run();
        let elapsed = start.elapsed();
        if elapsed > limit {
            out.pass = false;
            out.detail = format!("{} (took {elapsed:.1?}, limit {limit:?})", out.detail);
        }
        all &= out.pass;
        println!("criterion {name}: {} [{elapsed:.2?}] {}", if out.pass { "PASS" } else { "FAIL" }, out.detail);
    }
    println!("acceptance: {}", if all { "all criteria pass" } else { "FAILURES" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
