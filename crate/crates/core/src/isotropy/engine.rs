use serde::{Serialize, Serializer};

use super::{codim_of_involution, isotropy_code, ActionType, IsotropyError, WeightMatrix};
use crate::codes::{BinaryCode, ChainReport, CodeError, Codeword, ENUMERATION_CAP};

/// Number of leading `φ₀` coefficients forced to vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum VanishingCount {
    Finite(u64),
    All,
}

impl Serialize for VanishingCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            VanishingCount::Finite(m) => s.serialize_u64(*m),
            VanishingCount::All => s.serialize_str("ALL"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremId {
    A,
    B,
    C,
    D,
    HS,
    /// The rational-sphere structure theorem used inside the proof of C.
    Structure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Conclusion {
    /// The first `count` coefficients of `φ₀(M)` vanish.
    Vanishing { count: VanishingCount },
    /// Either the first `count` coefficients vanish, or `alternative` holds.
    Dichotomy { count: VanishingCount, alternative: String },
    /// A conclusion outside the scope of computation, named only.
    Named { statement: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub hypotheses_met: bool,
    /// Numerical hypotheses with their evaluation, then the geometric ones
    /// that are assumed.
    pub reasons: Vec<String>,
    pub conclusion: Conclusion,
}

fn check(reasons: &mut Vec<String>, ok: bool, text: String) -> bool {
    reasons.push(format!("{}: {text}", if ok { "holds" } else { "fails" }));
    ok
}

fn assume(reasons: &mut Vec<String>, text: &str) {
    reasons.push(format!("assumed: {text}"));
}

fn pow2(e: u64) -> Option<u64> {
    1u64.checked_shl(u32::try_from(e).ok()?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VanishingTheorem {
    A,
    B,
}

/// Vanishing count from the symmetry-rank theorems. When the hypotheses
/// fail, only `Â(M) = 0` remains (Lichnerowicz), so the count is 1.
pub fn vanishing_bound(theorem: VanishingTheorem, n: u64, s: u64) -> TheoremReport {
    let mut reasons = Vec::new();
    let (id, met, bound) = match theorem {
        VanishingTheorem::A => {
            let big = pow2(s);
            let dim_ok = check(&mut reasons, big.is_some_and(|p| n >= p), format!("n = {n} ≥ 2^s (s = {s})"));
            let rank_ok = check(&mut reasons, s >= 3, format!("s = {s} ≥ 3"));
            let met = dim_ok && rank_ok;
            let bound = if met { (n / 16 + 1).min(pow2(s - 3).unwrap_or(u64::MAX)) } else { 1 };
            (TheoremId::A, met, bound)
        }
        VanishingTheorem::B => {
            let big = s.checked_sub(2).and_then(pow2).and_then(|p| p.checked_mul(3));
            let dim_ok = check(&mut reasons, big.is_some_and(|p| n >= p), format!("n = {n} ≥ 3·2^(s−2) (s = {s})"));
            let rank_ok = check(&mut reasons, s >= 4, format!("s = {s} ≥ 4"));
            let met = dim_ok && rank_ok;
            let bound = if met { (n / 12 + 1).min(pow2(s - 3).unwrap_or(u64::MAX)) } else { 1 };
            (TheoremId::B, met, bound)
        }
    };
    if !met {
        reasons.push("fallback: Â(M) = 0 by Lichnerowicz, independent of symmetry".into());
    }
    assume(&mut reasons, "closed, connected, positively curved Spin manifold with an isometric effective torus action");
    let count = VanishingCount::Finite(bound);
    let conclusion = if met {
        let alternative = match theorem {
            VanishingTheorem::A => "the rational cohomology ring of M is 4-periodic",
            VanishingTheorem::B => "some x ∈ H⁴(M; Q) has x^(n/4) ≠ 0",
        };
        Conclusion::Dichotomy { count, alternative: alternative.into() }
    } else {
        Conclusion::Vanishing { count }
    };
    TheoremReport { theorem: id, hypotheses_met: met, reasons, conclusion }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Coefficients of `φ₀` forced to vanish by an involution in a circle
/// acting with fixed-point codimension `min_codim`: all of them for odd
/// actions, otherwise `r + 1` with `r` maximal such that `4r < min_codim`.
pub fn hs_obligation(parity: Parity, min_codim: u64) -> VanishingCount {
    match parity {
        Parity::Odd => VanishingCount::All,
        Parity::Even => VanishingCount::Finite(min_codim.div_ceil(4)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DichotomySplit {
    pub small: Vec<u64>,
    pub large: Vec<u64>,
}

/// Sort codimensions into `c ≤ n/4` and `c ≥ 3n/4 + 4`.
pub fn dichotomy_split(n: u64, codims: &[u64]) -> Result<DichotomySplit, IsotropyError> {
    let odd: Vec<u64> = codims.iter().copied().filter(|c| c % 2 == 1).collect();
    if !odd.is_empty() {
        return Err(IsotropyError::InvalidCodimension(odd));
    }
    let mut split = DichotomySplit { small: Vec::new(), large: Vec::new() };
    let mut gap = Vec::new();
    for &c in codims {
        if 4 * c <= n {
            split.small.push(c);
        } else if 4 * c >= 3 * n + 16 {
            split.large.push(c);
        } else {
            gap.push(c);
        }
    }
    if gap.is_empty() {
        Ok(split)
    } else {
        Err(IsotropyError::GapViolation(gap))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubcodeReport {
    /// `C₁ = {x ∈ C : wt(x) ≤ n/8}`.
    pub subcode: BinaryCode,
    pub rank: usize,
    pub parent_rank: usize,
    /// Every sum of two `C₁` words has weight `≤ n/8`.
    pub closed_under_addition: bool,
    pub large_words: usize,
    /// Every sum of two distinct large words is small.
    pub large_pair_sums_small: bool,
    /// `rank ≥ parent_rank − 1`.
    pub rank_bound_holds: bool,
}

fn is_small(n: u64, wt: usize) -> bool {
    8 * wt as u64 <= n
}

fn is_large(n: u64, wt: usize) -> bool {
    8 * wt as u64 >= 3 * n + 16
}

/// The subcode of small-weight words, for a code whose nonzero weights
/// avoid `(n/8, 3n/8 + 2)`.
pub fn small_weight_subcode(c: &BinaryCode, n: u64) -> Result<SubcodeReport, IsotropyError> {
    let words = c.codewords()?;
    let mut bad: Vec<usize> = words
        .iter()
        .map(Codeword::weight)
        .filter(|&wt| !is_small(n, wt) && !is_large(n, wt))
        .collect();
    if !bad.is_empty() {
        bad.sort_unstable();
        bad.dedup();
        return Err(IsotropyError::DichotomyViolated(bad));
    }
    let (small, large): (Vec<&Codeword>, Vec<&Codeword>) = words.iter().partition(|w| is_small(n, w.weight()));
    let rows: Vec<Codeword> = small.iter().map(|w| (*w).clone()).collect();
    let subcode = BinaryCode::from_rows(c.length(), &rows)?;
    // the small words are a subspace iff they are all of their span
    let closed = (1usize << subcode.rank()) == small.len() && is_small(n, subcode.max_distance()?);
    // with C₁ closed, pair sums of large words are small iff all large
    // words lie in one coset of C₁
    let large_pair_sums_small = closed
        && large.first().is_none_or(|x0| large.iter().all(|a| is_small(n, a.xor(x0).weight())));
    let rank = subcode.rank();
    Ok(SubcodeReport {
        rank,
        parent_rank: c.rank(),
        closed_under_addition: closed,
        large_words: large.len(),
        large_pair_sums_small,
        rank_bound_holds: rank + 1 >= c.rank(),
        subcode,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    /// `cod_{N_{k−1}} N_k`.
    pub codim: u64,
    /// `dim N_k`.
    pub dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainConstruction {
    pub steps: Vec<ChainStep>,
    /// `d_max(C₁) < 2^{rank(C₁) − 1}`. Reported rather than required.
    pub precondition_met: bool,
    pub halving_holds: bool,
    pub dims_at_least_half: bool,
    pub residual_chain: ChainReport,
}

/// The nested fixed-point components `M = N_0 ⊇ N_1 ⊇ …` obtained from the
/// iterated residual chain of `C₁`.
pub fn chain_construction(c1: &BinaryCode, n: u64) -> Result<ChainConstruction, IsotropyError> {
    let chain = c1.iterated_residual()?;
    let mut dim = n;
    let mut steps = Vec::new();
    for &wt in &chain.weights {
        let codim = 2 * wt as u64;
        if let Some(prev) = steps.last().map(|s: &ChainStep| s.codim) {
            if 2 * codim > prev {
                return Err(IsotropyError::HalvingViolated { prev, next: codim });
            }
        }
        dim = dim.checked_sub(codim).ok_or_else(|| {
            IsotropyError::HypothesisViolated(format!("total codimension exceeds the dimension {n}"))
        })?;
        steps.push(ChainStep { codim, dim });
    }
    let d_max = chain.max_distances[0] as u64;
    let precondition_met = c1.rank() >= 1 && pow2(c1.rank() as u64 - 1).is_some_and(|p| d_max < p);
    Ok(ChainConstruction {
        dims_at_least_half: steps.iter().all(|s| 2 * s.dim >= n),
        halving_holds: true,
        precondition_met,
        steps,
        residual_chain: chain,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ActionOptions {
    /// Number of `φ₀` coefficients the caller cares about; obligations are
    /// also reported truncated to it.
    pub q_order: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    /// Coordinates of `σ ∈ Z₂ˢ`.
    pub sigma: String,
    pub codeword: Codeword,
    pub codim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub n: u64,
    pub s: usize,
    pub spin: bool,
    pub action_type: ActionType,
    pub code: BinaryCode,
    pub involutions: Vec<InvolutionReport>,
    pub consistent_with_even: bool,
    pub dichotomy: Option<DichotomySplit>,
    pub gap_violations: Vec<u64>,
    pub subcode: Option<SubcodeReport>,
    pub chain: Option<ChainConstruction>,
    pub theorem_d_triggered: bool,
    pub theorems: Vec<TheoremReport>,
    pub q_order: Option<u64>,
    /// Largest vanishing count among applicable theorems, capped at `q_order`.
    pub vanishing_within_q_order: Option<u64>,
}

fn sigma_bits(mask: u64, s: usize) -> Vec<bool> {
    (0..s).map(|i| mask >> i & 1 == 1).collect()
}

/// Run the whole combinatorial pipeline on the isotropy data at a fixed point.
pub fn analyze_action(w: &WeightMatrix, options: ActionOptions) -> Result<ActionReport, IsotropyError> {
    let code = isotropy_code(w)?;
    let n = w.n();
    let s = w.s;
    if s > ENUMERATION_CAP {
        return Err(CodeError::RankTooLargeForEnumeration { rank: s, cap: ENUMERATION_CAP }.into());
    }
    let mut involutions = Vec::new();
    for mask in 1u64..(1u64 << s) {
        let sigma = sigma_bits(mask, s);
        let codim = codim_of_involution(w, &sigma)?;
        involutions.push(InvolutionReport {
            sigma: sigma.iter().map(|&b| if b { '1' } else { '0' }).collect(),
            codeword: w.image(&sigma),
            codim,
        });
    }
    let codims: Vec<u64> = involutions.iter().map(|i| i.codim).collect();
    let consistent_with_even = codims.iter().all(|c| c % 4 == 0);
    let (dichotomy, gap_violations) = match dichotomy_split(n, &codims) {
        Ok(split) => (Some(split), Vec::new()),
        Err(IsotropyError::GapViolation(gap)) => (None, gap),
        Err(e) => return Err(e),
    };
    let (subcode, chain) = if dichotomy.is_some() {
        let sub = small_weight_subcode(&code, n)?;
        let chain = chain_construction(&sub.subcode, n)?;
        (Some(sub), Some(chain))
    } else {
        (None, None)
    };

    let mut theorems = vec![vanishing_bound(VanishingTheorem::A, n, s as u64), vanishing_bound(VanishingTheorem::B, n, s as u64)];
    for t in theorems.iter_mut() {
        if !w.spin {
            t.hypotheses_met = false;
            t.reasons.push("fails: manifold not flagged spin".into());
        }
    }

    // Theorem C and the structure theorem it rests on
    let mut reasons = Vec::new();
    let c_met = check(&mut reasons, w.spin, "M is Spin".into())
        & check(&mut reasons, n >= 12000, format!("n = {n} ≥ 12000"))
        & check(&mut reasons, 9 * s as u64 >= n + 27, format!("s = {s} ≥ n/9 + 3"));
    assume(&mut reasons, "positive curvature and b₄(M) = 0");
    theorems.push(TheoremReport {
        theorem: TheoremId::C,
        hypotheses_met: c_met,
        reasons,
        conclusion: Conclusion::Named { statement: "the elliptic genus φ(M) is constant".into() },
    });
    let mut reasons = Vec::new();
    let structure_met = check(&mut reasons, n >= 6000, format!("n = {n} ≥ 6000"))
        & check(&mut reasons, 6 * s as u64 >= n + 6, format!("s = {s} ≥ n/6 + 1"));
    assume(&mut reasons, "simply connected, positive curvature and b₄(M) = 0");
    theorems.push(TheoremReport {
        theorem: TheoremId::Structure,
        hypotheses_met: structure_met,
        reasons,
        conclusion: Conclusion::Named { statement: "M is a rational cohomology sphere".into() },
    });

    let mut reasons = Vec::new();
    let four = involutions.iter().find(|i| i.codim == 4);
    let theorem_d_triggered = s >= 2 && four.is_some();
    let d_met = check(&mut reasons, w.spin, "M is Spin".into())
        & check(&mut reasons, s >= 2, format!("s = {s} ≥ 2"))
        & check(
            &mut reasons,
            four.is_some(),
            match four {
                Some(i) => format!("involution {} has a codimension-4 fixed component", i.sigma),
                None => "some involution has a codimension-4 fixed component".into(),
            },
        );
    assume(&mut reasons, "positive curvature; the involution lies in a circle fixing that component");
    theorems.push(TheoremReport {
        theorem: TheoremId::D,
        hypotheses_met: d_met,
        reasons,
        conclusion: Conclusion::Named { statement: "the elliptic genus φ(M) is constant".into() },
    });

    let mut reasons = Vec::new();
    let parity = match w.action_type {
        ActionType::Even => Some(Parity::Even),
        ActionType::Odd => Some(Parity::Odd),
        ActionType::Unknown if consistent_with_even => {
            reasons.push("action type unknown; all codimensions ≡ 0 mod 4, consistent with even".into());
            Some(Parity::Even)
        }
        ActionType::Unknown => None,
    };
    let best = involutions.iter().max_by_key(|i| i.codim);
    let hs_met = check(&mut reasons, w.spin, "M is Spin".into())
        & check(&mut reasons, parity.is_some(), "action type determined".into());
    assume(&mut reasons, "the codimension at the fixed point is the minimal codimension of M^σ");
    let count = match (parity, best) {
        (Some(p), Some(i)) => {
            reasons.push(format!("using involution {} with codimension {}", i.sigma, i.codim));
            hs_obligation(p, i.codim)
        }
        _ => VanishingCount::Finite(0),
    };
    theorems.push(TheoremReport {
        theorem: TheoremId::HS,
        hypotheses_met: hs_met,
        reasons,
        conclusion: Conclusion::Vanishing { count },
    });

    let vanishing_within_q_order = options.q_order.map(|q| {
        theorems
            .iter()
            .filter(|t| t.hypotheses_met)
            .filter_map(|t| match t.conclusion {
                Conclusion::Vanishing { count } | Conclusion::Dichotomy { count, .. } => Some(count),
                Conclusion::Named { .. } => None,
            })
            .map(|c| match c {
                VanishingCount::Finite(m) => m.min(q),
                VanishingCount::All => q,
            })
            .max()
            .unwrap_or(0)
    });

    Ok(ActionReport {
        n,
        s,
        spin: w.spin,
        action_type: w.action_type,
        code,
        involutions,
        consistent_with_even,
        dichotomy,
        gap_violations,
        subcode,
        chain,
        theorem_d_triggered,
        theorems,
        q_order: options.q_order,
        vanishing_within_q_order,
    })
}
