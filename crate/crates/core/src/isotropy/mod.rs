//! From torus isotropy weights to codes, and the combinatorial half of the
//! fixed-point arguments: codimension bookkeeping, the codimension gap, the
//! small-weight subcode, the halving chain and the vanishing bounds.
//!
//! Nothing here decides geometric facts. Reports state which numerical
//! hypotheses hold and which conclusions they would license.

mod engine;
mod predicates;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{BinaryCode, CodeError, Codeword};

pub use engine::{
    analyze_action, chain_construction, dichotomy_split, hs_obligation, small_weight_subcode, vanishing_bound,
    ActionOptions, ActionReport, ChainConstruction, ChainStep, Conclusion, DichotomySplit, InvolutionReport,
    Parity, SubcodeReport, TheoremId, TheoremReport, VanishingCount, VanishingTheorem,
};
pub use predicates::{
    connectivity_degree, frankel_forces_intersection, kennard_periodic, key_lemma_applies, pair_connectivity,
    periodicity_window, PeriodicityWindow, Range,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsotropyError {
    #[error("mod-2 weights have rank {rank} < s = {s}; the action is not effective")]
    NotEffective { rank: usize, s: usize },
    #[error("the identity element has no fixed-point codimension")]
    ZeroElement,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("codimensions {0:?} lie strictly inside the gap")]
    GapViolation(Vec<u64>),
    #[error("codeword weights {0:?} violate the weight dichotomy")]
    DichotomyViolated(Vec<usize>),
    #[error("codimension {next} exceeds half of the previous {prev}")]
    HalvingViolated { prev: u64, next: u64 },
    #[error("odd codimensions {0:?}")]
    InvalidCodimension(Vec<u64>),
    #[error("malformed weight matrix: {0}")]
    MalformedMatrix(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionType {
    Even,
    Odd,
    #[default]
    Unknown,
}

/// Rotation numbers of the isotropy representation at a torus fixed point:
/// `s` rows, one per circle factor, `half_dim` columns, one per complex
/// line of the tangent space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightMatrix {
    pub s: usize,
    pub half_dim: usize,
    pub matrix: Vec<Vec<i64>>,
    #[serde(default)]
    pub dim: Option<u64>,
    #[serde(default)]
    pub spin: bool,
    #[serde(default)]
    pub action_type: ActionType,
}

impl WeightMatrix {
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self, IsotropyError> {
        let half_dim = matrix.first().map_or(0, Vec::len);
        let w = WeightMatrix { s: matrix.len(), half_dim, matrix, dim: None, spin: false, action_type: ActionType::Unknown };
        w.validate()?;
        Ok(w)
    }

    pub fn with_flags(mut self, spin: bool, action_type: ActionType) -> Self {
        self.spin = spin;
        self.action_type = action_type;
        self
    }

    pub fn validate(&self) -> Result<(), IsotropyError> {
        if self.matrix.len() != self.s {
            return Err(IsotropyError::MalformedMatrix(format!("{} rows but s = {}", self.matrix.len(), self.s)));
        }
        if let Some(row) = self.matrix.iter().find(|r| r.len() != self.half_dim) {
            return Err(IsotropyError::MalformedMatrix(format!(
                "row of length {} but half_dim = {}",
                row.len(),
                self.half_dim
            )));
        }
        if let Some(d) = self.dim {
            if d != 2 * self.half_dim as u64 {
                return Err(IsotropyError::MalformedMatrix(format!("dim {d} ≠ 2·half_dim = {}", 2 * self.half_dim)));
            }
        }
        Ok(())
    }

    /// Manifold dimension `n = 2·half_dim`.
    pub fn n(&self) -> u64 {
        2 * self.half_dim as u64
    }

    fn row_mod2(&self, i: usize) -> Codeword {
        Codeword::from_bits(&self.matrix[i].iter().map(|w| w.rem_euclid(2) == 1).collect::<Vec<_>>())
    }

    /// Image of `σ ∈ Z₂ˢ` (given by its coordinates) in `Z₂^{half_dim}`.
    pub fn image(&self, sigma: &[bool]) -> Codeword {
        assert_eq!(sigma.len(), self.s, "σ must have s coordinates");
        let mut w = Codeword::zero(self.half_dim);
        for (i, _) in sigma.iter().enumerate().filter(|(_, &b)| b) {
            w.xor_assign(&self.row_mod2(i));
        }
        w
    }
}

/// The mod-2 reduction of the weights, as a code of length `half_dim`.
pub fn isotropy_code(w: &WeightMatrix) -> Result<BinaryCode, IsotropyError> {
    w.validate()?;
    let rows: Vec<Codeword> = (0..w.s).map(|i| w.row_mod2(i)).collect();
    let code = BinaryCode::from_rows(w.half_dim, &rows)?;
    if code.rank() < w.s {
        return Err(IsotropyError::NotEffective { rank: code.rank(), s: w.s });
    }
    Ok(code)
}

/// Codimension `2·wt(σ̃)` of the fixed component of `σ` through the fixed point.
pub fn codim_of_involution(w: &WeightMatrix, sigma: &[bool]) -> Result<u64, IsotropyError> {
    if !sigma.iter().any(|&b| b) {
        return Err(IsotropyError::ZeroElement);
    }
    Ok(2 * w.image(sigma).weight() as u64)
}
