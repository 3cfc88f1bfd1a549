//! Binary linear codes: reduced echelon bases, weight statistics by
//! enumeration, residual codes and the iterated residual chain.

mod word;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use word::Codeword;

/// Largest rank whose `2^k` codewords are enumerated.
pub const ENUMERATION_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("rows have different lengths")]
    RaggedRows,
    #[error("rank {rank} exceeds the enumeration cap {cap}")]
    RankTooLargeForEnumeration { rank: usize, cap: usize },
    #[error("word {0} is not a codeword")]
    NotACodeword(String),
    #[error("the zero word has no residual code")]
    ZeroWord,
    #[error("invalid bit {0:?}")]
    InvalidBit(char),
    #[error("row of length {found} in a code of length {expected}")]
    LengthMismatch { expected: usize, found: usize },
}

/// A linear subspace of `Z₂ⁿ`, stored by its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    length: usize,
    basis: Vec<Codeword>,
}

impl BinaryCode {
    pub fn zero(length: usize) -> Self {
        BinaryCode { length, basis: Vec::new() }
    }

    /// Row-reduce `rows` of the given length. `length` is needed so the zero
    /// code with no rows still knows its ambient space.
    pub fn from_rows(length: usize, rows: &[Codeword]) -> Result<Self, CodeError> {
        if let Some(r) = rows.iter().find(|r| r.len() != length) {
            return Err(CodeError::LengthMismatch { expected: length, found: r.len() });
        }
        Ok(BinaryCode { length, basis: rref(rows.to_vec()) })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Codeword] {
        &self.basis
    }

    /// Reduce `w` against the basis; zero iff `w ∈ C`.
    fn reduce(&self, w: &Codeword) -> Codeword {
        let mut r = w.clone();
        for b in &self.basis {
            let pivot = b.leading_one().expect("basis rows are nonzero");
            if r.get(pivot) {
                r.xor_assign(b);
            }
        }
        r
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        w.len() == self.length && self.reduce(w).is_zero()
    }

    fn check_enumerable(&self) -> Result<(), CodeError> {
        if self.rank() > ENUMERATION_CAP {
            Err(CodeError::RankTooLargeForEnumeration { rank: self.rank(), cap: ENUMERATION_CAP })
        } else {
            Ok(())
        }
    }

    /// Visit all `2^k` codewords in Gray-code order, starting with 0.
    pub fn for_each_codeword(&self, mut f: impl FnMut(&Codeword)) -> Result<(), CodeError> {
        self.check_enumerable()?;
        let mut cur = Codeword::zero(self.length);
        f(&cur);
        for i in 1u64..(1u64 << self.rank()) {
            cur.xor_assign(&self.basis[i.trailing_zeros() as usize]);
            f(&cur);
        }
        Ok(())
    }

    pub fn codewords(&self) -> Result<Vec<Codeword>, CodeError> {
        let mut out = Vec::with_capacity(1 << self.rank().min(ENUMERATION_CAP));
        self.for_each_codeword(|w| out.push(w.clone()))?;
        Ok(out)
    }

    /// `d_max(C) = max wt(x)`; 0 for the zero code.
    pub fn max_distance(&self) -> Result<usize, CodeError> {
        let mut best = 0;
        self.for_each_codeword(|w| best = best.max(w.weight()))?;
        Ok(best)
    }

    /// Minimum weight of a nonzero codeword; 0 for the zero code.
    pub fn min_distance(&self) -> Result<usize, CodeError> {
        let mut best: Option<usize> = None;
        self.for_each_codeword(|w| {
            let wt = w.weight();
            if wt > 0 {
                best = Some(best.map_or(wt, |b| b.min(wt)));
            }
        })?;
        Ok(best.unwrap_or(0))
    }

    /// All codewords of maximal weight, sorted lexicographically.
    pub fn max_weight_codewords(&self) -> Result<Vec<Codeword>, CodeError> {
        let mut best = 0;
        let mut words = Vec::new();
        self.for_each_codeword(|w| {
            let wt = w.weight();
            if wt > best {
                best = wt;
                words.clear();
            }
            if wt == best {
                words.push(w.clone());
            }
        })?;
        words.sort();
        Ok(words)
    }

    /// Lexicographically smallest codeword of maximal weight.
    pub fn max_weight_codeword(&self) -> Result<Codeword, CodeError> {
        Ok(self.max_weight_codewords()?.swap_remove(0))
    }

    /// The code generated by the basis rows other than `x`, restricted to
    /// the complement of `supp(x)` in increasing coordinate order.
    pub fn residual_code(&self, x: &Codeword) -> Result<BinaryCode, CodeError> {
        if !self.contains(x) {
            return Err(CodeError::NotACodeword(x.to_string()));
        }
        if x.is_zero() {
            return Err(CodeError::ZeroWord);
        }
        // x's leading one is the pivot of a basis row it involves; that row
        // is the one x replaces. Every other row is already zero there.
        let lead = x.leading_one().expect("x is nonzero");
        let rest: Vec<&Codeword> = self.basis.iter().filter(|b| b.leading_one() != Some(lead)).collect();
        debug_assert_eq!(rest.len() + 1, self.rank());
        let complement: Vec<usize> = (0..self.length).filter(|&i| !x.get(i)).collect();
        let rows: Vec<Codeword> = rest.iter().map(|r| r.restrict(&complement)).collect();
        BinaryCode::from_rows(complement.len(), &rows)
    }

    /// Repeatedly pass to the residual code of a maximal-weight codeword.
    pub fn iterated_residual(&self) -> Result<ChainReport, CodeError> {
        let mut report = ChainReport {
            pivots: Vec::new(),
            weights: Vec::new(),
            lengths: vec![self.length],
            max_distances: vec![self.max_distance()?],
            halving_holds: true,
        };
        let mut code = self.clone();
        while code.rank() > 0 && code.length() > 0 {
            let x = code.max_weight_codeword()?;
            code = code.residual_code(&x)?;
            if let Some(&prev) = report.weights.last() {
                if x.weight() > prev / 2 {
                    report.halving_holds = false;
                }
            }
            report.weights.push(x.weight());
            report.pivots.push(x);
            report.lengths.push(code.length());
            report.max_distances.push(code.max_distance()?);
        }
        Ok(report)
    }

    pub fn to_file(&self) -> CodeFile {
        CodeFile { length: self.length, rows: self.basis.iter().map(|r| r.to_string()).collect() }
    }
}

/// Reduced row echelon form over GF(2), zero rows dropped, rows sorted by
/// pivot column.
fn rref(mut rows: Vec<Codeword>) -> Vec<Codeword> {
    let mut basis: Vec<Codeword> = Vec::new();
    for mut r in rows.drain(..) {
        for b in &basis {
            if r.get(b.leading_one().expect("nonzero")) {
                r.xor_assign(b);
            }
        }
        let Some(p) = r.leading_one() else { continue };
        for b in basis.iter_mut() {
            if b.get(p) {
                b.xor_assign(&r);
            }
        }
        basis.push(r);
    }
    basis.sort_by_key(|b| b.leading_one());
    basis
}

impl Serialize for BinaryCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

/// Build a code from equal-length rows.
pub fn code_from_rows(rows: &[Codeword]) -> Result<BinaryCode, CodeError> {
    let Some(first) = rows.first() else {
        return Ok(BinaryCode::zero(0));
    };
    if rows.iter().any(|r| r.len() != first.len()) {
        return Err(CodeError::RaggedRows);
    }
    BinaryCode::from_rows(first.len(), rows)
}

/// Output of [`BinaryCode::iterated_residual`]. `lengths` and
/// `max_distances` start with the original code, so they have one entry
/// more than `weights`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub pivots: Vec<Codeword>,
    pub weights: Vec<usize>,
    pub lengths: Vec<usize>,
    pub max_distances: Vec<usize>,
    /// `wt(x_{i+1}) ≤ ⌊wt(x_i)/2⌋` at every step.
    pub halving_holds: bool,
}

impl ChainReport {
    pub fn steps(&self) -> usize {
        self.weights.len()
    }

    pub fn final_length(&self) -> usize {
        *self.lengths.last().expect("lengths is never empty")
    }
}

/// JSON form: `{"length": n, "rows": ["111100", "001111"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub length: usize,
    pub rows: Vec<String>,
}

impl CodeFile {
    pub fn to_code(&self) -> Result<BinaryCode, CodeError> {
        let rows = self.rows.iter().map(|r| r.parse()).collect::<Result<Vec<Codeword>, _>>()?;
        BinaryCode::from_rows(self.length, &rows)
    }
}
