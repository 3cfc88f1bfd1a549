//! Hirzebruch genera: characteristic series, multiplicative sequences,
//! Pontryagin-number evaluation and a small database of example manifolds.

mod charseries;
mod graded;
mod manifold;
mod multiplicative;
mod partition;

use thiserror::Error;

pub use charseries::CharSeries;
pub use graded::GradedPoly;
pub use manifold::{builtin_examples, builtin_manifold, manifold_from_label, product_manifold, ManifoldData};
pub use multiplicative::{evaluate_genus, k_polynomials, power_sums_in_elementary, Genus};
pub use partition::{partitions_of, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenusError {
    #[error("leading coefficient of the characteristic series is not a unit")]
    NonUnitLeadingTerm,
    #[error("characteristic series has odd terms")]
    NotEven,
    #[error("dimension {0} is not a positive multiple of 4")]
    DimensionNotDivisibleBy4(u32),
    #[error("dimensions differ: {0} vs {1}")]
    DimensionMismatch(u32, u32),
    #[error("partition {partition} does not have weight {expected}")]
    WrongWeight { partition: String, expected: u32 },
    #[error("series known to weight {available}, weight {needed} required")]
    InsufficientPrecision { needed: usize, available: usize },
    #[error("unknown manifold {0:?}")]
    UnknownManifold(String),
    #[error("CP^{0} has dimension 2 mod 4")]
    OddComplexDimension(u32),
    #[error("invalid parameter {1} for {0}")]
    InvalidParameter(String, u32),
}
