use std::collections::BTreeMap;

use num::{BigInt, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::{partitions_of, Partition};
use super::GenusError;
use crate::series::{rat, QSeries, Rational};

/// Oriented `4k`-manifold, known through its Pontryagin numbers.
///
/// Partitions absent from the map have number 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldData {
    name: String,
    dim: u32,
    numbers: BTreeMap<Partition, BigInt>,
    spin: bool,
}

impl ManifoldData {
    pub fn new(
        name: impl Into<String>,
        dim: u32,
        numbers: BTreeMap<Partition, BigInt>,
        spin: bool,
    ) -> Result<Self, GenusError> {
        if dim == 0 || dim % 4 != 0 {
            return Err(GenusError::DimensionNotDivisibleBy4(dim));
        }
        let k = dim / 4;
        if let Some(bad) = numbers.keys().find(|p| p.weight() != k) {
            return Err(GenusError::WrongWeight { partition: bad.to_string(), expected: k });
        }
        let numbers = numbers.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(ManifoldData { name: name.into(), dim, numbers, spin })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// `dim / 4`.
    pub fn k(&self) -> u32 {
        self.dim / 4
    }

    pub fn spin(&self) -> bool {
        self.spin
    }

    pub fn number(&self, p: &Partition) -> BigInt {
        self.numbers.get(p).cloned().unwrap_or_default()
    }

    pub fn numbers(&self) -> &BTreeMap<Partition, BigInt> {
        &self.numbers
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Formal disjoint union of two manifolds of equal dimension.
    pub fn disjoint_union(&self, other: &ManifoldData) -> Result<ManifoldData, GenusError> {
        if self.dim != other.dim {
            return Err(GenusError::DimensionMismatch(self.dim, other.dim));
        }
        let mut numbers = self.numbers.clone();
        for (p, v) in &other.numbers {
            *numbers.entry(p.clone()).or_default() += v;
        }
        ManifoldData::new(format!("{}+{}", self.name, other.name), self.dim, numbers, self.spin && other.spin)
    }
}

/// Pontryagin numbers of `M × N`.
///
/// Each `p_j(M×N) = Σ_{a+b=j} p_a(M)·p_b(N)`; a monomial splits into a sum
/// over ways to distribute every factor between the two sides, and a term
/// survives only when each side lands exactly in its top degree.
pub fn product_manifold(m: &ManifoldData, n: &ManifoldData) -> ManifoldData {
    let (km, kn) = (m.k(), n.k());
    let mut numbers = BTreeMap::new();
    for lambda in partitions_of(km + kn) {
        let mut total = BigInt::zero();
        split_monomial(lambda.parts(), km, &mut Vec::new(), &mut Vec::new(), &mut |a, b| {
            total += m.number(&Partition::new(a.to_vec())) * n.number(&Partition::new(b.to_vec()));
        });
        numbers.insert(lambda, total);
    }
    ManifoldData::new(format!("{}x{}", m.name, n.name), m.dim + n.dim, numbers, m.spin && n.spin)
        .expect("product of 4k-manifolds has dimension divisible by 4")
}

fn split_monomial(
    parts: &[u32],
    left_budget: u32,
    left: &mut Vec<u32>,
    right: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32], &[u32]),
) {
    let Some((&first, rest)) = parts.split_first() else {
        if left_budget == 0 {
            emit(left, right);
        }
        return;
    };
    for a in 0..=first.min(left_budget) {
        left.push(a);
        right.push(first - a);
        split_monomial(rest, left_budget - a, left, right, emit);
        left.pop();
        right.pop();
    }
}

/// Pontryagin numbers from a total class `Σ c_j g^j` in `ℚ[g]/(g^{k+1})`
/// where `g` has degree 4 and `⟨g^k, [M]⟩ = 1`.
fn numbers_from_total_class(total: &QSeries, k: u32) -> BTreeMap<Partition, BigInt> {
    let class = |j: u32| total.coeffs()[j as usize].clone();
    partitions_of(k)
        .into_iter()
        .map(|lambda| {
            let value: Rational = lambda.parts().iter().map(|&j| class(j)).product();
            assert!(value.is_integer(), "Pontryagin number must be integral");
            (lambda, value.to_integer())
        })
        .collect()
}

fn binomial_power(base: &QSeries, exp: u32) -> QSeries {
    let mut out = QSeries::one(base.prec());
    for _ in 0..exp {
        out = &out * base;
    }
    out
}

/// Built-in example manifolds.
///
/// `sphere` takes its dimension, `cp` and `hp` their complex/quaternionic
/// dimension; `k3` ignores the parameter.
pub fn builtin_manifold(name: &str, parameter: u32) -> Result<ManifoldData, GenusError> {
    match name {
        "sphere" => {
            if parameter == 0 || parameter % 4 != 0 {
                return Err(GenusError::DimensionNotDivisibleBy4(parameter));
            }
            ManifoldData::new(format!("sphere{parameter}"), parameter, BTreeMap::new(), true)
        }
        "cp" => {
            if parameter % 2 == 1 {
                return Err(GenusError::OddComplexDimension(parameter));
            }
            if parameter == 0 {
                return Err(GenusError::InvalidParameter(name.into(), parameter));
            }
            // p = (1 + x²)^{n+1}, g = x², ⟨x^n, [CP^n]⟩ = 1
            let m = parameter / 2;
            let base = pad(&QSeries::from_ints(&[1, 1]), m as usize + 1);
            let total = binomial_power(&base, parameter + 1);
            ManifoldData::new(format!("cp{parameter}"), 2 * parameter, numbers_from_total_class(&total, m), false)
        }
        "hp" => {
            if parameter == 0 {
                return Err(GenusError::InvalidParameter(name.into(), parameter));
            }
            // p = (1 + u)^{2k+2} (1 + 4u)^{-1}, ⟨u^k, [HP^k]⟩ = 1
            let k = parameter;
            let prec = k as usize + 1;
            let base = pad(&QSeries::from_ints(&[1, 1]), prec);
            let correction = pad(&QSeries::from_ints(&[1, 4]), prec).inverse().expect("unit");
            let total = &binomial_power(&base, 2 * k + 2) * &correction;
            ManifoldData::new(format!("hp{k}"), 4 * k, numbers_from_total_class(&total, k), true)
        }
        "k3" => {
            let numbers = BTreeMap::from([(Partition::single(1), BigInt::from(-48))]);
            ManifoldData::new("k3", 4, numbers, true)
        }
        other => Err(GenusError::UnknownManifold(other.into())),
    }
}

/// The standard list of built-ins: `S⁴, S⁸, S¹², CP², CP⁴, CP⁶, HP², HP³, K3`.
pub fn builtin_examples() -> Vec<ManifoldData> {
    ["sphere4", "sphere8", "sphere12", "cp2", "cp4", "cp6", "hp2", "hp3", "k3"]
        .iter()
        .map(|l| manifold_from_label(l).expect("built-in label"))
        .collect()
}

fn pad(s: &QSeries, prec: usize) -> QSeries {
    let mut coeffs = s.coeffs().to_vec();
    coeffs.resize(prec, rat(0));
    coeffs.truncate(prec.max(1));
    QSeries::from_coeffs(coeffs)
}

/// Resolve a label such as `cp4`, `hp2`, `sphere8`, `k3`, or a product
/// `cp2xcp2`.
pub fn manifold_from_label(label: &str) -> Result<ManifoldData, GenusError> {
    let mut factors = label.split('x').map(single_from_label);
    let first = factors.next().ok_or_else(|| GenusError::UnknownManifold(label.into()))??;
    factors.try_fold(first, |acc, next| Ok(product_manifold(&acc, &next?)))
}

fn single_from_label(label: &str) -> Result<ManifoldData, GenusError> {
    if label == "k3" {
        return builtin_manifold("k3", 0);
    }
    let split = label.find(|c: char| c.is_ascii_digit()).ok_or_else(|| GenusError::UnknownManifold(label.into()))?;
    let (name, digits) = label.split_at(split);
    let parameter = digits.parse::<u32>().map_err(|_| GenusError::UnknownManifold(label.into()))?;
    builtin_manifold(name, parameter)
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum NumberRepr {
    Text(String),
    Int(i64),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifoldRepr {
    name: String,
    dim: u32,
    pontryagin: BTreeMap<String, NumberRepr>,
    spin: bool,
}

impl Serialize for ManifoldData {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ManifoldRepr {
            name: self.name.clone(),
            dim: self.dim,
            pontryagin: self
                .numbers
                .iter()
                .map(|(p, v)| (p.to_string(), NumberRepr::Text(v.to_string())))
                .collect(),
            spin: self.spin,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ManifoldData {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ManifoldRepr::deserialize(d)?;
        let mut numbers = BTreeMap::new();
        for (key, value) in repr.pontryagin {
            let p: Partition = key.parse().map_err(D::Error::custom)?;
            let v = match value {
                NumberRepr::Int(i) => BigInt::from(i),
                NumberRepr::Text(t) => t.trim().parse::<BigInt>().map_err(D::Error::custom)?,
            };
            numbers.insert(p, v);
        }
        ManifoldData::new(repr.name, repr.dim, numbers, repr.spin).map_err(D::Error::custom)
    }
}

impl ManifoldData {
    /// Numbers as machine integers, for tests and display.
    pub fn number_i64(&self, parts: &[u32]) -> Option<i64> {
        self.number(&Partition::new(parts.to_vec())).to_i64()
    }
}
