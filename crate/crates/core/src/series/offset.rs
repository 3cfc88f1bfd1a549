use num::{BigInt, One};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rational, rational_to_string, QSeries, Rational, Series, SeriesError};

/// `q^offset · body` with a half-integral offset.
///
/// Only equal-offset sums and scalar multiples are supported.
#[derive(Debug, Clone, PartialEq)]
pub struct OffsetSeries {
    offset: Rational,
    body: QSeries,
}

impl OffsetSeries {
    pub fn new(offset: Rational, body: QSeries) -> Result<Self, SeriesError> {
        let d = offset.denom();
        if !(d.is_one() || *d == BigInt::from(2)) {
            return Err(SeriesError::InvalidOffset(rational_to_string(&offset)));
        }
        Ok(OffsetSeries { offset, body })
    }

    pub fn unshifted(body: QSeries) -> Self {
        OffsetSeries { offset: Rational::from_integer(BigInt::from(0)), body }
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn body(&self) -> &QSeries {
        &self.body
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.body.coeffs()
    }

    /// True when the offset is a half-integer that is not an integer.
    pub fn has_half_integral_offset(&self) -> bool {
        !self.offset.denom().is_one()
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.offset != other.offset {
            return Err(SeriesError::OffsetMismatch(
                rational_to_string(&self.offset),
                rational_to_string(&other.offset),
            ));
        }
        Ok(OffsetSeries { offset: self.offset.clone(), body: &self.body + &other.body })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        OffsetSeries { offset: self.offset.clone(), body: self.body.scale(c) }
    }
}

#[derive(Serialize, Deserialize)]
struct OffsetRepr {
    offset: String,
    coeffs: Vec<String>,
    prec: usize,
}

impl Serialize for OffsetSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        OffsetRepr {
            offset: rational_to_string(&self.offset),
            coeffs: self.body.coeffs().iter().map(rational_to_string).collect(),
            prec: self.body.prec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for OffsetSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = OffsetRepr::deserialize(d)?;
        if repr.coeffs.len() != repr.prec || repr.prec == 0 {
            return Err(D::Error::custom(SeriesError::PrecisionMismatch {
                count: repr.coeffs.len(),
                prec: repr.prec,
            }));
        }
        let offset = parse_rational(&repr.offset).map_err(D::Error::custom)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        OffsetSeries::new(offset, Series::from_coeffs(coeffs)).map_err(D::Error::custom)
    }
}
