//! Exact extended coordinates: rationals together with the two order sentinels.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, ScarfError};

/// Arbitrary-precision rational number used for every finite coordinate.
pub type Rational = BigRational;

/// An element of the order completion `[-inf, +inf]` of the rationals.
///
/// The derived ordering places `NegInf` below every finite value and `PosInf`
/// above. Arithmetic is only defined between finite values; the sentinels
/// carry order semantics and nothing else.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedCoordinate {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtendedCoordinate {
    pub fn int(value: i64) -> Self {
        ExtendedCoordinate::Finite(Rational::from_integer(BigInt::from(value)))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        ExtendedCoordinate::Finite(Rational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedCoordinate::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtendedCoordinate::Finite(r) => Some(r),
            _ => None,
        }
    }

    /// The finite value, or [`ScarfError::InfiniteArithmetic`] for a sentinel.
    pub fn finite(&self) -> Result<&Rational> {
        self.as_finite().ok_or(ScarfError::InfiniteArithmetic)
    }

    /// The integer value, if this is a finite integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_finite().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Ok(ExtendedCoordinate::Finite(self.finite()? + other.finite()?))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        Ok(ExtendedCoordinate::Finite(self.finite()? - other.finite()?))
    }

    /// Decimal expansion rounded half away from zero to `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        match self {
            ExtendedCoordinate::NegInf => "-inf".into(),
            ExtendedCoordinate::PosInf => "+inf".into(),
            ExtendedCoordinate::Finite(r) => rational_to_decimal(r, digits),
        }
    }
}

impl From<Rational> for ExtendedCoordinate {
    fn from(r: Rational) -> Self {
        ExtendedCoordinate::Finite(r)
    }
}

impl From<i64> for ExtendedCoordinate {
    fn from(v: i64) -> Self {
        ExtendedCoordinate::int(v)
    }
}

pub(crate) fn rational_to_decimal(r: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = r * Rational::from_integer(scale.clone());
    // round half away from zero
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let rounded = if scaled.is_negative() {
        -((-scaled) + half).floor()
    } else {
        (scaled + half).floor()
    }
    .to_integer();
    let negative = rounded.is_negative();
    let (int_part, frac_part) = rounded.abs().div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        let frac = frac_part.to_string();
        out.push('.');
        out.extend(std::iter::repeat_n('0', digits - frac.len()));
        out.push_str(&frac);
    }
    out
}

/// Parse an exact rational from `"7"`, `"-3/4"` or a finite decimal such as `"0.125"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || ScarfError::BadCoordinate(text.to_string());
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let whole_val = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(whole_digits).map_err(|_| bad())?
        };
        let frac_val = BigInt::from_str(frac).map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let mag = Rational::new(whole_val * &den + frac_val, den);
        return Ok(if negative { -mag } else { mag });
    }
    BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad())
}

impl FromStr for ExtendedCoordinate {
    type Err = ScarfError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+inf" | "inf" => Ok(ExtendedCoordinate::PosInf),
            "-inf" => Ok(ExtendedCoordinate::NegInf),
            other => parse_rational(other).map(ExtendedCoordinate::Finite),
        }
    }
}

impl fmt::Display for ExtendedCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedCoordinate::NegInf => f.write_str("-inf"),
            ExtendedCoordinate::PosInf => f.write_str("+inf"),
            ExtendedCoordinate::Finite(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for ExtendedCoordinate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if let Some(v) = self.as_integer().and_then(|i| i.to_i64()) {
            serializer.serialize_i64(v)
        } else {
            serializer.collect_str(self)
        }
    }
}

struct CoordinateVisitor;

impl Visitor<'_> for CoordinateVisitor {
    type Value = ExtendedCoordinate;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer, a string \"p/q\", or \"+inf\"/\"-inf\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Self::Value, E> {
        Ok(ExtendedCoordinate::int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Self::Value, E> {
        Ok(ExtendedCoordinate::Finite(Rational::from_integer(BigInt::from(v))))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Self::Value, E> {
        Err(E::custom(format!(
            "non-integer JSON number {v}; write fractions as strings \"p/q\""
        )))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Self::Value, E> {
        v.parse().map_err(|e: ScarfError| E::custom(e.to_string()))
    }
}

impl<'de> Deserialize<'de> for ExtendedCoordinate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(CoordinateVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sentinels_bracket_finite_values() {
        let lo = ExtendedCoordinate::NegInf;
        let hi = ExtendedCoordinate::PosInf;
        let x = ExtendedCoordinate::int(-1_000_000);
        let y = ExtendedCoordinate::ratio(1, 3);
        assert!(lo < x && x < y && y < hi);
        assert!(ExtendedCoordinate::ratio(1, 3) < ExtendedCoordinate::ratio(1, 2));
    }

    #[test]
    fn arithmetic_rejects_sentinels() {
        let one = ExtendedCoordinate::int(1);
        assert_eq!(one.checked_add(&one).unwrap(), ExtendedCoordinate::int(2));
        assert_eq!(
            one.checked_add(&ExtendedCoordinate::PosInf),
            Err(ScarfError::InfiniteArithmetic)
        );
        assert_eq!(
            ExtendedCoordinate::NegInf.checked_sub(&one),
            Err(ScarfError::InfiniteArithmetic)
        );
    }

    #[test]
    fn parse_forms() {
        assert_eq!("12".parse::<ExtendedCoordinate>().unwrap(), ExtendedCoordinate::int(12));
        assert_eq!("-3/6".parse::<ExtendedCoordinate>().unwrap(), ExtendedCoordinate::ratio(-1, 2));
        assert_eq!("0.125".parse::<ExtendedCoordinate>().unwrap(), ExtendedCoordinate::ratio(1, 8));
        assert_eq!("-1.5".parse::<ExtendedCoordinate>().unwrap(), ExtendedCoordinate::ratio(-3, 2));
        assert_eq!("+inf".parse::<ExtendedCoordinate>().unwrap(), ExtendedCoordinate::PosInf);
        assert_eq!("-inf".parse::<ExtendedCoordinate>().unwrap(), ExtendedCoordinate::NegInf);
        assert!("1/0".parse::<ExtendedCoordinate>().is_err());
        assert!("x".parse::<ExtendedCoordinate>().is_err());
        assert!("1.".parse::<ExtendedCoordinate>().is_err());
    }

    #[test]
    fn json_forms() {
        let coords: Vec<ExtendedCoordinate> =
            serde_json::from_str(r#"[3, "-2/4", "+inf", "-inf", "5"]"#).unwrap();
        assert_eq!(
            coords,
            vec![
                ExtendedCoordinate::int(3),
                ExtendedCoordinate::ratio(-1, 2),
                ExtendedCoordinate::PosInf,
                ExtendedCoordinate::NegInf,
                ExtendedCoordinate::int(5),
            ]
        );
        assert_eq!(serde_json::to_string(&coords).unwrap(), r#"[3,"-1/2","+inf","-inf",5]"#);
        assert!(serde_json::from_str::<ExtendedCoordinate>("1.5").is_err());
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(ExtendedCoordinate::ratio(1, 3).to_decimal(4), "0.3333");
        assert_eq!(ExtendedCoordinate::ratio(2, 3).to_decimal(2), "0.67");
        assert_eq!(ExtendedCoordinate::ratio(-1, 8).to_decimal(2), "-0.13");
        assert_eq!(ExtendedCoordinate::int(7).to_decimal(0), "7");
        assert_eq!(ExtendedCoordinate::ratio(1, 200).to_decimal(3), "0.005");
    }
}
