//! Rational scalars and the `"p/q"` string form used by every file format.
//!
//! All arithmetic in this crate is exact.  Serialized rationals are always
//! strings (`"3"`, `"-2/5"`), never floats, so files survive round trips
//! bit-for-bit.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;

use crate::error::CoreError;

pub type Rat = BigRational;

/// Reduced rational p/q from machine integers. Panics on q = 0; callers
/// pass literal denominators.
pub fn rat(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    BigRational::from_integer(BigInt::from(p))
}

/// Canonical string form: `"p"` when the (reduced) denominator is 1,
/// `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p"` or `"p/q"`; the result is reduced. Rejects zero denominators
/// and anything that is not a plain integer pair.
pub fn parse_rat(s: &str) -> Result<Rat, CoreError> {
    let body = s.trim();
    let (num, den) = match body.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (body, None),
    };
    let p = BigInt::from_str(num.trim())
        .map_err(|e| CoreError::Parse(format!("bad rational {s:?}: {e}")))?;
    let q = match den {
        Some(b) => BigInt::from_str(b.trim())
            .map_err(|e| CoreError::Parse(format!("bad rational {s:?}: {e}")))?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(CoreError::Parse(format!(
            "bad rational {s:?}: zero denominator"
        )));
    }
    Ok(BigRational::new(p, q))
}

/// Serde adapter for a single `Rat` field: `#[serde(with = "rat_str")]`.
pub mod rat_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rat>` fields: `#[serde(with = "rat_vec")]`.
pub mod rat_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(v.iter().map(format_rat))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rat>, D::Error> {
        let raw = Vec::<String>::deserialize(de)?;
        raw.iter()
            .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter for `Vec<Vec<Rat>>` fields: `#[serde(with = "rat_vec2")]`.
pub mod rat_vec2 {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Vec<Rat>], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(
            v.iter()
                .map(|row| row.iter().map(format_rat).collect::<Vec<_>>()),
        )
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Vec<Rat>>, D::Error> {
        let raw = Vec::<Vec<String>>::deserialize(de)?;
        raw.iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_rationals_format_without_slash() {
        assert_eq!(format_rat(&rat_int(7)), "7");
        assert_eq!(format_rat(&rat_int(-3)), "-3");
        assert_eq!(format_rat(&rat(6, 3)), "2", "6/3 must reduce before formatting");
    }

    #[test]
    fn fractions_format_reduced() {
        assert_eq!(format_rat(&rat(-4, 10)), "-2/5");
        assert_eq!(format_rat(&rat(1, -2)), "-1/2", "sign moves to the numerator");
    }

    #[test]
    fn parse_round_trips_canonical_forms() {
        for s in ["0", "17", "-5", "2/3", "-7/11"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s, "round trip of {s}");
        }
    }

    #[test]
    fn parse_reduces_and_tolerates_spacing() {
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
        assert_eq!(format_rat(&parse_rat(" -9 / 12 ").unwrap()), "-3/4");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "x", "1.5", "1/2/3", "--1"] {
            assert!(parse_rat(s).is_err(), "{s:?} must not parse");
        }
    }
}
