//! Exact rational arithmetic.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; those invariants are maintained by the underlying
//! `num` implementation on every operation. All externally visible rationals
//! serialize as the string `"p/q"` in lowest terms, or `"p"` alone when the
//! denominator is 1.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

/// Integer as an exact rational.
pub fn rat<T: Into<BigInt>>(value: T) -> Rational {
    Rational::from_integer(value.into())
}

/// Exact fraction `numer/denom`. Panics if `denom == 0`.
pub fn frac<T: Into<BigInt>, U: Into<BigInt>>(numer: T, denom: U) -> Rational {
    Rational::new(numer.into(), denom.into())
}

/// Renders `"p/q"` in lowest terms, or `"p"` when the denominator is 1.
pub fn display(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses the `"p/q"` / `"p"` convention produced by [`display`].
pub fn parse(text: &str) -> Option<Rational> {
    let mut parts = text.splitn(2, '/');
    let numer: BigInt = parts.next()?.trim().parse().ok()?;
    match parts.next() {
        None => Some(Rational::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d.trim().parse().ok()?;
            if denom.is_zero() {
                None
            } else {
                Some(Rational::new(numer, denom))
            }
        }
    }
}

/// True iff the value is a (possibly negative) integer.
pub fn is_integral(value: &Rational) -> bool {
    value.denom().is_one()
}

/// Serde adapter: rationals as `"p/q"` strings in JSON and CSV.
pub mod serde_string {
    use super::{display, parse, Rational};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&display(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(de)?;
        parse(&text).ok_or_else(|| de::Error::custom(format!("invalid rational: {text}")))
    }
}

/// Serde adapter for `Option<Rational>` fields.
pub mod serde_string_opt {
    use super::{display, parse, Rational};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Option<Rational>, ser: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => ser.serialize_some(&display(v)),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rational>, D::Error> {
        let text = Option::<String>::deserialize(de)?;
        match text {
            None => Ok(None),
            Some(t) => parse(&t)
                .map(Some)
                .ok_or_else(|| de::Error::custom(format!("invalid rational: {t}"))),
        }
    }
}

/// Sign of the value: -1, 0, or 1.
pub fn signum(value: &Rational) -> i32 {
    if value.is_zero() {
        0
    } else if value.is_positive() {
        1
    } else {
        -1
    }
}
