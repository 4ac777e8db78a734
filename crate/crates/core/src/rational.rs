//! Exact rational scalars and the `"p/q"` string codec used by the JSON interchange.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serializer};

use crate::error::Error;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p"` or `"p/q"` (whitespace tolerant).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// `"p"` for integers, `"p/q"` otherwise, always in lowest terms.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Reduces `x` into the half-open interval `[0, m)`.
pub fn reduce_mod(x: &Rational, m: &Rational) -> Rational {
    let q = (x / m).floor();
    x - q * m
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn ser_rational_vec<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(format_rational))
}

pub(crate) fn ser_rational_rows<S: Serializer>(
    rows: &[Vec<Rational>],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        rows.iter()
            .map(|r| r.iter().map(format_rational).collect::<Vec<_>>()),
    )
}

/// Accepts either a JSON string (`"3/4"`) or a JSON integer.
#[derive(Deserialize)]
#[serde(untagged)]
enum RationalRepr {
    Str(String),
    Int(i64),
}

impl RationalRepr {
    fn into_rational<E: de::Error>(self) -> Result<Rational, E> {
        match self {
            RationalRepr::Str(s) => parse_rational(&s).map_err(E::custom),
            RationalRepr::Int(i) => Ok(int(i)),
        }
    }
}

pub(crate) fn de_rational_vec<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
    Vec::<RationalRepr>::deserialize(d)?
        .into_iter()
        .map(RationalRepr::into_rational)
        .collect()
}

pub(crate) fn de_rational_rows<'de, D: Deserializer<'de>>(
    d: D,
) -> Result<Vec<Vec<Rational>>, D::Error> {
    Vec::<Vec<RationalRepr>>::deserialize(d)?
        .into_iter()
        .map(|row| row.into_iter().map(RationalRepr::into_rational).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-5/6").unwrap(), frac(-5, 6));
        assert_eq!(parse_rational(" 4/2 ").unwrap(), int(2));
        assert_eq!(format_rational(&frac(10, -4)), "-5/2");
        assert_eq!(format_rational(&int(-7)), "-7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn reduce_into_interval() {
        assert_eq!(reduce_mod(&frac(-1, 6), &int(2)), frac(11, 6));
        assert_eq!(reduce_mod(&int(4), &int(2)), int(0));
    }
}
