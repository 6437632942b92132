//! Exact rationals extended by a single point at infinity.
//!
//! Values print as reduced `p/q` (plain `p` for integers) and infinity as
//! `inf`. The same strings are accepted by the parser.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A point of the projective line over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(BigRational),
    Infinity,
}

impl ExtRational {
    pub fn zero() -> Self {
        ExtRational::Finite(BigRational::zero())
    }

    pub fn integer(v: i64) -> Self {
        ExtRational::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtRational::Finite(q) => Some(q),
            ExtRational::Infinity => None,
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Infinity sorts after every finite value.
impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
            (ExtRational::Finite(_), ExtRational::Infinity) => Ordering::Less,
            (ExtRational::Infinity, ExtRational::Finite(_)) => Ordering::Greater,
            (ExtRational::Infinity, ExtRational::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(q) => f.write_str(&format_rational(q)),
            ExtRational::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(ExtRational::Infinity);
        }
        parse_rational(t).map(ExtRational::Finite)
    }
}

impl Serialize for ExtRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Reduced `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// LaTeX rendering of the absolute value of `q`; sign handling is left to
/// the caller.
pub fn latex_abs_rational(q: &BigRational) -> String {
    let a = q.abs();
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("cannot parse rational '{s}'"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "zero denominator in '{s}'"
        )));
    }
    Ok(BigRational::new(num, den))
}

/// Serializes a rational as its `p/q` string.
pub fn serialize_rational<S: Serializer>(
    q: &BigRational,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&format_rational(q))
}

pub fn serialize_rationals<S: Serializer>(
    qs: &[BigRational],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(qs.iter().map(format_rational))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_reduced() {
        let q = BigRational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(ExtRational::integer(5).to_string(), "5");
        assert_eq!(ExtRational::Infinity.to_string(), "inf");
    }

    #[test]
    fn parses_round_trip() {
        for s in ["0", "-7", "3/5", "inf", "-12/7"] {
            let v: ExtRational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("4/2".parse::<ExtRational>().unwrap().to_string(), "2");
        assert!("1/0".parse::<ExtRational>().is_err());
        assert!("abc".parse::<ExtRational>().is_err());
    }

    #[test]
    fn infinity_is_largest() {
        assert!(ExtRational::Infinity > ExtRational::integer(1_000_000));
        assert!(ExtRational::integer(-1) < ExtRational::zero());
    }
}
