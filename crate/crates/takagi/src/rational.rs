//! Helpers around `num_rational::BigRational` used as the exact scalar
//! type everywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn ratio_u64(num: u64, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn ratio_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fractional part `x - floor(x)`, in `[0, 1)`.
pub fn fract(x: &Rational) -> Rational {
    x - x.floor()
}

/// Parses "p/q" or a bare integer.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let parse_err = |reason: &str| Error::ParsePoint {
        spec: text.to_string(),
        reason: reason.to_string(),
    };
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text.trim(), None),
    };
    let num: BigInt = num_text
        .parse()
        .map_err(|_| parse_err("numerator is not an integer"))?;
    let den: BigInt = match den_text {
        Some(d) => d
            .parse()
            .map_err(|_| parse_err("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(parse_err("denominator is zero"));
    }
    Ok(Rational::new(num, den))
}

/// Checks `0 <= x <= 1`.
pub fn check_unit_interval(x: &Rational) -> Result<()> {
    if x.is_negative() || *x > Rational::one() {
        return Err(Error::PointOutOfRange(format!("{x}")));
    }
    Ok(())
}

/// JSON form of a rational: numerator and denominator as decimal
/// strings, so arbitrary precision survives any JSON reader.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioRepr {
    pub num: String,
    pub den: String,
}

impl RatioRepr {
    pub fn of(x: &Rational) -> Self {
        RatioRepr {
            num: x.numer().to_string(),
            den: x.denom().to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("2/6").unwrap(), ratio_u64(1, 3));
        assert_eq!(parse_rational("1").unwrap(), ratio_u64(1, 1));
        assert_eq!(parse_rational("0").unwrap(), Rational::zero());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn fract_of_improper_value() {
        assert_eq!(fract(&ratio_u64(7, 3)), ratio_u64(1, 3));
        assert_eq!(fract(&-ratio_u64(1, 4)), ratio_u64(3, 4));
    }

    #[test]
    fn unit_interval_guard() {
        assert!(check_unit_interval(&ratio_u64(1, 2)).is_ok());
        assert!(check_unit_interval(&ratio_u64(1, 1)).is_ok());
        assert!(check_unit_interval(&ratio_u64(3, 2)).is_err());
        assert!(check_unit_interval(&-ratio_u64(1, 2)).is_err());
    }
}
