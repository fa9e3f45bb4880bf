use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};

/// The expansion base `r >= 2`.
///
/// Digit comparisons against the middle value `(r-1)/2` drive the whole
/// derivative analysis, so they live here: for odd `r` the middle value
/// is itself a digit, for even `r` it falls between two digits and every
/// digit compares strictly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Radix(u32);

impl Radix {
    pub fn new(r: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::RadixTooSmall(r));
        }
        Ok(Radix(r))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }

    /// The middle digit `(r-1)/2`, which exists only for odd `r`.
    pub fn middle_digit(self) -> Option<u32> {
        if self.is_odd() {
            Some((self.0 - 1) / 2)
        } else {
            None
        }
    }

    /// Whether `d` equals the middle digit (always false for even `r`).
    pub fn is_middle(self, d: u32) -> bool {
        2 * d + 1 == self.0
    }

    /// Compares `d` against `(r-1)/2`: `Some(1)` below, `Some(-1)` above,
    /// `None` exactly the middle digit.
    pub fn digit_sign(self, d: u32) -> Option<i8> {
        use std::cmp::Ordering;
        match (2 * d + 1).cmp(&self.0) {
            Ordering::Less => Some(1),
            Ordering::Greater => Some(-1),
            Ordering::Equal => None,
        }
    }

    pub fn check_digit(self, d: u32) -> Result<()> {
        if d >= self.0 {
            return Err(Error::DigitOutOfRange {
                digit: d,
                radix: self.0,
            });
        }
        Ok(())
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }

    /// `r^k` as a big integer.
    pub fn pow(self, k: u64) -> BigInt {
        num_traits::pow::Pow::pow(&self.to_bigint(), k)
    }
}

impl std::fmt::Display for Radix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_radix_below_two() {
        assert!(Radix::new(0).is_err());
        assert!(Radix::new(1).is_err());
        assert!(Radix::new(2).is_ok());
    }

    #[test]
    fn middle_digit_only_for_odd() {
        assert_eq!(Radix::new(2).unwrap().middle_digit(), None);
        assert_eq!(Radix::new(3).unwrap().middle_digit(), Some(1));
        assert_eq!(Radix::new(5).unwrap().middle_digit(), Some(2));
        assert_eq!(Radix::new(10).unwrap().middle_digit(), None);
    }

    #[test]
    fn digit_sign_splits_around_middle() {
        let r3 = Radix::new(3).unwrap();
        assert_eq!(r3.digit_sign(0), Some(1));
        assert_eq!(r3.digit_sign(1), None);
        assert_eq!(r3.digit_sign(2), Some(-1));

        let r2 = Radix::new(2).unwrap();
        assert_eq!(r2.digit_sign(0), Some(1));
        assert_eq!(r2.digit_sign(1), Some(-1));

        let r10 = Radix::new(10).unwrap();
        assert_eq!(r10.digit_sign(4), Some(1));
        assert_eq!(r10.digit_sign(5), Some(-1));
    }
}
