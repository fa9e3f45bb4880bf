//! Base-`r` digit streams.
//!
//! A stream is either eventually periodic (exactly the expansions of
//! rational points) or generated by the sparse-powers rule, where the
//! digit at `n` takes one value when `n` is a power of a base `b` and
//! another value everywhere else. Eventually periodic streams are kept
//! in canonical form: minimal period, then minimal preperiod, so
//! structural equality coincides with equality of digit sequences.
//!
//! Points of the r-adic set `D` have two expansions. Construction from
//! a rational picks the all-zeros tail unless the all-max-digit tail is
//! requested explicitly, which is what interval right endpoints need.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::radix::Radix;
use crate::rational::{check_unit_interval, Rational};
use crate::CYCLE_CAP;

/// Which expansion to pick for points with two of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailConvention {
    /// Terminating expansion, tail of zeros.
    #[default]
    Zeros,
    /// Tail of `r-1` digits; used for right endpoints of r-adic
    /// intervals. Falls back to `Zeros` when no alternative exists
    /// (`x = 0` or a non-terminating expansion).
    MaxDigit,
}

/// Membership of a point in the distinguished digit-tail sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointClass {
    /// Tail of all zeros or all `r-1`: the r-adic rationals `D`.
    RAdic,
    /// Tail of all middle digits, odd radix only: the midpoint set.
    Midpoint,
    /// Everything else; the only class where every piece is
    /// differentiable at the point.
    Generic,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum StreamBody {
    Periodic {
        preperiod: Vec<u32>,
        period: Vec<u32>,
    },
    SparsePowers {
        base: u64,
        on_digit: u32,
        off_digit: u32,
        first_power: u32,
    },
}

/// An infinite base-`r` digit sequence, 1-indexed, representing
/// `x = sum of digit(n) * r^-n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitStream {
    radix: Radix,
    body: StreamBody,
}

impl DigitStream {
    /// Eventually periodic stream; canonicalizes the representation.
    pub fn periodic(radix: Radix, preperiod: Vec<u32>, period: Vec<u32>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        for &d in preperiod.iter().chain(period.iter()) {
            radix.check_digit(d)?;
        }
        let (preperiod, period) = canonicalize(preperiod, period);
        Ok(DigitStream {
            radix,
            body: StreamBody::Periodic { preperiod, period },
        })
    }

    /// Sparse-powers stream: digit `on` at positions `b^k` with
    /// `k >= first_power`, digit `off` elsewhere. Collapses to a
    /// constant periodic stream when `on == off`.
    pub fn sparse_powers(
        radix: Radix,
        base: u64,
        on_digit: u32,
        off_digit: u32,
        first_power: u32,
    ) -> Result<Self> {
        if base < 2 {
            return Err(Error::GeneratorBaseTooSmall(base));
        }
        radix.check_digit(on_digit)?;
        radix.check_digit(off_digit)?;
        if on_digit == off_digit {
            return Self::periodic(radix, vec![], vec![on_digit]);
        }
        Ok(DigitStream {
            radix,
            body: StreamBody::SparsePowers {
                base,
                on_digit,
                off_digit,
                first_power,
            },
        })
    }

    /// Expansion of a rational point of `[0, 1]`.
    pub fn from_rational(x: &Rational, radix: Radix, tail: TailConvention) -> Result<Self> {
        check_unit_interval(x)?;
        if x.is_one() {
            // 1 = 0.(r-1)(r-1)... is the only in-range expansion.
            return Self::periodic(radix, vec![], vec![radix.get() - 1]);
        }
        let (preperiod, period) = expand_digits(x, radix)?;
        if tail == TailConvention::MaxDigit && period == [0] && !x.is_zero() {
            let mut digits = preperiod;
            while digits.last() == Some(&0) {
                digits.pop();
            }
            let last = digits
                .last_mut()
                .expect("nonzero point has a nonzero digit");
            *last -= 1;
            return Self::periodic(radix, digits, vec![radix.get() - 1]);
        }
        Self::periodic(radix, preperiod, period)
    }

    pub fn radix(&self) -> Radix {
        self.radix
    }

    /// Digit at 1-indexed position `n`.
    pub fn digit_at(&self, n: u64) -> u32 {
        debug_assert!(n >= 1);
        match &self.body {
            StreamBody::Periodic { preperiod, period } => {
                let pre = preperiod.len() as u64;
                if n <= pre {
                    preperiod[(n - 1) as usize]
                } else {
                    period[((n - pre - 1) % period.len() as u64) as usize]
                }
            }
            StreamBody::SparsePowers {
                base,
                on_digit,
                off_digit,
                first_power,
            } => {
                if is_power_position(n, *base, *first_power) {
                    *on_digit
                } else {
                    *off_digit
                }
            }
        }
    }

    /// Exact value of the first `n` digits, `sum_{k<=n} digit(k) r^-k`.
    pub fn prefix_value(&self, n: u64) -> Rational {
        let r = self.radix.to_bigint();
        let mut acc = BigInt::zero();
        for k in 1..=n {
            acc = acc * &r + BigInt::from(self.digit_at(k));
        }
        Rational::new(acc, self.radix.pow(n))
    }

    /// Exact value for eventually periodic streams; `None` for
    /// generator streams, whose value is irrational.
    pub fn value(&self) -> Option<Rational> {
        match &self.body {
            StreamBody::Periodic { preperiod, period } => {
                let r = self.radix.to_bigint();
                let horner = |digits: &[u32]| {
                    digits
                        .iter()
                        .fold(BigInt::zero(), |acc, &d| acc * &r + BigInt::from(d))
                };
                let pre_len = preperiod.len() as u64;
                let scale = self.radix.pow(pre_len);
                let pre_part = Rational::new(horner(preperiod), scale.clone());
                let cycle_den = self.radix.pow(period.len() as u64) - BigInt::one();
                let per_part = Rational::new(horner(period), cycle_den * scale);
                Some(pre_part + per_part)
            }
            StreamBody::SparsePowers { .. } => None,
        }
    }

    /// Exact enclosure `[prefix, prefix + r^-depth]` of the value.
    pub fn value_bounds(&self, depth: u64) -> (Rational, Rational) {
        let lo = self.prefix_value(depth);
        let hi = &lo + Rational::new(BigInt::one(), self.radix.pow(depth));
        (lo, hi)
    }

    /// Digit-tail classification.
    pub fn classify(&self) -> PointClass {
        match &self.body {
            StreamBody::Periodic { period, .. } => {
                if period == &[0] || period == &[self.radix.get() - 1] {
                    PointClass::RAdic
                } else if self.radix.middle_digit().map(|m| period == &[m]) == Some(true) {
                    PointClass::Midpoint
                } else {
                    PointClass::Generic
                }
            }
            // on != off after construction, so both digit values recur
            // forever and no constant tail is possible.
            StreamBody::SparsePowers { .. } => PointClass::Generic,
        }
    }

    /// The stream of `1 - x`: every digit complemented.
    pub fn reflect(&self) -> DigitStream {
        let top = self.radix.get() - 1;
        let body = match &self.body {
            StreamBody::Periodic { preperiod, period } => StreamBody::Periodic {
                preperiod: preperiod.iter().map(|&d| top - d).collect(),
                period: period.iter().map(|&d| top - d).collect(),
            },
            StreamBody::SparsePowers {
                base,
                on_digit,
                off_digit,
                first_power,
            } => StreamBody::SparsePowers {
                base: *base,
                on_digit: top - on_digit,
                off_digit: top - off_digit,
                first_power: *first_power,
            },
        };
        DigitStream {
            radix: self.radix,
            body,
        }
    }

    /// Smallest position `j > n` whose digit differs from the middle
    /// digit. For even radix this is always `n + 1`.
    pub fn next_non_middle(&self, n: u64) -> Result<u64> {
        let Some(mid) = self.radix.middle_digit() else {
            return Ok(n + 1);
        };
        match &self.body {
            StreamBody::Periodic { preperiod, period } => {
                // A full period beyond both n and the preperiod is
                // enough to see every period digit.
                let bound = n.max(preperiod.len() as u64) + period.len() as u64 + 1;
                for j in (n + 1)..=bound {
                    if self.digit_at(j) != mid {
                        return Ok(j);
                    }
                }
                Err(Error::MiddleDigitTail)
            }
            StreamBody::SparsePowers {
                base,
                on_digit,
                off_digit,
                first_power,
            } => {
                if *off_digit != mid {
                    if *on_digit != mid {
                        return Ok(n + 1);
                    }
                    // on == mid: skip power positions; at most the pair
                    // 1, 2 (base 2) is consecutive.
                    let mut j = n + 1;
                    while is_power_position(j, *base, *first_power) {
                        j += 1;
                    }
                    return Ok(j);
                }
                // off == mid, on != mid: jump to the next power of base.
                next_power_position(n, *base, *first_power)
                    .ok_or(Error::PositionOverflow { count: n })
            }
        }
    }

    /// `(base, on, off, first_power)` for generator streams.
    pub fn sparse_params(&self) -> Option<(u64, u32, u32, u32)> {
        match &self.body {
            StreamBody::SparsePowers {
                base,
                on_digit,
                off_digit,
                first_power,
            } => Some((*base, *on_digit, *off_digit, *first_power)),
            StreamBody::Periodic { .. } => None,
        }
    }

    /// `(preperiod length, period length)` for eventually periodic
    /// streams.
    pub fn periodic_shape(&self) -> Option<(u64, u64)> {
        match &self.body {
            StreamBody::Periodic { preperiod, period } => {
                Some((preperiod.len() as u64, period.len() as u64))
            }
            StreamBody::SparsePowers { .. } => None,
        }
    }

    /// Direction of the level-`n` piece at this point: the digit's sign
    /// when it is not the middle digit, otherwise the sign of the next
    /// non-middle digit.
    pub fn resolved_sign(&self, n: u64) -> Result<i8> {
        match self.radix.digit_sign(self.digit_at(n)) {
            Some(s) => Ok(s),
            None => {
                let k = self.next_non_middle(n)?;
                Ok(self
                    .radix
                    .digit_sign(self.digit_at(k))
                    .expect("digit at resolving position is not the middle digit"))
            }
        }
    }

    /// Canonical point-spec string; `parse` round-trips it exactly.
    pub fn spec_string(&self) -> String {
        match &self.body {
            StreamBody::Periodic { preperiod, period } => {
                let render = |digits: &[u32]| -> String {
                    if self.radix.get() <= 36 {
                        digits.iter().map(|&d| digit_char(d)).collect()
                    } else {
                        digits
                            .iter()
                            .map(|d| d.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    }
                };
                format!(
                    "0.{}({})_{}",
                    render(preperiod),
                    render(period),
                    self.radix.get()
                )
            }
            StreamBody::SparsePowers {
                base,
                on_digit,
                off_digit,
                first_power,
            } => {
                let mut s = format!("sparse:b={base},on={on_digit},off={off_digit}");
                if *first_power != 0 {
                    s.push_str(&format!(",k0={first_power}"));
                }
                s
            }
        }
    }

    /// Parses the point grammar: `p/q`, `0.<digits>(<period>)_r`, or
    /// `sparse:b=<int>,on=<digit>,off=<digit>[,k0=<int>]`.
    pub fn parse(spec: &str, radix: Radix) -> Result<Self> {
        let spec = spec.trim();
        let err = |reason: &str| Error::ParsePoint {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        if let Some(params) = spec.strip_prefix("sparse:") {
            let mut base = None;
            let mut on = None;
            let mut off = None;
            let mut first_power = 0u32;
            for part in params.split(',') {
                let (key, value) = part
                    .split_once('=')
                    .ok_or_else(|| err("expected key=value parameters"))?;
                match key.trim() {
                    "b" => base = Some(value.trim().parse::<u64>().map_err(|_| err("bad b"))?),
                    "on" => on = Some(value.trim().parse::<u32>().map_err(|_| err("bad on"))?),
                    "off" => off = Some(value.trim().parse::<u32>().map_err(|_| err("bad off"))?),
                    "k0" => first_power = value.trim().parse::<u32>().map_err(|_| err("bad k0"))?,
                    other => return Err(err(&format!("unknown parameter `{other}`"))),
                }
            }
            let base = base.ok_or_else(|| err("missing b="))?;
            let on = on.ok_or_else(|| err("missing on="))?;
            let off = off.ok_or_else(|| err("missing off="))?;
            return Self::sparse_powers(radix, base, on, off, first_power);
        }
        if let Some(body) = spec.strip_prefix("0.") {
            let open = body.find('(').ok_or_else(|| err("missing `(`"))?;
            let close = body.find(')').ok_or_else(|| err("missing `)`"))?;
            if close < open {
                return Err(err("`)` before `(`"));
            }
            let suffix = &body[close + 1..];
            let spec_radix: u32 = suffix
                .strip_prefix('_')
                .ok_or_else(|| err("missing `_radix` suffix"))?
                .parse()
                .map_err(|_| err("bad radix suffix"))?;
            if spec_radix != radix.get() {
                return Err(Error::RadixMismatch {
                    spec_radix,
                    radix: radix.get(),
                });
            }
            let pre = parse_digit_word(&body[..open], radix)
                .map_err(|reason| err(&format!("preperiod: {reason}")))?;
            let per = parse_digit_word(&body[open + 1..close], radix)
                .map_err(|reason| err(&format!("period: {reason}")))?;
            return Self::periodic(radix, pre, per);
        }
        let x = crate::rational::parse_rational(spec)?;
        Self::from_rational(&x, radix, TailConvention::Zeros)
    }
}

impl std::fmt::Display for DigitStream {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.spec_string())
    }
}

fn digit_char(d: u32) -> char {
    char::from_digit(d, 36).expect("digit below 36")
}

fn parse_digit_word(text: &str, radix: Radix) -> std::result::Result<Vec<u32>, String> {
    if text.is_empty() {
        return Ok(vec![]);
    }
    let digits: Vec<u32> = if text.contains(',') {
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("bad digit `{t}`"))
            })
            .collect::<std::result::Result<_, _>>()?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(36)
                    .ok_or_else(|| format!("bad digit character `{c}`"))
            })
            .collect::<std::result::Result<_, _>>()?
    };
    for &d in &digits {
        if d >= radix.get() {
            return Err(format!("digit {d} out of range for radix {}", radix.get()));
        }
    }
    Ok(digits)
}

/// Minimal period, then minimal preperiod.
fn canonicalize(mut preperiod: Vec<u32>, mut period: Vec<u32>) -> (Vec<u32>, Vec<u32>) {
    let len = period.len();
    for d in 1..=len {
        if !len.is_multiple_of(d) {
            continue;
        }
        if period.chunks(d).all(|chunk| chunk == &period[..d]) {
            period.truncate(d);
            break;
        }
    }
    while preperiod.last() == period.last() {
        preperiod.pop();
        period.rotate_right(1);
    }
    (preperiod, period)
}

fn is_power_position(n: u64, base: u64, first_power: u32) -> bool {
    let mut p: u64 = match base.checked_pow(first_power) {
        Some(p) => p,
        None => return false,
    };
    while p < n {
        p = match p.checked_mul(base) {
            Some(p) => p,
            None => return false,
        };
    }
    p == n
}

/// Smallest power position strictly greater than `n`.
fn next_power_position(n: u64, base: u64, first_power: u32) -> Option<u64> {
    let mut p: u64 = base.checked_pow(first_power)?;
    while p <= n {
        p = p.checked_mul(base)?;
    }
    Some(p)
}

/// Preperiod and period lengths of base-`r` expansions with reduced
/// denominator `q`.
///
/// Writing `q = c * q'` with `q'` coprime to `r`, the preperiod length
/// is the smallest `mu` with `c | r^mu` and the period length is the
/// multiplicative order of `r` modulo `q'` (taken as 1 when `q' = 1`).
/// These are also the preperiod and cycle lengths of the orbit of
/// `r^k x mod 1`.
pub(crate) fn cycle_structure(q: &BigUint, radix: Radix) -> Result<(u64, u64)> {
    let r_big = BigUint::from(radix.get());
    let mut coprime = q.clone();
    loop {
        let g = coprime.gcd(&r_big);
        if g.is_one() {
            break;
        }
        coprime /= g;
    }
    let mut mu: u64 = 0;
    let mut shared = q / &coprime;
    while !shared.is_one() {
        shared /= shared.gcd(&r_big);
        mu += 1;
    }
    let lambda: u64 = if coprime.is_one() {
        1
    } else {
        match coprime.to_u64() {
            Some(c64) if c64 <= u64::MAX / radix.get() as u64 => {
                let mut t = radix.get() as u64 % c64;
                let mut ord: u64 = 1;
                while t != 1 {
                    t = t * radix.get() as u64 % c64;
                    ord += 1;
                    if ord > CYCLE_CAP {
                        return Err(Error::CycleCapExceeded { cap: CYCLE_CAP });
                    }
                }
                ord
            }
            _ => big_order(&coprime, &r_big)?,
        }
    };
    Ok((mu, lambda))
}

fn big_order(modulus: &BigUint, r: &BigUint) -> Result<u64> {
    let mut t = r % modulus;
    let mut ord: u64 = 1;
    while !t.is_one() {
        t = t * r % modulus;
        ord += 1;
        if ord > CYCLE_CAP {
            return Err(Error::CycleCapExceeded { cap: CYCLE_CAP });
        }
    }
    Ok(ord)
}

/// Preperiod and period digits of `x` in base `r`, both minimal.
/// The digits themselves come from ordinary long division.
fn expand_digits(x: &Rational, radix: Radix) -> Result<(Vec<u32>, Vec<u32>)> {
    let r_big = BigUint::from(radix.get());
    let p = x.numer().magnitude().clone();
    let q = x.denom().magnitude().clone();
    let (mu, lambda) = cycle_structure(&q, radix)?;
    let total = mu + lambda;
    let mut digits: Vec<u32> = Vec::with_capacity(total as usize);
    // Long division; u64 states when they fit, big integers otherwise.
    let r64 = radix.get() as u64;
    match (p.to_u64(), q.to_u64()) {
        (Some(p64), Some(q64)) if q64 <= u64::MAX / r64 => {
            let mut s = p64;
            for _ in 0..total {
                let t = s * r64;
                digits.push((t / q64) as u32);
                s = t % q64;
            }
        }
        _ => {
            let mut s = p;
            for _ in 0..total {
                let t = s * &r_big;
                let (d, rem) = t.div_rem(&q);
                digits.push(d.to_u32().expect("digit below radix"));
                s = rem;
            }
        }
    }
    let period = digits.split_off(mu as usize);
    Ok((digits, period))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio_u64;
    use num_traits::Zero;

    fn radix(r: u32) -> Radix {
        Radix::new(r).unwrap()
    }

    fn digits_of(p: u64, q: u64, r: u32) -> DigitStream {
        DigitStream::from_rational(&ratio_u64(p, q), radix(r), TailConvention::Zeros).unwrap()
    }

    #[test]
    fn expansion_of_one_third() {
        let s = digits_of(1, 3, 3);
        assert_eq!(
            s,
            DigitStream::periodic(radix(3), vec![1], vec![0]).unwrap()
        );

        let s = digits_of(1, 3, 2);
        assert_eq!(
            s,
            DigitStream::periodic(radix(2), vec![], vec![0, 1]).unwrap()
        );
    }

    #[test]
    fn expansion_of_one_half_base_three() {
        let s = digits_of(1, 2, 3);
        assert_eq!(s, DigitStream::periodic(radix(3), vec![], vec![1]).unwrap());
        assert_eq!(s.classify(), PointClass::Midpoint);
    }

    #[test]
    fn digit_positions() {
        let s = digits_of(1, 3, 2);
        assert_eq!(s.digit_at(4), 1);
        assert_eq!(s.digit_at(3), 0);

        let sparse = DigitStream::sparse_powers(radix(3), 10, 0, 1, 0).unwrap();
        assert_eq!(sparse.digit_at(100), 0);
        assert_eq!(sparse.digit_at(99), 1);
        assert_eq!(sparse.digit_at(1), 0);
        assert_eq!(sparse.digit_at(10), 0);
    }

    #[test]
    fn prefix_values() {
        let s = digits_of(1, 3, 2);
        assert_eq!(s.prefix_value(0), Rational::zero());
        assert_eq!(s.prefix_value(3), ratio_u64(1, 4));
        let s = digits_of(1, 2, 3);
        assert_eq!(s.prefix_value(2), ratio_u64(4, 9));
    }

    #[test]
    fn classification() {
        assert_eq!(digits_of(1, 2, 3).classify(), PointClass::Midpoint);
        assert_eq!(digits_of(1, 3, 3).classify(), PointClass::RAdic);
        assert_eq!(digits_of(1, 3, 2).classify(), PointClass::Generic);
        assert_eq!(digits_of(1, 2, 2).classify(), PointClass::RAdic);
        let sparse = DigitStream::sparse_powers(radix(3), 10, 0, 1, 0).unwrap();
        assert_eq!(sparse.classify(), PointClass::Generic);
        // Degenerate generator collapses to a constant stream.
        let constant = DigitStream::sparse_powers(radix(3), 10, 1, 1, 0).unwrap();
        assert_eq!(constant.classify(), PointClass::Midpoint);
    }

    #[test]
    fn canonical_form_is_minimal() {
        let a = DigitStream::periodic(radix(2), vec![0, 1], vec![0, 1, 0, 1]).unwrap();
        let b = DigitStream::periodic(radix(2), vec![], vec![0, 1]).unwrap();
        assert_eq!(a, b);
        let c = DigitStream::periodic(radix(3), vec![1], vec![2]).unwrap();
        let d = DigitStream::periodic(radix(3), vec![1, 2, 2], vec![2, 2]).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn max_digit_tail() {
        let x = ratio_u64(1, 2);
        let s = DigitStream::from_rational(&x, radix(2), TailConvention::MaxDigit).unwrap();
        assert_eq!(
            s,
            DigitStream::periodic(radix(2), vec![0], vec![1]).unwrap()
        );
        assert_eq!(s.value().unwrap(), x);

        let quarter = ratio_u64(1, 4);
        let s = DigitStream::from_rational(&quarter, radix(2), TailConvention::MaxDigit).unwrap();
        assert_eq!(s.value().unwrap(), quarter);
        assert_eq!(s.digit_at(3), 1);
        assert_eq!(s.digit_at(2), 0);

        // No alternative representation exists for 0 or non-terminating points.
        let zero =
            DigitStream::from_rational(&Rational::zero(), radix(2), TailConvention::MaxDigit)
                .unwrap();
        assert_eq!(zero, digits_of(0, 1, 2));
        let third =
            DigitStream::from_rational(&ratio_u64(1, 3), radix(2), TailConvention::MaxDigit)
                .unwrap();
        assert_eq!(third, digits_of(1, 3, 2));
    }

    #[test]
    fn endpoint_expansions() {
        let one = digits_of(1, 1, 3);
        assert_eq!(
            one,
            DigitStream::periodic(radix(3), vec![], vec![2]).unwrap()
        );
        assert_eq!(one.value().unwrap(), ratio_u64(1, 1));
        let zero = digits_of(0, 1, 3);
        assert_eq!(zero.value().unwrap(), Rational::zero());
    }

    #[test]
    fn value_round_trip() {
        for (p, q) in [(1u64, 7u64), (3, 8), (5, 6), (22, 23), (1, 1), (0, 1)] {
            for r in [2u32, 3, 5, 10] {
                let x = ratio_u64(p, q);
                let s = DigitStream::from_rational(&x, radix(r), TailConvention::Zeros).unwrap();
                assert_eq!(s.value().unwrap(), x, "{p}/{q} base {r}");
            }
        }
    }

    #[test]
    fn next_non_middle_positions() {
        let s = DigitStream::periodic(radix(3), vec![1, 1], vec![1, 2]).unwrap();
        assert_eq!(s.next_non_middle(0).unwrap(), 4);
        assert_eq!(s.next_non_middle(4).unwrap(), 6);

        let sparse = DigitStream::sparse_powers(radix(3), 10, 0, 1, 0).unwrap();
        // off digit is the middle digit, so the next non-middle
        // position is the next power of ten.
        assert_eq!(sparse.next_non_middle(1).unwrap(), 10);
        assert_eq!(sparse.next_non_middle(10).unwrap(), 100);
        assert_eq!(sparse.next_non_middle(1001).unwrap(), 10000);

        let mid_tail = DigitStream::periodic(radix(3), vec![0], vec![1]).unwrap();
        assert!(matches!(
            mid_tail.next_non_middle(5),
            Err(Error::MiddleDigitTail)
        ));

        // Even radix: always the next position.
        let s = digits_of(1, 3, 2);
        assert_eq!(s.next_non_middle(7).unwrap(), 8);
    }

    #[test]
    fn reflection_complements_digits() {
        let s = digits_of(1, 3, 2);
        let refl = s.reflect();
        assert_eq!(refl.value().unwrap(), ratio_u64(2, 3));
        for n in 1..=20 {
            assert_eq!(refl.digit_at(n), 1 - s.digit_at(n));
        }
    }

    #[test]
    fn grammar_round_trip() {
        let r3 = radix(3);
        for spec in [
            "0.1(0)_3",
            "0.(01)_3",
            "0.(1)_3",
            "sparse:b=10,on=0,off=1",
            "sparse:b=2,on=2,off=0,k0=1",
        ] {
            let s = DigitStream::parse(spec, r3).unwrap();
            assert_eq!(s.spec_string(), spec);
            assert_eq!(DigitStream::parse(&s.spec_string(), r3).unwrap(), s);
        }
        // Rational specs normalize to digit form but parse back equal.
        let s = DigitStream::parse("2/6", radix(2)).unwrap();
        assert_eq!(DigitStream::parse(&s.spec_string(), radix(2)).unwrap(), s);
        assert_eq!(s.spec_string(), "0.(01)_2");
    }

    #[test]
    fn grammar_rejects_bad_input() {
        let r3 = radix(3);
        assert!(DigitStream::parse("0.12_3", r3).is_err());
        assert!(DigitStream::parse("0.1(3)_3", r3).is_err());
        assert!(DigitStream::parse("0.1(0)_4", r3).is_err());
        assert!(DigitStream::parse("sparse:b=1,on=0,off=1", r3).is_err());
        assert!(DigitStream::parse("sparse:on=0,off=1", r3).is_err());
        assert!(DigitStream::parse("3/2", r3).is_err());
        assert!(DigitStream::parse("-1/2", r3).is_err());
    }

    #[test]
    fn digit_formula_agreement() {
        // digit(n) = floor(r^n x) - r floor(r^(n-1) x) away from D.
        use num_traits::ToPrimitive;
        for (p, q) in [(1u64, 7u64), (2, 5), (13, 29)] {
            for r in [2u32, 3, 10] {
                let x = ratio_u64(p, q);
                let s = DigitStream::from_rational(&x, radix(r), TailConvention::Zeros).unwrap();
                for n in 1..=64u64 {
                    let hi = (Rational::from_integer(radix(r).pow(n)) * &x)
                        .floor()
                        .to_integer();
                    let lo = (Rational::from_integer(radix(r).pow(n - 1)) * &x)
                        .floor()
                        .to_integer();
                    let expect = (hi - BigInt::from(r) * lo).to_u32().unwrap();
                    assert_eq!(s.digit_at(n), expect);
                }
            }
        }
    }
}
