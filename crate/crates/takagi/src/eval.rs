//! Exact and tail-bounded evaluation of the Takagi–Van der Waerden
//! function `f_r(x) = sum_{n>=0} r^-n phi(r^n x)`, where `phi` is the
//! distance to the nearest integer.
//!
//! For rational `x` the orbit of `r^n x mod 1` is eventually periodic,
//! so the series splits into a finite preperiod sum plus a geometric
//! closed form over one cycle and evaluates exactly. Everything else is
//! enclosed by partial sums with an explicit tail bound.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::digits::{cycle_structure, DigitStream, PointClass};
use crate::error::{Error, Result};
use crate::radix::Radix;
use crate::rational::{check_unit_interval, fract, RatioRepr, Rational};

/// A closed interval with rational endpoints certified to contain a
/// value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Enclosure { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Enclosure {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn repr(&self) -> EnclosureRepr {
        EnclosureRepr {
            lo: RatioRepr::of(&self.lo),
            hi: RatioRepr::of(&self.hi),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EnclosureRepr {
    pub lo: RatioRepr,
    pub hi: RatioRepr,
}

/// Distance from `x` to the nearest integer.
pub fn dist_to_integers(x: &Rational) -> Rational {
    let f = fract(x);
    let complement = Rational::one() - &f;
    f.min(complement)
}

/// Distance from `x` to the level-`n` grid `{k r^-(n-1)}`, the `n`-th
/// summand of the series.
pub fn grid_distance(x: &Rational, n: u64, radix: Radix) -> Result<Rational> {
    check_unit_interval(x)?;
    debug_assert!(n >= 1);
    let scale = Rational::new(BigInt::one(), radix.pow(n - 1));
    Ok(&scale * dist_to_integers(&(x / &scale)))
}

/// Tail bound for truncation after `terms` summands: every piece is at
/// most `r^(1-n)/2`, so the tail is at most
/// `(1/2) sum_{n>terms} r^(1-n) = r^(1-terms) / (2(r-1))`.
pub fn tail_bound(radix: Radix, terms: u64) -> Rational {
    Rational::new(
        BigInt::one(),
        BigInt::from(2 * (radix.get() - 1)) * radix.pow(terms - 1),
    )
}

/// Exact value of `f_r` at a rational point of `[0, 1]`.
///
/// Splits the series at the orbit cycle of `r^n x mod 1`:
/// `f = sum over the preperiod + (cycle sum) * r^lambda / (r^lambda - 1)`
/// scaled into place, everything exact. `phi(r^n x) = min(s, q-s)/q`
/// where `s` is the numerator of `r^n x mod 1` over the fixed
/// denominator `q`.
pub fn eval_exact(x: &Rational, radix: Radix) -> Result<Rational> {
    check_unit_interval(x)?;
    let q = x.denom().magnitude().clone();
    let (mu, lambda) = cycle_structure(&q, radix)?;
    let r64 = radix.get() as u64;
    match (x.numer().magnitude().to_u64(), q.to_u64()) {
        (Some(p64), Some(q64)) if q64 <= u64::MAX / r64 => {
            let r_int = radix.to_bigint();
            let mut s = p64 % q64;
            let mut fold_pre = BigInt::zero();
            let mut fold_cycle = BigInt::zero();
            for n in 0..(mu + lambda) {
                let m = s.min(q64 - s);
                if n < mu {
                    fold_pre = fold_pre * &r_int + BigInt::from(m);
                } else {
                    fold_cycle = fold_cycle * &r_int + BigInt::from(m);
                }
                s = s * r64 % q64;
            }
            Ok(assemble(
                fold_pre,
                fold_cycle,
                BigInt::from(q),
                mu,
                lambda,
                radix,
            ))
        }
        _ => eval_exact_big(x, radix, mu, lambda),
    }
}

fn assemble(
    fold_pre: BigInt,
    fold_cycle: BigInt,
    q_int: BigInt,
    mu: u64,
    lambda: u64,
    radix: Radix,
) -> Rational {
    let pre_sum = if mu == 0 {
        Rational::zero()
    } else {
        Rational::new(fold_pre, &q_int * radix.pow(mu - 1))
    };
    let r_lambda = radix.pow(lambda);
    let cycle_sum = Rational::new(
        fold_cycle * &r_lambda,
        q_int * radix.pow(lambda - 1) * radix.pow(mu) * (r_lambda - BigInt::one()),
    );
    pre_sum + cycle_sum
}

/// Fallback for states that do not fit in 64 bits.
fn eval_exact_big(x: &Rational, radix: Radix, mu: u64, lambda: u64) -> Result<Rational> {
    let q = x.denom().magnitude().clone();
    let r_big = BigUint::from(radix.get());
    let r_int = radix.to_bigint();
    let mut s = x.numer().magnitude() % &q;
    let mut fold_pre = BigInt::zero();
    let mut fold_cycle = BigInt::zero();
    for n in 0..(mu + lambda) {
        let m = BigInt::from((&q - &s).min(s.clone()));
        if n < mu {
            fold_pre = fold_pre * &r_int + m;
        } else {
            fold_cycle = fold_cycle * &r_int + m;
        }
        s = s * &r_big % &q;
    }
    Ok(assemble(
        fold_pre,
        fold_cycle,
        BigInt::from(q),
        mu,
        lambda,
        radix,
    ))
}

/// Partial sum `S_N` of the first `terms` pieces with the symmetric
/// tail enclosure `[S_N - t, S_N + t]`, `t = tail_bound`.
pub fn eval_partial(x: &Rational, radix: Radix, terms: u64) -> Result<Enclosure> {
    check_unit_interval(x)?;
    debug_assert!(terms >= 1);
    let s = partial_sum(x, radix, terms);
    let t = tail_bound(radix, terms);
    Ok(Enclosure::new(&s - &t, s + t))
}

/// `S_N = sum_{n<=terms} g_n(x)`, exact.
pub fn partial_sum(x: &Rational, radix: Radix, terms: u64) -> Rational {
    let r_big = radix.to_bigint();
    let q = BigInt::from(x.denom().magnitude().clone());
    let mut s = x.numer() % &q;
    let mut acc = BigInt::zero();
    for _ in 0..terms {
        let m = (&q - &s).min(s.clone());
        acc = acc * &r_big + m;
        s = s * &r_big % &q;
    }
    Rational::new(acc, q * radix.pow(terms - 1))
}

/// Tail-bounded evaluation at a stream point. Eventually periodic
/// streams use their exact value; generator streams are handled through
/// a deep rational prefix, which widens the enclosure by
/// `2 * terms * r^-(terms+64)`.
pub fn eval_stream(s: &DigitStream, terms: u64) -> Result<Enclosure> {
    let radix = s.radix();
    if let Some(x) = s.value() {
        return eval_partial(&x, radix, terms);
    }
    let prefix_depth = terms + 64;
    let x_lo = s.prefix_value(prefix_depth);
    let sum = partial_sum(&x_lo, radix, terms);
    let slop = Rational::new(BigInt::from(terms), radix.pow(prefix_depth));
    let t = tail_bound(radix, terms) + slop;
    Ok(Enclosure::new(&sum - &t, sum + t))
}

/// Exact value of the companion series `sum_n dist(x, midpoint grid n)`.
///
/// Each midpoint distance is `r^(1-n)/2 - g_n(x)`, so the series equals
/// `r/(2(r-1)) - f_r(x)` exactly.
pub fn midpoint_series(x: &Rational, radix: Radix) -> Result<Rational> {
    let total = Rational::new(
        radix.to_bigint(),
        BigInt::from(2 * (radix.get() as u64 - 1)),
    );
    Ok(total - eval_exact(x, radix)?)
}

/// Smallest point of `D_n union midpoint grid n` strictly greater than
/// `x`; both grids together form the `1/(2 r^(n-1))` lattice.
pub fn next_grid_point_above(x: &Rational, n: u64, radix: Radix) -> Rational {
    let m = BigInt::from(2) * radix.pow(n - 1);
    let k = (x * Rational::from_integer(m.clone())).floor().to_integer();
    Rational::new(k + BigInt::one(), m)
}

/// Distance from the stream's point to the next strictly greater point
/// of the level-`n` grid union. This is the step ladder of the
/// difference-quotient analysis.
pub fn next_grid_step(s: &DigitStream, n: u64) -> Result<Rational> {
    if s.classify() != PointClass::Generic {
        return Err(Error::PointNotGeneric {
            op: "next_grid_step",
        });
    }
    let x = s.value().ok_or(Error::NeedsRationalValue {
        op: "next_grid_step",
    })?;
    Ok(next_grid_point_above(&x, n, s.radix()) - x)
}

/// Grid target computed from the digits alone: the candidate only
/// depends on the first `n` digits plus the lookahead that settles
/// which side of the level-`n` midpoint the point falls on.
pub fn next_grid_point_above_stream(s: &DigitStream, n: u64) -> Result<Rational> {
    let radix = s.radix();
    let cell = s.prefix_value(n - 1);
    let spacing = Rational::new(BigInt::one(), radix.pow(n - 1));
    let half = Rational::new(BigInt::one(), BigInt::from(2) * radix.pow(n - 1));
    match s.resolved_sign(n)? {
        1 => Ok(cell + half),
        _ => Ok(cell + spacing),
    }
}
