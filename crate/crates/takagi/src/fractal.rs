//! Self-similar sets of points with an infinite derivative, and
//! statistical evidence that the sign sums are null-recurrent.
//!
//! For odd word length `n`, the digit words whose resolved sign drift
//! is at least `+1` (or at most `-1`) and whose last digit is not the
//! middle one form the alphabet of an iterated function system of
//! similarity ratio `r^-n`. Points whose every length-`n` digit block
//! lies in the alphabet have both one-sided derivatives infinite, and
//! the box-counting dimension of the depth-`K` interval approximations
//! is `log(#alphabet) / (n log r)`, which tends to one.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;

use crate::digits::DigitStream;
use crate::error::{Error, Result};
use crate::radix::Radix;
use crate::rational::Rational;
use crate::rng::SplitMix64;
use crate::INTERVAL_CAP;

/// Which infinity the drift condition targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DriftSign {
    Plus,
    Minus,
}

/// The IFS alphabet: length-`level` digit words stored as base-`r`
/// numerators, sorted ascending.
#[derive(Debug, Clone)]
pub struct WordSet {
    pub level: u64,
    pub radix: Radix,
    pub sign: DriftSign,
    words: Vec<u64>,
}

impl WordSet {
    pub fn count(&self) -> u64 {
        self.words.len() as u64
    }

    pub fn numerators(&self) -> &[u64] {
        &self.words
    }

    pub fn contains(&self, numerator: u64) -> bool {
        self.words.binary_search(&numerator).is_ok()
    }

    /// Digits of a word, most significant first.
    pub fn word_digits(&self, numerator: u64) -> Vec<u32> {
        decode_word(numerator, self.level, self.radix)
    }

    /// The word value `numerator / r^level`.
    pub fn word_value(&self, numerator: u64) -> Rational {
        Rational::new(BigInt::from(numerator), self.radix.pow(self.level))
    }
}

fn decode_word(numerator: u64, level: u64, radix: Radix) -> Vec<u32> {
    let r = radix.get() as u64;
    let mut digits = vec![0u32; level as usize];
    let mut k = numerator;
    for slot in digits.iter_mut().rev() {
        *slot = (k % r) as u32;
        k /= r;
    }
    digits
}

/// Resolved sign drift of a finite word: low digits count `+1`, high
/// digits `-1`, middle digits take the sign of the next non-middle
/// digit in the word. The last digit must not be the middle one, so
/// every run resolves inside the word.
fn word_drift(digits: &[u32], radix: Radix) -> i64 {
    let mut drift = 0i64;
    let mut carry = 0i8;
    for &d in digits.iter().rev() {
        if let Some(sig) = radix.digit_sign(d) {
            carry = sig;
        }
        drift += carry as i64;
    }
    drift
}

/// Exhaustive enumeration of the IFS alphabet for odd `level >= 3`.
///
/// Plus words: positive value, last digit non-middle, drift `>= 1`.
/// Minus words are the mirror image; the complement of the all-zero
/// word (value `1 - r^-level`) is excluded so that reflection is a
/// bijection between the two alphabets.
pub fn enumerate_words(level: u64, radix: Radix, sign: DriftSign) -> Result<WordSet> {
    if level < 3 || level.is_multiple_of(2) {
        return Err(Error::WordLengthInvalid(level));
    }
    let r = radix.get() as u64;
    let space = u32::try_from(level)
        .ok()
        .and_then(|exp| r.checked_pow(exp))
        .ok_or(Error::WordSpaceTooLarge {
            radix: radix.get(),
            level,
        })?;
    let top = space - 1;
    let words: Vec<u64> = (1..space)
        .filter(|&k| {
            if sign == DriftSign::Minus && k == top {
                return false;
            }
            let digits = decode_word(k, level, radix);
            if radix.is_middle(*digits.last().expect("level >= 3")) {
                return false;
            }
            let drift = word_drift(&digits, radix);
            match sign {
                DriftSign::Plus => drift >= 1,
                DriftSign::Minus => drift <= -1,
            }
        })
        .collect();
    Ok(WordSet {
        level,
        radix,
        sign,
        words,
    })
}

/// A finite union of closed intervals with rational endpoints, sorted
/// and pairwise disjoint.
#[derive(Debug, Clone)]
pub struct IntervalSet {
    pub level: u64,
    pub radix: Radix,
    pub depth: u32,
    intervals: Vec<(Rational, Rational)>,
}

impl IntervalSet {
    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn count(&self) -> u64 {
        self.intervals.len() as u64
    }

    /// Common length `r^-(level * depth)` of every interval.
    pub fn piece_length(&self) -> Rational {
        Rational::new(
            BigInt::one(),
            self.radix.pow(self.level * self.depth as u64),
        )
    }
}

/// Depth-`K` iteration of the IFS `x -> word + x / r^level` starting
/// from `[0, 1]`: exactly `count^K` intervals of length `r^-(level K)`.
pub fn ifs_approximation(
    level: u64,
    radix: Radix,
    sign: DriftSign,
    depth: u32,
) -> Result<IntervalSet> {
    let words = enumerate_words(level, radix, sign)?;
    ifs_from_words(&words, depth)
}

/// Same iteration from a precomputed alphabet.
pub fn ifs_from_words(words: &WordSet, depth: u32) -> Result<IntervalSet> {
    let total = (words.count() as u128)
        .checked_pow(depth)
        .ok_or(Error::IntervalCapExceeded {
            count: u128::MAX,
            cap: INTERVAL_CAP,
        })?;
    if total > INTERVAL_CAP as u128 {
        return Err(Error::IntervalCapExceeded {
            count: total,
            cap: INTERVAL_CAP,
        });
    }
    let scale = Rational::new(BigInt::one(), words.radix.pow(words.level));
    let mut lowers: Vec<Rational> = vec![Rational::zero()];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(lowers.len() * words.words.len());
        // Word-major order keeps the endpoints sorted: children stay
        // inside their parent's cell.
        for &w in &words.words {
            let base = words.word_value(w);
            for lo in &lowers {
                next.push(&base + lo * &scale);
            }
        }
        lowers = next;
    }
    let length = Rational::new(BigInt::one(), words.radix.pow(words.level * depth as u64));
    let intervals = lowers
        .into_iter()
        .map(|lo| {
            let hi = &lo + &length;
            (lo, hi)
        })
        .collect();
    Ok(IntervalSet {
        level: words.level,
        radix: words.radix,
        depth,
        intervals,
    })
}

/// Exact similarity dimension and the word-count lower bound it beats.
#[derive(Debug, Clone, Serialize)]
pub struct DimensionBounds {
    pub count: u64,
    /// `log(count) / (level * log r)`.
    pub exact_ratio: f64,
    /// Closed-form lower bound: `((n-1) log r - 1) / (n log r)` for odd
    /// radix, `1 - (2 + log 2) / (n log r)` for even radix.
    pub lemma_bound: f64,
}

pub fn dimension_bounds(level: u64, radix: Radix, sign: DriftSign) -> Result<DimensionBounds> {
    let count = enumerate_words(level, radix, sign)?.count();
    let n = level as f64;
    let log_r = (radix.get() as f64).ln();
    let exact_ratio = (count as f64).ln() / (n * log_r);
    let lemma_bound = if radix.is_odd() {
        ((n - 1.0) * log_r - 1.0) / (n * log_r)
    } else {
        1.0 - (2.0 + 2f64.ln()) / (n * log_r)
    };
    Ok(DimensionBounds {
        count,
        exact_ratio,
        lemma_bound,
    })
}

/// Box counts per grid exponent: grids of size `r^-m` may not be finer
/// than the intervals themselves.
pub fn grid_box_counts(set: &IntervalSet, exponents: &[u32]) -> Result<Vec<(u32, u64)>> {
    if set.intervals.is_empty() {
        return Err(Error::EmptyIntervalSet);
    }
    let max_exponent = set.level * set.depth as u64;
    exponents
        .iter()
        .map(|&m| {
            if m as u64 > max_exponent {
                return Err(Error::GridTooFine { exponent: m });
            }
            Ok((m, box_count(set, m)))
        })
        .collect()
}

/// Least-squares slope of `log(box count)` against `log(1/box size)`
/// over grids of size `r^-m` for each exponent `m`.
pub fn box_counting_slope(set: &IntervalSet, exponents: &[u32]) -> Result<f64> {
    if exponents.len() < 2 {
        return Err(Error::NotEnoughGridExponents);
    }
    let counts = grid_box_counts(set, exponents)?;
    let log_r = (set.radix.get() as f64).ln();
    let points: Vec<(f64, f64)> = counts
        .iter()
        .map(|&(m, count)| (m as f64 * log_r, (count as f64).ln()))
        .collect();
    Ok(least_squares_slope(&points))
}

/// Number of grid boxes `[j r^-m, (j+1) r^-m]` whose interior meets
/// the set. Endpoint-only touches do not count, so a grid aligned with
/// the interval endpoints reports exactly the self-similar counts.
fn box_count(set: &IntervalSet, m: u32) -> u64 {
    let scale = Rational::from_integer(set.radix.pow(m as u64));
    let mut boxes: BTreeSet<BigInt> = BTreeSet::new();
    for (lo, hi) in &set.intervals {
        let t_lo = lo * &scale;
        let t_hi = hi * &scale;
        // Boxes j with t_lo - 1 < j < t_hi.
        let j_min = if t_lo.is_integer() {
            t_lo.to_integer()
        } else {
            t_lo.floor().to_integer()
        };
        let j_max = if t_hi.is_integer() {
            t_hi.to_integer() - BigInt::one()
        } else {
            t_hi.floor().to_integer()
        };
        let mut j = j_min;
        while j <= j_max {
            boxes.insert(j.clone());
            j += 1;
        }
    }
    boxes.len() as u64
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let var: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    cov / var
}

/// The eventually periodic stream whose length-`level` digit blocks
/// cycle through `address`. Every block contributes drift of the
/// alphabet's sign, so the certified verdict matches the alphabet.
pub fn witness_stream(
    level: u64,
    radix: Radix,
    sign: DriftSign,
    address: &[Vec<u32>],
) -> Result<DigitStream> {
    let words = enumerate_words(level, radix, sign)?;
    let mut period = Vec::with_capacity(address.len() * level as usize);
    for word in address {
        if word.len() != level as usize {
            return Err(Error::AddressLetterInvalid {
                letter: format!("{word:?}"),
            });
        }
        let mut numerator = 0u64;
        for &d in word {
            radix.check_digit(d)?;
            numerator = numerator * radix.get() as u64 + d as u64;
        }
        if !words.contains(numerator) {
            return Err(Error::AddressLetterInvalid {
                letter: format!("{word:?}"),
            });
        }
        period.extend_from_slice(word);
    }
    if period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    DigitStream::periodic(radix, vec![], period)
}

/// Sampling configuration for the sign-sum statistics.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SampleConfig {
    pub radix: u32,
    /// Number of leading digits whose signs are summed.
    pub digits: u64,
    pub samples: u64,
    pub seed: u64,
}

/// Empirical statistics of `S_N` over uniform random digit words.
#[derive(Debug, Clone, Serialize)]
pub struct SignSumStats {
    pub config: SampleConfig,
    pub mean: f64,
    pub variance: f64,
    /// Fractions of samples with `|S_N| > c sqrt(N)` for `c = 2, 3, 4`.
    pub tail_fractions: Vec<TailFraction>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TailFraction {
    pub multiple: u32,
    pub fraction: f64,
}

/// Draws `samples` uniform digit words of length `digits` and sums the
/// resolved signs of each.
///
/// Sample `i` uses a SplitMix64 generator seeded with `seed xor i`, so
/// the result is independent of evaluation order and thread count.
/// Trailing middle-digit runs are resolved by drawing further uniform
/// digits until a non-middle digit appears, which samples the exact
/// sign law of a uniform point.
pub fn sample_sign_sums(radix: Radix, config: SampleConfig) -> Result<SignSumStats> {
    if config.samples == 0 {
        return Err(Error::NoSamples);
    }
    let n = config.digits;
    let (sum, sum_sq, tails) = (0..config.samples)
        .into_par_iter()
        .map(|i| {
            let s = one_sign_sum(radix, n, config.seed ^ i);
            let s_sq = (s as i128) * (s as i128);
            let mut tails = [0u64; 3];
            for (slot, c) in tails.iter_mut().zip([2i128, 3, 4]) {
                // |S| > c sqrt(N) iff S^2 > c^2 N, all integers.
                if s_sq > c * c * n as i128 {
                    *slot = 1;
                }
            }
            (s as i128, s_sq, tails)
        })
        .reduce(
            || (0i128, 0i128, [0u64; 3]),
            |a, b| {
                (
                    a.0 + b.0,
                    a.1 + b.1,
                    [a.2[0] + b.2[0], a.2[1] + b.2[1], a.2[2] + b.2[2]],
                )
            },
        );
    let samples = config.samples as f64;
    let mean = sum as f64 / samples;
    let variance = sum_sq as f64 / samples - mean * mean;
    let tail_fractions = tails
        .iter()
        .zip([2u32, 3, 4])
        .map(|(&count, multiple)| TailFraction {
            multiple,
            fraction: count as f64 / samples,
        })
        .collect();
    Ok(SignSumStats {
        config,
        mean,
        variance,
        tail_fractions,
    })
}

fn one_sign_sum(radix: Radix, digits: u64, seed: u64) -> i64 {
    let r = radix.get() as u64;
    let mut rng = SplitMix64::new(seed);
    let mut sum = 0i64;
    let mut pending = 0i64;
    for _ in 0..digits {
        let d = rng.next_below(r) as u32;
        match radix.digit_sign(d) {
            Some(sig) => {
                sum += (pending + 1) * sig as i64;
                pending = 0;
            }
            None => pending += 1,
        }
    }
    while pending > 0 {
        let d = rng.next_below(r) as u32;
        if let Some(sig) = radix.digit_sign(d) {
            sum += pending * sig as i64;
            pending = 0;
        }
    }
    sum
}
