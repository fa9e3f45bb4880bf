//! Digit-level classification of one-sided infinite derivatives.
//!
//! At a generic point every piece `g_n` is differentiable with slope
//! `+1` or `-1`, read off the digits: below the middle digit means
//! `+1`, above means `-1`, and the middle digit defers to the next
//! non-middle one. The partial sums of these signs, sampled along three
//! index sequences (digits that are non-middle, nonzero, or non-max)
//! and corrected by a gap and a logarithm term, characterize exactly
//! where each one-sided derivative is `+inf` or `-inf`.
//!
//! Eventually periodic points are decided outright: anchor gaps are
//! bounded by one period, so each criterion diverges if and only if the
//! per-period sign drift has the matching sign. Generator points get a
//! reproducible trend verdict from finitely many criterion terms.

use serde::Serialize;

use crate::digits::{DigitStream, PointClass};
use crate::error::{Error, Result};
use crate::eval::{eval_exact, next_grid_point_above, Enclosure};
use crate::rational::Rational;
use crate::{TailConvention, HORIZON_CAP};

/// Signs of the pieces at a generic point, with their partial sums and
/// the counts of digits below/above the middle value.
#[derive(Debug, Clone, Serialize)]
pub struct DerivTrace {
    /// `+1`/`-1` per position, 1-indexed as positions `1..=n`.
    pub signs: Vec<i8>,
    /// `partial_sums[k]` is the sum of the first `k+1` signs.
    pub partial_sums: Vec<i64>,
    /// Number of digits strictly below the middle value.
    pub low_count: u64,
    /// Number of digits strictly above the middle value.
    pub high_count: u64,
}

/// Piece signs for positions `1..=count`.
pub fn derivative_signs(s: &DigitStream, count: u64) -> Result<DerivTrace> {
    if s.classify() != PointClass::Generic {
        return Err(Error::PointNotGeneric {
            op: "derivative_signs",
        });
    }
    let radix = s.radix();
    let mut signs = vec![0i8; count as usize];
    let mut carry: Option<i8> = None;
    for i in (1..=count).rev() {
        let sign = match radix.digit_sign(s.digit_at(i)) {
            Some(own) => {
                carry = Some(own);
                own
            }
            None => match carry {
                Some(c) => c,
                None => {
                    let resolved = s.resolved_sign(i)?;
                    carry = Some(resolved);
                    resolved
                }
            },
        };
        signs[(i - 1) as usize] = sign;
    }
    let mut partial_sums = Vec::with_capacity(count as usize);
    let mut acc = 0i64;
    let mut low = 0u64;
    let mut high = 0u64;
    for (i, &sign) in signs.iter().enumerate() {
        acc += sign as i64;
        partial_sums.push(acc);
        match radix.digit_sign(s.digit_at(i as u64 + 1)) {
            Some(1) => low += 1,
            Some(-1) => high += 1,
            _ => {}
        }
    }
    Ok(DerivTrace {
        signs,
        partial_sums,
        low_count: low,
        high_count: high,
    })
}

/// The digit remap for odd radix: every middle digit takes the value of
/// the next non-middle digit. Identity for even radix. The signs of the
/// pieces are unchanged by this map.
pub fn resolve_middle_digits(s: &DigitStream) -> Result<DigitStream> {
    let radix = s.radix();
    if !radix.is_odd() {
        return Ok(s.clone());
    }
    if s.classify() == PointClass::Midpoint {
        return Err(Error::MiddleDigitTail);
    }
    let mid = radix.middle_digit().expect("odd radix");
    if let Some((_, on, off, _)) = s.sparse_params() {
        // A generator stream maps to itself when no digit is the middle
        // one, and collapses to a constant stream otherwise.
        if on != mid && off != mid {
            return Ok(s.clone());
        }
        let constant = if on == mid { off } else { on };
        return DigitStream::periodic(radix, vec![], vec![constant]);
    }
    let (pre_len, per_len) = s.periodic_shape().expect("periodic stream");
    let total = pre_len + per_len;
    let mut mapped = Vec::with_capacity(total as usize);
    for i in 1..=total {
        let d = s.digit_at(i);
        if d == mid {
            mapped.push(s.digit_at(s.next_non_middle(i)?));
        } else {
            mapped.push(d);
        }
    }
    let period = mapped.split_off(pre_len as usize);
    DigitStream::periodic(radix, mapped, period)
}

/// The three digit conditions whose index sequences anchor the
/// infinite-derivative criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    /// Digits different from the middle value `(r-1)/2`; every index
    /// for even radix.
    NonMiddle,
    /// Digits different from 0.
    NonZero,
    /// Digits different from `r-1`.
    NonMax,
}

impl IndexKind {
    pub fn name(self) -> &'static str {
        match self {
            IndexKind::NonMiddle => "non_middle",
            IndexKind::NonZero => "non_zero",
            IndexKind::NonMax => "non_max",
        }
    }

    fn qualifies(self, radix: crate::Radix, d: u32) -> bool {
        match self {
            IndexKind::NonMiddle => !radix.is_middle(d),
            IndexKind::NonZero => d != 0,
            IndexKind::NonMax => d != radix.get() - 1,
        }
    }
}

/// Strictly increasing positions whose digits satisfy the condition.
#[derive(Debug, Clone, Serialize)]
pub struct IndexSeq {
    pub kind: IndexKind,
    pub indices: Vec<u64>,
}

/// First `count` members of the requested index sequence.
pub fn index_sequence(s: &DigitStream, kind: IndexKind, count: u64) -> Result<IndexSeq> {
    check_infinite(s, kind)?;
    let mut indices = Vec::with_capacity(count as usize);
    let mut pos = 0u64;
    for _ in 0..count {
        pos = next_index_after(s, kind, pos)?;
        indices.push(pos);
    }
    Ok(IndexSeq { kind, indices })
}

fn check_infinite(s: &DigitStream, kind: IndexKind) -> Result<()> {
    let radix = s.radix();
    if s.sparse_params().is_some() {
        // on != off, and each condition excludes a single digit value,
        // so a generator stream qualifies infinitely often.
        return Ok(());
    }
    let (pre_len, per_len) = s.periodic_shape().expect("periodic stream");
    let any = (pre_len + 1..=pre_len + per_len).any(|i| kind.qualifies(radix, s.digit_at(i)));
    if any {
        Ok(())
    } else {
        Err(Error::FinitelyManyIndices { kind: kind.name() })
    }
}

/// Smallest qualifying position strictly greater than `pos`. The
/// stream's period (or the generator's power structure) bounds the
/// search, so this never scans unboundedly.
fn next_index_after(s: &DigitStream, kind: IndexKind, pos: u64) -> Result<u64> {
    let radix = s.radix();
    if let Some((base, on, off, first_power)) = s.sparse_params() {
        if kind.qualifies(radix, off) {
            let mut j = pos + 1;
            while !kind.qualifies(radix, s.digit_at(j)) {
                j += 1;
            }
            return Ok(j);
        }
        if !kind.qualifies(radix, on) {
            return Err(Error::FinitelyManyIndices { kind: kind.name() });
        }
        // Only power positions qualify.
        let mut p = base
            .checked_pow(first_power)
            .ok_or(Error::PositionOverflow { count: pos })?;
        while p <= pos {
            p = p
                .checked_mul(base)
                .ok_or(Error::PositionOverflow { count: pos })?;
        }
        return Ok(p);
    }
    let (pre_len, per_len) = s.periodic_shape().expect("periodic stream");
    let bound = pos.max(pre_len) + per_len + 1;
    for j in pos + 1..=bound {
        if kind.qualifies(radix, s.digit_at(j)) {
            return Ok(j);
        }
    }
    Err(Error::FinitelyManyIndices { kind: kind.name() })
}

/// Qualifying positions up to and including `max_pos`.
fn indices_upto(s: &DigitStream, kind: IndexKind, max_pos: u64) -> Result<Vec<u64>> {
    check_infinite(s, kind)?;
    let mut out = Vec::new();
    let mut pos = 0u64;
    loop {
        pos = next_index_after(s, kind, pos)?;
        if pos > max_pos {
            return Ok(out);
        }
        out.push(pos);
    }
}

/// Resolved-sign model with O(1) partial-sum queries for eventually
/// periodic streams and O(log n) for generator streams.
enum SignModel {
    Periodic {
        /// Prefix sums over the preperiod; `pre[k]` = sum of first `k` signs.
        pre: Vec<i64>,
        /// Prefix sums over one period.
        per: Vec<i64>,
        drift: i64,
    },
    Sparse {
        base: u64,
        first_power: u32,
        sigma_on: i64,
        sigma_off: i64,
    },
}

impl SignModel {
    fn new(s: &DigitStream) -> Result<Self> {
        if s.classify() != PointClass::Generic {
            return Err(Error::PointNotGeneric { op: "sign_model" });
        }
        let radix = s.radix();
        if let Some((base, on, off, first_power)) = s.sparse_params() {
            // A middle digit resolves to the other digit value: from a
            // non-power position the next non-middle digit sits at a
            // power, and vice versa.
            let sigma_on = radix.digit_sign(on).or(radix.digit_sign(off)).unwrap() as i64;
            let sigma_off = radix.digit_sign(off).or(radix.digit_sign(on)).unwrap() as i64;
            return Ok(SignModel::Sparse {
                base,
                first_power,
                sigma_on,
                sigma_off,
            });
        }
        let (pre_len, per_len) = s.periodic_shape().expect("periodic stream");
        let mut pre = Vec::with_capacity(pre_len as usize + 1);
        pre.push(0);
        for i in 1..=pre_len {
            pre.push(pre[i as usize - 1] + s.resolved_sign(i)? as i64);
        }
        let mut per = Vec::with_capacity(per_len as usize + 1);
        per.push(0);
        for k in 1..=per_len {
            per.push(per[k as usize - 1] + s.resolved_sign(pre_len + k)? as i64);
        }
        let drift = per[per_len as usize];
        Ok(SignModel::Periodic { pre, per, drift })
    }

    /// Sum of the first `n` resolved signs.
    fn sum_at(&self, n: u64) -> i64 {
        match self {
            SignModel::Periodic { pre, per, drift } => {
                let pre_len = pre.len() as u64 - 1;
                let per_len = per.len() as u64 - 1;
                if n <= pre_len {
                    pre[n as usize]
                } else {
                    let k = n - pre_len;
                    let full = (k / per_len) as i64;
                    let rem = (k % per_len) as usize;
                    pre[pre_len as usize] + full * drift + per[rem]
                }
            }
            SignModel::Sparse {
                base,
                first_power,
                sigma_on,
                sigma_off,
            } => {
                let powers = count_powers_upto(n, *base, *first_power) as i64;
                sigma_on * powers + sigma_off * (n as i64 - powers)
            }
        }
    }

    fn period_drift(&self) -> Option<i64> {
        match self {
            SignModel::Periodic { drift, .. } => Some(*drift),
            SignModel::Sparse { .. } => None,
        }
    }
}

fn count_powers_upto(n: u64, base: u64, first_power: u32) -> u64 {
    let mut p = match base.checked_pow(first_power) {
        Some(p) => p,
        None => return 0,
    };
    let mut count = 0;
    while p <= n {
        count += 1;
        p = match p.checked_mul(base) {
            Some(p) => p,
            None => break,
        };
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriterionSign {
    Plus,
    Minus,
}

/// Anchor sequence of the `(side, sign)` criterion.
pub fn anchor_kind(side: Side, sign: CriterionSign) -> IndexKind {
    match (side, sign) {
        (Side::Right, CriterionSign::Plus) => IndexKind::NonMiddle,
        (Side::Left, CriterionSign::Plus) => IndexKind::NonZero,
        (Side::Right, CriterionSign::Minus) => IndexKind::NonMax,
        (Side::Left, CriterionSign::Minus) => IndexKind::NonMiddle,
    }
}

/// One term of an infinite-derivative criterion: the partial sign sum
/// at an anchor index, corrected by the gap to the next anchor and its
/// base-r logarithm. `Plus` criteria use `S - gap + log_r(gap)`,
/// `Minus` criteria `S + gap - log_r(gap)`; the criterion holds iff the
/// terms tend to the matching infinity.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionTerm {
    pub anchor: u64,
    pub sum_part: i64,
    pub gap: u64,
    pub value: f64,
}

fn term_value(sign: CriterionSign, sum_part: i64, gap: u64, radix: crate::Radix) -> f64 {
    let s = sum_part as f64;
    let g = gap as f64;
    let log_term = if gap == 1 {
        0.0
    } else {
        g.ln() / (radix.get() as f64).ln()
    };
    // Fixed evaluation order so that reflection duality negates term
    // values bit-exactly.
    match sign {
        CriterionSign::Plus => (s - g) + log_term,
        CriterionSign::Minus => (s + g) - log_term,
    }
}

/// First `count` criterion terms for the given side and sign.
pub fn criterion_sequence(
    s: &DigitStream,
    side: Side,
    sign: CriterionSign,
    count: u64,
) -> Result<Vec<CriterionTerm>> {
    let kind = anchor_kind(side, sign);
    let anchors = index_sequence(s, kind, count + 1)?.indices;
    let model = SignModel::new(s)?;
    let radix = s.radix();
    Ok((0..count as usize)
        .map(|m| {
            let anchor = anchors[m];
            let gap = anchors[m + 1] - anchors[m];
            let sum_part = model.sum_at(anchor);
            CriterionTerm {
                anchor,
                sum_part,
                gap,
                value: term_value(sign, sum_part, gap, radix),
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivLimit {
    PlusInfinity,
    MinusInfinity,
    NotInfinite,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certainty {
    /// Decided by the digit-tail rules or the per-period drift
    /// reduction; exact.
    Certified,
    /// Finite-depth trend of the criterion terms.
    Heuristic {
        depth: u64,
        tail_min: f64,
        tail_max: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub side: Side,
    pub result: DerivLimit,
    pub certainty: Certainty,
}

/// Certified one-sided verdicts `(left, right)`.
///
/// R-adic points have derivative `-inf` from the left and `+inf` from
/// the right; midpoint-set points (odd radix) the opposite. For an
/// eventually periodic generic point the anchor gaps of every index
/// sequence are bounded by one period, so each criterion value differs
/// from the partial sum at its anchor by a bounded amount; the partial
/// sums drift linearly at the per-period rate, hence every criterion
/// diverges iff the drift is nonzero with the matching sign.
pub fn certify(s: &DigitStream) -> Result<(Verdict, Verdict)> {
    let verdict = |side, result| Verdict {
        side,
        result,
        certainty: Certainty::Certified,
    };
    match s.classify() {
        PointClass::RAdic => Ok((
            verdict(Side::Left, DerivLimit::MinusInfinity),
            verdict(Side::Right, DerivLimit::PlusInfinity),
        )),
        PointClass::Midpoint => Ok((
            verdict(Side::Left, DerivLimit::PlusInfinity),
            verdict(Side::Right, DerivLimit::MinusInfinity),
        )),
        PointClass::Generic => {
            let model = SignModel::new(s)?;
            let drift = model.period_drift().ok_or(Error::NotCertifiable)?;
            let result = match drift.signum() {
                1 => DerivLimit::PlusInfinity,
                -1 => DerivLimit::MinusInfinity,
                _ => DerivLimit::NotInfinite,
            };
            Ok((verdict(Side::Left, result), verdict(Side::Right, result)))
        }
    }
}

/// Divergence threshold of the trend detector.
const TREND_THRESHOLD: f64 = 10.0;

/// Trend verdicts from finitely many criterion terms.
///
/// All four criteria are evaluated over a common digit horizon: the
/// position of the `depth`-th anchor of the sparsest anchor sequence.
/// A criterion counts as diverging when the minimum (for `+`) or
/// maximum (for `-`) over the last quarter of its terms clears the
/// threshold and moves strictly monotonically across four dyadic
/// checkpoints.
pub fn heuristic_verdict(s: &DigitStream, depth: u64) -> Result<(Verdict, Verdict)> {
    if s.classify() != PointClass::Generic {
        return Err(Error::PointNotGeneric {
            op: "heuristic_verdict",
        });
    }
    let kinds = [IndexKind::NonMiddle, IndexKind::NonZero, IndexKind::NonMax];
    let mut horizon = 0u64;
    for kind in kinds {
        let seq = index_sequence(s, kind, depth.max(1))?;
        horizon = horizon.max(*seq.indices.last().expect("depth >= 1"));
    }
    if horizon > HORIZON_CAP {
        return Err(Error::HorizonCapExceeded {
            horizon,
            cap: HORIZON_CAP,
        });
    }
    let model = SignModel::new(s)?;
    let radix = s.radix();
    let values_for = |side: Side, sign: CriterionSign| -> Result<Vec<f64>> {
        let kind = anchor_kind(side, sign);
        let anchors = indices_upto(s, kind, horizon)?;
        let mut values = Vec::with_capacity(anchors.len());
        for (m, &anchor) in anchors.iter().enumerate() {
            let next = match anchors.get(m + 1) {
                Some(&n) => n,
                None => next_index_after(s, kind, anchor)?,
            };
            values.push(term_value(sign, model.sum_at(anchor), next - anchor, radix));
        }
        Ok(values)
    };

    let side_verdict = |side: Side| -> Result<Verdict> {
        let plus = values_for(side, CriterionSign::Plus)?;
        let minus = values_for(side, CriterionSign::Minus)?;
        let (result, window) = if diverges_up(&plus) {
            (DerivLimit::PlusInfinity, tail_window(&plus))
        } else if diverges_down(&minus) {
            (DerivLimit::MinusInfinity, tail_window(&minus))
        } else {
            (DerivLimit::NotInfinite, tail_window(&plus))
        };
        Ok(Verdict {
            side,
            result,
            certainty: Certainty::Heuristic {
                depth,
                tail_min: window.0,
                tail_max: window.1,
            },
        })
    };
    Ok((side_verdict(Side::Left)?, side_verdict(Side::Right)?))
}

/// Min and max over the last quarter of the first `upto` terms.
fn quartile_window(values: &[f64], upto: usize) -> (f64, f64) {
    debug_assert!(upto >= 1 && upto <= values.len());
    let quarter = (upto / 4).max(1);
    let window = &values[upto - quarter..upto];
    let min = window.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = window.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (min, max)
}

fn tail_window(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        (f64::NAN, f64::NAN)
    } else {
        quartile_window(values, values.len())
    }
}

fn checkpoints(len: usize) -> Vec<usize> {
    let mut cps: Vec<usize> = [len / 8, len / 4, len / 2, len]
        .into_iter()
        .map(|c| c.max(1))
        .collect();
    cps.dedup();
    cps
}

fn diverges_up(values: &[f64]) -> bool {
    if values.is_empty() {
        return false;
    }
    let cps = checkpoints(values.len());
    if cps.len() < 2 {
        return false;
    }
    let mins: Vec<f64> = cps.iter().map(|&c| quartile_window(values, c).0).collect();
    mins.last().copied().unwrap() > TREND_THRESHOLD && mins.windows(2).all(|w| w[1] > w[0])
}

fn diverges_down(values: &[f64]) -> bool {
    if values.is_empty() {
        return false;
    }
    let cps = checkpoints(values.len());
    if cps.len() < 2 {
        return false;
    }
    let maxs: Vec<f64> = cps.iter().map(|&c| quartile_window(values, c).1).collect();
    maxs.last().copied().unwrap() < -TREND_THRESHOLD && maxs.windows(2).all(|w| w[1] < w[0])
}

/// One rung of a difference-quotient ladder.
#[derive(Debug, Clone)]
pub struct ProbeStep {
    pub h: Rational,
    pub quotient: Enclosure,
}

/// Iteration guard while collecting distinct ladder steps.
const LADDER_SCAN_CAP: u64 = 1_000_000;

/// Exact difference quotients along the canonical step ladders.
///
/// To the right the steps are the distances to the next grid point
/// above; to the left, the distances back to the digit prefixes.
/// Successive equal steps are deduplicated. Requires a stream with an
/// exact rational value; every quotient is evaluated exactly, so the
/// returned enclosures are single points.
pub fn quotient_probe(s: &DigitStream, side: Side, steps: u64) -> Result<Vec<ProbeStep>> {
    let radix = s.radix();
    let x = s.value().ok_or(Error::NeedsRationalValue {
        op: "quotient_probe",
    })?;
    let f_x = eval_exact(&x, radix)?;
    let one = Rational::from_integer(1.into());
    let zero = Rational::from_integer(0.into());
    let mut out: Vec<ProbeStep> = Vec::with_capacity(steps as usize);
    match side {
        Side::Right => {
            if x >= one {
                return Err(Error::DegenerateLadder {
                    point: s.spec_string(),
                });
            }
            let mut last_target: Option<Rational> = None;
            let mut level = 0u64;
            while out.len() < steps as usize {
                level += 1;
                if level > LADDER_SCAN_CAP {
                    return Err(Error::DegenerateLadder {
                        point: s.spec_string(),
                    });
                }
                let target = next_grid_point_above(&x, level, radix);
                if last_target.as_ref() == Some(&target) {
                    continue;
                }
                let h = &target - &x;
                let quotient = (eval_exact(&target, radix)? - &f_x) / &h;
                out.push(ProbeStep {
                    h,
                    quotient: Enclosure::point(quotient),
                });
                last_target = Some(target);
            }
        }
        Side::Left => {
            if x <= zero {
                return Err(Error::DegenerateLadder {
                    point: s.spec_string(),
                });
            }
            // R-adic points need the max-digit expansion so that the
            // prefixes keep increasing strictly toward the point.
            let digits;
            let stream = if s.classify() == PointClass::RAdic {
                digits = DigitStream::from_rational(&x, radix, TailConvention::MaxDigit)?;
                &digits
            } else {
                s
            };
            let mut last_target: Option<Rational> = None;
            let mut level = 0u64;
            while out.len() < steps as usize {
                level += 1;
                if level > LADDER_SCAN_CAP {
                    return Err(Error::DegenerateLadder {
                        point: s.spec_string(),
                    });
                }
                let target = stream.prefix_value(level - 1);
                if last_target.as_ref() == Some(&target) {
                    continue;
                }
                let h = &x - &target;
                // (f(x-h) - f(x)) / (-h)
                let quotient = (&f_x - eval_exact(&target, radix)?) / &h;
                out.push(ProbeStep {
                    h,
                    quotient: Enclosure::point(quotient),
                });
                last_target = Some(target);
            }
        }
    }
    Ok(out)
}
