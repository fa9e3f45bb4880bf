//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use takagi::derivative::{
    certify, criterion_sequence, heuristic_verdict, quotient_probe, CriterionSign, DerivLimit, Side,
};
use takagi::digits::{DigitStream, PointClass, TailConvention};
use takagi::eval::{eval_exact, eval_partial};
use takagi::fractal::{
    box_counting_slope, dimension_bounds, enumerate_words, ifs_approximation, sample_sign_sums,
    DriftSign, SampleConfig,
};
use takagi::rng::SplitMix64;
use takagi::{Radix, Rational};

fn radix(r: u32) -> Radix {
    Radix::new(r).unwrap()
}

fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn seeded_rational(rng: &mut SplitMix64, max_den: u64) -> Rational {
    let q = 2 + rng.next_below(max_den - 1);
    let p = rng.next_below(q + 1);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn report(criterion: u32, description: &str, pass: bool) {
    println!(
        "{} criterion {criterion}: {description}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {description}");
}

/// Word alphabet cardinalities match the closed-form counts.
#[test]
fn criterion_01_cardinalities() {
    let mut pass = true;
    for r in [2u32, 3, 4, 5] {
        for n in [3u64, 5, 7, 9] {
            let count = enumerate_words(n, radix(r), DriftSign::Plus)
                .unwrap()
                .count();
            let expected = if r % 2 == 1 {
                (r as u64).pow(n as u32 - 1) * (r as u64 - 1) / 2 - 1
            } else {
                ((r as u64).pow(n as u32) - 2) / 2
            };
            if count != expected {
                eprintln!("r={r} n={n}: counted {count}, closed form {expected}");
                pass = false;
            }
        }
    }
    report(
        1,
        "alphabet counts equal closed forms (r in 2..5, odd n in 3..9)",
        pass,
    );
}

/// Independent summation of the midpoint-grid distance series, with its
/// own orbit cycle detection.
fn midpoint_series_direct(x: &Rational, r: u32) -> Rational {
    // Walk the numerators of y_n = r^n x mod 1 over the fixed
    // denominator q until a state repeats; the distance from y_n to the
    // half-integers is |2 y_n - 1| / 2, an integer over 2q.
    let q: BigInt = x.denom().clone();
    let two_q = BigInt::from(2) * &q;
    let r_big = BigInt::from(r);
    let mut seen: std::collections::HashMap<BigInt, usize> = std::collections::HashMap::new();
    let mut terms: Vec<BigInt> = Vec::new();
    let mut state = x.numer() % &q;
    let cycle_start = loop {
        if let Some(&pos) = seen.get(&state) {
            break pos;
        }
        seen.insert(state.clone(), terms.len());
        let doubled = BigInt::from(2) * &state;
        terms.push(if doubled >= q {
            &doubled - &q
        } else {
            &q - &doubled
        });
        state = state * &r_big % &q;
    };
    // sum_n terms[n] r^-n / (2q), split at the cycle, each part folded
    // as one integer.
    let fold = |values: &[BigInt]| -> BigInt {
        values
            .iter()
            .fold(BigInt::zero(), |acc, m| acc * &r_big + m)
    };
    let pow = |k: usize| num_traits::pow::pow(r_big.clone(), k);
    let pre_len = cycle_start;
    let cycle_len = terms.len() - cycle_start;
    let pre_sum = if pre_len == 0 {
        Rational::zero()
    } else {
        Rational::new(fold(&terms[..pre_len]), &two_q * pow(pre_len - 1))
    };
    let r_cycle = pow(cycle_len);
    let cycle_sum = Rational::new(
        fold(&terms[pre_len..]) * &r_cycle,
        &two_q * pow(cycle_len - 1) * pow(pre_len) * (r_cycle - BigInt::one()),
    );
    pre_sum + cycle_sum
}

/// The midpoint series and the function sum to r / (2(r-1)).
#[test]
fn criterion_02_midpoint_series_identity() {
    let mut rng = SplitMix64::new(2);
    let mut pass = true;
    for r in [2u32, 3, 4, 5, 10] {
        let total = Rational::new(BigInt::from(r), BigInt::from(2 * (r - 1)));
        for _ in 0..500 {
            let x = seeded_rational(&mut rng, 2_000);
            let direct = midpoint_series_direct(&x, r);
            let f = eval_exact(&x, radix(r)).unwrap();
            if &direct + &f != total {
                eprintln!("identity fails at {x} base {r}");
                pass = false;
            }
        }
    }
    report(
        2,
        "midpoint series + f_r = r/(2(r-1)) exactly, 500 points per radix",
        pass,
    );
}

/// Evaluation is symmetric about 1/2.
#[test]
fn criterion_03_symmetry() {
    let mut rng = SplitMix64::new(3);
    let mut pass = true;
    for r in [2u32, 3, 4, 5, 10] {
        for _ in 0..500 {
            let x = seeded_rational(&mut rng, 2_000);
            let mirrored = Rational::one() - &x;
            if eval_exact(&x, radix(r)).unwrap() != eval_exact(&mirrored, radix(r)).unwrap() {
                eprintln!("symmetry fails at {x} base {r}");
                pass = false;
            }
        }
    }
    report(3, "f_r(x) = f_r(1-x) exactly on the seeded sample", pass);
}

/// Partial-sum enclosures contain the exact value.
#[test]
fn criterion_04_enclosure_soundness() {
    let mut rng = SplitMix64::new(4);
    let mut pass = true;
    for r in [2u32, 3, 4, 5, 10] {
        for _ in 0..500 {
            let x = seeded_rational(&mut rng, 2_000);
            let exact = eval_exact(&x, radix(r)).unwrap();
            for n in [5u64, 10, 20, 40] {
                let enc = eval_partial(&x, radix(r), n).unwrap();
                if !enc.contains(&exact) {
                    eprintln!("enclosure misses exact value at {x} base {r}, {n} terms");
                    pass = false;
                }
            }
        }
    }
    report(
        4,
        "enclosures contain the exact value for depths 5, 10, 20, 40",
        pass,
    );
}

/// Brute-force criterion oracle, independent of the library's sign
/// machinery: resolves signs by scanning, collects anchors by scanning,
/// and calls a criterion divergent when the last half of 1000 terms
/// clears +-50.
mod oracle {
    #[derive(Clone)]
    pub struct RawStream {
        pub r: u32,
        pub pre: Vec<u32>,
        pub per: Vec<u32>,
    }

    impl RawStream {
        pub fn digit(&self, i: usize) -> u32 {
            if i < self.pre.len() {
                self.pre[i]
            } else {
                self.per[(i - self.pre.len()) % self.per.len()]
            }
        }

        pub fn is_generic(&self) -> bool {
            let all = |v: u32| self.per.iter().all(|&d| d == v);
            if all(0) || all(self.r - 1) {
                return false;
            }
            if self.r % 2 == 1 && all((self.r - 1) / 2) {
                return false;
            }
            true
        }
    }

    #[derive(Debug, PartialEq, Eq, Clone, Copy)]
    pub enum Outcome {
        Plus,
        Minus,
        Neither,
    }

    fn signs(s: &RawStream, count: usize) -> Vec<i64> {
        let mid2 = s.r - 1;
        let mut out = vec![0i64; count];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut j = i;
            let sign = loop {
                let d = s.digit(j);
                if 2 * d < mid2 {
                    break 1;
                }
                if 2 * d > mid2 {
                    break -1;
                }
                j += 1;
            };
            *slot = sign;
        }
        out
    }

    /// Four (side, sign) divergence outcomes per side: (left, right).
    pub fn verdicts(s: &RawStream) -> (Outcome, Outcome) {
        const ANCHORS: usize = 1000;
        let horizon = s.pre.len() + (ANCHORS + 2) * s.per.len() + 2;
        let signs = signs(s, horizon);
        let mut sums = Vec::with_capacity(horizon);
        let mut acc = 0i64;
        for &sg in &signs {
            acc += sg;
            sums.push(acc);
        }
        let anchor_positions = |cond: &dyn Fn(u32) -> bool| -> Vec<usize> {
            (1..=horizon)
                .filter(|&n| cond(s.digit(n - 1)))
                .take(ANCHORS + 1)
                .collect()
        };
        let values = |positions: &[usize], plus: bool| -> Vec<f64> {
            positions
                .windows(2)
                .map(|w| {
                    let sum = sums[w[0] - 1] as f64;
                    let gap = (w[1] - w[0]) as f64;
                    let log_term = gap.ln() / (s.r as f64).ln();
                    if plus {
                        sum - gap + log_term
                    } else {
                        sum + gap - log_term
                    }
                })
                .collect()
        };
        let diverges_plus = |vals: &[f64]| -> bool {
            let half = vals.len() / 2;
            vals[half..].iter().all(|&v| v > 50.0)
        };
        let diverges_minus = |vals: &[f64]| -> bool {
            let half = vals.len() / 2;
            vals[half..].iter().all(|&v| v < -50.0)
        };
        let mid2 = s.r - 1;
        let non_middle = anchor_positions(&|d| 2 * d != mid2);
        let non_zero = anchor_positions(&|d| d != 0);
        let non_max = anchor_positions(&|d| d != s.r - 1);
        let right = if diverges_plus(&values(&non_middle, true)) {
            Outcome::Plus
        } else if diverges_minus(&values(&non_max, false)) {
            Outcome::Minus
        } else {
            Outcome::Neither
        };
        let left = if diverges_plus(&values(&non_zero, true)) {
            Outcome::Plus
        } else if diverges_minus(&values(&non_middle, false)) {
            Outcome::Minus
        } else {
            Outcome::Neither
        };
        (left, right)
    }
}

/// Certified verdicts agree with the brute-force oracle on every
/// short eventually periodic stream.
#[test]
fn criterion_05_certify_oracle_equivalence() {
    let mut pass = true;
    let mut checked = 0u64;
    for r in [2u32, 3] {
        let mut seen: HashSet<DigitStream> = HashSet::new();
        for total_len in 1..=6usize {
            for per_len in 1..=total_len {
                let pre_len = total_len - per_len;
                let combos = (r as u64).pow(total_len as u32);
                for code in 0..combos {
                    let mut digits = Vec::with_capacity(total_len);
                    let mut c = code;
                    for _ in 0..total_len {
                        digits.push((c % r as u64) as u32);
                        c /= r as u64;
                    }
                    let (pre, per) = digits.split_at(pre_len);
                    let raw = oracle::RawStream {
                        r,
                        pre: pre.to_vec(),
                        per: per.to_vec(),
                    };
                    if !raw.is_generic() {
                        continue;
                    }
                    let stream =
                        DigitStream::periodic(radix(r), raw.pre.clone(), raw.per.clone()).unwrap();
                    if !seen.insert(stream.clone()) {
                        continue;
                    }
                    checked += 1;
                    let (left, right) = certify(&stream).unwrap();
                    let (oracle_left, oracle_right) = oracle::verdicts(&raw);
                    let agree = |verdict: DerivLimit, outcome: oracle::Outcome| match outcome {
                        oracle::Outcome::Plus => verdict == DerivLimit::PlusInfinity,
                        oracle::Outcome::Minus => verdict == DerivLimit::MinusInfinity,
                        oracle::Outcome::Neither => verdict == DerivLimit::NotInfinite,
                    };
                    if !agree(left.result, oracle_left) || !agree(right.result, oracle_right) {
                        eprintln!(
                            "disagreement at {stream}: certify ({:?}, {:?}), oracle ({oracle_left:?}, {oracle_right:?})",
                            left.result, right.result
                        );
                        pass = false;
                    }
                }
            }
        }
    }
    report(
        5,
        &format!("certify matches the 1000-anchor oracle on {checked} short periodic streams"),
        pass,
    );
}

/// The sparse-powers example: right +inf criterion fails with
/// diverging negative values, left +inf criterion holds, and the trend
/// verdicts read (left +inf, right not infinite).
#[test]
fn criterion_06_sparse_example() {
    let stream = DigitStream::sparse_powers(radix(3), 10, 0, 1, 0).unwrap();
    let mut pass = true;

    let right = criterion_sequence(&stream, Side::Right, CriterionSign::Plus, 4).unwrap();
    let at_powers: Vec<&takagi::derivative::CriterionTerm> = right
        .iter()
        .filter(|t| [10, 100, 1000].contains(&t.anchor))
        .collect();
    if at_powers.len() != 3 {
        eprintln!("expected anchors 10, 100, 1000; got {right:?}");
        pass = false;
    } else {
        for w in at_powers.windows(2) {
            if !(w[0].value < 0.0 && w[1].value < w[0].value) {
                eprintln!("right/+ values not negative decreasing: {at_powers:?}");
                pass = false;
            }
        }
    }

    let left = criterion_sequence(&stream, Side::Left, CriterionSign::Plus, 200).unwrap();
    for w in left.windows(2) {
        if !(w[0].value > 0.0 && w[1].value > w[0].value) {
            eprintln!(
                "left/+ values not positive increasing near anchor {}",
                w[0].anchor
            );
            pass = false;
        }
    }

    let (left_v, right_v) = heuristic_verdict(&stream, 4).unwrap();
    if left_v.result != DerivLimit::PlusInfinity || right_v.result != DerivLimit::NotInfinite {
        eprintln!(
            "verdicts: left {:?}, right {:?}",
            left_v.result, right_v.result
        );
        pass = false;
    }
    report(
        6,
        "sparse-powers point: criterion trends and verdicts reproduce",
        pass,
    );
}

/// Exact quotient ladders: divergent at an r-adic point, bounded at
/// an oscillating point.
#[test]
fn criterion_07_quotient_probes() {
    let mut pass = true;
    let quarter =
        DigitStream::from_rational(&ratio(1, 4), radix(2), TailConvention::Zeros).unwrap();
    let right = quotient_probe(&quarter, Side::Right, 60).unwrap();
    if !right.iter().any(|p| p.quotient.lo > ratio(50, 1)) {
        eprintln!("right ladder at 1/4 stays below 50");
        pass = false;
    }
    let left = quotient_probe(&quarter, Side::Left, 60).unwrap();
    if !left.iter().any(|p| p.quotient.hi < ratio(-50, 1)) {
        eprintln!("left ladder at 1/4 stays above -50");
        pass = false;
    }

    let third = DigitStream::from_rational(&ratio(1, 3), radix(2), TailConvention::Zeros).unwrap();
    for side in [Side::Right, Side::Left] {
        for p in quotient_probe(&third, side, 30).unwrap() {
            if p.quotient.lo < ratio(-5, 1) || p.quotient.hi > ratio(5, 1) {
                eprintln!("quotient at 1/3 leaves [-5, 5]: {:?}", p.quotient);
                pass = false;
            }
        }
    }
    report(
        7,
        "quotients diverge past +-50 at 1/4 and stay within [-5, 5] at 1/3",
        pass,
    );
}

/// The two-sided bracket around the partial sign sums holds exactly.
#[test]
fn criterion_08_bracket() {
    let mut pass = true;
    for r in [2u32, 3] {
        let mut rng = SplitMix64::new(8 + r as u64);
        let mut tested = 0;
        while tested < 100 {
            let x = seeded_rational(&mut rng, 200);
            let stream = DigitStream::from_rational(&x, radix(r), TailConvention::Zeros).unwrap();
            if stream.classify() != PointClass::Generic {
                continue;
            }
            tested += 1;
            let f_x = eval_exact(&x, radix(r)).unwrap();
            let trace = takagi::derivative::derivative_signs(&stream, 40).unwrap();
            let mut cell_base = BigInt::one();
            for n in 1..=40u64 {
                // Component of the level-n grid complement containing x:
                // prefix and prefix + r^(1-n).
                let scale = radix(r).pow(n - 1);
                let lo = Rational::new((&x * &cell_base).floor().to_integer(), scale.clone());
                let hi = &lo + Rational::new(BigInt::one(), scale.clone());
                let s_n = Rational::from_integer(trace.partial_sums[(n - 1) as usize].into());
                let upper = (eval_exact(&lo, radix(r)).unwrap() - &f_x) / (&lo - &x);
                let lower = (eval_exact(&hi, radix(r)).unwrap() - &f_x) / (&hi - &x);
                if !(lower <= s_n && s_n <= upper) {
                    eprintln!("bracket fails at {x} base {r} level {n}");
                    pass = false;
                }
                cell_base *= BigInt::from(r);
            }
        }
    }
    report(
        8,
        "partial sign sums bracketed by endpoint quotients, 100 points per radix",
        pass,
    );
}

/// Box counting on depth-3 approximations matches the similarity
/// dimension; exact ratios beat the closed-form bounds and approach 1.
#[test]
fn criterion_09_dimension() {
    let mut pass = true;
    for (r, n) in [(2u32, 3u64), (3, 3)] {
        let set = ifs_approximation(n, radix(r), DriftSign::Plus, 3).unwrap();
        let grid = [n as u32, 2 * n as u32, 3 * n as u32];
        let slope = box_counting_slope(&set, &grid).unwrap();
        let dims = dimension_bounds(n, radix(r), DriftSign::Plus).unwrap();
        if (slope - dims.exact_ratio).abs() > 1e-9 {
            eprintln!(
                "slope {slope} vs ratio {} for r={r} n={n}",
                dims.exact_ratio
            );
            pass = false;
        }
    }
    for r in [2u32, 3, 4, 5] {
        for n in [3u64, 5, 7, 9] {
            let dims = dimension_bounds(n, radix(r), DriftSign::Plus).unwrap();
            if dims.exact_ratio < dims.lemma_bound {
                eprintln!("ratio below bound for r={r} n={n}");
                pass = false;
            }
        }
    }
    let trend = dimension_bounds(21, radix(2), DriftSign::Plus).unwrap();
    if trend.exact_ratio <= 0.9 {
        eprintln!("exact ratio at r=2 n=21 is {}", trend.exact_ratio);
        pass = false;
    }
    report(
        9,
        "box slopes match exact ratios; ratios beat bounds and exceed 0.9 at n=21",
        pass,
    );
}

/// Sign sums over random digit words behave like a centered walk.
#[test]
fn criterion_10_null_measure_statistics() {
    let mut pass = true;
    for r in [2u32, 3] {
        let stats = sample_sign_sums(
            radix(r),
            SampleConfig {
                radix: r,
                digits: 400,
                samples: 100_000,
                seed: 1,
            },
        )
        .unwrap();
        if stats.mean.abs() > 1.0 {
            eprintln!("mean {} too large for r={r}", stats.mean);
            pass = false;
        }
        let tail4 = stats
            .tail_fractions
            .iter()
            .find(|t| t.multiple == 4)
            .unwrap();
        if tail4.fraction > 0.01 {
            eprintln!("4-sigma tail {} too heavy for r={r}", tail4.fraction);
            pass = false;
        }
    }
    report(
        10,
        "sign-sum mean within 1 and 4-sigma tail within 1%, 100k samples",
        pass,
    );
}
