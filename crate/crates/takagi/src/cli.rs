//! Command-line surface: argument definitions, dispatch, and the JSON
//! and CSV emitters.
//!
//! Every document carries `"schema": "1"`, rationals appear as decimal
//! strings, and output bytes are a pure function of the parsed
//! configuration, seeds included.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;

use crate::derivative::{
    self, certify, criterion_sequence, derivative_signs, heuristic_verdict, quotient_probe,
    CriterionSign, Side,
};
use crate::digits::{DigitStream, PointClass};
use crate::error::{Error, Result};
use crate::eval;
use crate::fractal::{self, DriftSign, SampleConfig};
use crate::radix::Radix;
use crate::rational::RatioRepr;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for CriterionSign {
    fn from(s: SignArg) -> CriterionSign {
        match s {
            SignArg::Plus => CriterionSign::Plus,
            SignArg::Minus => CriterionSign::Minus,
        }
    }
}

impl From<SignArg> for DriftSign {
    fn from(s: SignArg) -> DriftSign {
        match s {
            SignArg::Plus => DriftSign::Plus,
            SignArg::Minus => DriftSign::Minus,
        }
    }
}

/// Exact evaluation and digit analysis of Takagi–Van der Waerden
/// functions.
///
/// Points are written as `p/q`, as explicit digits
/// `0.<digits>(<period>)_r`, or as a sparse-powers generator
/// `sparse:b=<int>,on=<digit>,off=<digit>[,k0=<int>]`.
#[derive(Debug, Parser)]
#[command(name = "takagi", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    command: CliCommand,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Write the document to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum CliCommand {
    /// Evaluate f_r at a point, exactly or as an enclosure.
    ///
    /// CSV columns: `num,den` (exact) or
    /// `lo_num,lo_den,hi_num,hi_den` (enclosure).
    Eval {
        #[arg(long)]
        radix: u32,
        #[arg(long)]
        point: String,
        /// Exact rational value (eventually periodic points only).
        #[arg(long, conflicts_with = "depth")]
        exact: bool,
        /// Partial-sum depth for an enclosure.
        #[arg(long)]
        depth: Option<u64>,
    },
    /// One-sided derivative verdicts: certified where possible,
    /// trend-based for generator points.
    ///
    /// CSV columns: `side,result,certainty,depth,tail_min,tail_max`.
    Classify {
        #[arg(long)]
        radix: u32,
        #[arg(long)]
        point: String,
        /// Anchor depth for heuristic verdicts at generator points.
        #[arg(long, default_value_t = 8)]
        depth: u64,
    },
    /// Piece signs and their partial sums at a generic point.
    ///
    /// CSV columns: `n,digit,sign,partial_sum`.
    Signs {
        #[arg(long)]
        radix: u32,
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = 64)]
        count: u64,
    },
    /// Terms of an infinite-derivative criterion.
    ///
    /// CSV columns: `anchor,sum_part,gap,value`.
    Criterion {
        #[arg(long)]
        radix: u32,
        #[arg(long)]
        point: String,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, value_enum)]
        sign: SignArg,
        #[arg(long, default_value_t = 32)]
        count: u64,
    },
    /// Exact difference quotients along the canonical step ladder.
    ///
    /// CSV columns: `h_num,h_den,lo_num,lo_den,hi_num,hi_den`.
    Probe {
        #[arg(long)]
        radix: u32,
        #[arg(long)]
        point: String,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, default_value_t = 30)]
        steps: u64,
    },
    /// Self-similar constructions for the infinite-derivative sets.
    #[command(subcommand)]
    Fractal(FractalCommand),
    /// Sign-sum statistics over uniform random digit words.
    ///
    /// CSV columns:
    /// `radix,digits,samples,seed,mean,variance,tail2,tail3,tail4`.
    Sample {
        #[arg(long)]
        radix: u32,
        /// Number of leading digit signs summed per sample.
        #[arg(long, default_value_t = 400)]
        digits: u64,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum FractalCommand {
    /// Enumerate the IFS word alphabet for odd length n.
    ///
    /// CSV columns: `numerator,word` (digits joined by `-`).
    Enum {
        #[arg(long)]
        radix: u32,
        #[arg(long = "n")]
        level: u64,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
    },
    /// Depth-K interval approximation of the self-similar set.
    ///
    /// CSV columns: `lo_num,lo_den,hi_num,hi_den`.
    Ifs {
        #[arg(long)]
        radix: u32,
        #[arg(long = "n")]
        level: u64,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
        #[arg(long, default_value_t = 1)]
        depth: u32,
    },
    /// Word count, exact dimension ratio, and the closed-form bound.
    ///
    /// CSV columns: `count,exact_ratio,lemma_bound`.
    Dims {
        #[arg(long)]
        radix: u32,
        #[arg(long = "n")]
        level: u64,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
    },
    /// Box-counting slope of a depth-K approximation.
    ///
    /// CSV columns: `exponent,boxes,slope` (slope repeated per row).
    Boxdim {
        #[arg(long)]
        radix: u32,
        #[arg(long = "n")]
        level: u64,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
        #[arg(long, default_value_t = 3)]
        depth: u32,
        /// Grid exponents m (boxes of size r^-m), comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        grid: Vec<u32>,
    },
    /// Certified verdicts for the periodic point addressed by alphabet
    /// words.
    ///
    /// CSV columns: `side,result,certainty,depth,tail_min,tail_max`.
    Witness {
        #[arg(long)]
        radix: u32,
        #[arg(long = "n")]
        level: u64,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
        /// Address words, comma separated; each word is a digit string
        /// (radix <= 36) or digits joined by `-`.
        #[arg(long, value_delimiter = ',', required = true)]
        address: Vec<String>,
    },
}

/// Fully validated run configuration.
#[derive(Debug)]
pub struct RunConfig {
    command: CliCommand,
    format: OutputFormat,
    output: Option<PathBuf>,
}

impl Cli {
    pub fn into_config(self) -> RunConfig {
        RunConfig {
            command: self.command,
            format: self.format,
            output: self.output,
        }
    }
}

/// Executes the configured command and returns the emitted document.
/// When an output path is configured the document is also written
/// there.
pub fn run(config: RunConfig) -> Result<String> {
    let doc = dispatch(&config.command, config.format)?;
    if let Some(path) = &config.output {
        std::fs::write(path, &doc)?;
    }
    Ok(doc)
}

/// One-line machine-readable error document for stderr.
pub fn error_document(e: &Error) -> String {
    json!({
        "schema": SCHEMA_VERSION,
        "error": { "kind": e.kind(), "message": e.to_string() },
    })
    .to_string()
}

fn parse_point(spec: &str, radix: u32) -> Result<(Radix, DigitStream)> {
    let radix = Radix::new(radix)?;
    let stream = DigitStream::parse(spec, radix)?;
    Ok((radix, stream))
}

fn finish(format: OutputFormat, body: Value, csv: String) -> Result<String> {
    match format {
        OutputFormat::Json => {
            let mut doc = json!({ "schema": SCHEMA_VERSION });
            merge(&mut doc, body);
            Ok(format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("serializable document")
            ))
        }
        OutputFormat::Csv => Ok(csv),
    }
}

fn merge(doc: &mut Value, body: Value) {
    let (Value::Object(doc), Value::Object(body)) = (doc, body) else {
        unreachable!("documents are json objects");
    };
    doc.extend(body);
}

fn ratio_json(x: &crate::Rational) -> Value {
    serde_json::to_value(RatioRepr::of(x)).expect("serializable ratio")
}

fn verdict_csv(verdicts: &[&derivative::Verdict]) -> String {
    let mut out = String::from("side,result,certainty,depth,tail_min,tail_max\n");
    for v in verdicts {
        let side = match v.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        let result = match v.result {
            derivative::DerivLimit::PlusInfinity => "plus_infinity",
            derivative::DerivLimit::MinusInfinity => "minus_infinity",
            derivative::DerivLimit::NotInfinite => "not_infinite",
        };
        match &v.certainty {
            derivative::Certainty::Certified => {
                out.push_str(&format!("{side},{result},certified,,,\n"));
            }
            derivative::Certainty::Heuristic {
                depth,
                tail_min,
                tail_max,
            } => {
                out.push_str(&format!(
                    "{side},{result},heuristic,{depth},{tail_min},{tail_max}\n"
                ));
            }
        }
    }
    out
}

fn word_string(digits: &[u32], radix: Radix) -> String {
    if radix.get() <= 36 {
        digits
            .iter()
            .map(|&d| char::from_digit(d, 36).expect("digit below 36"))
            .collect()
    } else {
        digits
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("-")
    }
}

fn parse_address_word(text: &str, radix: Radix) -> Result<Vec<u32>> {
    let bad = |reason: &str| Error::ParsePoint {
        spec: text.to_string(),
        reason: reason.to_string(),
    };
    let digits: Vec<u32> = if text.contains('-') {
        text.split('-')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad("bad digit")))
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .map(|c| c.to_digit(36).ok_or_else(|| bad("bad digit character")))
            .collect::<Result<_>>()?
    };
    for &d in &digits {
        radix.check_digit(d)?;
    }
    Ok(digits)
}

fn dispatch(command: &CliCommand, format: OutputFormat) -> Result<String> {
    match command {
        CliCommand::Eval {
            radix,
            point,
            exact,
            depth,
        } => {
            let (radix, stream) = parse_point(point, *radix)?;
            let use_exact = *exact || (depth.is_none() && stream.value().is_some());
            if use_exact {
                let x = stream
                    .value()
                    .ok_or(Error::NeedsRationalValue { op: "eval --exact" })?;
                let value = eval::eval_exact(&x, radix)?;
                let body = json!({
                    "command": "eval",
                    "radix": radix.get(),
                    "point": stream.spec_string(),
                    "mode": "exact",
                    "value": ratio_json(&value),
                });
                let csv = format!("num,den\n{},{}\n", value.numer(), value.denom());
                finish(format, body, csv)
            } else {
                let depth = depth.unwrap_or(64);
                let enc = eval::eval_stream(&stream, depth)?;
                let body = json!({
                    "command": "eval",
                    "radix": radix.get(),
                    "point": stream.spec_string(),
                    "mode": "enclosure",
                    "depth": depth,
                    "enclosure": { "lo": ratio_json(&enc.lo), "hi": ratio_json(&enc.hi) },
                    "width": ratio_json(&enc.width()),
                });
                let csv = format!(
                    "lo_num,lo_den,hi_num,hi_den\n{},{},{},{}\n",
                    enc.lo.numer(),
                    enc.lo.denom(),
                    enc.hi.numer(),
                    enc.hi.denom()
                );
                finish(format, body, csv)
            }
        }
        CliCommand::Classify {
            radix,
            point,
            depth,
        } => {
            let (radix, stream) = parse_point(point, *radix)?;
            let class = stream.classify();
            let (left, right) = if class != PointClass::Generic || stream.value().is_some() {
                certify(&stream)?
            } else {
                heuristic_verdict(&stream, *depth)?
            };
            let body = json!({
                "command": "classify",
                "radix": radix.get(),
                "point": stream.spec_string(),
                "point_class": class,
                "left": left,
                "right": right,
            });
            finish(format, body, verdict_csv(&[&left, &right]))
        }
        CliCommand::Signs {
            radix,
            point,
            count,
        } => {
            let (radix, stream) = parse_point(point, *radix)?;
            let trace = derivative_signs(&stream, *count)?;
            let body = json!({
                "command": "signs",
                "radix": radix.get(),
                "point": stream.spec_string(),
                "count": count,
                "signs": trace.signs,
                "partial_sums": trace.partial_sums,
                "low_count": trace.low_count,
                "high_count": trace.high_count,
            });
            let mut csv = String::from("n,digit,sign,partial_sum\n");
            for (i, (&sign, &sum)) in trace.signs.iter().zip(&trace.partial_sums).enumerate() {
                let n = i as u64 + 1;
                csv.push_str(&format!("{n},{},{sign},{sum}\n", stream.digit_at(n)));
            }
            finish(format, body, csv)
        }
        CliCommand::Criterion {
            radix,
            point,
            side,
            sign,
            count,
        } => {
            let (radix, stream) = parse_point(point, *radix)?;
            let side = Side::from(*side);
            let sign = CriterionSign::from(*sign);
            let terms = criterion_sequence(&stream, side, sign, *count)?;
            let body = json!({
                "command": "criterion",
                "radix": radix.get(),
                "point": stream.spec_string(),
                "side": side,
                "sign": sign,
                "anchor_kind": derivative::anchor_kind(side, sign),
                "terms": terms,
            });
            let mut csv = String::from("anchor,sum_part,gap,value\n");
            for t in &terms {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    t.anchor, t.sum_part, t.gap, t.value
                ));
            }
            finish(format, body, csv)
        }
        CliCommand::Probe {
            radix,
            point,
            side,
            steps,
        } => {
            let (radix, stream) = parse_point(point, *radix)?;
            let side = Side::from(*side);
            let ladder = quotient_probe(&stream, side, *steps)?;
            let steps_json: Vec<Value> = ladder
                .iter()
                .map(|p| {
                    json!({
                        "h": ratio_json(&p.h),
                        "quotient": { "lo": ratio_json(&p.quotient.lo), "hi": ratio_json(&p.quotient.hi) },
                    })
                })
                .collect();
            let body = json!({
                "command": "probe",
                "radix": radix.get(),
                "point": stream.spec_string(),
                "side": side,
                "steps": steps_json,
            });
            let mut csv = String::from("h_num,h_den,lo_num,lo_den,hi_num,hi_den\n");
            for p in &ladder {
                csv.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    p.h.numer(),
                    p.h.denom(),
                    p.quotient.lo.numer(),
                    p.quotient.lo.denom(),
                    p.quotient.hi.numer(),
                    p.quotient.hi.denom()
                ));
            }
            finish(format, body, csv)
        }
        CliCommand::Fractal(sub) => dispatch_fractal(sub, format),
        CliCommand::Sample {
            radix,
            digits,
            samples,
            seed,
        } => {
            let r = Radix::new(*radix)?;
            let stats = fractal::sample_sign_sums(
                r,
                SampleConfig {
                    radix: *radix,
                    digits: *digits,
                    samples: *samples,
                    seed: *seed,
                },
            )?;
            let body = json!({
                "command": "sample",
                "radix": radix,
                "digits": digits,
                "samples": samples,
                "seed": seed,
                "mean": stats.mean,
                "variance": stats.variance,
                "tail_fractions": stats.tail_fractions,
            });
            let t = &stats.tail_fractions;
            let csv = format!(
                "radix,digits,samples,seed,mean,variance,tail2,tail3,tail4\n{},{},{},{},{},{},{},{},{}\n",
                radix, digits, samples, seed, stats.mean, stats.variance,
                t[0].fraction, t[1].fraction, t[2].fraction
            );
            finish(format, body, csv)
        }
    }
}

fn dispatch_fractal(command: &FractalCommand, format: OutputFormat) -> Result<String> {
    match command {
        FractalCommand::Enum { radix, level, sign } => {
            let r = Radix::new(*radix)?;
            let sign = DriftSign::from(*sign);
            let words = fractal::enumerate_words(*level, r, sign)?;
            let rendered: Vec<String> = words
                .numerators()
                .iter()
                .map(|&w| word_string(&words.word_digits(w), r))
                .collect();
            let body = json!({
                "command": "fractal_enum",
                "radix": r.get(),
                "level": level,
                "sign": sign,
                "count": words.count(),
                "words": rendered,
            });
            let mut csv = String::from("numerator,word\n");
            for (&w, text) in words.numerators().iter().zip(&rendered) {
                csv.push_str(&format!("{w},{text}\n"));
            }
            finish(format, body, csv)
        }
        FractalCommand::Ifs {
            radix,
            level,
            sign,
            depth,
        } => {
            let r = Radix::new(*radix)?;
            let sign = DriftSign::from(*sign);
            let set = fractal::ifs_approximation(*level, r, sign, *depth)?;
            let intervals: Vec<Value> = set
                .intervals()
                .iter()
                .map(|(lo, hi)| json!({ "lo": ratio_json(lo), "hi": ratio_json(hi) }))
                .collect();
            let body = json!({
                "command": "fractal_ifs",
                "radix": r.get(),
                "level": level,
                "sign": sign,
                "depth": depth,
                "count": set.count(),
                "piece_length": ratio_json(&set.piece_length()),
                "intervals": intervals,
            });
            let mut csv = String::from("lo_num,lo_den,hi_num,hi_den\n");
            for (lo, hi) in set.intervals() {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    lo.numer(),
                    lo.denom(),
                    hi.numer(),
                    hi.denom()
                ));
            }
            finish(format, body, csv)
        }
        FractalCommand::Dims { radix, level, sign } => {
            let r = Radix::new(*radix)?;
            let sign = DriftSign::from(*sign);
            let dims = fractal::dimension_bounds(*level, r, sign)?;
            let body = json!({
                "command": "fractal_dims",
                "radix": r.get(),
                "level": level,
                "sign": sign,
                "count": dims.count,
                "exact_ratio": dims.exact_ratio,
                "lemma_bound": dims.lemma_bound,
            });
            let csv = format!(
                "count,exact_ratio,lemma_bound\n{},{},{}\n",
                dims.count, dims.exact_ratio, dims.lemma_bound
            );
            finish(format, body, csv)
        }
        FractalCommand::Boxdim {
            radix,
            level,
            sign,
            depth,
            grid,
        } => {
            let r = Radix::new(*radix)?;
            let sign = DriftSign::from(*sign);
            let set = fractal::ifs_approximation(*level, r, sign, *depth)?;
            let counts = fractal::grid_box_counts(&set, grid)?;
            let slope = fractal::box_counting_slope(&set, grid)?;
            let grid_json: Vec<Value> = counts
                .iter()
                .map(|&(m, boxes)| json!({ "exponent": m, "boxes": boxes }))
                .collect();
            let body = json!({
                "command": "fractal_boxdim",
                "radix": r.get(),
                "level": level,
                "sign": sign,
                "depth": depth,
                "grid": grid_json,
                "slope": slope,
            });
            let mut csv = String::from("exponent,boxes,slope\n");
            for &(m, boxes) in &counts {
                csv.push_str(&format!("{m},{boxes},{slope}\n"));
            }
            finish(format, body, csv)
        }
        FractalCommand::Witness {
            radix,
            level,
            sign,
            address,
        } => {
            let r = Radix::new(*radix)?;
            let sign = DriftSign::from(*sign);
            let words: Vec<Vec<u32>> = address
                .iter()
                .map(|w| parse_address_word(w, r))
                .collect::<Result<_>>()?;
            let stream = fractal::witness_stream(*level, r, sign, &words)?;
            let (left, right) = certify(&stream)?;
            let body = json!({
                "command": "fractal_witness",
                "radix": r.get(),
                "level": level,
                "sign": sign,
                "address": address,
                "stream": stream.spec_string(),
                "left": left,
                "right": right,
            });
            finish(format, body, verdict_csv(&[&left, &right]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> Result<String> {
        let cli = Cli::try_parse_from(args).expect("argument parse");
        run(cli.into_config())
    }

    #[test]
    fn eval_exact_document() {
        let doc = run_args(&[
            "takagi", "eval", "--radix", "2", "--point", "1/2", "--exact",
        ])
        .unwrap();
        let v: Value = serde_json::from_str(&doc).unwrap();
        assert_eq!(v["schema"], "1");
        assert_eq!(v["value"]["num"], "1");
        assert_eq!(v["value"]["den"], "2");
        assert_eq!(v["point"], "0.1(0)_2");
    }

    #[test]
    fn classify_sparse_document() {
        let doc = run_args(&[
            "takagi",
            "classify",
            "--radix",
            "3",
            "--point",
            "sparse:b=10,on=0,off=1",
            "--depth",
            "4",
        ])
        .unwrap();
        let v: Value = serde_json::from_str(&doc).unwrap();
        assert_eq!(v["left"]["result"], "plus_infinity");
        assert_eq!(v["right"]["result"], "not_infinite");
        assert_eq!(v["left"]["certainty"]["kind"], "heuristic");
        assert_eq!(v["point_class"], "generic");
    }

    #[test]
    fn dims_document() {
        let doc = run_args(&["takagi", "fractal", "dims", "--radix", "3", "--n", "3"]).unwrap();
        let v: Value = serde_json::from_str(&doc).unwrap();
        assert_eq!(v["count"], 8);
        let ratio = v["exact_ratio"].as_f64().unwrap();
        assert!((ratio - 0.6309).abs() < 1e-3);
    }

    #[test]
    fn determinism() {
        let args = [
            "takagi",
            "sample",
            "--radix",
            "2",
            "--digits",
            "50",
            "--samples",
            "500",
            "--seed",
            "3",
        ];
        assert_eq!(run_args(&args).unwrap(), run_args(&args).unwrap());
    }

    #[test]
    fn csv_outputs() {
        let doc = run_args(&[
            "takagi", "--format", "csv", "eval", "--radix", "2", "--point", "1/2", "--exact",
        ])
        .unwrap();
        assert_eq!(doc, "num,den\n1,2\n");

        let doc = run_args(&[
            "takagi", "--format", "csv", "fractal", "ifs", "--radix", "2", "--n", "3", "--depth",
            "1",
        ])
        .unwrap();
        let mut lines = doc.lines();
        assert_eq!(lines.next(), Some("lo_num,lo_den,hi_num,hi_den"));
        assert_eq!(lines.next(), Some("1,8,1,4"));
    }

    #[test]
    fn point_round_trip_in_documents() {
        for spec in ["1/3", "0.(01)_2", "2/3"] {
            let doc =
                run_args(&["takagi", "eval", "--radix", "2", "--point", spec, "--exact"]).unwrap();
            let v: Value = serde_json::from_str(&doc).unwrap();
            let echoed = v["point"].as_str().unwrap();
            let radix = Radix::new(2).unwrap();
            let original = DigitStream::parse(spec, radix).unwrap();
            let reparsed = DigitStream::parse(echoed, radix).unwrap();
            assert_eq!(original, reparsed);
        }
    }

    #[test]
    fn error_documents() {
        let e = Error::RadixTooSmall(1);
        let doc = error_document(&e);
        let v: Value = serde_json::from_str(&doc).unwrap();
        assert_eq!(v["error"]["kind"], "radix_too_small");
        assert_eq!(e.exit_code(), 2);

        let cap = Error::IntervalCapExceeded {
            count: 100,
            cap: 10,
        };
        assert_eq!(cap.exit_code(), 1);
    }

    #[test]
    fn witness_subcommand() {
        let doc = run_args(&[
            "takagi",
            "fractal",
            "witness",
            "--radix",
            "2",
            "--n",
            "3",
            "--address",
            "001,010",
        ])
        .unwrap();
        let v: Value = serde_json::from_str(&doc).unwrap();
        assert_eq!(v["left"]["result"], "plus_infinity");
        assert_eq!(v["right"]["result"], "plus_infinity");
        assert_eq!(v["stream"], "0.(001010)_2");
    }
}
