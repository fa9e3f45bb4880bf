//! Exact arithmetic for the Takagi–Van der Waerden family
//! `f_r(x) = sum_n r^-n phi(r^n x)`, with `phi` the distance to the
//! nearest integer.
//!
//! The crate works with base-`r` digit streams instead of floating
//! point: rational points get exact values and exact difference
//! quotients, generator points get certified enclosures. On top of the
//! evaluator sit the digit-level classification of one-sided infinite
//! derivatives (certified for eventually periodic points, trend-based
//! for generator points) and the self-similar interval constructions
//! whose box-counting dimension approaches one.
//!
//! ```
//! use takagi::{eval, Radix, Rational};
//!
//! let r = Radix::new(2)?;
//! let third = Rational::new(1.into(), 3.into());
//! assert_eq!(eval::eval_exact(&third, r)?, Rational::new(2.into(), 3.into()));
//! # Ok::<(), takagi::Error>(())
//! ```
//!
//! The `takagi` binary exposes every operation as a subcommand with
//! JSON and CSV output; `examples/` walks through each capability.

pub mod cli;
pub mod derivative;
pub mod digits;
pub mod error;
pub mod eval;
pub mod fractal;
pub mod radix;
pub mod rational;
pub mod rng;

pub use digits::{DigitStream, PointClass, TailConvention};
pub use error::{Error, Result};
pub use eval::Enclosure;
pub use radix::Radix;
pub use rational::Rational;

/// Cap on cycle lengths when expanding rationals or summing the series.
pub const CYCLE_CAP: u64 = 1_000_000;

/// Cap on the number of intervals an IFS approximation may produce.
pub const INTERVAL_CAP: u64 = 10_000_000;

/// Cap on the digit horizon scanned by heuristic verdicts.
pub const HORIZON_CAP: u64 = 1_000_000;
