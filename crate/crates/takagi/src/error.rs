use thiserror::Error;

/// Errors produced by the library.
///
/// Two broad families matter to the CLI: validation errors (bad input,
/// wrong kind of point, malformed grammar) map to exit code 2, while
/// resource-cap errors (cycle cap, interval cap, horizon cap) map to
/// exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("radix must be at least 2, got {0}")]
    RadixTooSmall(u32),

    #[error("digit {digit} out of range for radix {radix}")]
    DigitOutOfRange { digit: u32, radix: u32 },

    #[error("period word must be nonempty")]
    EmptyPeriod,

    #[error("generator base must be at least 2, got {0}")]
    GeneratorBaseTooSmall(u64),

    #[error("point {0} lies outside [0, 1]")]
    PointOutOfRange(String),

    #[error("cannot parse point spec `{spec}`: {reason}")]
    ParsePoint { spec: String, reason: String },

    #[error("point spec radix {spec_radix} does not match requested radix {radix}")]
    RadixMismatch { spec_radix: u32, radix: u32 },

    #[error("operation `{op}` requires a point outside the r-adic and midpoint sets")]
    PointNotGeneric { op: &'static str },

    #[error("digit tail is constantly the middle digit; the next non-middle digit does not exist")]
    MiddleDigitTail,

    #[error("index sequence `{kind}` has only finitely many members for this stream")]
    FinitelyManyIndices { kind: &'static str },

    #[error("index position overflows 64 bits (requested term {count})")]
    PositionOverflow { count: u64 },

    #[error("operation `{op}` requires a stream with an exact rational value")]
    NeedsRationalValue { op: &'static str },

    #[error("generator streams are not certifiable; use the heuristic verdict")]
    NotCertifiable,

    #[error("ladder is degenerate: no valid steps on this side from {point}")]
    DegenerateLadder { point: String },

    #[error("cycle detection exceeded the cap of {cap} states")]
    CycleCapExceeded { cap: u64 },

    #[error("interval count {count} exceeds the cap of {cap}")]
    IntervalCapExceeded { count: u128, cap: u64 },

    #[error("heuristic digit horizon {horizon} exceeds the cap of {cap}; lower the depth")]
    HorizonCapExceeded { horizon: u64, cap: u64 },

    #[error("word length must be an odd integer >= 3, got {0}")]
    WordLengthInvalid(u64),

    #[error("word alphabet r^n = {radix}^{level} does not fit in 64 bits")]
    WordSpaceTooLarge { radix: u32, level: u64 },

    #[error("address letter {letter} is not part of the word set")]
    AddressLetterInvalid { letter: String },

    #[error("box counting needs at least two grid exponents")]
    NotEnoughGridExponents,

    #[error("grid boxes of size r^-{exponent} are finer than the interval length")]
    GridTooFine { exponent: u32 },

    #[error("interval set is empty")]
    EmptyIntervalSet,

    #[error("sample count must be at least 1")]
    NoSamples,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI maps this error to: 1 for resource
    /// caps, 2 for validation and parse errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CycleCapExceeded { .. }
            | Error::IntervalCapExceeded { .. }
            | Error::HorizonCapExceeded { .. }
            | Error::PositionOverflow { .. }
            | Error::WordSpaceTooLarge { .. }
            | Error::Io(_) => 1,
            _ => 2,
        }
    }

    /// Short machine-readable kind tag used in the CLI error document.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RadixTooSmall(_) => "radix_too_small",
            Error::DigitOutOfRange { .. } => "digit_out_of_range",
            Error::EmptyPeriod => "empty_period",
            Error::GeneratorBaseTooSmall(_) => "generator_base_too_small",
            Error::PointOutOfRange(_) => "point_out_of_range",
            Error::ParsePoint { .. } => "parse_point",
            Error::RadixMismatch { .. } => "radix_mismatch",
            Error::PointNotGeneric { .. } => "point_not_generic",
            Error::MiddleDigitTail => "middle_digit_tail",
            Error::FinitelyManyIndices { .. } => "finitely_many_indices",
            Error::PositionOverflow { .. } => "position_overflow",
            Error::NeedsRationalValue { .. } => "needs_rational_value",
            Error::NotCertifiable => "not_certifiable",
            Error::DegenerateLadder { .. } => "degenerate_ladder",
            Error::CycleCapExceeded { .. } => "cycle_cap_exceeded",
            Error::IntervalCapExceeded { .. } => "interval_cap_exceeded",
            Error::HorizonCapExceeded { .. } => "horizon_cap_exceeded",
            Error::WordLengthInvalid(_) => "word_length_invalid",
            Error::WordSpaceTooLarge { .. } => "word_space_too_large",
            Error::AddressLetterInvalid { .. } => "address_letter_invalid",
            Error::NotEnoughGridExponents => "not_enough_grid_exponents",
            Error::GridTooFine { .. } => "grid_too_fine",
            Error::EmptyIntervalSet => "empty_interval_set",
            Error::NoSamples => "no_samples",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
