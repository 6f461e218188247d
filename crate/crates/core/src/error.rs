//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors surfaced by fallible operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input string did not parse (config strings, rationals).
    Parse(String),
    /// Series inversion of a series with no invertible leading term.
    NonInvertibleSeries,
    /// Zero input where a nonzero value is required.
    ZeroInput(&'static str),
    /// Cyclotomic order promotion would exceed the configured bound.
    OrderOverflow { requested: u64, bound: u64 },
    /// Character parity incompatible with the requested weight.
    ParityMismatch { weight: i64 },
    /// A requested local component `p` does not divide the conductor.
    NotLocalPrime { p: u64, conductor: u64 },
    /// Eta-quotient integrality or holomorphy constraint violated.
    InvalidEtaQuotient(String),
    /// Preset failed validation against its declared expectations.
    PresetValidation(String),
    /// Bounded search exhausted without a result.
    SearchFailed { bound: i64 },
    /// An operation needs more known coefficients than are available.
    PrecisionShortfall { needed: i64, have: i64 },
    /// Hecke index not coprime to the level.
    HeckeIndexNotCoprime { r: u64, level: u64 },
    /// Differential operator applied at a positive weight.
    PositiveWeight { weight: i64 },
    /// Discriminant-form construction failed an internal consistency check.
    DiscriminantForm(String),
    /// Linear solve found the pool inconsistent with the request.
    PoolRankDeficient(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::NonInvertibleSeries => write!(f, "series has no invertible leading coefficient"),
            Error::ZeroInput(what) => write!(f, "zero input rejected: {what}"),
            Error::OrderOverflow { requested, bound } => {
                write!(f, "cyclotomic order {requested} exceeds bound {bound}")
            }
            Error::ParityMismatch { weight } => {
                write!(f, "character parity does not match weight {weight}")
            }
            Error::NotLocalPrime { p, conductor } => {
                write!(f, "{p} is not a prime divisor of the conductor {conductor}")
            }
            Error::InvalidEtaQuotient(s) => write!(f, "invalid eta quotient: {s}"),
            Error::PresetValidation(s) => write!(f, "preset validation failed: {s}"),
            Error::SearchFailed { bound } => {
                write!(f, "bounded search failed (exponent bound {bound})")
            }
            Error::PrecisionShortfall { needed, have } => {
                write!(f, "insufficient precision: need {needed}, have {have}")
            }
            Error::HeckeIndexNotCoprime { r, level } => {
                write!(
                    f,
                    "T({r}) is not defined on sign-vector subspaces of level {level}: \
                     the index must be coprime to the level"
                )
            }
            Error::PositiveWeight { weight } => {
                write!(f, "operator requires weight <= 0, got {weight}")
            }
            Error::DiscriminantForm(s) => write!(f, "discriminant form: {s}"),
            Error::PoolRankDeficient(s) => write!(f, "pool rank deficiency: {s}"),
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
