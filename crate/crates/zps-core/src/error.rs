//! Crate-wide error type.
//!
//! Limit overruns and malformed inputs are ordinary recoverable errors;
//! [`Error::Internal`] marks a broken internal invariant (a mathematical
//! guarantee that failed to hold) and is surfaced by the CLI with a distinct
//! exit code.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Ring construction was given a composite or unit base.
    NotPrime(u64),
    /// Ring construction was given exponent zero.
    ZeroExponent,
    /// `p^s` exceeds the supported range (must fit in 32 bits so products of
    /// residues never overflow 64-bit arithmetic).
    ModulusOverflow { p: u64, s: u32 },
    /// Two operands belong to different rings.
    MixedRings,
    /// Vector operands of different lengths.
    LengthMismatch { left: usize, right: usize },
    /// A generator row does not match the declared length.
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    /// An operation that needs at least one vector received none.
    EmptyInput,
    /// Codes of length zero are not supported.
    ZeroLength,
    /// Minimum distance of the zero code is undefined.
    ZeroCode,
    /// The code has more codewords than the enumeration limit allows.
    /// `size` is `None` when the cardinality overflows 128 bits.
    EnumerationLimit { size: Option<u128>, limit: u64 },
    /// The code is too large for a quadratic (all-pairs) analysis.
    KernelLimit { size: Option<u128>, limit: u64 },
    /// The kernel-dimension restriction is only defined for s >= 2.
    KernelBoundsScope { s: u32 },
    /// A general weight assignment has no entry for a residue that occurs.
    MissingWeight(u64),
    /// A weight assignment is invalid (zero must weigh 0, others > 0).
    InvalidWeight { residue: u64 },
    /// A requested code type does not fit the ring/length.
    UnsatisfiableType(String),
    /// Exhaustive search space exceeds the hard cap.
    CandidateSpaceTooLarge { count: u128, cap: u64 },
    /// Search budget must be at least 1.
    InvalidBudget,
    /// A mathematical invariant the library guarantees was violated.
    Internal { check: &'static str, details: String },
}

impl Error {
    /// True for errors that indicate a bug in the library rather than a
    /// recoverable condition; the CLI maps these to exit code 2.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroExponent => write!(f, "exponent s must be at least 1"),
            Error::ModulusOverflow { p, s } => {
                write!(f, "{p}^{s} exceeds the supported modulus range (2^32)")
            }
            Error::MixedRings => write!(f, "operands belong to different rings"),
            Error::LengthMismatch { left, right } => {
                write!(f, "vector lengths differ: {left} vs {right}")
            }
            Error::RaggedRow {
                row,
                expected,
                found,
            } => write!(
                f,
                "row {row} has {found} entries, expected {expected}"
            ),
            Error::EmptyInput => write!(f, "at least one vector is required"),
            Error::ZeroLength => write!(f, "codes of length zero are not supported"),
            Error::ZeroCode => write!(f, "the zero code has no nonzero codeword"),
            Error::EnumerationLimit { size, limit } => match size {
                Some(n) => write!(f, "code has {n} codewords, enumeration limit is {limit}"),
                None => write!(f, "code size exceeds 2^128, enumeration limit is {limit}"),
            },
            Error::KernelLimit { size, limit } => match size {
                Some(n) => write!(
                    f,
                    "code has {n} codewords, limit for quadratic analyses is {limit}"
                ),
                None => write!(
                    f,
                    "code size exceeds 2^128, limit for quadratic analyses is {limit}"
                ),
            },
            Error::KernelBoundsScope { s } => {
                write!(f, "kernel dimension bounds require s >= 2, got s = {s}")
            }
            Error::MissingWeight(r) => {
                write!(f, "weight assignment has no entry for residue {r}")
            }
            Error::InvalidWeight { residue } => write!(
                f,
                "invalid weight for residue {residue}: zero must weigh 0, all others must be positive"
            ),
            Error::UnsatisfiableType(msg) => write!(f, "unsatisfiable code type: {msg}"),
            Error::CandidateSpaceTooLarge { count, cap } => write!(
                f,
                "exhaustive candidate space has {count} matrices, cap is {cap}"
            ),
            Error::InvalidBudget => write!(f, "search budget must be at least 1"),
            Error::Internal { check, details } => {
                write!(f, "internal invariant violated ({check}): {details}")
            }
        }
    }
}

impl core::error::Error for Error {}
