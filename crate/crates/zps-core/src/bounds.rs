//! Minimum distances and the two Singleton-type classifications.
//!
//! For a nonzero code with minimum Lee distance `d`, both bounds share the
//! left-hand side `⌊(d-1)/p^(s-1)⌋`:
//!
//! * the size-side bound `⌊(d-1)/p^(s-1)⌋ ≤ n − log_{p^s}|C|`; codes
//!   meeting it with equality are *MLDS*;
//! * the rank-side bound `⌊(d-1)/p^(s-1)⌋ ≤ n − rank(C)`; codes meeting it
//!   with equality are *MLDR*.
//!
//! Both slacks are nonnegative for every linear code; a negative slack can
//! only come from an implementation fault and is reported as an internal
//! error.

use crate::code::LinearCode;
use crate::error::Error;
use crate::lee::{hamming_weight, lee_weight_vec};
use crate::rational::Rational;
use crate::ring::RingVector;

/// Distances, slacks, and classification flags for one code.
#[derive(Clone, Debug)]
pub struct BoundReport {
    d_lee: u64,
    d_hamming: u64,
    witness: RingVector,
    log_size: Rational,
    lhs: u64,
    mlds_slack: Rational,
    mldr_slack: u64,
    is_mlds: bool,
    is_mldr: bool,
}

impl BoundReport {
    pub fn d_lee(&self) -> u64 {
        self.d_lee
    }

    pub fn d_hamming(&self) -> u64 {
        self.d_hamming
    }

    /// A minimum-Lee-weight nonzero codeword (first in enumeration order).
    pub fn witness(&self) -> &RingVector {
        &self.witness
    }

    /// `log_{p^s}|C|`, exact.
    pub fn log_size(&self) -> Rational {
        self.log_size
    }

    /// `⌊(d_lee - 1)/p^(s-1)⌋`, shared by both bounds.
    pub fn lhs(&self) -> u64 {
        self.lhs
    }

    pub fn mlds_slack(&self) -> Rational {
        self.mlds_slack
    }

    pub fn mldr_slack(&self) -> u64 {
        self.mldr_slack
    }

    pub fn is_mlds(&self) -> bool {
        self.is_mlds
    }

    pub fn is_mldr(&self) -> bool {
        self.is_mldr
    }
}

/// One enumeration sweep collecting both minima and the Lee witness.
fn distance_sweep(code: &LinearCode, max_enum: u64) -> Result<(u64, RingVector, u64), Error> {
    if code.is_zero_code() {
        return Err(Error::ZeroCode);
    }
    let mut best_lee: Option<(u64, RingVector)> = None;
    let mut best_ham = u64::MAX;
    for word in code.enumerate(max_enum)? {
        if word.is_zero() {
            continue;
        }
        let wl = lee_weight_vec(&word);
        if best_lee.as_ref().is_none_or(|(b, _)| wl < *b) {
            best_lee = Some((wl, word.clone()));
        }
        best_ham = best_ham.min(hamming_weight(word.entries()));
    }
    let (d_lee, witness) = best_lee.expect("nonzero code has nonzero words");
    Ok((d_lee, witness, best_ham))
}

/// Minimum Lee weight over nonzero codewords (equals the minimum Lee
/// distance by linearity) plus the first witness in enumeration order.
pub fn min_lee_distance(code: &LinearCode, max_enum: u64) -> Result<(u64, RingVector), Error> {
    let (d, w, _) = distance_sweep(code, max_enum)?;
    Ok((d, w))
}

/// Minimum Hamming weight over nonzero codewords.
pub fn min_hamming_distance(code: &LinearCode, max_enum: u64) -> Result<u64, Error> {
    let (_, _, d) = distance_sweep(code, max_enum)?;
    Ok(d)
}

/// Computes distances and classifies the code against both bounds.
pub fn classify(code: &LinearCode, max_enum: u64) -> Result<BoundReport, Error> {
    let (d_lee, witness, d_hamming) = distance_sweep(code, max_enum)?;
    let n = code.length() as i64;
    let half = code.ring().half_power();
    let lhs = (d_lee - 1) / half;
    let log_size = code.code_type().log_size();

    let mlds_slack = Rational::from_integer(n) - log_size - Rational::from_integer(lhs as i64);
    if mlds_slack.is_negative() {
        return Err(Error::Internal {
            check: "mlds-bound",
            details: alloc::format!(
                "n={} log_size={} lhs={} gives negative slack",
                n,
                log_size,
                lhs
            ),
        });
    }
    let mldr_rhs = n - code.rank() as i64;
    let mldr_slack = mldr_rhs - lhs as i64;
    if mldr_slack < 0 {
        return Err(Error::Internal {
            check: "mldr-bound",
            details: alloc::format!("n={} rank={} lhs={} gives negative slack", n, code.rank(), lhs),
        });
    }

    Ok(BoundReport {
        d_lee,
        d_hamming,
        witness,
        log_size,
        lhs,
        is_mlds: mlds_slack.is_zero(),
        is_mldr: mldr_slack == 0,
        mlds_slack,
        mldr_slack: mldr_slack as u64,
    })
}
