//! Linear codes over the integers modulo a prime power `p^s`.
//!
//! The crate provides the algebra needed to analyze such codes under the
//! extended Lee weight and the associated Gray isometry into `p`-ary Hamming
//! space:
//!
//! * [`ring`] — arithmetic in `Z_{p^s}`: residues, units, additive orders,
//!   p-adic valuations, and the division-algorithm decomposition
//!   `x = q·p^(s-1) + r`.
//! * [`lee`] — the extended Lee weight, Lee distances, Hamming and complete
//!   weights, and general (rational) weight assignments.
//! * [`gray`] — the Gray map from `Z_{p^s}` into `F_p^(p^(s-1))`, its
//!   extension to vectors, image sets, and exact preimages.
//! * [`code`] — generator matrices, the block-triangular standard form, code
//!   types, deterministic codeword enumeration, and membership tests.
//! * [`dual`] — inner products, dual codes built from the standard form,
//!   self-orthogonality and self-duality predicates.
//! * [`bounds`] — minimum distances and the Singleton-type MLDS/MLDR
//!   classification with exact rational slacks.
//! * [`kernel`] — kernels of Gray images, sandwich subcode/supercode bounds,
//!   kernel-dimension restrictions, and independence tests.
//! * [`report`] — one-stop analysis producing a serializable report.
//! * [`search`] — deterministic exhaustive/random searches for codes with
//!   requested properties, and the fixed test corpus.
//!
//! Everything is exact integer or rational arithmetic; no floating point is
//! used anywhere. The crate is `no_std` (with `alloc`); IO and file formats
//! live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod code;
pub mod dual;
pub mod error;
pub mod gray;
pub mod kernel;
pub mod lee;
pub mod rational;
pub mod report;
pub mod ring;
pub mod search;

pub use error::Error;
pub use rational::Rational;
pub use ring::{Residue, RingParams, RingVector};
