//! The extended Lee weight on `Z_{p^s}` and derived weight functions.
//!
//! The scalar weight is
//!
//! ```text
//!           { x            if 0 <= x <= p^(s-1)
//! w_L(x) =  { p^(s-1)      if p^(s-1) <= x <= p^s - p^(s-1)
//!           { p^s - x      if p^s - p^(s-1) < x < p^s
//! ```
//!
//! equivalently `min(x, p^(s-1), p^s - x)`: the usual Lee profile, clipped at
//! `p^(s-1)`. For `s = 1` it collapses to the Hamming weight on `Z_p`.
//! Vector weights sum coordinate weights; the Lee distance is the weight of
//! the difference.

use alloc::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Error;
use crate::rational::Rational;
use crate::ring::{Residue, RingParams, RingVector};

/// The extended Lee weight of a scalar: `min(x, p^(s-1), p^s - x)`.
///
/// ```
/// use zps_core::ring::RingParams;
/// use zps_core::lee::lee_weight;
///
/// let z9 = RingParams::new(3, 2).unwrap();
/// assert_eq!(lee_weight(z9.residue(4)), 3);
/// assert_eq!(lee_weight(z9.residue(7)), 2);
/// ```
pub fn lee_weight(x: Residue) -> u64 {
    let v = x.value();
    let ring = x.ring();
    v.min(ring.half_power()).min(ring.modulus() - v)
}

/// Sum of the coordinate Lee weights.
pub fn lee_weight_vec(v: &RingVector) -> u64 {
    v.iter_residues().map(lee_weight).sum()
}

/// Lee distance between two vectors: `w_L(u - v)`.
pub fn lee_distance(u: &RingVector, v: &RingVector) -> Result<u64, Error> {
    Ok(lee_weight_vec(&u.sub(v)?))
}

/// Number of nonzero coordinates, for any entry type with a zero.
pub fn hamming_weight<T: Zero>(v: &[T]) -> u64 {
    v.iter().filter(|x| !x.is_zero()).count() as u64
}

/// Hamming distance between two vectors over the same ring.
pub fn hamming_distance(u: &RingVector, v: &RingVector) -> Result<u64, Error> {
    Ok(hamming_weight(u.sub(v)?.entries()))
}

/// The complete weight of a vector: how often each residue occurs.
/// Only residues that actually occur are listed.
pub fn complete_weight(v: &RingVector) -> BTreeMap<u64, u64> {
    let mut counts = BTreeMap::new();
    for e in v.entries() {
        *counts.entry(*e).or_insert(0u64) += 1;
    }
    counts
}

/// A general weight on a ring: a rational weight `a_r >= 0` per residue,
/// with `a_0 = 0` and `a_r > 0` for `r != 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightAssignment {
    ring: RingParams,
    weights: BTreeMap<u64, Rational>,
}

impl WeightAssignment {
    /// Validates and wraps an assignment. The entry for residue 0 may be
    /// omitted (it is implicitly 0) but must be 0 if present; all other
    /// entries must be strictly positive.
    pub fn new(
        ring: RingParams,
        weights: BTreeMap<u64, Rational>,
    ) -> Result<Self, Error> {
        for (&r, &w) in &weights {
            if r == 0 {
                if !w.is_zero() {
                    return Err(Error::InvalidWeight { residue: 0 });
                }
            } else if w.is_negative() || w.is_zero() {
                return Err(Error::InvalidWeight { residue: r });
            }
        }
        Ok(WeightAssignment { ring, weights })
    }

    /// The assignment realizing the extended Lee weight.
    pub fn lee(ring: RingParams) -> Self {
        let weights = ring
            .elements()
            .map(|x| (x.value(), Rational::from_integer(lee_weight(x) as i64)))
            .collect();
        WeightAssignment { ring, weights }
    }

    /// The assignment realizing the Hamming weight (1 for every nonzero
    /// residue).
    pub fn hamming(ring: RingParams) -> Self {
        let weights = ring
            .elements()
            .map(|x| {
                let w = if x.is_zero() { 0 } else { 1 };
                (x.value(), Rational::from_integer(w))
            })
            .collect();
        WeightAssignment { ring, weights }
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    /// The weight of a single residue; `None` when no entry exists (a
    /// missing entry for 0 counts as 0).
    pub fn weight_of(&self, r: u64) -> Option<Rational> {
        match self.weights.get(&r) {
            Some(w) => Some(*w),
            None if r == 0 => Some(Rational::zero()),
            None => None,
        }
    }

    /// The maximum weight `A = max_r a_r`, the scale factor of general
    /// Singleton-type bounds.
    pub fn max_weight(&self) -> Rational {
        self.weights
            .values()
            .copied()
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// The general weight of a vector: `sum_r a_r * n_r(v)` over the complete
/// weight `n_r`. Errors when a residue occurs that has no assigned weight.
pub fn general_weight(
    v: &RingVector,
    assignment: &WeightAssignment,
) -> Result<Rational, Error> {
    if v.ring() != assignment.ring() {
        return Err(Error::MixedRings);
    }
    let mut total = Rational::zero();
    for (r, count) in complete_weight(v) {
        let w = assignment.weight_of(r).ok_or(Error::MissingWeight(r))?;
        total = total + w * Rational::from_integer(count as i64);
    }
    Ok(total)
}
