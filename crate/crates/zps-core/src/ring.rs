//! Arithmetic in the residue ring `Z_{p^s}` for a prime `p` and `s >= 1`.
//!
//! Residues are kept canonical (in `0..p^s`) as `u64` values. The modulus is
//! capped at `2^32` so that a product of two residues never overflows 64-bit
//! arithmetic. Every scalar and vector carries its ring so that accidental
//! cross-ring operations are caught instead of silently producing garbage.

use alloc::vec::Vec;

use crate::error::Error;

/// Largest supported modulus: `p^s` must not exceed `2^32` so that products
/// of canonical residues fit in `u64`.
pub const MAX_MODULUS: u64 = 1 << 32;

/// The ring `Z_{p^s}`: a prime `p`, an exponent `s >= 1`, and the derived
/// powers used throughout (`p^s` and `p^(s-1)`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RingParams {
    p: u64,
    s: u32,
    modulus: u64,
    half_power: u64,
}

impl RingParams {
    /// Builds `Z_{p^s}`, validating that `p` is prime, `s >= 1`, and
    /// `p^s <= 2^32`.
    ///
    /// ```
    /// use zps_core::ring::RingParams;
    ///
    /// let z9 = RingParams::new(3, 2).unwrap();
    /// assert_eq!(z9.modulus(), 9);
    /// assert!(RingParams::new(6, 1).is_err());
    /// ```
    pub fn new(p: u64, s: u32) -> Result<Self, Error> {
        if s == 0 {
            return Err(Error::ZeroExponent);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let modulus = checked_pow(p, s).filter(|&m| m <= MAX_MODULUS);
        let modulus = match modulus {
            Some(m) => m,
            None => return Err(Error::ModulusOverflow { p, s }),
        };
        // s >= 1, so p^(s-1) exists and divides p^s.
        let half_power = modulus / p;
        Ok(RingParams {
            p,
            s,
            modulus,
            half_power,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `p^s`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `p^(s-1)`, the radius of the flat top of the Lee weight profile.
    pub fn half_power(&self) -> u64 {
        self.half_power
    }

    /// Canonicalizes an arbitrary integer into this ring.
    pub fn residue(&self, value: u64) -> Residue {
        Residue {
            ring: *self,
            value: value % self.modulus,
        }
    }

    pub fn zero(&self) -> Residue {
        self.residue(0)
    }

    pub fn one(&self) -> Residue {
        self.residue(1)
    }

    /// Canonicalizes a slice of integers into a vector over this ring.
    pub fn vector(&self, values: &[u64]) -> RingVector {
        RingVector {
            ring: *self,
            entries: values.iter().map(|&v| v % self.modulus).collect(),
        }
    }

    pub fn zero_vector(&self, n: usize) -> RingVector {
        RingVector {
            ring: *self,
            entries: alloc::vec![0; n],
        }
    }

    /// All residues of the ring in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = Residue> + '_ {
        (0..self.modulus).map(move |v| self.residue(v))
    }
}

/// All rings `Z_{p^s}` with modulus at most `cap`, ordered by `(p, s)`.
/// Handy for exhaustive regression sweeps over every small ring.
pub fn rings_with_modulus_up_to(cap: u64) -> Vec<RingParams> {
    let mut out = Vec::new();
    for p in 2..=cap {
        if !is_prime(p) {
            continue;
        }
        let mut s = 1;
        while let Ok(ring) = RingParams::new(p, s) {
            if ring.modulus() > cap {
                break;
            }
            out.push(ring);
            s += 1;
        }
    }
    out
}

/// A canonical residue of a specific ring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Residue {
    ring: RingParams,
    value: u64,
}

/// p-adic valuation of a residue: the exponent of the largest power of `p`
/// dividing it, with `Infinite` reserved for zero.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    /// The finite value, if any.
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

/// The division-algorithm split `x = q·p^(s-1) + r` with `0 <= q < p` and
/// `0 <= r < p^(s-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub q: u64,
    pub r: u64,
}

impl Residue {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check_same_ring(&self, other: &Residue) {
        assert_eq!(
            self.ring, other.ring,
            "operands belong to different rings"
        );
    }

    /// `self + other` mod `p^s`. Panics if the operands belong to different
    /// rings.
    pub fn add(self, other: Residue) -> Residue {
        self.check_same_ring(&other);
        let m = self.ring.modulus;
        Residue {
            ring: self.ring,
            value: (self.value + other.value) % m,
        }
    }

    /// `self - other` mod `p^s`. Panics on mixed rings.
    pub fn sub(self, other: Residue) -> Residue {
        self.check_same_ring(&other);
        let m = self.ring.modulus;
        Residue {
            ring: self.ring,
            value: (self.value + m - other.value) % m,
        }
    }

    /// `self * other` mod `p^s`. Panics on mixed rings.
    ///
    /// Residues are below `2^32`, so the product fits in `u64`.
    pub fn mul(self, other: Residue) -> Residue {
        self.check_same_ring(&other);
        let m = self.ring.modulus;
        Residue {
            ring: self.ring,
            value: (self.value * other.value) % m,
        }
    }

    /// The additive inverse.
    pub fn neg(self) -> Residue {
        let m = self.ring.modulus;
        Residue {
            ring: self.ring,
            value: (m - self.value) % m,
        }
    }

    /// True iff the residue is invertible, i.e. not divisible by `p`.
    ///
    /// ```
    /// use zps_core::ring::RingParams;
    ///
    /// let z9 = RingParams::new(3, 2).unwrap();
    /// assert!(z9.residue(4).is_unit());
    /// assert!(!z9.residue(6).is_unit());
    /// assert!(!z9.residue(0).is_unit());
    /// ```
    pub fn is_unit(&self) -> bool {
        self.value % self.ring.p != 0
    }

    /// The multiplicative inverse, when the residue is a unit.
    pub fn inverse(&self) -> Option<Residue> {
        if !self.is_unit() {
            return None;
        }
        let inv = mod_inverse(self.value, self.ring.modulus);
        Some(Residue {
            ring: self.ring,
            value: inv,
        })
    }

    /// The exponent of the largest power of `p` dividing the residue;
    /// zero has infinite valuation.
    pub fn valuation(&self) -> Valuation {
        if self.value == 0 {
            return Valuation::Infinite;
        }
        let mut v = self.value;
        let mut k = 0;
        while v % self.ring.p == 0 {
            v /= self.ring.p;
            k += 1;
        }
        Valuation::Finite(k)
    }

    /// The additive order: the least `k >= 1` with `k·x = 0`. This is
    /// `p^(s - v)` for a residue of valuation `v`, and 1 for zero.
    pub fn additive_order(&self) -> u64 {
        match self.valuation() {
            Valuation::Infinite => 1,
            Valuation::Finite(v) => {
                // v < s for a nonzero residue, so the exponent is positive.
                checked_pow(self.ring.p, self.ring.s - v)
                    .expect("order divides the modulus")
            }
        }
    }

    /// Splits the residue as `q·p^(s-1) + r` with `0 <= q < p` and
    /// `0 <= r < p^(s-1)`.
    ///
    /// ```
    /// use zps_core::ring::RingParams;
    ///
    /// let z9 = RingParams::new(3, 2).unwrap();
    /// let d = z9.residue(7).decompose();
    /// assert_eq!((d.q, d.r), (2, 1));
    /// ```
    pub fn decompose(&self) -> Decomposition {
        Decomposition {
            q: self.value / self.ring.half_power,
            r: self.value % self.ring.half_power,
        }
    }
}

impl core::ops::Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        Residue::add(self, rhs)
    }
}

impl core::ops::Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        Residue::sub(self, rhs)
    }
}

impl core::ops::Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        Residue::mul(self, rhs)
    }
}

impl core::ops::Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue::neg(self)
    }
}

/// A tuple of canonical residues over one ring.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RingVector {
    ring: RingParams,
    entries: Vec<u64>,
}

impl RingVector {
    /// Wraps pre-canonical entries; reduces anything out of range.
    pub fn new(ring: RingParams, values: Vec<u64>) -> Self {
        let m = ring.modulus();
        RingVector {
            ring,
            entries: values.into_iter().map(|v| v % m).collect(),
        }
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Residue {
        Residue {
            ring: self.ring,
            value: self.entries[i],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    fn check_compatible(&self, other: &RingVector) -> Result<(), Error> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// Entrywise sum.
    pub fn add(&self, other: &RingVector) -> Result<RingVector, Error> {
        self.check_compatible(other)?;
        let m = self.ring.modulus;
        Ok(RingVector {
            ring: self.ring,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| (a + b) % m)
                .collect(),
        })
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &RingVector) -> Result<RingVector, Error> {
        self.check_compatible(other)?;
        let m = self.ring.modulus;
        Ok(RingVector {
            ring: self.ring,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| (a + m - b) % m)
                .collect(),
        })
    }

    /// The vector scaled by an integer (canonicalized into the ring).
    pub fn scaled_by(&self, k: u64) -> RingVector {
        let m = self.ring.modulus;
        let k = k % m;
        RingVector {
            ring: self.ring,
            entries: self.entries.iter().map(|&a| (a * k) % m).collect(),
        }
    }

    /// Entrywise negation.
    pub fn neg(&self) -> RingVector {
        let m = self.ring.modulus;
        RingVector {
            ring: self.ring,
            entries: self.entries.iter().map(|&a| (m - a) % m).collect(),
        }
    }

    pub fn iter_residues(&self) -> impl Iterator<Item = Residue> + '_ {
        self.entries.iter().map(move |&v| Residue {
            ring: self.ring,
            value: v,
        })
    }
}

/// Deterministic trial-division primality test; sufficient for the supported
/// range (below `2^32`).
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Inverse of `a` modulo `m` for `gcd(a, m) = 1`, via extended Euclid.
fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_t, mut t) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_t, t) = (t, old_t - q * t);
    }
    debug_assert_eq!(old_r, 1, "inverse of a non-unit requested");
    old_t.rem_euclid(m as i128) as u64
}
