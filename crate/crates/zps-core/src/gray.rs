//! The Gray map from `Z_{p^s}` to vectors over `F_p` of length `p^(s-1)`,
//! its coordinatewise extension, images of whole codes, and the exact
//! preimage computation.
//!
//! Writing `a = q·p^(s-1) + r` with `0 <= r < p^(s-1)`, the image of `a` is
//! the length-`p^(s-1)` word whose first `r` entries are `q+1 (mod p)` and
//! whose remaining entries are `q`. For `s = 1` this is the identity on
//! `F_p`. The map is injective and turns Lee distance into Hamming distance.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::error::Error;
use crate::lee;
use crate::ring::{Residue, RingParams, RingVector};

/// A vector over `F_p` with entries stored as canonical residues `< p`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GrayVector {
    p: u64,
    entries: Vec<u32>,
}

impl GrayVector {
    /// Entries are reduced mod `p`. The alphabet size must be at least 2.
    pub fn new(p: u64, entries: &[u64]) -> GrayVector {
        assert!(p >= 2, "Gray alphabet needs at least two symbols");
        GrayVector {
            p,
            entries: entries.iter().map(|&x| (x % p) as u32).collect(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn hamming_weight(&self) -> u64 {
        lee::hamming_weight(&self.entries)
    }

    pub fn hamming_distance(&self, other: &GrayVector) -> Result<u64, Error> {
        if self.p != other.p {
            return Err(Error::MixedRings);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| a != b)
            .count() as u64)
    }

    /// Entrywise sum in `F_p^N`.
    pub fn add(&self, other: &GrayVector) -> Result<GrayVector, Error> {
        if self.p != other.p {
            return Err(Error::MixedRings);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let p = self.p as u32;
        Ok(GrayVector {
            p: self.p,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| (a + b) % p)
                .collect(),
        })
    }

    /// Entrywise scalar multiple in `F_p^N`.
    pub fn scaled_by(&self, c: u64) -> GrayVector {
        let c = c % self.p;
        GrayVector {
            p: self.p,
            entries: self
                .entries
                .iter()
                .map(|&a| ((a as u64 * c) % self.p) as u32)
                .collect(),
        }
    }

}

/// Gray image of a single residue; a word of length `p^(s-1)` over `F_p`.
pub fn gray_scalar(a: Residue) -> GrayVector {
    let ring = a.ring();
    let p = ring.p();
    let half = ring.half_power();
    let d = a.decompose();
    let hi = ((d.q + 1) % p) as u32;
    let lo = d.q as u32;
    let entries = (0..half)
        .map(|i| if i < d.r { hi } else { lo })
        .collect();
    GrayVector { p, entries }
}

/// Coordinatewise Gray image: length `n·p^(s-1)` over `F_p`.
pub fn gray_vec(v: &RingVector) -> GrayVector {
    let p = v.ring().p();
    let mut entries = Vec::with_capacity(v.len() * v.ring().half_power() as usize);
    for x in v.iter_residues() {
        entries.extend_from_slice(&gray_scalar(x).entries);
    }
    GrayVector { p, entries }
}

/// The Gray image of every codeword, as a set.
#[derive(Clone, Debug)]
pub struct GrayImageSet {
    images: BTreeSet<GrayVector>,
    code_size: u128,
}

impl GrayImageSet {
    pub fn images(&self) -> &BTreeSet<GrayVector> {
        &self.images
    }

    pub fn code_size(&self) -> u128 {
        self.code_size
    }
}

/// Enumerates the code (respecting `max_enum`) and maps every codeword.
/// The image always has exactly `|C|` elements; anything else indicates an
/// internal fault and is reported as such.
pub fn gray_image(code: &LinearCode, max_enum: u64) -> Result<GrayImageSet, Error> {
    let mut images = BTreeSet::new();
    for word in code.enumerate(max_enum)? {
        images.insert(gray_vec(&word));
    }
    let code_size = code.size().expect("enumeration is size-guarded");
    if images.len() as u128 != code_size {
        return Err(Error::Internal {
            check: "gray-injectivity",
            details: alloc::format!(
                "code of size {} mapped onto {} images",
                code_size,
                images.len()
            ),
        });
    }
    Ok(GrayImageSet { images, code_size })
}

/// Inverts the Gray map on a single length-`p^(s-1)` chunk, or `None` when
/// the chunk is not of the form `((q+1)^r, q^(half-r))`.
fn gray_scalar_preimage(ring: RingParams, chunk: &[u32]) -> Option<u64> {
    let p = ring.p();
    let half = ring.half_power();
    debug_assert_eq!(chunk.len() as u64, half);
    let q = *chunk.last().expect("chunks have length p^(s-1) >= 1") as u64;
    let hi = ((q + 1) % p) as u32;
    // hi != q mod p, so the leading run of hi's is unambiguous, and since
    // the last entry is q the run is proper: r < half.
    let r = chunk.iter().take_while(|&&e| e == hi).count();
    if chunk[r..].iter().all(|&e| e as u64 == q) {
        Some(q * half + r as u64)
    } else {
        None
    }
}

/// Exact preimage of a Gray-image vector. Returns `Ok(None)` when `g` is a
/// well-formed word that is not in the image of the Gray map; errors when
/// the length is not a multiple of `p^(s-1)` or the alphabets differ.
pub fn gray_preimage(ring: RingParams, g: &GrayVector) -> Result<Option<RingVector>, Error> {
    if g.p() != ring.p() {
        return Err(Error::MixedRings);
    }
    let half = ring.half_power() as usize;
    if g.len() % half != 0 {
        return Err(Error::LengthMismatch {
            left: g.len(),
            right: half,
        });
    }
    let mut out = Vec::with_capacity(g.len() / half);
    for chunk in g.entries().chunks(half) {
        match gray_scalar_preimage(ring, chunk) {
            Some(a) => out.push(a),
            None => return Ok(None),
        }
    }
    Ok(Some(ring.vector(&out)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lee::lee_weight;
    use crate::ring::rings_with_modulus_up_to;

    fn z9() -> RingParams {
        RingParams::new(3, 2).unwrap()
    }

    fn z4() -> RingParams {
        RingParams::new(2, 2).unwrap()
    }

    #[test]
    fn full_table_for_modulus_nine() {
        let table: [(u64, &[u32]); 9] = [
            (0, &[0, 0, 0]),
            (1, &[1, 0, 0]),
            (2, &[1, 1, 0]),
            (3, &[1, 1, 1]),
            (4, &[2, 1, 1]),
            (5, &[2, 2, 1]),
            (6, &[2, 2, 2]),
            (7, &[0, 2, 2]),
            (8, &[0, 0, 2]),
        ];
        for (a, img) in table {
            assert_eq!(gray_scalar(z9().residue(a)).entries(), img, "gray({a})");
        }
    }

    #[test]
    fn full_table_for_modulus_four() {
        let table: [(u64, &[u32]); 4] =
            [(0, &[0, 0]), (1, &[1, 0]), (2, &[1, 1]), (3, &[0, 1])];
        for (a, img) in table {
            assert_eq!(gray_scalar(z4().residue(a)).entries(), img, "gray({a})");
        }
    }

    #[test]
    fn spot_values_for_modulus_eight() {
        let z8 = RingParams::new(2, 3).unwrap();
        assert_eq!(gray_scalar(z8.residue(5)).entries(), &[0, 1, 1, 1]);
        assert_eq!(gray_scalar(z8.residue(0)).entries(), &[0, 0, 0, 0]);
        assert_eq!(gray_scalar(z8.residue(4)).entries(), &[1, 1, 1, 1]);
    }

    #[test]
    fn prime_case_is_identity() {
        let f5 = RingParams::new(5, 1).unwrap();
        for a in 0..5 {
            assert_eq!(gray_scalar(f5.residue(a)).entries(), &[a as u32]);
        }
    }

    #[test]
    fn vector_images_concatenate() {
        let g = gray_vec(&z9().vector(&[1, 8]));
        assert_eq!(g.entries(), &[1, 0, 0, 0, 0, 2]);
        assert_eq!(g.len(), 6);

        let g = gray_vec(&z4().vector(&[2, 3]));
        assert_eq!(g.entries(), &[1, 1, 0, 1]);
    }

    #[test]
    fn isometry_on_all_small_rings() {
        // d_H(gray(a), gray(b)) == w_L(a - b), exhaustively.
        for ring in rings_with_modulus_up_to(64) {
            for a in ring.elements() {
                for b in ring.elements() {
                    let d = gray_scalar(a)
                        .hamming_distance(&gray_scalar(b))
                        .unwrap();
                    assert_eq!(
                        d,
                        lee_weight(a.sub(b)),
                        "ring Z_{}, a={}, b={}",
                        ring.modulus(),
                        a.value(),
                        b.value()
                    );
                }
            }
        }
    }

    #[test]
    fn weights_transfer() {
        // w_H(gray(x)) == w_L(x) is the b = 0 case of the isometry.
        for ring in rings_with_modulus_up_to(32) {
            for a in ring.elements() {
                assert_eq!(gray_scalar(a).hamming_weight(), lee_weight(a));
            }
        }
    }

    #[test]
    fn preimage_round_trips_and_rejects() {
        for ring in rings_with_modulus_up_to(32) {
            for a in ring.elements() {
                let g = gray_scalar(a);
                let back = gray_preimage(ring, &g).unwrap().unwrap();
                assert_eq!(back.entries(), &[a.value()]);
            }
        }
        // Frozen vector example.
        let g = GrayVector::new(3, &[2, 2, 1]);
        let back = gray_preimage(z9(), &g).unwrap().unwrap();
        assert_eq!(back.entries(), &[5]);
        // A word outside the image.
        let g = GrayVector::new(3, &[0, 1, 0]);
        assert_eq!(gray_preimage(z9(), &g).unwrap(), None);
        // Length not a multiple of p^(s-1).
        let g = GrayVector::new(3, &[0, 1]);
        assert!(matches!(
            gray_preimage(z9(), &g),
            Err(Error::LengthMismatch { .. })
        ));
        // Alphabet mismatch.
        let g = GrayVector::new(2, &[0, 1]);
        assert!(matches!(gray_preimage(z9(), &g), Err(Error::MixedRings)));
    }

    #[test]
    fn multi_coordinate_preimage() {
        let r = z9();
        for v in [[0u64, 0], [1, 8], [4, 5], [8, 8]] {
            let g = gray_vec(&r.vector(&v));
            let back = gray_preimage(r, &g).unwrap().unwrap();
            assert_eq!(back.entries(), &v);
        }
    }

    #[test]
    fn injectivity_exhaustive() {
        for ring in rings_with_modulus_up_to(64) {
            let mut seen = BTreeSet::new();
            for a in ring.elements() {
                assert!(seen.insert(gray_scalar(a)), "duplicate image in Z_{}", ring.modulus());
            }
        }
    }

    #[test]
    fn image_of_small_codes() {
        let c = LinearCode::from_integer_rows(z9(), 1, &[vec![3]]).unwrap();
        let img = gray_image(&c, 1 << 10).unwrap();
        let expect: BTreeSet<GrayVector> = [
            GrayVector::new(3, &[0, 0, 0]),
            GrayVector::new(3, &[1, 1, 1]),
            GrayVector::new(3, &[2, 2, 2]),
        ]
        .into_iter()
        .collect();
        assert_eq!(img.images(), &expect);
        assert_eq!(img.code_size(), 3);

        let c = LinearCode::from_integer_rows(z4(), 1, &[vec![2]]).unwrap();
        let img = gray_image(&c, 1 << 10).unwrap();
        let expect: BTreeSet<GrayVector> =
            [GrayVector::new(2, &[0, 0]), GrayVector::new(2, &[1, 1])]
                .into_iter()
                .collect();
        assert_eq!(img.images(), &expect);
    }

    #[test]
    fn field_operations_on_images() {
        let a = GrayVector::new(3, &[1, 2, 0]);
        let b = GrayVector::new(3, &[2, 2, 1]);
        assert_eq!(a.add(&b).unwrap().entries(), &[0, 1, 1]);
        assert_eq!(a.scaled_by(2).entries(), &[2, 1, 0]);
        assert_eq!(a.scaled_by(3).entries(), &[0, 0, 0]);
        assert!(a.add(&GrayVector::new(3, &[1])).is_err());
        assert!(a.add(&GrayVector::new(2, &[1, 0, 0])).is_err());
        assert_eq!(a.hamming_weight(), 2);
    }

}
