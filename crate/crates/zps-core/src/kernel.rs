//! Kernel of the Gray image, its structural bounds, independence notions,
//! and the image-side properties (linearity, self-orthogonality).
//!
//! The kernel of a Gray image `S = φ(C)` is
//! `K = { φ(v) : v ∈ C, φ(v) + S = S }` with addition entrywise mod `p`.
//! It is computed by brute force, then checked to be closed under addition
//! (which makes it an `F_p`-subspace, so `|K| = p^m` and `dim m` is
//! well-defined). Two structural codes bracket it:
//!
//! * `lower_code` — every generator scaled by `p^(s-1)`; its image is a
//!   linear subcode of `K`;
//! * `upper_code` — generators of valuation class `i ≤ s-3` scaled up to
//!   valuation `s-1`, classes `s-2` and `s-1` kept; `K` lies inside its
//!   image.
//!
//! The possible kernel dimensions are further restricted by the code type:
//! `m` ranges over `rank .. rank+δ_{s-2}` with the value
//! `rank+δ_{s-2}-1` excluded whenever it exceeds `rank` (for `s ≥ 2`).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::code::{CodeType, GeneratorMatrix, LinearCode};
use crate::error::Error;
use crate::gray::{gray_vec, GrayVector};
use crate::ring::{RingParams, RingVector};

/// Kernel of `φ(C)` with the bracketing codes and the dimension bounds.
#[derive(Clone, Debug)]
pub struct KernelResult {
    kernel_images: BTreeSet<GrayVector>,
    kernel_preimages: BTreeSet<RingVector>,
    dim_m: u32,
    lower_code: LinearCode,
    upper_code: LinearCode,
    allowed_dims: Option<BTreeSet<usize>>,
}

impl KernelResult {
    pub fn kernel_images(&self) -> &BTreeSet<GrayVector> {
        &self.kernel_images
    }

    pub fn kernel_preimages(&self) -> &BTreeSet<RingVector> {
        &self.kernel_preimages
    }

    /// `m = log_p |K|`.
    pub fn dim_m(&self) -> u32 {
        self.dim_m
    }

    /// Generators scaled by `p^(s-1)`; its image sits inside the kernel.
    pub fn lower_code(&self) -> &LinearCode {
        &self.lower_code
    }

    /// The valuation-lifted code whose image contains the kernel.
    pub fn upper_code(&self) -> &LinearCode {
        &self.upper_code
    }

    /// Admissible kernel dimensions for the code's type; `None` for `s = 1`
    /// where the restriction theorem does not apply.
    pub fn allowed_dims(&self) -> Option<&BTreeSet<usize>> {
        self.allowed_dims.as_ref()
    }
}

/// Membership structure over a fixed family of equal-length `F_p` words:
/// packed integer keys when the words fit in 128 bits, tree set otherwise.
enum Lookup {
    Packed { bits: u32, keys: BTreeSet<u128> },
    Plain { keys: BTreeSet<Vec<u32>> },
}

impl Lookup {
    fn build(p: u64, images: &[GrayVector]) -> Lookup {
        let bits = 64 - (p - 1).leading_zeros();
        let packable = images
            .first()
            .map(|g| g.len() as u32 <= 128 / bits)
            .unwrap_or(true);
        if packable {
            let keys = images
                .iter()
                .map(|g| pack_entries(g.entries(), bits))
                .collect();
            Lookup::Packed { bits, keys }
        } else {
            Lookup::Plain {
                keys: images.iter().map(|g| g.entries().to_vec()).collect(),
            }
        }
    }

    fn contains(&self, entries: &[u32]) -> bool {
        match self {
            Lookup::Packed { bits, keys } => keys.contains(&pack_entries(entries, *bits)),
            Lookup::Plain { keys } => keys.contains(entries),
        }
    }
}

fn pack_entries(entries: &[u32], bits: u32) -> u128 {
    let mut key: u128 = 0;
    for &e in entries {
        key = (key << bits) | e as u128;
    }
    key
}

fn add_entries(a: &[u32], b: &[u32], p: u32, out: &mut Vec<u32>) {
    out.clear();
    out.extend(a.iter().zip(b).map(|(&x, &y)| (x + y) % p));
}

/// The valuation-lifted generator code bounding the kernel from above:
/// class-`i` generators with `i ≤ s-3` are scaled by `p^(s-1-i)`, classes
/// `s-2` and `s-1` are kept as they are. For `s ≤ 2` this is `C` itself.
pub fn upper_kernel_code(code: &LinearCode) -> LinearCode {
    let ring = code.ring();
    let s = ring.s();
    let m = ring.modulus();
    let rows: Vec<RingVector> = code
        .generators()
        .iter()
        .zip(code.pivot_valuations())
        .map(|(g, &e)| {
            if s >= 3 && e <= s - 3 {
                g.scaled_by(ring.p().pow(s - 1 - e) % m)
            } else {
                g.clone()
            }
        })
        .collect();
    let gm = GeneratorMatrix::new(ring, code.length(), rows)
        .expect("scaled generators keep ring and length");
    LinearCode::from_generator_matrix(&gm)
}

/// Admissible kernel dimensions for a type over `Z_{p^s}`, `s ≥ 2`: every
/// integer from `rank` through `rank + δ_{s-2}`, excluding
/// `rank + δ_{s-2} - 1` whenever that value exceeds `rank`.
pub fn kernel_dim_bounds(t: &CodeType) -> Result<BTreeSet<usize>, Error> {
    let s = t.s();
    if s < 2 {
        return Err(Error::KernelBoundsScope { s });
    }
    let base = t.rank();
    let top = base + t.delta(s as usize - 2);
    let mut dims: BTreeSet<usize> = (base..=top).collect();
    if top > base + 1 {
        dims.remove(&(top - 1));
    }
    Ok(dims)
}

/// Brute-force kernel of the Gray image. `O(|C|²)` membership tests, so the
/// cardinality is gated by `max_kernel` rather than the enumeration limit.
pub fn kernel_of_gray_image(code: &LinearCode, max_kernel: u64) -> Result<KernelResult, Error> {
    let ring = code.ring();
    let p = ring.p();
    let words: Vec<RingVector> = match code.enumerate(max_kernel) {
        Ok(it) => it.collect(),
        Err(Error::EnumerationLimit { size, limit }) => {
            return Err(Error::KernelLimit { size, limit })
        }
        Err(e) => return Err(e),
    };
    let images: Vec<GrayVector> = words.iter().map(gray_vec).collect();
    let lookup = Lookup::build(p, &images);
    let pf = p as u32;

    let mut kernel_images = BTreeSet::new();
    let mut kernel_preimages = BTreeSet::new();
    let mut scratch = Vec::new();
    for (v, img) in words.iter().zip(&images) {
        let stays = images.iter().all(|w| {
            add_entries(img.entries(), w.entries(), pf, &mut scratch);
            lookup.contains(&scratch)
        });
        if stays {
            kernel_images.insert(img.clone());
            kernel_preimages.insert(v.clone());
        }
    }

    // Additive closure makes the kernel an F_p-subspace (scalar multiples
    // are repeated sums), so a failure here is an implementation fault.
    let kvec: Vec<GrayVector> = kernel_images.iter().cloned().collect();
    let klookup = Lookup::build(p, &kvec);
    for a in &kvec {
        for b in &kvec {
            add_entries(a.entries(), b.entries(), pf, &mut scratch);
            if !klookup.contains(&scratch) {
                return Err(Error::Internal {
                    check: "kernel-additive-closure",
                    details: alloc::format!(
                        "{:?} + {:?} escapes the kernel",
                        a.entries(),
                        b.entries()
                    ),
                });
            }
        }
    }
    let mut rest = kernel_images.len() as u128;
    let mut dim_m = 0u32;
    while rest % p as u128 == 0 {
        rest /= p as u128;
        dim_m += 1;
    }
    if rest != 1 {
        return Err(Error::Internal {
            check: "kernel-size-power",
            details: alloc::format!("kernel size {} is not a power of {}", kernel_images.len(), p),
        });
    }

    let s = ring.s();
    let allowed_dims = if s >= 2 {
        Some(kernel_dim_bounds(code.code_type())?)
    } else {
        None
    };

    Ok(KernelResult {
        kernel_images,
        kernel_preimages,
        dim_m,
        lower_code: code.scaled_generator_code(s - 1),
        upper_code: upper_kernel_code(code),
        allowed_dims,
    })
}

/// True iff `φ(C)` is an `F_p`-linear code: closed under entrywise mod-`p`
/// addition (closure under scalars follows over a prime field).
pub fn is_gray_image_linear(code: &LinearCode, max_kernel: u64) -> Result<bool, Error> {
    let words = match code.enumerate(max_kernel) {
        Ok(it) => it,
        Err(Error::EnumerationLimit { size, limit }) => {
            return Err(Error::KernelLimit { size, limit })
        }
        Err(e) => return Err(e),
    };
    let p = code.ring().p();
    let images: Vec<GrayVector> = words.map(|w| gray_vec(&w)).collect();
    let lookup = Lookup::build(p, &images);
    let pf = p as u32;
    let mut scratch = Vec::new();
    for a in &images {
        for b in &images {
            add_entries(a.entries(), b.entries(), pf, &mut scratch);
            if !lookup.contains(&scratch) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff every linear combination `Σ α_i v_i = 0` forces all `α_i` into
/// `⟨p⟩` — decided by the standard form: the stacked rows must keep rank
/// equal to the number of vectors.
pub fn modular_independent(vectors: &[RingVector]) -> Result<bool, Error> {
    let first = vectors.first().ok_or(Error::EmptyInput)?;
    let gm = GeneratorMatrix::new(first.ring(), first.len(), vectors.to_vec())?;
    let code = LinearCode::from_generator_matrix(&gm);
    Ok(code.rank() == vectors.len())
}

/// True iff the Gray images of the vectors are linearly independent over
/// `F_p`, by Gaussian elimination.
pub fn phi_independent(vectors: &[RingVector]) -> Result<bool, Error> {
    let first = vectors.first().ok_or(Error::EmptyInput)?;
    let ring = first.ring();
    for v in vectors {
        if v.ring() != ring {
            return Err(Error::MixedRings);
        }
        if v.len() != first.len() {
            return Err(Error::LengthMismatch {
                left: v.len(),
                right: first.len(),
            });
        }
    }
    let rows: Vec<Vec<u64>> = vectors
        .iter()
        .map(|v| gray_vec(v).entries().iter().map(|&e| e as u64).collect())
        .collect();
    Ok(fp_rank(rows, ring.p()) == vectors.len())
}

/// Row rank over `F_p` by forward elimination.
fn fp_rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_p_inverse(rows[rank][col] % p, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] % p != 0 {
                let f = rows[i][col] % p;
                for j in 0..ncols {
                    let sub = f * rows[rank][j] % p;
                    rows[i][j] = (rows[i][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mod_p_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p for prime p and a not divisible by p.
    debug_assert!(a % p != 0);
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Outcome of checking `φ(p^(s-1)·v + w) = φ(p^(s-1)·v) + φ(w)` over pairs
/// of codewords.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SumIdentityReport {
    pub pairs_checked: u64,
    pub violations: u64,
    pub exhaustive: bool,
}

/// Verifies the scaled-sum identity. All `|C|²` pairs are checked when that
/// count fits within `trials`; otherwise `trials` pseudo-random pairs are
/// drawn deterministically from `seed`.
pub fn check_sum_identity(
    code: &LinearCode,
    trials: u64,
    seed: u64,
) -> Result<SumIdentityReport, Error> {
    let ring = code.ring();
    let scale = ring.p().pow(ring.s() - 1);
    let check_pair = |v: &RingVector, w: &RingVector| -> bool {
        let sv = v.scaled_by(scale);
        let lhs = gray_vec(&sv.add(w).expect("codewords share ring and length"));
        let rhs = gray_vec(&sv)
            .add(&gray_vec(w))
            .expect("images share alphabet and length");
        lhs == rhs
    };

    let exhaustive = code
        .size()
        .and_then(|sz| sz.checked_mul(sz))
        .map(|sq| sq <= trials as u128)
        .unwrap_or(false);
    let mut pairs_checked = 0;
    let mut violations = 0;
    if exhaustive {
        let words: Vec<RingVector> = code.enumerate(trials)?.collect();
        for v in &words {
            for w in &words {
                pairs_checked += 1;
                if !check_pair(v, w) {
                    violations += 1;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let v = random_codeword(code, &mut rng);
            let w = random_codeword(code, &mut rng);
            pairs_checked += 1;
            if !check_pair(&v, &w) {
                violations += 1;
            }
        }
    }
    Ok(SumIdentityReport {
        pairs_checked,
        violations,
        exhaustive,
    })
}

/// A uniformly random codeword: independent coefficients per generator.
fn random_codeword<R: Rng>(code: &LinearCode, rng: &mut R) -> RingVector {
    let ring = code.ring();
    let p = ring.p();
    let s = ring.s();
    let m = ring.modulus();
    let mut out = vec![0u64; code.length()];
    for (g, &e) in code.generators().iter().zip(code.pivot_valuations()) {
        let c = rng.gen_range(0..p.pow(s - e));
        for (o, &x) in out.iter_mut().zip(g.entries()) {
            *o = (*o + c * x % m) % m;
        }
    }
    ring.vector(&out)
}

/// `<φ(a), φ(b)> mod p` for two residues, in closed form: with
/// `a = qa·p^(s-1)+ra`, `b = qb·p^(s-1)+rb`, and `ra ≤ rb`,
/// the product is `ra(qa+1)(qb+1) + (rb-ra)·qa·(qb+1) + (h-rb)·qa·qb`.
fn coordinate_pair_product(ring: RingParams, a: u64, b: u64) -> u64 {
    let p = ring.p();
    let h = ring.half_power();
    let da = ring.residue(a).decompose();
    let db = ring.residue(b).decompose();
    let ((qa, ra), (qb, rb)) = if da.r <= db.r {
        ((da.q, da.r), (db.q, db.r))
    } else {
        ((db.q, db.r), (da.q, da.r))
    };
    let (qa, ra, qb, rb, h) = (qa % p, ra % p, qb % p, rb % p, h % p);
    // All terms reduced mod p before multiplying; p² ≤ 2^64 is safe.
    let t1 = ra * ((qa + 1) % p) % p * ((qb + 1) % p) % p;
    let t2 = ((rb + p - ra) % p) * qa % p * ((qb + 1) % p) % p;
    let t3 = ((h + p - rb % p) % p) * qa % p * qb % p;
    (t1 + t2 + t3) % p
}

/// True iff `<φ(u), φ(v)> ≡ 0 mod p` for all pairs of codewords, computed
/// with the closed-form per-coordinate product (no Gray vectors built).
pub fn self_orthogonal_image(code: &LinearCode, max_kernel: u64) -> Result<bool, Error> {
    let ring = code.ring();
    let p = ring.p();
    let words: Vec<RingVector> = match code.enumerate(max_kernel) {
        Ok(it) => it.collect(),
        Err(Error::EnumerationLimit { size, limit }) => {
            return Err(Error::KernelLimit { size, limit })
        }
        Err(e) => return Err(e),
    };
    for (i, u) in words.iter().enumerate() {
        // The form is symmetric; the diagonal and upper triangle suffice.
        for v in &words[i..] {
            let mut acc = 0u64;
            for (&a, &b) in u.entries().iter().zip(v.entries()) {
                acc = (acc + coordinate_pair_product(ring, a, b)) % p;
            }
            if acc != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
