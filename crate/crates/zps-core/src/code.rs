//! Linear codes over `Z_{p^s}`: generator matrices, the block-triangular
//! standard form, code types, codeword enumeration, and membership.
//!
//! Every code is brought to a standard form by valuation-driven Gaussian
//! elimination: repeatedly pick the not-yet-processed entry of minimal p-adic
//! valuation (ties: leftmost column, then lowest row), swap its column into
//! the diagonal position, scale the row so the pivot becomes exactly `p^i`,
//! and clear the pivot's column everywhere else (entries below become zero,
//! entries above are reduced mod `p^i`). The result is block upper
//! triangular with pivot blocks `p^i · I` ordered by valuation; the column
//! permutation is recorded, never silently applied to user-facing codewords.
//!
//! The multiset of pivot valuations is the *type* `(δ_0, …, δ_{s-1})` of the
//! code: `δ_i` pivots of valuation `i`, giving
//! `|C| = Π p^((s-i)·δ_i)`, rank `Σ δ_i`, and free rank `δ_0`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::rational::Rational;
use crate::ring::{RingParams, RingVector, Valuation};

/// A (possibly redundant, possibly empty) list of generator rows.
#[derive(Clone, Debug)]
pub struct GeneratorMatrix {
    ring: RingParams,
    n: usize,
    rows: Vec<RingVector>,
}

impl GeneratorMatrix {
    /// Validates row lengths and rings. An empty row list is allowed and
    /// produces the zero code of length `n`.
    pub fn new(ring: RingParams, n: usize, rows: Vec<RingVector>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.ring() != ring {
                return Err(Error::MixedRings);
            }
            if row.len() != n {
                return Err(Error::RaggedRow {
                    row: i,
                    expected: n,
                    found: row.len(),
                });
            }
        }
        Ok(GeneratorMatrix { ring, n, rows })
    }

    /// Convenience constructor from raw integer rows (entries are reduced).
    pub fn from_integer_rows(
        ring: RingParams,
        n: usize,
        rows: &[Vec<u64>],
    ) -> Result<Self, Error> {
        let rows = rows.iter().map(|r| ring.vector(r)).collect();
        GeneratorMatrix::new(ring, n, rows)
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[RingVector] {
        &self.rows
    }
}

/// The type `(δ_0, …, δ_{s-1})` of a code: how many standard-form pivots
/// exist of each valuation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CodeType {
    deltas: Vec<usize>,
}

impl CodeType {
    pub fn new(deltas: Vec<usize>) -> Self {
        CodeType { deltas }
    }

    pub fn deltas(&self) -> &[usize] {
        &self.deltas
    }

    /// Number of valuation classes, i.e. `s`.
    pub fn s(&self) -> u32 {
        self.deltas.len() as u32
    }

    pub fn delta(&self, i: usize) -> usize {
        self.deltas.get(i).copied().unwrap_or(0)
    }

    /// Total number of pivots, `Σ δ_i`.
    pub fn rank(&self) -> usize {
        self.deltas.iter().sum()
    }

    /// Number of valuation-0 pivots, `δ_0`.
    pub fn free_rank(&self) -> usize {
        self.delta(0)
    }

    /// `log_p |C| = Σ (s-i)·δ_i`.
    pub fn size_exponent(&self) -> u64 {
        let s = self.deltas.len() as u64;
        self.deltas
            .iter()
            .enumerate()
            .map(|(i, &d)| (s - i as u64) * d as u64)
            .sum()
    }

    /// `|C| = p^(Σ (s-i)·δ_i)`, when it fits in 128 bits.
    pub fn size(&self, p: u64) -> Option<u128> {
        let mut acc: u128 = 1;
        for _ in 0..self.size_exponent() {
            acc = acc.checked_mul(p as u128)?;
        }
        Some(acc)
    }

    /// `log_{p^s} |C| = (Σ (s-i)·δ_i) / s`, exact.
    pub fn log_size(&self) -> Rational {
        Rational::new(self.size_exponent() as i64, self.deltas.len() as i64)
    }
}

/// A linear code over `Z_{p^s}`, stored via its standard form.
#[derive(Clone, Debug)]
pub struct LinearCode {
    ring: RingParams,
    n: usize,
    /// Standard-form rows in permuted coordinates: pivot `t` sits at column
    /// `t` with value exactly `p^(pivot_vals[t])`.
    standard_rows: Vec<RingVector>,
    /// Pivot valuations, nondecreasing.
    pivot_vals: Vec<u32>,
    /// `col_perm[j]` = original index of standard-form column `j`.
    col_perm: Vec<usize>,
    /// Standard-form rows with columns restored to the original order; the
    /// generating set used for enumeration and reported to users.
    generators: Vec<RingVector>,
    code_type: CodeType,
    size: Option<u128>,
}

impl LinearCode {
    /// Reduces the given rows to standard form.
    pub fn from_generator_matrix(gm: &GeneratorMatrix) -> LinearCode {
        let ring = gm.ring();
        let n = gm.length();
        let m = ring.modulus();
        let p = ring.p();
        let s = ring.s();

        let mut a: Vec<Vec<u64>> = gm.rows().iter().map(|r| r.entries().to_vec()).collect();
        let k = a.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut pivot_vals: Vec<u32> = Vec::new();

        let mut t = 0;
        while t < k && t < n {
            // Entry of minimal valuation in the unprocessed submatrix;
            // ties broken by leftmost column, then lowest row.
            let mut best: Option<(u32, usize, usize)> = None;
            for j in t..n {
                for (i, row) in a.iter().enumerate().take(k).skip(t) {
                    if let Valuation::Finite(v) = ring.residue(row[j]).valuation() {
                        if best.is_none_or(|b| (v, j, i) < b) {
                            best = Some((v, j, i));
                        }
                    }
                }
            }
            let Some((e, j, i)) = best else { break };
            debug_assert!(pivot_vals.last().is_none_or(|&prev| prev <= e));

            a.swap(t, i);
            if j != t {
                for row in a.iter_mut() {
                    row.swap(t, j);
                }
                perm.swap(t, j);
            }

            // Scale the row by the unit cofactor's inverse: pivot becomes p^e.
            let pe = p.pow(e);
            let unit = ring.residue(a[t][t] / pe);
            let inv = unit.inverse().expect("cofactor of the pivot is a unit").value();
            for x in a[t].iter_mut() {
                *x = (*x * inv) % m;
            }
            debug_assert_eq!(a[t][t], pe);

            // Clear the pivot column: exact zeros below, reduction mod p^e above.
            for i2 in 0..k {
                if i2 == t || a[i2][t] == 0 {
                    continue;
                }
                let f = a[i2][t] / pe;
                if f == 0 {
                    continue;
                }
                for j2 in 0..n {
                    let sub = (f * a[t][j2]) % m;
                    a[i2][j2] = (a[i2][j2] + m - sub) % m;
                }
                debug_assert!(i2 < t || a[i2][t] == 0);
            }

            pivot_vals.push(e);
            t += 1;
        }

        let rank = pivot_vals.len();
        debug_assert!(a[rank..].iter().all(|row| row.iter().all(|&x| x == 0)));
        a.truncate(rank);

        let mut deltas = vec![0usize; s as usize];
        for &e in &pivot_vals {
            deltas[e as usize] += 1;
        }
        let code_type = CodeType::new(deltas);
        let size = code_type.size(p);

        let standard_rows: Vec<RingVector> =
            a.iter().map(|row| ring.vector(row)).collect();
        let generators = a
            .iter()
            .map(|row| {
                let mut orig = vec![0u64; n];
                for (j, &x) in row.iter().enumerate() {
                    orig[perm[j]] = x;
                }
                ring.vector(&orig)
            })
            .collect();

        LinearCode {
            ring,
            n,
            standard_rows,
            pivot_vals,
            col_perm: perm,
            generators,
            code_type,
            size,
        }
    }

    /// Convenience: build directly from raw integer rows.
    pub fn from_integer_rows(
        ring: RingParams,
        n: usize,
        rows: &[Vec<u64>],
    ) -> Result<LinearCode, Error> {
        Ok(LinearCode::from_generator_matrix(
            &GeneratorMatrix::from_integer_rows(ring, n, rows)?,
        ))
    }

    /// The zero code of length `n`.
    pub fn zero_code(ring: RingParams, n: usize) -> Result<LinearCode, Error> {
        Ok(LinearCode::from_generator_matrix(&GeneratorMatrix::new(
            ring,
            n,
            Vec::new(),
        )?))
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn code_type(&self) -> &CodeType {
        &self.code_type
    }

    pub fn rank(&self) -> usize {
        self.code_type.rank()
    }

    pub fn free_rank(&self) -> usize {
        self.code_type.free_rank()
    }

    /// `|C|`, or `None` when the cardinality exceeds 128 bits.
    pub fn size(&self) -> Option<u128> {
        self.size
    }

    /// `log_p |C|`, always exact.
    pub fn size_exponent(&self) -> u64 {
        self.code_type.size_exponent()
    }

    pub fn is_zero_code(&self) -> bool {
        self.rank() == 0
    }

    /// Standard-form rows, in permuted coordinates.
    pub fn standard_rows(&self) -> &[RingVector] {
        &self.standard_rows
    }

    /// Pivot valuations of the standard form (nondecreasing).
    pub fn pivot_valuations(&self) -> &[u32] {
        &self.pivot_vals
    }

    /// `column_permutation()[j]` is the original index of standard-form
    /// column `j`.
    pub fn column_permutation(&self) -> &[usize] {
        &self.col_perm
    }

    /// The standard-form rows with columns restored to the original order —
    /// a minimal generating set in user coordinates.
    pub fn generators(&self) -> &[RingVector] {
        &self.generators
    }

    /// Iterates every codeword exactly once, in a fixed order: coefficient
    /// tuples `(c_0, …, c_{r-1})` with `c_t` ranging over `0..p^(s-e_t)`,
    /// the last coefficient moving fastest, applied to `generators()`.
    /// The zero word comes first. Errors when `|C|` exceeds `limit`.
    pub fn enumerate(&self, limit: u64) -> Result<CodewordIter<'_>, Error> {
        match self.size {
            Some(sz) if sz <= limit as u128 => Ok(CodewordIter::new(self)),
            _ => Err(Error::EnumerationLimit {
                size: self.size,
                limit,
            }),
        }
    }

    /// Membership by reduction against the standard form; no enumeration.
    pub fn contains(&self, v: &RingVector) -> Result<bool, Error> {
        if v.ring() != self.ring {
            return Err(Error::MixedRings);
        }
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                left: v.len(),
                right: self.n,
            });
        }
        let m = self.ring.modulus();
        let p = self.ring.p();
        // Move into standard-form coordinates.
        let mut res: Vec<u64> = (0..self.n).map(|j| v.entries()[self.col_perm[j]]).collect();
        for (t, &e) in self.pivot_vals.iter().enumerate() {
            let pe = p.pow(e);
            if res[t] % pe != 0 {
                return Ok(false);
            }
            let c = res[t] / pe;
            if c == 0 {
                continue;
            }
            let row = self.standard_rows[t].entries();
            for j in 0..self.n {
                let sub = (c * row[j]) % m;
                res[j] = (res[j] + m - sub) % m;
            }
        }
        Ok(res.iter().all(|&x| x == 0))
    }

    /// The code generated by `p^k` times each standard-form row. For `k = 0`
    /// this is the code itself; once `k >= s` it is the zero code.
    pub fn scaled_generator_code(&self, k: u32) -> LinearCode {
        if k == 0 {
            return self.clone();
        }
        let m = self.ring.modulus();
        let factor = if k >= self.ring.s() {
            0
        } else {
            self.ring.p().pow(k) % m
        };
        let rows: Vec<RingVector> = self
            .generators
            .iter()
            .map(|g| g.scaled_by(factor))
            .collect();
        let gm = GeneratorMatrix::new(self.ring, self.n, rows)
            .expect("scaled rows keep ring and length");
        LinearCode::from_generator_matrix(&gm)
    }

    /// True when the two standard forms span the same set of codewords
    /// (decided by mutual membership of generators, not by enumeration).
    pub fn same_code_as(&self, other: &LinearCode) -> bool {
        if self.ring != other.ring || self.n != other.n {
            return false;
        }
        if self.code_type != other.code_type {
            return false;
        }
        self.generators
            .iter()
            .all(|g| other.contains(g).unwrap_or(false))
            && other
                .generators
                .iter()
                .all(|g| self.contains(g).unwrap_or(false))
    }
}

/// The largest additive order among the coordinates (1 for the zero vector).
pub fn vector_order(v: &RingVector) -> u64 {
    v.iter_residues()
        .map(|x| x.additive_order())
        .max()
        .unwrap_or(1)
}

/// Deterministic codeword enumeration; see [`LinearCode::enumerate`].
pub struct CodewordIter<'a> {
    code: &'a LinearCode,
    radices: Vec<u64>,
    counter: Vec<u64>,
    done: bool,
    remaining: u128,
}

impl<'a> CodewordIter<'a> {
    fn new(code: &'a LinearCode) -> Self {
        let p = code.ring.p();
        let s = code.ring.s();
        let radices: Vec<u64> = code
            .pivot_vals
            .iter()
            .map(|&e| p.pow(s - e))
            .collect();
        CodewordIter {
            code,
            counter: vec![0; radices.len()],
            radices,
            done: false,
            remaining: code.size.expect("enumeration is size-guarded"),
        }
    }

    fn current(&self) -> RingVector {
        let m = self.code.ring.modulus();
        let mut out = vec![0u64; self.code.n];
        for (t, &c) in self.counter.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let row = self.code.generators[t].entries();
            for (j, o) in out.iter_mut().enumerate() {
                *o = (*o + c * row[j]) % m;
            }
        }
        self.code.ring.vector(&out)
    }
}

impl Iterator for CodewordIter<'_> {
    type Item = RingVector;

    fn next(&mut self) -> Option<RingVector> {
        if self.done {
            return None;
        }
        let word = self.current();
        self.remaining -= 1;
        // Odometer step, last coefficient fastest.
        let mut pos = self.counter.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.counter[pos] += 1;
            if self.counter[pos] < self.radices[pos] {
                break;
            }
            self.counter[pos] = 0;
        }
        Some(word)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for CodewordIter<'_> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rings_with_modulus_up_to;
    use alloc::collections::BTreeSet;
    use proptest::prelude::*;

    fn z9() -> RingParams {
        RingParams::new(3, 2).unwrap()
    }

    fn code(ring: RingParams, n: usize, rows: &[Vec<u64>]) -> LinearCode {
        LinearCode::from_integer_rows(ring, n, rows).unwrap()
    }

    /// Independent span oracle: every coefficient tuple over the full ring
    /// applied to the *input* rows (no standard form involved).
    fn naive_span(ring: RingParams, n: usize, rows: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
        let m = ring.modulus();
        let mut span = BTreeSet::new();
        let k = rows.len();
        let mut coeffs = vec![0u64; k];
        loop {
            let mut word = vec![0u64; n];
            for (c, row) in coeffs.iter().zip(rows) {
                for (j, w) in word.iter_mut().enumerate() {
                    *w = (*w + c * row[j]) % m;
                }
            }
            span.insert(word);
            let mut pos = k;
            loop {
                if pos == 0 {
                    return span;
                }
                pos -= 1;
                coeffs[pos] += 1;
                if coeffs[pos] < m {
                    break;
                }
                coeffs[pos] = 0;
            }
        }
    }

    fn enumerated(c: &LinearCode) -> BTreeSet<Vec<u64>> {
        c.enumerate(1 << 20)
            .unwrap()
            .map(|w| w.entries().to_vec())
            .collect()
    }

    #[test]
    fn worked_examples_from_small_matrices() {
        let c = code(z9(), 2, &[vec![1, 2]]);
        assert_eq!(c.code_type().deltas(), &[1, 0]);
        assert_eq!(c.rank(), 1);
        assert_eq!(c.free_rank(), 1);
        assert_eq!(c.size(), Some(9));

        let c = code(z9(), 2, &[vec![3, 3], vec![0, 3]]);
        assert_eq!(c.code_type().deltas(), &[0, 2]);
        assert_eq!(c.rank(), 2);
        assert_eq!(c.free_rank(), 0);
        assert_eq!(c.size(), Some(9));
        // Cross-check against the naive span of the *original* rows.
        let oracle = naive_span(z9(), 2, &[vec![3, 3], vec![0, 3]]);
        assert_eq!(enumerated(&c), oracle);
    }

    #[test]
    fn zero_code_degenerate_inputs() {
        let c = LinearCode::zero_code(z9(), 2).unwrap();
        assert_eq!(c.code_type().deltas(), &[0, 0]);
        assert_eq!(c.size(), Some(1));
        assert!(c.is_zero_code());
        let words: Vec<_> = c.enumerate(16).unwrap().collect();
        assert_eq!(words.len(), 1);
        assert!(words[0].is_zero());

        let c = code(z9(), 2, &[vec![0, 0], vec![0, 0]]);
        assert!(c.is_zero_code());
        assert_eq!(c.size(), Some(1));

        assert!(matches!(
            GeneratorMatrix::new(z9(), 0, Vec::new()),
            Err(Error::ZeroLength)
        ));
    }

    #[test]
    fn enumeration_examples() {
        let c = code(z9(), 1, &[vec![3]]);
        let words: BTreeSet<_> = c
            .enumerate(16)
            .unwrap()
            .map(|w| w.entries()[0])
            .collect();
        assert_eq!(words, BTreeSet::from([0, 3, 6]));

        let c = code(z9(), 2, &[vec![1, 2]]);
        let words = enumerated(&c);
        assert_eq!(words.len(), 9);
        assert!(words.contains(&vec![4, 8]));
        // First yielded word is zero.
        let first = c.enumerate(16).unwrap().next().unwrap();
        assert!(first.is_zero());
    }

    #[test]
    fn enumeration_respects_limit() {
        let c = code(z9(), 2, &[vec![1, 0], vec![0, 1]]);
        assert_eq!(c.size(), Some(81));
        assert!(matches!(
            c.enumerate(80),
            Err(Error::EnumerationLimit {
                size: Some(81),
                limit: 80
            })
        ));
        assert!(c.enumerate(81).is_ok());
    }

    #[test]
    fn membership_examples() {
        let c = code(z9(), 2, &[vec![1, 2]]);
        assert!(c.contains(&z9().vector(&[4, 8])).unwrap());
        assert!(!c.contains(&z9().vector(&[1, 1])).unwrap());
        assert!(c.contains(&z9().vector(&[0, 0])).unwrap());
        assert!(c.contains(&z9().vector(&[1])).is_err());
        let z4 = RingParams::new(2, 2).unwrap();
        assert!(c.contains(&z4.vector(&[1, 1])).is_err());
    }

    #[test]
    fn vector_order_examples() {
        let r = z9();
        assert_eq!(vector_order(&r.vector(&[3, 6])), 3);
        assert_eq!(vector_order(&r.vector(&[1, 3])), 9);
        assert_eq!(vector_order(&r.vector(&[0, 0])), 1);
    }

    #[test]
    fn scaled_generator_codes() {
        let r = z9();
        let ambient = code(r, 1, &[vec![1]]);
        let scaled = ambient.scaled_generator_code(1);
        assert!(scaled.same_code_as(&code(r, 1, &[vec![3]])));
        assert!(ambient.scaled_generator_code(0).same_code_as(&ambient));

        let z8 = RingParams::new(2, 3).unwrap();
        let c = code(z8, 1, &[vec![2]]);
        let scaled = c.scaled_generator_code(2);
        assert!(scaled.is_zero_code());
    }

    #[test]
    fn standard_form_shape_invariants() {
        let cases: &[(u64, u32, usize, &[&[u64]])] = &[
            (3, 2, 2, &[&[3, 3], &[0, 3]]),
            (3, 2, 2, &[&[1, 1], &[0, 3]]),
            (3, 2, 3, &[&[3, 1, 5], &[6, 6, 0], &[0, 3, 3]]),
            (2, 3, 3, &[&[2, 4, 6], &[4, 4, 0]]),
            (5, 2, 2, &[&[10, 5], &[5, 20]]),
        ];
        for &(p, s, n, rows) in cases {
            let ring = RingParams::new(p, s).unwrap();
            let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
            let c = code(ring, n, &rows);
            let r = c.rank();
            // Nondecreasing pivot valuations.
            assert!(c.pivot_valuations().windows(2).all(|w| w[0] <= w[1]));
            for t in 0..r {
                let e = c.pivot_valuations()[t];
                let pe = p.pow(e);
                let row = c.standard_rows()[t].entries();
                assert_eq!(row[t], pe, "pivot value");
                // Every entry of the row is divisible by the pivot power.
                assert!(row.iter().all(|&x| x % pe == 0));
                for (i, other) in c.standard_rows().iter().enumerate() {
                    if i > t {
                        assert_eq!(other.entries()[t], 0, "exact zeros below pivots");
                    } else if i < t {
                        assert!(other.entries()[t] < pe, "entries above pivots reduced");
                    }
                }
            }
            // The permutation really is one.
            let mut seen = vec![false; n];
            for &j in c.column_permutation() {
                assert!(!seen[j]);
                seen[j] = true;
            }
            // Generators are the standard rows with columns restored.
            for (t, g) in c.generators().iter().enumerate() {
                for j in 0..n {
                    assert_eq!(
                        g.entries()[c.column_permutation()[j]],
                        c.standard_rows()[t].entries()[j]
                    );
                }
            }
        }
    }

    #[test]
    fn span_and_size_laws_across_small_rings() {
        // Exhaustive-ish sweep: a few handcrafted matrices per small ring.
        for ring in rings_with_modulus_up_to(27) {
            let m = ring.modulus();
            let samples: Vec<Vec<Vec<u64>>> = vec![
                vec![vec![1 % m, 2 % m]],
                vec![vec![ring.p(), 1], vec![0, ring.p()]],
                vec![vec![m - 1, ring.p() % m], vec![ring.p() % m, ring.p() % m]],
            ];
            for rows in samples {
                let c = code(ring, 2, &rows);
                let oracle = naive_span(ring, 2, &rows);
                assert_eq!(c.size(), Some(oracle.len() as u128), "size law");
                assert_eq!(enumerated(&c), oracle, "span preserved");
                for word in &oracle {
                    assert!(c.contains(&ring.vector(word)).unwrap());
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn random_matrices_reduce_consistently(
            ring_idx in 0usize..6,
            n in 1usize..=3,
            k in 0usize..=3,
            seed_entries in proptest::collection::vec(0u64..32, 0..=9),
        ) {
            let rings = [
                RingParams::new(2, 2).unwrap(),
                RingParams::new(2, 3).unwrap(),
                RingParams::new(3, 2).unwrap(),
                RingParams::new(3, 3).unwrap(),
                RingParams::new(5, 2).unwrap(),
                RingParams::new(2, 4).unwrap(),
            ];
            let ring = rings[ring_idx];
            let mut rows: Vec<Vec<u64>> = Vec::new();
            let mut it = seed_entries.iter().copied();
            for _ in 0..k {
                let row: Vec<u64> = (0..n).map(|_| it.next().unwrap_or(0)).collect();
                rows.push(row);
            }
            let c = code(ring, n, &rows);
            let oracle = naive_span(ring, n, &rows);
            prop_assert_eq!(c.size(), Some(oracle.len() as u128));
            prop_assert_eq!(enumerated(&c), oracle.clone());
            prop_assert!(c.rank() <= n);
            prop_assert_eq!(
                c.code_type().size_exponent(),
                (oracle.len() as f64).log(ring.p() as f64).round() as u64
            );
            // Membership test agrees with the enumerated set on a sample of
            // ambient vectors: all codewords plus some perturbations.
            for word in oracle.iter().take(16) {
                prop_assert!(c.contains(&ring.vector(word)).unwrap());
                let mut bumped = word.clone();
                bumped[0] = (bumped[0] + 1) % ring.modulus();
                let inside = oracle.contains(&bumped);
                prop_assert_eq!(c.contains(&ring.vector(&bumped)).unwrap(), inside);
            }
        }
    }
}
