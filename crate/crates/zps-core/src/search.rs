//! Deterministic search over small codes: seeded random generation, the
//! exhaustive candidate space of standard forms, target filtering, and the
//! fixed corpus used by the property suites.
//!
//! Reproducibility contract: every candidate is a pure function of
//! `(seed, index)`. The generator is ChaCha8 keyed with the 32-byte block
//! `seed_le(8) ‖ index_le(8) ‖ "zps-code-search!"`, and all draws happen in
//! a fixed documented order (type, then pivot columns by Fisher–Yates, then
//! row entries column-by-column). Identical specs therefore produce
//! identical candidate streams on every platform, given the locked
//! dependency set.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::code::{CodeType, LinearCode};
use crate::error::Error;
use crate::report::{analyze, AnalysisLimits, AnalysisReport};
use crate::ring::RingParams;

/// Hard cap on the exhaustive candidate space.
pub const EXHAUSTIVE_CANDIDATE_CAP: u64 = 1 << 20;

/// Seed of [`fixed_corpus`]; do not change, frozen values depend on it.
pub const CORPUS_SEED: u64 = 0xC0DE_5EED;

/// Properties a search can select for.
#[derive(
    Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize,
)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Mlds,
    Mldr,
    SelfDual,
    SelfOrthogonalImage,
    LinearImage,
}

/// Candidate generation strategy.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchMode {
    /// Every standard form over the ring and length, up to the hard cap.
    Exhaustive,
    /// `budget` seeded random candidates.
    Random { budget: u64 },
}

/// A full description of one search run.
#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub ring: RingParams,
    pub n: usize,
    /// Restrict candidates to exactly this type.
    pub type_constraint: Option<CodeType>,
    pub mode: SearchMode,
    pub seed: u64,
    /// Targets to filter on; empty keeps every deduplicated candidate.
    pub targets: BTreeSet<Target>,
    /// Random draws without a type constraint reject codes larger than
    /// this.
    pub max_size: u64,
}

impl SearchSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if self.n == 0 {
            return Err(Error::ZeroLength);
        }
        if let SearchMode::Random { budget: 0 } = self.mode {
            return Err(Error::InvalidBudget);
        }
        if self.max_size == 0 {
            return Err(Error::UnsatisfiableType(
                "size cap 0 rejects every code".into(),
            ));
        }
        if let Some(t) = &self.type_constraint {
            if t.s() != self.ring.s() {
                return Err(Error::UnsatisfiableType(alloc::format!(
                    "type has {} classes but s = {}",
                    t.s(),
                    self.ring.s()
                )));
            }
            if t.rank() > self.n {
                return Err(Error::UnsatisfiableType(alloc::format!(
                    "type needs {} pivots but n = {}",
                    t.rank(),
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// One kept candidate with its full analysis and per-target verdicts.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SearchRecord {
    pub index: u64,
    /// Canonical generator rows (standard form, original coordinates).
    pub rows: Vec<Vec<u64>>,
    pub report: AnalysisReport,
    pub verdicts: BTreeMap<Target, bool>,
}

fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&index.to_le_bytes());
    key[16..32].copy_from_slice(b"zps-code-search!");
    ChaCha8Rng::from_seed(key)
}

/// The deterministic candidate at `(spec.seed, index)`.
///
/// Draw order: pivot count `k` uniform in `0..=n` and a class per pivot
/// uniform in `0..s` (redrawn together while the implied size exceeds
/// `spec.max_size`); pivot columns by a Fisher–Yates shuffle of `0..n`;
/// then per row, columns ascending: a unit multiplier at the row's own
/// pivot, nothing at other pivots, a uniform multiplier at free columns.
/// Each row of class `i` is `p^i` times a vector with a unit at its pivot,
/// so the reduced type is exactly the drawn type.
pub fn random_code(spec: &SearchSpec, index: u64) -> Result<LinearCode, Error> {
    spec.validate()?;
    let ring = spec.ring;
    let (p, s, m, n) = (ring.p(), ring.s(), ring.modulus(), spec.n);
    let mut rng = stream_rng(spec.seed, index);

    let classes: Vec<u32> = match &spec.type_constraint {
        Some(t) => (0..s)
            .flat_map(|i| core::iter::repeat(i).take(t.delta(i as usize)))
            .collect(),
        None => loop {
            let k = rng.gen_range(0..=n);
            let classes: Vec<u32> = (0..k).map(|_| rng.gen_range(0..s)).collect();
            let mut deltas = vec![0usize; s as usize];
            for &c in &classes {
                deltas[c as usize] += 1;
            }
            match CodeType::new(deltas).size(p) {
                Some(sz) if sz <= spec.max_size as u128 => break classes,
                _ => continue,
            }
        },
    };
    let k = classes.len();

    let mut cols: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        cols.swap(i, j);
    }
    let pivot_cols = &cols[..k];
    let mut is_pivot = vec![false; n];
    for &c in pivot_cols {
        is_pivot[c] = true;
    }

    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(k);
    for (t, &e) in classes.iter().enumerate() {
        let pe = p.pow(e);
        let radix = p.pow(s - e);
        let mut row = vec![0u64; n];
        for (j, cell) in row.iter_mut().enumerate() {
            if j == pivot_cols[t] {
                let unit = loop {
                    let u = rng.gen_range(0..radix);
                    if u % p != 0 {
                        break u;
                    }
                };
                *cell = pe * unit % m;
            } else if !is_pivot[j] {
                *cell = pe * rng.gen_range(0..radix) % m;
            }
        }
        rows.push(row);
    }

    let code = LinearCode::from_integer_rows(ring, n, &rows)
        .expect("drawn rows share ring and length");
    let mut expect = vec![0usize; s as usize];
    for &c in &classes {
        expect[c as usize] += 1;
    }
    debug_assert_eq!(code.code_type().deltas(), &expect[..]);
    Ok(code)
}

/// Pivots of an exhaustive assignment, in reduction order (class, column).
fn assignment_plan(digits: &[u32], s: u32) -> (Vec<(usize, u32)>, Vec<usize>) {
    let mut pivots: Vec<(usize, u32)> = Vec::new();
    let mut free = Vec::new();
    for (j, &d) in digits.iter().enumerate() {
        if d < s {
            pivots.push((j, d));
        } else {
            free.push(j);
        }
    }
    pivots.sort_by_key(|&(col, class)| (class, col));
    (pivots, free)
}

/// Radices of the free entry slots of one assignment: for each pivot row in
/// order, first its entries at later higher-class pivots, then its entries
/// at free columns.
fn slot_radices(ring: RingParams, pivots: &[(usize, u32)], free: &[usize]) -> Vec<u64> {
    let (p, s) = (ring.p(), ring.s());
    let mut radices = Vec::new();
    for (t, &(_, e)) in pivots.iter().enumerate() {
        for &(_, e2) in &pivots[t + 1..] {
            if e2 > e {
                radices.push(p.pow(e2 - e));
            }
        }
        for _ in free {
            radices.push(p.pow(s - e));
        }
    }
    radices
}

fn rows_for_state(
    ring: RingParams,
    n: usize,
    pivots: &[(usize, u32)],
    free: &[usize],
    state: &[u64],
) -> Vec<Vec<u64>> {
    let (p, m) = (ring.p(), ring.modulus());
    let mut rows = Vec::with_capacity(pivots.len());
    let mut idx = 0;
    for (t, &(col, e)) in pivots.iter().enumerate() {
        let pe = p.pow(e);
        let mut row = vec![0u64; n];
        row[col] = pe;
        for &(col2, e2) in &pivots[t + 1..] {
            if e2 > e {
                row[col2] = pe * state[idx] % m;
                idx += 1;
            }
        }
        for &fc in free {
            row[fc] = pe * state[idx] % m;
            idx += 1;
        }
        rows.push(row);
    }
    debug_assert_eq!(idx, state.len());
    rows
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Iterates the raw exhaustive candidate space: every choice of pivot
/// columns with classes plus every admissible set of remaining entries in
/// standard-form shape. Every code of length `n` appears (at its canonical
/// standard form, possibly alongside non-canonical presentations of other
/// codes — callers deduplicate). The visitor receives `(index, rows)`.
///
/// The space is counted first; if it exceeds `cap` (counting stops just
/// past the cap), nothing is visited and an error is returned. Returns the
/// total number of candidates visited.
pub fn exhaustive_candidates<F>(
    ring: RingParams,
    n: usize,
    type_filter: Option<&CodeType>,
    cap: u64,
    mut visit: F,
) -> Result<u64, Error>
where
    F: FnMut(u64, Vec<Vec<u64>>) -> Result<(), Error>,
{
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let s = ring.s();
    if let Some(t) = type_filter {
        if t.s() != s {
            return Err(Error::UnsatisfiableType(alloc::format!(
                "type has {} classes but s = {}",
                t.s(),
                s
            )));
        }
        if t.rank() > n {
            return Err(Error::UnsatisfiableType(alloc::format!(
                "type needs {} pivots but n = {}",
                t.rank(),
                n
            )));
        }
    }

    // Assignment iteration: one digit per column, classes 0..s-1 or s for
    // free. Without a filter, odometer over all (s+1)^n digit strings (the
    // cap bounds the iteration since every assignment yields a candidate);
    // with a filter, lexicographic permutations of the fixed multiset.
    let for_each_assignment = |handle: &mut dyn FnMut(&[u32]) -> Result<bool, Error>| -> Result<(), Error> {
        match type_filter {
            Some(t) => {
                let mut digits: Vec<u32> = (0..s)
                    .flat_map(|i| core::iter::repeat(i).take(t.delta(i as usize)))
                    .chain(core::iter::repeat(s).take(n - t.rank()))
                    .collect();
                digits.sort_unstable();
                loop {
                    if !handle(&digits)? {
                        return Ok(());
                    }
                    if !next_permutation(&mut digits) {
                        return Ok(());
                    }
                }
            }
            None => {
                let mut digits = vec![0u32; n];
                loop {
                    if !handle(&digits)? {
                        return Ok(());
                    }
                    let mut pos = n;
                    loop {
                        if pos == 0 {
                            return Ok(());
                        }
                        pos -= 1;
                        digits[pos] += 1;
                        if digits[pos] <= s {
                            break;
                        }
                        digits[pos] = 0;
                    }
                }
            }
        }
    };

    // First pass: count, stopping just past the cap.
    let mut count: u128 = 0;
    for_each_assignment(&mut |digits| {
        let (pivots, free) = assignment_plan(digits, s);
        let sub = slot_radices(ring, &pivots, &free)
            .iter()
            .try_fold(1u128, |acc, &r| acc.checked_mul(r as u128));
        match sub {
            Some(c) => count += c,
            None => count = u128::from(cap) + 1,
        }
        Ok(count <= cap as u128)
    })?;
    if count > cap as u128 {
        return Err(Error::CandidateSpaceTooLarge { count, cap });
    }

    // Second pass: visit every candidate.
    let mut index = 0u64;
    for_each_assignment(&mut |digits| {
        let (pivots, free) = assignment_plan(digits, s);
        let radices = slot_radices(ring, &pivots, &free);
        let mut state = vec![0u64; radices.len()];
        loop {
            visit(index, rows_for_state(ring, n, &pivots, &free, &state))?;
            index += 1;
            let mut pos = state.len();
            loop {
                if pos == 0 {
                    return Ok(true);
                }
                pos -= 1;
                state[pos] += 1;
                if state[pos] < radices[pos] {
                    break;
                }
                state[pos] = 0;
            }
        }
    })?;
    Ok(index)
}

fn verdict(report: &AnalysisReport, target: Target) -> bool {
    match target {
        Target::Mlds => report.bounds.as_ref().is_some_and(|b| b.is_mlds),
        Target::Mldr => report.bounds.as_ref().is_some_and(|b| b.is_mldr),
        Target::SelfDual => report.duality.is_self_dual,
        Target::SelfOrthogonalImage => {
            report.image.as_ref().is_some_and(|i| i.self_orthogonal)
        }
        Target::LinearImage => report.image.as_ref().is_some_and(|i| i.linear),
    }
}

/// Runs a search: generates candidates, deduplicates by canonical standard
/// form, analyzes each new code, and keeps those matching any requested
/// target (all of them when no target is given). Limit overruns inside an
/// analysis mark sections skipped (a skipped section never matches);
/// internal invariant violations abort the search.
pub fn run_search(
    spec: &SearchSpec,
    limits: &AnalysisLimits,
) -> Result<Vec<SearchRecord>, Error> {
    spec.validate()?;
    let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    let mut records: Vec<SearchRecord> = Vec::new();

    let mut handle = |index: u64, code: LinearCode| -> Result<(), Error> {
        let fingerprint: Vec<Vec<u64>> = code
            .generators()
            .iter()
            .map(|g| g.entries().to_vec())
            .collect();
        if !seen.insert(fingerprint.clone()) {
            return Ok(());
        }
        let report = analyze(&code, limits)?;
        let verdicts: BTreeMap<Target, bool> = spec
            .targets
            .iter()
            .map(|&t| (t, verdict(&report, t)))
            .collect();
        if spec.targets.is_empty() || verdicts.values().any(|&b| b) {
            records.push(SearchRecord {
                index,
                rows: fingerprint,
                report,
                verdicts,
            });
        }
        Ok(())
    };

    match spec.mode {
        SearchMode::Exhaustive => {
            exhaustive_candidates(
                spec.ring,
                spec.n,
                spec.type_constraint.as_ref(),
                EXHAUSTIVE_CANDIDATE_CAP,
                |index, rows| {
                    let code = LinearCode::from_integer_rows(spec.ring, spec.n, &rows)
                        .expect("candidate rows share ring and length");
                    handle(index, code)
                },
            )?;
        }
        SearchMode::Random { budget } => {
            for index in 0..budget {
                handle(index, random_code(spec, index)?)?;
            }
        }
    }
    Ok(records)
}

/// The five rings of the fixed corpus.
pub fn corpus_rings() -> Vec<RingParams> {
    [(2u64, 2u32), (2, 3), (3, 2), (3, 3), (5, 2)]
        .iter()
        .map(|&(p, s)| RingParams::new(p, s).expect("corpus rings are valid"))
        .collect()
}

/// The fixed 540-code corpus: 36 seeded random codes per (ring, n) cell,
/// rings per [`corpus_rings`], lengths 1..=3, sizes capped at 4096. The
/// stream index of cell `(ring r, length n)` draw `j` is
/// `((r·3 + (n-1))·36 + j)`, all under [`CORPUS_SEED`].
pub fn fixed_corpus() -> Vec<LinearCode> {
    let mut out = Vec::with_capacity(540);
    for (ri, ring) in corpus_rings().into_iter().enumerate() {
        for n in 1usize..=3 {
            let spec = SearchSpec {
                ring,
                n,
                type_constraint: None,
                mode: SearchMode::Random { budget: 36 },
                seed: CORPUS_SEED,
                targets: BTreeSet::new(),
                max_size: 4096,
            };
            for j in 0..36u64 {
                let index = ((ri as u64 * 3) + (n as u64 - 1)) * 36 + j;
                out.push(random_code(&spec, index).expect("corpus draw is valid"));
            }
        }
    }
    out
}
