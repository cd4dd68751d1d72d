//! Inner products, dual codes, self-orthogonality, and self-duality.
//!
//! The dual is built directly from the standard form. Group the permuted
//! coordinates into blocks: one block per pivot valuation class `i` (width
//! `δ_i`) followed by the free block (width `n - rank`). Writing the
//! class-`i` rows as `p^i·[0 … I A_{i,i+1} … A_{i,s}]` with `A_{i,j}` the
//! block at class-`j` columns divided by `p^i`, a generating set for the
//! dual consists of row blocks `l = 0, …, s-1`: block `l` carries `p^l`,
//! an identity at column block `s-l` (the free block when `l = 0`), zeros
//! to the right, and back-substituted blocks `M_{l,i}` to the left,
//!
//! ```text
//! M_{l,i} = -( A_{i,s-l} + Σ_{j=i+1}^{s-l-1} A_{i,j}·M_{l,j} )  mod p^(s-i-l)
//! ```
//!
//! computed for `i = s-l-1` down to `0`. Each dual row block is orthogonal
//! to each primal row block by construction, and counting pivot valuations
//! shows the rows span the full annihilator: `|C|·|C^⊥| = p^(s·n)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::code::{GeneratorMatrix, LinearCode};
use crate::error::Error;
use crate::ring::{Residue, RingVector};

/// The standard bilinear form `<v, w> = Σ v_i·w_i` in `Z_{p^s}`.
pub fn inner_product(v: &RingVector, w: &RingVector) -> Result<Residue, Error> {
    if v.ring() != w.ring() {
        return Err(Error::MixedRings);
    }
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: w.len(),
        });
    }
    let m = v.ring().modulus();
    let mut acc: u64 = 0;
    for (a, b) in v.entries().iter().zip(w.entries()) {
        acc = (acc + a * b % m) % m;
    }
    Ok(v.ring().residue(acc))
}

type Mat = Vec<Vec<u64>>;

/// `C^⊥ = { v : <v, c> = 0 for all c in C }`, computed structurally from
/// the standard form — no enumeration at any size.
pub fn dual_code(code: &LinearCode) -> Result<LinearCode, Error> {
    let ring = code.ring();
    let p = ring.p();
    let s = ring.s() as usize;
    let m = ring.modulus();
    let n = code.length();
    let deltas = code.code_type().deltas().to_vec();
    let rank = code.rank();

    // block_start[i] = first pivot index (row and permuted column) of
    // valuation class i; the free block begins at `rank`.
    let mut block_start = vec![0usize; s + 1];
    for i in 0..s {
        block_start[i + 1] = block_start[i] + deltas[i];
    }
    let width = |j: usize| if j < s { deltas[j] } else { n - rank };
    let col_of = |j: usize, c: usize| {
        if j < s {
            block_start[j] + c
        } else {
            rank + c
        }
    };

    // A_{i,j}: the class-i rows at block-j columns, divided by p^i.
    let a_block = |i: usize, j: usize| -> Mat {
        let pi = p.pow(i as u32);
        (0..deltas[i])
            .map(|u| {
                let row = code.standard_rows()[block_start[i] + u].entries();
                (0..width(j))
                    .map(|c| {
                        let x = row[col_of(j, c)];
                        debug_assert_eq!(x % pi, 0, "class-i rows are divisible by p^i");
                        x / pi
                    })
                    .collect()
            })
            .collect()
    };

    let mut dual_rows: Vec<RingVector> = Vec::new();
    for l in 0..s {
        // Row block l pivots on column block s-l (the free block for l = 0).
        let pivot_block = s - l;
        let rows_l = width(pivot_block);
        if rows_l == 0 {
            continue;
        }
        // Back-substitute M_{l,i} for i = s-l-1 down to 0.
        let mut mblocks: Vec<Mat> = vec![Vec::new(); pivot_block];
        for i in (0..pivot_block).rev() {
            let modulus = p.pow((s - i - l) as u32);
            let a_end = a_block(i, pivot_block);
            let mut mi = vec![vec![0u64; rows_l]; deltas[i]];
            for j in i + 1..pivot_block {
                if deltas[j] == 0 {
                    continue;
                }
                let a_mid = a_block(i, j);
                for u in 0..deltas[i] {
                    for v in 0..rows_l {
                        let mut acc = mi[u][v] as u128;
                        for c in 0..deltas[j] {
                            acc += a_mid[u][c] as u128 * mblocks[j][c][v] as u128;
                        }
                        mi[u][v] = (acc % modulus as u128) as u64;
                    }
                }
            }
            for u in 0..deltas[i] {
                for v in 0..rows_l {
                    let total = (mi[u][v] + a_end[u][v]) % modulus;
                    mi[u][v] = (modulus - total) % modulus;
                }
            }
            mblocks[i] = mi;
        }
        // Assemble the rows in permuted coordinates, then restore columns.
        let pl = p.pow(l as u32) % m;
        for v in 0..rows_l {
            let mut row = vec![0u64; n];
            for (i, mi) in mblocks.iter().enumerate() {
                for (c, mrow) in mi.iter().enumerate() {
                    row[col_of(i, c)] = pl * mrow[v] % m;
                }
            }
            row[col_of(pivot_block, v)] = pl;
            let mut orig = vec![0u64; n];
            for (j, &x) in row.iter().enumerate() {
                orig[code.column_permutation()[j]] = x;
            }
            dual_rows.push(ring.vector(&orig));
        }
    }

    let gm = GeneratorMatrix::new(ring, n, dual_rows).expect("dual rows share ring and length");
    let dual = LinearCode::from_generator_matrix(&gm);

    // Structural cross-checks, both O(rank^2 · n): the constructed rows
    // annihilate the generators, and the cardinalities multiply to the
    // ambient size.
    for g in code.generators() {
        for h in dual.generators() {
            let ip = inner_product(g, h)?;
            if !ip.is_zero() {
                return Err(Error::Internal {
                    check: "dual-orthogonality",
                    details: alloc::format!(
                        "generator {:?} against dual row {:?} gives {}",
                        g.entries(),
                        h.entries(),
                        ip.value()
                    ),
                });
            }
        }
    }
    let total = s as u64 * n as u64;
    if code.size_exponent() + dual.size_exponent() != total {
        return Err(Error::Internal {
            check: "dual-cardinality",
            details: alloc::format!(
                "exponents {} + {} != {}",
                code.size_exponent(),
                dual.size_exponent(),
                total
            ),
        });
    }
    Ok(dual)
}

/// True when `C ⊆ C^⊥`, decided on generators via bilinearity.
pub fn is_self_orthogonal(code: &LinearCode) -> bool {
    let gens = code.generators();
    gens.iter().all(|g| {
        gens.iter().all(|h| {
            inner_product(g, h)
                .map(|ip| ip.is_zero())
                .unwrap_or(false)
        })
    })
}

/// True when `C = C^⊥`.
pub fn is_self_dual(code: &LinearCode) -> Result<bool, Error> {
    let dual = dual_code(code)?;
    Ok(code.same_code_as(&dual))
}
