//! Aggregated analysis of a single code: structure, distances and bound
//! classification, duality, kernel, and image properties, in one
//! serialization-stable record.
//!
//! Analyses whose cost is gated by a limit are skipped (with a
//! machine-readable reason) rather than failing the whole report; genuine
//! invariant violations surface as [`Error::Internal`] so callers can stop
//! the build. Serialized field order is fixed by declaration order and all
//! collections are ordered, so equal reports serialize to equal bytes.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::code::LinearCode;
use crate::dual;
use crate::error::Error;
use crate::kernel;
use crate::rational::Rational;

/// Cost gates for the expensive analyses.
#[derive(Clone, Copy, Debug)]
pub struct AnalysisLimits {
    /// Enumeration-based analyses (distances) refuse codes larger than this.
    pub max_enum: u64,
    /// Quadratic analyses (kernel, image checks) refuse codes larger than
    /// this.
    pub max_kernel: u64,
}

impl Default for AnalysisLimits {
    fn default() -> Self {
        AnalysisLimits {
            max_enum: 1 << 20,
            max_kernel: 1 << 12,
        }
    }
}

/// Distance and Singleton-type classification fields.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundsSection {
    pub d_lee: u64,
    pub d_hamming: u64,
    /// A minimum-Lee-weight nonzero codeword.
    pub witness: Vec<u64>,
    pub lhs: u64,
    pub mlds_slack: Rational,
    pub mldr_slack: u64,
    pub is_mlds: bool,
    pub is_mldr: bool,
}

/// The rank-nullity identity `rank(C) + free_rank(C^⊥) = n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RankNullity {
    pub rank: usize,
    pub dual_free_rank: usize,
    pub n: usize,
}

/// Dual-side fields; always present since the dual is structural.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DualitySection {
    pub dual_generators: Vec<Vec<u64>>,
    pub dual_type_deltas: Vec<usize>,
    pub is_self_orthogonal: bool,
    pub is_self_dual: bool,
    pub rank_nullity: RankNullity,
}

/// Kernel-side fields.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KernelSection {
    pub dim_m: u32,
    pub kernel_size: u64,
    /// Admissible dimensions for the code's type (`None` when `s = 1`).
    pub allowed_dims: Option<Vec<usize>>,
}

/// Gray-image properties.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ImageSection {
    pub gray_length: u64,
    pub linear: bool,
    pub self_orthogonal: bool,
}

/// One analysis that was not run, with a machine-readable reason.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Skipped {
    pub analysis: String,
    pub kind: String,
    pub detail: String,
}

/// The full per-code record.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub p: u64,
    pub s: u32,
    pub n: usize,
    /// Standard-form generator rows in original coordinates; re-analyzing
    /// them must reproduce this report exactly.
    pub generators: Vec<Vec<u64>>,
    pub type_deltas: Vec<usize>,
    pub rank: usize,
    pub free_rank: usize,
    /// `|C|` when it fits in 64 bits.
    pub size: Option<u64>,
    /// `log_p |C|`, always exact.
    pub size_exponent: u64,
    /// `log_{p^s} |C|`, always exact.
    pub log_size: Rational,
    pub bounds: Option<BoundsSection>,
    pub duality: DualitySection,
    pub kernel: Option<KernelSection>,
    pub image: Option<ImageSection>,
    pub skipped: Vec<Skipped>,
}

fn skip_entry(analysis: &str, e: &Error) -> Skipped {
    let kind = match e {
        Error::EnumerationLimit { .. } => "enumeration-limit",
        Error::KernelLimit { .. } => "kernel-limit",
        Error::ZeroCode => "zero-code",
        _ => "error",
    };
    Skipped {
        analysis: analysis.to_string(),
        kind: kind.to_string(),
        detail: e.to_string(),
    }
}

/// Runs every analysis on one code, skipping those whose limit is
/// exceeded. Internal invariant violations propagate as errors.
pub fn analyze(code: &LinearCode, limits: &AnalysisLimits) -> Result<AnalysisReport, Error> {
    let ring = code.ring();
    let mut skipped = Vec::new();

    let bounds_section = match bounds::classify(code, limits.max_enum) {
        Ok(r) => Some(BoundsSection {
            d_lee: r.d_lee(),
            d_hamming: r.d_hamming(),
            witness: r.witness().entries().to_vec(),
            lhs: r.lhs(),
            mlds_slack: r.mlds_slack(),
            mldr_slack: r.mldr_slack(),
            is_mlds: r.is_mlds(),
            is_mldr: r.is_mldr(),
        }),
        Err(e @ (Error::ZeroCode | Error::EnumerationLimit { .. })) => {
            skipped.push(skip_entry("bounds", &e));
            None
        }
        Err(e) => return Err(e),
    };

    let dual = dual::dual_code(code)?;
    let rank_nullity = RankNullity {
        rank: code.rank(),
        dual_free_rank: dual.free_rank(),
        n: code.length(),
    };
    if rank_nullity.rank + rank_nullity.dual_free_rank != rank_nullity.n {
        return Err(Error::Internal {
            check: "rank-nullity",
            details: alloc::format!(
                "rank {} + dual free rank {} != n {}",
                rank_nullity.rank,
                rank_nullity.dual_free_rank,
                rank_nullity.n
            ),
        });
    }
    let is_self_dual = code.same_code_as(&dual);
    let duality = DualitySection {
        dual_generators: dual
            .generators()
            .iter()
            .map(|g| g.entries().to_vec())
            .collect(),
        dual_type_deltas: dual.code_type().deltas().to_vec(),
        is_self_orthogonal: dual::is_self_orthogonal(code),
        is_self_dual,
        rank_nullity,
    };

    let kernel_section = match kernel::kernel_of_gray_image(code, limits.max_kernel) {
        Ok(k) => Some(KernelSection {
            dim_m: k.dim_m(),
            kernel_size: k.kernel_images().len() as u64,
            allowed_dims: k
                .allowed_dims()
                .map(|dims| dims.iter().copied().collect()),
        }),
        Err(e @ Error::KernelLimit { .. }) => {
            skipped.push(skip_entry("kernel", &e));
            None
        }
        Err(e) => return Err(e),
    };

    // Image linearity is kernel-equality; self-orthogonality is its own
    // quadratic sweep under the same gate.
    let image_section = match (&kernel_section, code.size()) {
        (Some(k), Some(sz)) => {
            let self_orth = kernel::self_orthogonal_image(code, limits.max_kernel)?;
            Some(ImageSection {
                gray_length: code.length() as u64 * ring.half_power(),
                linear: k.kernel_size as u128 == sz,
                self_orthogonal: self_orth,
            })
        }
        _ => {
            if kernel_section.is_some() {
                // Kernel ran but the size is unrepresentable; cannot happen
                // for gated sizes, so treat as a fault.
                return Err(Error::Internal {
                    check: "image-size",
                    details: "kernel ran on a code of unrepresentable size".to_string(),
                });
            }
            skipped.push(Skipped {
                analysis: "image".to_string(),
                kind: "kernel-limit".to_string(),
                detail: "image checks share the kernel gate".to_string(),
            });
            None
        }
    };

    // Cardinality remark: a self-dual code whose image has self-dual size
    // inside F_p^(p^(s-1)·n) forces p = 2, s = 2 (for s ≥ 2).
    if ring.s() >= 2 && is_self_dual {
        let ambient_exp = ring.half_power() * code.length() as u64;
        if 2 * code.size_exponent() == ambient_exp && (ring.p(), ring.s()) != (2, 2) {
            return Err(Error::Internal {
                check: "image-cardinality-remark",
                details: alloc::format!(
                    "self-dual code over Z_{} with half-ambient image size",
                    ring.modulus()
                ),
            });
        }
    }

    Ok(AnalysisReport {
        p: ring.p(),
        s: ring.s(),
        n: code.length(),
        generators: code
            .generators()
            .iter()
            .map(|g| g.entries().to_vec())
            .collect(),
        type_deltas: code.code_type().deltas().to_vec(),
        rank: code.rank(),
        free_rank: code.free_rank(),
        size: code.size().and_then(|sz| u64::try_from(sz).ok()),
        size_exponent: code.size_exponent(),
        log_size: code.code_type().log_size(),
        bounds: bounds_section,
        duality,
        kernel: kernel_section,
        image: image_section,
        skipped,
    })
}
