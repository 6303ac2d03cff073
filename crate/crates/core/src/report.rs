//! Machine-readable verdicts and the aggregated verification report.
//!
//! Every verdict carries the computed numbers, not just pass/fail, so a
//! report is auditable after the fact. Polynomials and rationals are
//! rendered in the canonical text form; face columns are reported 1-based
//! to match the ambient column-index language.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::groebner::{KrullDimension, QuotientDimension};
use crate::toric::HomogeneityAudit;

/// Which route produced the initial ideal inside the characteristic model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GradedPath {
    /// Standard-graded input: the toric ideal is its own initial ideal.
    Direct,
    /// Non-graded input: contraction of the homogenized toric ideal at ξ0.
    Homogenized,
}

/// Dimension drop certificate for the bilinear forms over the toric ring.
#[derive(Debug, Clone, Serialize)]
pub struct ParameterTheoremVerdict {
    pub n: usize,
    pub d: usize,
    pub rank: usize,
    /// Number of Euler symbol forms adjoined (= d).
    pub forms: usize,
    /// dim k[x,ξ]/I_A, expected n + rank.
    pub dim_product: KrullDimension,
    /// dim k[x,ξ]/(I_A + ⟨Axξ⟩), expected n.
    pub dim_cut: KrullDimension,
    /// dim_product − dim_cut, expected rank.
    pub drop: Option<usize>,
    /// True when the drop equals the number of forms, i.e. the forms are
    /// part of a system of parameters (requires rank = d).
    pub sop_certified: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HolonomicityVerdict {
    pub n: usize,
    /// Krull dimension of the characteristic model, expected n.
    pub dimension: KrullDimension,
    /// dimension ≤ n; certifies holonomicity of every fiber at once since
    /// the ideal is parameter-free.
    pub holonomic: bool,
    pub graded_path: GradedPath,
    /// The direct (deformation) and homogenized routes to the initial
    /// ideal produced identical reduced bases.
    pub routes_consistent: bool,
    pub pass: bool,
}

/// Tri-state outcome for checks that can be skipped with a reason.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomogenizationVerdict {
    /// `skipped` for standard-graded input (with the reason recorded),
    /// otherwise pass/fail.
    pub status: VerdictStatus,
    /// Standard-graded input: nothing to reduce.
    pub trivially_consistent: bool,
    /// Reduced-basis equality of the initial ideal against the ξ0 ↦ 0
    /// contraction of the homogenized toric ideal, after the index shift.
    pub xi_level_equal: Option<bool>,
    /// Same comparison with the Euler forms of Â adjoined on both sides.
    pub x_extended_equal: Option<bool>,
    pub reason: Option<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberSample {
    /// Sampled nonzero x-point, rendered exactly.
    pub point: Vec<String>,
    pub degree: QuotientDimension,
    /// Resampling attempts consumed before a finite fiber was found.
    pub resamples: usize,
}

/// Finiteness of the generic fiber of the characteristic model. The fiber
/// degree is an invariant of the model R, not a claim about the holonomic
/// rank of the underlying system; R only surjects onto the associated
/// graded module.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyVerdict {
    /// Structural: no characteristic-ideal generator involves parameter
    /// variables, so one dimension bound covers the whole family.
    pub parameter_free_generators: bool,
    /// Every sampled point and outcome, including resampled attempts.
    pub samples: Vec<FiberSample>,
    /// The common finite fiber degree, when the final attempt of every
    /// sample slot agrees.
    pub common_degree: Option<usize>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceAuditEntry {
    /// 1-based column indices of the face.
    pub columns: Vec<usize>,
    pub size: usize,
    /// Expected dimension |τ| from the theorem applied to A_τ.
    pub expected: usize,
    pub computed: KrullDimension,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceAuditVerdict {
    pub entries: Vec<FaceAuditEntry>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransversalityReport {
    pub faces: usize,
    pub samples_per_face: usize,
    pub instances: usize,
    pub passed: usize,
    /// A deliberately boundary instance (zero ξ-coordinate) was refused
    /// with the hypothesis-violation diagnosis.
    pub boundary_refusal_diagnosed: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ToricSection {
    pub kernel_basis: Vec<Vec<String>>,
    pub groebner_basis: Vec<String>,
    pub homogeneity: HomogeneityAudit,
    pub standard_graded: bool,
    /// dim k[ξ]/I_A, expected rank(A).
    pub dimension: KrullDimension,
    pub rank: usize,
    pub pass: bool,
}

/// Face listing for reports.
#[derive(Debug, Clone, Serialize)]
pub struct FaceInfo {
    /// 1-based column indices.
    pub columns: Vec<usize>,
    pub normal: Vec<String>,
    pub dim: usize,
    pub indicator: Vec<u8>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacteristicSection {
    pub n: usize,
    pub generators: Vec<String>,
    pub graded_path: GradedPath,
    pub routes_consistent: bool,
    pub dimension: KrullDimension,
}

/// Aggregated machine-readable verdicts for one input matrix.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub label: Option<String>,
    pub matrix: Vec<Vec<i64>>,
    pub n: usize,
    pub d: usize,
    pub rank: usize,
    pub standard_graded: bool,
    /// Echoed only; no verdict depends on it.
    pub beta: Option<Vec<String>>,
    pub seed: u64,
    pub samples: usize,
    pub toric: ToricSection,
    pub parameter_theorem: ParameterTheoremVerdict,
    pub holonomicity: HolonomicityVerdict,
    pub homogenization: HomogenizationVerdict,
    pub family: FamilyVerdict,
    pub face_audit: FaceAuditVerdict,
    pub transversality: TransversalityReport,
    pub all_pass: bool,
    pub engine_version: String,
    pub timing_ms: BTreeMap<String, u64>,
}
