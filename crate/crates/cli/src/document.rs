//! The versioned output document shared by every subcommand.
//!
//! Rationals are always `"p/q"` strings. Reals are JSON numbers rounded to
//! 12 significant digits so that output bytes do not depend on the last
//! few ulps of a floating-point sum.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    /// `null` for commands that are not about one coset (`u1-coset`).
    pub spec: Option<SpecDoc>,
    pub payload: Payload,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecDoc {
    pub m: u32,
    pub n: u32,
    pub k: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Spectrum(SpectrumPayload),
    VpGroup(VpGroupPayload),
    DualityReport(DualityPayload),
    ModularData(ModularPayload),
    U1Coset(U1CosetPayload),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumPayload {
    pub central_charge: String,
    pub exp_size: usize,
    pub vp_order: usize,
    pub orbit_count: usize,
    pub irrep_count: usize,
    pub rows: Vec<SpectrumRowDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRowDoc {
    pub lambda0: String,
    pub pi0: String,
    pub lam1: String,
    pub lam2: String,
    pub qdot: String,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    pub dimension: f64,
    pub piece_dimension: f64,
    pub h_mod1: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VpGroupPayload {
    pub order: usize,
    pub elements: Vec<VpElementDoc>,
    /// Present when the self-audit ran.
    pub audit_passed: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VpElementDoc {
    pub j: i64,
    pub i: i64,
    pub lambda0: String,
    pub pi0: String,
    pub lam1: String,
    pub lam2: String,
    pub qdot: String,
    pub element_order: usize,
    pub audit: Option<VpAuditDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VpAuditDoc {
    pub selection_rules: bool,
    /// `h_alpha - h_i`, expected to be a non-negative integer.
    pub weight_gap: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualityPayload {
    pub left: FingerprintDoc,
    pub right: FingerprintDoc,
    pub checks: Vec<CheckDoc>,
    pub row_mismatches: Vec<String>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub left: String,
    pub right: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FingerprintDoc {
    pub spec: SpecDoc,
    pub central_charge: String,
    pub irrep_count: usize,
    pub rows: Vec<FingerprintRowDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FingerprintRowDoc {
    pub h_mod1: String,
    pub dimension: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModularPayload {
    pub factors: Vec<FactorDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub name: String,
    pub unitarity_residual: f64,
    pub symmetry_residual: f64,
    pub primaries: Vec<PrimaryDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrimaryDoc {
    pub label: String,
    pub h: String,
    pub qdim: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct U1CosetPayload {
    pub a: u64,
    pub b: u64,
    pub gcd: u64,
    pub vacuum_pairs: Vec<U1VpDoc>,
    pub b_vacuum_summed: f64,
    pub b_vacuum_closed_form: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct U1VpDoc {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub weight_gap: String,
}

/// Rounds to 12 significant digits; `-0.0` becomes `0.0`.
pub fn real(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { 0.0 } else { x };
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

impl OutputDocument {
    pub fn new(spec: Option<SpecDoc>, payload: Payload) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            spec,
            payload,
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
