//! Builds output documents from the core library.

use ks_coset_core::affine::enumerate_su;
use ks_coset_core::coset::{
    selection_check, u1_coset_b_closed_form, u1_coset_b_vacuum, u1_coset_vps, weight_gap,
};
use ks_coset_core::duality::{check_duality, Fingerprint};
use ks_coset_core::modular::{h_spin, h_su, h_u1, qdim, s_spin, s_su, s_u1, SMatrix};
use ks_coset_core::{Coset, CosetSpec, RationalWeight, Result, SpinLabel, U1Charge};
use num_integer::gcd;

use crate::document::*;

pub fn spec_doc(spec: CosetSpec) -> SpecDoc {
    SpecDoc {
        m: spec.m,
        n: spec.n,
        k: spec.k,
    }
}

pub fn spectrum(spec: CosetSpec, budget: u128) -> Result<OutputDocument> {
    let resolved = Coset::new(spec)?.resolve_spectrum(budget)?;
    let rows = resolved
        .rows
        .iter()
        .map(|row| {
            let f = &row.representative;
            SpectrumRowDoc {
                lambda0: f.lambda0.to_string(),
                pi0: f.pi0.to_string(),
                lam1: f.lam1.to_string(),
                lam2: f.lam2.to_string(),
                qdot: f.qdot.to_string(),
                orbit_size: row.orbit_size,
                stabilizer_order: row.stabilizer_order,
                dimension: real(row.dimension),
                piece_dimension: real(row.piece_dimension),
                h_mod1: row.h_mod1.to_string(),
            }
        })
        .collect::<Vec<_>>();
    Ok(OutputDocument::new(
        Some(spec_doc(spec)),
        Payload::Spectrum(SpectrumPayload {
            central_charge: resolved.central_charge.to_string(),
            exp_size: resolved.exp_size,
            vp_order: resolved.vp_order,
            orbit_count: rows.len(),
            irrep_count: resolved.irrep_count,
            rows,
        }),
    ))
}

pub fn vps(spec: CosetSpec, verify: bool) -> Result<OutputDocument> {
    let coset = Coset::new(spec)?;
    let group = coset.vp_group();
    let mut all_passed = true;
    let mut elements = Vec::with_capacity(group.order());
    for (index, w) in group.elements().iter().enumerate() {
        let audit = if verify {
            let selection_rules = selection_check(&w.image, &spec)?;
            let gap = weight_gap(&w.image);
            let passed = selection_rules && gap.is_integer() && gap >= RationalWeight::ZERO;
            all_passed &= passed;
            Some(VpAuditDoc {
                selection_rules,
                weight_gap: gap.to_string(),
                passed,
            })
        } else {
            None
        };
        elements.push(VpElementDoc {
            j: w.j,
            i: w.i,
            lambda0: w.image.lambda0.to_string(),
            pi0: w.image.pi0.to_string(),
            lam1: w.image.lam1.to_string(),
            lam2: w.image.lam2.to_string(),
            qdot: w.image.qdot.to_string(),
            element_order: group.element_order(index),
            audit,
        });
    }
    if verify {
        all_passed &= group.check_group_axioms().is_ok();
    }
    Ok(OutputDocument::new(
        Some(spec_doc(spec)),
        Payload::VpGroup(VpGroupPayload {
            order: group.order(),
            elements,
            audit_passed: verify.then_some(all_passed),
        }),
    ))
}

fn fingerprint_doc(fp: &Fingerprint) -> FingerprintDoc {
    FingerprintDoc {
        spec: spec_doc(fp.spec),
        central_charge: fp.central_charge.to_string(),
        irrep_count: fp.irrep_count,
        rows: fp
            .rows
            .iter()
            .map(|r| FingerprintRowDoc {
                h_mod1: r.h_mod1.to_string(),
                dimension: real(r.dimension),
                multiplicity: r.multiplicity,
            })
            .collect(),
    }
}

pub fn duality(spec: CosetSpec, budget: u128) -> Result<OutputDocument> {
    let report = check_duality(spec, budget)?;
    let checks = vec![
        CheckDoc {
            name: "central_charge".into(),
            left: report.left.central_charge.to_string(),
            right: report.right.central_charge.to_string(),
            equal: report.central_charge_equal,
        },
        CheckDoc {
            name: "irrep_count".into(),
            left: report.left.irrep_count.to_string(),
            right: report.right.irrep_count.to_string(),
            equal: report.irrep_count_equal,
        },
        CheckDoc {
            name: "weight_dimension_multiset".into(),
            left: format!("{} rows", report.left.rows.len()),
            right: format!("{} rows", report.right.rows.len()),
            equal: report.rows_equal,
        },
    ];
    let verdict = if report.passed() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(OutputDocument::new(
        Some(spec_doc(spec)),
        Payload::DualityReport(DualityPayload {
            left: fingerprint_doc(&report.left),
            right: fingerprint_doc(&report.right),
            checks,
            row_mismatches: report.row_mismatches.clone(),
            verdict,
        }),
    ))
}

fn factor_doc(
    name: String,
    s: &SMatrix,
    primaries: Vec<(String, RationalWeight)>,
) -> Result<FactorDoc> {
    let primaries = primaries
        .into_iter()
        .enumerate()
        .map(|(index, (label, h))| {
            Ok(PrimaryDoc {
                label,
                h: h.to_string(),
                qdim: real(qdim(s, index)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FactorDoc {
        name,
        unitarity_residual: real(s.unitarity_residual()),
        symmetry_residual: real(s.symmetry_residual()),
        primaries,
    })
}

fn su_factor(rank: usize, level: u32) -> Result<FactorDoc> {
    let s = s_su(rank, level);
    let primaries = enumerate_su(rank, level)
        .iter()
        .map(|w| (w.to_string(), h_su(w)))
        .collect();
    factor_doc(format!("su({rank})_{level}"), &s, primaries)
}

/// Primaries, weights, quantum dimensions and S-matrix residuals of the
/// five chiral factors of the coset.
pub fn modular(spec: CosetSpec) -> Result<OutputDocument> {
    let (m, n, k) = (spec.m, spec.n, spec.k);
    let half_dim = spec.spin_half_dim();
    let spin = factor_doc(
        format!("spin({})_1", 2 * half_dim),
        &s_spin(half_dim),
        SpinLabel::all(half_dim)
            .iter()
            .map(|s| (s.to_string(), h_spin(s)))
            .collect(),
    )?;
    let modulus = spec.u1_modulus();
    let u1 = factor_doc(
        format!("u1({modulus})"),
        &s_u1(modulus),
        (0..modulus)
            .map(|x| {
                let c = U1Charge::new(modulus, x as i64).expect("positive modulus");
                (c.to_string(), h_u1(&c))
            })
            .collect(),
    )?;
    let factors = vec![
        su_factor((m + n) as usize, k)?,
        spin,
        su_factor(m as usize, n + k)?,
        su_factor(n as usize, m + k)?,
        u1,
    ];
    Ok(OutputDocument::new(
        Some(spec_doc(spec)),
        Payload::ModularData(ModularPayload { factors }),
    ))
}

pub fn u1_coset(a: u64, b: u64) -> Result<OutputDocument> {
    let vps = u1_coset_vps(a, b)?;
    let vacuum_pairs = vps
        .iter()
        .map(|vp| U1VpDoc {
            x: vp.x.value(),
            y: vp.y.value(),
            z: vp.z.value(),
            weight_gap: (h_u1(&vp.x) + h_u1(&vp.y) - h_u1(&vp.z)).to_string(),
        })
        .collect();
    Ok(OutputDocument::new(
        None,
        Payload::U1Coset(U1CosetPayload {
            a,
            b,
            gcd: gcd(a, b),
            vacuum_pairs,
            b_vacuum_summed: real(u1_coset_b_vacuum(a, b)?),
            b_vacuum_closed_form: real(u1_coset_b_closed_form(a, b)),
        }),
    ))
}
