//! b-coefficients, statistical dimensions, conformal weights and the resolved
//! spectrum.

use num_complex::Complex64;

use super::field::{CosetField, CosetSpec};
use super::{selection, Coset};
use crate::error::{Error, Result};
use crate::modular::{h_spin, h_su, h_u1, s_u1_entry};
use crate::rational::RationalWeight;

/// One vacuum-pair orbit of `exp`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumRow {
    /// Smallest field of the orbit.
    pub representative: CosetField,
    pub orbit_size: usize,
    /// Order of the stabilizer; the orbit splits into this many irreducibles.
    pub stabilizer_order: usize,
    /// Statistical dimension of the (reducible) label.
    pub dimension: f64,
    /// `dimension / stabilizer_order`, shared by every irreducible piece.
    pub piece_dimension: f64,
    pub h_mod1: RationalWeight,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedSpectrum {
    pub spec: CosetSpec,
    pub central_charge: RationalWeight,
    pub exp_size: usize,
    pub vp_order: usize,
    /// Sorted by `(h_mod1, piece_dimension, representative)`.
    pub rows: Vec<SpectrumRow>,
    /// Sum of the stabilizer orders.
    pub irrep_count: usize,
}

impl Coset {
    /// `b(i, alpha) = sum_w S_{i, w(1)} conj(S'_{alpha, w(1)})` over the
    /// vacuum pairs `w`, returned as a complex number.
    pub fn b_coeff_complex(&self, f: &CosetField) -> Result<Complex64> {
        self.require_exp(f)?;
        Ok(self.vp_sum(f))
    }

    /// Real part of [`Coset::b_coeff_complex`].
    pub fn b_coeff(&self, f: &CosetField) -> Result<f64> {
        self.b_coeff_complex(f).map(|b| b.re)
    }

    /// `b(f) / b(vacuum)`.
    pub fn stat_dim(&self, f: &CosetField) -> Result<f64> {
        let b = self.b_coeff(f)?;
        Ok(b / self.vp_sum(&CosetField::vacuum(&self.spec)).re)
    }

    /// `d(lambda0) d(lam1) d(lam2)` from the factor S-matrices.
    pub fn qdim_product(&self, f: &CosetField) -> Result<f64> {
        f.check_factors(&self.spec)?;
        let md = self.modular();
        Ok(md.big.qdim(&f.lambda0) * md.su_m.qdim(&f.lam1) * md.su_n.qdim(&f.lam2))
    }

    /// `h_i - h_alpha mod 1`, with `h_i = h(lambda0) + h(pi0)` and
    /// `h_alpha = h(lam1) + h(lam2) + h(qdot)`.
    pub fn h_mod1(&self, f: &CosetField) -> Result<RationalWeight> {
        f.check_factors(&self.spec)?;
        Ok((numerator_weight(f) - denominator_weight(f)).mod_one())
    }

    /// Partitions `exp` into vacuum-pair orbits and resolves each fixed point.
    pub fn resolve_spectrum(&self, budget: u128) -> Result<ResolvedSpectrum> {
        let exp = self.enumerate_exp(budget)?;
        let g = self.vp_group();
        let b_vacuum = self.vp_sum(&CosetField::vacuum(&self.spec)).re;

        let mut visited = vec![false; exp.len()];
        let mut rows = Vec::new();
        for (p, f) in exp.iter().enumerate() {
            if visited[p] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..g.order())
                .map(|w| {
                    exp.binary_search(&g.act(w, f))
                        .expect("vacuum pairs preserve the selection rules")
                })
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &q in &orbit {
                visited[q] = true;
            }
            let stabilizer_order = g.stabilizer_order(f);
            debug_assert_eq!(orbit.len() * stabilizer_order, g.order());
            let dimension = self.vp_sum(f).re / b_vacuum;
            rows.push(SpectrumRow {
                representative: f.clone(),
                orbit_size: orbit.len(),
                stabilizer_order,
                dimension,
                piece_dimension: dimension / stabilizer_order as f64,
                h_mod1: (numerator_weight(f) - denominator_weight(f)).mod_one(),
            });
        }
        rows.sort_by(|a, b| {
            a.h_mod1
                .cmp(&b.h_mod1)
                .then_with(|| a.piece_dimension.total_cmp(&b.piece_dimension))
                .then_with(|| a.representative.cmp(&b.representative))
        });
        let irrep_count = rows.iter().map(|r| r.stabilizer_order).sum();
        Ok(ResolvedSpectrum {
            spec: self.spec,
            central_charge: self.spec.central_charge(),
            exp_size: exp.len(),
            vp_order: g.order(),
            rows,
            irrep_count,
        })
    }

    fn require_exp(&self, f: &CosetField) -> Result<()> {
        f.check_factors(&self.spec)?;
        if !selection::passes(f, &self.spec)? {
            return Err(Error::NotInExp(f.to_string()));
        }
        Ok(())
    }

    fn vp_sum(&self, f: &CosetField) -> Complex64 {
        let md = self.modular();
        let modulus = self.spec.u1_modulus();
        let row_big = md.big.index(&f.lambda0);
        let row_m = md.su_m.index(&f.lam1);
        let row_n = md.su_n.index(&f.lam2);
        let row_spin = f.pi0.index();
        self.vp_group()
            .elements()
            .iter()
            .map(|w| {
                let v = &w.image;
                let numerator = md.big.s.get(row_big, md.big.index(&v.lambda0))
                    * md.spin.get(row_spin, v.pi0.index());
                let denominator = md.su_m.s.get(row_m, md.su_m.index(&v.lam1))
                    * md.su_n.s.get(row_n, md.su_n.index(&v.lam2))
                    * s_u1_entry(modulus, f.qdot.value(), v.qdot.value());
                numerator * denominator.conj()
            })
            .sum()
    }
}

fn numerator_weight(f: &CosetField) -> RationalWeight {
    h_su(&f.lambda0) + h_spin(&f.pi0)
}

fn denominator_weight(f: &CosetField) -> RationalWeight {
    h_su(&f.lam1) + h_su(&f.lam2) + h_u1(&f.qdot)
}

/// `h_alpha - h_i` for a field; a non-negative integer on vacuum-pair images.
pub fn weight_gap(f: &CosetField) -> RationalWeight {
    denominator_weight(f) - numerator_weight(f)
}

impl ResolvedSpectrum {
    /// Total number of fields over all orbits.
    pub fn orbit_total(&self) -> usize {
        self.rows.iter().map(|r| r.orbit_size).sum()
    }
}
