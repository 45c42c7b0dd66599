//! Fingerprint comparison between `G(m,n,k)` and its level-rank dual `G(k,n,m)`.
//!
//! A fingerprint is the central charge, the number of irreducibles, and the
//! multiset of `(h mod 1, statistical dimension)` over irreducibles, where a
//! spectrum row with stabilizer order `t` contributes `t` pieces of
//! dimension `d / t`.

use std::thread;

use crate::coset::{Coset, CosetSpec, ResolvedSpectrum};
use crate::error::Result;
use crate::rational::RationalWeight;

/// Dimensions are compared to this absolute tolerance.
pub const DIMENSION_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct FingerprintRow {
    pub h_mod1: RationalWeight,
    /// Rounded to a multiple of 1e-6.
    pub dimension: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fingerprint {
    pub spec: CosetSpec,
    pub central_charge: RationalWeight,
    pub irrep_count: usize,
    /// Sorted by `(h_mod1, dimension)`.
    pub rows: Vec<FingerprintRow>,
}

impl Fingerprint {
    pub fn from_spectrum(spectrum: &ResolvedSpectrum) -> Self {
        let mut pieces: Vec<(RationalWeight, i64)> = spectrum
            .rows
            .iter()
            .flat_map(|row| {
                let micro = (row.piece_dimension * 1e6).round() as i64;
                std::iter::repeat_n((row.h_mod1, micro), row.stabilizer_order)
            })
            .collect();
        pieces.sort_unstable();

        let mut rows: Vec<FingerprintRow> = Vec::new();
        let mut last: Option<(RationalWeight, i64)> = None;
        for piece in pieces {
            match rows.last_mut() {
                Some(row) if last == Some(piece) => row.multiplicity += 1,
                _ => rows.push(FingerprintRow {
                    h_mod1: piece.0,
                    dimension: piece.1 as f64 * 1e-6,
                    multiplicity: 1,
                }),
            }
            last = Some(piece);
        }
        Fingerprint {
            spec: spectrum.spec,
            central_charge: spectrum.central_charge,
            irrep_count: spectrum.irrep_count,
            rows,
        }
    }

    /// Sum of the row multiplicities.
    pub fn total_multiplicity(&self) -> usize {
        self.rows.iter().map(|r| r.multiplicity).sum()
    }
}

pub fn fingerprint(spec: CosetSpec, budget: u128) -> Result<Fingerprint> {
    let spectrum = Coset::new(spec)?.resolve_spectrum(budget)?;
    Ok(Fingerprint::from_spectrum(&spectrum))
}

/// Outcome of comparing `G(m,n,k)` with `G(k,n,m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualityReport {
    pub left: Fingerprint,
    pub right: Fingerprint,
    pub central_charge_equal: bool,
    pub irrep_count_equal: bool,
    pub rows_equal: bool,
    /// Human-readable descriptions of the first few row differences.
    pub row_mismatches: Vec<String>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.central_charge_equal && self.irrep_count_equal && self.rows_equal
    }
}

const MAX_REPORTED_MISMATCHES: usize = 8;

pub fn check_duality(spec: CosetSpec, budget: u128) -> Result<DualityReport> {
    let dual = spec.level_rank_dual();
    let (left, right) = thread::scope(|s| {
        let handle = s.spawn(move || fingerprint(dual, budget));
        let left = fingerprint(spec, budget);
        (left, handle.join().expect("fingerprint thread panicked"))
    });
    Ok(compare(left?, right?))
}

/// Compares two fingerprints component by component.
pub fn compare(left: Fingerprint, right: Fingerprint) -> DualityReport {
    let mut row_mismatches = Vec::new();
    if left.rows.len() != right.rows.len() {
        row_mismatches.push(format!(
            "{} distinct rows vs {}",
            left.rows.len(),
            right.rows.len()
        ));
    }
    for (a, b) in left.rows.iter().zip(&right.rows) {
        let same = a.h_mod1 == b.h_mod1
            && (a.dimension - b.dimension).abs() <= DIMENSION_TOLERANCE + 1e-12
            && a.multiplicity == b.multiplicity;
        if !same && row_mismatches.len() < MAX_REPORTED_MISMATCHES {
            row_mismatches.push(format!(
                "(h={}, d={:.6}, x{}) vs (h={}, d={:.6}, x{})",
                a.h_mod1, a.dimension, a.multiplicity, b.h_mod1, b.dimension, b.multiplicity
            ));
        }
    }
    DualityReport {
        central_charge_equal: left.central_charge == right.central_charge,
        irrep_count_equal: left.irrep_count == right.irrep_count,
        rows_equal: row_mismatches.is_empty(),
        row_mismatches,
        left,
        right,
    }
}
