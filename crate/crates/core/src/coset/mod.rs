//! The Grassmannian coset `G(m,n,k)`.
//!
//! A coset label is the quintuple `(lambda0, pi0; lam1, lam2, qdot)` of
//! primaries of
//!
//! ```text
//! su(m+n)_k, Spin(2mn)_1 ; su(m)_{n+k}, su(n)_{m+k}, U(1)_{mn(m+n)(m+n+k)}
//! ```
//!
//! [`Coset`] bundles one `(m, n, k)` with its vacuum-pair group and lazily
//! built S-matrices, and exposes the spectrum pipeline: enumerate `exp`,
//! partition it into vacuum-pair orbits, resolve fixed points.

mod field;
mod selection;
mod spectrum;
mod u1;
mod vp;

use std::sync::OnceLock;

pub use field::{CosetField, CosetSpec};
pub use selection::{selection_check, selection_check_h3};
pub use spectrum::{weight_gap, ResolvedSpectrum, SpectrumRow};
pub use u1::{u1_coset_b_closed_form, u1_coset_b_vacuum, u1_coset_vps, U1CosetVp};
pub use vp::{vp_act, VpElement, VpGroup};

use crate::affine::{enumerate_su, AffineWeight, SpinLabel};
use crate::error::{Error, Result};
use crate::modular::{s_spin, s_su, SMatrix};

/// Default cap on the number of candidate quintuples scanned by
/// [`Coset::enumerate_exp`].
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// An `su(N)_k` factor: its primaries in enumeration order and S-matrix.
#[derive(Debug)]
pub(crate) struct SuFactor {
    pub weights: Vec<AffineWeight>,
    pub s: SMatrix,
}

impl SuFactor {
    fn new(rank: usize, level: u32) -> Self {
        SuFactor {
            weights: enumerate_su(rank, level),
            s: s_su(rank, level),
        }
    }

    /// Row of `w` in the S-matrix.
    pub fn index(&self, w: &AffineWeight) -> usize {
        self.weights
            .binary_search(w)
            .expect("weight belongs to this factor")
    }

    pub fn qdim(&self, w: &AffineWeight) -> f64 {
        let a = self.index(w);
        (self.s.get(0, a) / self.s.get(0, 0)).re
    }
}

#[derive(Debug)]
pub(crate) struct ModularData {
    pub big: SuFactor,
    pub spin: SMatrix,
    pub su_m: SuFactor,
    pub su_n: SuFactor,
}

/// One coset `G(m,n,k)` with its vacuum-pair group.
#[derive(Debug)]
pub struct Coset {
    spec: CosetSpec,
    vps: VpGroup,
    modular: OnceLock<ModularData>,
}

impl Coset {
    pub fn new(spec: CosetSpec) -> Result<Self> {
        let vps = VpGroup::generate(spec)?;
        Ok(Coset {
            spec,
            vps,
            modular: OnceLock::new(),
        })
    }

    pub fn spec(&self) -> CosetSpec {
        self.spec
    }

    pub fn vp_group(&self) -> &VpGroup {
        &self.vps
    }

    pub(crate) fn modular(&self) -> &ModularData {
        self.modular.get_or_init(|| {
            let s = self.spec;
            let (m, n, k) = (s.m as usize, s.n as usize, s.k);
            ModularData {
                big: SuFactor::new(m + n, k),
                spin: s_spin(s.spin_half_dim()),
                su_m: SuFactor::new(m, s.n + k),
                su_n: SuFactor::new(n, s.m + k),
            }
        })
    }

    /// All labels passing the selection rules, in ascending order.
    pub fn enumerate_exp(&self, budget: u128) -> Result<Vec<CosetField>> {
        let estimated = self.spec.candidate_count();
        if estimated > budget {
            return Err(Error::BudgetExceeded { estimated, budget });
        }
        let s = self.spec;
        let big = enumerate_su(s.big_rank(), s.k);
        let spins = SpinLabel::all(s.spin_half_dim());
        let su_m = enumerate_su(s.m as usize, s.n + s.k);
        let su_n = enumerate_su(s.n as usize, s.m + s.k);
        let modulus = s.u1_modulus();

        let mut out = Vec::new();
        for lambda0 in &big {
            for pi0 in &spins {
                for lam1 in &su_m {
                    for lam2 in &su_n {
                        for q in 0..modulus {
                            let f = CosetField::from_parts(
                                lambda0.clone(),
                                *pi0,
                                lam1.clone(),
                                lam2.clone(),
                                q,
                                modulus,
                            );
                            if selection::passes(&f, &s)? {
                                out.push(f);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn stabilizer_order(&self, f: &CosetField) -> usize {
        self.vps.stabilizer_order(f)
    }
}
