use std::fmt;

use crate::affine::{AffineWeight, SpinLabel, U1Charge};
use crate::error::{Error, Result};
use crate::rational::RationalWeight;

/// The parameters `(m, n, k)` of `G(m,n,k)`, all positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosetSpec {
    pub m: u32,
    pub n: u32,
    pub k: u32,
}

impl CosetSpec {
    pub fn new(m: u32, n: u32, k: u32) -> Result<Self> {
        if m == 0 || n == 0 || k == 0 {
            return Err(Error::InvalidParameter(format!(
                "m, n, k must be positive, got ({m}, {n}, {k})"
            )));
        }
        Ok(CosetSpec { m, n, k })
    }

    /// `G(k,n,m)`.
    pub fn level_rank_dual(&self) -> CosetSpec {
        CosetSpec {
            m: self.k,
            n: self.n,
            k: self.m,
        }
    }

    /// `G(n,m,k)`.
    pub fn swap_mn(&self) -> CosetSpec {
        CosetSpec {
            m: self.n,
            n: self.m,
            k: self.k,
        }
    }

    /// `c = 3mnk / (m+n+k)`.
    pub fn central_charge(&self) -> RationalWeight {
        let (m, n, k) = (i64::from(self.m), i64::from(self.n), i64::from(self.k));
        RationalWeight::new(3 * m * n * k, m + n + k)
    }

    /// The `N = m+n` of the numerator `su(N)_k`.
    pub fn big_rank(&self) -> usize {
        (self.m + self.n) as usize
    }

    /// The `L = mn` of `Spin(2L)_1`.
    pub fn spin_half_dim(&self) -> u32 {
        self.m * self.n
    }

    /// Number of primaries of the denominator U(1): `mn(m+n)(m+n+k)`.
    pub fn u1_modulus(&self) -> u64 {
        let (m, n, k) = (u64::from(self.m), u64::from(self.n), u64::from(self.k));
        m * n * (m + n) * (m + n + k)
    }

    /// Size of the unfiltered label space.
    pub fn candidate_count(&self) -> u128 {
        let binom = |rank: u32, level: u32| -> u128 {
            // C(rank + level - 1, rank - 1)
            let (top, r) = (u128::from(rank + level - 1), u128::from(rank - 1));
            (0..r).fold(1u128, |acc, i| acc * (top - i) / (i + 1))
        };
        binom(self.m + self.n, self.k)
            * 4
            * binom(self.m, self.n + self.k)
            * binom(self.n, self.m + self.k)
            * u128::from(self.u1_modulus())
    }
}

impl fmt::Display for CosetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.m, self.n, self.k)
    }
}

/// A coset label `(lambda0, pi0; lam1, lam2, qdot)`.
///
/// The derived order is lexicographic in that component order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosetField {
    pub lambda0: AffineWeight,
    pub pi0: SpinLabel,
    pub lam1: AffineWeight,
    pub lam2: AffineWeight,
    pub qdot: U1Charge,
}

impl CosetField {
    /// Builds a field after checking every label against the factors of `spec`.
    pub fn new(
        spec: &CosetSpec,
        lambda0: AffineWeight,
        pi0: SpinLabel,
        lam1: AffineWeight,
        lam2: AffineWeight,
        qdot: U1Charge,
    ) -> Result<Self> {
        let f = CosetField {
            lambda0,
            pi0,
            lam1,
            lam2,
            qdot,
        };
        f.check_factors(spec)?;
        Ok(f)
    }

    pub(crate) fn from_parts(
        lambda0: AffineWeight,
        pi0: SpinLabel,
        lam1: AffineWeight,
        lam2: AffineWeight,
        q: u64,
        modulus: u64,
    ) -> Self {
        CosetField {
            lambda0,
            pi0,
            lam1,
            lam2,
            qdot: U1Charge::new(modulus, q as i64).expect("positive modulus"),
        }
    }

    /// `(1, 1; 1, 1, 0)`.
    pub fn vacuum(spec: &CosetSpec) -> Self {
        CosetField {
            lambda0: AffineWeight::vacuum(spec.big_rank(), spec.k),
            pi0: SpinLabel::vacuum(spec.spin_half_dim()),
            lam1: AffineWeight::vacuum(spec.m as usize, spec.n + spec.k),
            lam2: AffineWeight::vacuum(spec.n as usize, spec.m + spec.k),
            qdot: U1Charge::zero(spec.u1_modulus()),
        }
    }

    pub fn check_factors(&self, spec: &CosetSpec) -> Result<()> {
        check_su("lambda0", &self.lambda0, spec.big_rank(), spec.k)?;
        check_su("lam1", &self.lam1, spec.m as usize, spec.n + spec.k)?;
        check_su("lam2", &self.lam2, spec.n as usize, spec.m + spec.k)?;
        if self.pi0.half_dim() != spec.spin_half_dim() {
            return Err(Error::FactorMismatch {
                factor: "pi0",
                expected: format!("spin({})_1", 2 * spec.spin_half_dim()),
                found: format!("spin({})_1", 2 * self.pi0.half_dim()),
            });
        }
        if self.qdot.modulus() != spec.u1_modulus() {
            return Err(Error::FactorMismatch {
                factor: "qdot",
                expected: format!("u1({})", spec.u1_modulus()),
                found: format!("u1({})", self.qdot.modulus()),
            });
        }
        Ok(())
    }
}

pub(crate) fn check_su(
    factor: &'static str,
    w: &AffineWeight,
    rank: usize,
    level: u32,
) -> Result<()> {
    if w.rank() != rank || w.level() != level {
        return Err(Error::FactorMismatch {
            factor,
            expected: format!("su({rank})_{level}"),
            found: format!("su({})_{}", w.rank(), w.level()),
        });
    }
    Ok(())
}

impl fmt::Display for CosetField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}; {}, {}, {})",
            self.lambda0, self.pi0, self.lam1, self.lam2, self.qdot
        )
    }
}
