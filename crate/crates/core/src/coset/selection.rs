//! Congruences on box counts and U(1) charge coming from the centers of the
//! embedded groups.

use super::field::{check_su, CosetField, CosetSpec};
use crate::affine::{AffineWeight, U1Charge};
use crate::error::{Error, Result};

/// Both rules for the full coset:
///
/// ```text
/// qdot = -m r(lambda0) + (m+n) r(lam1) + nm(m+n) eps / 2   mod m(m+n)
/// qdot =  n r(lambda0) - (m+n) r(lam2) + nm(m+n) eps / 2   mod n(m+n)
/// ```
///
/// with `eps = 1` for a spinor or cospinor `pi0` and `eps = 0` otherwise.
pub fn selection_check(f: &CosetField, spec: &CosetSpec) -> Result<bool> {
    f.check_factors(spec)?;
    passes(f, spec)
}

pub(crate) fn passes(f: &CosetField, spec: &CosetSpec) -> Result<bool> {
    let (m, n) = (i128::from(spec.m), i128::from(spec.n));
    let twice_shift = n * m * (m + n);
    if twice_shift % 2 != 0 {
        return Err(Error::HalfIntegerSpinTerm {
            m: spec.m,
            n: spec.n,
        });
    }
    let shift = if f.pi0.kind().is_spinorial() {
        twice_shift / 2
    } else {
        0
    };
    let r0 = i128::from(f.lambda0.box_count());
    let r1 = i128::from(f.lam1.box_count());
    let r2 = i128::from(f.lam2.box_count());
    let q = i128::from(f.qdot.value());

    let first = (q - (-m * r0 + (m + n) * r1 + shift)).rem_euclid(m * (m + n)) == 0;
    let second = (q - (n * r0 - (m + n) * r2 + shift)).rem_euclid(n * (m + n)) == 0;
    Ok(first && second)
}

/// The rules for the sub-coset `su(m)_k x su(n)_k x U(1)_{mn(m+n)k} < su(m+n)_k`:
///
/// ```text
/// q = -m r(lambda0) + (m+n) r(lam1)   mod m(m+n)
/// q =  n r(lambda0) - (m+n) r(lam2)   mod n(m+n)
/// ```
pub fn selection_check_h3(
    lambda0: &AffineWeight,
    lam1: &AffineWeight,
    lam2: &AffineWeight,
    q: &U1Charge,
    spec: &CosetSpec,
) -> Result<bool> {
    let (m, n, k) = (spec.m, spec.n, spec.k);
    check_su("lambda0", lambda0, (m + n) as usize, k)?;
    check_su("lam1", lam1, m as usize, k)?;
    check_su("lam2", lam2, n as usize, k)?;
    let modulus = u64::from(m) * u64::from(n) * u64::from(m + n) * u64::from(k);
    if q.modulus() != modulus {
        return Err(Error::FactorMismatch {
            factor: "q",
            expected: format!("u1({modulus})"),
            found: format!("u1({})", q.modulus()),
        });
    }
    let (m, n) = (i128::from(m), i128::from(n));
    let r0 = i128::from(lambda0.box_count());
    let r1 = i128::from(lam1.box_count());
    let r2 = i128::from(lam2.box_count());
    let q = i128::from(q.value());
    let first = (q - (-m * r0 + (m + n) * r1)).rem_euclid(m * (m + n)) == 0;
    let second = (q - (n * r0 - (m + n) * r2)).rem_euclid(n * (m + n)) == 0;
    Ok(first && second)
}
