//! Vacuum pairs of the diagonal inclusion `U(1)_{2a+2b} < U(1)_{2a} x U(1)_{2b}`.

use num_integer::Integer;

use crate::affine::U1Charge;
use crate::error::{Error, Result};
use crate::modular::s_u1_entry;

/// `(x, y; z)` with `x` mod `2a`, `y` mod `2b`, `z` mod `2(a+b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct U1CosetVp {
    pub x: U1Charge,
    pub y: U1Charge,
    pub z: U1Charge,
}

/// The `2 gcd(a,b)` triples `(a i/g, b i/g; (a+b) i/g)`, `0 <= i < 2g`.
pub fn u1_coset_vps(a: u64, b: u64) -> Result<Vec<U1CosetVp>> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(format!(
            "a and b must be positive, got ({a}, {b})"
        )));
    }
    let g = a.gcd(&b);
    (0..2 * g)
        .map(|i| {
            let i = i as i64;
            Ok(U1CosetVp {
                x: U1Charge::new(2 * a, (a / g) as i64 * i)?,
                y: U1Charge::new(2 * b, (b / g) as i64 * i)?,
                z: U1Charge::new(2 * (a + b), ((a + b) / g) as i64 * i)?,
            })
        })
        .collect()
}

/// `b(1,1) = sum over vacuum pairs of S_{0x} S_{0y} conj(S_{0z})`.
pub fn u1_coset_b_vacuum(a: u64, b: u64) -> Result<f64> {
    let vps = u1_coset_vps(a, b)?;
    let sum: num_complex::Complex64 = vps
        .iter()
        .map(|vp| {
            s_u1_entry(2 * a, 0, vp.x.value())
                * s_u1_entry(2 * b, 0, vp.y.value())
                * s_u1_entry(2 * (a + b), 0, vp.z.value()).conj()
        })
        .sum();
    Ok(sum.re)
}

/// `gcd(a,b) / sqrt(2ab(a+b))`.
pub fn u1_coset_b_closed_form(a: u64, b: u64) -> f64 {
    let g = a.gcd(&b) as f64;
    let (a, b) = (a as f64, b as f64);
    g / (2.0 * a * b * (a + b)).sqrt()
}
