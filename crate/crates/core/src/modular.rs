//! Conformal weights and modular S-matrices of the chiral factors.
//!
//! Weights are exact rationals. S-matrix entries are `Complex64`; every
//! matrix is indexed in the enumeration order of its factor's primaries
//! ([`enumerate_su`], [`SpinKind::ALL`], charges `0..N`).

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::affine::{enumerate_su, AffineWeight, SpinKind, SpinLabel, U1Charge};
use crate::error::{Error, Result};
use crate::rational::RationalWeight;

/// `h = (lambda, lambda + 2 rho) / (2 (N + k))`.
pub fn h_su(w: &AffineWeight) -> RationalWeight {
    let n = w.rank() as i64;
    let rows = w.partition();
    let boxes: i64 = rows.iter().map(|&r| i64::from(r)).sum();
    // (lambda, lambda + 2 rho) = sum_i l_i (l_i + N + 1 - 2i) - |l|^2 / N, rows indexed from 1
    let quad: i64 = rows
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let r = i64::from(r);
            r * (r + n + 1 - 2 * (i as i64 + 1))
        })
        .sum();
    let casimir = RationalWeight::from_integer(quad) - RationalWeight::new(boxes * boxes, n);
    let denom = 2 * (n + i64::from(w.level()));
    RationalWeight::new(casimir.numerator(), casimir.denominator() * denom)
}

/// `h = x^2 / (2N)` with `x` the representative in `(-N/2, N/2]`.
///
/// For even `N` (every modulus the coset produces) any other representative
/// gives the same value mod 1.
pub fn h_u1(c: &U1Charge) -> RationalWeight {
    let x = c.centered();
    RationalWeight::new(x * x, 2 * c.modulus() as i64)
}

pub fn h_spin(s: &SpinLabel) -> RationalWeight {
    match s.kind() {
        SpinKind::Vacuum => RationalWeight::ZERO,
        SpinKind::Vector => RationalWeight::new(1, 2),
        SpinKind::Spinor | SpinKind::Cospinor => RationalWeight::new(i64::from(s.half_dim()), 8),
    }
}

/// A dense square modular S-matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl SMatrix {
    fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                entries.push(f(a, b));
            }
        }
        SMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[Complex64] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    /// `max |(S S^dagger - I)_{ab}|`
    pub fn unitarity_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..self.dim {
            for b in 0..self.dim {
                let mut acc = Complex64::new(0.0, 0.0);
                for c in 0..self.dim {
                    acc += self.get(a, c) * self.get(b, c).conj();
                }
                if a == b {
                    acc -= 1.0;
                }
                worst = worst.max(acc.norm());
            }
        }
        worst
    }

    /// `max |S_{ab} - S_{ba}|`
    pub fn symmetry_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..self.dim {
            for b in (a + 1)..self.dim {
                worst = worst.max((self.get(a, b) - self.get(b, a)).norm());
            }
        }
        worst
    }

    /// `S^2` as a new matrix (charge conjugation for a consistent S).
    pub fn squared(&self) -> SMatrix {
        SMatrix::from_fn(self.dim, |a, b| {
            (0..self.dim).map(|c| self.get(a, c) * self.get(c, b)).sum()
        })
    }
}

/// Kac-Peterson S-matrix of `su(N)_k` as a Weyl-group sum, written as a
/// determinant over the shifted partition coordinates
/// `l_i = lambda_i + N - i` (made traceless):
///
/// ```text
/// S_{lambda mu} = i^{N(N-1)/2} / (sqrt(N) (N+k)^{(N-1)/2})
///                 * det_{ab} exp(-2 pi i l_a l'_b / (N+k))
/// ```
pub fn s_su(rank: usize, level: u32) -> SMatrix {
    let weights = enumerate_su(rank, level);
    if rank == 1 {
        return SMatrix::from_fn(1, |_, _| Complex64::new(1.0, 0.0));
    }
    let n = rank as f64;
    let shifted_level = n + f64::from(level);
    let coords: Vec<Vec<f64>> = weights.iter().map(traceless_shifted).collect();

    let positive_roots = rank * (rank - 1) / 2;
    let phase = Complex64::i().powu(positive_roots as u32);
    let scale = 1.0 / (n.sqrt() * shifted_level.powf((n - 1.0) / 2.0));

    SMatrix::from_fn(weights.len(), |a, b| {
        let m = DMatrix::from_fn(rank, rank, |r, c| {
            Complex64::from_polar(1.0, -2.0 * PI * coords[a][r] * coords[b][c] / shifted_level)
        });
        phase * m.determinant() * scale
    })
}

fn traceless_shifted(w: &AffineWeight) -> Vec<f64> {
    let n = w.rank();
    let shifted: Vec<f64> = w
        .partition()
        .iter()
        .enumerate()
        .map(|(i, &r)| f64::from(r) + (n - 1 - i) as f64)
        .collect();
    let mean = shifted.iter().sum::<f64>() / n as f64;
    shifted.into_iter().map(|x| x - mean).collect()
}

/// `S_{xy} = exp(-2 pi i x y / N) / sqrt(N)` over charges `0..N`.
pub fn s_u1(modulus: u64) -> SMatrix {
    assert!(modulus >= 1, "U(1)_N needs N >= 1");
    SMatrix::from_fn(modulus as usize, |x, y| {
        s_u1_entry(modulus, x as u64, y as u64)
    })
}

/// A single entry of [`s_u1`], for moduli too large to tabulate.
#[inline]
pub fn s_u1_entry(modulus: u64, x: u64, y: u64) -> Complex64 {
    let xy = ((u128::from(x) * u128::from(y)) % u128::from(modulus)) as f64;
    Complex64::from_polar(
        1.0 / (modulus as f64).sqrt(),
        -2.0 * PI * xy / modulus as f64,
    )
}

/// Level-one `Spin(2L)` S-matrix in the order vacuum, vector, spinor, cospinor:
///
/// ```text
///       [1  1  1  1]
/// 1/2 * [1  1 -1 -1]      sigma = i^{-L}
///       [1 -1  s -s]
///       [1 -1 -s  s]
/// ```
pub fn s_spin(half_dim: u32) -> SMatrix {
    assert!(half_dim >= 1, "Spin(2L) needs L >= 1");
    let sigma = match half_dim % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    };
    let one = Complex64::new(1.0, 0.0);
    let table = [
        [one, one, one, one],
        [one, one, -one, -one],
        [one, -one, sigma, -sigma],
        [one, -one, -sigma, sigma],
    ];
    SMatrix::from_fn(4, |a, b| table[a][b] * 0.5)
}

/// Quantum dimension `S_{0,index} / S_{0,0}`.
pub fn qdim(s: &SMatrix, index: usize) -> Result<f64> {
    if index >= s.dim() {
        return Err(Error::IndexOutOfRange {
            index,
            dim: s.dim(),
        });
    }
    Ok((s.get(0, index) / s.get(0, 0)).re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::enumerate_su;

    const TOL: f64 = 1e-9;

    fn w(rank: usize, level: u32, labels: &[u32]) -> AffineWeight {
        AffineWeight::new(rank, level, labels.to_vec()).unwrap()
    }

    /// `h = j(j+1)/(k+2)` for su(2).
    fn su2_h(twice_spin: i64, level: i64) -> RationalWeight {
        RationalWeight::new(twice_spin * (twice_spin + 2), 4 * (level + 2))
    }

    #[test]
    fn su_weights() {
        assert_eq!(h_su(&AffineWeight::vacuum(4, 3)), RationalWeight::ZERO);
        assert_eq!(h_su(&w(2, 1, &[1])), su2_h(1, 1));
        assert_eq!(h_su(&w(2, 1, &[1])), RationalWeight::new(1, 4));
        assert_eq!(h_su(&w(2, 2, &[2])), RationalWeight::new(1, 2));
        for level in 0..6u32 {
            for a in 0..=level {
                assert_eq!(h_su(&w(2, level, &[a])), su2_h(a.into(), level.into()));
            }
        }
    }

    #[test]
    fn u1_weights() {
        let h = |x| h_u1(&U1Charge::new(8, x).unwrap());
        assert_eq!(h(0), RationalWeight::ZERO);
        assert_eq!(h(2), RationalWeight::new(1, 4));
        assert_eq!(h(6), RationalWeight::new(1, 4));
        assert_eq!(h(4), RationalWeight::new(1, 1));
    }

    #[test]
    fn spin_weights() {
        let [vac, _, sp, _] = SpinLabel::all(4);
        assert_eq!(h_spin(&vac), RationalWeight::ZERO);
        assert_eq!(h_spin(&sp), RationalWeight::new(1, 2));
        assert_eq!(h_spin(&SpinLabel::all(1)[1]), RationalWeight::new(1, 2));
        assert_eq!(h_spin(&SpinLabel::all(1)[3]), RationalWeight::new(1, 8));
    }

    #[test]
    fn su2_closed_form() {
        for level in 0..7u32 {
            let s = s_su(2, level);
            let kk = f64::from(level) + 2.0;
            for a in 0..=level as usize {
                for b in 0..=level as usize {
                    let expect =
                        (2.0 / kk).sqrt() * (PI * (a + 1) as f64 * (b + 1) as f64 / kk).sin();
                    assert!(
                        (s.get(a, b) - expect).norm() < 1e-12,
                        "k={level} a={a} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn su1_is_one_by_one() {
        let s = s_su(1, 5);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.get(0, 0), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn su_unitary_symmetric() {
        let s = s_su(4, 3);
        assert_eq!(s.dim(), 20);
        assert!(s.unitarity_residual() < TOL);
        assert!(s.symmetry_residual() < 1e-12);
        assert!(s.row(0).iter().all(|z| z.re > 0.0 && z.im.abs() < 1e-12));
    }

    #[test]
    fn su_square_is_conjugation() {
        for rank in 2..=4 {
            for level in 1..=4 {
                let ws = enumerate_su(rank, level);
                let sq = s_su(rank, level).squared();
                for (a, wa) in ws.iter().enumerate() {
                    for (b, wb) in ws.iter().enumerate() {
                        let expect = if wa.conjugate() == *wb { 1.0 } else { 0.0 };
                        assert!((sq.get(a, b) - expect).norm() < TOL);
                    }
                }
            }
        }
    }

    #[test]
    fn u1_matrix() {
        assert_eq!(s_u1(1).get(0, 0), Complex64::new(1.0, 0.0));
        let s2 = s_u1(2);
        let r = 1.0 / 2f64.sqrt();
        assert!((s2.get(1, 1) + r).norm() < 1e-15);
        assert!((s2.get(0, 1) - r).norm() < 1e-15);
        let s12 = s_u1(12);
        for a in 0..12 {
            let norm: f64 = s12.row(a).iter().map(|z| z.norm_sqr()).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn spin_matrix() {
        let s = s_spin(6);
        assert!(s.unitarity_residual() < 1e-12);
        for b in 0..4 {
            assert!((s.get(0, b) - 0.5).norm() < 1e-15);
        }
        for half_dim in [2, 4, 8] {
            let s = s_spin(half_dim);
            assert!(s.row(2).iter().chain(s.row(3)).all(|z| z.im == 0.0));
        }
        for half_dim in 1..=8 {
            let s = s_spin(half_dim);
            assert!(s.unitarity_residual() < 1e-12);
            assert!(s.symmetry_residual() < 1e-12);
        }
    }

    #[test]
    fn quantum_dimensions() {
        let s = s_su(2, 2);
        assert!((qdim(&s, 0).unwrap() - 1.0).abs() < 1e-15);
        assert!((qdim(&s, 1).unwrap() - 2f64.sqrt()).abs() < TOL);
        assert!(matches!(
            qdim(&s, 3),
            Err(Error::IndexOutOfRange { index: 3, dim: 3 })
        ));
        let u = s_u1(10);
        let sp = s_spin(3);
        for i in 0..10 {
            assert!((qdim(&u, i).unwrap() - 1.0).abs() < 1e-12);
        }
        for i in 0..4 {
            assert!((qdim(&sp, i).unwrap() - 1.0).abs() < 1e-12);
        }
    }
}
