//! Primary-field spectrum of the Kazama-Suzuki Grassmannian coset
//!
//! ```text
//! G(m,n,k) = SU(m+n)_k x Spin(2mn)_1 / SU(m)_{n+k} x SU(n)_{m+k} x U(1)_{mn(m+n)(m+n+k)}
//! ```
//!
//! The crate is layered bottom-up:
//!
//! * [`affine`]: weights of the chiral factors and the simple-current rotation `tau`.
//! * [`modular`]: conformal weights (exact) and S-matrices (floating point).
//! * [`coset`]: selection rules, vacuum pairs, fixed points and the resolved spectrum.
//! * [`duality`]: fingerprint comparison of `G(m,n,k)` against `G(k,n,m)`.

pub mod affine;
pub mod coset;
pub mod duality;
pub mod error;
pub mod modular;
pub mod rational;

pub use affine::{AffineWeight, SpinKind, SpinLabel, U1Charge};
pub use coset::{
    Coset, CosetField, CosetSpec, ResolvedSpectrum, SpectrumRow, U1CosetVp, VpElement, VpGroup,
    DEFAULT_BUDGET,
};
pub use duality::{check_duality, fingerprint, DualityReport, Fingerprint, FingerprintRow};
pub use error::{Error, Result};
pub use modular::SMatrix;
pub use rational::RationalWeight;
