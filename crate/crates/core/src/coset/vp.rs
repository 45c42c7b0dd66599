//! Vacuum pairs (field identification currents).
//!
//! Every vacuum pair of `G(m,n,k)` is, for integers `j, i`,
//!
//! ```text
//! (tau^{j+i}(1), tau^{jn+im}(1); tau^j(1), tau^i(1), (nj - mi)(m+n+k))
//! ```
//!
//! The group is built by scanning `(j, i)` over a box whose side is the lcm
//! of the orders of both generators on every component, keeping the first
//! `(j, i)` that produces each distinct image.

use std::collections::HashMap;

use num_integer::Integer;

use super::field::{CosetField, CosetSpec};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VpElement {
    pub j: i64,
    pub i: i64,
    /// The element applied to the vacuum.
    pub image: CosetField,
}

fn act(spec: &CosetSpec, j: i64, i: i64, f: &CosetField) -> CosetField {
    let (m, n, k) = (i64::from(spec.m), i64::from(spec.n), i64::from(spec.k));
    let modulus = spec.u1_modulus() as i128;
    let charge = (i128::from(n * j - m * i) * i128::from(m + n + k)).rem_euclid(modulus);
    CosetField {
        lambda0: f.lambda0.tau(j + i),
        pi0: f.pi0.tau(j * n + i * m),
        lam1: f.lam1.tau(j),
        lam2: f.lam2.tau(i),
        qdot: f.qdot.shift(charge as i64),
    }
}

/// Componentwise action: rotate each su label, flip the spin label by
/// `jn + im`, shift the charge.
pub fn vp_act(w: &VpElement, f: &CosetField, spec: &CosetSpec) -> Result<CosetField> {
    f.check_factors(spec)?;
    Ok(act(spec, w.j, w.i, f))
}

/// The finite abelian group of vacuum pairs.
#[derive(Debug, Clone)]
pub struct VpGroup {
    spec: CosetSpec,
    elements: Vec<VpElement>,
    by_image: HashMap<CosetField, usize>,
}

impl VpGroup {
    pub fn generate(spec: CosetSpec) -> Result<Self> {
        let side = scan_side(&spec);
        let vacuum = CosetField::vacuum(&spec);
        let mut elements = Vec::new();
        let mut by_image = HashMap::new();
        for j in 0..side {
            for i in 0..side {
                let image = act(&spec, j, i, &vacuum);
                if !by_image.contains_key(&image) {
                    by_image.insert(image.clone(), elements.len());
                    elements.push(VpElement { j, i, image });
                }
            }
        }
        Ok(VpGroup {
            spec,
            elements,
            by_image,
        })
    }

    pub fn spec(&self) -> CosetSpec {
        self.spec
    }

    /// Elements ordered by their first `(j, i)`; the identity comes first.
    pub fn elements(&self) -> &[VpElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> &VpElement {
        &self.elements[0]
    }

    /// Action of the `index`-th element.
    pub fn act(&self, index: usize, f: &CosetField) -> CosetField {
        let w = &self.elements[index];
        act(&self.spec, w.j, w.i, f)
    }

    /// Position of the element whose vacuum image is `image`.
    pub fn position(&self, image: &CosetField) -> Option<usize> {
        self.by_image.get(image).copied()
    }

    /// Index of `a * b`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let image = self.act(a, &self.elements[b].image);
        self.position(&image)
            .expect("vacuum pairs are closed under composition")
    }

    pub fn inverse(&self, a: usize) -> usize {
        let w = &self.elements[a];
        let vacuum = CosetField::vacuum(&self.spec);
        let image = act(&self.spec, -w.j, -w.i, &vacuum);
        self.position(&image)
            .expect("vacuum pairs are closed under inversion")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut order = 1;
        while acc != 0 {
            acc = self.compose(acc, a);
            order += 1;
        }
        order
    }

    /// `|{w : w(f) = f}|`
    pub fn stabilizer_order(&self, f: &CosetField) -> usize {
        (0..self.order()).filter(|&w| self.act(w, f) == *f).count()
    }

    /// Checks closure, identity, inverses and commutativity on the full
    /// composition table. Returns a description of the first violation.
    pub fn check_group_axioms(&self) -> std::result::Result<(), String> {
        let g = self.order();
        let vacuum = CosetField::vacuum(&self.spec);
        if self.elements[0].image != vacuum {
            return Err("first element is not the identity".into());
        }
        for a in 0..g {
            if self.act(0, &self.elements[a].image) != self.elements[a].image {
                return Err(format!("identity does not fix element {a}"));
            }
            let mut has_inverse = false;
            for b in 0..g {
                let ab = self.act(a, &self.elements[b].image);
                let ba = self.act(b, &self.elements[a].image);
                if self.position(&ab).is_none() {
                    return Err(format!("{a} * {b} leaves the group"));
                }
                if ab != ba {
                    return Err(format!("{a} and {b} do not commute"));
                }
                has_inverse |= ab == vacuum;
            }
            if !has_inverse {
                return Err(format!("element {a} has no inverse"));
            }
        }
        Ok(())
    }
}

/// lcm of the orders of `(1,0)` and `(0,1)` on all five components.
fn scan_side(spec: &CosetSpec) -> i64 {
    let (m, n, k) = (i64::from(spec.m), i64::from(spec.n), i64::from(spec.k));
    let modulus = spec.u1_modulus() as i64;
    let charge_order = |step: i64| modulus / modulus.gcd(&(step * (m + n + k)));
    let parity_order = |step: i64| if step % 2 == 0 { 1 } else { 2 };
    [
        m + n,
        m,
        n,
        parity_order(n),
        parity_order(m),
        charge_order(n),
        charge_order(m),
    ]
    .into_iter()
    .fold(1, |acc, x| acc.lcm(&x))
}
