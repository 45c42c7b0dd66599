//! Primaries of the three kinds of chiral factor that make up the coset:
//! `su(N)_k`, `Spin(2L)_1` and the rank-one lattice theory `U(1)_N`.
//!
//! Each factor carries the simple-current rotation `tau`. For `su(N)_k` it
//! cyclically rotates the extended Dynkin labels `(a_0, a_1, ..., a_{N-1})`
//! with the orientation fixed by `tau(vacuum) = k * Lambda_1`, i.e. the new
//! `a_{i+1}` is the old `a_i`.

use std::fmt;

use crate::error::{Error, Result};

/// A level-`k` dominant weight of `su(N)`, stored by its finite Dynkin labels
/// `a_1, ..., a_{N-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineWeight {
    rank: usize,
    level: u32,
    labels: Vec<u32>,
}

impl AffineWeight {
    pub fn new(rank: usize, level: u32, labels: Vec<u32>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParameter("su(N) needs N >= 1".into()));
        }
        if labels.len() != rank - 1 {
            return Err(Error::InvalidWeight {
                rank,
                level,
                reason: format!("expected {} labels, got {}", rank - 1, labels.len()),
            });
        }
        let total: u64 = labels.iter().map(|&a| u64::from(a)).sum();
        if total > u64::from(level) {
            return Err(Error::InvalidWeight {
                rank,
                level,
                reason: format!("label sum {total} exceeds the level"),
            });
        }
        Ok(AffineWeight {
            rank,
            level,
            labels,
        })
    }

    pub fn vacuum(rank: usize, level: u32) -> Self {
        assert!(rank >= 1, "su(N) needs N >= 1");
        AffineWeight {
            rank,
            level,
            labels: vec![0; rank - 1],
        }
    }

    /// `tau^power` applied to the vacuum, i.e. `k * Lambda_{power mod N}`.
    pub fn simple_current(rank: usize, level: u32, power: i64) -> Self {
        AffineWeight::vacuum(rank, level).tau(power)
    }

    /// The `N` of `su(N)`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// `a_0 = k - sum a_i`.
    pub fn affine_label(&self) -> u32 {
        self.level - self.labels.iter().sum::<u32>()
    }

    /// `(a_0, a_1, ..., a_{N-1})`.
    pub fn extended_labels(&self) -> Vec<u32> {
        let mut ext = Vec::with_capacity(self.rank);
        ext.push(self.affine_label());
        ext.extend_from_slice(&self.labels);
        ext
    }

    pub fn is_vacuum(&self) -> bool {
        self.labels.iter().all(|&a| a == 0)
    }

    /// Young diagram rows `lambda_i = sum_{j >= i} a_j`, `N` entries with a
    /// trailing zero.
    pub fn partition(&self) -> Vec<u32> {
        let mut rows = vec![0; self.rank];
        let mut acc = 0;
        for i in (0..self.labels.len()).rev() {
            acc += self.labels[i];
            rows[i] = acc;
        }
        rows
    }

    /// Number of boxes of the Young diagram, `sum_j j * a_j`.
    pub fn box_count(&self) -> u64 {
        self.labels
            .iter()
            .enumerate()
            .map(|(j, &a)| (j as u64 + 1) * u64::from(a))
            .sum()
    }

    /// Rotation of the extended labels by `power` steps; `tau^N` is the identity.
    pub fn tau(&self, power: i64) -> Self {
        let n = self.rank as i64;
        let shift = power.rem_euclid(n) as usize;
        if shift == 0 {
            return self.clone();
        }
        let ext = self.extended_labels();
        let rotated: Vec<u32> = (0..self.rank)
            .map(|i| ext[(i + self.rank - shift) % self.rank])
            .collect();
        AffineWeight {
            rank: self.rank,
            level: self.level,
            labels: rotated[1..].to_vec(),
        }
    }

    /// Charge conjugation, `a_i -> a_{N-i}`.
    pub fn conjugate(&self) -> Self {
        let mut labels = self.labels.clone();
        labels.reverse();
        AffineWeight {
            rank: self.rank,
            level: self.level,
            labels,
        }
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "su({})_{}:(", self.rank, self.level)?;
        for (i, a) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// All level-`k` dominant weights of `su(N)` in lexicographic label order.
/// There are `C(N+k-1, N-1)` of them.
pub fn enumerate_su(rank: usize, level: u32) -> Vec<AffineWeight> {
    assert!(rank >= 1, "su(N) needs N >= 1");
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rank - 1);
    fill_labels(rank - 1, level, &mut current, &mut |labels| {
        out.push(AffineWeight {
            rank,
            level,
            labels: labels.to_vec(),
        })
    });
    out
}

fn fill_labels(slots: usize, budget: u32, current: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if current.len() == slots {
        emit(current);
        return;
    }
    for a in 0..=budget {
        current.push(a);
        fill_labels(slots, budget - a, current, emit);
        current.pop();
    }
}

/// The four level-one primaries of `Spin(2L)`, in their fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpinKind {
    Vacuum,
    Vector,
    Spinor,
    Cospinor,
}

impl SpinKind {
    pub const ALL: [SpinKind; 4] = [
        SpinKind::Vacuum,
        SpinKind::Vector,
        SpinKind::Spinor,
        SpinKind::Cospinor,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            SpinKind::Vacuum => "vacuum",
            SpinKind::Vector => "vector",
            SpinKind::Spinor => "spinor",
            SpinKind::Cospinor => "cospinor",
        }
    }

    pub fn is_spinorial(self) -> bool {
        matches!(self, SpinKind::Spinor | SpinKind::Cospinor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinLabel {
    half_dim: u32,
    kind: SpinKind,
}

impl SpinLabel {
    pub fn new(half_dim: u32, kind: SpinKind) -> Result<Self> {
        if half_dim == 0 {
            return Err(Error::InvalidParameter("Spin(2L) needs L >= 1".into()));
        }
        Ok(SpinLabel { half_dim, kind })
    }

    pub fn vacuum(half_dim: u32) -> Self {
        SpinLabel::all(half_dim)[0]
    }

    /// The four labels of `Spin(2L)_1` in S-matrix row order.
    pub fn all(half_dim: u32) -> [SpinLabel; 4] {
        assert!(half_dim >= 1, "Spin(2L) needs L >= 1");
        SpinKind::ALL.map(|kind| SpinLabel { half_dim, kind })
    }

    /// The `L` of `Spin(2L)`.
    pub fn half_dim(&self) -> u32 {
        self.half_dim
    }

    pub fn kind(&self) -> SpinKind {
        self.kind
    }

    pub fn index(&self) -> usize {
        self.kind.index()
    }

    /// Odd powers swap vacuum with vector and spinor with cospinor.
    pub fn tau(&self, power: i64) -> Self {
        if power.rem_euclid(2) == 0 {
            return *self;
        }
        let kind = match self.kind {
            SpinKind::Vacuum => SpinKind::Vector,
            SpinKind::Vector => SpinKind::Vacuum,
            SpinKind::Spinor => SpinKind::Cospinor,
            SpinKind::Cospinor => SpinKind::Spinor,
        };
        SpinLabel { kind, ..*self }
    }
}

impl fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "spin({})_1:{}", 2 * self.half_dim, self.kind.name())
    }
}

/// A primary of `U(1)_N`: a residue modulo the number of primaries `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct U1Charge {
    modulus: u64,
    value: u64,
}

impl U1Charge {
    /// Reduces `value` modulo `modulus`.
    pub fn new(modulus: u64, value: i64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter("U(1)_N needs N >= 1".into()));
        }
        let value = i128::from(value).rem_euclid(i128::from(modulus)) as u64;
        Ok(U1Charge { modulus, value })
    }

    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 1, "U(1)_N needs N >= 1");
        U1Charge { modulus, value: 0 }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn shift(&self, delta: i64) -> Self {
        let m = i128::from(self.modulus);
        let value = (i128::from(self.value) + i128::from(delta)).rem_euclid(m) as u64;
        U1Charge { value, ..*self }
    }

    /// Representative in `(-N/2, N/2]`.
    pub fn centered(&self) -> i64 {
        let (x, n) = (self.value as i64, self.modulus as i64);
        if 2 * x <= n {
            x
        } else {
            x - n
        }
    }
}

impl fmt::Display for U1Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u1({}):{}", self.modulus, self.value)
    }
}
