//! n-qubit Pauli operators with exact phase tracking.
//!
//! Convention: an operator is stored as `i^phase · Π_j X_j^{x_j} Z_j^{z_j}`
//! (X factors to the left of Z factors on each qubit). In this convention
//! `Y = i·XZ`, equivalently `XZ = −iY`.

use crate::bits::BitRow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn label(&self) -> char {
        match self {
            Axis::X => 'X',
            Axis::Y => 'Y',
            Axis::Z => 'Z',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliOperator {
    pub n: usize,
    pub x: BitRow,
    pub z: BitRow,
    /// Exponent of i, mod 4.
    pub phase: u8,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        Self { n, x: BitRow::new(n), z: BitRow::new(n), phase: 0 }
    }

    /// Single-qubit ±X/±Y/±Z embedded at `q` (Hermitian by construction).
    pub fn single(n: usize, q: usize, axis: Axis, sign: i8) -> Self {
        let mut p = Self::identity(n);
        match axis {
            Axis::X => p.x.set(q, true),
            Axis::Z => p.z.set(q, true),
            Axis::Y => {
                p.x.set(q, true);
                p.z.set(q, true);
                p.phase = 1; // Y = i XZ
            }
        }
        if sign < 0 {
            p.phase = (p.phase + 2) % 4;
        }
        p
    }

    pub fn is_identity_bits(&self) -> bool {
        !self.x.any() && !self.z.any()
    }

    /// Hermitian iff phase ≡ |x∧z| (mod 2).
    pub fn is_hermitian(&self) -> bool {
        (self.phase as usize) % 2 == self.x.and_count(&self.z) % 2
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        !(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    /// In-place right multiplication: `self = self · other`.
    pub fn mul_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        // X^{x1}Z^{z1} · X^{x2}Z^{z2} = (-1)^{z1·x2} X^{x1+x2} Z^{z1+z2}
        let cross = self.z.and_count(&other.x) % 2;
        self.phase = ((self.phase + other.phase) as usize + 2 * cross) as u8 % 4;
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    pub fn adjoint(&self) -> Self {
        // (i^k X^x Z^z)† = i^{-k} (-1)^{x·z} X^x Z^z
        let cross = self.x.and_count(&self.z) % 2;
        let mut out = self.clone();
        out.phase = ((4 - self.phase as usize) + 2 * cross) as u8 % 4;
        out
    }

    /// The single-qubit factor at `q`, as `(axis option, i-exponent contribution)`.
    pub fn factor(&self, q: usize) -> (Option<Axis>, u8) {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => (None, 0),
            (true, false) => (Some(Axis::X), 0),
            (false, true) => (Some(Axis::Z), 0),
            (true, true) => (Some(Axis::Y), 3), // XZ = i^{-1} Y
        }
    }

    // --- Clifford conjugations (self := U self U†) -------------------------

    pub fn conj_h(&mut self, q: usize) {
        let xq = self.x.get(q);
        let zq = self.z.get(q);
        if xq && zq {
            self.phase = (self.phase + 2) % 4; // HYH = -Y
        }
        self.x.set(q, zq);
        self.z.set(q, xq);
    }

    pub fn conj_s(&mut self, q: usize) {
        if self.x.get(q) {
            self.phase = (self.phase + 1) % 4;
            self.z.flip(q);
        }
    }

    pub fn conj_sdg(&mut self, q: usize) {
        if self.x.get(q) {
            self.phase = (self.phase + 3) % 4;
            self.z.flip(q);
        }
    }

    pub fn conj_cz(&mut self, a: usize, b: usize) {
        let (xa, xb) = (self.x.get(a), self.x.get(b));
        if xa && xb {
            self.phase = (self.phase + 2) % 4;
        }
        if xb {
            self.z.flip(a);
        }
        if xa {
            self.z.flip(b);
        }
    }

    pub fn conj_swap(&mut self, a: usize, b: usize) {
        let (xa, xb) = (self.x.get(a), self.x.get(b));
        self.x.set(a, xb);
        self.x.set(b, xa);
        let (za, zb) = (self.z.get(a), self.z.get(b));
        self.z.set(a, zb);
        self.z.set(b, za);
    }

    /// Conjugation by a single-qubit Pauli at q only flips the sign.
    pub fn conj_pauli(&mut self, q: usize, axis: Axis) {
        let flips = match axis {
            Axis::X => self.z.get(q),
            Axis::Z => self.x.get(q),
            Axis::Y => self.x.get(q) ^ self.z.get(q),
        };
        if flips {
            self.phase = (self.phase + 2) % 4;
        }
    }

    /// `i^k · <x'| where <x|P = i^k <x'|`: acting on a computational bra from
    /// the right. Returns `(x ^ xbits, k)` with `k` the i-exponent picked up:
    /// `<x| i^p X^a Z^b = i^p (-1)^{b·(x+a)} <x+a|`.
    pub fn bra_action(&self, x: &BitRow) -> (BitRow, u8) {
        let mut shifted = x.clone();
        shifted.xor_assign(&self.x);
        let sign = self.z.dot(&shifted);
        let k = (self.phase + if sign { 2 } else { 0 }) % 4;
        (shifted, k)
    }
}

impl std::fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // Render with Y contributions folded back into the sign.
        let mut k = self.phase;
        let mut s = String::with_capacity(self.n);
        for q in 0..self.n {
            let (axis, dk) = self.factor(q);
            k = (k + dk) % 4;
            s.push(axis.map_or('.', |a| a.label()));
        }
        let prefix = match k {
            0 => "+1",
            1 => "+i",
            2 => "-1",
            _ => "-i",
        };
        write!(f, "{prefix} {s}")
    }
}
