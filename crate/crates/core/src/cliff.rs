//! Exact single-qubit Clifford matrices over [`Cyclo8`], used as vertex
//! frames by the graph-state simulator and as local correction operators.

use crate::pauli::Axis;
use crate::ring::Cyclo8;
use crate::scalar::Scalar;
use num_complex::Complex;

/// A 2x2 matrix with entries in `Z[ζ8, 1/√2]`. Global phase is significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cliff1 {
    pub m: [[Cyclo8; 2]; 2],
}

const O: Cyclo8 = Cyclo8::ZERO;
const L: Cyclo8 = Cyclo8::ONE;

impl Cliff1 {
    pub const IDENTITY: Cliff1 = Cliff1 { m: [[L, O], [O, L]] };

    pub fn x() -> Self {
        Cliff1 { m: [[O, L], [L, O]] }
    }

    pub fn y() -> Self {
        Cliff1 { m: [[O, Cyclo8::zeta(6)], [Cyclo8::zeta(2), O]] }
    }

    pub fn z() -> Self {
        Cliff1 { m: [[L, O], [O, Cyclo8::zeta(4)]] }
    }

    pub fn h() -> Self {
        let p = Cyclo8::monomial(0, -1);
        let n = Cyclo8::monomial(4, -1);
        Cliff1 { m: [[p, p], [p, n]] }
    }

    pub fn s() -> Self {
        Cliff1 { m: [[L, O], [O, Cyclo8::zeta(2)]] }
    }

    pub fn sdg() -> Self {
        Cliff1 { m: [[L, O], [O, Cyclo8::zeta(6)]] }
    }

    /// `diag(1, i^k)`.
    pub fn phase_gate(k: i64) -> Self {
        Cliff1 { m: [[L, O], [O, Cyclo8::i_pow(k)]] }
    }

    /// `exp(± i π/4 · Y)`: the square roots of `±iY` appearing in the
    /// X-measurement rule.
    pub fn rot_y(sign: i8) -> Self {
        let p = Cyclo8::monomial(0, -1);
        let n = Cyclo8::monomial(4, -1);
        if sign > 0 {
            Cliff1 { m: [[p, p], [n, p]] }
        } else {
            Cliff1 { m: [[p, n], [p, p]] }
        }
    }

    pub fn pauli(axis: Axis) -> Self {
        match axis {
            Axis::X => Self::x(),
            Axis::Y => Self::y(),
            Axis::Z => Self::z(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = [[O; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.m[i][0].mul(&rhs.m[0][j]).add(&self.m[i][1].mul(&rhs.m[1][j]));
            }
        }
        Cliff1 { m: out }
    }

    pub fn adjoint(&self) -> Self {
        Cliff1 {
            m: [
                [self.m[0][0].conj(), self.m[1][0].conj()],
                [self.m[0][1].conj(), self.m[1][1].conj()],
            ],
        }
    }

    pub fn scaled(&self, s: &Cyclo8) -> Self {
        Cliff1 {
            m: [
                [self.m[0][0].mul(s), self.m[0][1].mul(s)],
                [self.m[1][0].mul(s), self.m[1][1].mul(s)],
            ],
        }
    }

    /// Identify the matrix as `sign · P` for a Pauli `P ∈ {X,Y,Z,I}`.
    /// Returns `None` when it is not exactly a signed Pauli.
    pub fn as_signed_pauli(&self) -> Option<(Option<Axis>, i8)> {
        let candidates: [(Option<Axis>, Cliff1); 4] = [
            (None, Cliff1::IDENTITY),
            (Some(Axis::X), Cliff1::x()),
            (Some(Axis::Y), Cliff1::y()),
            (Some(Axis::Z), Cliff1::z()),
        ];
        for (axis, c) in candidates {
            if *self == c {
                return Some((axis, 1));
            }
            if *self == c.scaled(&Cyclo8::zeta(4)) {
                return Some((axis, -1));
            }
        }
        None
    }

    /// `U† A U` identified as a signed Pauli axis; the measurement-basis
    /// conversion through this frame.
    pub fn conj_axis_through(&self, axis: Axis) -> (Axis, i8) {
        let m = self.adjoint().mul(&Cliff1::pauli(axis)).mul(self);
        match m.as_signed_pauli() {
            Some((Some(a), s)) => (a, s),
            other => panic!("frame conjugation left the Pauli group: {other:?}"),
        }
    }

    /// `U A U†` — the image of a Pauli axis under this Clifford.
    pub fn image_of(&self, axis: Axis) -> (Axis, i8) {
        let m = self.mul(&Cliff1::pauli(axis)).mul(&self.adjoint());
        match m.as_signed_pauli() {
            Some((Some(a), s)) => (a, s),
            other => panic!("image left the Pauli group: {other:?}"),
        }
    }

    pub fn to_complex_matrix<T: Scalar>(&self) -> [[Complex<T>; 2]; 2] {
        [
            [self.m[0][0].to_complex(), self.m[0][1].to_complex()],
            [self.m[1][0].to_complex(), self.m[1][1].to_complex()],
        ]
    }
}

/// Conjugated eigenbra row of `axis` with outcome `±1`, exact:
/// `X±: (1, ±1)/√2`, `Y±: (1, ∓i)/√2`, `Z+: (1,0)`, `Z−: (0,1)`.
pub fn eigenbra_row(axis: Axis, outcome: i8) -> [Cyclo8; 2] {
    let h = Cyclo8::monomial(0, -1);
    match (axis, outcome > 0) {
        (Axis::X, true) => [h, h],
        (Axis::X, false) => [h, Cyclo8::monomial(4, -1)],
        (Axis::Y, true) => [h, Cyclo8::monomial(6, -1)],
        (Axis::Y, false) => [h, Cyclo8::monomial(2, -1)],
        (Axis::Z, true) => [Cyclo8::ONE, Cyclo8::ZERO],
        (Axis::Z, false) => [Cyclo8::ZERO, Cyclo8::ONE],
    }
}

/// `<A_ε| U = η · <A'_{ε'}|` for the effective basis `(A', ε')` given by
/// `conj_axis_through`; returns `(η, A', ε')` with `η` exact and unimodular.
pub fn bra_through_frame(frame: &Cliff1, axis: Axis, outcome: i8) -> (Cyclo8, Axis, i8) {
    let (ax2, sign) = frame.conj_axis_through(axis);
    let eff_outcome = outcome * sign;
    let bra = eigenbra_row(axis, outcome);
    let row = [
        bra[0].mul(&frame.m[0][0]).add(&bra[1].mul(&frame.m[1][0])),
        bra[0].mul(&frame.m[0][1]).add(&bra[1].mul(&frame.m[1][1])),
    ];
    let canon = eigenbra_row(ax2, eff_outcome);
    let k = if canon[0].is_zero() { 1 } else { 0 };
    let eta = row[k].mul(&canon[k].monomial_inverse().expect("canonical bra entry is monomial"));
    // exactness check: the full row must match
    let other = k ^ 1;
    debug_assert_eq!(row[other], eta.mul(&canon[other]), "frame bra conversion inconsistent");
    (eta, ax2, eff_outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c64(m: &Cliff1) -> [[Complex64; 2]; 2] {
        m.to_complex_matrix::<f64>()
    }

    fn approx(a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2]) -> bool {
        (0..2).all(|i| (0..2).all(|j| (a[i][j] - b[i][j]).norm() < 1e-12))
    }

    fn matmul(a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        out
    }

    #[test]
    fn rot_y_squares_to_plus_minus_iy() {
        for sign in [1i8, -1] {
            let r = Cliff1::rot_y(sign);
            let sq = r.mul(&r);
            let target = Cliff1::y().scaled(&Cyclo8::i_pow(sign as i64));
            assert_eq!(sq, target);
        }
    }

    #[test]
    fn exact_mul_matches_float_mul() {
        let mats = [
            Cliff1::IDENTITY,
            Cliff1::x(),
            Cliff1::y(),
            Cliff1::z(),
            Cliff1::h(),
            Cliff1::s(),
            Cliff1::sdg(),
            Cliff1::rot_y(1),
            Cliff1::rot_y(-1),
        ];
        for a in &mats {
            for b in &mats {
                assert!(approx(c64(&a.mul(b)), matmul(c64(a), c64(b))));
            }
        }
    }

    #[test]
    fn standard_conjugations() {
        assert_eq!(Cliff1::h().image_of(Axis::X), (Axis::Z, 1));
        assert_eq!(Cliff1::h().image_of(Axis::Z), (Axis::X, 1));
        assert_eq!(Cliff1::h().image_of(Axis::Y), (Axis::Y, -1));
        assert_eq!(Cliff1::s().image_of(Axis::X), (Axis::Y, 1));
        assert_eq!(Cliff1::s().conj_axis_through(Axis::Y), (Axis::X, 1));
        // S† as a frame: S X S† = Y
        assert_eq!(Cliff1::sdg().conj_axis_through(Axis::X), (Axis::Y, 1));
    }

    #[test]
    fn bra_through_s_frame_is_exact() {
        // <Y_+| S = <X_+| with no phase
        let (eta, ax, out) = bra_through_frame(&Cliff1::s(), Axis::Y, 1);
        assert_eq!((ax, out), (Axis::X, 1));
        assert_eq!(eta, Cyclo8::ONE);
        // <Y_+| H picks up ζ8^{-1} and lands on <Y_->
        let (eta, ax, out) = bra_through_frame(&Cliff1::h(), Axis::Y, 1);
        assert_eq!((ax, out), (Axis::Y, -1));
        assert_eq!(eta, Cyclo8::zeta(7));
    }

    #[test]
    fn unitarity_exact() {
        for mat in [Cliff1::h(), Cliff1::s(), Cliff1::rot_y(1), Cliff1::rot_y(-1)] {
            assert_eq!(mat.mul(&mat.adjoint()), Cliff1::IDENTITY);
        }
    }
}
