//! Product bras: unnormalized row vectors paired bilinearly with kets
//! (no conjugation is ever applied by the pairing itself).

use crate::model::IsingModel;
use crate::scalar::Scalar;
use crate::scaled::ScaledComplex;
use num_complex::Complex;
use num_traits::Zero;

/// A single-qubit bra `(w0, w1)`: row coefficients applied to `|0>`, `|1>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalBra<T> {
    pub w0: Complex<T>,
    pub w1: Complex<T>,
}

impl<T: Scalar> LocalBra<T> {
    pub fn new(w0: Complex<T>, w1: Complex<T>) -> Self {
        assert!(
            !(w0.is_zero() && w1.is_zero()),
            "local bra must not be identically zero"
        );
        Self { w0, w1 }
    }

    pub fn coeff(&self, bit: usize) -> Complex<T> {
        if bit == 0 {
            self.w0
        } else {
            self.w1
        }
    }

    /// Right-multiply by a 2x2 matrix: `(w0', w1') = (w0, w1) · M`.
    pub fn apply_matrix(&self, m: &[[Complex<T>; 2]; 2]) -> Self {
        Self {
            w0: self.w0 * m[0][0] + self.w1 * m[1][0],
            w1: self.w0 * m[0][1] + self.w1 * m[1][1],
        }
    }
}

/// A complete product bra over a declared set of qubits, with an overall
/// scale factor.
#[derive(Clone, Debug)]
pub struct ProductBra<T> {
    pub factors: Vec<LocalBra<T>>,
    pub scale: ScaledComplex<T>,
}

impl<T: Scalar> ProductBra<T> {
    pub fn new(factors: Vec<LocalBra<T>>) -> Self {
        Self { factors, scale: ScaledComplex::one() }
    }

    pub fn num_qubits(&self) -> usize {
        self.factors.len()
    }
}

/// The coupling bra of an Ising model on the decorated graph: edge-qubit `ab`
/// carries `(e^{K_ab}, e^{-K_ab})`, vertex-qubit `a` carries
/// `(e^{g_a}, e^{-g_a})`. Fixed spins are not representable here; callers
/// model them with explicit `(1,0)` / `(0,1)` bras instead.
pub fn alpha_from_model<T: Scalar>(model: &IsingModel<T>) -> ProductBra<T> {
    let dg = crate::decorate::decorate(&model.graph);
    let mut factors = Vec::with_capacity(dg.num_qubits());
    for g in &model.vertex_fields {
        factors.push(LocalBra::new(g.exp(), (-g).exp()));
    }
    for k in &model.edge_couplings {
        factors.push(LocalBra::new(k.exp(), (-k).exp()));
    }
    debug_assert_eq!(factors.len(), dg.num_qubits());
    ProductBra::new(factors)
}

/// Per-qubit bras used by measurement branches, as conjugated rows:
/// `X±: (1, ±1)/√2`, `Y±: (1, ∓i)/√2`, `Z+: (1,0)`, `Z−: (0,1)`.
pub fn eigenbra<T: Scalar>(basis: crate::pauli::Axis, outcome: i8) -> LocalBra<T> {
    use crate::pauli::Axis;
    let h = T::of(std::f64::consts::FRAC_1_SQRT_2);
    let one = Complex::new(T::one(), T::zero());
    let zero = Complex::new(T::zero(), T::zero());
    match (basis, outcome) {
        (Axis::X, 1) => LocalBra::new(Complex::new(h, T::zero()), Complex::new(h, T::zero())),
        (Axis::X, -1) => LocalBra::new(Complex::new(h, T::zero()), Complex::new(-h, T::zero())),
        (Axis::Y, 1) => LocalBra::new(Complex::new(h, T::zero()), Complex::new(T::zero(), -h)),
        (Axis::Y, -1) => LocalBra::new(Complex::new(h, T::zero()), Complex::new(T::zero(), h)),
        (Axis::Z, 1) => LocalBra::new(one, zero),
        (Axis::Z, -1) => LocalBra::new(zero, one),
        _ => panic!("outcome must be ±1"),
    }
}

/// Sanity helper used in a few tests: the bra as a dense row on `n` qubits.
pub fn product_bra_dense<T: Scalar>(bra: &ProductBra<T>) -> Vec<Complex<T>> {
    let n = bra.num_qubits();
    let mut out = vec![Complex::new(T::one(), T::zero()); 1 << n];
    for (x, v) in out.iter_mut().enumerate() {
        for (q, f) in bra.factors.iter().enumerate() {
            let bit = x >> (n - 1 - q) & 1;
            *v = *v * f.coeff(bit);
        }
    }
    out
}

pub use crate::decorate::decorate;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use num_complex::Complex64;

    #[test]
    fn zero_coupling_gives_unit_pair() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let m = IsingModel::<f64>::uniform(g, 0.0);
        let alpha = alpha_from_model(&m);
        // edge-qubit factor is the last one
        assert_eq!(alpha.factors[2].w0, Complex64::new(1.0, 0.0));
        assert_eq!(alpha.factors[2].w1, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn unit_coupling_pair() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let m = IsingModel::<f64>::uniform(g, 1.0);
        let alpha = alpha_from_model(&m);
        let f = alpha.factors[2];
        assert!((f.w0.re - std::f64::consts::E).abs() < 1e-12);
        assert!((f.w1.re - 1.0 / std::f64::consts::E).abs() < 1e-12);
    }
}
