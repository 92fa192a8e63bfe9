//! Exact scalars in the ring `Z[ζ8, 1/√2]`, where `ζ8 = e^{iπ/4}`.
//!
//! Every scalar the compiler produces at compile time (measurement-branch
//! phases, correction phases, stabilizer amplitudes) lives in this ring, so
//! the whole pipeline is tracked exactly and only converted to floating point
//! at the very end.

use crate::scalar::Scalar;
use crate::scaled::ScaledComplex;
use num_complex::Complex;

/// `(c0 + c1 ζ + c2 ζ² + c3 ζ³) · 2^{half/2}` with `ζ = e^{iπ/4}`, `ζ⁴ = −1`.
///
/// The representation is canonicalized so that the coefficient vector is not
/// divisible by `√2 = ζ − ζ³` (zero is all-zero coefficients with `half = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cyclo8 {
    pub c: [i64; 4],
    pub half: i64,
}

impl Cyclo8 {
    pub const ZERO: Cyclo8 = Cyclo8 { c: [0; 4], half: 0 };
    pub const ONE: Cyclo8 = Cyclo8 { c: [1, 0, 0, 0], half: 0 };

    /// `ζ8^k`.
    pub fn zeta(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c = [0i64; 4];
        if k < 4 {
            c[k] = 1;
        } else {
            c[k - 4] = -1;
        }
        Cyclo8 { c, half: 0 }
    }

    /// `i^k`.
    pub fn i_pow(k: i64) -> Self {
        Self::zeta(2 * k)
    }

    /// `ζ8^k · 2^{half/2}`.
    pub fn monomial(k: i64, half: i64) -> Self {
        let mut v = Self::zeta(k);
        v.half = half;
        v
    }

    pub fn from_int(n: i64) -> Self {
        Cyclo8 { c: [n, 0, 0, 0], half: 0 }.canonical()
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0; 4]
    }

    fn divisible_by_sqrt2(c: &[i64; 4]) -> Option<[i64; 4]> {
        // x / √2 = x * (ζ - ζ³) / 2 since (ζ - ζ³)² = 2.
        let m = mul_coeffs(c, &[0, 1, 0, -1]);
        if m.iter().all(|v| v % 2 == 0) {
            Some([m[0] / 2, m[1] / 2, m[2] / 2, m[3] / 2])
        } else {
            None
        }
    }

    fn canonical(mut self) -> Self {
        if self.is_zero() {
            self.half = 0;
            return self;
        }
        while let Some(d) = Self::divisible_by_sqrt2(&self.c) {
            self.c = d;
            self.half += 1;
        }
        self
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::ZERO;
        }
        Cyclo8 { c: mul_coeffs(&self.c, &other.c), half: self.half + other.half }.canonical()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        // Align half-exponents: scale the larger-half operand's coefficients up.
        let h = self.half.min(other.half);
        let lift = |v: &Cyclo8| -> [i64; 4] {
            let mut c = v.c;
            let mut d = v.half - h;
            debug_assert!(d >= 0 && d < 256, "Cyclo8 add with wildly mismatched scales");
            while d >= 2 {
                c = c.map(|x| x * 2);
                d -= 2;
            }
            if d == 1 {
                c = mul_coeffs(&c, &[0, 1, 0, -1]); // * sqrt(2)
            }
            c
        };
        let a = lift(self);
        let b = lift(other);
        Cyclo8 { c: [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]], half: h }.canonical()
    }

    pub fn neg(&self) -> Self {
        Cyclo8 { c: self.c.map(|x| -x), half: self.half }
    }

    pub fn conj(&self) -> Self {
        // conj(ζ^k) = ζ^{-k}: fixes 1, maps ζ ↦ -ζ³, ζ² ↦ -ζ², ζ³ ↦ -ζ.
        Cyclo8 { c: [self.c[0], -self.c[3], -self.c[2], -self.c[1]], half: self.half }
    }

    pub fn double(&self) -> Self {
        if self.is_zero() {
            return *self;
        }
        Cyclo8 { c: self.c, half: self.half + 2 }
    }

    /// If the value is `ζ8^k · 2^{half/2}`, return `(k, half)`.
    pub fn to_monomial(&self) -> Option<(u8, i64)> {
        if self.is_zero() {
            return None;
        }
        let mut k = None;
        for (j, &v) in self.c.iter().enumerate() {
            match v {
                0 => {}
                1 if k.is_none() => k = Some(j as i64),
                -1 if k.is_none() => k = Some(j as i64 + 4),
                _ => return None,
            }
        }
        k.map(|k| (k as u8, self.half))
    }

    /// Multiplicative inverse, defined for monomials only.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let (k, h) = self.to_monomial()?;
        Some(Self::monomial(-(k as i64), -h))
    }

    pub fn to_complex<T: Scalar>(&self) -> Complex<T> {
        self.to_scaled::<T>().to_complex()
    }

    pub fn to_scaled<T: Scalar>(&self) -> ScaledComplex<T> {
        if self.is_zero() {
            return ScaledComplex::zero();
        }
        let s = T::of(std::f64::consts::FRAC_1_SQRT_2);
        // ζ^0..3 = 1, (s+si), i, (-s+si)
        let re = T::of(self.c[0] as f64) + s * T::of((self.c[1] - self.c[3]) as f64);
        let im = s * T::of((self.c[1] + self.c[3]) as f64) + T::of(self.c[2] as f64);
        ScaledComplex::from_complex(Complex::new(re, im))
            * ScaledComplex::two_pow_half(self.half)
    }
}

fn mul_coeffs(a: &[i64; 4], b: &[i64; 4]) -> [i64; 4] {
    let mut out = [0i64; 4];
    for i in 0..4 {
        if a[i] == 0 {
            continue;
        }
        for j in 0..4 {
            if b[j] == 0 {
                continue;
            }
            let k = i + j;
            if k < 4 {
                out[k] += a[i] * b[j];
            } else {
                out[k - 4] -= a[i] * b[j]; // ζ⁴ = −1
            }
        }
    }
    out
}
