//! Overflow-safe complex scalars: a complex mantissa times a power of two.
//!
//! Partition-function prefactors grow like `2^{O(M)}` for lattices with
//! thousands of sites, far outside `f64` range, so every Z-valued quantity in
//! this crate is a [`ScaledComplex`].

use crate::scalar::Scalar;
use num_complex::Complex;
use num_traits::{One, Zero};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg};

/// `mantissa * 2^exponent2`, with `|mantissa|` kept in `[1, 2)`.
///
/// A zero value is represented as mantissa `0` with exponent `0`. The exponent
/// is an `i64`, so arithmetic on values whose exponents fit in `i32` can never
/// overflow the representation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledComplex<T> {
    mantissa: Complex<T>,
    exponent2: i64,
}

impl<T: Scalar> ScaledComplex<T> {
    pub fn new(mantissa: Complex<T>, exponent2: i64) -> Self {
        Self { mantissa, exponent2 }.normalized()
    }

    pub fn zero() -> Self {
        Self { mantissa: Complex::zero(), exponent2: 0 }
    }

    pub fn one() -> Self {
        Self { mantissa: Complex::one(), exponent2: 0 }
    }

    pub fn from_complex(c: Complex<T>) -> Self {
        Self::new(c, 0)
    }

    pub fn from_real(x: T) -> Self {
        Self::from_complex(Complex::new(x, T::zero()))
    }

    /// `2^(k/2)` for integer `k` (half powers of two show up in every
    /// stabilizer normalization).
    pub fn two_pow_half(k: i64) -> Self {
        let m = if k.rem_euclid(2) == 1 { T::of(std::f64::consts::SQRT_2) } else { T::one() };
        Self { mantissa: Complex::new(m, T::zero()), exponent2: k.div_euclid(2) }.normalized()
    }

    /// `exp(z)` computed without overflow for any finite `z`.
    pub fn exp(z: Complex<T>) -> Self {
        let ln2 = T::of(std::f64::consts::LN_2);
        let k = (z.re / ln2).round();
        let ki = k.to_f64().map(|v| v as i64).unwrap_or(0);
        let rest = Complex::new(z.re - k * ln2, z.im);
        Self::new(rest.exp(), ki)
    }

    pub fn mantissa(&self) -> Complex<T> {
        self.mantissa
    }

    pub fn exponent2(&self) -> i64 {
        self.exponent2
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    /// Collapse to a plain complex number; may overflow to infinity or
    /// underflow to zero when the exponent exceeds the scalar's range.
    pub fn to_complex(&self) -> Complex<T> {
        let e = T::of(self.exponent2 as f64);
        self.mantissa * T::of(2.0).powf(e)
    }

    /// `log2(|value|)`, or `-inf` for zero.
    pub fn log2_abs(&self) -> T {
        if self.is_zero() {
            return T::neg_infinity();
        }
        self.mantissa.norm().log2() + T::of(self.exponent2 as f64)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return *self;
        }
        Self { mantissa: self.mantissa, exponent2: self.exponent2 + k }
    }

    pub fn conj(&self) -> Self {
        Self { mantissa: self.mantissa.conj(), exponent2: self.exponent2 }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero ScaledComplex");
        Self::new(self.mantissa.inv(), -self.exponent2)
    }

    /// Relative distance `|a-b| / max(|a|, |b|)`, computed scale-free.
    /// Returns 0 when both are zero.
    pub fn rel_err(&self, other: &Self) -> T {
        if self.is_zero() && other.is_zero() {
            return T::zero();
        }
        if self.is_zero() || other.is_zero() {
            return T::one();
        }
        // Align exponents to the larger value; the difference exponent is
        // clamped so the shift cannot overflow T.
        let e = self.exponent2.max(other.exponent2);
        let shift = |v: &Self| {
            let d = (v.exponent2 - e).max(-4096);
            v.mantissa * T::of(2.0).powf(T::of(d as f64))
        };
        let a = shift(self);
        let b = shift(other);
        let denom = a.norm().max(b.norm());
        (a - b).norm() / denom
    }

    fn normalized(mut self) -> Self {
        if self.mantissa.is_zero() {
            self.exponent2 = 0;
            return self;
        }
        let n = self.mantissa.norm();
        if !n.is_finite() {
            // Re and Im are finite by construction everywhere in this crate;
            // hypot overflow is the only way to get here.
            let scale = T::of(2.0).powi(-64);
            return Self {
                mantissa: self.mantissa * scale,
                exponent2: self.exponent2 + 64,
            }
            .normalized();
        }
        let mut e = n.log2().floor().to_f64().map(|v| v as i64).unwrap_or(0);
        let mut m = self.mantissa * T::of(2.0).powf(T::of(-e as f64));
        // log2/floor can land one off at the boundary; fix up.
        let two = T::of(2.0);
        while m.norm() >= two {
            m = m * T::of(0.5);
            e += 1;
        }
        while m.norm() < T::one() {
            m = m * two;
            e -= 1;
        }
        Self { mantissa: m, exponent2: self.exponent2 + e }
    }
}

impl<T: Scalar> Mul for ScaledComplex<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::new(self.mantissa * rhs.mantissa, self.exponent2 + rhs.exponent2)
    }
}

impl<T: Scalar> MulAssign for ScaledComplex<T> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<T: Scalar> Div for ScaledComplex<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl<T: Scalar> Add for ScaledComplex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.exponent2 >= rhs.exponent2 { (self, rhs) } else { (rhs, self) };
        let d = small.exponent2 - big.exponent2;
        if d < -128 {
            // Beyond any float mantissa: the small term cannot contribute.
            return big;
        }
        let addend = small.mantissa * T::of(2.0).powf(T::of(d as f64));
        Self::new(big.mantissa + addend, big.exponent2)
    }
}

impl<T: Scalar> AddAssign for ScaledComplex<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Scalar> Neg for ScaledComplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { mantissa: -self.mantissa, exponent2: self.exponent2 }
    }
}

impl<T: Scalar> Mul<Complex<T>> for ScaledComplex<T> {
    type Output = Self;
    fn mul(self, rhs: Complex<T>) -> Self {
        if rhs.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Self::new(self.mantissa * rhs, self.exponent2)
    }
}

impl<T: Scalar> std::fmt::Display for ScaledComplex<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(
            f,
            "({} {:+}i)*2^{}",
            self.mantissa.re, self.mantissa.im, self.exponent2
        )
    }
}
