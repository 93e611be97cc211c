//! The commutative algebra of bicomplex numbers.
//!
//! A bicomplex number is `w = z₁ + z₂·i₂` with `z₁, z₂` complex in `i₁`,
//! where `i₁` and `i₂` are independent commuting square roots of −1 and
//! `j = i₁·i₂` squares to +1. The algebra is commutative but not a division
//! algebra: the idempotents
//!
//! ```text
//! e₁ = (1 + j)/2,    e₂ = (1 − j)/2
//! ```
//!
//! satisfy `e₁² = e₁`, `e₂² = e₂`, `e₁·e₂ = 0`, `e₁ + e₂ = 1`, and every `w`
//! splits uniquely as `w = ẑ₁·e₁ + ẑ₂·e₂` with complex `ẑ₁ = z₁ − z₂·i₁` and
//! `ẑ₂ = z₁ + z₂·i₁`. In that basis multiplication is component-wise, so a
//! [`Bicomplex`] is *stored* as its two idempotent components and the
//! standard form is just a view. Nonzero numbers with a vanishing component
//! are exactly the zero divisors (the null cone); they have no inverse.
//!
//! Three conjugations act on the algebra. On the standard form they read
//! `w^†₁ = z̄₁ + z̄₂·i₂`, `w^†₂ = z₁ − z₂·i₂`, `w^†₃ = z̄₁ − z̄₂·i₂`; on the
//! idempotent components, †₃ conjugates both, †₂ swaps them, and †₁ does
//! both. `w·w^†₃` always lands in the nonnegative hyperbolic cone `𝔻₊`,
//! which is what makes the scalar products in [`crate::ket`] positive.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::complex::Complex;
use crate::error::{Error, Result};

/// Relative scale factor used by the default null-cone / classification
/// tolerance, `DEFAULT_EPS · (1 + |w|)`.
pub const DEFAULT_EPS: f64 = 1e-12;

/// A bicomplex scalar stored in idempotent components: `w = c1·e₁ + c2·e₂`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Bicomplex {
    /// Idempotent component ẑ₁.
    pub c1: Complex,
    /// Idempotent component ẑ₂.
    pub c2: Complex,
}

/// The three conjugations of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugation {
    /// `z̄₁ + z̄₂·i₂`: swaps and conjugates the idempotent components.
    Dag1,
    /// `z₁ − z₂·i₂`: swaps the idempotent components.
    Dag2,
    /// `z̄₁ − z̄₂·i₂`: conjugates both idempotent components in place.
    Dag3,
}

/// Selects one of the two idempotent components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    One,
    Two,
}

/// Classification of a scalar, most specific class first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumberClass {
    /// Both components vanish within tolerance.
    Zero,
    /// Nonzero, but one component vanishes: a zero divisor.
    NullCone,
    /// Both components real and nonnegative (𝔻₊).
    HyperbolicPositive,
    /// Both components real (𝔻).
    Hyperbolic,
    /// Equal components: the scalar lies in the complex subfield ℂ(i₁).
    ComplexI1,
    General,
}

impl Bicomplex {
    pub const ZERO: Bicomplex = Bicomplex {
        c1: Complex::ZERO,
        c2: Complex::ZERO,
    };
    pub const ONE: Bicomplex = Bicomplex {
        c1: Complex::ONE,
        c2: Complex::ONE,
    };
    /// The imaginary unit of ℂ(i₁); both components equal `i`.
    pub const I1: Bicomplex = Bicomplex {
        c1: Complex::I,
        c2: Complex::I,
    };
    /// The second imaginary unit; components `(−i, +i)`.
    pub const I2: Bicomplex = Bicomplex {
        c1: Complex { re: 0.0, im: -1.0 },
        c2: Complex { re: 0.0, im: 1.0 },
    };
    /// The hyperbolic unit `j = i₁·i₂`; components `(1, −1)`.
    pub const J: Bicomplex = Bicomplex {
        c1: Complex { re: 1.0, im: 0.0 },
        c2: Complex { re: -1.0, im: 0.0 },
    };
    /// First idempotent `(1 + j)/2`; components `(1, 0)`.
    pub const E1: Bicomplex = Bicomplex {
        c1: Complex::ONE,
        c2: Complex::ZERO,
    };
    /// Second idempotent `(1 − j)/2`; components `(0, 1)`.
    pub const E2: Bicomplex = Bicomplex {
        c1: Complex::ZERO,
        c2: Complex::ONE,
    };

    /// Builds a scalar directly from its idempotent components.
    #[inline]
    pub const fn new(c1: Complex, c2: Complex) -> Self {
        Bicomplex { c1, c2 }
    }

    /// Builds `w = z1 + z2·i₂` from the standard form.
    pub fn from_standard(z1: Complex, z2: Complex) -> Self {
        Bicomplex {
            c1: z1 - Complex::I * z2,
            c2: z1 + Complex::I * z2,
        }
    }

    /// The standard-form pair `(z1, z2)` with `w = z1 + z2·i₂`.
    pub fn to_standard(self) -> (Complex, Complex) {
        let z1 = (self.c1 + self.c2) * 0.5;
        let z2 = Complex::I * (self.c1 - self.c2) * 0.5;
        (z1, z2)
    }

    /// Embeds a real number (equal real components).
    #[inline]
    pub fn from_real(x: f64) -> Self {
        Bicomplex::from_complex(Complex::from_real(x))
    }

    /// Embeds an element of ℂ(i₁) (equal components).
    #[inline]
    pub const fn from_complex(z: Complex) -> Self {
        Bicomplex { c1: z, c2: z }
    }

    /// Applies one of the three conjugations.
    pub fn conj(self, kind: Conjugation) -> Self {
        match kind {
            Conjugation::Dag1 => Bicomplex {
                c1: self.c2.conj(),
                c2: self.c1.conj(),
            },
            Conjugation::Dag2 => Bicomplex {
                c1: self.c2,
                c2: self.c1,
            },
            Conjugation::Dag3 => Bicomplex {
                c1: self.c1.conj(),
                c2: self.c2.conj(),
            },
        }
    }

    /// Shorthand for the †₃ conjugation, the one entering scalar products
    /// and adjoints.
    #[inline]
    pub fn dag3(self) -> Self {
        self.conj(Conjugation::Dag3)
    }

    /// The real modulus `|w| = (1/√2)·√(|ẑ₁|² + |ẑ₂|²)`, which equals
    /// `√(|z₁|² + |z₂|²)` in standard form.
    pub fn modulus(self) -> f64 {
        ((self.c1.norm_sqr() + self.c2.norm_sqr()) * 0.5).sqrt()
    }

    /// Exact zero test (both components identically zero).
    #[inline]
    pub fn is_zero(self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.c1.is_finite() && self.c2.is_finite()
    }

    /// The default absolute tolerance used for null-cone membership and
    /// classification: `DEFAULT_EPS · (1 + |w|)`.
    pub fn default_tol(self) -> f64 {
        DEFAULT_EPS * (1.0 + self.modulus())
    }

    /// True iff `w ≠ 0` and one idempotent component has modulus at most
    /// `tol`; at `tol = 0` this is exactly the zero-divisor set.
    pub fn in_null_cone(self, tol: f64) -> bool {
        debug_assert!(tol >= 0.0);
        !self.is_zero() && self.c1.abs().min(self.c2.abs()) <= tol
    }

    /// Component-wise reciprocal, using the default null-cone tolerance.
    pub fn try_inverse(self) -> Result<Self> {
        self.try_inverse_with(self.default_tol())
    }

    /// Component-wise reciprocal. Fails with [`Error::ZeroDivision`] on the
    /// exact zero and [`Error::NullCone`] when an idempotent component has
    /// modulus at most `tol`.
    pub fn try_inverse_with(self, tol: f64) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        if self.in_null_cone(tol) {
            return Err(Error::NullCone { tol });
        }
        Ok(Bicomplex {
            c1: self.c1.recip(),
            c2: self.c2.recip(),
        })
    }

    /// Component-wise n-th root with independent complex branch choices.
    /// Branch 0 on both components is the principal root.
    pub fn nth_root(self, n: u32, branch1: u32, branch2: u32) -> Self {
        Bicomplex {
            c1: self.c1.nth_root(n, branch1),
            c2: self.c2.nth_root(n, branch2),
        }
    }

    /// The projection `P_k(w) = ẑ_k`; a ring homomorphism onto ℂ(i₁).
    #[inline]
    pub fn project(self, k: Component) -> Complex {
        match k {
            Component::One => self.c1,
            Component::Two => self.c2,
        }
    }

    /// Most specific classification of the scalar at tolerance `tol`.
    pub fn classify(self, tol: f64) -> NumberClass {
        debug_assert!(tol >= 0.0);
        let m1 = self.c1.abs();
        let m2 = self.c2.abs();
        if m1 <= tol && m2 <= tol {
            return NumberClass::Zero;
        }
        if m1.min(m2) <= tol {
            return NumberClass::NullCone;
        }
        if self.c1.im.abs() <= tol && self.c2.im.abs() <= tol {
            if self.c1.re >= -tol && self.c2.re >= -tol {
                return NumberClass::HyperbolicPositive;
            }
            return NumberClass::Hyperbolic;
        }
        if (self.c1 - self.c2).abs() <= tol {
            return NumberClass::ComplexI1;
        }
        NumberClass::General
    }

    /// Reads the scalar as a hyperbolic number if both components are real
    /// within `tol`.
    pub fn as_hyperbolic(self, tol: f64) -> Option<Hyperbolic> {
        if self.c1.im.abs() <= tol && self.c2.im.abs() <= tol {
            Some(Hyperbolic {
                x1: self.c1.re,
                x2: self.c2.re,
            })
        } else {
            None
        }
    }

    /// Membership in the nonnegative hyperbolic cone 𝔻₊ within `tol`.
    pub fn in_d_plus(self, tol: f64) -> bool {
        self.c1.im.abs() <= tol
            && self.c2.im.abs() <= tol
            && self.c1.re >= -tol
            && self.c2.re >= -tol
    }
}

/// A hyperbolic number `x + y·j`, stored as idempotent components
/// `(x1, x2) = (x + y, x − y)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Hyperbolic {
    pub x1: f64,
    pub x2: f64,
}

impl Hyperbolic {
    #[inline]
    pub const fn new(x1: f64, x2: f64) -> Self {
        Hyperbolic { x1, x2 }
    }

    /// The standard-form pair `(x, y)` with `x + y·j`.
    pub fn to_standard(self) -> (f64, f64) {
        ((self.x1 + self.x2) * 0.5, (self.x1 - self.x2) * 0.5)
    }

    /// Membership in 𝔻₊ within `tol`.
    pub fn is_nonnegative(self, tol: f64) -> bool {
        self.x1 >= -tol && self.x2 >= -tol
    }

    pub fn to_bicomplex(self) -> Bicomplex {
        Bicomplex {
            c1: Complex::from_real(self.x1),
            c2: Complex::from_real(self.x2),
        }
    }
}

impl From<Hyperbolic> for Bicomplex {
    fn from(h: Hyperbolic) -> Self {
        h.to_bicomplex()
    }
}

impl fmt::Display for Hyperbolic {
    /// `{}` prints the standard form `x + y·j`; `{:#}` the idempotent form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn signed(f: &mut fmt::Formatter<'_>, v: f64, unit: &str) -> fmt::Result {
            if v < 0.0 {
                write!(f, " - {}·{}", -v, unit)
            } else {
                write!(f, " + {}·{}", v, unit)
            }
        }
        if f.alternate() {
            write!(f, "{}·e1", self.x1)?;
            signed(f, self.x2, "e2")
        } else {
            let (x, y) = self.to_standard();
            write!(f, "{}", x)?;
            signed(f, y, "j")
        }
    }
}

impl Add for Bicomplex {
    type Output = Bicomplex;
    #[inline]
    fn add(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex {
            c1: self.c1 + rhs.c1,
            c2: self.c2 + rhs.c2,
        }
    }
}

impl Sub for Bicomplex {
    type Output = Bicomplex;
    #[inline]
    fn sub(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex {
            c1: self.c1 - rhs.c1,
            c2: self.c2 - rhs.c2,
        }
    }
}

impl Mul for Bicomplex {
    type Output = Bicomplex;
    #[inline]
    fn mul(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex {
            c1: self.c1 * rhs.c1,
            c2: self.c2 * rhs.c2,
        }
    }
}

impl Mul<f64> for Bicomplex {
    type Output = Bicomplex;
    #[inline]
    fn mul(self, rhs: f64) -> Bicomplex {
        Bicomplex {
            c1: self.c1 * rhs,
            c2: self.c2 * rhs,
        }
    }
}

impl Neg for Bicomplex {
    type Output = Bicomplex;
    #[inline]
    fn neg(self) -> Bicomplex {
        Bicomplex {
            c1: -self.c1,
            c2: -self.c2,
        }
    }
}

impl AddAssign for Bicomplex {
    #[inline]
    fn add_assign(&mut self, rhs: Bicomplex) {
        *self = *self + rhs;
    }
}

impl SubAssign for Bicomplex {
    #[inline]
    fn sub_assign(&mut self, rhs: Bicomplex) {
        *self = *self - rhs;
    }
}

impl MulAssign for Bicomplex {
    #[inline]
    fn mul_assign(&mut self, rhs: Bicomplex) {
        *self = *self * rhs;
    }
}

impl Sum for Bicomplex {
    fn sum<I: Iterator<Item = Bicomplex>>(iter: I) -> Bicomplex {
        iter.fold(Bicomplex::ZERO, Add::add)
    }
}

impl From<f64> for Bicomplex {
    fn from(x: f64) -> Self {
        Bicomplex::from_real(x)
    }
}

impl From<Complex> for Bicomplex {
    fn from(z: Complex) -> Self {
        Bicomplex::from_complex(z)
    }
}

impl fmt::Display for Bicomplex {
    /// `{}` prints the standard form `z1 + z2·i2`; `{:#}` the idempotent
    /// form `ẑ1·e1 + ẑ2·e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            write!(f, "({})·e1 + ({})·e2", self.c1, self.c2)
        } else {
            let (z1, z2) = self.to_standard();
            write!(f, "({}) + ({})·i2", z1, z2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: Bicomplex, b: Bicomplex, tol: f64) -> bool {
        (a - b).modulus() <= tol
    }

    #[test]
    fn standard_form_of_units() {
        // w = z1 + z2·i2 with (z1, z2) = (1, 2) has components (1−2i, 1+2i).
        let w = Bicomplex::from_standard(Complex::from_real(1.0), Complex::from_real(2.0));
        assert_eq!(w.c1, Complex::new(1.0, -2.0));
        assert_eq!(w.c2, Complex::new(1.0, 2.0));

        let i2 = Bicomplex::from_standard(Complex::ZERO, Complex::ONE);
        assert_eq!(i2, Bicomplex::I2);

        let one = Bicomplex::from_standard(Complex::ONE, Complex::ZERO);
        assert_eq!(one, Bicomplex::ONE);
    }

    #[test]
    fn unit_products() {
        assert_eq!(Bicomplex::I1 * Bicomplex::I2, Bicomplex::J);
        assert_eq!(Bicomplex::J * Bicomplex::J, Bicomplex::ONE);
        assert_eq!(Bicomplex::E1 * Bicomplex::E2, Bicomplex::ZERO);
        assert_eq!(Bicomplex::E1 * Bicomplex::E1, Bicomplex::E1);
        assert_eq!(Bicomplex::E1 + Bicomplex::E2, Bicomplex::ONE);
    }

    #[test]
    fn conjugations() {
        assert_eq!(Bicomplex::I2.conj(Conjugation::Dag3), -Bicomplex::I2);
        assert_eq!(Bicomplex::E1.conj(Conjugation::Dag3), Bicomplex::E1);
        // †₂ negates the i₂ part: w = z1 + z2·i2 ↦ z1 − z2·i2.
        let w = Bicomplex::from_standard(Complex::new(1.0, 2.0), Complex::new(-3.0, 0.5));
        let (z1, z2) = w.conj(Conjugation::Dag2).to_standard();
        assert!((z1 - Complex::new(1.0, 2.0)).abs() < 1e-15);
        assert!((z2 - Complex::new(3.0, -0.5)).abs() < 1e-15);
        // composition: †₂ ∘ †₃ = †₁, exactly.
        assert_eq!(
            w.conj(Conjugation::Dag3).conj(Conjugation::Dag2),
            w.conj(Conjugation::Dag1)
        );
    }

    #[test]
    fn modulus_values() {
        let w = Bicomplex::ONE + Bicomplex::I2;
        assert!((w.modulus() - 2f64.sqrt()).abs() < 1e-15);
        assert!((Bicomplex::E1.modulus() - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(Bicomplex::ZERO.modulus(), 0.0);
    }

    #[test]
    fn inversion() {
        let j = Bicomplex::J;
        assert_eq!(j.try_inverse().unwrap(), j);

        let e1 = Bicomplex::E1;
        assert!(matches!(e1.try_inverse(), Err(Error::NullCone { .. })));
        assert!(matches!(
            Bicomplex::ZERO.try_inverse(),
            Err(Error::ZeroDivision)
        ));

        let w = Bicomplex::E1 * 4.0 + Bicomplex::E2 * 2.0;
        let inv = w.try_inverse().unwrap();
        assert!(approx(
            inv,
            Bicomplex::E1 * 0.25 + Bicomplex::E2 * 0.5,
            1e-15
        ));
    }

    #[test]
    fn null_cone_membership() {
        let tol = 1e-12;
        assert!(Bicomplex::E2.in_null_cone(tol));
        assert!(!(Bicomplex::ONE + Bicomplex::I2).in_null_cone(tol));
        // 1 + i₁·i₂ = 1 + j = 2·e₁ has a vanishing second component.
        let w = Bicomplex::ONE + Bicomplex::I1 * Bicomplex::I2;
        assert!(w.in_null_cone(tol));
        assert!(!Bicomplex::ZERO.in_null_cone(tol));
    }

    #[test]
    fn roots() {
        let w = Bicomplex::E1 * 4.0 + Bicomplex::E2 * 9.0;
        let r = w.nth_root(2, 0, 0);
        assert!(approx(r, Bicomplex::E1 * 2.0 + Bicomplex::E2 * 3.0, 1e-15));

        let w = Bicomplex::from_standard(Complex::new(0.3, -1.2), Complex::new(2.0, 0.7));
        assert_eq!(w.nth_root(1, 0, 0), w);

        let r = Bicomplex::from_real(-1.0).nth_root(2, 0, 0);
        assert!(approx(r, Bicomplex::I1, 1e-15));
    }

    #[test]
    fn projections() {
        assert_eq!(
            Bicomplex::I2.project(Component::One),
            Complex::new(0.0, -1.0)
        );
        assert_eq!(Bicomplex::E1.project(Component::Two), Complex::ZERO);
        let s = Bicomplex::ONE + Bicomplex::I2;
        let t = Bicomplex::J;
        assert_eq!(
            (s * t).project(Component::One),
            s.project(Component::One) * t.project(Component::One)
        );
    }

    #[test]
    fn classification() {
        let w = Bicomplex::I2;
        let p = w * w.dag3();
        assert_eq!(p.classify(p.default_tol()), NumberClass::HyperbolicPositive);
        assert!(approx(p, Bicomplex::ONE, 1e-15));

        assert_eq!(Bicomplex::J.classify(1e-12), NumberClass::Hyperbolic);

        let w = Bicomplex::from_standard(Complex::ONE, Complex::from_real(2.0));
        assert_eq!(w.classify(w.default_tol()), NumberClass::General);

        assert_eq!(Bicomplex::ZERO.classify(0.0), NumberClass::Zero);
        assert_eq!(Bicomplex::E1.classify(1e-12), NumberClass::NullCone);
        assert_eq!(Bicomplex::I1.classify(1e-12), NumberClass::ComplexI1);
    }

    #[test]
    fn standard_round_trip() {
        let w = Bicomplex::new(Complex::new(0.125, -3.5), Complex::new(2.25, 0.75));
        let (z1, z2) = w.to_standard();
        let back = Bicomplex::from_standard(z1, z2);
        assert!(approx(back, w, 1e-15 * (1.0 + w.modulus())));
    }

    #[test]
    fn hyperbolic_view() {
        let h = Hyperbolic::new(1.0, -1.0);
        let (x, y) = h.to_standard();
        assert_eq!((x, y), (0.0, 1.0)); // j itself
        assert_eq!(h.to_bicomplex(), Bicomplex::J);
        assert!(!h.is_nonnegative(0.0));
        assert!(Hyperbolic::new(0.0, 2.0).is_nonnegative(0.0));
        assert_eq!(Bicomplex::J.as_hyperbolic(0.0), Some(h));
        assert_eq!(Bicomplex::I2.as_hyperbolic(1e-9), None);
    }
}
