//! Bicomplex numbers `Z = z + jw` with `z, w ∈ ℂ(i)` and `i·j = j·i`,
//! `i² = j² = −1`.
//!
//! Every value carries both coordinate systems: the cartesian pair `(z, w)`
//! and the idempotent pair `(z1, z2)` relative to the basis
//! `e1 = (1 + ij)/2`, `e2 = (1 − ij)/2`, where `z1 = z − iw`, `z2 = z + iw`.
//! The idempotent pair multiplies componentwise, which is what every norm,
//! kernel and operator formula downstream relies on; the cartesian pair is
//! the presentation form. Products keep both forms, each computed by its own
//! rule, so the two representations of one value may drift apart by a few
//! ulps — the agreement of the two routes is itself one of the verified
//! properties.

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::hyperbolic::Hyperbolic;
use crate::scalar::Scalar;

/// The three conjugations of a bicomplex number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjugation {
    /// `z̄ + j w̄`: conjugate both complex coordinates.
    Dag1,
    /// `z − j w`: negate the `j` part.
    Dag2,
    /// `z̄ − j w̄`: both of the above.
    Dag3,
}

/// The three moduli, one per conjugation: `|Z|²_j = Z·Z^{†1}`,
/// `|Z|²_i = Z·Z^{†2}`, `|Z|²_k = Z·Z^{†3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Modulus {
    J,
    I,
    K,
}

/// Multiplicative classification of a bicomplex number.
///
/// Every value is exactly one of these: invertible (both idempotent
/// components nonzero), a zero divisor (exactly one vanishes), or zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberClass {
    Zero,
    ZeroDivisor,
    Invertible,
}

/// A bicomplex number, stored in both cartesian and idempotent form.
#[derive(Debug, Clone, Copy)]
pub struct Bicomplex<T> {
    z: Complex<T>,
    w: Complex<T>,
    z1: Complex<T>,
    z2: Complex<T>,
}

impl<T: Scalar> Bicomplex<T> {
    /// Builds `z + jw`. Both components must be finite.
    pub fn new(z: Complex<T>, w: Complex<T>) -> Self {
        assert!(
            z.re.is_finite() && z.im.is_finite() && w.re.is_finite() && w.im.is_finite(),
            "bicomplex components must be finite"
        );
        let iw = mul_i(w);
        Self {
            z,
            w,
            z1: z - iw,
            z2: z + iw,
        }
    }

    /// Builds `e1·z1 + e2·z2` from the idempotent pair.
    pub fn from_idempotent(z1: Complex<T>, z2: Complex<T>) -> Self {
        assert!(
            z1.re.is_finite() && z1.im.is_finite() && z2.re.is_finite() && z2.im.is_finite(),
            "bicomplex components must be finite"
        );
        let half = T::lit(0.5);
        // z = (z1 + z2)/2, w = i(z1 − z2)/2.
        let z = (z1 + z2).scale(half);
        let w = mul_i(z1 - z2).scale(half);
        Self { z, w, z1, z2 }
    }

    /// Embeds a complex number (`w = 0`; idempotent pair `(c, c)`).
    pub fn from_complex(c: Complex<T>) -> Self {
        Self::new(c, Complex::new(T::zero(), T::zero()))
    }

    /// Embeds a real number.
    pub fn from_real(x: T) -> Self {
        Self::from_complex(Complex::new(x, T::zero()))
    }

    /// Embeds a hyperbolic number: idempotent components become real.
    pub fn from_hyperbolic(h: Hyperbolic<T>) -> Self {
        Self::from_idempotent(
            Complex::new(h.comp1(), T::zero()),
            Complex::new(h.comp2(), T::zero()),
        )
    }

    pub fn zero() -> Self {
        Self::from_real(T::zero())
    }

    pub fn one() -> Self {
        Self::from_real(T::one())
    }

    /// The idempotent `e1 = (1 + ij)/2`, pair `(1, 0)`.
    pub fn e1() -> Self {
        Self::from_idempotent(Complex::new(T::one(), T::zero()), Complex::default())
    }

    /// The idempotent `e2 = (1 − ij)/2`, pair `(0, 1)`.
    pub fn e2() -> Self {
        Self::from_idempotent(Complex::default(), Complex::new(T::one(), T::zero()))
    }

    /// The imaginary unit `i`.
    pub fn unit_i() -> Self {
        Self::from_complex(Complex::new(T::zero(), T::one()))
    }

    /// The imaginary unit `j`.
    pub fn unit_j() -> Self {
        Self::new(Complex::default(), Complex::new(T::one(), T::zero()))
    }

    /// The hyperbolic unit `k = ij`, idempotent pair `(1, −1)`.
    pub fn unit_k() -> Self {
        Self::new(Complex::default(), Complex::new(T::zero(), T::one()))
    }

    pub fn z(&self) -> Complex<T> {
        self.z
    }

    pub fn w(&self) -> Complex<T> {
        self.w
    }

    pub fn z1(&self) -> Complex<T> {
        self.z1
    }

    pub fn z2(&self) -> Complex<T> {
        self.z2
    }

    /// Idempotent pair `(z1, z2)`.
    pub fn idempotent(&self) -> (Complex<T>, Complex<T>) {
        (self.z1, self.z2)
    }

    /// Cartesian pair `(z, w)`.
    pub fn cartesian(&self) -> (Complex<T>, Complex<T>) {
        (self.z, self.w)
    }

    /// Applies one of the three conjugations. All three are involutions and
    /// exact in floating point (conjugation and negation do not round).
    pub fn conjugate(&self, kind: Conjugation) -> Self {
        match kind {
            Conjugation::Dag1 => Self {
                z: self.z.conj(),
                w: self.w.conj(),
                z1: self.z2.conj(),
                z2: self.z1.conj(),
            },
            Conjugation::Dag2 => Self {
                z: self.z,
                w: -self.w,
                z1: self.z2,
                z2: self.z1,
            },
            Conjugation::Dag3 => Self {
                z: self.z.conj(),
                w: -self.w.conj(),
                z1: self.z1.conj(),
                z2: self.z2.conj(),
            },
        }
    }

    /// Shorthand for the `†3` conjugate, the involution used by every inner
    /// product and adjoint in this library.
    pub fn conj3(&self) -> Self {
        self.conjugate(Conjugation::Dag3)
    }

    /// The squared modulus attached to each conjugation: `Z · Z^{†ₖ}`.
    ///
    /// Only the `K` kind is hyperbolic in general; the `I` kind lands in
    /// `ℂ(i)` (zero `w` part holds `z² + w²`), the `J` kind is a general
    /// bicomplex value. Hence the result stays bicomplex for all kinds.
    pub fn modulus_sq(&self, kind: Modulus) -> Self {
        let conj = match kind {
            Modulus::J => Conjugation::Dag1,
            Modulus::I => Conjugation::Dag2,
            Modulus::K => Conjugation::Dag3,
        };
        *self * self.conjugate(conj)
    }

    /// The hyperbolic norm `|Z|_k = e1|z1| + e2|z2|`, always in the
    /// non-negative cone; its square is `modulus_sq(K)` and it is
    /// multiplicative.
    pub fn hyperbolic_norm(&self) -> Hyperbolic<T> {
        Hyperbolic::new(self.z1.norm(), self.z2.norm())
    }

    /// The Euclidean norm `√(|z|² + |w|²)`.
    pub fn euclidean_norm(&self) -> T {
        (self.z.norm_sqr() + self.w.norm_sqr()).sqrt()
    }

    /// Classifies via the idempotent components: a component counts as zero
    /// when its magnitude is at most `rel_tol() · (1 + |Z|)`.
    pub fn classify(&self) -> NumberClass {
        let tol = T::rel_tol() * (T::one() + self.euclidean_norm());
        let c1 = self.z1.norm() <= tol;
        let c2 = self.z2.norm() <= tol;
        match (c1, c2) {
            (true, true) => NumberClass::Zero,
            (false, false) => NumberClass::Invertible,
            _ => NumberClass::ZeroDivisor,
        }
    }

    /// Classifies via the cartesian test: `Z` is a zero divisor iff `Z ≠ 0`
    /// and `z² + w² = 0`. Must agree with [`Self::classify`]; the agreement
    /// of the two routes is a verified property.
    pub fn classify_cartesian(&self) -> NumberClass {
        let euclid = self.euclidean_norm();
        let tol = T::rel_tol() * (T::one() + euclid);
        if euclid <= tol {
            return NumberClass::Zero;
        }
        let s = (self.z * self.z + self.w * self.w).norm();
        if s <= T::lit(2.0) * tol * euclid {
            NumberClass::ZeroDivisor
        } else {
            NumberClass::Invertible
        }
    }

    pub fn is_zero(&self) -> bool {
        self.classify() == NumberClass::Zero
    }

    pub fn is_invertible(&self) -> bool {
        self.classify() == NumberClass::Invertible
    }

    /// The multiplicative inverse, computed componentwise as `(1/z1, 1/z2)`
    /// (equal to `Z^{†2}/|Z|²_i`).
    pub fn inverse(&self) -> Result<Self> {
        match self.classify() {
            NumberClass::Zero => Err(Error::Zero),
            NumberClass::ZeroDivisor => Err(Error::ZeroDivisor),
            NumberClass::Invertible => {
                Ok(Self::from_idempotent(self.z1.inv(), self.z2.inv()))
            }
        }
    }

    /// The inner product `<Z, W> = Z · W^{†3}`; componentwise
    /// `(z1·conj(w1), z2·conj(w2))`.
    pub fn inner(&self, other: &Self) -> Self {
        *self * other.conj3()
    }

    /// Membership in the bicomplex unit disc: `|z1| < 1` and `|z2| < 1`,
    /// strictly, componentwise.
    pub fn in_unit_disc(&self) -> bool {
        self.z1.norm_sqr() < T::one() && self.z2.norm_sqr() < T::one()
    }

    /// Integer power, componentwise by repeated squaring.
    pub fn powu(&self, n: u32) -> Self {
        Self::from_idempotent(self.z1.powu(n), self.z2.powu(n))
    }

    /// Multiplication by a complex scalar (acts on both coordinates alike).
    pub fn scale(&self, c: Complex<T>) -> Self {
        Self {
            z: self.z * c,
            w: self.w * c,
            z1: self.z1 * c,
            z2: self.z2 * c,
        }
    }

    /// Multiplication by a real scalar.
    pub fn scale_real(&self, t: T) -> Self {
        Self {
            z: self.z.scale(t),
            w: self.w.scale(t),
            z1: self.z1.scale(t),
            z2: self.z2.scale(t),
        }
    }

    /// The Euclidean distance `|self − other|`.
    pub fn distance(&self, other: &Self) -> T {
        (*self - *other).euclidean_norm()
    }

    /// Extracts the hyperbolic value when both idempotent components are
    /// (numerically) real; `None` otherwise.
    pub fn to_hyperbolic(&self) -> Option<Hyperbolic<T>> {
        let tol = T::rel_tol() * (T::one() + self.euclidean_norm());
        if self.z1.im.abs() <= tol && self.z2.im.abs() <= tol {
            Some(Hyperbolic::new(self.z1.re, self.z2.re))
        } else {
            None
        }
    }
}

/// Multiplication by the imaginary unit `i`, exact (swap and negate).
fn mul_i<T: Scalar>(c: Complex<T>) -> Complex<T> {
    Complex::new(-c.im, c.re)
}

impl<T: Scalar> Add for Bicomplex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            z: self.z + rhs.z,
            w: self.w + rhs.w,
            z1: self.z1 + rhs.z1,
            z2: self.z2 + rhs.z2,
        }
    }
}

impl<T: Scalar> Sub for Bicomplex<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            z: self.z - rhs.z,
            w: self.w - rhs.w,
            z1: self.z1 - rhs.z1,
            z2: self.z2 - rhs.z2,
        }
    }
}

impl<T: Scalar> Neg for Bicomplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            z: -self.z,
            w: -self.w,
            z1: -self.z1,
            z2: -self.z2,
        }
    }
}

impl<T: Scalar> Mul for Bicomplex<T> {
    type Output = Self;
    /// `(z + jw)(u + jv) = (zu − wv) + j(wu + zv)`; the idempotent pair is
    /// the componentwise product. Each form is computed by its own rule.
    fn mul(self, rhs: Self) -> Self {
        Self {
            z: self.z * rhs.z - self.w * rhs.w,
            w: self.w * rhs.z + self.z * rhs.w,
            z1: self.z1 * rhs.z1,
            z2: self.z2 * rhs.z2,
        }
    }
}

impl<T: Scalar> PartialEq for Bicomplex<T> {
    fn eq(&self, other: &Self) -> bool {
        self.z == other.z && self.w == other.w
    }
}

// Wire format: {"cartesian":{"z":[re,im],"w":[re,im]}} emitted;
// {"idempotent":{"z1":[re,im],"z2":[re,im]}} accepted as well.
#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum BicomplexRepr<T> {
    Cartesian { z: [T; 2], w: [T; 2] },
    Idempotent { z1: [T; 2], z2: [T; 2] },
}

impl<T: Scalar + Serialize> Serialize for Bicomplex<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BicomplexRepr::Cartesian {
            z: [self.z.re, self.z.im],
            w: [self.w.re, self.w.im],
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for Bicomplex<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = BicomplexRepr::<T>::deserialize(deserializer)?;
        let finite = |c: &[T; 2]| c[0].is_finite() && c[1].is_finite();
        match repr {
            BicomplexRepr::Cartesian { z, w } => {
                if !(finite(&z) && finite(&w)) {
                    return Err(D::Error::custom("bicomplex components must be finite"));
                }
                Ok(Self::new(Complex::new(z[0], z[1]), Complex::new(w[0], w[1])))
            }
            BicomplexRepr::Idempotent { z1, z2 } => {
                if !(finite(&z1) && finite(&z2)) {
                    return Err(D::Error::custom("bicomplex components must be finite"));
                }
                Ok(Self::from_idempotent(
                    Complex::new(z1[0], z1[1]),
                    Complex::new(z2[0], z2[1]),
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Bc = Bicomplex<f64>;
    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn idempotent_basis() {
        let e1 = Bc::e1();
        let e2 = Bc::e2();
        // e1 = (1 + ij)/2: cartesian z = 1/2, w = i/2.
        assert_eq!(e1.z(), c(0.5, 0.0));
        assert_eq!(e1.w(), c(0.0, 0.5));
        assert_eq!(e2.z(), c(0.5, 0.0));
        assert_eq!(e2.w(), c(0.0, -0.5));
        // e1 + e2 = 1, e1·e2 = 0, e1² = e1.
        assert_eq!(e1 + e2, Bc::one());
        assert!((e1 * e2).euclidean_norm() < 1e-15);
        assert!((e1 * e1).distance(&e1) < 1e-15);
        // k = ij has idempotent pair (1, −1).
        let k = Bc::unit_k();
        assert_eq!(k.z1(), c(1.0, 0.0));
        assert_eq!(k.z2(), c(-1.0, 0.0));
    }

    #[test]
    fn addition_examples() {
        let a = Bc::new(c(1.0, 0.0), c(0.0, 0.0));
        let b = Bc::new(c(0.0, 0.0), c(1.0, 0.0));
        let s = a + b;
        assert_eq!(s.z(), c(1.0, 0.0));
        assert_eq!(s.w(), c(1.0, 0.0));
        let x = Bc::new(c(2.0, 3.0), c(1.0, -1.0));
        let y = Bc::new(c(-2.0, -3.0), c(-1.0, 1.0));
        assert!((x + y).is_zero());
    }

    #[test]
    fn multiplicative_identity() {
        let x = Bc::new(c(2.0, 3.0), c(1.0, -1.0));
        assert!((x * Bc::one()).distance(&x) < 1e-15);
    }

    #[test]
    fn conjugations_frozen_examples() {
        // dag3 of e1 is e1 again: in idempotent form conjugation fixes (1, 0).
        // Oracle: apply i → −i, j → −j to (1 + ij)/2 directly, which leaves
        // the product ij invariant.
        let e1 = Bc::e1();
        assert!(e1.conj3().distance(&e1) < 1e-15);

        // dag2 with no j-part is the identity.
        let a = Bc::from_complex(c(1.25, -2.0));
        assert_eq!(a.conjugate(Conjugation::Dag2), a);

        // dag1 bars both components.
        let b = Bc::new(c(0.0, 1.0), c(0.0, 1.0));
        let b1 = b.conjugate(Conjugation::Dag1);
        assert_eq!(b1.z(), c(0.0, -1.0));
        assert_eq!(b1.w(), c(0.0, -1.0));
    }

    #[test]
    fn conjugation_idempotent_action() {
        // dag1 swaps and conjugates, dag2 swaps, dag3 conjugates in place.
        let x = Bc::from_idempotent(c(1.0, 2.0), c(-3.0, 4.0));
        assert_eq!(x.conjugate(Conjugation::Dag1).idempotent(), (c(-3.0, -4.0), c(1.0, -2.0)));
        assert_eq!(x.conjugate(Conjugation::Dag2).idempotent(), (c(-3.0, 4.0), c(1.0, 2.0)));
        assert_eq!(x.conjugate(Conjugation::Dag3).idempotent(), (c(1.0, -2.0), c(-3.0, -4.0)));
    }

    #[test]
    fn modulus_examples() {
        // (z, w) = (1, i): z² + w² = 0, the zero-divisor witness.
        let zd = Bc::new(c(1.0, 0.0), c(0.0, 1.0));
        assert!(zd.modulus_sq(Modulus::I).euclidean_norm() < 1e-15);
        assert_eq!(zd.classify(), NumberClass::ZeroDivisor);

        // Z = e1(3 + 4i): |Z|²_k = (25, 0). Oracle: direct Z·Z^{†3}.
        let z = Bc::e1().scale(c(3.0, 4.0));
        let m = z.modulus_sq(Modulus::K);
        let direct = z * z.conj3();
        assert!(m.distance(&direct) < 1e-12);
        assert!((m.z1() - c(25.0, 0.0)).norm() < 1e-12);
        assert!(m.z2().norm() < 1e-12);

        assert!(Bc::zero().modulus_sq(Modulus::J).euclidean_norm() < 1e-15);
    }

    #[test]
    fn modulus_i_has_zero_jpart() {
        let z = Bc::new(c(1.5, -0.5), c(0.25, 2.0));
        let m = z.modulus_sq(Modulus::I);
        // value z² + w² ∈ ℂ(i)
        assert!(m.w().norm() < 1e-12);
        assert!((m.z() - (z.z() * z.z() + z.w() * z.w())).norm() < 1e-12);
    }

    #[test]
    fn hyperbolic_norm_frozen_examples() {
        // Z = e1(3+4i) + e2·1 → (5, 1). Oracle: sqrt of Z·Z^{†3} componentwise.
        let z = Bc::from_idempotent(c(3.0, 4.0), c(1.0, 0.0));
        let h = z.hyperbolic_norm();
        let sq = z.modulus_sq(Modulus::K);
        assert!((h.comp1() - 5.0).abs() < 1e-12);
        assert!((h.comp2() - 1.0).abs() < 1e-12);
        assert!((h.comp1() * h.comp1() - sq.z1().re).abs() < 1e-12);
        assert!((h.comp2() * h.comp2() - sq.z2().re).abs() < 1e-12);

        assert_eq!(Bc::one().hyperbolic_norm(), Hyperbolic::new(1.0, 1.0));

        // A zero divisor has a non-invertible norm: one component zero.
        let zd = Bc::e1().scale(c(0.0, 2.0));
        assert_eq!(zd.hyperbolic_norm(), Hyperbolic::new(2.0, 0.0));
    }

    #[test]
    fn euclidean_norm_frozen_examples() {
        assert!((Bc::unit_j().euclidean_norm() - 1.0).abs() < 1e-15);
        // |e1| = 1/√2 since z = 1/2, w = i/2.
        assert!((Bc::e1().euclidean_norm() - 0.5_f64.sqrt()).abs() < 1e-15);
        assert_eq!(Bc::zero().euclidean_norm(), 0.0);
        // Cross-route: √((|z1|² + |z2|²)/2).
        let z = Bc::new(c(1.0, -2.0), c(0.5, 3.0));
        let via_idem = ((z.z1().norm_sqr() + z.z2().norm_sqr()) / 2.0).sqrt();
        assert!((z.euclidean_norm() - via_idem).abs() < 1e-12);
    }

    #[test]
    fn inverse_frozen_examples() {
        // Z = e1·2 + e2·4 → e1/2 + e2/4; oracle Z^{†2}/|Z|²_i.
        let z = Bc::from_idempotent(c(2.0, 0.0), c(4.0, 0.0));
        let inv = z.inverse().unwrap();
        assert!((inv.z1() - c(0.5, 0.0)).norm() < 1e-15);
        assert!((inv.z2() - c(0.25, 0.0)).norm() < 1e-15);
        let dag2 = z.conjugate(Conjugation::Dag2);
        let msq_i = z.modulus_sq(Modulus::I).z(); // lives in ℂ(i)
        let oracle = dag2.scale(msq_i.inv());
        assert!(inv.distance(&oracle) < 1e-14);
        assert!((z * inv).distance(&Bc::one()) < 1e-14);

        assert!((Bc::one().inverse().unwrap()).distance(&Bc::one()) < 1e-15);
        assert_eq!(Bc::e1().inverse(), Err(Error::ZeroDivisor));
        assert_eq!(Bc::zero().inverse(), Err(Error::Zero));
    }

    #[test]
    fn inner_frozen_examples() {
        let one = Bc::one();
        assert!(one.inner(&one).distance(&one) < 1e-15);
        // <e1, e2> = e1·e2^{†3} = e1·e2 = 0.
        assert!(Bc::e1().inner(&Bc::e2()).euclidean_norm() < 1e-15);
        // <Z, Z> = |Z|²_k for Z = e1(3+4i).
        let z = Bc::e1().scale(c(3.0, 4.0));
        let ip = z.inner(&z);
        let h = z.hyperbolic_norm();
        assert!((ip.z1() - c(h.comp1() * h.comp1(), 0.0)).norm() < 1e-12);
        assert!(ip.z2().norm() < 1e-12);
    }

    #[test]
    fn unit_disc_membership() {
        assert!(Bc::zero().in_unit_disc());
        let out = Bc::from_idempotent(c(0.5, 0.0), c(0.0, 1.5));
        assert!(!out.in_unit_disc());
        let inside = Bc::from_idempotent(c(0.9, 0.0), c(0.0, 0.9));
        assert!(inside.in_unit_disc());
    }

    #[test]
    fn classification_zoo_agrees() {
        let zoo = [
            (Bc::zero(), NumberClass::Zero),
            (Bc::one(), NumberClass::Invertible),
            (Bc::e1(), NumberClass::ZeroDivisor),
            (Bc::e2().scale(c(-0.3, 7.0)), NumberClass::ZeroDivisor),
            (Bc::new(c(1.0, 0.0), c(0.0, 1.0)), NumberClass::ZeroDivisor),
            (Bc::new(c(2.0, 3.0), c(1.0, -1.0)), NumberClass::Invertible),
            (Bc::unit_j(), NumberClass::Invertible),
        ];
        for (z, expected) in zoo {
            assert_eq!(z.classify(), expected, "idempotent route on {z:?}");
            assert_eq!(z.classify_cartesian(), expected, "cartesian route on {z:?}");
        }
    }

    #[test]
    fn json_roundtrip_both_forms() {
        let z = Bc::new(c(2.0, 3.0), c(1.0, -1.0));
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(s, r#"{"cartesian":{"z":[2.0,3.0],"w":[1.0,-1.0]}}"#);
        let back: Bc = serde_json::from_str(&s).unwrap();
        assert!(z.distance(&back) < 1e-15);
        let idem: Bc =
            serde_json::from_str(r#"{"idempotent":{"z1":[1.0,2.0],"z2":[3.0,4.0]}}"#).unwrap();
        assert!((idem.z1() - c(1.0, 2.0)).norm() < 1e-15);
        assert!((idem.z2() - c(3.0, 4.0)).norm() < 1e-15);
    }

    #[test]
    fn non_finite_rejected() {
        let r: std::result::Result<Bc, _> =
            serde_json::from_str(r#"{"cartesian":{"z":[1e999,0.0],"w":[0.0,0.0]}}"#);
        assert!(r.is_err());
    }
}
