//! Hyperbolic numbers `x + ky` (`k² = 1`) in idempotent coordinates, the
//! non-negative cone, and the partial order `≤'` they induce.
//!
//! A hyperbolic number is stored as the pair `(a1, a2)` of real idempotent
//! components, so that `α = e1·a1 + e2·a2`; the cartesian coordinates are
//! `x = (a1 + a2)/2`, `y = (a1 − a2)/2`. All arithmetic is componentwise,
//! which is exactly what makes these useful as norm values.

use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Outcome of comparing two hyperbolic numbers under the partial order `≤'`
/// (`α ≤' β` iff `β − α` lies in the non-negative cone).
///
/// `Equal` subsumes both `≤'` and `≥'`; `Incomparable` means the component
/// differences have strictly opposite signs, so neither direction holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderRelation {
    LessEq,
    GreaterEq,
    Equal,
    Incomparable,
}

impl OrderRelation {
    /// True for `LessEq` and `Equal`.
    pub fn is_le(self) -> bool {
        matches!(self, OrderRelation::LessEq | OrderRelation::Equal)
    }

    /// True for `GreaterEq` and `Equal`.
    pub fn is_ge(self) -> bool {
        matches!(self, OrderRelation::GreaterEq | OrderRelation::Equal)
    }
}

/// Hyperbolic number in idempotent coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyperbolic<T> {
    a1: T,
    a2: T,
}

impl<T: Scalar> Hyperbolic<T> {
    /// Builds `e1·a1 + e2·a2`. Components must be finite.
    pub fn new(a1: T, a2: T) -> Self {
        assert!(
            a1.is_finite() && a2.is_finite(),
            "hyperbolic components must be finite"
        );
        Self { a1, a2 }
    }

    /// Builds from cartesian coordinates `x + ky`.
    pub fn from_cartesian(x: T, y: T) -> Self {
        Self::new(x + y, x - y)
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::one())
    }

    /// Embeds a real number on the diagonal.
    pub fn from_real(x: T) -> Self {
        Self::new(x, x)
    }

    pub fn comp1(&self) -> T {
        self.a1
    }

    pub fn comp2(&self) -> T {
        self.a2
    }

    /// Idempotent components as a pair.
    pub fn components(&self) -> (T, T) {
        (self.a1, self.a2)
    }

    /// Cartesian coordinate `x = (a1 + a2)/2`.
    pub fn x(&self) -> T {
        (self.a1 + self.a2) / T::lit(2.0)
    }

    /// Cartesian coordinate `y = (a1 − a2)/2`.
    pub fn y(&self) -> T {
        (self.a1 - self.a2) / T::lit(2.0)
    }

    /// Membership in the non-negative cone (both components `≥ 0`).
    pub fn is_nonneg(&self) -> bool {
        self.a1 >= T::zero() && self.a2 >= T::zero()
    }

    /// Componentwise maximum.
    pub fn max(&self, other: &Self) -> Self {
        Self::new(self.a1.max(other.a1), self.a2.max(other.a2))
    }

    /// Componentwise minimum.
    pub fn min(&self, other: &Self) -> Self {
        Self::new(self.a1.min(other.a1), self.a2.min(other.a2))
    }

    /// Componentwise absolute value.
    pub fn abs(&self) -> Self {
        Self::new(self.a1.abs(), self.a2.abs())
    }

    /// Largest component, as a scalar summary of the size.
    pub fn max_component(&self) -> T {
        self.a1.max(self.a2)
    }

    /// Componentwise square root. Requires membership in the non-negative cone.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.is_nonneg() {
            return Err(Error::Domain(format!(
                "sqrt of hyperbolic number outside the non-negative cone: ({}, {})",
                self.a1, self.a2
            )));
        }
        Ok(Self::new(self.a1.sqrt(), self.a2.sqrt()))
    }

    /// The real-valued magnitude `√((a1² + a2²)/2)`, i.e. the Euclidean norm
    /// of the hyperbolic number viewed inside the bicomplex plane.
    pub fn magnitude(&self) -> T {
        ((self.a1 * self.a1 + self.a2 * self.a2) / T::lit(2.0)).sqrt()
    }

    /// Compares under the partial order `≤'`.
    ///
    /// Components within `rel_tol() · (1 + scale)` of each other count as
    /// equal, so that `Incomparable` never absorbs near-equal values; beyond
    /// that tolerance the comparison is exact per component.
    pub fn compare(&self, other: &Self) -> OrderRelation {
        let near = |a: T, b: T| {
            let scale = T::one() + a.abs().max(b.abs());
            (b - a).abs() <= T::rel_tol() * scale
        };
        let eq1 = near(self.a1, other.a1);
        let eq2 = near(self.a2, other.a2);
        let le1 = self.a1 <= other.a1 || eq1;
        let le2 = self.a2 <= other.a2 || eq2;
        let ge1 = self.a1 >= other.a1 || eq1;
        let ge2 = self.a2 >= other.a2 || eq2;
        match (le1 && le2, ge1 && ge2) {
            (true, true) => OrderRelation::Equal,
            (true, false) => OrderRelation::LessEq,
            (false, true) => OrderRelation::GreaterEq,
            (false, false) => OrderRelation::Incomparable,
        }
    }

    /// True when `self ≤' other` (including equality).
    pub fn le(&self, other: &Self) -> bool {
        self.compare(other).is_le()
    }
}

impl<T: Scalar> Add for Hyperbolic<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a1 + rhs.a1, self.a2 + rhs.a2)
    }
}

impl<T: Scalar> Sub for Hyperbolic<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a1 - rhs.a1, self.a2 - rhs.a2)
    }
}

impl<T: Scalar> Mul for Hyperbolic<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.a1 * rhs.a1, self.a2 * rhs.a2)
    }
}

impl<T: Scalar> Div for Hyperbolic<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        Self::new(self.a1 / rhs.a1, self.a2 / rhs.a2)
    }
}

impl<T: Scalar> Neg for Hyperbolic<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a1, -self.a2)
    }
}

impl<T: Scalar> Mul<T> for Hyperbolic<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Self::new(self.a1 * rhs, self.a2 * rhs)
    }
}

// Wire format: {"idempotent":[a1,a2]}.
#[derive(Serialize, Deserialize)]
struct HyperbolicRepr<T> {
    idempotent: [T; 2],
}

impl<T: Scalar + Serialize> Serialize for Hyperbolic<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        HyperbolicRepr {
            idempotent: [self.a1, self.a2],
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for Hyperbolic<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = HyperbolicRepr::<T>::deserialize(deserializer)?;
        let [a1, a2] = repr.idempotent;
        if !(a1.is_finite() && a2.is_finite()) {
            return Err(D::Error::custom("hyperbolic components must be finite"));
        }
        Ok(Self::new(a1, a2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type H = Hyperbolic<f64>;

    #[test]
    fn compare_examples() {
        assert_eq!(
            H::new(1.0, 1.0).compare(&H::new(2.0, 3.0)),
            OrderRelation::LessEq
        );
        assert_eq!(
            H::new(1.0, 3.0).compare(&H::new(2.0, 2.0)),
            OrderRelation::Incomparable
        );
        assert_eq!(
            H::new(2.0, 2.0).compare(&H::new(2.0, 2.0)),
            OrderRelation::Equal
        );
        assert_eq!(
            H::new(2.0, 3.0).compare(&H::new(1.0, 1.0)),
            OrderRelation::GreaterEq
        );
    }

    #[test]
    fn near_equal_is_equal_not_incomparable() {
        // Opposite-sign differences below tolerance must collapse to Equal.
        let a = H::new(1.0, 1.0);
        let b = H::new(1.0 + 1e-16, 1.0 - 1e-16);
        assert_eq!(a.compare(&b), OrderRelation::Equal);
    }

    #[test]
    fn mixed_tolerance_grades_to_lesseq() {
        let a = H::new(1.0, 1.0);
        let b = H::new(1.0 + 1e-16, 2.0);
        assert_eq!(a.compare(&b), OrderRelation::LessEq);
    }

    #[test]
    fn sqrt_componentwise() {
        assert_eq!(H::new(4.0, 9.0).sqrt().unwrap(), H::new(2.0, 3.0));
        assert_eq!(H::zero().sqrt().unwrap(), H::zero());
        let r = H::new(2.0, 2.0).sqrt().unwrap();
        assert!((r.comp1() - 2f64.sqrt()).abs() < 1e-15);
        assert!((r.comp2() - 2f64.sqrt()).abs() < 1e-15);
        assert!(matches!(
            H::new(-1.0, 4.0).sqrt(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cartesian_roundtrip() {
        let a = H::from_cartesian(1.5, -0.25);
        assert!((a.x() - 1.5).abs() < 1e-15);
        assert!((a.y() + 0.25).abs() < 1e-15);
        // k = e1 - e2 has cartesian coordinates (0, 1).
        let k = H::new(1.0, -1.0);
        assert_eq!(k.x(), 0.0);
        assert_eq!(k.y(), 1.0);
    }

    #[test]
    fn json_roundtrip() {
        let a = H::new(0.5, -3.0);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"idempotent":[0.5,-3.0]}"#);
        let back: H = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
