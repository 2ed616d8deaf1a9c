//! Coefficient scalars.
//!
//! Every algebraic routine in the crate (polynomials, Laurent series, curve
//! arithmetic) is generic over [`Scalar`], a commutative field with exact
//! equality. The exact implementations are [`Rational`] and
//! [`AlgebraicNumber`](crate::exactnum::AlgebraicNumber); `f64` is provided
//! for quick numerical sanity checks and carries no exactness guarantees.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::Rational;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    /// Product without consuming either operand.
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out *= rhs;
        out
    }

    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self>;

    fn scale(&self, r: &Rational) -> Self {
        self.mul_ref(&Self::from_rational(r))
    }

    /// The value as a rational number when it is one.
    fn as_rational(&self) -> Option<Rational>;

    /// Whether the two values live in a common field.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        use num_traits::ToPrimitive;
        r.to_f64().unwrap_or(f64::NAN)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn try_inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        Rational::from_float(*self)
    }
}
