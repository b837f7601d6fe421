//! The minimal algebraic interface shared by every coefficient domain.
//!
//! Composition sums only need a commutative ring; determinant evaluation
//! additionally needs division, which [`Field`] provides.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{Integer, Rational};

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_integer(n: &Integer) -> Self;

    /// Canonical text form used in reports.
    fn render(&self) -> String;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }

    /// `self` multiplied by `(-1)^e`.
    fn signed(self, e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            self
        } else {
            -self
        }
    }
}

pub trait Field: Ring {
    fn try_div(&self, other: &Self) -> Result<Self>;

    fn from_rational(q: &Rational) -> Self;
}

impl Ring for Integer {
    fn from_integer(n: &Integer) -> Self {
        n.clone()
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Ring for Rational {
    fn from_integer(n: &Integer) -> Self {
        Rational::from_integer(n.clone())
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Field for Rational {
    fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / other)
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// Both sides of an equation, evaluated exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct Sides<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Sides<T> {
    pub fn new(lhs: T, rhs: T) -> Self {
        Sides { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Sum of `terms`, each multiplied out of ring elements.
pub fn sum<R: Ring>(terms: impl IntoIterator<Item = R>) -> R {
    terms.into_iter().fold(R::zero(), |acc, t| acc + t)
}
