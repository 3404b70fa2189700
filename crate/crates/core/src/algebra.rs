//! Ring interfaces shared by coefficients and algebra models.

use std::fmt;

use crate::scalar::RationalFunction;

/// An associative unital ring, not necessarily commutative.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;

    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
}

/// A ring that is also an algebra over Q(q).
pub trait QAlgebra: Ring {
    fn from_scalar(c: RationalFunction) -> Self;
    fn scale(&self, c: &RationalFunction) -> Self;
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl QAlgebra for RationalFunction {
    fn from_scalar(c: RationalFunction) -> Self {
        c
    }
    fn scale(&self, c: &RationalFunction) -> Self {
        self * c
    }
}
