//! Scalar abstraction for the generic kernels.
//!
//! The exact geometry runs over [`crate::Rat`]; the polynomial and linear
//! algebra kernels are generic so the numeric demonstrators (f64, Complex64)
//! can reuse them.

use std::fmt::Debug;

use num_traits::{Num, Signed};

/// A commutative ring/field scalar the generic kernels can compute with.
pub trait Scalar: Num + Clone + Debug {}

impl<T> Scalar for T where T: Num + Clone + Debug {}

/// An ordered field scalar, enough for exact convexity predicates.
pub trait OrderedScalar: Scalar + Signed + PartialOrd {}

impl<T> OrderedScalar for T where T: Scalar + Signed + PartialOrd {}

/// Builds a scalar from a small nonnegative integer by repeated addition.
pub fn scalar_from_usize<T: Scalar>(n: usize) -> T {
    let mut acc = T::zero();
    for _ in 0..n {
        acc = acc + T::one();
    }
    acc
}

/// Builds a scalar from a signed integer.
pub fn scalar_from_i64<T: Scalar + Signed>(n: i64) -> T {
    let mag = scalar_from_usize::<T>(n.unsigned_abs() as usize);
    if n < 0 {
        -mag
    } else {
        mag
    }
}
