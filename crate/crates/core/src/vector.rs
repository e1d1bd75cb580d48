//! Dense coordinate vectors over a generic scalar.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::num::Scalar;
use crate::Rat;

/// A point or covector of `R^n` with exact coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector<T>(pub Vec<T>);

impl<T: Scalar> Vector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        assert!(!coords.is_empty(), "vector must have dimension >= 1");
        Vector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![T::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Self) -> T {
        assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Vector(self.0.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// 2D cross product `self.x * other.y - self.y * other.x`.
    pub fn cross2(&self, other: &Self) -> T {
        assert_eq!(self.dim(), 2);
        assert_eq!(other.dim(), 2);
        self.0[0].clone() * other.0[1].clone() - self.0[1].clone() * other.0[0].clone()
    }

    /// 3D cross product.
    pub fn cross3(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), 3);
        assert_eq!(other.dim(), 3);
        let (a, b) = (&self.0, &other.0);
        Vector(vec![
            a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
            a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
            a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
        ])
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T: Scalar> Add for &Vector<T> {
    type Output = Vector<T>;
    fn add(self, other: &Vector<T>) -> Vector<T> {
        assert_eq!(self.dim(), other.dim());
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &Vector<T> {
    type Output = Vector<T>;
    fn sub(self, other: &Vector<T>) -> Vector<T> {
        assert_eq!(self.dim(), other.dim());
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar + Neg<Output = T>> Neg for &Vector<T> {
    type Output = Vector<T>;
    fn neg(self) -> Vector<T> {
        Vector(self.0.iter().map(|x| -x.clone()).collect())
    }
}

impl<T: Scalar> Mul<&Vector<T>> for &Vector<T> {
    type Output = T;
    fn mul(self, other: &Vector<T>) -> T {
        self.dot(other)
    }
}

impl<T: fmt::Debug> fmt::Debug for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", c)?;
        }
        write!(f, ")")
    }
}

/// Exact rational vector, the workhorse of the toolkit.
pub type QVec = Vector<Rat>;

/// Builds a rational vector from integer coordinates.
pub fn qvec(coords: &[i64]) -> QVec {
    Vector::new(coords.iter().map(|&c| Rat::from_integer(c.into())).collect())
}

/// Builds a rational vector from (numerator, denominator) pairs.
pub fn qvec_frac(coords: &[(i64, i64)]) -> QVec {
    Vector::new(
        coords
            .iter()
            .map(|&(p, q)| Rat::new(p.into(), q.into()))
            .collect(),
    )
}
