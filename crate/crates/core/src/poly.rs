//! Multivariate polynomials over a generic scalar, with the exact
//! interpolation used by the polynomiality checks.

use std::collections::BTreeMap;


use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::num::{scalar_from_usize, Scalar};
use crate::Rat;

/// Sparse multivariate polynomial: exponent vector -> coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly<T> {
    vars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MultiPoly<T> {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: T) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, T::one())
    }

    /// The monomial `x_i`.
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars);
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, T::one());
        p
    }

    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars);
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), T::zero() - c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn eval(&self, x: &[T]) -> T {
        assert_eq!(x.len(), self.vars);
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (xi, &ei) in x.iter().zip(e) {
                for _ in 0..ei {
                    m = m * xi.clone();
                }
            }
            acc = acc + m;
        }
        acc
    }

    /// Antiderivative with respect to variable `i`.
    pub fn antiderivative(&self, i: usize) -> Self {
        assert!(i < self.vars);
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[i] += 1;
            let d: T = scalar_from_usize(e2[i] as usize);
            out.add_term(e2, c.clone() / d);
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        assert!(i < self.vars);
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            let d: T = scalar_from_usize(e[i] as usize);
            out.add_term(e2, c.clone() * d);
        }
        out
    }

    /// Restriction to the affine path `x(t) = p0 + t (p1 - p0)`, as a
    /// univariate polynomial in `t`.
    pub fn restrict_to_segment(&self, p0: &[T], p1: &[T]) -> Vec<T> {
        assert_eq!(p0.len(), self.vars);
        assert_eq!(p1.len(), self.vars);
        let mut acc: Vec<T> = vec![T::zero()];
        for (e, c) in &self.terms {
            let mut m: Vec<T> = vec![c.clone()];
            for i in 0..self.vars {
                let lin = vec![p0[i].clone(), p1[i].clone() - p0[i].clone()];
                for _ in 0..e[i] {
                    m = uni_mul(&m, &lin);
                }
            }
            acc = uni_add(&acc, &m);
        }
        acc
    }
}

pub fn uni_add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(T::zero);
            let y = b.get(i).cloned().unwrap_or_else(T::zero);
            x + y
        })
        .collect()
}

pub fn uni_mul<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// Exact integral of a univariate polynomial over `[0, 1]`.
pub fn uni_integral_01<T: Scalar>(coeffs: &[T]) -> T {
    coeffs.iter().enumerate().fold(T::zero(), |acc, (e, c)| {
        let d: T = scalar_from_usize(e + 1);
        acc + c.clone() / d
    })
}

/// All exponent vectors in `vars` variables of total degree <= `max_degree`.
pub fn monomials_up_to(vars: usize, max_degree: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..vars {
        let mut next = Vec::new();
        for stub in &out {
            let used: u32 = stub.iter().sum();
            for e in 0..=(max_degree - used) {
                let mut s = stub.clone();
                s.push(e);
                next.push(s);
            }
        }
        out = next;
    }
    out.retain(|e| e.iter().sum::<u32>() <= max_degree);
    out
}

/// Exact interpolation over the given monomial support.
///
/// Solves the full (generally overdetermined) linear system; an error means
/// no polynomial with that support passes through every sample.
pub fn fit_with_monomials(
    monomials: &[Vec<u32>],
    samples: &[(Vec<Rat>, Rat)],
) -> Result<MultiPoly<Rat>> {
    if samples.is_empty() {
        return Err(Error::EmptyInput);
    }
    let vars = samples[0].0.len();
    let rows: Vec<Vec<Rat>> = samples
        .iter()
        .map(|(x, _)| {
            monomials
                .iter()
                .map(|e| {
                    let mut m = Rat::from_integer(1.into());
                    for (xi, &ei) in x.iter().zip(e) {
                        for _ in 0..ei {
                            m *= xi.clone();
                        }
                    }
                    m
                })
                .collect()
        })
        .collect();
    let rhs: Vec<Rat> = samples.iter().map(|(_, v)| v.clone()).collect();
    let coeffs = solve(&rows, &rhs).ok_or(Error::InconsistentSamples)?;
    Ok(MultiPoly::from_terms(
        vars,
        monomials.iter().cloned().zip(coeffs),
    ))
}

/// Exact interpolating polynomial of total degree <= `max_degree`, verified
/// against every sample.
pub fn fit_polynomial(samples: &[(Vec<Rat>, Rat)], max_degree: u32) -> Result<MultiPoly<Rat>> {
    if samples.is_empty() {
        return Err(Error::EmptyInput);
    }
    let vars = samples[0].0.len();
    fit_with_monomials(&monomials_up_to(vars, max_degree), samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::scalar_from_i64;

    fn q(n: i64) -> Rat {
        scalar_from_i64(n)
    }

    fn grid_samples(f: impl Fn(i64) -> i64, range: std::ops::RangeInclusive<i64>) -> Vec<(Vec<Rat>, Rat)> {
        range.map(|n| (vec![q(n)], q(f(n)))).collect()
    }

    #[test]
    fn fit_square_numbers() {
        let p = fit_polynomial(&grid_samples(|n| (n + 1) * (n + 1), 0..=4), 2).unwrap();
        // n^2 + 2n + 1
        assert_eq!(p.eval(&[q(10)]), q(121));
        assert_eq!(p.eval(&[q(-2)]), q(1));
        assert_eq!(p.total_degree(), 2);
    }

    #[test]
    fn fit_constant() {
        let p = fit_polynomial(&grid_samples(|_| 5, 0..=3), 2).unwrap();
        assert_eq!(p.total_degree(), 0);
        assert_eq!(p.eval(&[q(99)]), q(5));
    }

    #[test]
    fn exponentials_are_not_polynomials() {
        let r = fit_polynomial(&grid_samples(|n| 1 << n, 0..=5), 4);
        assert_eq!(r, Err(Error::InconsistentSamples));
    }

    #[test]
    fn segment_restriction_and_integral() {
        // P = x^2 y over the path (0,0) -> (1, 2): P(t) = t^2 * 2t = 2 t^3
        let x = MultiPoly::<Rat>::var(2, 0);
        let y = MultiPoly::<Rat>::var(2, 1);
        let p = x.mul(&x).mul(&y);
        let u = p.restrict_to_segment(&[q(0), q(0)], &[q(1), q(2)]);
        assert_eq!(u, vec![q(0), q(0), q(0), q(2)]);
        assert_eq!(uni_integral_01(&u), Rat::new(1.into(), 2.into()));
    }

    #[test]
    fn antiderivative_inverts_derivative() {
        let x = MultiPoly::<Rat>::var(2, 0);
        let y = MultiPoly::<Rat>::var(2, 1);
        let p = x.mul(&y).add(&x.mul(&x).mul(&x)).add(&MultiPoly::constant(2, q(7)));
        assert_eq!(p.antiderivative(0).derivative(0), p);
    }

    #[test]
    fn monomial_count_matches_binomial() {
        // C(2 + 3, 3) = 10 monomials of degree <= 3 in 2 vars
        assert_eq!(monomials_up_to(2, 3).len(), 10);
    }
}
