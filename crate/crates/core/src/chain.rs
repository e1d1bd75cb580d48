//! The algebra of convex chains: rational linear combinations of
//! characteristic functions of closed convex polytopes, with the Minkowski
//! product `*`, inverses of characteristic functions, and exact equality
//! testing in the plane.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::refine::{sample_arrangement, Line, SampleSet};
use crate::vector::{QVec, Vector};
use crate::Rat;

/// A convex chain, normalized: no zero coefficients, terms keyed by their
/// canonical polytope.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chain {
    ambient: usize,
    terms: BTreeMap<Polytope, Rat>,
}

/// Outcome of a chain-equality test. In ambient dimension <= 2 the decision
/// is exact; in dimension 3 it is a sampled semi-decision and `exact` is
/// false.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EqVerdict {
    pub equal: bool,
    pub exact: bool,
}

impl Chain {
    pub fn zero(ambient: usize) -> Chain {
        Chain {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    /// Embeds a polytope as the chain `1 * chi_P`.
    pub fn of_polytope(p: &Polytope) -> Chain {
        let mut c = Chain::zero(p.ambient());
        c.add_term(Rat::one(), p.clone());
        c
    }

    /// The identity element: the characteristic function of the origin.
    pub fn one(ambient: usize) -> Chain {
        Chain::of_polytope(&Polytope::origin(ambient))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Polytope, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero_chain(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, coeff: Rat, p: Polytope) {
        assert_eq!(p.ambient(), self.ambient);
        if coeff.is_zero() {
            return;
        }
        let e = self.terms.entry(p);
        match e {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Result<Chain> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(c.clone(), p.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rat) -> Chain {
        let mut out = Chain::zero(self.ambient);
        for (p, c) in &self.terms {
            out.add_term(c.clone() * k.clone(), p.clone());
        }
        out
    }

    pub fn neg(&self) -> Chain {
        self.scale(&(-Rat::one()))
    }

    pub fn sub(&self, other: &Chain) -> Result<Chain> {
        self.add(&other.neg())
    }

    /// The Minkowski product `*`: bilinear extension of
    /// `chi_A * chi_B = chi_{A+B}`.
    pub fn product(&self, other: &Chain) -> Result<Chain> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let mut out = Chain::zero(self.ambient);
        for (pa, ca) in &self.terms {
            for (pb, cb) in &other.terms {
                out.add_term(ca.clone() * cb.clone(), pa.minkowski_sum(pb)?);
            }
        }
        Ok(out)
    }

    /// Pointwise value of the chain at `x`.
    pub fn evaluate(&self, x: &QVec) -> Rat {
        assert_eq!(x.dim(), self.ambient, "dimension mismatch in evaluate");
        let mut acc = Rat::zero();
        for (p, c) in &self.terms {
            if p.contains(x) {
                acc += c.clone();
            }
        }
        acc
    }

    /// Integral over the Euler characteristic: every closed convex polytope
    /// has Euler characteristic one, so this is the coefficient sum.
    pub fn euler_integral(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |a, c| a + c.clone())
    }

    /// Keeps only the full-dimensional terms.
    pub fn truncate_lower_dim(&self) -> Chain {
        let mut out = Chain::zero(self.ambient);
        for (p, c) in &self.terms {
            if p.dim() == self.ambient {
                out.add_term(c.clone(), p.clone());
            }
        }
        out
    }
}

/// The characteristic function of the relative interior of a polytope,
/// Euler-expanded over its closed faces:
/// `sum_F (-1)^{dim P - dim F} chi_F`.
pub fn open_polytope_chain(p: &Polytope) -> Result<Chain> {
    let mut c = Chain::zero(p.ambient());
    for f in p.faces()? {
        let sign = if (p.dim() - f.dim()) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        c.add_term(sign, f);
    }
    Ok(c)
}

/// The `*`-inverse of `chi_P`: `(-1)^{dim P}` times the open chain of `-P`.
pub fn inverse(p: &Polytope) -> Result<Chain> {
    let open = open_polytope_chain(&p.negate())?;
    let sign = if p.dim() % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    };
    Ok(open.scale(&sign))
}

/// A virtual polytope: a `*`-product of integer powers of characteristic
/// functions, together with its exponent record.
#[derive(Clone, Debug)]
pub struct VirtualPolytope {
    chain: Chain,
    record: Vec<(Polytope, i64)>,
}

impl VirtualPolytope {
    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn record(&self) -> &[(Polytope, i64)] {
        &self.record
    }

    /// `*`-product of two virtual polytopes.
    pub fn product(&self, other: &VirtualPolytope) -> Result<VirtualPolytope> {
        let mut record = self.record.clone();
        record.extend(other.record.iter().cloned());
        Ok(VirtualPolytope {
            chain: self.chain.product(&other.chain)?,
            record,
        })
    }
}

/// The integer power `chi_P^k` (`k = 0` gives the identity, negative `k`
/// powers of the inverse).
pub fn power(p: &Polytope, k: i64) -> Result<VirtualPolytope> {
    let base = if k >= 0 {
        Chain::of_polytope(p)
    } else {
        inverse(p)?
    };
    let mut chain = Chain::one(p.ambient());
    for _ in 0..k.unsigned_abs() {
        chain = chain.product(&base)?;
    }
    Ok(VirtualPolytope {
        chain,
        record: vec![(p.clone(), k)],
    })
}

/// Supporting lines, isolated points, and vertices of all polytopes of a
/// planar chain, feeding the arrangement sampler.
pub(crate) fn planar_geometry(chains: &[&Chain]) -> (Vec<Line>, Vec<QVec>) {
    let mut lines = Vec::new();
    let mut points = Vec::new();
    for chain in chains {
        for (p, _) in chain.terms() {
            match p.dim() {
                0 => points.push(p.vertices()[0].clone()),
                1 => {
                    lines.push(Line::through(&p.vertices()[0], &p.vertices()[1]));
                    points.extend(p.vertices().iter().cloned());
                }
                2 => {
                    let ring = p.ccw_boundary();
                    let n = ring.len();
                    for i in 0..n {
                        lines.push(Line::through(&ring[i], &ring[(i + 1) % n]));
                    }
                    points.extend(ring);
                }
                _ => unreachable!(),
            }
        }
    }
    (lines, points)
}

fn sample_set_for(chains: &[&Chain]) -> SampleSet {
    let (lines, points) = planar_geometry(chains);
    sample_arrangement(&lines, &points)
}

/// Decides whether two chains represent the same function on `R^n`.
///
/// Exact for ambient dimension <= 2 (full arrangement refinement); in
/// dimension 3 a deterministic sample grid gives a semi-decision with
/// `exact = false`.
pub fn chains_equal(f: &Chain, g: &Chain) -> Result<EqVerdict> {
    if f.ambient() != g.ambient() {
        return Err(Error::DimensionMismatch {
            expected: f.ambient(),
            got: g.ambient(),
        });
    }
    let h = f.sub(g)?;
    if h.is_zero_chain() {
        return Ok(EqVerdict {
            equal: true,
            exact: f.ambient() <= 2,
        });
    }
    match f.ambient() {
        1 => {
            let mut xs: Vec<Rat> = h
                .terms()
                .flat_map(|(p, _)| p.vertices().iter().map(|v| v[0].clone()))
                .collect();
            xs.sort();
            xs.dedup();
            let mut samples: Vec<Rat> = xs.clone();
            samples.push(xs[0].clone() - Rat::one());
            samples.push(xs[xs.len() - 1].clone() + Rat::one());
            let two = Rat::from_integer(2.into());
            for w in xs.windows(2) {
                samples.push((w[0].clone() + w[1].clone()) / two.clone());
            }
            let equal = samples
                .iter()
                .all(|x| h.evaluate(&Vector::new(vec![x.clone()])).is_zero());
            Ok(EqVerdict { equal, exact: true })
        }
        2 => {
            let samples = sample_set_for(&[&h]);
            let equal = samples.all().all(|x| h.evaluate(x).is_zero());
            Ok(EqVerdict { equal, exact: true })
        }
        3 => {
            let equal = sample_grid_3d(&h).iter().all(|x| h.evaluate(x).is_zero());
            Ok(EqVerdict {
                equal,
                exact: false,
            })
        }
        n => Err(Error::DimensionBound { max: 3, got: n }),
    }
}

/// Exact a.e.-equality of two planar chains: comparison on one interior
/// sample of every 2-cell of the joint refinement, ignoring all lower-
/// dimensional discrepancies.
pub fn chains_equal_full_dim(f: &Chain, g: &Chain) -> Result<bool> {
    if f.ambient() != 2 || g.ambient() != 2 {
        return Err(Error::DimensionBound {
            max: 2,
            got: f.ambient().max(g.ambient()),
        });
    }
    let h = f.sub(g)?;
    if h.is_zero_chain() {
        return Ok(true);
    }
    let samples = sample_set_for(&[&h]);
    Ok(samples.full_dim.iter().all(|x| h.evaluate(x).is_zero()))
}

fn sample_grid_3d(h: &Chain) -> Vec<QVec> {
    let mut samples: Vec<QVec> = Vec::new();
    let mut vertices: Vec<QVec> = Vec::new();
    for (p, _) in h.terms() {
        vertices.extend(p.vertices().iter().cloned());
        if let Ok(faces) = p.faces() {
            let half = Rat::new(1.into(), 2.into());
            for f in faces {
                if f.dim() == 1 {
                    samples.push((&f.vertices()[0] + &f.vertices()[1]).scale(&half));
                } else if f.dim() >= 2 {
                    let k = crate::num::scalar_from_usize::<Rat>(f.vertices().len());
                    let mut c = Vector::zero(3);
                    for v in f.vertices() {
                        c = &c + v;
                    }
                    samples.push(c.scale(&(Rat::one() / k)));
                }
            }
        }
    }
    samples.extend(vertices.iter().cloned());
    // deterministic grid over the bounding box, 8 divisions per axis
    if !vertices.is_empty() {
        let divisions = 8usize;
        let mut lo = vec![Rat::zero(); 3];
        let mut hi = vec![Rat::zero(); 3];
        for j in 0..3 {
            lo[j] = vertices.iter().map(|v| v[j].clone()).min().unwrap() - Rat::one();
            hi[j] = vertices.iter().map(|v| v[j].clone()).max().unwrap() + Rat::one();
        }
        let steps: Vec<Rat> = (0..3)
            .map(|j| {
                (hi[j].clone() - lo[j].clone())
                    / crate::num::scalar_from_usize::<Rat>(divisions)
            })
            .collect();
        for i in 0..=divisions {
            for j in 0..=divisions {
                for k in 0..=divisions {
                    samples.push(Vector::new(vec![
                        lo[0].clone() + steps[0].clone() * crate::num::scalar_from_usize::<Rat>(i),
                        lo[1].clone() + steps[1].clone() * crate::num::scalar_from_usize::<Rat>(j),
                        lo[2].clone() + steps[2].clone() * crate::num::scalar_from_usize::<Rat>(k),
                    ]));
                }
            }
        }
    }
    samples.sort();
    samples.dedup();
    samples
}
