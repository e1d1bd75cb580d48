//! Polynomial measures on convex chains: exact volume, lattice-point sums
//! weighted by a polynomial, mixed volume by polarization, and the
//! multilinear extension to virtual bodies.

use num_traits::{One, Signed, Zero};

use crate::chain::{power, Chain};
use crate::error::{Error, Result};
use crate::num::scalar_from_usize;
use crate::poly::{fit_with_monomials, MultiPoly};
use crate::polytope::Polytope;
use crate::vector::QVec;
use crate::Rat;

/// Exact Lebesgue volume; zero for polytopes of deficient dimension.
pub fn volume(p: &Polytope) -> Result<Rat> {
    if p.ambient() > 3 {
        return Err(Error::DimensionBound {
            max: 3,
            got: p.ambient(),
        });
    }
    if p.dim() < p.ambient() {
        return Ok(Rat::zero());
    }
    match p.ambient() {
        1 => {
            let vs = p.vertices();
            Ok(vs[1][0].clone() - vs[0][0].clone())
        }
        2 => {
            let ring = p.ccw_boundary();
            Ok(shoelace(&ring))
        }
        3 => {
            let mut six_vol = Rat::zero();
            for facet in p.facets() {
                let fp = Polytope::hull(
                    &p.vertices()
                        .iter()
                        .filter(|v| facet.normal.dot(v) == facet.offset)
                        .cloned()
                        .collect::<Vec<_>>(),
                )?;
                let ring = outward_facet_ring(&fp, &facet.normal);
                // cone the facet over the origin
                for i in 1..ring.len() - 1 {
                    six_vol += ring[0].dot(&ring[i].cross3(&ring[i + 1]));
                }
            }
            Ok(six_vol / Rat::from_integer(6.into()))
        }
        _ => unreachable!(),
    }
}

fn shoelace(ring: &[QVec]) -> Rat {
    let n = ring.len();
    let mut two_area = Rat::zero();
    for i in 0..n {
        two_area += ring[i].cross2(&ring[(i + 1) % n]);
    }
    two_area / Rat::from_integer(2.into())
}

/// Ambient vertices of a facet polygon ordered so the induced orientation
/// matches the outward normal.
fn outward_facet_ring(facet: &Polytope, normal: &QVec) -> Vec<QVec> {
    let (base, basis) = facet.affine_basis();
    let ring2 = facet.ccw_boundary_in_span();
    let mut amb: Vec<QVec> = ring2
        .iter()
        .map(|c| {
            let mut p = base.clone();
            for (ci, b) in c.0.iter().zip(&basis) {
                p = &p + &b.scale(ci);
            }
            p
        })
        .collect();
    let induced = (&amb[1] - &amb[0]).cross3(&(&amb[2] - &amb[0]));
    if induced.dot(normal).is_negative() {
        amb.reverse();
    }
    amb
}

/// The lattice measure `f -> sum_i a_i sum_{x in Z^n cap P_i} P(x)`.
pub fn lattice_measure(p: &MultiPoly<Rat>, f: &Chain) -> Result<Rat> {
    let mut acc = Rat::zero();
    for (poly, coeff) in f.terms() {
        if !poly.has_integer_vertices() {
            return Err(Error::NonIntegerVertices);
        }
        let mut s = Rat::zero();
        for x in poly.lattice_points()? {
            s += p.eval(&x.0);
        }
        acc += coeff.clone() * s;
    }
    Ok(acc)
}

/// The chain `chi_{D_1}^{n_1} * ... * chi_{D_k}^{n_k}`.
pub fn dilate_chain(bases: &[Polytope], exponents: &[i64]) -> Result<Chain> {
    if bases.len() != exponents.len() {
        return Err(Error::WrongBodyCount {
            expected: bases.len(),
            got: exponents.len(),
        });
    }
    if bases.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut acc = power(&bases[0], exponents[0])?;
    for (b, &e) in bases.iter().zip(exponents).skip(1) {
        acc = acc.product(&power(b, e)?)?;
    }
    Ok(acc.chain().clone())
}

/// Mixed volume by polarization of the volume polynomial:
/// `(1/n!) sum_{S nonempty} (-1)^{n-|S|} Vol(sum_{i in S} P_i)`.
pub fn mixed_volume(bodies: &[Polytope]) -> Result<Rat> {
    if bodies.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = bodies[0].ambient();
    if bodies.len() != n {
        return Err(Error::WrongBodyCount {
            expected: n,
            got: bodies.len(),
        });
    }
    let mut acc = Rat::zero();
    for mask in 1u32..(1 << n) {
        let mut sum: Option<Polytope> = None;
        for (i, b) in bodies.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = Some(match sum {
                    None => b.clone(),
                    Some(s) => s.minkowski_sum(b)?,
                });
            }
        }
        let sign = if (n - mask.count_ones() as usize) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        acc += sign * volume(&sum.expect("nonempty subset"))?;
    }
    let mut fact = Rat::one();
    for k in 2..=n {
        fact *= scalar_from_usize::<Rat>(k);
    }
    Ok(acc / fact)
}

/// A formal difference of convex bodies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualBody {
    pub positive: Polytope,
    pub negative: Polytope,
}

impl VirtualBody {
    pub fn new(positive: Polytope, negative: Polytope) -> Result<VirtualBody> {
        if positive.ambient() != negative.ambient() {
            return Err(Error::DimensionMismatch {
                expected: positive.ambient(),
                got: negative.ambient(),
            });
        }
        Ok(VirtualBody { positive, negative })
    }

    pub fn of_polytope(p: &Polytope) -> VirtualBody {
        VirtualBody {
            positive: p.clone(),
            negative: Polytope::origin(p.ambient()),
        }
    }

    /// Equality of formal differences through the cancellation law:
    /// `A - B = C - D` iff `A + D = C + B`.
    pub fn same_body(&self, other: &VirtualBody) -> Result<bool> {
        let lhs = self.positive.minkowski_sum(&other.negative)?;
        let rhs = other.positive.minkowski_sum(&self.negative)?;
        Ok(lhs == rhs)
    }
}

/// Mixed volume extended multilinearly to formal differences.
pub fn virtual_mixed_volume(bodies: &[VirtualBody]) -> Result<Rat> {
    if bodies.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = bodies[0].positive.ambient();
    if bodies.len() != n {
        return Err(Error::WrongBodyCount {
            expected: n,
            got: bodies.len(),
        });
    }
    let mut acc = Rat::zero();
    for mask in 0u32..(1 << n) {
        let parts: Vec<Polytope> = bodies
            .iter()
            .enumerate()
            .map(|(i, b)| {
                if mask & (1 << i) != 0 {
                    b.negative.clone()
                } else {
                    b.positive.clone()
                }
            })
            .collect();
        let sign = if (mask.count_ones() as usize) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        acc += sign * mixed_volume(&parts)?;
    }
    Ok(acc)
}

/// The degree-`n` polynomial extension of the volume to formal differences.
pub fn virtual_volume(body: &VirtualBody) -> Result<Rat> {
    let n = body.positive.ambient();
    virtual_mixed_volume(&vec![body.clone(); n])
}

/// Result of fitting `Vol(lambda A + mu B)` on a nonnegative grid.
#[derive(Clone, Debug)]
pub struct MinkowskiReport {
    /// Homogeneous degree-n polynomial in `(lambda, mu)`.
    pub polynomial: MultiPoly<Rat>,
    /// Whether the fit reproduced every grid value exactly (it must).
    pub exact: bool,
}

/// Verifies that `Vol(lambda A + mu B)` is a homogeneous degree-`n`
/// polynomial on a `grid x grid` nonnegative integer grid.
pub fn minkowski_polynomiality_check(
    a: &Polytope,
    b: &Polytope,
    grid: usize,
) -> Result<MinkowskiReport> {
    let n = a.ambient();
    if b.ambient() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.ambient(),
        });
    }
    if grid < n + 1 {
        return Err(Error::Invalid(format!(
            "grid size {grid} too small for degree {n}"
        )));
    }
    let monomials: Vec<Vec<u32>> = (0..=n as u32).map(|k| vec![k, n as u32 - k]).collect();
    let mut samples = Vec::new();
    for lam in 0..grid {
        for mu in 0..grid {
            let la = a.scale(&scalar_from_usize(lam));
            let mb = b.scale(&scalar_from_usize(mu));
            let v = volume(&la.minkowski_sum(&mb)?)?;
            samples.push((
                vec![scalar_from_usize::<Rat>(lam), scalar_from_usize::<Rat>(mu)],
                v,
            ));
        }
    }
    let polynomial = fit_with_monomials(&monomials, &samples)?;
    Ok(MinkowskiReport {
        polynomial,
        exact: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::scalar_from_i64;
    use crate::vector::qvec;

    fn q(n: i64) -> Rat {
        scalar_from_i64(n)
    }

    fn square() -> Polytope {
        Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    fn triangle() -> Polytope {
        Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1]])
    }

    #[test]
    fn volumes() {
        assert_eq!(volume(&square()).unwrap(), q(1));
        let pentagon = Polytope::from_ints(&[&[0, 0], &[2, 0], &[2, 1], &[1, 2], &[0, 2]]);
        assert_eq!(volume(&pentagon).unwrap(), Rat::new(7.into(), 2.into()));
        let seg = Polytope::from_ints(&[&[0, 0], &[5, 5]]);
        assert_eq!(volume(&seg).unwrap(), q(0));
    }

    #[test]
    fn volume_of_cube_and_tetrahedron() {
        let cube = Polytope::from_ints(&[
            &[0, 0, 0],
            &[2, 0, 0],
            &[0, 2, 0],
            &[0, 0, 2],
            &[2, 2, 0],
            &[2, 0, 2],
            &[0, 2, 2],
            &[2, 2, 2],
        ]);
        assert_eq!(volume(&cube).unwrap(), q(8));
        let tet = Polytope::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(volume(&tet).unwrap(), Rat::new(1.into(), 6.into()));
        // translation invariance
        let moved = tet.translate(&qvec(&[-3, 5, 11]));
        assert_eq!(volume(&moved).unwrap(), Rat::new(1.into(), 6.into()));
    }

    #[test]
    fn lattice_measure_of_dilated_squares() {
        let one = MultiPoly::one(2);
        for n in 0..=4i64 {
            let c = dilate_chain(&[square()], &[n]).unwrap();
            assert_eq!(lattice_measure(&one, &c).unwrap(), q((n + 1) * (n + 1)));
        }
    }

    #[test]
    fn lattice_measure_at_negative_exponents() {
        let one = MultiPoly::one(2);
        // (n+1)^2 at n = -1 and n = -2
        let c1 = dilate_chain(&[square()], &[-1]).unwrap();
        assert_eq!(lattice_measure(&one, &c1).unwrap(), q(0));
        let c2 = dilate_chain(&[square()], &[-2]).unwrap();
        assert_eq!(lattice_measure(&one, &c2).unwrap(), q(1));
    }

    #[test]
    fn lattice_measure_rejects_fractional_vertices() {
        let p = Polytope::hull(&[
            crate::vector::qvec_frac(&[(1, 2), (0, 1)]),
            crate::vector::qvec(&[2, 0]),
        ])
        .unwrap();
        let r = lattice_measure(&MultiPoly::one(2), &Chain::of_polytope(&p));
        assert_eq!(r, Err(Error::NonIntegerVertices));
    }

    #[test]
    fn dilate_chain_basics() {
        assert_eq!(
            dilate_chain(&[square()], &[0]).unwrap(),
            Chain::one(2)
        );
        let seg = Polytope::from_ints(&[&[0], &[1]]);
        assert_eq!(
            dilate_chain(&[seg], &[3]).unwrap(),
            Chain::of_polytope(&Polytope::from_ints(&[&[0], &[3]]))
        );
        let c = dilate_chain(&[square(), triangle()], &[1, 1]).unwrap();
        let pentagon = Polytope::from_ints(&[&[0, 0], &[2, 0], &[2, 1], &[1, 2], &[0, 2]]);
        assert_eq!(c, Chain::of_polytope(&pentagon));
    }

    #[test]
    fn mixed_volume_values() {
        assert_eq!(
            mixed_volume(&[square(), square()]).unwrap(),
            volume(&square()).unwrap()
        );
        assert_eq!(mixed_volume(&[square(), triangle()]).unwrap(), q(1));
        let pt = Polytope::point(qvec(&[5, -2]));
        assert_eq!(mixed_volume(&[square(), pt]).unwrap(), q(0));
    }

    #[test]
    fn mixed_volume_symmetry_in_3d() {
        let cube = Polytope::from_ints(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]);
        let tet = Polytope::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let seg = Polytope::from_ints(&[&[0, 0, 0], &[1, 1, 1]]);
        let a = mixed_volume(&[cube.clone(), tet.clone(), seg.clone()]).unwrap();
        let b = mixed_volume(&[seg, cube.clone(), tet.clone()]).unwrap();
        assert_eq!(a, b);
        assert_eq!(mixed_volume(&[cube.clone(), cube.clone(), cube.clone()]).unwrap(), q(1));
    }

    #[test]
    fn virtual_body_cancellation_equality() {
        let a = VirtualBody::new(square(), triangle()).unwrap();
        let shift = qvec(&[3, 4]);
        // translating both parts by the same vector cancels
        let b = VirtualBody::new(
            square().translate(&shift),
            triangle().translate(&shift),
        )
        .unwrap();
        assert!(a.same_body(&b).unwrap());
        // translating only one part does not
        let c = VirtualBody::new(square().translate(&shift), triangle()).unwrap();
        assert!(!a.same_body(&c).unwrap());
        let c = VirtualBody::new(
            square().minkowski_sum(&triangle()).unwrap(),
            triangle().minkowski_sum(&triangle()).unwrap(),
        )
        .unwrap();
        assert!(a.same_body(&c).unwrap());
    }

    #[test]
    fn virtual_mixed_volume_expansion() {
        let vb = |p: &Polytope, n: &Polytope| VirtualBody::new(p.clone(), n.clone()).unwrap();
        let s = square();
        let t = triangle();
        // MV(D - D, B) = 0
        let z = vb(&s, &s);
        assert_eq!(
            virtual_mixed_volume(&[z, VirtualBody::of_polytope(&t)]).unwrap(),
            q(0)
        );
        // plain mixed volume when negatives are points
        assert_eq!(
            virtual_mixed_volume(&[
                VirtualBody::of_polytope(&s),
                VirtualBody::of_polytope(&t)
            ])
            .unwrap(),
            q(1)
        );
    }

    #[test]
    fn virtual_volume_homogeneity() {
        let s = square();
        // [0,1]^2 - [0,2]^2 scales by -1: volume (-1)^2 * 1 = 1
        let body = VirtualBody::new(s.clone(), s.scale(&q(2))).unwrap();
        assert_eq!(virtual_volume(&body).unwrap(), q(1));
        assert_eq!(
            virtual_volume(&VirtualBody::of_polytope(&s)).unwrap(),
            q(1)
        );
        assert_eq!(virtual_volume(&VirtualBody::new(s.clone(), s).unwrap()).unwrap(), q(0));
    }

    #[test]
    fn minkowski_polynomiality_square_and_triangle() {
        let rep = minkowski_polynomiality_check(&square(), &triangle(), 5).unwrap();
        assert!(rep.exact);
        // lambda^2 + 2 lambda mu + mu^2 / 2
        assert_eq!(rep.polynomial.eval(&[q(1), q(0)]), q(1));
        assert_eq!(
            rep.polynomial.eval(&[q(0), q(1)]),
            Rat::new(1.into(), 2.into())
        );
        let coeff_cross = rep.polynomial.eval(&[q(1), q(1)]).clone()
            - rep.polynomial.eval(&[q(1), q(0)])
            - rep.polynomial.eval(&[q(0), q(1)]);
        assert_eq!(coeff_cross, q(2) * mixed_volume(&[square(), triangle()]).unwrap());
    }

    #[test]
    fn minkowski_polynomiality_with_point() {
        let pt = Polytope::point(qvec(&[2, 3]));
        let rep = minkowski_polynomiality_check(&square(), &pt, 5).unwrap();
        assert_eq!(rep.polynomial.eval(&[q(3), q(7)]), q(9));
    }
}
