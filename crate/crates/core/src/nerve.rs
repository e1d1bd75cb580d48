//! Nerves of finite unions of affine subspaces, compatible maps and
//! translations, the wedge-of-spheres check for line arrangements, and
//! polynomiality of cycle integrals under compatible translations.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::affine::{intersect, parallel_core, AffineSubspace};
use crate::arrangement::complement_regions;
use crate::error::{Error, Result};
use crate::linalg::least_norm_solution;
use crate::poly::{fit_polynomial, uni_integral_01, MultiPoly};
use crate::simplicial::{homology_ranks, SimplicialComplex};
use crate::vector::{QVec, Vector};
use crate::Rat;

const MAX_MEMBERS: usize = 20;

/// An indexed family of affine subspaces in a common ambient space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArrangementX {
    ambient: usize,
    subspaces: Vec<AffineSubspace>,
}

impl ArrangementX {
    pub fn new(subspaces: Vec<AffineSubspace>) -> Result<ArrangementX> {
        if subspaces.is_empty() {
            return Err(Error::EmptyInput);
        }
        let ambient = subspaces[0].ambient();
        for s in &subspaces {
            if s.ambient() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: s.ambient(),
                });
            }
        }
        Ok(ArrangementX { ambient, subspaces })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn subspaces(&self) -> &[AffineSubspace] {
        &self.subspaces
    }

    /// Translates member `i` by `y[i]`.
    pub fn translate(&self, y: &[QVec]) -> Result<ArrangementX> {
        if y.len() != self.len() {
            return Err(Error::IndexSetMismatch);
        }
        ArrangementX::new(
            self.subspaces
                .iter()
                .zip(y)
                .map(|(s, v)| s.translate(v))
                .collect::<Result<_>>()?,
        )
    }
}

/// The nerve: all index sets whose members have a common point. Built
/// incrementally; supersets of empty intersections are pruned.
pub fn nerve(x: &ArrangementX) -> Result<SimplicialComplex> {
    if x.len() > MAX_MEMBERS {
        return Err(Error::SizeBound(format!(
            "arrangement has {} members, bound is {MAX_MEMBERS}",
            x.len()
        )));
    }
    // frontier of index sets with a nonempty intersection, carrying it
    let mut faces: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<(Vec<usize>, AffineSubspace)> = (0..x.len())
        .map(|i| (vec![i], x.subspaces[i].clone()))
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (face, inter) in &frontier {
            faces.push(face.clone());
            for j in face[face.len() - 1] + 1..x.len() {
                if let Some(bigger) = intersect(&[inter, &x.subspaces[j]])? {
                    let mut f = face.clone();
                    f.push(j);
                    next.push((f, bigger));
                }
            }
        }
        frontier = next;
    }
    SimplicialComplex::new(faces)
}

/// `X1` dominates `X2` when every common intersection of `X1` persists in
/// `X2`: the nerve of `X1` is a subcomplex of the nerve of `X2`.
pub fn dominates(x1: &ArrangementX, x2: &ArrangementX) -> Result<bool> {
    if x1.len() != x2.len() {
        return Err(Error::IndexSetMismatch);
    }
    Ok(nerve(x1)?.is_subcomplex_of(&nerve(x2)?))
}

pub fn equivalent(x1: &ArrangementX, x2: &ArrangementX) -> Result<bool> {
    if x1.len() != x2.len() {
        return Err(Error::IndexSetMismatch);
    }
    Ok(nerve(x1)? == nerve(x2)?)
}

/// A map of a complex into a union of subspaces, described by the images of
/// the barycenters of its faces and extended affinely over the barycentric
/// subdivision. The image of the barycenter of a face `J` lies in every
/// member `M_i`, `i in J`, so the map is compatible with the coverings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompatibleMap {
    pub barycenters: BTreeMap<Vec<usize>, QVec>,
}

/// The canonical compatible map of `K` into the union of `X2`'s members:
/// the barycenter of each face `J` goes to the least-norm point of
/// `∩_{i in J} M_i`. Exists iff `K` is a subcomplex of the nerve of `X2`.
pub fn compatible_map(k: &SimplicialComplex, x2: &ArrangementX) -> Result<CompatibleMap> {
    if k.faces().flatten().any(|&v| v >= x2.len()) {
        return Err(Error::IndexSetMismatch);
    }
    if !k.is_subcomplex_of(&nerve(x2)?) {
        return Err(Error::NotSubcomplex);
    }
    let mut barycenters = BTreeMap::new();
    for face in k.faces() {
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let mut rhs: Vec<Rat> = Vec::new();
        for &i in face {
            for (n, r) in x2.subspaces[i].equations() {
                rows.push(n);
                rhs.push(r);
            }
        }
        let p = if rows.is_empty() {
            // every member is the whole space: send to the origin
            vec![Rat::zero(); x2.ambient()]
        } else {
            least_norm_solution(&rows, &rhs)
                .expect("nonempty by the nerve inclusion")
        };
        barycenters.insert(face.clone(), Vector::new(p));
    }
    Ok(CompatibleMap { barycenters })
}

/// Whether translating member `i` by `y[i]` preserves every common point:
/// each face of the nerve must stay a face after translation.
pub fn is_compatible(x: &ArrangementX, y: &[QVec]) -> Result<bool> {
    if y.len() != x.len() {
        return Err(Error::IndexSetMismatch);
    }
    let xt = x.translate(y)?;
    dominates(x, &xt)
}

/// The canonical compatible map of the nerve of `X` into the translated
/// union `∪ (L_i + y_i)`. Its barycenter images depend linearly on `y`.
pub fn translate_map(x: &ArrangementX, y: &[QVec]) -> Result<CompatibleMap> {
    if !is_compatible(x, y)? {
        return Err(Error::IncompatibleTranslation);
    }
    compatible_map(&nerve(x)?, &x.translate(y)?)
}

/// Outcome of the wedge-of-spheres check for a family of lines in the
/// plane.
#[derive(Clone, Debug)]
pub struct WedgeReport {
    /// Betti numbers of the nerve.
    pub betti: Vec<usize>,
    /// Bounded complement regions; `None` for a parallel family (where the
    /// count is trivially zero and the nerve claim changes shape).
    pub bounded_regions: Option<usize>,
    /// Dimension of the common parallel subspace of the family.
    pub core_dim: usize,
    /// Whether the homotopy-type prediction holds for these Betti numbers.
    pub consistent: bool,
}

/// Checks, for lines in the plane, that the nerve is homotopy equivalent to
/// a wedge of circles indexed by the bounded complement regions: `b_0 = 1`,
/// `b_1 = #bounded regions`, nothing higher. A family with a nonzero
/// parallel core instead predicts a wedge of 0-spheres: no homology above
/// degree zero.
pub fn wedge_check(lines: &[AffineSubspace]) -> Result<WedgeReport> {
    for l in lines {
        if l.ambient() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: l.ambient(),
            });
        }
    }
    let core = parallel_core(lines)?;
    let x = ArrangementX::new(lines.to_vec())?;
    let betti = homology_ranks(&nerve(&x)?);
    if core.dim() > 0 {
        let consistent = betti.iter().skip(1).all(|&b| b == 0);
        return Ok(WedgeReport {
            betti,
            bounded_regions: None,
            core_dim: core.dim(),
            consistent,
        });
    }

    // clip every line to a box holding all pairwise intersections with
    // margin, and count bounded faces of the resulting segment arrangement
    let mut pts: Vec<QVec> = Vec::new();
    for (i, a) in lines.iter().enumerate() {
        for b in lines.iter().skip(i + 1) {
            if let Some(p) = intersect(&[a, b])? {
                if p.dim() == 0 {
                    pts.push(p.base().clone());
                }
            }
        }
    }
    let one = Rat::from_integer(1.into());
    let mut lo = [pts[0][0].clone(), pts[0][1].clone()];
    let mut hi = lo.clone();
    for p in &pts {
        for c in 0..2 {
            if p[c] < lo[c] {
                lo[c] = p[c].clone();
            }
            if p[c] > hi[c] {
                hi[c] = p[c].clone();
            }
        }
    }
    for c in 0..2 {
        lo[c] -= one.clone();
        hi[c] += one.clone();
    }
    let mut segments = Vec::new();
    for l in lines {
        segments.push(clip_line_to_box(l, &lo, &hi)?);
    }
    let bounded = complement_regions(&segments)?.len();
    let consistent = betti.first() == Some(&1)
        && betti.get(1).copied().unwrap_or(0) == bounded
        && betti.iter().skip(2).all(|&b| b == 0);
    Ok(WedgeReport {
        betti,
        bounded_regions: Some(bounded),
        core_dim: 0,
        consistent,
    })
}

fn clip_line_to_box(l: &AffineSubspace, lo: &[Rat; 2], hi: &[Rat; 2]) -> Result<(QVec, QVec)> {
    let p = l.base();
    let d = &l.dirs()[0];
    let mut tmin: Option<Rat> = None;
    let mut tmax: Option<Rat> = None;
    for c in 0..2 {
        if d[c].is_zero() {
            if p[c] < lo[c] || p[c] > hi[c] {
                return Err(Error::Invalid("line misses the clip box".into()));
            }
            continue;
        }
        let t0 = (lo[c].clone() - p[c].clone()) / d[c].clone();
        let t1 = (hi[c].clone() - p[c].clone()) / d[c].clone();
        let (a, b) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        tmin = Some(tmin.map_or(a.clone(), |t: Rat| t.max(a)));
        tmax = Some(tmax.map_or(b.clone(), |t: Rat| t.min(b)));
    }
    let (tmin, tmax) = (tmin.unwrap(), tmax.unwrap());
    if tmin >= tmax {
        return Err(Error::Invalid("line misses the clip box".into()));
    }
    Ok((p + &d.scale(&tmin), p + &d.scale(&tmax)))
}

/// A polynomial 1-form `P dx + Q dy` on the plane.
#[derive(Clone, Debug)]
pub struct Form1 {
    pub p: MultiPoly<Rat>,
    pub q: MultiPoly<Rat>,
}

impl Form1 {
    /// Exact integral over the oriented segment from `a` to `b`.
    fn integrate_segment(&self, a: &QVec, b: &QVec) -> Rat {
        let up = self.p.restrict_to_segment(&a.0, &b.0);
        let uq = self.q.restrict_to_segment(&a.0, &b.0);
        uni_integral_01(&up) * (b[0].clone() - a[0].clone())
            + uni_integral_01(&uq) * (b[1].clone() - a[1].clone())
    }
}

/// A 1-cycle in a nerve: an integer combination of oriented edges `i -> j`.
pub type SimplicialCycle = Vec<(i64, [usize; 2])>;

fn check_cycle(gamma: &SimplicialCycle, k: &SimplicialComplex) -> Result<()> {
    let mut boundary: BTreeMap<usize, i64> = BTreeMap::new();
    for (c, [i, j]) in gamma {
        if i == j || !k.contains(&[*i, *j]) {
            return Err(Error::NotSubcomplex);
        }
        *boundary.entry(*j).or_insert(0) += c;
        *boundary.entry(*i).or_insert(0) -= c;
    }
    if boundary.values().any(|&v| v != 0) {
        return Err(Error::NotACycle);
    }
    Ok(())
}

/// The pullback integral `F(y) = ∫_γ g_y^* α` for one compatible
/// translation tuple: each oriented edge `i -> j` of the cycle travels
/// through the barycentric subdivision, `g(i) -> g({i,j}) -> g(j)`.
pub fn integral_value(
    x: &ArrangementX,
    gamma: &SimplicialCycle,
    alpha: &Form1,
    y: &[QVec],
) -> Result<Rat> {
    if x.ambient() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: x.ambient(),
        });
    }
    check_cycle(gamma, &nerve(x)?)?;
    let g = translate_map(x, y)?;
    let mut acc = Rat::zero();
    for (c, [i, j]) in gamma {
        let bi = &g.barycenters[&vec![*i]];
        let bj = &g.barycenters[&vec![*j]];
        let mut edge = vec![*i, *j];
        edge.sort();
        let bij = &g.barycenters[&edge];
        let v = alpha.integrate_segment(bi, bij) + alpha.integrate_segment(bij, bj);
        acc += Rat::from_integer((*c).into()) * v;
    }
    Ok(acc)
}

/// Fits `F(y) = ∫_γ g_y^* α` as an exact polynomial in the flattened
/// translation coordinates over the given compatible samples. An
/// inconsistent fit is an error: it would falsify polynomiality.
pub fn integral_f(
    x: &ArrangementX,
    gamma: &SimplicialCycle,
    alpha: &Form1,
    samples: &[Vec<QVec>],
    max_degree: u32,
) -> Result<MultiPoly<Rat>> {
    let mut fit_samples = Vec::new();
    for y in samples {
        let v = integral_value(x, gamma, alpha, y)?;
        let flat: Vec<Rat> = y.iter().flat_map(|p| p.0.iter().cloned()).collect();
        fit_samples.push((flat, v));
    }
    fit_polynomial(&fit_samples, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::qvec;

    fn line(a: &[i64], b: &[i64]) -> AffineSubspace {
        AffineSubspace::line_through(&qvec(a), &qvec(b)).unwrap()
    }

    fn concurrent_triple() -> ArrangementX {
        // three lines through the origin
        ArrangementX::new(vec![
            line(&[0, 0], &[1, 0]),
            line(&[0, 0], &[0, 1]),
            line(&[0, 0], &[1, 1]),
        ])
        .unwrap()
    }

    fn four_generic_lines() -> Vec<AffineSubspace> {
        vec![
            line(&[0, 0], &[1, 0]),
            line(&[0, 0], &[0, 1]),
            line(&[3, 0], &[0, 3]),
            line(&[1, 0], &[2, 5]),
        ]
    }

    #[test]
    fn nerve_of_four_generic_lines_is_complete_graph() {
        let x = ArrangementX::new(four_generic_lines()).unwrap();
        let k = nerve(&x).unwrap();
        assert_eq!(k.faces_of_dim(0).len(), 4);
        assert_eq!(k.faces_of_dim(1).len(), 6);
        assert_eq!(k.faces_of_dim(2).len(), 0);
    }

    #[test]
    fn nerve_of_concurrent_triple_is_a_simplex() {
        let k = nerve(&concurrent_triple()).unwrap();
        assert!(k.contains(&[0, 1, 2]));
    }

    #[test]
    fn nerve_of_parallel_pair_is_two_points() {
        let x = ArrangementX::new(vec![line(&[0, 0], &[1, 0]), line(&[0, 1], &[1, 1])]).unwrap();
        let k = nerve(&x).unwrap();
        assert_eq!(k.faces().count(), 2);
    }

    #[test]
    fn generic_translation_dominates_special_position() {
        let x = concurrent_triple();
        // pull the diagonal line away from the common point
        let y = vec![qvec(&[0, 0]), qvec(&[0, 0]), qvec(&[0, 1])];
        let xt = x.translate(&y).unwrap();
        assert!(dominates(&xt, &x).unwrap());
        assert!(!dominates(&x, &xt).unwrap());
        assert!(!equivalent(&x, &xt).unwrap());
        assert!(equivalent(&x, &x).unwrap());
    }

    #[test]
    fn compatibility_of_translations() {
        let x = concurrent_triple();
        assert!(is_compatible(&x, &vec![Vector::zero(2); 3]).unwrap());
        // moving every line by the same vector keeps the triple point
        let v = qvec(&[5, -1]);
        assert!(is_compatible(&x, &[v.clone(), v.clone(), v]).unwrap());
        // breaking the concurrence is incompatible
        let bad = vec![qvec(&[0, 0]), qvec(&[0, 0]), qvec(&[0, 1])];
        assert!(!is_compatible(&x, &bad).unwrap());
        assert_eq!(
            translate_map(&x, &bad),
            Err(Error::IncompatibleTranslation)
        );
    }

    #[test]
    fn compatible_map_images_lie_in_intersections() {
        let x = concurrent_triple();
        let k = nerve(&x).unwrap();
        let g = compatible_map(&k, &x).unwrap();
        for (face, p) in &g.barycenters {
            for &i in face {
                assert!(x.subspaces()[i].contains(p), "face {face:?}");
            }
        }
    }

    #[test]
    fn compatible_map_iff_subcomplex() {
        let x = concurrent_triple();
        let y = vec![qvec(&[0, 0]), qvec(&[0, 0]), qvec(&[0, 1])];
        let xt = x.translate(&y).unwrap();
        // nerve(x) has the 2-simplex, which xt lacks
        assert_eq!(
            compatible_map(&nerve(&x).unwrap(), &xt),
            Err(Error::NotSubcomplex)
        );
        assert!(compatible_map(&nerve(&xt).unwrap(), &x).is_ok());
    }

    #[test]
    fn translate_map_is_linear_in_y() {
        let x = concurrent_triple();
        let v = qvec(&[2, 3]);
        let y1 = vec![v.clone(), v.clone(), v.clone()];
        let w = qvec(&[-1, 4]);
        let y2 = vec![w.clone(), w.clone(), w.clone()];
        let g0 = translate_map(&x, &vec![Vector::zero(2); 3]).unwrap();
        let g1 = translate_map(&x, &y1).unwrap();
        let g2 = translate_map(&x, &y2).unwrap();
        let ysum: Vec<QVec> = y1.iter().zip(&y2).map(|(a, b)| a + b).collect();
        let gsum = translate_map(&x, &ysum).unwrap();
        for (face, p) in &gsum.barycenters {
            let expect = &(&g1.barycenters[face] + &g2.barycenters[face]) - &g0.barycenters[face];
            assert_eq!(p, &expect, "face {face:?}");
        }
    }

    #[test]
    fn wedge_check_on_line_families() {
        let r = wedge_check(&four_generic_lines()).unwrap();
        assert_eq!(r.bounded_regions, Some(3));
        assert_eq!(r.betti, vec![1, 3]);
        assert!(r.consistent);

        let three = vec![
            line(&[0, 0], &[1, 0]),
            line(&[0, 0], &[0, 1]),
            line(&[3, 0], &[0, 3]),
        ];
        let r3 = wedge_check(&three).unwrap();
        assert_eq!(r3.bounded_regions, Some(1));
        assert!(r3.consistent);

        let two = vec![line(&[0, 0], &[1, 0]), line(&[0, 0], &[0, 1])];
        let r2 = wedge_check(&two).unwrap();
        assert_eq!(r2.bounded_regions, Some(0));
        assert!(r2.consistent);
    }

    #[test]
    fn wedge_check_parallel_family_uses_core_branch() {
        let fam = vec![line(&[0, 0], &[1, 2]), line(&[1, 0], &[2, 2])];
        let r = wedge_check(&fam).unwrap();
        assert_eq!(r.core_dim, 1);
        assert_eq!(r.bounded_regions, None);
        assert!(r.consistent);
    }

    #[test]
    fn integral_f_is_polynomial_in_an_offset() {
        // translate all three concurrent lines by multiples of a common
        // vector (always compatible) and integrate x dy around the
        // triangle cycle of the nerve
        let x = concurrent_triple();
        let gamma: SimplicialCycle = vec![(1, [0, 1]), (1, [1, 2]), (1, [2, 0])];
        let alpha = Form1 {
            p: MultiPoly::zero(2),
            q: MultiPoly::var(2, 0),
        };
        let mut samples = Vec::new();
        for t in -3i64..=3 {
            let v = qvec(&[t, 2 * t]);
            samples.push(vec![v.clone(), v.clone(), v]);
        }
        let f = integral_f(&x, &gamma, &alpha, &samples, 2).unwrap();
        // holdout
        let t = qvec(&[5, 10]);
        let y = vec![t.clone(), t.clone(), t];
        let direct = integral_value(&x, &gamma, &alpha, &y).unwrap();
        let flat: Vec<Rat> = y.iter().flat_map(|p| p.0.iter().cloned()).collect();
        assert_eq!(f.eval(&flat), direct);
    }

    #[test]
    fn cycle_validation() {
        let x = concurrent_triple();
        let alpha = Form1 {
            p: MultiPoly::zero(2),
            q: MultiPoly::one(2),
        };
        let open: SimplicialCycle = vec![(1, [0, 1])];
        assert_eq!(
            integral_value(&x, &open, &alpha, &vec![Vector::zero(2); 3]),
            Err(Error::NotACycle)
        );
    }
}
