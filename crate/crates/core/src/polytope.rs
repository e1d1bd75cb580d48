//! Convex polytopes with exact rational vertices.
//!
//! Canonical form: the vertex list holds the extreme points only, sorted
//! lexicographically, so structural equality is set equality. Full hull
//! machinery is provided for ambient dimension <= 3; point sets of affine
//! rank <= 2 are accepted in any ambient dimension.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{affine_rank, rank, solve};
use crate::vector::{QVec, Vector};
use crate::{Int, Rat};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Polytope {
    ambient: usize,
    dim: usize,
    vertices: Vec<QVec>,
}

/// A supporting halfspace `normal . x <= offset` with a primitive integer
/// outward normal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    pub normal: QVec,
    pub offset: Rat,
}

impl Polytope {
    /// Convex hull of a nonempty point set.
    pub fn hull(points: &[QVec]) -> Result<Polytope> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let ambient = points[0].dim();
        for p in points {
            if p.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: p.dim(),
                });
            }
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let r = affine_rank(&pts);
        let vertices = match r {
            0 => vec![pts[0].clone()],
            1 => hull_rank1(&pts),
            2 => hull_rank2(&pts)?,
            3 if ambient == 3 => hull_rank3(&pts),
            _ => {
                return Err(Error::DimensionBound {
                    max: 3,
                    got: ambient,
                })
            }
        };
        let mut vertices = vertices;
        vertices.sort();
        vertices.dedup();
        Ok(Polytope {
            ambient,
            dim: r,
            vertices,
        })
    }

    /// A single point as a polytope.
    pub fn point(p: QVec) -> Polytope {
        Polytope {
            ambient: p.dim(),
            dim: 0,
            vertices: vec![p],
        }
    }

    /// The origin of `R^n` (the identity element of the chain algebra).
    pub fn origin(ambient: usize) -> Polytope {
        Polytope::point(Vector::zero(ambient))
    }

    /// Hull of integer coordinate tuples, for tests and fixtures.
    pub fn from_ints(points: &[&[i64]]) -> Polytope {
        let pts: Vec<QVec> = points
            .iter()
            .map(|c| Vector::new(c.iter().map(|&x| Rat::from_integer(x.into())).collect()))
            .collect();
        Polytope::hull(&pts).expect("valid integer point set")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }

    /// Builds directly from a known-canonical vertex set (internal).
    fn from_canonical(ambient: usize, dim: usize, vertices: Vec<QVec>) -> Polytope {
        Polytope {
            ambient,
            dim,
            vertices,
        }
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a + b);
            }
        }
        Polytope::hull(&sums)
    }

    pub fn support_value(&self, xi: &QVec) -> Result<Rat> {
        if xi.dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: xi.dim(),
            });
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| v.dot(xi))
            .max()
            .expect("nonempty vertex list"))
    }

    pub fn translate(&self, v: &QVec) -> Polytope {
        assert_eq!(v.dim(), self.ambient);
        Polytope::from_canonical(
            self.ambient,
            self.dim,
            {
                let mut vs: Vec<QVec> = self.vertices.iter().map(|p| p + v).collect();
                vs.sort();
                vs
            },
        )
    }

    pub fn negate(&self) -> Polytope {
        let mut vs: Vec<QVec> = self.vertices.iter().map(|p| -p).collect();
        vs.sort();
        Polytope::from_canonical(self.ambient, self.dim, vs)
    }

    /// Dilation centred at the origin; negative factors reflect.
    pub fn scale(&self, c: &Rat) -> Polytope {
        if c.is_zero() {
            return Polytope::origin(self.ambient);
        }
        let mut vs: Vec<QVec> = self.vertices.iter().map(|p| p.scale(c)).collect();
        vs.sort();
        Polytope::from_canonical(self.ambient, self.dim, vs)
    }

    pub fn has_integer_vertices(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.0.iter().all(|c| c.is_integer()))
    }

    /// Exact membership test.
    pub fn contains(&self, p: &QVec) -> bool {
        assert_eq!(p.dim(), self.ambient, "dimension mismatch in membership");
        match self.dim {
            0 => *p == self.vertices[0],
            1 => {
                let a = &self.vertices[0];
                let b = &self.vertices[1];
                let d = b - a;
                let w = p - a;
                // p on line a + t d with 0 <= t <= 1
                let dd = d.dot(&d);
                let t = w.dot(&d);
                // collinearity: w * dd == d * t  (avoids division)
                if w.scale(&dd) != d.scale(&t) {
                    return false;
                }
                !t.is_negative() && t <= dd
            }
            2 => {
                if self.ambient == 2 {
                    let ring = self.ccw_boundary();
                    polygon_contains(&ring, p)
                } else {
                    let (base, basis) = self.affine_basis();
                    match span_coords(&base, &basis, p) {
                        Some(c) => {
                            let ring: Vec<QVec> = self
                                .ccw_boundary_in_span()
                                .into_iter()
                                .collect();
                            polygon_contains(&ring, &Vector::new(c))
                        }
                        None => false,
                    }
                }
            }
            3 => self
                .facets()
                .iter()
                .all(|f| f.normal.dot(p) <= f.offset),
            _ => unreachable!("polytopes are built with dim <= 3"),
        }
    }

    /// Base point and an independent direction basis of the affine span.
    pub fn affine_basis(&self) -> (QVec, Vec<QVec>) {
        let base = self.vertices[0].clone();
        let mut basis: Vec<QVec> = Vec::new();
        for v in &self.vertices[1..] {
            let d = v - &base;
            let mut rows: Vec<Vec<Rat>> = basis.iter().map(|b| b.0.clone()).collect();
            rows.push(d.0.clone());
            if rank(&rows) > basis.len() {
                basis.push(d);
            }
            if basis.len() == self.dim {
                break;
            }
        }
        (base, basis)
    }

    /// The vertices of a 2-dimensional polytope in counterclockwise order.
    ///
    /// For ambient dimension 2 the order is genuinely counterclockwise;
    /// callers in ambient 3 should use [`Polytope::ccw_boundary_in_span`].
    pub fn ccw_boundary(&self) -> Vec<QVec> {
        assert_eq!(self.dim, 2);
        assert_eq!(self.ambient, 2);
        order_polygon_ccw(&self.vertices)
    }

    /// CCW-ordered span coordinates of a 2-dimensional polytope embedded in
    /// a higher-dimensional ambient space.
    pub fn ccw_boundary_in_span(&self) -> Vec<QVec> {
        assert_eq!(self.dim, 2);
        let (base, basis) = self.affine_basis();
        let coords: Vec<QVec> = self
            .vertices
            .iter()
            .map(|v| {
                Vector::new(span_coords(&base, &basis, v).expect("vertex lies in its own span"))
            })
            .collect();
        order_polygon_ccw(&coords)
    }

    /// Supporting facet halfspaces of a full-dimensional polytope.
    pub fn facets(&self) -> Vec<Facet> {
        assert_eq!(
            self.dim, self.ambient,
            "facet inequalities require a full-dimensional polytope"
        );
        match self.ambient {
            1 => {
                let lo = self.vertices.first().unwrap();
                let hi = self.vertices.last().unwrap();
                vec![
                    Facet {
                        normal: Vector::new(vec![Rat::one()]),
                        offset: hi[0].clone(),
                    },
                    Facet {
                        normal: Vector::new(vec![-Rat::one()]),
                        offset: -lo[0].clone(),
                    },
                ]
            }
            2 => {
                let ring = self.ccw_boundary();
                let n = ring.len();
                (0..n)
                    .map(|i| {
                        let a = &ring[i];
                        let b = &ring[(i + 1) % n];
                        let d = b - a;
                        // outward normal of a CCW edge
                        let nrm = primitive_direction(&Vector::new(vec![
                            d[1].clone(),
                            -d[0].clone(),
                        ]));
                        let offset = nrm.dot(a);
                        Facet {
                            normal: nrm,
                            offset,
                        }
                    })
                    .collect()
            }
            3 => facet_planes_3d(&self.vertices),
            n => unreachable!("unsupported ambient dimension {n}"),
        }
    }

    /// Vertex sets of the facets of a full-dimensional 3-polytope.
    pub fn facet_polytopes(&self) -> Vec<Polytope> {
        assert_eq!(self.dim, 3);
        self.facets()
            .iter()
            .map(|f| {
                let pts: Vec<QVec> = self
                    .vertices
                    .iter()
                    .filter(|v| f.normal.dot(v) == f.offset)
                    .cloned()
                    .collect();
                Polytope::hull(&pts).expect("facet vertex set is nonempty")
            })
            .collect()
    }

    /// All nonempty closed faces, including the polytope itself.
    pub fn faces(&self) -> Result<Vec<Polytope>> {
        if self.ambient > 3 {
            return Err(Error::DimensionBound {
                max: 3,
                got: self.ambient,
            });
        }
        let mut out: Vec<Polytope> = Vec::new();
        match self.dim {
            0 => out.push(self.clone()),
            1 => {
                for v in &self.vertices {
                    out.push(Polytope::point(v.clone()));
                }
                out.push(self.clone());
            }
            2 => {
                let ring = if self.ambient == 2 {
                    self.ccw_boundary()
                } else {
                    // order the real vertices by their span-coordinate angle
                    let (base, basis) = self.affine_basis();
                    let mut tagged: Vec<(QVec, QVec)> = self
                        .vertices
                        .iter()
                        .map(|v| {
                            (
                                Vector::new(
                                    span_coords(&base, &basis, v).expect("vertex in span"),
                                ),
                                v.clone(),
                            )
                        })
                        .collect();
                    let ordered = order_polygon_ccw(
                        &tagged.iter().map(|(c, _)| c.clone()).collect::<Vec<_>>(),
                    );
                    ordered
                        .iter()
                        .map(|c| {
                            let idx = tagged
                                .iter()
                                .position(|(cc, _)| cc == c)
                                .expect("ordered vertex present");
                            tagged.swap_remove(idx).1
                        })
                        .collect()
                };
                let n = ring.len();
                for v in &ring {
                    out.push(Polytope::point(v.clone()));
                }
                for i in 0..n {
                    out.push(Polytope::hull(&[ring[i].clone(), ring[(i + 1) % n].clone()])?);
                }
                out.push(self.clone());
            }
            3 => {
                let facets = self.facet_polytopes();
                let mut edges: Vec<Polytope> = Vec::new();
                for f in &facets {
                    let ring = f.ccw_boundary_in_span();
                    let n = ring.len();
                    // recover ambient vertices in ring order
                    let (base, basis) = f.affine_basis();
                    let amb: Vec<QVec> = ring
                        .iter()
                        .map(|c| {
                            let mut p = base.clone();
                            for (ci, b) in c.0.iter().zip(&basis) {
                                p = &p + &b.scale(ci);
                            }
                            p
                        })
                        .collect();
                    for i in 0..n {
                        edges.push(Polytope::hull(&[amb[i].clone(), amb[(i + 1) % n].clone()])?);
                    }
                }
                edges.sort();
                edges.dedup();
                for v in &self.vertices {
                    out.push(Polytope::point(v.clone()));
                }
                out.extend(edges);
                out.extend(facets);
                out.push(self.clone());
            }
            _ => unreachable!(),
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// All integer points of the polytope, in lexicographic order.
    pub fn lattice_points(&self) -> Result<Vec<QVec>> {
        if self.ambient > 3 {
            return Err(Error::DimensionBound {
                max: 3,
                got: self.ambient,
            });
        }
        let n = self.ambient;
        let mut lo = vec![0i64; n];
        let mut hi = vec![0i64; n];
        for j in 0..n {
            let min = self.vertices.iter().map(|v| v[j].clone()).min().unwrap();
            let max = self.vertices.iter().map(|v| v[j].clone()).max().unwrap();
            lo[j] = min.ceil().to_integer().to_i64().ok_or_else(|| {
                Error::SizeBound("lattice bounding box exceeds i64".into())
            })?;
            hi[j] = max.floor().to_integer().to_i64().ok_or_else(|| {
                Error::SizeBound("lattice bounding box exceeds i64".into())
            })?;
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Ok(vec![]);
        }
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'outer: loop {
            let p = Vector::new(cur.iter().map(|&c| Rat::from_integer(c.into())).collect());
            if self.contains(&p) {
                out.push(p);
            }
            for j in (0..n).rev() {
                if cur[j] < hi[j] {
                    cur[j] += 1;
                    for k in (j + 1)..n {
                        cur[k] = lo[k];
                    }
                    continue 'outer;
                }
            }
            break;
        }
        Ok(out)
    }
}

fn hull_rank1(pts: &[QVec]) -> Vec<QVec> {
    let base = &pts[0];
    let dir = pts
        .iter()
        .map(|p| p - base)
        .find(|d| !d.is_zero())
        .expect("rank-1 point set has a direction");
    let mut lo = pts[0].clone();
    let mut hi = pts[0].clone();
    let mut tlo = Rat::zero();
    let mut thi = Rat::zero();
    for p in pts {
        let t = (p - base).dot(&dir);
        if t < tlo {
            tlo = t.clone();
            lo = p.clone();
        }
        if t > thi {
            thi = t;
            hi = p.clone();
        }
    }
    vec![lo, hi]
}

fn hull_rank2(pts: &[QVec]) -> Result<Vec<QVec>> {
    let ambient = pts[0].dim();
    if ambient == 2 {
        return Ok(monotone_chain(pts));
    }
    // Map to span coordinates, hull there, map back.
    let base = pts[0].clone();
    let mut basis: Vec<QVec> = Vec::new();
    for p in &pts[1..] {
        let d = p - &base;
        let mut rows: Vec<Vec<Rat>> = basis.iter().map(|b| b.0.clone()).collect();
        rows.push(d.0.clone());
        if rank(&rows) > basis.len() {
            basis.push(d);
        }
        if basis.len() == 2 {
            break;
        }
    }
    let coords: Vec<QVec> = pts
        .iter()
        .map(|p| Vector::new(span_coords(&base, &basis, p).expect("point in span")))
        .collect();
    let hull2 = monotone_chain(&coords);
    Ok(hull2
        .iter()
        .map(|c| {
            let idx = coords.iter().position(|cc| cc == c).expect("hull vertex");
            pts[idx].clone()
        })
        .collect())
}

/// Andrew's monotone chain over exact rationals; strict turns only, so the
/// result is exactly the extreme-point set (in CCW order).
fn monotone_chain(pts: &[QVec]) -> Vec<QVec> {
    let mut pts = pts.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: &QVec, a: &QVec, b: &QVec| -> Rat { (a - o).cross2(&(b - o)) };
    let mut lower: Vec<QVec> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<QVec> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Supporting planes of a rank-3 point set in `R^3` by exhaustive triple
/// enumeration; exact and adequate at desk scale.
fn facet_planes_from_points(pts: &[QVec]) -> Vec<Facet> {
    let m = pts.len();
    let mut facets: Vec<Facet> = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                let n = (&pts[j] - &pts[i]).cross3(&(&pts[k] - &pts[i]));
                if n.is_zero() {
                    continue;
                }
                let off = n.dot(&pts[i]);
                let mut all_le = true;
                let mut all_ge = true;
                for p in pts {
                    let d = n.dot(p) - off.clone();
                    if d.is_positive() {
                        all_le = false;
                    }
                    if d.is_negative() {
                        all_ge = false;
                    }
                    if !all_le && !all_ge {
                        break;
                    }
                }
                let facet = if all_le {
                    let nrm = primitive_direction(&n);
                    let offset = nrm.dot(&pts[i]);
                    Facet {
                        normal: nrm,
                        offset,
                    }
                } else if all_ge {
                    let nrm = primitive_direction(&-&n);
                    let offset = nrm.dot(&pts[i]);
                    Facet {
                        normal: nrm,
                        offset,
                    }
                } else {
                    continue;
                };
                if !facets.contains(&facet) {
                    facets.push(facet);
                }
            }
        }
    }
    facets
}

fn hull_rank3(pts: &[QVec]) -> Vec<QVec> {
    let facets = facet_planes_from_points(pts);
    pts.iter()
        .filter(|p| {
            let active: Vec<Vec<Rat>> = facets
                .iter()
                .filter(|f| f.normal.dot(p) == f.offset)
                .map(|f| f.normal.0.clone())
                .collect();
            rank(&active) == 3
        })
        .cloned()
        .collect()
}

fn facet_planes_3d(vertices: &[QVec]) -> Vec<Facet> {
    facet_planes_from_points(vertices)
}

/// Solves `base + sum c_i basis_i = p` exactly; `None` when `p` is outside
/// the affine span.
pub fn span_coords(base: &QVec, basis: &[QVec], p: &QVec) -> Option<Vec<Rat>> {
    let ambient = base.dim();
    let rhs = p - base;
    let a: Vec<Vec<Rat>> = (0..ambient)
        .map(|r| basis.iter().map(|b| b[r].clone()).collect())
        .collect();
    let b: Vec<Rat> = rhs.0.clone();
    let sol = solve(&a, &b)?;
    // verify (solve already guarantees consistency)
    Some(sol)
}

/// Orders the vertex set of a convex polygon counterclockwise.
pub fn order_polygon_ccw(vertices: &[QVec]) -> Vec<QVec> {
    assert!(vertices.len() >= 3);
    let n = crate::num::scalar_from_usize::<Rat>(vertices.len());
    let mut centroid = Vector::zero(2);
    for v in vertices {
        centroid = &centroid + v;
    }
    let centroid = centroid.scale(&(Rat::one() / n));
    let mut vs = vertices.to_vec();
    vs.sort_by(|a, b| {
        let da = a - &centroid;
        let db = b - &centroid;
        compare_angles(&da, &db)
    });
    vs
}

/// Exact angular comparison of two nonzero 2D direction vectors, with angles
/// measured CCW from the positive x-axis in `[0, 2pi)`.
pub fn compare_angles(a: &QVec, b: &QVec) -> std::cmp::Ordering {
    let half = |v: &QVec| -> u8 {
        // 0 for the upper half-plane including the positive x-axis
        if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    // same half-plane: CCW order by cross product
    b.cross2(a).cmp(&Rat::zero())
}

/// Scales a nonzero rational vector to its primitive integer representative
/// with the same direction.
pub fn primitive_direction(v: &QVec) -> QVec {
    assert!(!v.is_zero(), "zero vector has no direction");
    let mut lcm = Int::one();
    for c in &v.0 {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<Int> = v
        .0
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut g = Int::zero();
    for i in &ints {
        g = num_integer::gcd(g, i.clone());
    }
    Vector::new(ints.into_iter().map(|i| Rat::from_integer(i / &g)).collect())
}

fn polygon_contains(ring: &[QVec], p: &QVec) -> bool {
    let n = ring.len();
    for i in 0..n {
        let a = &ring[i];
        let b = &ring[(i + 1) % n];
        if (b - a).cross2(&(p - a)).is_negative() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::{qvec, qvec_frac};

    #[test]
    fn hull_drops_interior_point() {
        let p = Polytope::hull(&[
            qvec(&[0, 0]),
            qvec(&[1, 0]),
            qvec(&[0, 1]),
            qvec(&[1, 1]),
            qvec_frac(&[(1, 2), (1, 2)]),
        ])
        .unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn hull_collinear_is_segment() {
        let p = Polytope::hull(&[qvec(&[0, 0]), qvec(&[1, 1]), qvec(&[2, 2])]).unwrap();
        assert_eq!(p.dim(), 1);
        assert_eq!(p.vertices(), &[qvec(&[0, 0]), qvec(&[2, 2])]);
    }

    #[test]
    fn hull_single_point() {
        let p = Polytope::hull(&[qvec(&[3, 7])]).unwrap();
        assert_eq!(p.dim(), 0);
    }

    #[test]
    fn hull_empty_is_error() {
        assert_eq!(Polytope::hull(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn hull_mixed_dimensions_is_error() {
        let r = Polytope::hull(&[qvec(&[0, 0]), qvec(&[1, 2, 3])]);
        assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn minkowski_square_plus_triangle_is_pentagon() {
        let sq = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let tri = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]);
        let s = sq.minkowski_sum(&tri).unwrap();
        let expected =
            Polytope::from_ints(&[&[0, 0], &[2, 0], &[2, 1], &[1, 2], &[0, 2]]);
        assert_eq!(s, expected);
    }

    #[test]
    fn minkowski_identity_element() {
        let sq = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let origin = Polytope::origin(2);
        assert_eq!(sq.minkowski_sum(&origin).unwrap(), sq);
    }

    #[test]
    fn minkowski_segments_make_square() {
        let a = Polytope::from_ints(&[&[0, 0], &[1, 0]]);
        let b = Polytope::from_ints(&[&[0, 0], &[0, 1]]);
        let sq = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(a.minkowski_sum(&b).unwrap(), sq);
    }

    #[test]
    fn support_values_on_square() {
        let sq = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(sq.support_value(&qvec(&[1, 1])).unwrap(), Rat::from_integer(2.into()));
        assert_eq!(sq.support_value(&qvec(&[-1, 0])).unwrap(), Rat::zero());
        let p = Polytope::point(qvec(&[3, 7]));
        assert_eq!(
            p.support_value(&qvec(&[2, -1])).unwrap(),
            Rat::from_integer((3 * 2 - 7).into())
        );
    }

    #[test]
    fn lattice_points_counts() {
        let seg = Polytope::from_ints(&[&[0], &[5]]);
        assert_eq!(seg.lattice_points().unwrap().len(), 6);
        let sq = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(sq.lattice_points().unwrap().len(), 4);
        let tri = Polytope::from_ints(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(tri.lattice_points().unwrap().len(), 6);
    }

    #[test]
    fn faces_of_square() {
        let sq = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let faces = sq.faces().unwrap();
        // 4 vertices + 4 edges + the square
        assert_eq!(faces.len(), 9);
    }

    #[test]
    fn hull_3d_cube() {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(qvec(&[x, y, z]));
                }
            }
        }
        pts.push(qvec_frac(&[(1, 2), (1, 2), (1, 2)]));
        let cube = Polytope::hull(&pts).unwrap();
        assert_eq!(cube.dim(), 3);
        assert_eq!(cube.vertices().len(), 8);
        assert_eq!(cube.facets().len(), 6);
        assert!(cube.contains(&qvec_frac(&[(1, 2), (1, 2), (1, 2)])));
        assert!(!cube.contains(&qvec(&[2, 0, 0])));
        assert_eq!(cube.lattice_points().unwrap().len(), 8);
        // 8 vertices + 12 edges + 6 facets + cube
        assert_eq!(cube.faces().unwrap().len(), 27);
    }

    #[test]
    fn contains_on_segment_and_polygon() {
        let seg = Polytope::from_ints(&[&[0, 0], &[2, 2]]);
        assert!(seg.contains(&qvec(&[1, 1])));
        assert!(!seg.contains(&qvec(&[3, 3])));
        assert!(!seg.contains(&qvec(&[1, 0])));
        let tri = Polytope::from_ints(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert!(tri.contains(&qvec_frac(&[(1, 2), (1, 2)])));
        assert!(tri.contains(&qvec(&[1, 1])));
        assert!(!tri.contains(&qvec(&[2, 1])));
    }

    #[test]
    fn primitive_direction_reduces() {
        assert_eq!(primitive_direction(&qvec(&[4, 6])), qvec(&[2, 3]));
        assert_eq!(
            primitive_direction(&qvec_frac(&[(1, 2), (1, 3)])),
            qvec(&[3, 2])
        );
        assert_eq!(primitive_direction(&qvec(&[0, -5])), qvec(&[0, -1]));
    }
}
