//! Affine subspaces of rational space in canonical form, and their exact
//! intersections.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{nullspace, rref, solve};
use crate::vector::{QVec, Vector};
use crate::Rat;

/// An affine subspace `base + span(dirs)` in canonical form: the direction
/// basis is in reduced row echelon form and the base point has zero entries
/// in every pivot coordinate, so equal subspaces have equal fields.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct AffineSubspace {
    ambient: usize,
    base: QVec,
    dirs: Vec<QVec>,
}

impl AffineSubspace {
    pub fn new(base: QVec, dirs: Vec<QVec>) -> Result<AffineSubspace> {
        let ambient = base.0.len();
        for d in &dirs {
            if d.0.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: d.0.len(),
                });
            }
        }
        let mut m: Vec<Vec<Rat>> = dirs.iter().map(|d| d.0.clone()).collect();
        let pivots = rref(&mut m);
        m.truncate(pivots.len());
        // zero out the pivot coordinates of the base point
        let mut b = base.0;
        for (row, &pc) in m.iter().zip(&pivots) {
            let f = b[pc].clone();
            for (bj, rj) in b.iter_mut().zip(row) {
                *bj -= f.clone() * rj.clone();
            }
        }
        Ok(AffineSubspace {
            ambient,
            base: Vector::new(b),
            dirs: m.into_iter().map(Vector::new).collect(),
        })
    }

    /// A single point.
    pub fn point(p: QVec) -> AffineSubspace {
        AffineSubspace::new(p, vec![]).expect("point is always valid")
    }

    /// The line through two distinct points.
    pub fn line_through(a: &QVec, b: &QVec) -> Result<AffineSubspace> {
        let d = b - a;
        if d.is_zero() {
            return Err(Error::DegenerateSegment);
        }
        AffineSubspace::new(a.clone(), vec![d])
    }

    /// The hyperplane `normal . x = offset`.
    pub fn hyperplane(normal: &QVec, offset: &Rat) -> Result<AffineSubspace> {
        let n = normal.0.len();
        let i = normal
            .0
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::Invalid("zero normal vector".into()))?;
        let mut base = Vector::zero(n);
        base.0[i] = offset.clone() / normal[i].clone();
        let dirs = nullspace(&[normal.0.clone()])
            .into_iter()
            .map(Vector::new)
            .collect();
        AffineSubspace::new(base, dirs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dirs.len()
    }

    pub fn base(&self) -> &QVec {
        &self.base
    }

    pub fn dirs(&self) -> &[QVec] {
        &self.dirs
    }

    pub fn translate(&self, y: &QVec) -> Result<AffineSubspace> {
        AffineSubspace::new(&self.base + y, self.dirs.clone())
    }

    /// Rows `n` with `n . x = n . base` cutting out this subspace.
    pub fn equations(&self) -> Vec<(Vec<Rat>, Rat)> {
        let m: Vec<Vec<Rat>> = self.dirs.iter().map(|d| d.0.clone()).collect();
        let normals = if m.is_empty() {
            // a point: coordinate equations
            (0..self.ambient)
                .map(|i| {
                    let mut e = vec![Rat::zero(); self.ambient];
                    e[i] = Rat::from_integer(1.into());
                    e
                })
                .collect()
        } else {
            nullspace(&m)
        };
        normals
            .into_iter()
            .map(|n| {
                let rhs = Vector::new(n.clone()).dot(&self.base);
                (n, rhs)
            })
            .collect()
    }

    pub fn contains(&self, p: &QVec) -> bool {
        self.equations()
            .iter()
            .all(|(n, rhs)| Vector::new(n.clone()).dot(p) == *rhs)
    }

    /// The linear subspace parallel to this one (through the origin).
    pub fn direction_space(&self) -> AffineSubspace {
        AffineSubspace {
            ambient: self.ambient,
            base: Vector::zero(self.ambient),
            dirs: self.dirs.clone(),
        }
    }
}

/// Exact intersection of affine subspaces; `None` when empty.
pub fn intersect(subspaces: &[&AffineSubspace]) -> Result<Option<AffineSubspace>> {
    if subspaces.is_empty() {
        return Err(Error::EmptyInput);
    }
    let ambient = subspaces[0].ambient();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for s in subspaces {
        if s.ambient() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                got: s.ambient(),
            });
        }
        for (n, r) in s.equations() {
            rows.push(n);
            rhs.push(r);
        }
    }
    if rows.is_empty() {
        // every member is the whole space
        return Ok(Some(AffineSubspace::new(
            Vector::zero(ambient),
            (0..ambient)
                .map(|i| {
                    let mut e = Vector::zero(ambient);
                    e.0[i] = Rat::from_integer(1.into());
                    e
                })
                .collect(),
        )?));
    }
    let Some(p) = solve(&rows, &rhs) else {
        return Ok(None);
    };
    let dirs = nullspace(&rows).into_iter().map(Vector::new).collect();
    Ok(Some(AffineSubspace::new(Vector::new(p), dirs)?))
}

/// The biggest linear subspace parallel to every member of a hyperplane
/// family: the intersection of their direction spaces.
pub fn parallel_core(hyperplanes: &[AffineSubspace]) -> Result<AffineSubspace> {
    if hyperplanes.is_empty() {
        return Err(Error::EmptyInput);
    }
    let ambient = hyperplanes[0].ambient();
    let mut normals: Vec<Vec<Rat>> = Vec::new();
    for h in hyperplanes {
        if h.dim() + 1 != ambient {
            return Err(Error::NonHyperplane);
        }
        let eqs = h.equations();
        debug_assert_eq!(eqs.len(), 1);
        normals.push(eqs[0].0.clone());
    }
    let dirs = nullspace(&normals).into_iter().map(Vector::new).collect();
    AffineSubspace::new(Vector::zero(ambient), dirs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::qvec;

    #[test]
    fn crossing_lines_meet_in_a_point() {
        let a = AffineSubspace::line_through(&qvec(&[0, 0]), &qvec(&[1, 1])).unwrap();
        let b = AffineSubspace::line_through(&qvec(&[2, 0]), &qvec(&[2, 5])).unwrap();
        let p = intersect(&[&a, &b]).unwrap().unwrap();
        assert_eq!(p.dim(), 0);
        assert_eq!(p.base(), &qvec(&[2, 2]));
    }

    #[test]
    fn parallel_lines_are_disjoint() {
        let a = AffineSubspace::line_through(&qvec(&[0, 0]), &qvec(&[1, 1])).unwrap();
        let b = AffineSubspace::line_through(&qvec(&[0, 1]), &qvec(&[1, 2])).unwrap();
        assert!(intersect(&[&a, &b]).unwrap().is_none());
    }

    #[test]
    fn three_generic_planes_meet_in_a_point() {
        let p1 = AffineSubspace::hyperplane(&qvec(&[1, 0, 0]), &Rat::from_integer(1.into())).unwrap();
        let p2 = AffineSubspace::hyperplane(&qvec(&[0, 1, 0]), &Rat::from_integer(2.into())).unwrap();
        let p3 = AffineSubspace::hyperplane(&qvec(&[1, 1, 1]), &Rat::from_integer(6.into())).unwrap();
        let x = intersect(&[&p1, &p2, &p3]).unwrap().unwrap();
        assert_eq!(x.dim(), 0);
        assert_eq!(x.base(), &qvec(&[1, 2, 3]));
    }

    #[test]
    fn canonical_form_identifies_equal_subspaces() {
        let a = AffineSubspace::line_through(&qvec(&[0, 0]), &qvec(&[2, 2])).unwrap();
        let b = AffineSubspace::line_through(&qvec(&[5, 5]), &qvec(&[-1, -1])).unwrap();
        assert_eq!(a, b);
        let c = AffineSubspace::line_through(&qvec(&[0, 1]), &qvec(&[1, 2])).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn containment_and_translation() {
        let l = AffineSubspace::line_through(&qvec(&[0, 1]), &qvec(&[1, 3])).unwrap();
        assert!(l.contains(&qvec(&[2, 5])));
        assert!(!l.contains(&qvec(&[2, 4])));
        let t = l.translate(&qvec(&[0, 1])).unwrap();
        assert!(t.contains(&qvec(&[2, 6])));
    }

    #[test]
    fn parallel_core_of_line_families() {
        let mk = |a: i64, b: i64, c: i64| {
            AffineSubspace::hyperplane(&qvec(&[a, b]), &Rat::from_integer(c.into())).unwrap()
        };
        // two non-parallel lines: trivial core
        assert_eq!(parallel_core(&[mk(1, 0, 0), mk(0, 1, 3)]).unwrap().dim(), 0);
        // parallel family: one-dimensional core
        let core = parallel_core(&[mk(1, 2, 0), mk(1, 2, 5), mk(2, 4, 1)]).unwrap();
        assert_eq!(core.dim(), 1);
        assert!(core.contains(&qvec(&[-2, 1])));
        // planes in R^3 sharing the vertical direction
        let p1 = AffineSubspace::hyperplane(&qvec(&[1, 0, 0]), &Rat::zero()).unwrap();
        let p2 = AffineSubspace::hyperplane(&qvec(&[1, 1, 0]), &Rat::zero()).unwrap();
        let z = parallel_core(&[p1, p2]).unwrap();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&qvec(&[0, 0, 7])));
    }

    #[test]
    fn non_hyperplane_rejected() {
        let pt = AffineSubspace::point(qvec(&[1, 2]));
        assert_eq!(parallel_core(&[pt]), Err(Error::NonHyperplane));
    }

    #[test]
    fn intersection_of_plane_and_line_in_space() {
        let plane =
            AffineSubspace::hyperplane(&qvec(&[0, 0, 1]), &Rat::from_integer(2.into())).unwrap();
        let line =
            AffineSubspace::line_through(&qvec(&[0, 0, 0]), &qvec(&[1, 1, 1])).unwrap();
        let x = intersect(&[&plane, &line]).unwrap().unwrap();
        assert_eq!(x.dim(), 0);
        assert_eq!(x.base(), &qvec(&[2, 2, 2]));
    }
}
