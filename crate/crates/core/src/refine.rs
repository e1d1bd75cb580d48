//! Cell-by-cell sample points for arrangements of segments and points in
//! the plane.
//!
//! Piecewise-constant functions whose breaks lie on the supporting lines of
//! the input segments are constant on every cell of the full line
//! arrangement; the sample set below hits every cell of every dimension, so
//! comparing two such functions on it is an exact decision.

use num_traits::{One, Signed, Zero};

use crate::polytope::primitive_direction;
use crate::vector::{QVec, Vector};
use crate::Rat;

/// A line `normal . x = offset` with a canonical primitive integer normal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Line {
    pub normal: QVec,
    pub offset: Rat,
}

impl Line {
    /// The supporting line of a nondegenerate segment.
    pub fn through(a: &QVec, b: &QVec) -> Line {
        let d = b - a;
        assert!(!d.is_zero());
        let mut n = primitive_direction(&Vector::new(vec![d[1].clone(), -d[0].clone()]));
        if n[0].is_negative() || (n[0].is_zero() && n[1].is_negative()) {
            n = -&n;
        }
        let offset = n.dot(a);
        Line { normal: n, offset }
    }

    pub fn contains(&self, p: &QVec) -> bool {
        self.normal.dot(p) == self.offset
    }

    /// Intersection point of two non-parallel lines.
    pub fn intersect(&self, other: &Line) -> Option<QVec> {
        let det = self.normal.cross2(&other.normal);
        if det.is_zero() {
            return None;
        }
        let x = (self.offset.clone() * other.normal[1].clone()
            - other.offset.clone() * self.normal[1].clone())
            / det.clone();
        let y = (self.normal[0].clone() * other.offset.clone()
            - other.normal[0].clone() * self.offset.clone())
            / det;
        Some(Vector::new(vec![x, y]))
    }

    /// A direction vector of the line.
    pub fn direction(&self) -> QVec {
        Vector::new(vec![-self.normal[1].clone(), self.normal[0].clone()])
    }
}

/// Samples covering every cell of the arrangement of the given lines and
/// isolated points.
pub struct SampleSet {
    /// One sample per 0- and 1-cell (the critical points and the midpoints
    /// along each line), plus the isolated input points.
    pub lower_dim: Vec<QVec>,
    /// One interior sample per 2-cell.
    pub full_dim: Vec<QVec>,
}

impl SampleSet {
    pub fn all(&self) -> impl Iterator<Item = &QVec> {
        self.lower_dim.iter().chain(self.full_dim.iter())
    }
}

pub fn sample_arrangement(lines: &[Line], points: &[QVec]) -> SampleSet {
    let mut lines = lines.to_vec();
    lines.sort();
    lines.dedup();

    let mut criticals: Vec<QVec> = points.to_vec();
    for (i, a) in lines.iter().enumerate() {
        for b in lines.iter().skip(i + 1) {
            if let Some(p) = a.intersect(b) {
                criticals.push(p);
            }
        }
    }
    criticals.sort();
    criticals.dedup();

    let one = Rat::one();
    let two = Rat::from_integer(2.into());
    let mut lower_dim = criticals.clone();

    // 1-cells: per line, midpoints between consecutive critical parameters
    // plus a point beyond each end.
    for line in &lines {
        let d = line.direction();
        let anchor = if line.normal[0].is_zero() {
            // horizontal line: anchor at its y-intercept
            Vector::new(vec![
                Rat::zero(),
                line.offset.clone() / line.normal[1].clone(),
            ])
        } else {
            Vector::new(vec![
                line.offset.clone() / line.normal[0].clone(),
                Rat::zero(),
            ])
        };
        let mut ts: Vec<Rat> = criticals
            .iter()
            .filter(|p| line.contains(p))
            .map(|p| (p - &anchor).dot(&d))
            .collect();
        ts.sort();
        ts.dedup();
        if ts.is_empty() {
            ts.push(Rat::zero());
        }
        let dd = d.dot(&d);
        let mut params: Vec<Rat> = Vec::new();
        params.push(ts[0].clone() - dd.clone());
        params.push(ts[ts.len() - 1].clone() + dd.clone());
        for w in ts.windows(2) {
            params.push((w[0].clone() + w[1].clone()) / two.clone());
        }
        for t in params {
            lower_dim.push(&anchor + &d.scale(&(t / dd.clone())));
        }
    }

    // 2-cells: vertical slabs between consecutive critical x-coordinates,
    // sampled at a mid-x column against all non-vertical lines.
    let mut xs: Vec<Rat> = criticals.iter().map(|p| p[0].clone()).collect();
    xs.sort();
    xs.dedup();
    if xs.is_empty() {
        xs.push(Rat::zero());
    }
    let mut columns: Vec<Rat> = Vec::new();
    columns.push(xs[0].clone() - one.clone());
    columns.push(xs[xs.len() - 1].clone() + one.clone());
    for w in xs.windows(2) {
        columns.push((w[0].clone() + w[1].clone()) / two.clone());
    }
    let mut full_dim = Vec::new();
    for x in columns {
        let mut ys: Vec<Rat> = lines
            .iter()
            .filter(|l| !l.normal[1].is_zero())
            .map(|l| (l.offset.clone() - l.normal[0].clone() * x.clone()) / l.normal[1].clone())
            .collect();
        ys.sort();
        ys.dedup();
        if ys.is_empty() {
            ys.push(Rat::zero());
        }
        let mut samples_y: Vec<Rat> = Vec::new();
        samples_y.push(ys[0].clone() - one.clone());
        samples_y.push(ys[ys.len() - 1].clone() + one.clone());
        for w in ys.windows(2) {
            samples_y.push((w[0].clone() + w[1].clone()) / two.clone());
        }
        for y in samples_y {
            full_dim.push(Vector::new(vec![x.clone(), y]));
        }
    }

    lower_dim.sort();
    lower_dim.dedup();
    full_dim.sort();
    full_dim.dedup();
    SampleSet {
        lower_dim,
        full_dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::qvec;

    #[test]
    fn square_arrangement_samples_hit_interior() {
        let lines = vec![
            Line::through(&qvec(&[0, 0]), &qvec(&[1, 0])),
            Line::through(&qvec(&[0, 1]), &qvec(&[1, 1])),
            Line::through(&qvec(&[0, 0]), &qvec(&[0, 1])),
            Line::through(&qvec(&[1, 0]), &qvec(&[1, 1])),
        ];
        let s = sample_arrangement(&lines, &[]);
        // interior cell of the unit square must have a sample
        assert!(s.full_dim.iter().any(|p| {
            p[0].is_positive()
                && p[1].is_positive()
                && p[0] < Rat::one()
                && p[1] < Rat::one()
        }));
        // corners are critical points
        assert!(s.lower_dim.contains(&qvec(&[1, 1])));
    }

    #[test]
    fn line_canonicalization() {
        let a = Line::through(&qvec(&[0, 0]), &qvec(&[2, 2]));
        let b = Line::through(&qvec(&[3, 3]), &qvec(&[1, 1]));
        assert_eq!(a, b);
    }
}
