//! Exact planar arrangements of line segments.
//!
//! Segments are split at every pairwise intersection, the resulting graph is
//! traversed as a half-edge structure (faces kept on the left), and the
//! bounded complementary regions are reported with their boundary cycles and
//! an interior sample point. All computation is exact.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polytope::compare_angles;
use crate::vector::{QVec, Vector};
use crate::Rat;

/// A bounded face of the complement of a union of segments.
#[derive(Clone, Debug)]
pub struct Region {
    /// Outer boundary, counterclockwise. Vertices may repeat where the
    /// boundary pinches through a cut vertex or runs along a dangling edge.
    pub outer: Vec<QVec>,
    /// Inner boundaries (clockwise), one per component nested in this face.
    pub holes: Vec<Vec<QVec>>,
    /// A point in the open interior of the face.
    pub sample: QVec,
}

/// Splits the segments at all pairwise intersections, returning unit edges
/// with pairwise disjoint interiors (overlapping collinear parts merged).
pub fn split_segments(segments: &[(QVec, QVec)]) -> Result<Vec<(QVec, QVec)>> {
    for (a, b) in segments {
        if a == b {
            return Err(Error::DegenerateSegment);
        }
    }
    let boxes: Vec<BBox> = segments.iter().map(seg_bbox).collect();
    let mut edges: BTreeSet<(QVec, QVec)> = BTreeSet::new();
    for (i, (a, b)) in segments.iter().enumerate() {
        let d = b - a;
        let dd = d.dot(&d);
        // breakpoints as parameters along [a, b]
        let mut ts: Vec<Rat> = vec![Rat::zero(), Rat::from_integer(1.into())];
        let param = |p: &QVec| -> Option<Rat> {
            let w = p - a;
            if w.cross2(&d).is_zero() {
                let t = w.dot(&d) / dd.clone();
                if !t.is_negative() && t <= Rat::from_integer(1.into()) {
                    return Some(t);
                }
            }
            None
        };
        for (j, (c, e)) in segments.iter().enumerate() {
            if i == j || !bbox_overlap(&boxes[i], &boxes[j]) {
                continue;
            }
            for p in [c, e] {
                if let Some(t) = param(p) {
                    ts.push(t);
                }
            }
            if let Some(p) = segment_intersection((a, b), (c, e)) {
                if let Some(t) = param(&p) {
                    ts.push(t);
                }
            }
        }
        ts.sort();
        ts.dedup();
        for w in ts.windows(2) {
            let p = a + &d.scale(&w[0]);
            let q = a + &d.scale(&w[1]);
            let (p, q) = if p <= q { (p, q) } else { (q, p) };
            edges.insert((p, q));
        }
    }
    Ok(edges.into_iter().collect())
}

/// Proper intersection point of two segments, endpoints included; `None`
/// for parallel or disjoint segments.
fn segment_intersection(s: (&QVec, &QVec), t: (&QVec, &QVec)) -> Option<QVec> {
    let d1 = s.1 - s.0;
    let d2 = t.1 - t.0;
    let det = d1.cross2(&d2);
    if det.is_zero() {
        return None;
    }
    let w = t.0 - s.0;
    // range-check the parameter numerators against det before dividing
    let un = w.cross2(&d2);
    let vn = w.cross2(&d1);
    let in_01 = |num: &Rat| {
        if det.is_positive() {
            !num.is_negative() && num <= &det
        } else {
            !num.is_positive() && num >= &det
        }
    };
    if in_01(&un) && in_01(&vn) {
        Some(s.0 + &d1.scale(&(un / det)))
    } else {
        None
    }
}

type BBox = ([Rat; 2], [Rat; 2]);

fn seg_bbox((a, b): &(QVec, QVec)) -> BBox {
    let lo = |c: usize| if a[c] <= b[c] { a[c].clone() } else { b[c].clone() };
    let hi = |c: usize| if a[c] >= b[c] { a[c].clone() } else { b[c].clone() };
    ([lo(0), lo(1)], [hi(0), hi(1)])
}

fn bbox_overlap(p: &BBox, q: &BBox) -> bool {
    (0..2).all(|c| p.0[c] <= q.1[c] && q.0[c] <= p.1[c])
}

struct HalfEdgeGraph {
    verts: Vec<QVec>,
    /// CCW-sorted out-neighbor vertex indices per vertex.
    out: Vec<Vec<usize>>,
}

impl HalfEdgeGraph {
    fn build(edges: &[(QVec, QVec)]) -> HalfEdgeGraph {
        let mut index: BTreeMap<QVec, usize> = BTreeMap::new();
        let mut verts: Vec<QVec> = Vec::new();
        let id = |p: &QVec, verts: &mut Vec<QVec>, index: &mut BTreeMap<QVec, usize>| {
            *index.entry(p.clone()).or_insert_with(|| {
                verts.push(p.clone());
                verts.len() - 1
            })
        };
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (a, b) in edges {
            let u = id(a, &mut verts, &mut index);
            let v = id(b, &mut verts, &mut index);
            out.resize(verts.len().max(out.len()), Vec::new());
            out[u].push(v);
            out[v].push(u);
        }
        out.resize(verts.len(), Vec::new());
        for (u, nbrs) in out.iter_mut().enumerate() {
            let base = verts[u].clone();
            nbrs.sort_by(|&a, &b| compare_angles(&(&verts[a] - &base), &(&verts[b] - &base)));
            nbrs.dedup();
        }
        HalfEdgeGraph { verts, out }
    }

    /// The half-edge following `(u, v)` in the face-on-the-left traversal:
    /// the clockwise-next outgoing edge from the reversal at `v`.
    fn next(&self, u: usize, v: usize) -> (usize, usize) {
        let nbrs = &self.out[v];
        let k = nbrs.iter().position(|&w| w == u).expect("reverse edge");
        let w = nbrs[(k + nbrs.len() - 1) % nbrs.len()];
        (v, w)
    }
}

fn cycle_signed_area_twice(verts: &[QVec], cycle: &[usize]) -> Rat {
    let n = cycle.len();
    let mut acc = Rat::zero();
    for i in 0..n {
        acc += verts[cycle[i]].cross2(&verts[cycle[(i + 1) % n]]);
    }
    acc
}

/// The bounded faces of the complement of the union of the given segments.
pub fn complement_regions(segments: &[(QVec, QVec)]) -> Result<Vec<Region>> {
    let edges = split_segments(segments)?;
    if edges.is_empty() {
        return Ok(Vec::new());
    }
    let g = HalfEdgeGraph::build(&edges);

    // trace the face cycle through every half-edge exactly once
    let mut cycle_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for u in 0..g.verts.len() {
        for &v in &g.out[u] {
            if cycle_of.contains_key(&(u, v)) {
                continue;
            }
            let id = cycles.len();
            let mut cyc = Vec::new();
            let mut h = (u, v);
            loop {
                cycle_of.insert(h, id);
                cyc.push(h.0);
                h = g.next(h.0, h.1);
                if h == (u, v) {
                    break;
                }
            }
            cycles.push(cyc);
        }
    }

    let areas: Vec<Rat> = cycles
        .iter()
        .map(|c| cycle_signed_area_twice(&g.verts, c))
        .collect();

    // Assign each clockwise contour to the face containing it by shooting a
    // horizontal ray leftward from its leftmost-lowest vertex; the first
    // downward-directed half-edge hit has the containing face on its left.
    // `None` means the unbounded face.
    let mut owner: Vec<Option<Option<usize>>> = vec![None; cycles.len()];
    for id in 0..cycles.len() {
        if areas[id].is_positive() {
            owner[id] = Some(Some(id));
        }
    }
    let hit_cycle = |id: usize| -> Option<usize> {
        let p = cycles[id]
            .iter()
            .map(|&i| &g.verts[i])
            .min_by_key(|v| (v[0].clone(), v[1].clone()))
            .unwrap();
        let mut best: Option<(Rat, usize)> = None; // (crossing x, hit cycle)
        for (&(u, v), &cid) in &cycle_of {
            let (a, b) = (&g.verts[u], &g.verts[v]);
            // downward-directed half-edges only; half-open in y
            if a[1] <= b[1] {
                continue;
            }
            if !(b[1] <= p[1] && p[1] < a[1]) {
                continue;
            }
            let x = a[0].clone()
                + (p[1].clone() - a[1].clone()) * (b[0].clone() - a[0].clone())
                    / (b[1].clone() - a[1].clone());
            if x >= p[0] {
                continue;
            }
            if best.as_ref().map_or(true, |(bx, _)| x > *bx) {
                best = Some((x, cid));
            }
        }
        best.map(|(_, cid)| cid)
    };
    for id in 0..cycles.len() {
        if owner[id].is_some() {
            continue;
        }
        // resolve through chains of clockwise contours
        let mut path = vec![id];
        let mut cur = id;
        let result = loop {
            match hit_cycle(cur) {
                None => break None,
                Some(c) => match owner[c] {
                    Some(o) => break o,
                    None => {
                        path.push(c);
                        cur = c;
                    }
                },
            }
        };
        for n in path {
            owner[n] = Some(result);
        }
    }

    let mut regions = Vec::new();
    for id in 0..cycles.len() {
        if !areas[id].is_positive() {
            continue;
        }
        let outer: Vec<QVec> = cycles[id].iter().map(|&i| g.verts[i].clone()).collect();
        let holes: Vec<Vec<QVec>> = (0..cycles.len())
            .filter(|&h| h != id && owner[h] == Some(Some(id)))
            .map(|h| cycles[h].iter().map(|&i| g.verts[i].clone()).collect())
            .collect();
        let sample = interior_sample(&g, &cycles[id], &edges);
        regions.push(Region {
            outer,
            holes,
            sample,
        });
    }
    Ok(regions)
}

/// A point in the open interior of the face with the given counterclockwise
/// boundary cycle: walk inward (to the left) from a boundary edge midpoint,
/// half the distance to the first edge the ray meets.
fn interior_sample(g: &HalfEdgeGraph, cycle: &[usize], edges: &[(QVec, QVec)]) -> QVec {
    let n = cycle.len();
    let (u, v) = (cycle[0], cycle[1 % n]);
    let a = &g.verts[u];
    let b = &g.verts[v];
    let half = Rat::new(1.into(), 2.into());
    let m = &(a + b).scale(&half);
    let d = b - a;
    // inward (left) normal of the CCW boundary edge
    let nrm = Vector::new(vec![-d[1].clone(), d[0].clone()]);
    // smallest positive t with m + t*nrm on some edge other than (a, b)
    let mut tmin: Option<Rat> = None;
    for (p, q) in edges {
        let e = q - p;
        let det = nrm.cross2(&e);
        if det.is_zero() {
            continue;
        }
        let w = p - m;
        let t = w.cross2(&e) / det.clone();
        let s = w.cross2(&nrm) / det;
        let in_01 = |x: &Rat| !x.is_negative() && *x <= Rat::from_integer(1.into());
        if t.is_positive() && in_01(&s) && tmin.as_ref().map_or(true, |tm| t < *tm) {
            tmin = Some(t);
        }
    }
    let t = tmin.expect("ray from a bounded face boundary must exit") * half;
    m + &nrm.scale(&t)
}
