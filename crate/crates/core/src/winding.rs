//! Winding-number chains of closed planar polylines, exact integration of
//! polynomial forms over them, and Gauss-type maps built from piecewise
//! linear support data.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::arrangement::{complement_regions, Region};
use crate::chain::{inverse, planar_geometry, Chain};
use crate::error::{Error, Result};
use crate::fan::analogous;
use crate::poly::{uni_integral_01, MultiPoly};
use crate::polytope::Polytope;
use crate::refine::{sample_arrangement, Line};
use crate::vector::{QVec, Vector};
use crate::Rat;

/// A closed oriented polyline in the plane, possibly self-intersecting;
/// counterclockwise is the positive orientation. The final point connects
/// back to the first. A single-point cycle is the degenerate constant map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PLCycle {
    points: Vec<QVec>,
}

impl PLCycle {
    /// Builds a cycle, collapsing consecutive duplicate points (including
    /// around the wrap).
    pub fn new(points: Vec<QVec>) -> Result<PLCycle> {
        let mut pts: Vec<QVec> = Vec::new();
        for p in points {
            if p.0.len() != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    got: p.0.len(),
                });
            }
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
        while pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
        if pts.is_empty() {
            return Err(Error::NotACycle);
        }
        Ok(PLCycle { points: pts })
    }

    pub fn points(&self) -> &[QVec] {
        &self.points
    }

    pub fn is_degenerate(&self) -> bool {
        self.points.len() < 2
    }

    /// The oriented edges of the cycle, empty for a degenerate cycle.
    pub fn segments(&self) -> Vec<(QVec, QVec)> {
        if self.is_degenerate() {
            return Vec::new();
        }
        let n = self.points.len();
        (0..n)
            .map(|i| (self.points[i].clone(), self.points[(i + 1) % n].clone()))
            .collect()
    }

    pub fn reversed(&self) -> PLCycle {
        let mut pts = self.points.clone();
        pts.reverse();
        PLCycle { points: pts }
    }

    pub fn translate(&self, v: &QVec) -> PLCycle {
        PLCycle {
            points: self.points.iter().map(|p| p + v).collect(),
        }
    }
}

/// Signed number of times the cycle wraps around `a`: signed crossings of
/// the horizontal ray from `a` toward `+x`, counted half-open in `y` so
/// that crossings through vertices are counted exactly once.
pub fn winding_number(gamma: &PLCycle, a: &QVec) -> Result<i64> {
    let mut w = 0i64;
    for (p, q) in gamma.segments() {
        if point_on_segment(a, &p, &q) {
            return Err(Error::PointOnCurve);
        }
        let (lo, hi, sign) = if p[1] < q[1] {
            (&p, &q, 1i64) // upward edge: curve crosses the ray CCW
        } else if q[1] < p[1] {
            (&q, &p, -1i64)
        } else {
            continue; // horizontal edge never crosses the open ray
        };
        if !(lo[1] <= a[1] && a[1] < hi[1]) {
            continue;
        }
        // x-coordinate where the edge meets the ray's horizontal line
        let x = lo[0].clone()
            + (a[1].clone() - lo[1].clone()) * (hi[0].clone() - lo[0].clone())
                / (hi[1].clone() - lo[1].clone());
        if x > a[0] {
            w += sign;
        }
    }
    if gamma.is_degenerate() && &gamma.points[0] == a {
        return Err(Error::PointOnCurve);
    }
    Ok(w)
}

fn point_on_segment(a: &QVec, p: &QVec, q: &QVec) -> bool {
    let d = q - p;
    let w = a - p;
    if !w.cross2(&d).is_zero() {
        return false;
    }
    let t = w.dot(&d);
    !t.is_negative() && t <= d.dot(&d)
}

/// The signed sum of bounded complement regions of a cycle, each weighted
/// by the winding number of the cycle around it.
#[derive(Clone, Debug)]
pub struct WindingChain {
    /// All bounded regions of the complement, with their winding weights
    /// (possibly zero). Unbounded regions always have weight zero.
    pub regions: Vec<(i64, Region)>,
}

pub fn winding_chain(gamma: &PLCycle) -> Result<WindingChain> {
    let segs = gamma.segments();
    let regions = if segs.is_empty() {
        Vec::new()
    } else {
        complement_regions(&segs)?
    };
    let mut out = Vec::new();
    for r in regions {
        let w = winding_number(gamma, &r.sample)?;
        out.push((w, r));
    }
    Ok(WindingChain { regions: out })
}

/// `sum_U W(U) * integral_U P dx dy`, exactly, by Green's theorem on each
/// oriented boundary loop.
pub fn integrate_form_over_chain(chain: &WindingChain, p: &MultiPoly<Rat>) -> Result<Rat> {
    if p.vars() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: p.vars(),
        });
    }
    let q = p.antiderivative(0);
    let mut acc = Rat::zero();
    for (w, region) in &chain.regions {
        if *w == 0 {
            continue;
        }
        let mut int = integrate_q_dy_loop(&q, &region.outer);
        for hole in &region.holes {
            int += integrate_q_dy_loop(&q, hole);
        }
        acc += Rat::from_integer((*w).into()) * int;
    }
    Ok(acc)
}

/// `oint Q dy` along one closed loop.
fn integrate_q_dy_loop(q: &MultiPoly<Rat>, ring: &[QVec]) -> Rat {
    let n = ring.len();
    let mut acc = Rat::zero();
    for i in 0..n {
        let a = &ring[i];
        let b = &ring[(i + 1) % n];
        let u = q.restrict_to_segment(&a.0, &b.0);
        acc += uni_integral_01(&u) * (b[1].clone() - a[1].clone());
    }
    acc
}

/// Exact line integral of the 1-form `Q dy` along the oriented cycle.
pub fn integrate_pullback(gamma: &PLCycle, q: &MultiPoly<Rat>) -> Result<Rat> {
    if q.vars() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: q.vars(),
        });
    }
    let mut acc = Rat::zero();
    for (a, b) in gamma.segments() {
        let u = q.restrict_to_segment(&a.0, &b.0);
        acc += uni_integral_01(&u) * (b[1].clone() - a[1].clone());
    }
    Ok(acc)
}

/// Piecewise-linear support data: a rational value for each primitive facet
/// normal of a reference polygon.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportFunctionPL {
    delta0: Polytope,
    values: BTreeMap<QVec, Rat>,
}

impl SupportFunctionPL {
    pub fn new(delta0: Polytope, values: BTreeMap<QVec, Rat>) -> Result<SupportFunctionPL> {
        if delta0.ambient() != 2 || delta0.dim() != 2 {
            return Err(Error::NotFullDimensional);
        }
        for f in delta0.facets() {
            if !values.contains_key(&f.normal) {
                return Err(Error::Invalid(format!(
                    "missing support value for facet normal {:?}",
                    f.normal
                )));
            }
        }
        Ok(SupportFunctionPL { delta0, values })
    }

    /// The support data of a polytope, read off against the facet normals
    /// of `delta0`.
    pub fn of_polytope(delta0: &Polytope, delta: &Polytope) -> Result<SupportFunctionPL> {
        let mut values = BTreeMap::new();
        for f in delta0.facets() {
            values.insert(f.normal.clone(), delta.support_value(&f.normal)?);
        }
        SupportFunctionPL::new(delta0.clone(), values)
    }

    pub fn delta0(&self) -> &Polytope {
        &self.delta0
    }

    pub fn value(&self, normal: &QVec) -> &Rat {
        &self.values[normal]
    }

    pub fn with_value(&self, normal: &QVec, h: Rat) -> Result<SupportFunctionPL> {
        if !self.values.contains_key(normal) {
            return Err(Error::Invalid(format!("unknown facet normal {normal:?}")));
        }
        let mut values = self.values.clone();
        values.insert(normal.clone(), h);
        SupportFunctionPL::new(self.delta0.clone(), values)
    }

    /// `lambda * self + mu * other` on the common reference polygon.
    pub fn combine(&self, lam: &Rat, other: &SupportFunctionPL, mu: &Rat) -> Result<SupportFunctionPL> {
        if self.delta0 != other.delta0 {
            return Err(Error::NotAnalogous);
        }
        let values = self
            .values
            .iter()
            .map(|(n, h)| {
                (
                    n.clone(),
                    lam.clone() * h.clone() + mu.clone() * other.values[n].clone(),
                )
            })
            .collect();
        SupportFunctionPL::new(self.delta0.clone(), values)
    }
}

/// The canonical Gauss-type map of the support data: each vertex of the
/// reference polygon goes to the intersection of its two adjacent
/// translated support lines, visited in boundary order. Vertexwise linear
/// in the support values.
pub fn gauss_type_map(h: &SupportFunctionPL) -> Result<PLCycle> {
    let facets = h.delta0().facets();
    let k = facets.len();
    let mut pts = Vec::with_capacity(k);
    for i in 0..k {
        let fi = &facets[i];
        let fj = &facets[(i + 1) % k];
        let li = Line {
            normal: fi.normal.clone(),
            offset: h.value(&fi.normal).clone(),
        };
        let lj = Line {
            normal: fj.normal.clone(),
            offset: h.value(&fj.normal).clone(),
        };
        let p = li
            .intersect(&lj)
            .ok_or_else(|| Error::Invalid("parallel adjacent facet normals".into()))?;
        pts.push(p);
    }
    PLCycle::new(pts)
}

/// `sum_U W(U) Vol(U)` of the winding chain of the canonical Gauss-type map.
pub fn virtual_volume_from_support(h: &SupportFunctionPL) -> Result<Rat> {
    let chain = winding_chain(&gauss_type_map(h)?)?;
    integrate_form_over_chain(&chain, &MultiPoly::one(2))
}

/// Checks that the virtual polytope `chi_{D1} * chi_{D2}^{-1}` of the chain
/// algebra, after discarding lower-dimensional pieces, equals the winding
/// chain of the canonical Gauss-type map of `H = h(D1) - h(D2)` — compared
/// as functions on one interior sample of every 2-cell of the joint
/// refinement.
pub fn chain_winding_check(
    h: &SupportFunctionPL,
    delta1: &Polytope,
    delta2: &Polytope,
) -> Result<bool> {
    for d in [delta1, delta2] {
        if !analogous(d, h.delta0())? {
            return Err(Error::NotAnalogous);
        }
    }
    for f in h.delta0().facets() {
        let expect =
            delta1.support_value(&f.normal)? - delta2.support_value(&f.normal)?;
        if *h.value(&f.normal) != expect {
            return Err(Error::Invalid(
                "support values do not match the witness difference".into(),
            ));
        }
    }
    let gamma = gauss_type_map(h)?;
    let chain = Chain::of_polytope(delta1)
        .product(&inverse(delta2)?)?
        .truncate_lower_dim();

    // joint refinement: supporting lines of the chain and of the cycle
    let (mut lines, points) = planar_geometry(&[&chain]);
    for (a, b) in gamma.segments() {
        lines.push(Line::through(&a, &b));
    }
    if lines.is_empty() {
        // degenerate: a point cycle against a chain with no 2D terms
        return Ok(chain.is_zero_chain());
    }
    let samples = sample_arrangement(&lines, &points);
    for x in &samples.full_dim {
        let lhs = chain.evaluate(x);
        let rhs = Rat::from_integer(winding_number(&gamma, x)?.into());
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Numeric demonstrator for smooth support functions: traces the gradient
/// of a positively homogeneous `H` at `n` directions on the unit circle and
/// returns the signed area enclosed by the resulting cycle.
///
/// Inputs are snapped to exact rationals at machine precision; the result
/// converges to the volume at rate `O(1/n^2)` for smooth strictly convex
/// `H`.
pub fn smooth_support_demo(
    grad: impl Fn(f64, f64) -> (f64, f64),
    n: usize,
) -> Result<f64> {
    if n < 16 {
        return Err(Error::SizeBound(format!("need at least 16 samples, got {n}")));
    }
    let mut pts = Vec::with_capacity(n);
    for k in 0..n {
        let th = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
        let (gx, gy) = grad(th.cos(), th.sin());
        if !gx.is_finite() || !gy.is_finite() {
            return Err(Error::Invalid(format!(
                "gradient undefined at sample direction {k}"
            )));
        }
        // snap to a 2^-24 grid: the quantization error is far below the
        // demonstrator's tolerance and keeps the exact arithmetic fast
        let snap = |v: f64| {
            let den = 1i64 << 24;
            Rat::new(((v * den as f64).round() as i64).into(), den.into())
        };
        pts.push(Vector::new(vec![snap(gx), snap(gy)]));
    }
    let gamma = PLCycle::new(pts)?;
    let chain = winding_chain(&gamma)?;
    let vol = integrate_form_over_chain(&chain, &MultiPoly::one(2))?;
    let num: f64 = vol.numer().to_string().parse().unwrap_or(f64::NAN);
    let den: f64 = vol.denom().to_string().parse().unwrap_or(f64::NAN);
    Ok(num / den)
}
