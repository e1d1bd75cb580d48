//! Static SVG emission for planar output: winding chains with regions
//! color-coded by weight, segment arrangements, and polygon outlines.
//! Rendering is a pure side channel; nothing here feeds back into any
//! computed value.

use num_traits::ToPrimitive;

use crate::arrangement::Region;
use crate::polytope::Polytope;
use crate::vector::QVec;
use crate::winding::WindingChain;

fn f(x: &crate::Rat) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

struct Canvas {
    body: String,
    min: [f64; 2],
    max: [f64; 2],
}

impl Canvas {
    fn new() -> Canvas {
        Canvas {
            body: String::new(),
            min: [f64::INFINITY; 2],
            max: [f64::NEG_INFINITY; 2],
        }
    }

    fn see(&mut self, p: &QVec) {
        for c in 0..2 {
            let v = f(&p[c]);
            self.min[c] = self.min[c].min(v);
            self.max[c] = self.max[c].max(v);
        }
    }

    fn path_of_rings(&mut self, rings: &[&[QVec]]) -> String {
        let mut d = String::new();
        for ring in rings {
            for (i, p) in ring.iter().enumerate() {
                self.see(p);
                let cmd = if i == 0 { 'M' } else { 'L' };
                d.push_str(&format!("{cmd}{:.4} {:.4} ", f(&p[0]), -f(&p[1])));
            }
            d.push('Z');
        }
        d
    }

    fn finish(self) -> String {
        let (min, max) = if self.min[0].is_finite() {
            (self.min, self.max)
        } else {
            ([0.0, 0.0], [1.0, 1.0])
        };
        let m = 0.05 * (max[0] - min[0]).max(max[1] - min[1]).max(1.0);
        let (w, h) = (max[0] - min[0] + 2.0 * m, max[1] - min[1] + 2.0 * m);
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.4} {:.4} {:.4} {:.4}\">\n{}</svg>\n",
            min[0] - m,
            -max[1] - m,
            w,
            h,
            self.body
        )
    }
}

fn weight_color(w: i64) -> String {
    // blue for positive weights, red for negative, darker as |w| grows
    let a = (0.25 + 0.25 * (w.abs().min(3) as f64)).min(1.0);
    if w >= 0 {
        format!("rgba(40,90,200,{a:.2})")
    } else {
        format!("rgba(200,60,40,{a:.2})")
    }
}

/// Regions filled by winding weight, with boundary edges drawn on top.
pub fn svg_winding_chain(chain: &WindingChain) -> String {
    let mut cv = Canvas::new();
    let mut overlay = String::new();
    for (w, region) in &chain.regions {
        let rings: Vec<&[QVec]> = std::iter::once(region.outer.as_slice())
            .chain(region.holes.iter().map(|h| h.as_slice()))
            .collect();
        let d = cv.path_of_rings(&rings);
        if *w != 0 {
            cv.body.push_str(&format!(
                "<path d=\"{d}\" fill=\"{}\" fill-rule=\"evenodd\"/>\n",
                weight_color(*w)
            ));
        }
        overlay.push_str(&format!(
            "<path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"0.5%\"/>\n"
        ));
        overlay.push_str(&format!(
            "<text x=\"{:.4}\" y=\"{:.4}\" font-size=\"4%\">{w}</text>\n",
            f(&region.sample[0]),
            -f(&region.sample[1]),
        ));
    }
    cv.body.push_str(&overlay);
    cv.finish()
}

/// Bounded complement regions of a segment set, outlined and labeled.
pub fn svg_regions(regions: &[Region]) -> String {
    let mut cv = Canvas::new();
    for region in regions {
        let rings: Vec<&[QVec]> = std::iter::once(region.outer.as_slice())
            .chain(region.holes.iter().map(|h| h.as_slice()))
            .collect();
        let d = cv.path_of_rings(&rings);
        cv.body.push_str(&format!(
            "<path d=\"{d}\" fill=\"rgba(120,160,120,0.3)\" fill-rule=\"evenodd\" stroke=\"black\" stroke-width=\"0.5%\"/>\n"
        ));
    }
    cv.finish()
}

/// Plain segments.
pub fn svg_segments(segments: &[(QVec, QVec)]) -> String {
    let mut cv = Canvas::new();
    for (a, b) in segments {
        cv.see(a);
        cv.see(b);
        cv.body.push_str(&format!(
            "<line x1=\"{:.4}\" y1=\"{:.4}\" x2=\"{:.4}\" y2=\"{:.4}\" stroke=\"black\" stroke-width=\"0.5%\"/>\n",
            f(&a[0]),
            -f(&a[1]),
            f(&b[0]),
            -f(&b[1]),
        ));
    }
    cv.finish()
}

/// Polygon (or lower-dimensional polytope) outlines.
pub fn svg_polytopes(polys: &[Polytope]) -> String {
    let mut cv = Canvas::new();
    for p in polys {
        match p.dim() {
            2 => {
                let ring = p.ccw_boundary();
                let d = cv.path_of_rings(&[&ring]);
                cv.body.push_str(&format!(
                    "<path d=\"{d}\" fill=\"rgba(40,90,200,0.25)\" stroke=\"black\" stroke-width=\"0.5%\"/>\n"
                ));
            }
            1 => {
                let vs = p.vertices();
                cv.see(&vs[0]);
                cv.see(&vs[1]);
                cv.body.push_str(&format!(
                    "<line x1=\"{:.4}\" y1=\"{:.4}\" x2=\"{:.4}\" y2=\"{:.4}\" stroke=\"black\" stroke-width=\"0.5%\"/>\n",
                    f(&vs[0][0]),
                    -f(&vs[0][1]),
                    f(&vs[1][0]),
                    -f(&vs[1][1]),
                ));
            }
            _ => {
                let v = &p.vertices()[0];
                cv.see(v);
                cv.body.push_str(&format!(
                    "<circle cx=\"{:.4}\" cy=\"{:.4}\" r=\"1%\" fill=\"black\"/>\n",
                    f(&v[0]),
                    -f(&v[1]),
                ));
            }
        }
    }
    cv.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::qvec;
    use crate::winding::{winding_chain, PLCycle};

    #[test]
    fn winding_chain_svg_is_well_formed() {
        let g = PLCycle::new(vec![
            qvec(&[0, 0]),
            qvec(&[2, 0]),
            qvec(&[1, 2]),
            qvec(&[0, 0]),
            qvec(&[-2, 0]),
            qvec(&[-1, 2]),
        ])
        .unwrap();
        let s = svg_winding_chain(&winding_chain(&g).unwrap());
        assert!(s.starts_with("<svg"));
        assert!(s.trim_end().ends_with("</svg>"));
        assert!(s.contains("rgba(200,60,40"), "negative lobe color missing");
        assert!(s.contains("rgba(40,90,200"), "positive lobe color missing");
    }

    #[test]
    fn polytope_svg_handles_all_dimensions() {
        let polys = vec![
            Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]),
            Polytope::from_ints(&[&[2, 2], &[3, 3]]),
            Polytope::from_ints(&[&[5, 5]]),
        ];
        let s = svg_polytopes(&polys);
        assert!(s.contains("<path") && s.contains("<line") && s.contains("<circle"));
    }
}
