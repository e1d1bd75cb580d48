//! Dual (normal) fans of full-dimensional polytopes, ambient dimension <= 3.

use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::polytope::Polytope;
use crate::vector::{qvec, QVec};

/// A polyhedral cone given by its primitive integer extreme rays.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cone {
    pub rays: Vec<QVec>,
    pub dim: usize,
}

impl Cone {
    fn new(mut rays: Vec<QVec>) -> Cone {
        rays.sort();
        rays.dedup();
        let dim = rank(&rays.iter().map(|r| r.0.clone()).collect::<Vec<_>>());
        Cone { rays, dim }
    }
}

/// A complete fan, stored closed under taking faces, canonically sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fan {
    pub ambient: usize,
    pub cones: Vec<Cone>,
}

impl Fan {
    fn from_cones(ambient: usize, mut cones: Vec<Cone>) -> Fan {
        cones.push(Cone::new(vec![])); // the zero cone
        cones.sort();
        cones.dedup();
        Fan { ambient, cones }
    }

    pub fn rays(&self) -> Vec<&QVec> {
        self.cones
            .iter()
            .filter(|c| c.dim == 1)
            .map(|c| &c.rays[0])
            .collect()
    }

    pub fn maximal_cones(&self) -> Vec<&Cone> {
        self.cones.iter().filter(|c| c.dim == self.ambient).collect()
    }
}

/// The normal fan of a full-dimensional polytope; maximal cones biject with
/// vertices and rays are the primitive integer facet normals.
pub fn normal_fan(p: &Polytope) -> Result<Fan> {
    if p.ambient() > 3 {
        return Err(Error::DimensionBound {
            max: 3,
            got: p.ambient(),
        });
    }
    if p.dim() != p.ambient() {
        return Err(Error::NotFullDimensional);
    }
    let ambient = p.ambient();
    let mut cones: Vec<Cone> = Vec::new();
    match ambient {
        1 => {
            cones.push(Cone::new(vec![qvec(&[1])]));
            cones.push(Cone::new(vec![qvec(&[-1])]));
        }
        2 => {
            let facets = p.facets();
            let k = facets.len();
            for f in &facets {
                cones.push(Cone::new(vec![f.normal.clone()]));
            }
            // facets() follows the CCW boundary, so consecutive normals span
            // the normal cone of the shared vertex
            for i in 0..k {
                cones.push(Cone::new(vec![
                    facets[i].normal.clone(),
                    facets[(i + 1) % k].normal.clone(),
                ]));
            }
        }
        3 => {
            let facets = p.facets();
            for f in &facets {
                cones.push(Cone::new(vec![f.normal.clone()]));
            }
            // edge cones: pairs of facets sharing exactly two vertices
            for i in 0..facets.len() {
                for j in (i + 1)..facets.len() {
                    let shared = p
                        .vertices()
                        .iter()
                        .filter(|v| {
                            facets[i].normal.dot(v) == facets[i].offset
                                && facets[j].normal.dot(v) == facets[j].offset
                        })
                        .count();
                    if shared == 2 {
                        cones.push(Cone::new(vec![
                            facets[i].normal.clone(),
                            facets[j].normal.clone(),
                        ]));
                    }
                }
            }
            // vertex cones
            for v in p.vertices() {
                let rays: Vec<QVec> = facets
                    .iter()
                    .filter(|f| f.normal.dot(v) == f.offset)
                    .map(|f| f.normal.clone())
                    .collect();
                cones.push(Cone::new(rays));
            }
        }
        _ => unreachable!(),
    }
    Ok(Fan::from_cones(ambient, cones))
}

/// Whether two full-dimensional polytopes have equal dual fans.
pub fn analogous(a: &Polytope, b: &Polytope) -> Result<bool> {
    Ok(normal_fan(a)? == normal_fan(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::qvec;
    use crate::Rat;

    fn square() -> Polytope {
        Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    #[test]
    fn fan_of_pentagon_has_five_rays_and_five_max_cones() {
        let p = Polytope::from_ints(&[&[0, 0], &[2, 0], &[3, 1], &[1, 3], &[0, 2]]);
        let fan = normal_fan(&p).unwrap();
        assert_eq!(fan.rays().len(), 5);
        assert_eq!(fan.maximal_cones().len(), 5);
    }

    #[test]
    fn fan_of_unit_square() {
        let fan = normal_fan(&square()).unwrap();
        let mut rays: Vec<QVec> = fan.rays().into_iter().cloned().collect();
        rays.sort();
        let mut expected = vec![qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[-1, 0]), qvec(&[0, -1])];
        expected.sort();
        assert_eq!(rays, expected);
    }

    #[test]
    fn trapezoid_has_primitive_diagonal_normal() {
        let t = Polytope::from_ints(&[&[0, 0], &[2, 0], &[1, 1], &[0, 1]]);
        let fan = normal_fan(&t).unwrap();
        let rays: Vec<QVec> = fan.rays().into_iter().cloned().collect();
        assert_eq!(rays.len(), 4);
        assert!(rays.contains(&qvec(&[1, 1])));
    }

    #[test]
    fn analogous_square_and_rectangle() {
        let rect = Polytope::from_ints(&[&[0, 0], &[3, 0], &[0, 2], &[3, 2]]);
        assert!(analogous(&square(), &rect).unwrap());
        let tri = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(!analogous(&square(), &tri).unwrap());
    }

    #[test]
    fn analogous_is_translation_invariant() {
        let sq = square();
        let t = sq.translate(&qvec(&[5, -3]));
        assert!(analogous(&sq, &t).unwrap());
    }

    #[test]
    fn fan_requires_full_dimension() {
        let seg = Polytope::from_ints(&[&[0, 0], &[1, 1]]);
        assert_eq!(normal_fan(&seg), Err(Error::NotFullDimensional));
    }

    #[test]
    fn fan_of_cube_and_box_agree() {
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
        let boxp = cube.scale(&Rat::from_integer(2.into()));
        let f1 = normal_fan(&cube).unwrap();
        let f2 = normal_fan(&boxp).unwrap();
        assert_eq!(f1, f2);
        assert_eq!(f1.rays().len(), 6);
        assert_eq!(f1.maximal_cones().len(), 8);
    }
}
