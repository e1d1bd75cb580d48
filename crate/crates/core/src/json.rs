//! JSON wire formats. Rationals travel as `"p/q"` strings so no float ever
//! contaminates an exact value.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::affine::AffineSubspace;
use crate::bkk::LaurentPolynomial;
use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::nerve::ArrangementX;
use crate::poly::MultiPoly;
use crate::polytope::Polytope;
use crate::vector::{QVec, Vector};
use crate::winding::{PLCycle, SupportFunctionPL};
use crate::{format_rat, parse_rat, Rat};

fn vec_to_json(v: &QVec) -> Vec<String> {
    v.0.iter().map(format_rat).collect()
}

fn vec_from_json(v: &[String]) -> Result<QVec> {
    Ok(Vector::new(
        v.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?,
    ))
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
}

impl PolytopeJson {
    pub fn from_polytope(p: &Polytope) -> PolytopeJson {
        PolytopeJson {
            dim: p.ambient(),
            vertices: p.vertices().iter().map(vec_to_json).collect(),
        }
    }

    pub fn to_polytope(&self) -> Result<Polytope> {
        let vs: Vec<QVec> = self
            .vertices
            .iter()
            .map(|v| {
                let q = vec_from_json(v)?;
                if q.0.len() != self.dim {
                    return Err(Error::DimensionMismatch {
                        expected: self.dim,
                        got: q.0.len(),
                    });
                }
                Ok(q)
            })
            .collect::<Result<_>>()?;
        Polytope::hull(&vs)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ChainTermJson {
    pub coeff: String,
    pub polytope: PolytopeJson,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ChainJson {
    pub dim: usize,
    pub terms: Vec<ChainTermJson>,
}

impl ChainJson {
    pub fn from_chain(c: &Chain) -> ChainJson {
        ChainJson {
            dim: c.ambient(),
            terms: c
                .terms()
                .map(|(p, a)| ChainTermJson {
                    coeff: format_rat(a),
                    polytope: PolytopeJson::from_polytope(p),
                })
                .collect(),
        }
    }

    pub fn to_chain(&self) -> Result<Chain> {
        let mut c = Chain::zero(self.dim);
        for t in &self.terms {
            c.add_term(parse_rat(&t.coeff)?, t.polytope.to_polytope()?);
        }
        Ok(c)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MonomialJson {
    pub exps: Vec<u32>,
    pub coeff: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PolynomialJson {
    pub vars: usize,
    pub monomials: Vec<MonomialJson>,
}

impl PolynomialJson {
    pub fn from_poly(p: &MultiPoly<Rat>) -> PolynomialJson {
        PolynomialJson {
            vars: p.vars(),
            monomials: p
                .terms()
                .map(|(e, c)| MonomialJson {
                    exps: e.clone(),
                    coeff: format_rat(c),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<MultiPoly<Rat>> {
        let mut p = MultiPoly::zero(self.vars);
        for m in &self.monomials {
            if m.exps.len() != self.vars {
                return Err(Error::DimensionMismatch {
                    expected: self.vars,
                    got: m.exps.len(),
                });
            }
            p.add_term(m.exps.clone(), parse_rat(&m.coeff)?);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CycleJson {
    pub points: Vec<Vec<String>>,
}

impl CycleJson {
    pub fn from_cycle(c: &PLCycle) -> CycleJson {
        CycleJson {
            points: c.points().iter().map(vec_to_json).collect(),
        }
    }

    pub fn to_cycle(&self) -> Result<PLCycle> {
        PLCycle::new(
            self.points
                .iter()
                .map(|p| vec_from_json(p))
                .collect::<Result<_>>()?,
        )
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SupportValueJson {
    pub normal: Vec<i64>,
    pub h: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SupportFunctionJson {
    pub delta0: PolytopeJson,
    pub values: Vec<SupportValueJson>,
}

impl SupportFunctionJson {
    pub fn from_support(h: &SupportFunctionPL) -> SupportFunctionJson {
        let delta0 = h.delta0();
        SupportFunctionJson {
            delta0: PolytopeJson::from_polytope(delta0),
            values: delta0
                .facets()
                .iter()
                .map(|f| SupportValueJson {
                    normal: f
                        .normal
                        .0
                        .iter()
                        .map(|c| c.numer().to_string().parse().expect("primitive normal"))
                        .collect(),
                    h: format_rat(h.value(&f.normal)),
                })
                .collect(),
        }
    }

    pub fn to_support(&self) -> Result<SupportFunctionPL> {
        let delta0 = self.delta0.to_polytope()?;
        let mut values = BTreeMap::new();
        for v in &self.values {
            let n = Vector::new(
                v.normal
                    .iter()
                    .map(|&k| crate::num::scalar_from_i64(k))
                    .collect(),
            );
            values.insert(n, parse_rat(&v.h)?);
        }
        SupportFunctionPL::new(delta0, values)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SubspaceJson {
    pub point: Vec<String>,
    pub dirs: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ArrangementJson {
    pub ambient: usize,
    pub subspaces: Vec<SubspaceJson>,
}

impl ArrangementJson {
    pub fn from_arrangement(x: &ArrangementX) -> ArrangementJson {
        ArrangementJson {
            ambient: x.ambient(),
            subspaces: x
                .subspaces()
                .iter()
                .map(|s| SubspaceJson {
                    point: vec_to_json(s.base()),
                    dirs: s.dirs().iter().map(vec_to_json).collect(),
                })
                .collect(),
        }
    }

    pub fn to_arrangement(&self) -> Result<ArrangementX> {
        ArrangementX::new(
            self.subspaces
                .iter()
                .map(|s| {
                    AffineSubspace::new(
                        vec_from_json(&s.point)?,
                        s.dirs
                            .iter()
                            .map(|d| vec_from_json(d))
                            .collect::<Result<_>>()?,
                    )
                })
                .collect::<Result<_>>()?,
        )
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SystemMonomialJson {
    pub exps: Vec<i64>,
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SystemPolyJson {
    pub monomials: Vec<SystemMonomialJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SystemJson {
    pub vars: usize,
    pub polys: Vec<SystemPolyJson>,
}

impl SystemJson {
    pub fn from_system(polys: &[LaurentPolynomial]) -> SystemJson {
        SystemJson {
            vars: polys.first().map_or(0, |p| p.vars()),
            polys: polys
                .iter()
                .map(|p| SystemPolyJson {
                    monomials: p
                        .terms()
                        .map(|(e, c)| SystemMonomialJson {
                            exps: e.clone(),
                            re: c.re,
                            im: c.im,
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_system(&self) -> Result<Vec<LaurentPolynomial>> {
        self.polys
            .iter()
            .map(|p| {
                LaurentPolynomial::new(
                    self.vars,
                    p.monomials
                        .iter()
                        .map(|m| (m.exps.clone(), Complex64::new(m.re, m.im))),
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::qvec;

    #[test]
    fn polytope_round_trip() {
        let p = Polytope::hull(&[
            crate::vector::qvec_frac(&[(1, 2), (0, 1)]),
            qvec(&[2, 0]),
            qvec(&[0, 3]),
        ])
        .unwrap();
        let j = PolytopeJson::from_polytope(&p);
        assert_eq!(j.to_polytope().unwrap(), p);
        let s = serde_json::to_string(&j).unwrap();
        let back: PolytopeJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_polytope().unwrap(), p);
    }

    #[test]
    fn chain_round_trip() {
        let sq = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let c = crate::chain::inverse(&sq).unwrap();
        let j = ChainJson::from_chain(&c);
        let s = serde_json::to_string(&j).unwrap();
        let back: ChainJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_chain().unwrap(), c);
    }

    #[test]
    fn polynomial_round_trip() {
        let x = MultiPoly::<Rat>::var(2, 0);
        let y = MultiPoly::<Rat>::var(2, 1);
        let p = x.mul(&x).add(&y.scale(&parse_rat("-3/7").unwrap()));
        let j = PolynomialJson::from_poly(&p);
        let back: PolynomialJson =
            serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        assert_eq!(back.to_poly().unwrap(), p);
    }

    #[test]
    fn cycle_and_support_round_trip() {
        let c = PLCycle::new(vec![qvec(&[0, 0]), qvec(&[2, 0]), qvec(&[1, 3])]).unwrap();
        let j = CycleJson::from_cycle(&c);
        assert_eq!(j.to_cycle().unwrap(), c);

        let sq = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let h = SupportFunctionPL::of_polytope(&sq, &sq).unwrap();
        let hj = SupportFunctionJson::from_support(&h);
        let back: SupportFunctionJson =
            serde_json::from_str(&serde_json::to_string(&hj).unwrap()).unwrap();
        assert_eq!(back.to_support().unwrap(), h);
    }

    #[test]
    fn arrangement_round_trip() {
        let x = ArrangementX::new(vec![
            AffineSubspace::line_through(&qvec(&[0, 0]), &qvec(&[1, 1])).unwrap(),
            AffineSubspace::point(qvec(&[2, 3])),
        ])
        .unwrap();
        let j = ArrangementJson::from_arrangement(&x);
        let back: ArrangementJson =
            serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        assert_eq!(back.to_arrangement().unwrap(), x);
    }

    #[test]
    fn system_round_trip() {
        let sys = crate::bkk::sample_system(
            &[Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1]])],
            3,
        )
        .unwrap();
        let j = SystemJson::from_system(&sys);
        let back: SystemJson =
            serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        let sys2 = back.to_system().unwrap();
        for (p, q) in sys.iter().zip(&sys2) {
            assert!(p.terms().zip(q.terms()).all(|((e1, c1), (e2, c2))| {
                e1 == e2 && c1 == c2
            }));
        }
    }
}
