//! Finite simplicial complexes with exact rational homology ranks.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::Rat;

const MAX_FACES: usize = 100_000;

/// A simplicial complex on vertices `0..n`: a set of faces closed under
/// taking subsets. Faces are stored as sorted vertex lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the downward closure of the given faces.
    pub fn new(faces: impl IntoIterator<Item = Vec<usize>>) -> Result<SimplicialComplex> {
        let mut closed: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: Vec<Vec<usize>> = Vec::new();
        for mut f in faces {
            f.sort();
            f.dedup();
            if f.is_empty() {
                return Err(Error::Invalid("empty face".into()));
            }
            queue.push(f);
        }
        while let Some(f) = queue.pop() {
            if !closed.insert(f.clone()) {
                continue;
            }
            if closed.len() > MAX_FACES {
                return Err(Error::SizeBound(format!("more than {MAX_FACES} faces")));
            }
            if f.len() > 1 {
                for i in 0..f.len() {
                    let mut sub = f.clone();
                    sub.remove(i);
                    queue.push(sub);
                }
            }
        }
        Ok(SimplicialComplex { faces: closed })
    }

    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter()
    }

    pub fn faces_of_dim(&self, k: usize) -> Vec<&Vec<usize>> {
        self.faces.iter().filter(|f| f.len() == k + 1).collect()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort();
        f.dedup();
        self.faces.contains(&f)
    }

    pub fn dim(&self) -> usize {
        self.faces.iter().map(|f| f.len() - 1).max().unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.faces_of_dim(0).len()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.faces.is_subset(&other.faces)
    }
}

/// Betti numbers over the rationals, `b_0 ..= b_dim`.
pub fn homology_ranks(k: &SimplicialComplex) -> Vec<usize> {
    let dim = k.dim();
    // rank of each boundary map d_j : C_j -> C_{j-1}
    let mut boundary_rank = vec![0usize; dim + 2];
    for j in 1..=dim {
        let rows = k.faces_of_dim(j - 1);
        let cols = k.faces_of_dim(j);
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let row_index: BTreeMap<&Vec<usize>, usize> =
            rows.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let mut m = vec![vec![Rat::zero(); cols.len()]; rows.len()];
        for (c, face) in cols.iter().enumerate() {
            for i in 0..face.len() {
                let mut sub = (*face).clone();
                sub.remove(i);
                let r = row_index[&sub];
                m[r][c] = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
            }
        }
        boundary_rank[j] = rank(&m);
    }
    (0..=dim)
        .map(|j| k.faces_of_dim(j).len() - boundary_rank[j] - boundary_rank[j + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_simplex_is_contractible() {
        let k = SimplicialComplex::new([vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(homology_ranks(&k), vec![1, 0, 0, 0]);
        assert_eq!(k.faces_of_dim(1).len(), 6);
    }

    #[test]
    fn triangle_boundary_is_a_circle() {
        let k = SimplicialComplex::new([vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(homology_ranks(&k), vec![1, 1]);
    }

    #[test]
    fn complete_graph_k4() {
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push(vec![i, j]);
            }
        }
        let k = SimplicialComplex::new(edges).unwrap();
        // b1 = E - V + 1 = 6 - 4 + 1
        assert_eq!(homology_ranks(&k), vec![1, 3]);
    }

    #[test]
    fn disjoint_vertices() {
        let k = SimplicialComplex::new([vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(homology_ranks(&k), vec![3]);
    }

    #[test]
    fn sphere_from_tetrahedron_boundary() {
        let faces = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        let k = SimplicialComplex::new(faces).unwrap();
        assert_eq!(homology_ranks(&k), vec![1, 0, 1]);
    }

    #[test]
    fn subcomplex_relation() {
        let big = SimplicialComplex::new([vec![0, 1, 2]]).unwrap();
        let small = SimplicialComplex::new([vec![0, 1], vec![2]]).unwrap();
        assert!(small.is_subcomplex_of(&big));
        assert!(!big.is_subcomplex_of(&small));
    }
}
