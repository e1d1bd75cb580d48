//! Exact dense linear algebra over a generic field scalar.
//!
//! Pivoting is by first nonzero entry, which is only meaningful for exact
//! scalars; the numeric root-counting code keeps its own float kernels.

use crate::num::Scalar;
use crate::vector::Vector;

/// Row-reduces `m` in place to reduced echelon form; returns pivot columns.
pub fn rref<T: Scalar>(m: &mut Vec<Vec<T>>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let s = m[r][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank<T: Scalar>(m: &[Vec<T>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// One solution of `A x = b`, or `None` when the system is inconsistent.
pub fn solve<T: Scalar>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.len(), b.len());
    if a.is_empty() {
        return Some(vec![]);
    }
    let n = a[0].len();
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![T::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][n].clone();
    }
    Some(x)
}

/// A basis of the kernel of `A`.
pub fn nullspace<T: Scalar>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![];
    }
    let n = a[0].len();
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); n];
            v[f] = T::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = T::zero() - m[i][f].clone();
            }
            v
        })
        .collect()
}

/// The minimum-norm solution of a consistent system `A x = b`.
///
/// Reduces to an independent subsystem `A' x = b'` and solves
/// `x = A'^T y` with `A' A'^T y = b'`; the result depends linearly on `b`.
pub fn least_norm_solution<T: Scalar>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.len(), b.len());
    if a.is_empty() {
        return Some(vec![]);
    }
    let n = a[0].len();
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) {
        return None;
    }
    let rows: Vec<&Vec<T>> = aug.iter().take(pivots.len()).collect();
    // Gram matrix A' A'^T of the independent rows.
    let k = rows.len();
    let gram: Vec<Vec<T>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    (0..n).fold(T::zero(), |acc, c| {
                        acc + rows[i][c].clone() * rows[j][c].clone()
                    })
                })
                .collect()
        })
        .collect();
    let rhs: Vec<T> = rows.iter().map(|r| r[n].clone()).collect();
    let y = solve(&gram, &rhs)?;
    let mut x = vec![T::zero(); n];
    for (i, row) in rows.iter().enumerate() {
        for (c, xc) in x.iter_mut().enumerate() {
            *xc = xc.clone() + row[c].clone() * y[i].clone();
        }
    }
    Some(x)
}

/// Rank of the set of difference vectors `p_i - p_0` (affine rank).
pub fn affine_rank<T: Scalar>(points: &[Vector<T>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let rows: Vec<Vec<T>> = points[1..].iter().map(|p| (p - base).0).collect();
    rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::qvec;
    use crate::Rat;

    fn q(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn solve_and_nullspace() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        let b = vec![q(3), q(6)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(
            x[0].clone() + q(2) * x[1].clone(),
            q(3)
        );
        assert!(solve(&a, &[q(3), q(7)]).is_none());
        assert_eq!(nullspace(&a).len(), 1);
    }

    #[test]
    fn least_norm_is_in_row_space() {
        // x + y = 2 -> least-norm solution (1, 1).
        let a = vec![vec![q(1), q(1)]];
        let x = least_norm_solution(&a, &[q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
    }

    #[test]
    fn affine_rank_of_collinear_points() {
        let pts = vec![qvec(&[0, 0]), qvec(&[1, 1]), qvec(&[2, 2])];
        assert_eq!(affine_rank(&pts), 1);
    }
}
