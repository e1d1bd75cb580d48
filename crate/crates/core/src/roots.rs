//! Simultaneous-iteration (Aberth–Ehrlich) root finding for complex
//! univariate polynomials, used by the numeric root-counting oracle.

use num_complex::Complex64;

/// All roots of the polynomial with the given ascending coefficients,
/// including zero roots from a vanishing constant term. Coefficients that
/// are negligible relative to the largest one are trimmed first.
pub fn poly_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if scale == 0.0 {
        return Vec::new();
    }
    let eps = 1e-12 * scale;
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|t| t.norm() < eps) {
        c.pop();
    }
    let mut roots = Vec::new();
    let mut lo = 0;
    while lo < c.len() && c[lo].norm() < eps {
        roots.push(Complex64::new(0.0, 0.0));
        lo += 1;
    }
    let c = &c[lo..];
    if c.len() <= 1 {
        return roots;
    }
    roots.extend(aberth(c));
    roots
}

/// Horner evaluation of `p` and `p'` at `z`.
fn eval2(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &ck in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + ck;
    }
    (p, dp)
}

fn aberth(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    // Cauchy bound on root magnitudes
    let lead = c[n].norm();
    let bound = 1.0 + c[..n].iter().map(|x| x.norm()).fold(0.0f64, f64::max) / lead;
    // deterministic initial guesses on a spiral inside the bound
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let r = bound * (0.3 + 0.6 * (k as f64 + 0.5) / n as f64);
            let th = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(r, th)
        })
        .collect();
    let scale = c.iter().map(|x| x.norm()).fold(0.0f64, f64::max);
    for _ in 0..300 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval2(c, z[i]);
            if p.norm() < 1e-14 * scale {
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                Complex64::new(1e-6, 1e-6)
            } else {
                p / dp
            };
            let mut s = Complex64::new(0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    s += (z[i] - zj).finv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * s;
            let step = if denom.norm() < 1e-30 {
                newton
            } else {
                newton / denom
            };
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-14 * bound {
            break;
        }
    }
    z
}

/// Largest residual `|p(z)|` over the candidate roots, relative to the
/// largest coefficient magnitude.
pub fn max_relative_residual(coeffs: &[Complex64], roots: &[Complex64]) -> f64 {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    roots
        .iter()
        .map(|&z| eval2(coeffs, z).0.norm() / scale)
        .fold(0.0f64, f64::max)
}

/// Groups near-coincident values; returns one representative with its
/// multiplicity per cluster.
pub fn cluster_roots(roots: &[Complex64], tol: f64) -> Vec<(Complex64, usize)> {
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    for &z in roots {
        match clusters.iter_mut().find(|(c, _)| (z - *c).norm() < tol) {
            Some((c, m)) => {
                // running mean keeps the representative centered
                *c = (*c * (*m as f64) + z) / (*m as f64 + 1.0);
                *m += 1;
            }
            None => clusters.push((z, 1)),
        }
    }
    clusters
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted_real_parts(roots: &[Complex64]) -> Vec<f64> {
        let mut r: Vec<f64> = roots.iter().map(|z| z.re).collect();
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        r
    }

    #[test]
    fn quadratic_roots() {
        // (z - 1)(z - 2) = z^2 - 3z + 2
        let roots = poly_roots(&[c(2.0, 0.0), c(-3.0, 0.0), c(1.0, 0.0)]);
        let r = sorted_real_parts(&roots);
        assert!((r[0] - 1.0).abs() < 1e-9 && (r[1] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn roots_of_unity() {
        // z^8 - 1
        let mut coeffs = vec![c(0.0, 0.0); 9];
        coeffs[0] = c(-1.0, 0.0);
        coeffs[8] = c(1.0, 0.0);
        let roots = poly_roots(&coeffs);
        assert_eq!(roots.len(), 8);
        assert!(max_relative_residual(&coeffs, &roots) < 1e-10);
        for z in &roots {
            assert!((z.norm() - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn zero_roots_and_degree_drop() {
        // z^3 + z^2 = z^2 (z + 1)
        let coeffs = [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)];
        let roots = poly_roots(&coeffs);
        assert_eq!(roots.len(), 3);
        let zeros = roots.iter().filter(|z| z.norm() < 1e-12).count();
        assert_eq!(zeros, 2);
        assert!(roots.iter().any(|z| (z + 1.0).norm() < 1e-9));
    }

    #[test]
    fn clustering_detects_multiplicity() {
        let roots = [c(1.0, 0.0), c(1.0 + 1e-9, 0.0), c(5.0, 0.0)];
        let cl = cluster_roots(&roots, 1e-6);
        assert_eq!(cl.len(), 2);
        assert!(cl.iter().any(|&(_, m)| m == 2));
    }

    #[test]
    fn complex_coefficient_polynomial() {
        // (z - i)(z + 2i) = z^2 + i z + 2
        let coeffs = [c(2.0, 0.0), c(0.0, 1.0), c(1.0, 0.0)];
        let roots = poly_roots(&coeffs);
        assert!(max_relative_residual(&coeffs, &roots) < 1e-10);
    }
}
