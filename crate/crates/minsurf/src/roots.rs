//! Complex polynomial root finding via companion-matrix eigenvalues.
//!
//! The companion matrix is upper Hessenberg; its eigenvalues are computed
//! with a shifted QR iteration using complex Givens rotations. No initial
//! guesses are needed, which keeps branch-point location robust.

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Roots of `Σ coeffs[k] z^k` (ascending degree), with multiplicity,
/// as a flat list of length `degree`.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::Domain("zero polynomial has no root set".into()));
    }
    // Strip vanishing leading coefficients. Only exact zeros are dropped:
    // a small-but-real leading term still carries a root (far from the
    // origin), and coefficients of genuinely different magnitudes are
    // routine for polynomials with large roots.
    let mut hi = coeffs.len();
    while hi > 1 && coeffs[hi - 1].norm() == 0.0 {
        hi -= 1;
    }
    // Trailing zeros are roots at the origin.
    let mut lo = 0;
    while lo < hi - 1 && coeffs[lo].norm() == 0.0 {
        lo += 1;
    }
    let mut roots = vec![ZERO; lo];
    let body = &coeffs[lo..hi];
    let n = body.len() - 1;
    if n == 0 {
        return Ok(roots);
    }
    if n == 1 {
        roots.push(-body[0] / body[1]);
        return Ok(roots);
    }

    // Monic companion matrix, stored row-major.
    let lead = body[n];
    let mut h = vec![vec![ZERO; n]; n];
    for i in 1..n {
        h[i][i - 1] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        h[i][n - 1] = -body[i] / lead;
    }
    let mut eigs = hessenberg_eigenvalues(h)?;
    // Companion eigenvalues of high-degree polynomials carry the monomial
    // basis's conditioning; a short Newton polish against the original
    // coefficients recovers near machine precision for simple roots.
    for r in &mut eigs {
        *r = newton_polish(body, *r);
    }
    roots.extend(eigs);
    Ok(roots)
}

fn newton_polish(coeffs: &[Complex64], mut z: Complex64) -> Complex64 {
    for _ in 0..8 {
        let mut p = ZERO;
        let mut dp = ZERO;
        for &c in coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        z -= step;
        if step.norm() <= 1e-16 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

/// Eigenvalues of a complex upper Hessenberg matrix by shifted QR.
fn hessenberg_eigenvalues(mut h: Vec<Vec<Complex64>>) -> Result<Vec<Complex64>> {
    let n = h.len();
    let mut eigs = Vec::with_capacity(n);
    let mut end = n;
    let mut iters_here = 0usize;
    let max_iters = 60;
    while end > 0 {
        if end == 1 {
            eigs.push(h[0][0]);
            end = 0;
            continue;
        }
        let tol = f64::EPSILON * (h[end - 1][end - 1].norm() + h[end - 2][end - 2].norm() + 1e-300);
        if h[end - 1][end - 2].norm() <= tol {
            eigs.push(h[end - 1][end - 1]);
            end -= 1;
            iters_here = 0;
            continue;
        }
        if iters_here >= max_iters {
            return Err(Error::Domain(
                "companion-matrix QR iteration failed to converge".into(),
            ));
        }
        let mu = if iters_here > 0 && iters_here % 12 == 0 {
            // Exceptional shift to break symmetric stalls.
            h[end - 1][end - 1] + Complex64::new(h[end - 1][end - 2].norm() * 1.25, 0.0)
        } else {
            wilkinson_shift(&h, end)
        };
        qr_step(&mut h, end, mu);
        iters_here += 1;
    }
    Ok(eigs)
}

/// Eigenvalue of the trailing 2x2 block closest to the corner entry.
fn wilkinson_shift(h: &[Vec<Complex64>], end: usize) -> Complex64 {
    let a = h[end - 2][end - 2];
    let b = h[end - 2][end - 1];
    let c = h[end - 1][end - 2];
    let d = h[end - 1][end - 1];
    let mid = (a + d) * 0.5;
    let disc = ((a - d) * (a - d) * 0.25 + b * c).sqrt();
    let l1 = mid + disc;
    let l2 = mid - disc;
    if (l1 - d).norm() < (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// One explicit single-shift QR sweep on the leading `end` x `end` block.
fn qr_step(h: &mut [Vec<Complex64>], end: usize, mu: Complex64) {
    for i in 0..end {
        h[i][i] -= mu;
    }
    let mut rots = Vec::with_capacity(end - 1);
    for i in 0..end - 1 {
        let a = h[i][i];
        let b = h[i + 1][i];
        let (c, s) = givens(a, b);
        // Apply on the left to rows i, i+1.
        for j in i..end {
            let x = h[i][j];
            let y = h[i + 1][j];
            h[i][j] = c * x + s * y;
            h[i + 1][j] = -s.conj() * x + c * y;
        }
        rots.push((c, s));
    }
    for (i, (c, s)) in rots.into_iter().enumerate() {
        // Apply the adjoint on the right to columns i, i+1.
        for r in 0..(i + 2).min(end) {
            let x = h[r][i];
            let y = h[r][i + 1];
            h[r][i] = c * x + s.conj() * y;
            h[r][i + 1] = -s * x + c * y;
        }
    }
    for i in 0..end {
        h[i][i] += mu;
    }
}

/// Unitary rotation `[[c, s], [-conj(s), c]]` with real `c` sending
/// `(a, b)` to `(r, 0)`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let na = a.norm();
    let nb = b.norm();
    if nb == 0.0 {
        return (1.0, ZERO);
    }
    if na == 0.0 {
        return (0.0, b.conj() / nb);
    }
    let r = (na * na + nb * nb).sqrt();
    let c = na / r;
    let s = (a / na) * b.conj() / r;
    (c, s)
}

/// Groups nearby roots, returning `(centroid, multiplicity)` pairs.
pub fn cluster_roots(roots: &[Complex64], tol: f64) -> Vec<(Complex64, usize)> {
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    for &r in roots {
        match clusters
            .iter_mut()
            .find(|(center, _)| (*center - r).norm() < tol)
        {
            Some((center, count)) => {
                let k = *count as f64;
                *center = (*center * k + r) / (k + 1.0);
                *count += 1;
            }
            None => clusters.push((r, 1)),
        }
    }
    clusters
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![ZERO; coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            coeffs = next;
        }
        coeffs
    }

    fn eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
        coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    #[test]
    fn roots_of_unity() {
        // z^12 - 1
        let mut coeffs = vec![ZERO; 13];
        coeffs[0] = Complex64::new(-1.0, 0.0);
        coeffs[12] = Complex64::new(1.0, 0.0);
        let roots = polynomial_roots(&coeffs).unwrap();
        assert_eq!(roots.len(), 12);
        for r in &roots {
            assert!((r.norm() - 1.0).abs() < 1e-10);
            assert!(eval(&coeffs, *r).norm() < 1e-9);
        }
        let clusters = cluster_roots(&roots, 1e-6);
        assert_eq!(clusters.len(), 12);
    }

    #[test]
    fn complex_coefficients() {
        let targets = [Complex64::new(1.0, 2.0), Complex64::new(0.0, -3.0)];
        let coeffs = poly_from_roots(&targets);
        let roots = polynomial_roots(&coeffs).unwrap();
        assert_eq!(roots.len(), 2);
        for t in &targets {
            assert!(roots.iter().any(|r| (r - t).norm() < 1e-10));
        }
    }

    #[test]
    fn multiplicity_via_clustering() {
        let targets = [
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(-2.0, 0.0),
        ];
        let coeffs = poly_from_roots(&targets);
        let roots = polynomial_roots(&coeffs).unwrap();
        let clusters = cluster_roots(&roots, 1e-5);
        assert_eq!(clusters.len(), 2);
        let double = clusters
            .iter()
            .find(|(c, _)| (c - Complex64::new(1.0, 0.0)).norm() < 1e-4)
            .unwrap();
        assert_eq!(double.1, 2);
    }

    #[test]
    fn origin_roots_from_trailing_zeros() {
        // z^3 + z^2 = z^2 (z + 1)
        let coeffs = [
            ZERO,
            ZERO,
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
        ];
        let roots = polynomial_roots(&coeffs).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots.iter().filter(|r| r.norm() == 0.0).count(), 2);
        assert!(roots
            .iter()
            .any(|r| (r - Complex64::new(-1.0, 0.0)).norm() < 1e-12));
    }

    #[test]
    fn high_degree_random() {
        // degree 40 with roots scattered on a spiral. (Roots in arithmetic
        // progression would make a Wilkinson-style polynomial whose roots
        // are unrecoverable from coefficients in double precision.)
        let targets: Vec<Complex64> = (0..40)
            .map(|k| {
                let r = 0.5 * 1.035f64.powi(k);
                Complex64::from_polar(r, k as f64 * 0.37)
            })
            .collect();
        let coeffs = poly_from_roots(&targets);
        let roots = polynomial_roots(&coeffs).unwrap();
        assert_eq!(roots.len(), 40);
        for t in &targets {
            let best = roots.iter().map(|r| (r - t).norm()).fold(f64::MAX, f64::min);
            assert!(best < 1e-8, "missed root {t} (closest {best:e})");
        }
        for r in &roots {
            let magnitude: f64 = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.norm() * r.norm().powi(k as i32))
                .sum();
            let backward = eval(&coeffs, *r).norm() / magnitude;
            assert!(backward < 1e-12, "root {r}: backward error {backward:e}");
        }
    }
}
