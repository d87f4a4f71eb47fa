//! The generalized Henneberg family `H_m` (odd `m ≥ 1`): non-orientable,
//! complete, finitely branched, *stable* minimal surfaces given by
//! `g = z`, `ω = z^{-(3+m)}(z^{2m+2} - 1) dz` on the oriented double cover
//! `C \ {0}` with the antipodal quotient.
//!
//! The module carries the closed-form polar parameterization as an
//! independent oracle for the Weierstrass evaluator, the antiprismatic
//! symmetry checks, and the Gauss-map stability certificate.

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use crate::bounds::{index_lower_bound, TopologyProfile};
use crate::error::{Error, Result};
use crate::intrinsic::verify::VerificationReport;
use crate::laurent::LaurentPoly;
use crate::weierstrass::{Domain, WeierstrassData};

/// CLI-facing cap keeping `r^{m+2}` well inside double range on the
/// default domain.
pub const MAX_M: u32 = 99;

/// A member of the generalized Henneberg family.
pub struct HennebergSurface {
    pub m: u32,
    pub data: WeierstrassData,
}

/// Builds `H_m` with the normalization `f(e^{iπ/(2(m+1))}) = 0`, under
/// which the branch points map to `(0, 0, ±2/(m+1))`.
pub fn make(m: u32) -> Result<HennebergSurface> {
    if m % 2 == 0 || m < 1 {
        return Err(Error::Domain(format!(
            "the Henneberg family needs odd m >= 1, got {m}"
        )));
    }
    if m > MAX_M {
        return Err(Error::Domain(format!("m capped at {MAX_M}, got {m}")));
    }
    let one = Complex64::new(1.0, 0.0);
    let g = LaurentPoly::monomial(1, one);
    // z^{-(3+m)}(z^{2m+2} - 1) = z^{m-1} - z^{-(m+3)}
    let omega = LaurentPoly::from_terms([(m as i32 - 1, one), (-(m as i32 + 3), -one)])?;
    let base = Complex64::from_polar(1.0, std::f64::consts::PI / (2.0 * (m as f64 + 1.0)));
    let data = WeierstrassData::new(g, omega, Domain::new(0.05, 20.0)?, true, base)?;
    Ok(HennebergSurface { m, data })
}

impl HennebergSurface {
    pub fn topology_profile(&self) -> TopologyProfile {
        TopologyProfile::henneberg(self.m)
    }
}

/// The closed-form polar parameterization of `H_m`.
pub fn closed_form(m: u32, r: f64, theta: f64) -> [f64; 3] {
    let mf = m as f64;
    let m2 = mf + 2.0;
    let rm = r.powi(m as i32);
    let rm2 = r.powi(m as i32 + 2);
    let rm1 = r.powi(m as i32 + 1);
    let x1 = 0.5 * (rm * (mf * theta).cos() / mf + (m2 * theta).cos() / (m2 * rm2))
        - 0.5 * (rm2 * (m2 * theta).cos() / m2 + (mf * theta).cos() / (mf * rm));
    let x2 = 0.5 * ((m2 * theta).sin() / (m2 * rm2) - rm * (mf * theta).sin() / mf)
        - 0.5 * (rm2 * (m2 * theta).sin() / m2 - (mf * theta).sin() / (mf * rm));
    let x3 = ((mf + 1.0) * theta).cos() * (rm1 + 1.0 / rm1) / (mf + 1.0);
    [x1, x2, x3]
}

fn sample_points(count: usize, r_lo: f64, r_hi: f64, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let t = rng.gen_range(r_lo.ln()..r_hi.ln());
            let theta = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
            (t.exp(), theta)
        })
        .collect()
}

/// Max deviation between the Weierstrass evaluation and the closed form
/// over random samples (log-uniform `r ∈ [0.1, 10]`); pass iff `< 1e-8`.
pub fn oracle_match(surface: &HennebergSurface, sample_count: usize) -> Result<VerificationReport> {
    if sample_count < 100 {
        return Err(Error::Domain("need at least 100 samples".into()));
    }
    let mut worst = 0.0f64;
    for (r, theta) in sample_points(sample_count, 0.1, 10.0, 0x48656e6e) {
        let z = Complex64::from_polar(r, theta);
        let f = surface.data.evaluate(z)?;
        let c = closed_form(surface.m, r, theta);
        let dev = (0..3).map(|k| (f[k] - c[k]).powi(2)).sum::<f64>().sqrt();
        worst = worst.max(dev);
    }
    let bound = 1e-8;
    Ok(VerificationReport {
        check: "henneberg-oracle".into(),
        surface: format!("henneberg:{}", surface.m),
        params: json!({"samples": sample_count}),
        measured: worst,
        bound,
        margin: bound - worst,
        resolution: "pointwise".into(),
        pass: worst < bound,
    })
}

/// Verifies the antiprismatic symmetry group `A_{2(m+1)}` numerically.
///
/// For each of the `2(m+1)` domain reflections `z ↦ e^{2iθ_j} z̄`
/// (`θ_j = πj/(2(m+1))`), the induced ambient map is fitted from point
/// pairs `(f(z), f(σ_j z))` and required to be orthogonal with the claimed
/// type: a π-rotation about a horizontal line for odd `j`, a vertical-plane
/// reflection for even `j`. The images of the odd rays are additionally
/// checked to be horizontal lines through the origin.
pub fn symmetry_check(
    surface: &HennebergSurface,
    sample_count: usize,
) -> Result<VerificationReport> {
    if sample_count < 100 {
        return Err(Error::Domain("need at least 100 samples".into()));
    }
    let m = surface.m;
    let pts = sample_points(sample_count, 0.3, 3.0, 0x53796d6d);
    let mut ray_dev = 0.0f64;
    let mut rotation_dev = 0.0f64;
    let mut reflection_dev = 0.0f64;

    // (i) odd rays map into horizontal lines through the origin
    for j in (1..2 * (m + 1)).step_by(2) {
        let theta_j = std::f64::consts::PI * j as f64 / (2.0 * (m as f64 + 1.0));
        let radii = [0.3, 0.5, 0.9, 1.4, 2.2, 3.0];
        let points: Vec<[f64; 3]> = radii
            .iter()
            .map(|&r| surface.data.evaluate(Complex64::from_polar(r, theta_j)))
            .collect::<Result<_>>()?;
        let anchor = points
            .iter()
            .cloned()
            .max_by(|a, b| norm3(a).total_cmp(&norm3(b)))
            .unwrap();
        let u = normalize(anchor);
        for p in &points {
            ray_dev = ray_dev.max(p[2].abs());
            // collinearity with the anchor direction through 0
            let c = cross3(*p, u);
            ray_dev = ray_dev.max(norm3(&c));
        }
    }

    // (ii)+(iii) fitted ambient isometries per domain reflection
    for j in 0..2 * (m + 1) {
        let theta_j = std::f64::consts::PI * j as f64 / (2.0 * (m as f64 + 1.0));
        let phase = Complex64::from_polar(1.0, 2.0 * theta_j);
        let mut pairs = Vec::with_capacity(pts.len());
        for &(r, theta) in &pts {
            let z = Complex64::from_polar(r, theta);
            let p = surface.data.evaluate(z)?;
            let q = surface.data.evaluate(phase * z.conj())?;
            pairs.push((p, q));
        }
        let mat = fit_linear_map(&pairs)?;
        let mut dev = orthogonality_defect(&mat);
        for (p, q) in &pairs {
            let diff = sub3(apply(&mat, *p), *q);
            dev = dev.max(norm3(&diff));
        }
        let det = det3(&mat);
        let e3 = apply(&mat, [0.0, 0.0, 1.0]);
        if j % 2 == 1 {
            // π-rotation about a horizontal line: det +1, e3 ↦ -e3
            dev = dev.max((det - 1.0).abs());
            dev = dev.max(norm3(&sub3(e3, [0.0, 0.0, -1.0])));
            rotation_dev = rotation_dev.max(dev);
        } else {
            // reflection in a vertical plane: det -1, e3 fixed
            dev = dev.max((det + 1.0).abs());
            dev = dev.max(norm3(&sub3(e3, [0.0, 0.0, 1.0])));
            reflection_dev = reflection_dev.max(dev);
        }
    }

    let worst = ray_dev.max(rotation_dev).max(reflection_dev);
    let bound = 1e-8;
    Ok(VerificationReport {
        check: "henneberg-symmetry".into(),
        surface: format!("henneberg:{m}"),
        params: json!({
            "ray_deviation": ray_dev,
            "rotation_deviation": rotation_dev,
            "reflection_deviation": reflection_dev,
            "group_order": 4 * (m + 1),
            "samples": sample_count,
        }),
        measured: worst,
        bound,
        margin: bound - worst,
        resolution: "pointwise".into(),
        pass: worst < bound,
    })
}

/// Stability via the Gauss-map criterion: a non-orientable, complete,
/// finitely branched minimal surface of finite total curvature whose
/// extended unoriented Gauss map is a diffeomorphism of `P²` is stable.
#[derive(Clone, Debug)]
pub struct StabilityCertificate {
    /// Hypothesis holds: `deg g = 1` with `g' ≠ 0`, so the Gauss map
    /// extends to a Möbius transformation (a sphere diffeomorphism).
    pub applicable: bool,
    pub stable: bool,
    pub index_lower_bound: u32,
    pub detail: String,
}

pub fn stability_certificate(data: &WeierstrassData, profile: &TopologyProfile) -> Result<StabilityCertificate> {
    let g = data.g();
    let mobius_degree_one = g.min_exp().map_or(false, |lo| lo >= 0)
        && g.max_exp() == Some(1)
        && g.coeff(1) != Complex64::new(0.0, 0.0);
    let lb = index_lower_bound(profile)?;
    if mobius_degree_one && !profile.orientable {
        Ok(StabilityCertificate {
            applicable: true,
            stable: true,
            index_lower_bound: lb,
            detail: "g is degree-1 (Mobius), so the unoriented Gauss map is a diffeomorphism; \
                     the surface is stable"
                .into(),
        })
    } else {
        Ok(StabilityCertificate {
            applicable: false,
            stable: false,
            index_lower_bound: lb,
            detail: "criterion not applicable: Gauss map is not a degree-1 diffeomorphism \
                     of the projective plane"
                .into(),
        })
    }
}

// --- small 3x3 helpers -----------------------------------------------------

type Mat3 = [[f64; 3]; 3];

fn apply(m: &Mat3, v: [f64; 3]) -> [f64; 3] {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

fn det3(m: &Mat3) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn inverse3(m: &Mat3) -> Result<Mat3> {
    let d = det3(m);
    if d.abs() < 1e-12 {
        return Err(Error::Degenerate(
            "sample point cloud is degenerate (rank < 3)".into(),
        ));
    }
    let c = |r1: usize, c1: usize, r2: usize, c2: usize| m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
    Ok([
        [c(1, 1, 2, 2) / d, c(0, 2, 2, 1) / d, c(0, 1, 1, 2) / d],
        [c(1, 2, 2, 0) / d, c(0, 0, 2, 2) / d, c(0, 2, 1, 0) / d],
        [c(1, 0, 2, 1) / d, c(0, 1, 2, 0) / d, c(0, 0, 1, 1) / d],
    ])
}

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for (k, col) in b.iter().enumerate() {
                out[i][j] += a[i][k] * col[j];
            }
        }
    }
    out
}

/// Least-squares linear map `M` with `M p ≈ q`:
/// `M = (Σ q pᵀ)(Σ p pᵀ)⁻¹`.
fn fit_linear_map(pairs: &[([f64; 3], [f64; 3])]) -> Result<Mat3> {
    let mut qp = [[0.0; 3]; 3];
    let mut pp = [[0.0; 3]; 3];
    for (p, q) in pairs {
        for i in 0..3 {
            for j in 0..3 {
                qp[i][j] += q[i] * p[j];
                pp[i][j] += p[i] * p[j];
            }
        }
    }
    Ok(mat_mul(&qp, &inverse3(&pp)?))
}

/// `max |M Mᵀ - I|` entrywise.
fn orthogonality_defect(m: &Mat3) -> f64 {
    let mt = [
        [m[0][0], m[1][0], m[2][0]],
        [m[0][1], m[1][1], m[2][1]],
        [m[0][2], m[1][2], m[2][2]],
    ];
    let mmt = mat_mul(m, &mt);
    let mut worst = 0.0f64;
    for (i, row) in mmt.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((x - want).abs());
        }
    }
    worst
}

fn sub3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm3(a: &[f64; 3]) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

fn normalize(a: [f64; 3]) -> [f64; 3] {
    let n = norm3(&a);
    [a[0] / n, a[1] / n, a[2] / n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weierstrass::Puncture;

    #[test]
    fn make_validates_parity() {
        assert!(make(2).is_err());
        assert!(make(0).is_err());
        assert!(make(1).is_ok());
        assert!(make(101).is_err());
    }

    #[test]
    fn omega_matches_family_formula() {
        let h1 = make(1).unwrap();
        // ω = z^{-4}(z^4 - 1) = 1 - z^{-4}
        assert_eq!(h1.data.omega().coeff(0), Complex64::new(1.0, 0.0));
        assert_eq!(h1.data.omega().coeff(-4), Complex64::new(-1.0, 0.0));
        let h3 = make(3).unwrap();
        assert_eq!(h3.data.omega().coeff(2), Complex64::new(1.0, 0.0));
        assert_eq!(h3.data.omega().coeff(-6), Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn closed_form_branch_values() {
        let p = closed_form(1, 1.0, 0.0);
        assert!(p[0].abs() < 1e-14 && p[1].abs() < 1e-14);
        assert!((p[2] - 1.0).abs() < 1e-14);
        let q = closed_form(1, 1.0, std::f64::consts::FRAC_PI_2);
        assert!((q[2] + 1.0).abs() < 1e-14);
        let z = closed_form(1, 1.0, std::f64::consts::FRAC_PI_4);
        assert!(z.iter().all(|v| v.abs() < 1e-14));
    }

    #[test]
    fn unit_circle_maps_to_vertical_segment() {
        // x1 = x2 = 0 at r = 1 by exact cancellation; |x3| <= 2/(m+1)
        for m in [1u32, 3, 5] {
            for k in 0..40 {
                let theta = k as f64 * 0.157;
                let p = closed_form(m, 1.0, theta);
                assert_eq!(p[0], 0.0);
                assert_eq!(p[1], 0.0);
                assert!(p[2].abs() <= 2.0 / (m as f64 + 1.0) + 1e-14);
            }
        }
    }

    #[test]
    fn base_point_is_origin() {
        for m in [1u32, 3, 5] {
            let h = make(m).unwrap();
            let f = h.data.evaluate(h.data.base_point()).unwrap();
            assert!(f.iter().all(|v| v.abs() < 1e-10), "m={m}: {f:?}");
        }
    }

    #[test]
    fn oracle_matches_for_small_m() {
        for m in [1u32, 3, 5] {
            let h = make(m).unwrap();
            let rep = oracle_match(&h, 200).unwrap();
            assert!(rep.pass, "m={m}: max dev {}", rep.measured);
        }
    }

    #[test]
    fn branch_points_and_images() {
        for m in [1u32, 3, 5, 7, 9] {
            let h = make(m).unwrap();
            let bps = h.data.branch_points().unwrap();
            assert_eq!(bps.len() as u32, m + 1, "m={m}");
            let want = 2.0 / (m as f64 + 1.0);
            for bp in &bps {
                assert_eq!(bp.order, 1);
                assert!((bp.location.norm() - 1.0).abs() < 1e-8);
                assert!(bp.image[0].abs() < 1e-8 && bp.image[1].abs() < 1e-8);
                assert!((bp.image[2].abs() - want).abs() < 1e-8, "m={m}: {:?}", bp.image);
            }
            assert_eq!(h.data.total_branching_order().unwrap(), m + 1);
        }
    }

    #[test]
    fn end_profile_and_topology() {
        for m in [1u32, 3, 5] {
            let h = make(m).unwrap();
            let ends = h.data.end_profiles().unwrap();
            assert_eq!(ends.len(), 1);
            assert_eq!(ends[0].puncture, Puncture::QuotientPair);
            assert_eq!(ends[0].multiplicity, m + 2);
            assert_eq!(h.data.topology_profile().unwrap(), TopologyProfile::henneberg(m));
        }
    }

    #[test]
    fn symmetry_group_verifies() {
        for m in [1u32, 3] {
            let h = make(m).unwrap();
            let rep = symmetry_check(&h, 120).unwrap();
            assert!(rep.pass, "m={m}: {rep:?}");
        }
    }

    #[test]
    fn stability_certificates() {
        for m in [1u32, 5] {
            let h = make(m).unwrap();
            let cert = stability_certificate(&h.data, &h.topology_profile()).unwrap();
            assert!(cert.applicable && cert.stable);
            assert_eq!(cert.index_lower_bound, 0);
        }
        // deg g >= 2: hypothesis fails, no certificate
        let g2 = WeierstrassData::new(
            LaurentPoly::monomial(2, Complex64::new(1.0, 0.0)),
            LaurentPoly::monomial(-2, Complex64::new(1.0, 0.0)),
            Domain::new(0.1, 10.0).unwrap(),
            false,
            Complex64::new(1.0, 0.0),
        )
        .unwrap();
        let cert = stability_certificate(&g2, &g2.topology_profile().unwrap()).unwrap();
        assert!(!cert.applicable);
    }

    #[test]
    fn total_curvature_is_minus_two_pi() {
        let h1 = make(1).unwrap();
        let est = h1
            .data
            .with_domain(Domain::new(1.0 / 50.0, 50.0).unwrap())
            .unwrap()
            .total_curvature(256)
            .unwrap();
        let want = -2.0 * std::f64::consts::PI;
        assert!((est.value - want).abs() / want.abs() < 0.02, "{}", est.value);
    }
}
