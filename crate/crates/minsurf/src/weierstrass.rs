//! Branched minimal surfaces from Weierstrass data `(g, ω)` with
//! Laurent-polynomial entries.
//!
//! The surface is `f(z) = Re ∫ (φ₁, φ₂, φ₃)` with
//! `φ₁ = ½(1-g²)ω`, `φ₂ = (i/2)(1+g²)ω`, `φ₃ = gω`. Restricting `g` and
//! the coefficient of `ω` to Laurent polynomials covers every surface in
//! scope (plane, catenoid, Enneper, the Henneberg family) and makes the
//! integral exact termwise, so evaluation needs no numerical contour
//! integration and is path independent by construction.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::TopologyProfile;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::roots;

/// Tolerance on `|Im residue|` of each `φ_k`: the double-precision noise
/// floor for the coefficient arithmetic in scope. A larger imaginary part
/// means `Re ∫ φ` is not well defined on loops around the puncture.
pub const RESIDUE_IM_TOL: f64 = 1e-12;

/// Annulus `{r_min ≤ |z| ≤ r_max}`; `r_min = 0` means a disk domain with
/// no puncture at the origin.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct Domain {
    pub r_min: f64,
    pub r_max: f64,
}

impl Domain {
    pub fn new(r_min: f64, r_max: f64) -> Result<Self> {
        if !(r_min >= 0.0 && r_max > r_min && r_max.is_finite()) {
            return Err(Error::InvalidData(format!(
                "domain needs 0 <= r_min < r_max < inf, got [{r_min}, {r_max}]"
            )));
        }
        Ok(Self { r_min, r_max })
    }

    pub fn contains(&self, z: Complex64) -> bool {
        let r = z.norm();
        r >= self.r_min * (1.0 - 1e-12) && r <= self.r_max * (1.0 + 1e-12)
    }
}

/// A puncture carrying an end of the surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Puncture {
    Zero,
    Infinity,
    /// The two punctures 0 and ∞ identified by the antipodal quotient.
    QuotientPair,
}

/// An end with its multiplicity (spinning) `d ≥ 1` as a multi-graph over
/// its limiting tangent plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndProfile {
    pub puncture: Puncture,
    pub multiplicity: u32,
}

/// A point where the immersion degenerates as `z ↦ (z^q, x(z))`;
/// `order = q - 1 ≥ 1`.
#[derive(Clone, Debug)]
pub struct BranchPoint {
    pub location: Complex64,
    pub order: u32,
    pub image: [f64; 3],
}

/// Weierstrass data on a truncated annulus, together with the exact
/// antiderivatives that evaluate the surface.
#[derive(Clone, Debug)]
pub struct WeierstrassData {
    g: LaurentPoly,
    omega: LaurentPoly,
    domain: Domain,
    quotient: bool,
    base_point: Complex64,
    phi: [LaurentPoly; 3],
    antiderivatives: [LaurentPoly; 3],
    residues: [Complex64; 3],
    base_offset: [f64; 3],
}

impl WeierstrassData {
    pub fn new(
        g: LaurentPoly,
        omega: LaurentPoly,
        domain: Domain,
        quotient: bool,
        base_point: Complex64,
    ) -> Result<Self> {
        if base_point == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidData("base point must be nonzero".into()));
        }
        let half = Complex64::new(0.5, 0.0);
        let half_i = Complex64::new(0.0, 0.5);
        let g2 = g.square();
        let phi1 = LaurentPoly::one().sub(&g2).mul(&omega).scale(half);
        let phi2 = LaurentPoly::one().add(&g2).mul(&omega).scale(half_i);
        let phi3 = g.mul(&omega);
        let phi = [phi1, phi2, phi3];

        // Conformality must hold identically: φ₁² + φ₂² + φ₃² = 0.
        let conf = phi[0]
            .square()
            .add(&phi[1].square())
            .add(&phi[2].square());
        let scale = phi.iter().map(|p| p.max_coeff_norm()).fold(0.0, f64::max);
        if conf.max_coeff_norm() > 1e-10 * scale.max(1.0) * scale.max(1.0) {
            return Err(Error::InvalidData(
                "phi forms violate the conformality identity".into(),
            ));
        }

        let mut antiderivatives: [LaurentPoly; 3] = Default::default();
        let mut residues = [Complex64::new(0.0, 0.0); 3];
        for k in 0..3 {
            let (anti, res) = phi[k].antiderivative();
            if res.im.abs() >= RESIDUE_IM_TOL * scale.max(1.0) {
                return Err(Error::InvalidData(format!(
                    "phi_{} has residue {res} with non-real part; the surface is not well defined",
                    k + 1
                )));
            }
            antiderivatives[k] = anti;
            residues[k] = res;
        }

        let mut data = Self {
            g,
            omega,
            domain,
            quotient,
            base_point,
            phi,
            antiderivatives,
            residues,
            base_offset: [0.0; 3],
        };
        data.base_offset = data.raw_evaluate(base_point);
        Ok(data)
    }

    pub fn g(&self) -> &LaurentPoly {
        &self.g
    }

    pub fn omega(&self) -> &LaurentPoly {
        &self.omega
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn quotient(&self) -> bool {
        self.quotient
    }

    pub fn base_point(&self) -> Complex64 {
        self.base_point
    }

    /// The forms `(φ₁, φ₂, φ₃)`.
    pub fn phi_forms(&self) -> &[LaurentPoly; 3] {
        &self.phi
    }

    /// Whether the data extends holomorphically over `z = 0`, so a disk
    /// domain (`r_min = 0`) is meshable without puncturing the origin.
    pub fn regular_at_origin(&self) -> bool {
        self.phi.iter().all(|p| p.min_exp().unwrap_or(0) >= 0)
    }

    pub fn with_domain(&self, domain: Domain) -> Result<Self> {
        Self::new(
            self.g.clone(),
            self.omega.clone(),
            domain,
            self.quotient,
            self.base_point,
        )
    }

    pub fn with_base_point(&self, base_point: Complex64) -> Result<Self> {
        Self::new(
            self.g.clone(),
            self.omega.clone(),
            self.domain,
            self.quotient,
            base_point,
        )
    }

    /// Homothety of the surface by `c > 0` (scales `ω`, hence `f` and `λ`).
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if c <= 0.0 {
            return Err(Error::Domain(format!("scale must be > 0, got {c}")));
        }
        Self::new(
            self.g.clone(),
            self.omega.scale(Complex64::new(c, 0.0)),
            self.domain,
            self.quotient,
            self.base_point,
        )
    }

    fn raw_evaluate(&self, z: Complex64) -> [f64; 3] {
        let ln_r = z.norm().ln();
        let mut out = [0.0; 3];
        for k in 0..3 {
            // residues are real by the type invariant, so the log term
            // contributes Re(c) ln|z| and loops change nothing.
            out[k] = self.antiderivatives[k].eval(z).re + self.residues[k].re * ln_r;
        }
        out
    }

    /// The surface point `f(z) = Re ∫_{z₀}^z φ`, with the base point fixing
    /// the translation.
    pub fn evaluate(&self, z: Complex64) -> Result<[f64; 3]> {
        if z == Complex64::new(0.0, 0.0) {
            if self.phi.iter().all(|p| p.min_exp().unwrap_or(0) >= 0) {
                // no puncture at the origin; evaluate directly
            } else {
                return Err(Error::Domain("cannot evaluate at the puncture z = 0".into()));
            }
        }
        if !self.domain.contains(z) && z != Complex64::new(0.0, 0.0) {
            return Err(Error::Domain(format!(
                "z = {z} outside domain annulus [{}, {}]",
                self.domain.r_min, self.domain.r_max
            )));
        }
        if z == Complex64::new(0.0, 0.0) {
            let mut out = [0.0; 3];
            for k in 0..3 {
                out[k] = self.antiderivatives[k].eval(z).re - self.base_offset[k];
            }
            return Ok(out);
        }
        let raw = self.raw_evaluate(z);
        Ok([
            raw[0] - self.base_offset[0],
            raw[1] - self.base_offset[1],
            raw[2] - self.base_offset[2],
        ])
    }

    /// Conformal factor `λ(z) = ½ (1 + |g|²) |ω/dz|`; vanishes exactly at
    /// branch points.
    pub fn conformal_factor(&self, z: Complex64) -> f64 {
        let gz = self.g.eval(z).norm_sqr();
        0.5 * (1.0 + gz) * self.omega.eval(z).norm()
    }

    /// Gauss curvature `K = -(4|g'| / (|ω/dz| (1+|g|²)²))² ≤ 0`.
    pub fn gauss_curvature(&self, z: Complex64) -> Result<f64> {
        let om = self.omega.eval(z).norm();
        let scale = self.omega.max_coeff_norm();
        if om <= 1e-13 * scale.max(1.0) {
            return Err(Error::Domain(format!(
                "curvature unbounded at branch point z = {z}"
            )));
        }
        let gp = self.g.derivative().eval(z).norm();
        let denom = om * (1.0 + self.g.eval(z).norm_sqr()).powi(2);
        let root = 4.0 * gp / denom;
        Ok(-(root * root))
    }

    /// Branch points: zeros of `ω/dz` inside the domain (where `g` is
    /// regular), located via companion-matrix roots of the exponent-shifted
    /// polynomial. When the quotient flag is set, antipodal pairs are merged
    /// and a single representative reported.
    pub fn branch_points(&self) -> Result<Vec<BranchPoint>> {
        let coeffs = self.omega.shifted_coeffs();
        if coeffs.len() <= 1 {
            return Ok(Vec::new());
        }
        let all = roots::polynomial_roots(&coeffs)?;
        let tol = 1e-7 * self.domain.r_max.max(1.0);
        let clusters = roots::cluster_roots(&all, tol);
        let boundary_tol = 1e-6 * self.domain.r_max.max(1.0);
        let mut in_domain: Vec<(Complex64, usize)> = Vec::new();
        for (z, mult) in clusters {
            let r = z.norm();
            if r <= self.domain.r_min || r >= self.domain.r_max {
                continue;
            }
            if (r - self.domain.r_min).abs() < boundary_tol
                || (r - self.domain.r_max).abs() < boundary_tol
            {
                return Err(Error::Degenerate(format!(
                    "metric zero at |z| = {r} lies on a domain boundary circle; enlarge the domain"
                )));
            }
            in_domain.push((z, mult));
        }
        let selected: Vec<(Complex64, usize)> = if self.quotient {
            // pair z with its antipode -1/conj(z), keeping one representative
            let mut used = vec![false; in_domain.len()];
            let mut reps = Vec::new();
            for i in 0..in_domain.len() {
                if used[i] {
                    continue;
                }
                let (z, mult) = in_domain[i];
                let partner = -Complex64::new(1.0, 0.0) / z.conj();
                let j = in_domain
                    .iter()
                    .enumerate()
                    .position(|(j, (w, m))| {
                        !used[j] && j != i && (*w - partner).norm() < tol && *m == mult
                    })
                    .ok_or_else(|| {
                        Error::InvalidData(format!(
                            "quotient data has an unpaired metric zero at z = {z}"
                        ))
                    })?;
                used[i] = true;
                used[j] = true;
                reps.push((z, mult));
            }
            reps
        } else {
            in_domain
        };
        let mut points = Vec::with_capacity(selected.len());
        for (z, mult) in selected {
            points.push(BranchPoint {
                location: z,
                order: mult as u32,
                image: self.evaluate(z)?,
            });
        }
        Ok(points)
    }

    /// Total branching order `B(Σ)` (already quotient-adjusted).
    pub fn total_branching_order(&self) -> Result<u32> {
        Ok(self.branch_points()?.iter().map(|b| b.order).sum())
    }

    /// Ends at the punctures 0 and ∞, with multiplicity
    /// `d = (max pole order of φ_k at the puncture) - 1`.
    pub fn end_profiles(&self) -> Result<Vec<EndProfile>> {
        let pole_at_zero = self
            .phi
            .iter()
            .filter_map(|p| p.min_exp())
            .map(|e| (-e).max(0))
            .max()
            .unwrap_or(0);
        // a 1-form ~ z^k dz has pole order k + 2 at infinity
        let pole_at_inf = self
            .phi
            .iter()
            .filter_map(|p| p.max_exp())
            .map(|e| e + 2)
            .max()
            .unwrap_or(0);
        if self.quotient {
            if pole_at_zero != pole_at_inf {
                return Err(Error::InvalidData(format!(
                    "quotient data requires matching pole orders at 0 and inf, got {pole_at_zero} and {pole_at_inf}"
                )));
            }
            if pole_at_zero < 2 {
                return Err(Error::InvalidData("quotient data has no end".into()));
            }
            return Ok(vec![EndProfile {
                puncture: Puncture::QuotientPair,
                multiplicity: (pole_at_zero - 1) as u32,
            }]);
        }
        let mut ends = Vec::new();
        if pole_at_zero >= 2 {
            ends.push(EndProfile {
                puncture: Puncture::Zero,
                multiplicity: (pole_at_zero - 1) as u32,
            });
        }
        if pole_at_inf >= 2 {
            ends.push(EndProfile {
                puncture: Puncture::Infinity,
                multiplicity: (pole_at_inf - 1) as u32,
            });
        }
        Ok(ends)
    }

    /// Topological profile for the index/spinning calculators. All surfaces
    /// in the Laurent class have genus-0 (compactified) conformal type.
    pub fn topology_profile(&self) -> Result<TopologyProfile> {
        let ends = self
            .end_profiles()?
            .iter()
            .map(|e| e.multiplicity)
            .collect();
        Ok(TopologyProfile {
            orientable: !self.quotient,
            genus: 0,
            ends,
            branching_order: self.total_branching_order()?,
        })
    }

    /// Total Gauss curvature `∫ K dA` over the domain by midpoint
    /// quadrature in polar coordinates, halved for quotient surfaces.
    ///
    /// `K λ² = -4|g'|²/(1+|g|²)²` is bounded, so branch points need no
    /// special handling.
    pub fn total_curvature(&self, resolution: usize) -> Result<TotalCurvatureEstimate> {
        if resolution < 64 {
            return Err(Error::Domain(format!(
                "quadrature resolution must be >= 64, got {resolution}"
            )));
        }
        let value = self.curvature_integral(self.domain.r_min, self.domain.r_max, resolution);
        // Tail beyond the domain, coarsely estimated on widened annuli.
        let outer = self.curvature_integral(self.domain.r_max, self.domain.r_max * 100.0, 256);
        let inner = if self.domain.r_min > 0.0 {
            self.curvature_integral(self.domain.r_min / 100.0, self.domain.r_min, 256)
        } else {
            0.0
        };
        let tail = outer + inner;
        let tail_fraction = if value.abs() > 0.0 {
            (tail / value).abs()
        } else if tail.abs() > 0.0 {
            f64::INFINITY
        } else {
            0.0
        };
        let factor = if self.quotient { 0.5 } else { 1.0 };
        Ok(TotalCurvatureEstimate {
            value: factor * value,
            tail_fraction,
            domain_too_small: tail_fraction > 0.01,
        })
    }

    fn curvature_integral(&self, r_lo: f64, r_hi: f64, resolution: usize) -> f64 {
        let gp = self.g.derivative();
        let n = resolution;
        let dtheta = 2.0 * std::f64::consts::PI / n as f64;
        let mut total = 0.0;
        if r_lo > 0.0 {
            // log-radial midpoint rule: measure r dr dθ = e^{2t} dt dθ
            let t_lo = r_lo.ln();
            let t_hi = r_hi.ln();
            let dt = (t_hi - t_lo) / n as f64;
            for i in 0..n {
                let t = t_lo + (i as f64 + 0.5) * dt;
                let r = t.exp();
                for j in 0..n {
                    let theta = (j as f64 + 0.5) * dtheta;
                    let z = Complex64::from_polar(r, theta);
                    let gz = self.g.eval(z).norm_sqr();
                    let kl2 = -4.0 * gp.eval(z).norm_sqr() / (1.0 + gz).powi(2);
                    total += kl2 * r * r * dt * dtheta;
                }
            }
        } else {
            let dr = (r_hi - r_lo) / n as f64;
            for i in 0..n {
                let r = r_lo + (i as f64 + 0.5) * dr;
                for j in 0..n {
                    let theta = (j as f64 + 0.5) * dtheta;
                    let z = Complex64::from_polar(r, theta);
                    let gz = self.g.eval(z).norm_sqr();
                    let kl2 = -4.0 * gp.eval(z).norm_sqr() / (1.0 + gz).powi(2);
                    total += kl2 * r * dr * dtheta;
                }
            }
        }
        total
    }

    pub fn to_json(&self) -> String {
        let spec = SurfaceSpec::from(self);
        serde_json::to_string_pretty(&spec).expect("surface spec serializes")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let spec: SurfaceSpec =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        spec.build()
    }
}

/// Result of the total-curvature quadrature, with an estimate of how much
/// of the integrand lies outside the chosen domain window.
#[derive(Clone, Copy, Debug)]
pub struct TotalCurvatureEstimate {
    pub value: f64,
    pub tail_fraction: f64,
    /// Set when the tail exceeds 1% of the computed value.
    pub domain_too_small: bool,
}

/// The surface-definition file schema: Laurent coefficients as
/// `[exponent, re, im]` triples.
#[derive(Serialize, Deserialize)]
struct SurfaceSpec {
    g: Vec<(i32, f64, f64)>,
    omega: Vec<(i32, f64, f64)>,
    domain: Domain,
    quotient: bool,
    #[serde(default = "default_base_point")]
    base_point: [f64; 2],
}

fn default_base_point() -> [f64; 2] {
    [1.0, 0.0]
}

impl From<&WeierstrassData> for SurfaceSpec {
    fn from(data: &WeierstrassData) -> Self {
        let dump = |p: &LaurentPoly| p.terms().map(|(e, c)| (e, c.re, c.im)).collect();
        Self {
            g: dump(&data.g),
            omega: dump(&data.omega),
            domain: data.domain,
            quotient: data.quotient,
            base_point: [data.base_point.re, data.base_point.im],
        }
    }
}

impl SurfaceSpec {
    fn build(self) -> Result<WeierstrassData> {
        let parse = |v: Vec<(i32, f64, f64)>| {
            LaurentPoly::from_terms(v.into_iter().map(|(e, re, im)| (e, Complex64::new(re, im))))
        };
        let g = parse(self.g)?;
        let omega = parse(self.omega)?;
        let domain = Domain::new(self.domain.r_min, self.domain.r_max)?;
        WeierstrassData::new(
            g,
            omega,
            domain,
            self.quotient,
            Complex64::new(self.base_point[0], self.base_point[1]),
        )
    }
}

/// The flat plane: `g = 0`, `ω = dz`, pointed at the origin via `z₀ = 1`.
pub fn plane() -> WeierstrassData {
    WeierstrassData::new(
        LaurentPoly::zero(),
        LaurentPoly::one(),
        Domain::new(0.0, 8.0).unwrap(),
        false,
        Complex64::new(1.0, 0.0),
    )
    .expect("plane data is valid")
}

/// The catenoid: `g = z`, `ω = z⁻² dz`, pointed at the origin via `z₀ = 1`
/// (waist circle of radius 1 around `(1, 0, 0)`).
pub fn catenoid() -> WeierstrassData {
    WeierstrassData::new(
        LaurentPoly::monomial(1, Complex64::new(1.0, 0.0)),
        LaurentPoly::monomial(-2, Complex64::new(1.0, 0.0)),
        Domain::new(1.0 / 50.0, 50.0).unwrap(),
        false,
        Complex64::new(1.0, 0.0),
    )
    .expect("catenoid data is valid")
}

/// Enneper's surface: `g = z`, `ω = dz` on a disk, pointed at the origin
/// via `z₀ = 0`.
pub fn enneper() -> WeierstrassData {
    WeierstrassData::new(
        LaurentPoly::monomial(1, Complex64::new(1.0, 0.0)),
        LaurentPoly::one(),
        Domain::new(0.0, 8.0).unwrap(),
        false,
        Complex64::new(1e-12, 0.0),
    )
    .expect("enneper data is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn phi_forms_plane_and_catenoid() {
        let p = plane();
        assert_eq!(p.phi_forms()[0], LaurentPoly::constant(c(0.5, 0.0)));
        assert_eq!(p.phi_forms()[1], LaurentPoly::constant(c(0.0, 0.5)));
        assert!(p.phi_forms()[2].is_zero());

        let cat = catenoid();
        assert_eq!(cat.phi_forms()[2], LaurentPoly::monomial(-1, c(1.0, 0.0)));
    }

    #[test]
    fn conformality_is_exact_for_builtins() {
        for data in [plane(), catenoid(), enneper()] {
            let phi = data.phi_forms();
            let conf = phi[0].square().add(&phi[1].square()).add(&phi[2].square());
            assert!(conf.max_coeff_norm() < 1e-14, "{conf}");
        }
    }

    #[test]
    fn plane_evaluation() {
        let p = plane();
        // f(z) = ((x-1)/2, -y/2, 0) with base point z0 = 1
        let z = c(3.0, 2.0);
        let f = p.evaluate(z).unwrap();
        assert!((f[0] - 1.0).abs() < 1e-14);
        assert!((f[1] + 1.0).abs() < 1e-14);
        assert!(f[2].abs() < 1e-14);
    }

    #[test]
    fn catenoid_third_coordinate_is_log_radius() {
        let cat = catenoid();
        for &t in &[-1.5f64, -0.3, 0.0, 0.7, 2.0] {
            let z = c(t.exp(), 0.0) * Complex64::from_polar(1.0, 0.9);
            let f = cat.evaluate(z).unwrap();
            assert!((f[2] - t).abs() < 1e-12, "t={t} f3={}", f[2]);
        }
    }

    #[test]
    fn catenoid_is_pointed_at_origin() {
        let cat = catenoid();
        let f = cat.evaluate(c(1.0, 0.0)).unwrap();
        assert!(f.iter().all(|v| v.abs() < 1e-14));
        // classical profile: |(x1 - 1, x2)| = cosh(ln|z|) on the meridian
        let z = c(2.0, 0.0);
        let f = cat.evaluate(z).unwrap();
        let radial = ((f[0] - 1.0).powi(2) + f[1].powi(2)).sqrt();
        assert!((radial - 2.0f64.ln().cosh()).abs() < 1e-12);
    }

    #[test]
    fn conformal_factor_examples() {
        let p = plane();
        assert!((p.conformal_factor(c(0.3, -0.2)) - 0.5).abs() < 1e-15);
        let cat = catenoid();
        // λ = (1+|z|²)|z|⁻²/2 = 1 on the unit circle
        for k in 0..8 {
            let z = Complex64::from_polar(1.0, k as f64);
            assert!((cat.conformal_factor(z) - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn gauss_curvature_examples() {
        let p = plane();
        assert_eq!(p.gauss_curvature(c(0.4, 0.1)).unwrap(), 0.0);
        let cat = catenoid();
        for k in 0..5 {
            let z = Complex64::from_polar(1.0, 0.7 * k as f64);
            assert!((cat.gauss_curvature(z).unwrap() + 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn branch_points_plane_empty() {
        assert!(plane().branch_points().unwrap().is_empty());
        assert!(catenoid().branch_points().unwrap().is_empty());
    }

    #[test]
    fn end_profiles_examples() {
        // catenoid: two ends of multiplicity 1 (pole-order oracle: phi_1 has
        // order-2 poles at both punctures)
        let ends = catenoid().end_profiles().unwrap();
        assert_eq!(ends.len(), 2);
        assert!(ends.iter().all(|e| e.multiplicity == 1));

        // Enneper: single end of multiplicity 3 at infinity (pole order 4)
        let ends = enneper().end_profiles().unwrap();
        assert_eq!(ends.len(), 1);
        assert_eq!(ends[0].puncture, Puncture::Infinity);
        assert_eq!(ends[0].multiplicity, 3);

        // plane: one simple end
        let ends = plane().end_profiles().unwrap();
        assert_eq!(ends.len(), 1);
        assert_eq!(ends[0].multiplicity, 1);
    }

    #[test]
    fn topology_profiles_match_known() {
        assert_eq!(
            catenoid().topology_profile().unwrap(),
            TopologyProfile::catenoid()
        );
        assert_eq!(
            enneper().topology_profile().unwrap(),
            TopologyProfile::enneper()
        );
        assert_eq!(plane().topology_profile().unwrap(), TopologyProfile::plane());
    }

    #[test]
    fn total_curvature_plane_zero() {
        let est = plane().total_curvature(64).unwrap();
        assert_eq!(est.value, 0.0);
    }

    #[test]
    fn non_real_residue_rejected() {
        // g = 0, ω = i z^{-1} dz gives φ₁ residue i/2
        let r = WeierstrassData::new(
            LaurentPoly::zero(),
            LaurentPoly::monomial(-1, c(0.0, 1.0)),
            Domain::new(0.5, 2.0).unwrap(),
            false,
            c(1.0, 0.0),
        );
        assert!(r.is_err());
    }

    #[test]
    fn json_round_trip() {
        let cat = catenoid();
        let json = cat.to_json();
        let back = WeierstrassData::from_json(&json).unwrap();
        let z = c(1.3, 0.4);
        let a = cat.evaluate(z).unwrap();
        let b = back.evaluate(z).unwrap();
        for k in 0..3 {
            assert_eq!(a[k], b[k]);
        }
    }

    #[test]
    fn json_duplicate_exponent_rejected() {
        let json = r#"{
            "g": [[1, 1.0, 0.0], [1, 2.0, 0.0]],
            "omega": [[0, 1.0, 0.0]],
            "domain": {"r_min": 0.1, "r_max": 10.0},
            "quotient": false
        }"#;
        assert!(WeierstrassData::from_json(json).is_err());
    }

    #[test]
    fn evaluate_outside_domain_rejected() {
        let cat = catenoid();
        assert!(cat.evaluate(c(100.0, 0.0)).is_err());
        assert!(cat.evaluate(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn scaling_scales_positions_and_metric() {
        let cat = catenoid();
        let big = cat.scaled(3.0).unwrap();
        let z = c(1.7, 0.6);
        let f = cat.evaluate(z).unwrap();
        let g = big.evaluate(z).unwrap();
        for k in 0..3 {
            assert!((g[k] - 3.0 * f[k]).abs() < 1e-12);
        }
        assert!((big.conformal_factor(z) - 3.0 * cat.conformal_factor(z)).abs() < 1e-12);
    }
}
