//! Polar discretization of a Weierstrass surface.
//!
//! Annulus domains (`r_min > 0`) are sampled log-radially, which matches
//! the conformal structure of the punctured plane and keeps cells
//! near-square under `z ↦ log z`. Disk domains (`r_min = 0`, data regular
//! at the origin) get uniformly spaced rings plus a dedicated pole vertex.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::weierstrass::WeierstrassData;

/// Grid layout of the radial coordinate.
#[derive(Clone, Copy, Debug)]
pub enum Grid {
    /// Rings at `r_i = exp(t_min + i·dt)`, `i = 0..n_r`.
    Annulus { t_min: f64, dt: f64 },
    /// Rings at `r_i = (i+1)·dr` plus a pole vertex at the origin.
    Disk { dr: f64 },
}

/// A weighted polar mesh carrying the intrinsic metric of the surface.
///
/// Vertex `(ring i, sector j)` has index `i·n_θ + j`; the optional pole
/// vertex comes last. Neighbor edges are generated on demand from the
/// stencil offset set, so no adjacency lists are stored.
pub struct IntrinsicMesh {
    data: WeierstrassData,
    pub n_r: usize,
    pub n_theta: usize,
    pub stencil_order: usize,
    pub grid: Grid,
    /// Parameter-plane positions.
    pub z: Vec<Complex64>,
    /// Embedded positions `f(z)`.
    pub position: Vec<[f64; 3]>,
    /// Conformal factor `λ(z)`.
    pub lambda: Vec<f64>,
    /// Extrinsic norms `|f(z)|`.
    pub extrinsic_norm: Vec<f64>,
    /// Metric cell areas `λ² · (exact parameter cell area)`.
    pub cell_area: Vec<f64>,
    pub pole: Option<usize>,
    /// Coprime lattice offsets `(di, dj)` of the stencil neighborhood.
    stencil: Vec<(i32, i32)>,
    /// `|f|` at branch points inside the domain (for transversality checks).
    pub branch_image_norms: Vec<f64>,
    dtheta: f64,
}

/// Builds the mesh. Edge weights between stencil neighbors are
/// `½(λ(u)+λ(v))·|z_u − z_v|` (trapezoidal metric).
pub fn build_mesh(
    data: &WeierstrassData,
    n_r: usize,
    n_theta: usize,
    stencil_order: usize,
) -> Result<IntrinsicMesh> {
    if n_r < 16 || n_theta < 32 {
        return Err(Error::Mesh(format!(
            "resolution too low: need n_r >= 16 and n_theta >= 32, got {n_r} x {n_theta}"
        )));
    }
    if !(1..=3).contains(&stencil_order) {
        return Err(Error::Mesh(format!(
            "stencil order must be 1, 2 or 3, got {stencil_order}"
        )));
    }
    let dom = data.domain();
    let disk = dom.r_min == 0.0;
    if disk && !data.regular_at_origin() {
        return Err(Error::Mesh(
            "domain contains the puncture z = 0; choose r_min > 0".into(),
        ));
    }
    let grid = if disk {
        Grid::Disk {
            dr: dom.r_max / n_r as f64,
        }
    } else {
        Grid::Annulus {
            t_min: dom.r_min.ln(),
            dt: (dom.r_max.ln() - dom.r_min.ln()) / (n_r - 1) as f64,
        }
    };
    let dtheta = 2.0 * std::f64::consts::PI / n_theta as f64;
    let n = n_r * n_theta + usize::from(disk);

    let mut z = Vec::with_capacity(n);
    let mut position = Vec::with_capacity(n);
    let mut lambda = Vec::with_capacity(n);
    let mut extrinsic_norm = Vec::with_capacity(n);
    let mut cell_area = Vec::with_capacity(n);
    for i in 0..n_r {
        let r = ring_radius(grid, i);
        // exact parameter cell area factor per unit dθ
        let radial_factor = match grid {
            Grid::Annulus { dt, .. } => {
                // in (t, θ) coordinates, measure = e^{2t} dt dθ = r² dt dθ
                let w = if i == 0 || i == n_r - 1 { dt / 2.0 } else { dt };
                r * r * w
            }
            Grid::Disk { dr } => {
                if i == n_r - 1 {
                    (r * r - (r - dr / 2.0) * (r - dr / 2.0)) / 2.0
                } else {
                    r * dr
                }
            }
        };
        for j in 0..n_theta {
            let zz = Complex64::from_polar(r, j as f64 * dtheta);
            let f = data.evaluate(zz)?;
            let lam = data.conformal_factor(zz);
            z.push(zz);
            extrinsic_norm.push((f[0] * f[0] + f[1] * f[1] + f[2] * f[2]).sqrt());
            position.push(f);
            lambda.push(lam);
            cell_area.push(lam * lam * radial_factor * dtheta);
        }
    }
    let pole = if disk {
        let zz = Complex64::new(0.0, 0.0);
        let f = data.evaluate(zz)?;
        let lam = data.conformal_factor(zz);
        let dr = match grid {
            Grid::Disk { dr } => dr,
            _ => unreachable!(),
        };
        z.push(zz);
        extrinsic_norm.push((f[0] * f[0] + f[1] * f[1] + f[2] * f[2]).sqrt());
        position.push(f);
        lambda.push(lam);
        cell_area.push(lam * lam * std::f64::consts::PI * (dr / 2.0) * (dr / 2.0));
        Some(n_r * n_theta)
    } else {
        None
    };

    let mut stencil = Vec::new();
    let k = stencil_order as i32;
    for di in -k..=k {
        for dj in -k..=k {
            if (di, dj) == (0, 0) {
                continue;
            }
            if gcd(di.unsigned_abs(), dj.unsigned_abs()) == 1 {
                stencil.push((di, dj));
            }
        }
    }

    let branch_image_norms = data
        .branch_points()
        .map(|bps| {
            bps.iter()
                .map(|b| (b.image[0].powi(2) + b.image[1].powi(2) + b.image[2].powi(2)).sqrt())
                .collect()
        })
        .unwrap_or_default();

    Ok(IntrinsicMesh {
        data: data.clone(),
        n_r,
        n_theta,
        stencil_order,
        grid,
        z,
        position,
        lambda,
        extrinsic_norm,
        cell_area,
        pole,
        stencil,
        branch_image_norms,
        dtheta,
    })
}

fn ring_radius(grid: Grid, i: usize) -> f64 {
    match grid {
        Grid::Annulus { t_min, dt } => (t_min + i as f64 * dt).exp(),
        Grid::Disk { dr } => (i + 1) as f64 * dr,
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl IntrinsicMesh {
    pub fn data(&self) -> &WeierstrassData {
        &self.data
    }

    pub fn vertex_count(&self) -> usize {
        self.z.len()
    }

    pub fn dtheta(&self) -> f64 {
        self.dtheta
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.n_theta + j
    }

    /// `(ring, sector)` of a lattice vertex; `None` for the pole.
    pub fn ring_sector(&self, v: usize) -> Option<(usize, usize)> {
        if Some(v) == self.pole {
            None
        } else {
            Some((v / self.n_theta, v % self.n_theta))
        }
    }

    pub fn ring_radius_at(&self, i: usize) -> f64 {
        ring_radius(self.grid, i)
    }

    /// Radial boundary rows: both extreme rings of an annulus, only the
    /// outer ring of a disk (the pole covers the center).
    pub fn is_boundary(&self, v: usize) -> bool {
        match self.ring_sector(v) {
            None => false,
            Some((i, _)) => {
                i == self.n_r - 1 || (i == 0 && matches!(self.grid, Grid::Annulus { .. }))
            }
        }
    }

    /// Nearest mesh vertex to a parameter point.
    pub fn nearest_vertex(&self, z: Complex64) -> usize {
        let r = z.norm();
        match self.grid {
            Grid::Disk { dr } => {
                if r < dr / 2.0 {
                    return self.pole.expect("disk grid has a pole");
                }
                let i = ((r / dr - 1.0).round().max(0.0) as usize).min(self.n_r - 1);
                let j = self.sector_of(z.arg());
                self.index(i, j)
            }
            Grid::Annulus { t_min, dt } => {
                let i = (((r.ln() - t_min) / dt).round().max(0.0) as usize).min(self.n_r - 1);
                let j = self.sector_of(z.arg());
                self.index(i, j)
            }
        }
    }

    fn sector_of(&self, theta: f64) -> usize {
        let tau = 2.0 * std::f64::consts::PI;
        let t = theta.rem_euclid(tau);
        (((t / self.dtheta).round()) as usize) % self.n_theta
    }

    fn edge_weight(&self, u: usize, v: usize) -> f64 {
        0.5 * (self.lambda[u] + self.lambda[v]) * (self.z[u] - self.z[v]).norm()
    }

    /// Visits every stencil neighbor of `v` with its metric edge weight.
    pub fn for_each_neighbor<F: FnMut(usize, f64)>(&self, v: usize, mut visit: F) {
        if Some(v) == self.pole {
            for j in 0..self.n_theta {
                let u = self.index(0, j);
                visit(u, self.edge_weight(v, u));
            }
            return;
        }
        let (i, j) = self.ring_sector(v).expect("lattice vertex");
        for &(di, dj) in &self.stencil {
            let i2 = i as i64 + di as i64;
            if i2 < 0 || i2 >= self.n_r as i64 {
                continue;
            }
            let j2 = (j as i64 + dj as i64).rem_euclid(self.n_theta as i64);
            let u = self.index(i2 as usize, j2 as usize);
            visit(u, self.edge_weight(v, u));
        }
        if i == 0 {
            if let Some(p) = self.pole {
                visit(p, self.edge_weight(v, p));
            }
        }
    }

    /// Upper bound on the metric distance from a vertex to any point of
    /// its quadrature cell.
    pub fn half_cell_diameter(&self, v: usize) -> f64 {
        match self.ring_sector(v) {
            None => {
                let dr = match self.grid {
                    Grid::Disk { dr } => dr,
                    _ => unreachable!(),
                };
                self.lambda[v] * dr / 2.0
            }
            Some((i, _)) => {
                let r = self.ring_radius_at(i);
                match self.grid {
                    Grid::Annulus { dt, .. } => {
                        // conformal (t, θ) cell scaled by λ̃ = λ·r at the
                        // outer cell radius
                        let lam_tilde = self.lambda[v] * r * (dt / 2.0).exp();
                        lam_tilde * 0.5 * (dt * dt + self.dtheta * self.dtheta).sqrt()
                    }
                    Grid::Disk { dr } => {
                        let ang = (r + dr / 2.0) * self.dtheta;
                        self.lambda[v] * 0.5 * (dr * dr + ang * ang).sqrt()
                    }
                }
            }
        }
    }

    /// Metric length of a short parameter segment `z1 → z2` (midpoint λ).
    pub fn metric_segment_length(&self, z1: Complex64, z2: Complex64) -> f64 {
        let mid = (z1 + z2) / 2.0;
        self.data.conformal_factor(mid) * (z2 - z1).norm()
    }

    /// Total quadrature area of the mesh.
    pub fn total_area(&self) -> f64 {
        self.cell_area.iter().sum()
    }

    /// Triangulation: each quad split along its increasing parameter
    /// diagonal, plus the pole fan on disks. Indices are mesh vertex ids.
    ///
    /// Every cell splits the same way on purpose. A per-cell choice (e.g.
    /// the shorter embedded diagonal) flips along seams of the surface,
    /// leaving seam vertices without a point-symmetric stencil; that costs
    /// the discrete Laplacian its pointwise consistency (O(1) residual at
    /// those vertices). The quads are fine enough that either diagonal is
    /// embedded.
    pub fn triangles(&self) -> Vec<[u32; 3]> {
        let mut tris = Vec::with_capacity(2 * (self.n_r - 1) * self.n_theta);
        for i in 0..self.n_r - 1 {
            for j in 0..self.n_theta {
                let j1 = (j + 1) % self.n_theta;
                let v00 = self.index(i, j) as u32;
                let v10 = self.index(i + 1, j) as u32;
                let v11 = self.index(i + 1, j1) as u32;
                let v01 = self.index(i, j1) as u32;
                tris.push([v00, v10, v11]);
                tris.push([v00, v11, v01]);
            }
        }
        if let Some(p) = self.pole {
            for j in 0..self.n_theta {
                let j1 = (j + 1) % self.n_theta;
                tris.push([p as u32, self.index(0, j) as u32, self.index(0, j1) as u32]);
            }
        }
        tris
    }

    /// Whether `R` is transverse enough: not within one cell diameter of a
    /// branch-image radius (Sard-style nudging is the caller's job).
    pub fn transversality_gap(&self, big_r: f64) -> f64 {
        self.branch_image_norms
            .iter()
            .map(|&b| (big_r - b).abs())
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest half-cell diameter, a mesh-scale yardstick.
    pub fn max_cell_diameter(&self) -> f64 {
        (0..self.vertex_count())
            .map(|v| 2.0 * self.half_cell_diameter(v))
            .fold(0.0, f64::max)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::weierstrass;

    #[test]
    fn plane_disk_area_oracle() {
        // λ = 1/2, so the image of |z| <= ρ has area πρ²/4
        let data = weierstrass::plane();
        let mesh = build_mesh(&data, 64, 128, 2).unwrap();
        let rho = data.domain().r_max;
        let want = std::f64::consts::PI * rho * rho / 4.0;
        let got = mesh.total_area();
        assert!((got - want).abs() / want < 1e-12, "got {got}, want {want}");
    }

    #[test]
    fn catenoid_annulus_area_oracle() {
        // area over [e^{-1}, e] is 2π ∫ cosh² t dt over [-1, 1]
        let data = weierstrass::catenoid()
            .with_domain(crate::weierstrass::Domain::new((-1.0f64).exp(), 1.0f64.exp()).unwrap())
            .unwrap();
        let mesh = build_mesh(&data, 256, 64, 1).unwrap();
        let want = 2.0 * std::f64::consts::PI * (1.0 + 0.5 * 2.0f64.sinh());
        let got = mesh.total_area();
        assert!((got - want).abs() / want < 1e-3, "got {got}, want {want}");
    }

    #[test]
    fn refinement_improves_area() {
        let data = weierstrass::enneper();
        let coarse = build_mesh(&data, 32, 64, 1).unwrap().total_area();
        let fine = build_mesh(&data, 128, 256, 1).unwrap().total_area();
        let finer = build_mesh(&data, 256, 512, 1).unwrap().total_area();
        assert!((finer - fine).abs() < (fine - coarse).abs() + 1e-9);
    }

    #[test]
    fn puncture_requires_positive_r_min() {
        let data = weierstrass::catenoid()
            .with_domain(crate::weierstrass::Domain::new(0.0, 2.0).unwrap())
            .unwrap();
        assert!(build_mesh(&data, 32, 64, 1).is_err());
    }

    #[test]
    fn stencil_sizes() {
        let data = weierstrass::plane();
        // coprime offsets: 8 at order 1, 16 at order 2, 32 at order 3
        for (k, want) in [(1usize, 8usize), (2, 16), (3, 32)] {
            let mesh = build_mesh(&data, 16, 32, k).unwrap();
            let interior = mesh.index(8, 5);
            let mut count = 0;
            mesh.for_each_neighbor(interior, |_, w| {
                assert!(w > 0.0);
                count += 1;
            });
            assert_eq!(count, want, "order {k}");
        }
    }

    #[test]
    fn pole_connects_to_inner_ring() {
        let data = weierstrass::plane();
        let mesh = build_mesh(&data, 16, 32, 1).unwrap();
        let pole = mesh.pole.unwrap();
        let mut count = 0;
        mesh.for_each_neighbor(pole, |_, _| count += 1);
        assert_eq!(count, 32);
        assert!(!mesh.is_boundary(pole));
        assert!(mesh.is_boundary(mesh.index(15, 0)));
        assert!(!mesh.is_boundary(mesh.index(0, 0)));
    }

    #[test]
    fn branch_vertex_has_zero_cell_area() {
        // Henneberg-type metric zero: grid aligned so a vertex hits z = 1
        let g = crate::laurent::LaurentPoly::monomial(1, Complex64::new(1.0, 0.0));
        let omega = crate::laurent::LaurentPoly::from_terms([
            (0, Complex64::new(-1.0, 0.0)),
            (4, Complex64::new(1.0, 0.0)),
        ])
        .unwrap()
        .mul(&crate::laurent::LaurentPoly::monomial(
            -4,
            Complex64::new(1.0, 0.0),
        ));
        let data = WeierstrassData::new(
            g,
            omega,
            crate::weierstrass::Domain::new(0.1, 10.0).unwrap(),
            true,
            Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4),
        )
        .unwrap();
        // odd ring count puts a ring exactly on |z| = 1 (log-symmetric domain)
        let mesh = build_mesh(&data, 17, 32, 1).unwrap();
        let v = mesh.index(8, 0); // z = 1 exactly
        assert!((mesh.z[v] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        // λ vanishes at the metric zero (up to the last-ulp ring placement)
        assert!(mesh.lambda[v] < 1e-12);
        assert!(mesh.cell_area[v] < 1e-20);
    }

    #[test]
    fn nearest_vertex_round_trip() {
        let data = weierstrass::catenoid();
        let mesh = build_mesh(&data, 64, 128, 2).unwrap();
        for v in [0usize, 100, 5000, mesh.vertex_count() - 1] {
            assert_eq!(mesh.nearest_vertex(mesh.z[v]), v);
        }
    }
}
