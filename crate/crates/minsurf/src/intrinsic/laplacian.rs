//! Discrete cotangent Laplacian and the flat-ambient identity
//! `Δ(|f|²) = 4` on minimal surfaces in R³.
//!
//! Weights come from the triangulated embedded mesh; vertex areas are
//! barycentric (a third of each incident triangle), which makes the
//! identity exact to machine precision on flat (planar) meshes.

use crate::error::{Error, Result};
use crate::intrinsic::mesh::IntrinsicMesh;

/// Residual statistics of the identity over interior vertices.
#[derive(Clone, Copy, Debug)]
pub struct LaplacianResiduals {
    pub max_residual: f64,
    pub mean_residual: f64,
    pub checked: usize,
}

/// Applies the cotangent Laplacian to `|f|²` and reports the deviation
/// from 4 over interior vertices. Vertices at or lattice-adjacent to
/// branch points are skipped (the identity degenerates with the metric).
pub fn laplacian_identity_residuals(mesh: &IntrinsicMesh) -> Result<LaplacianResiduals> {
    let n = mesh.vertex_count();
    let u: Vec<f64> = mesh.extrinsic_norm.iter().map(|&r| r * r).collect();
    let mut lap = vec![0.0f64; n];
    let mut area = vec![0.0f64; n];

    for tri in mesh.triangles() {
        let [a, b, c] = [tri[0] as usize, tri[1] as usize, tri[2] as usize];
        let pa = mesh.position[a];
        let pb = mesh.position[b];
        let pc = mesh.position[c];
        let ab = sub(pb, pa);
        let ac = sub(pc, pa);
        let bc = sub(pc, pb);
        let double_area = norm(cross(ab, ac));
        if double_area < 1e-300 {
            continue; // degenerate (branch) triangle
        }
        // cotangents of the three corner angles
        let cot_a = dot(ab, ac) / double_area;
        let cot_b = -dot(ab, bc) / double_area;
        let cot_c = dot(ac, bc) / double_area;

        // edge (b,c) is opposite a, etc.
        for (i, j, cot) in [(b, c, cot_a), (a, c, cot_b), (a, b, cot_c)] {
            let w = 0.5 * cot;
            lap[i] += w * (u[j] - u[i]);
            lap[j] += w * (u[i] - u[j]);
        }

        // Barycentric vertex areas. These (not Voronoi areas) make the
        // identity exact on flat meshes: the Galerkin cotangent form
        // applied to the linear interpolant of a quadratic integrates
        // `Δu · φ_i` exactly, and `∫ φ_i = area(support)/3`.
        let t_area = double_area / 2.0;
        area[a] += t_area / 3.0;
        area[b] += t_area / 3.0;
        area[c] += t_area / 3.0;
    }

    let branch_like = branch_vertex_mask(mesh);
    let mut max_residual = 0.0f64;
    let mut sum = 0.0f64;
    let mut checked = 0usize;
    for v in 0..n {
        if mesh.is_boundary(v) || branch_like[v] || area[v] <= 1e-300 {
            continue;
        }
        // The pole fan breaks the symmetric quad stencil; the cotangent
        // operator has an O(1) consistency error there on any surface, so
        // the fan's vertices are not treated as checkable interior points.
        if mesh.pole.is_some() && matches!(mesh.ring_sector(v), None | Some((0, _))) {
            continue;
        }
        let residual = (lap[v] / area[v] - 4.0).abs();
        max_residual = max_residual.max(residual);
        sum += residual;
        checked += 1;
    }
    if checked == 0 {
        return Err(Error::Mesh("no interior vertices to check".into()));
    }
    Ok(LaplacianResiduals {
        max_residual,
        mean_residual: sum / checked as f64,
        checked,
    })
}

/// Marks vertices near metric zeros: every vertex where λ nearly vanishes,
/// plus a lattice block around each branch-point location (branch points
/// generally fall between lattice vertices, where λ stays small but
/// nonzero while the identity still degenerates).
fn branch_vertex_mask(mesh: &IntrinsicMesh) -> Vec<bool> {
    let n = mesh.vertex_count();
    let lam_scale = mesh.lambda.iter().cloned().fold(0.0f64, f64::max);
    let mut mask = vec![false; n];
    let mut mark_block = |v: usize, reach: i64| match mesh.ring_sector(v) {
        None => {
            mask[v] = true;
            for j in 0..mesh.n_theta {
                mask[mesh.index(0, j)] = true;
            }
        }
        Some((i, j)) => {
            for di in -reach..=reach {
                let ii = i as i64 + di;
                if ii < 0 || ii >= mesh.n_r as i64 {
                    continue;
                }
                for dj in -reach..=reach {
                    let jj = (j as i64 + dj).rem_euclid(mesh.n_theta as i64);
                    mask[mesh.index(ii as usize, jj as usize)] = true;
                }
            }
        }
    };
    for v in 0..n {
        if mesh.lambda[v] < 1e-6 * lam_scale {
            mark_block(v, 1);
        }
    }
    // Truncation error grows like (h/ρ)² as the distance ρ to a metric
    // zero shrinks, so the skipped block must be several cells wide for
    // the surviving vertices to be meaningfully checkable.
    const BRANCH_REACH: i64 = 6;
    if let Ok(branch_points) = mesh.data().branch_points() {
        for bp in &branch_points {
            mark_block(mesh.nearest_vertex(bp.location), BRANCH_REACH);
            if mesh.data().quotient() {
                // The metric also degenerates at the antipodal partner of
                // each quotient representative.
                let partner = -1.0 / bp.location.conj();
                mark_block(mesh.nearest_vertex(partner), BRANCH_REACH);
            }
        }
    }
    mask
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}
