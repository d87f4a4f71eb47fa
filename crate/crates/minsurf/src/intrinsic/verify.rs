//! Verification harnesses: intrinsic ball-area monotonicity, chord-arc
//! estimates on extrinsic-ball components, and the flat-ambient Laplacian
//! identity. Each check states the discretization direction that makes a
//! pass meaningful.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bounds;
use crate::error::{Error, Result};
use crate::intrinsic::component::{omega_component, OmegaComponent};
use crate::intrinsic::distance::{
    fast_marching_distances, geodesic_distances, multi_source_dijkstra, DistanceField,
};
use crate::intrinsic::laplacian::laplacian_identity_residuals;
use crate::intrinsic::mesh::IntrinsicMesh;

/// Outcome of one quantitative check against one bound.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub surface: String,
    pub params: serde_json::Value,
    pub measured: f64,
    pub bound: f64,
    pub margin: f64,
    pub resolution: String,
    pub pass: bool,
}

pub fn resolution_string(mesh: &IntrinsicMesh) -> String {
    format!(
        "{}x{} stencil {}",
        mesh.n_r, mesh.n_theta, mesh.stencil_order
    )
}

/// Intrinsic ball area at radius `r` from a distance field.
pub struct BallArea {
    /// Partial-cell estimate: cells crossed by the sphere contribute the
    /// fraction `½ + (r − d)/2h` of their area (`h` the half-cell
    /// diameter), which cancels the half-cell alignment bias of plain
    /// in/out counting.
    pub area: f64,
    /// Certified lower value: only cells entirely inside the ball, so the
    /// sum never exceeds the continuum area.
    pub area_lower: f64,
    /// The ball reaches the truncated mesh boundary; the area is cut off
    /// and only usable as a lower estimate.
    pub truncated: bool,
}

/// Sums cell areas over vertices within distance `r` of the field's source.
/// Monotone nondecreasing in `r` by construction.
pub fn ball_area(mesh: &IntrinsicMesh, field: &DistanceField, r: f64) -> BallArea {
    let mut area = 0.0;
    let mut area_lower = 0.0;
    let mut truncated = false;
    for v in 0..mesh.vertex_count() {
        let d = field.dist[v];
        let h = mesh.half_cell_diameter(v);
        if d - h <= r {
            let frac = if h > 0.0 {
                (0.5 + (r - d) / (2.0 * h)).clamp(0.0, 1.0)
            } else {
                1.0
            };
            area += frac * mesh.cell_area[v];
            if mesh.is_boundary(v) && frac > 0.0 {
                truncated = true;
            }
            if d + h <= r {
                area_lower += mesh.cell_area[v];
            }
        }
    }
    BallArea {
        area,
        area_lower,
        truncated,
    }
}

/// Checks `A(r) ≥ π r²` (the minimal-surface-in-R³ case of the intrinsic
/// monotonicity bound) at each radius.
///
/// Distances use the fast-marching solver: the stencil-graph overestimate,
/// while one-sided, has a distortion floor larger than the bound's margin
/// at small radii. The certified-lower area (strict undercount) is reported
/// alongside in `params` so the conservative reading stays available.
pub fn verify_monotonicity(
    mesh: &IntrinsicMesh,
    source: usize,
    radii: &[f64],
    surface: &str,
) -> Result<Vec<VerificationReport>> {
    if radii.is_empty() || radii.iter().any(|&r| r <= 0.0) {
        return Err(Error::Domain("radii must be positive".into()));
    }
    let field = fast_marching_distances(mesh, source)?;
    let mut reports = Vec::with_capacity(radii.len());
    for &r in radii {
        let ba = ball_area(mesh, &field, r);
        let bound = std::f64::consts::PI * r * r;
        let pass = ba.area >= bound && !ba.truncated;
        reports.push(VerificationReport {
            check: "monotonicity".into(),
            surface: surface.into(),
            params: json!({
                "radius": r,
                "ratio": ba.area / bound,
                "ratio_lower": ba.area_lower / bound,
                "truncated": ba.truncated,
                "distance_method": "fast-marching",
            }),
            measured: ba.area,
            bound,
            margin: ba.area / bound - 1.0,
            resolution: resolution_string(mesh),
            pass,
        });
    }
    Ok(reports)
}

/// Farthest-point sample of the vertices selected by `pick`, measured with
/// distances inside `mask`. Deterministic; maxima of distance functions
/// concentrate near extreme points, so a small sample suffices.
fn farthest_point_samples(
    mesh: &IntrinsicMesh,
    start: usize,
    pick: &[bool],
    mask: &[bool],
    count: usize,
) -> Vec<usize> {
    let mut samples = vec![start];
    while samples.len() < count {
        let seeds: Vec<(usize, f64)> = samples.iter().map(|&s| (s, 0.0)).collect();
        let d = multi_source_dijkstra(mesh, &seeds, Some(mask));
        let mut best = None;
        let mut best_d = 0.0;
        for v in 0..mesh.vertex_count() {
            if pick[v] && d[v].is_finite() && d[v] > best_d {
                best_d = d[v];
                best = Some(v);
            }
        }
        match best {
            Some(v) if best_d > 0.0 => samples.push(v),
            _ => break,
        }
    }
    samples
}

fn max_over(d: &[f64], pick: &[bool]) -> f64 {
    d.iter()
        .zip(pick)
        .filter(|(dv, &p)| p && dv.is_finite())
        .map(|(dv, _)| *dv)
        .fold(0.0, f64::max)
}

/// Number of interior sample points for the pairwise-distance maxima.
const PAIR_SAMPLES: usize = 24;

/// Chord-arc harness on `Ω_R` and `Ω_{2R}` with bound constants from
/// `(I, B)`:
///
/// * `d_{Ω_R}(p, ∂Ω_R) < L̂·R` for all `p ∈ Ω_R`,
/// * `d_{Ω_{2R}}(p, q) < Ĉ·R` for all `p, q ∈ Ω_R`,
/// * `d_{Ω_R}(p, q) ≤ 2L̂(3I+2B−1)R + ½·Length(∂Ω_R)`,
/// * boundary curve count `b ≤ 3I+2B−1`.
///
/// Distances use the stencil graph, which overestimates, so a measured pass
/// is conservative. Bounds that are nonpositive are reported as vacuous
/// (for the diameter check the plane's `≤ 2R` clause is used instead, with
/// a 5% allowance for the stencil distortion).
pub fn verify_chord_arc(
    mesh: &IntrinsicMesh,
    p0: usize,
    big_r: f64,
    index: u32,
    branching: u32,
    surface: &str,
) -> Result<Vec<VerificationReport>> {
    let comp_r = omega_component(mesh, p0, big_r)?;
    let comp_2r = omega_component(mesh, p0, 2.0 * big_r)?;
    if comp_2r.touches_mesh_boundary {
        return Err(Error::Mesh(
            "Omega_2R reaches the truncated mesh boundary; enlarge the domain".into(),
        ));
    }
    let l_hat = bounds::chord_arc_l(index, branching);
    let c_hat = bounds::chord_arc_c(index, branching);
    let b_max = bounds::boundary_count_bound(index, branching);
    let resolution = resolution_string(mesh);
    let base_params = |extra: serde_json::Value| {
        let mut m = serde_json::Map::new();
        m.insert("R".into(), json!(comp_r.big_r));
        m.insert("index".into(), json!(index));
        m.insert("branching".into(), json!(branching));
        if let serde_json::Value::Object(o) = extra {
            m.extend(o);
        }
        serde_json::Value::Object(m)
    };

    let mut reports = Vec::new();

    // (1) distance to the boundary inside Omega_R
    let d_bnd = multi_source_dijkstra(mesh, &comp_r.boundary_seeds, Some(&comp_r.mask));
    let measured_bd = max_over(&d_bnd, &comp_r.mask);
    let bound_bd = l_hat * comp_r.big_r;
    reports.push(VerificationReport {
        check: "chord-arc-boundary".into(),
        surface: surface.into(),
        params: base_params(json!({"l_hat": l_hat, "distance_method": "stencil"})),
        measured: measured_bd,
        bound: bound_bd,
        margin: (bound_bd - measured_bd) / bound_bd,
        resolution: resolution.clone(),
        pass: measured_bd < bound_bd,
    });

    // (2) pairwise distances through Omega_2R
    let samples = farthest_point_samples(mesh, p0, &comp_r.mask, &comp_2r.mask, PAIR_SAMPLES);
    let mut measured_pair = 0.0f64;
    let mut measured_pair_in_r = 0.0f64;
    for &s in &samples {
        let d2 = multi_source_dijkstra(mesh, &[(s, 0.0)], Some(&comp_2r.mask));
        measured_pair = measured_pair.max(max_over(&d2, &comp_r.mask));
        let d1 = multi_source_dijkstra(mesh, &[(s, 0.0)], Some(&comp_r.mask));
        measured_pair_in_r = measured_pair_in_r.max(max_over(&d1, &comp_r.mask));
    }
    let vacuous_diameter = c_hat <= 0.0;
    let bound_pair = if vacuous_diameter {
        // stable unbranched complete surfaces are planes; the statement's
        // plane clause bounds pair distances by 2R (allow the stencil
        // distortion on top)
        2.0 * comp_r.big_r * 1.05
    } else {
        c_hat * comp_r.big_r
    };
    reports.push(VerificationReport {
        check: "chord-arc-diameter".into(),
        surface: surface.into(),
        params: base_params(json!({
            "c_hat": c_hat,
            "vacuous_c_hat": vacuous_diameter,
            "clause": if vacuous_diameter { "2R-plane" } else { "C-hat" },
            "samples": samples.len(),
            "distance_method": "stencil",
        })),
        measured: measured_pair,
        bound: bound_pair,
        margin: (bound_pair - measured_pair) / bound_pair,
        resolution: resolution.clone(),
        pass: measured_pair < bound_pair,
    });

    // (3) pair distances inside Omega_R against 2L̂(3I+2B−1)R + ½|∂Ω_R|
    let factor = 3 * index as i64 + 2 * branching as i64 - 1;
    let vacuous_pair = factor <= 0;
    let bound_51 = if vacuous_pair {
        f64::NAN
    } else {
        2.0 * l_hat * factor as f64 * comp_r.big_r + 0.5 * comp_r.boundary_length
    };
    reports.push(VerificationReport {
        check: "chord-arc-pair".into(),
        surface: surface.into(),
        params: base_params(json!({
            "boundary_length": comp_r.boundary_length,
            "vacuous": vacuous_pair,
            "distance_method": "stencil",
        })),
        measured: measured_pair_in_r,
        bound: bound_51,
        margin: if vacuous_pair {
            f64::NAN
        } else {
            (bound_51 - measured_pair_in_r) / bound_51
        },
        resolution: resolution.clone(),
        pass: vacuous_pair || measured_pair_in_r <= bound_51,
    });

    // (4) boundary curve count
    let vacuous_b = b_max < 0;
    reports.push(VerificationReport {
        check: "boundary-count".into(),
        surface: surface.into(),
        params: base_params(json!({"vacuous": vacuous_b})),
        measured: comp_r.b as f64,
        bound: b_max as f64,
        margin: b_max as f64 - comp_r.b as f64,
        resolution,
        pass: vacuous_b || (comp_r.b as i64) <= b_max,
    });

    Ok(reports)
}

/// Convenience accessors used by the harness drivers.
pub fn component_summary(comp: &OmegaComponent) -> serde_json::Value {
    json!({
        "R": comp.big_r,
        "vertices": comp.vertex_count,
        "b": comp.b,
        "boundary_length": comp.boundary_length,
    })
}

/// Max deviation of the discrete `Δ(|f|²)` from 4 over interior vertices.
pub fn verify_laplacian(mesh: &IntrinsicMesh, tol: f64, surface: &str) -> Result<VerificationReport> {
    let res = laplacian_identity_residuals(mesh)?;
    Ok(VerificationReport {
        check: "laplacian-identity".into(),
        surface: surface.into(),
        params: json!({
            "mean_residual": res.mean_residual,
            "interior_vertices": res.checked,
        }),
        measured: res.max_residual,
        bound: tol,
        margin: (tol - res.max_residual) / tol,
        resolution: resolution_string(mesh),
        pass: res.max_residual < tol,
    })
}

/// Geodesic distances re-exported at harness level for drivers that attach
/// a distance field to exports.
pub fn distance_field(mesh: &IntrinsicMesh, source: usize) -> DistanceField {
    geodesic_distances(mesh, source)
}
