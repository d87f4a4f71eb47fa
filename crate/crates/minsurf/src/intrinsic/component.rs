//! Extrinsic-ball components `Ω_R`: the connected piece of
//! `{|f| ≤ R}` containing a base vertex, its boundary curve count `b`,
//! and its boundary length, extracted by marching-squares tracing of the
//! level set `|f| = R` on the polar grid.

use crate::error::{Error, Result};
use crate::intrinsic::mesh::IntrinsicMesh;
use num_complex::Complex64;

/// The component of `{|f| ≤ R}` containing the base vertex.
pub struct OmegaComponent {
    /// Effective radius after any transversality nudge.
    pub big_r: f64,
    pub requested_r: f64,
    /// Vertex membership mask.
    pub mask: Vec<bool>,
    pub vertex_count: usize,
    /// Number of boundary curves.
    pub b: usize,
    /// Intrinsic length of the boundary curves.
    pub boundary_length: f64,
    /// `(inside vertex, metric offset to the crossing point)` pairs, one per
    /// crossed grid edge — ready to seed a distance-to-boundary sweep.
    pub boundary_seeds: Vec<(usize, f64)>,
    /// Set when the component reaches the truncated mesh boundary, i.e. it
    /// is not compactly contained and all derived quantities are suspect.
    pub touches_mesh_boundary: bool,
}

/// Flood-fills `{|f| ≤ R}` from `p0` and traces its boundary.
///
/// `R` is nudged outward by half a local cell diameter when it falls within
/// one cell diameter of a branch-point image radius (almost every sphere is
/// transverse, so a nudged radius is equivalent for the checks).
pub fn omega_component(mesh: &IntrinsicMesh, p0: usize, big_r: f64) -> Result<OmegaComponent> {
    if big_r <= 0.0 {
        return Err(Error::Domain(format!("R must be positive, got {big_r}")));
    }
    if mesh.extrinsic_norm[p0] > big_r {
        return Err(Error::Domain(format!(
            "base vertex has |f| = {} > R = {big_r}",
            mesh.extrinsic_norm[p0]
        )));
    }
    let requested = big_r;
    let big_r = nudge_transverse(mesh, big_r)?;
    let max_norm = mesh
        .extrinsic_norm
        .iter()
        .cloned()
        .fold(0.0f64, f64::max);
    if big_r >= max_norm {
        return Err(Error::Degenerate(format!(
            "R = {big_r} exceeds every |f| on the mesh (max {max_norm}); \
             the component is not compactly contained"
        )));
    }

    let inside = |v: usize| mesh.extrinsic_norm[v] <= big_r;
    let n = mesh.vertex_count();
    let mut mask = vec![false; n];
    let mut stack = vec![p0];
    mask[p0] = true;
    let mut count = 0usize;
    let mut touches = false;
    while let Some(v) = stack.pop() {
        count += 1;
        if mesh.is_boundary(v) {
            touches = true;
        }
        let mut push = |u: usize| {
            if !mask[u] && inside(u) {
                mask[u] = true;
                stack.push(u);
            }
        };
        match mesh.ring_sector(v) {
            None => {
                for j in 0..mesh.n_theta {
                    push(mesh.index(0, j));
                }
            }
            Some((i, j)) => {
                if i > 0 {
                    push(mesh.index(i - 1, j));
                } else if let Some(p) = mesh.pole {
                    push(p);
                }
                if i + 1 < mesh.n_r {
                    push(mesh.index(i + 1, j));
                }
                push(mesh.index(i, (j + 1) % mesh.n_theta));
                push(mesh.index(i, (j + mesh.n_theta - 1) % mesh.n_theta));
            }
        }
    }

    let trace = trace_boundary(mesh, &mask, big_r);
    Ok(OmegaComponent {
        big_r,
        requested_r: requested,
        mask,
        vertex_count: count,
        b: trace.curve_count,
        boundary_length: trace.length,
        boundary_seeds: trace.seeds,
        touches_mesh_boundary: touches,
    })
}

fn nudge_transverse(mesh: &IntrinsicMesh, big_r: f64) -> Result<f64> {
    let locations: Vec<(Complex64, f64)> = mesh
        .data()
        .branch_points()
        .map(|bps| {
            bps.iter()
                .map(|b| {
                    let norm =
                        (b.image[0].powi(2) + b.image[1].powi(2) + b.image[2].powi(2)).sqrt();
                    (b.location, norm)
                })
                .collect()
        })
        .unwrap_or_default();
    let mut r = big_r;
    for &(loc, image_norm) in &locations {
        let diam = 2.0 * mesh.half_cell_diameter(mesh.nearest_vertex(loc));
        if (r - image_norm).abs() < diam {
            r = image_norm + diam * 1.5;
        }
        if (r - image_norm).abs() < diam {
            return Err(Error::Degenerate(format!(
                "sphere radius {big_r} is not transverse near a branch image (|f| = {image_norm})"
            )));
        }
    }
    Ok(r)
}

struct BoundaryTrace {
    curve_count: usize,
    length: f64,
    seeds: Vec<(usize, f64)>,
}

/// Edge ids: radial edge `(i,j)-(i+1,j)` is `2(i·n_θ+j)`, angular edge
/// `(i,j)-(i,j+1)` is `2(i·n_θ+j)+1`.
fn trace_boundary(mesh: &IntrinsicMesh, mask: &[bool], big_r: f64) -> BoundaryTrace {
    let nt = mesh.n_theta;
    let s = |v: usize| mesh.extrinsic_norm[v] - big_r;
    let rad_edge = |i: usize, j: usize| 2 * (i * nt + j);
    let ang_edge = |i: usize, j: usize| 2 * (i * nt + j) + 1;
    let edge_ends = |id: usize| -> (usize, usize) {
        let cell = id / 2;
        let (i, j) = (cell / nt, cell % nt);
        if id % 2 == 0 {
            (mesh.index(i, j), mesh.index(i + 1, j))
        } else {
            (mesh.index(i, j), mesh.index(i, (j + 1) % nt))
        }
    };

    let mut parent: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    fn find(parent: &mut std::collections::HashMap<usize, usize>, x: usize) -> usize {
        let p = *parent.entry(x).or_insert(x);
        if p == x {
            return x;
        }
        let root = find(parent, p);
        parent.insert(x, root);
        root
    }

    let mut length = 0.0;
    let mut used_edges: std::collections::HashSet<usize> = std::collections::HashSet::new();
    let mut belonging = Vec::new();

    for i in 0..mesh.n_r - 1 {
        for j in 0..nt {
            // corners counterclockwise: c0=(i,j), c1=(i,j+1), c2=(i+1,j+1), c3=(i+1,j)
            let c = [
                mesh.index(i, j),
                mesh.index(i, (j + 1) % nt),
                mesh.index(i + 1, (j + 1) % nt),
                mesh.index(i + 1, j),
            ];
            let e01 = ang_edge(i, j);
            let e12 = rad_edge(i, (j + 1) % nt);
            let e23 = ang_edge(i + 1, j);
            let e30 = rad_edge(i, j);
            let bits = (0..4).fold(0usize, |acc, k| acc | (usize::from(s(c[k]) <= 0.0) << k));
            let mut segs: [(usize, usize); 2] = [(usize::MAX, usize::MAX); 2];
            let mut n_segs = 0usize;
            let mut emit = |a: usize, b: usize, segs: &mut [(usize, usize); 2]| {
                segs[n_segs] = (a, b);
                n_segs += 1;
            };
            match bits {
                0b0000 | 0b1111 => {}
                0b0001 | 0b1110 => emit(e01, e30, &mut segs),
                0b0010 | 0b1101 => emit(e01, e12, &mut segs),
                0b0100 | 0b1011 => emit(e12, e23, &mut segs),
                0b1000 | 0b0111 => emit(e23, e30, &mut segs),
                0b0011 | 0b1100 => emit(e30, e12, &mut segs),
                0b0110 | 0b1001 => emit(e01, e23, &mut segs),
                0b0101 => {
                    // saddle: resolve with the cell-center sample
                    if (0..4).map(|k| s(c[k])).sum::<f64>() <= 0.0 {
                        emit(e01, e12, &mut segs);
                        emit(e23, e30, &mut segs);
                    } else {
                        emit(e01, e30, &mut segs);
                        emit(e12, e23, &mut segs);
                    }
                }
                0b1010 => {
                    if (0..4).map(|k| s(c[k])).sum::<f64>() <= 0.0 {
                        emit(e01, e30, &mut segs);
                        emit(e12, e23, &mut segs);
                    } else {
                        emit(e01, e12, &mut segs);
                        emit(e23, e30, &mut segs);
                    }
                }
                _ => unreachable!(),
            }
            for &(ea, eb) in &segs[..n_segs] {
                // the segment belongs to Ω's boundary iff an inside endpoint
                // of a crossed edge lies in the component
                let belongs = [ea, eb].iter().any(|&e| {
                    let (u, v) = edge_ends(e);
                    (s(u) <= 0.0 && mask[u]) || (s(v) <= 0.0 && mask[v])
                });
                if !belongs {
                    continue;
                }
                let pa = crossing_point(mesh, edge_ends(ea), big_r);
                let pb = crossing_point(mesh, edge_ends(eb), big_r);
                length += mesh.metric_segment_length(pa, pb);
                let ra = find(&mut parent, ea);
                let rb = find(&mut parent, eb);
                if ra != rb {
                    parent.insert(ra, rb);
                }
                belonging.push(ea);
                belonging.push(eb);
                used_edges.insert(ea);
                used_edges.insert(eb);
            }
        }
    }

    let mut roots = std::collections::HashSet::new();
    for &e in &used_edges {
        roots.insert(find(&mut parent, e));
    }
    let mut seeds = Vec::with_capacity(used_edges.len());
    for &e in &used_edges {
        let (u, v) = edge_ends(e);
        let (inside_v, _outside_v) = if s(u) <= 0.0 { (u, v) } else { (v, u) };
        if !mask[inside_v] {
            continue;
        }
        let cross = crossing_point(mesh, edge_ends(e), big_r);
        seeds.push((
            inside_v,
            mesh.metric_segment_length(mesh.z[inside_v], cross),
        ));
    }
    // Full ordering (vertex, then offset): the collection order above is a
    // hash-set walk, and downstream output must not depend on it.
    seeds.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
    BoundaryTrace {
        curve_count: roots.len(),
        length,
        seeds,
    }
}

/// Parameter-plane point where `|f| = R` crosses a grid edge, by linear
/// interpolation of `|f|` along the edge.
fn crossing_point(mesh: &IntrinsicMesh, (u, v): (usize, usize), big_r: f64) -> Complex64 {
    let su = mesh.extrinsic_norm[u] - big_r;
    let sv = mesh.extrinsic_norm[v] - big_r;
    let frac = if (su - sv).abs() < 1e-300 {
        0.5
    } else {
        (su / (su - sv)).clamp(0.0, 1.0)
    };
    mesh.z[u] + (mesh.z[v] - mesh.z[u]) * frac
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intrinsic::mesh::build_mesh;
    use crate::weierstrass;

    #[test]
    fn plane_disk_boundary() {
        // |f| = |z|/2, so Ω_R has boundary |z| = 2R: one circle of
        // intrinsic length 2πR
        let data = weierstrass::plane();
        let mesh = build_mesh(&data, 128, 256, 1).unwrap();
        let comp = omega_component(&mesh, mesh.pole.unwrap(), 1.0).unwrap();
        assert_eq!(comp.b, 1);
        assert!(!comp.touches_mesh_boundary);
        let want = 2.0 * std::f64::consts::PI;
        assert!(
            (comp.boundary_length - want).abs() / want < 1e-3,
            "length {}",
            comp.boundary_length
        );
        assert!(!comp.boundary_seeds.is_empty());
    }

    #[test]
    fn catenoid_component_counts() {
        let data = weierstrass::catenoid()
            .with_domain(crate::weierstrass::Domain::new(0.05, 20.0).unwrap())
            .unwrap();
        let mesh = build_mesh(&data, 192, 384, 1).unwrap();
        let p0 = mesh.nearest_vertex(num_complex::Complex64::new(1.0, 0.0));
        // R = 1: a disk-like cap around the base point
        let small = omega_component(&mesh, p0, 1.0).unwrap();
        assert_eq!(small.b, 1);
        // R = 2: the component wraps the waist
        let big = omega_component(&mesh, p0, 2.0).unwrap();
        assert!(big.b <= 2, "b = {}", big.b);
        // nesting
        for v in 0..mesh.vertex_count() {
            if small.mask[v] {
                assert!(big.mask[v]);
            }
        }
        assert!(big.vertex_count > small.vertex_count);
    }

    #[test]
    fn oversized_radius_rejected() {
        let data = weierstrass::plane();
        let mesh = build_mesh(&data, 32, 64, 1).unwrap();
        assert!(omega_component(&mesh, mesh.pole.unwrap(), 1e6).is_err());
    }

    #[test]
    fn base_vertex_outside_ball_rejected() {
        let data = weierstrass::plane();
        let mesh = build_mesh(&data, 32, 64, 1).unwrap();
        let far = mesh.index(31, 0);
        assert!(omega_component(&mesh, far, 0.1).is_err());
    }
}
