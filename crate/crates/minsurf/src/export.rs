//! Mesh export: ASCII PLY (positions + `lambda`, plus `dist` when a
//! distance field is attached) and OBJ (positions + faces).
//!
//! Output is deterministic for a fixed mesh: floats are printed with
//! Rust's shortest round-trip formatting, so parsed values equal the
//! evaluator's outputs bitwise. Files are written atomically
//! (temp file + rename).

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::intrinsic::distance::DistanceField;
use crate::intrinsic::mesh::IntrinsicMesh;

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = tempfile::NamedTempFile::new_in(dir.unwrap_or(Path::new(".")))
        .map_err(|e| Error::Io {
            path: path.display().to_string(),
            source: e,
        })?;
    tmp.write_all(contents.as_bytes()).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    tmp.persist(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e.error,
    })?;
    Ok(())
}

/// Serializes the mesh as ASCII PLY.
pub fn ply_string(mesh: &IntrinsicMesh, dist: Option<&DistanceField>) -> String {
    let tris = mesh.triangles();
    let mut out = String::new();
    out.push_str("ply\nformat ascii 1.0\ncomment minsurf polar mesh\n");
    let _ = writeln!(out, "element vertex {}", mesh.vertex_count());
    out.push_str("property double x\nproperty double y\nproperty double z\nproperty double lambda\n");
    if dist.is_some() {
        out.push_str("property double dist\n");
    }
    let _ = writeln!(out, "element face {}", tris.len());
    out.push_str("property list uchar int vertex_indices\nend_header\n");
    for v in 0..mesh.vertex_count() {
        let p = mesh.position[v];
        let _ = write!(out, "{} {} {} {}", p[0], p[1], p[2], mesh.lambda[v]);
        if let Some(f) = dist {
            let _ = write!(out, " {}", f.dist[v]);
        }
        out.push('\n');
    }
    for t in &tris {
        let _ = writeln!(out, "3 {} {} {}", t[0], t[1], t[2]);
    }
    out
}

/// Serializes the mesh as OBJ (1-based face indices).
pub fn obj_string(mesh: &IntrinsicMesh) -> String {
    let mut out = String::new();
    for v in 0..mesh.vertex_count() {
        let p = mesh.position[v];
        let _ = writeln!(out, "v {} {} {}", p[0], p[1], p[2]);
    }
    for t in &mesh.triangles() {
        let _ = writeln!(out, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1);
    }
    out
}

pub fn write_ply(path: &Path, mesh: &IntrinsicMesh, dist: Option<&DistanceField>) -> Result<()> {
    write_atomic(path, &ply_string(mesh, dist))
}

pub fn write_obj(path: &Path, mesh: &IntrinsicMesh) -> Result<()> {
    write_atomic(path, &obj_string(mesh))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intrinsic::mesh::build_mesh;
    use crate::weierstrass;

    #[test]
    fn ply_structure_and_round_trip() {
        let data = weierstrass::catenoid()
            .with_domain(crate::weierstrass::Domain::new(0.5, 2.0).unwrap())
            .unwrap();
        let mesh = build_mesh(&data, 16, 32, 1).unwrap();
        let ply = ply_string(&mesh, None);
        let mut lines = ply.lines();
        assert_eq!(lines.next(), Some("ply"));
        assert!(ply.contains(&format!("element vertex {}", 16 * 32)));
        // vertex positions parse back bitwise
        let header_end = ply.find("end_header\n").unwrap() + "end_header\n".len();
        let first_vertex = ply[header_end..].lines().next().unwrap();
        let nums: Vec<f64> = first_vertex
            .split_whitespace()
            .map(|s| s.parse().unwrap())
            .collect();
        for k in 0..3 {
            assert_eq!(nums[k], mesh.position[0][k]);
        }
        assert_eq!(nums[3], mesh.lambda[0]);
    }

    #[test]
    fn obj_indices_are_valid() {
        let mesh = build_mesh(&weierstrass::plane(), 16, 32, 1).unwrap();
        let obj = obj_string(&mesh);
        let nv = obj.lines().filter(|l| l.starts_with("v ")).count();
        assert_eq!(nv, mesh.vertex_count());
        for line in obj.lines().filter(|l| l.starts_with("f ")) {
            for idx in line.split_whitespace().skip(1) {
                let i: usize = idx.parse().unwrap();
                assert!(i >= 1 && i <= nv);
            }
        }
    }

    #[test]
    fn atomic_write_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mesh.ply");
        let mesh = build_mesh(&weierstrass::plane(), 16, 32, 1).unwrap();
        write_ply(&path, &mesh, None).unwrap();
        let back = std::fs::read_to_string(&path).unwrap();
        assert_eq!(back, ply_string(&mesh, None));
    }
}
