//! Exports surface meshes: Henneberg H_1 as PLY with the intrinsic
//! distance from the base point attached, and the catenoid as OBJ.

use minsurf::export::{write_obj, write_ply};
use minsurf::intrinsic::mesh::build_mesh;
use minsurf::intrinsic::verify::distance_field;
use minsurf::suite::load_surface;

fn main() -> minsurf::Result<()> {
    let out = std::env::temp_dir();

    let henneberg = load_surface("henneberg:1")?;
    let mesh = build_mesh(&henneberg.data, 128, 256, 2)?;
    let source = mesh.nearest_vertex(henneberg.data.base_point());
    let field = distance_field(&mesh, source);
    let ply_path = out.join("henneberg_1.ply");
    write_ply(&ply_path, &mesh, Some(&field))?;
    println!(
        "wrote {} ({} vertices, distance attribute from base point)",
        ply_path.display(),
        mesh.vertex_count()
    );

    let catenoid = load_surface("catenoid")?;
    let mesh = build_mesh(&catenoid.data, 96, 192, 1)?;
    let obj_path = out.join("catenoid.obj");
    write_obj(&obj_path, &mesh)?;
    println!(
        "wrote {} ({} vertices)",
        obj_path.display(),
        mesh.vertex_count()
    );
    Ok(())
}
