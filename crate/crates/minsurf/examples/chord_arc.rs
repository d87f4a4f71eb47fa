//! Runs the chord-arc checks on the extrinsic-ball component Omega_R of
//! the catenoid and the Henneberg surface H_1: distance to the boundary
//! against L-hat R, pair distances against C-hat R and the
//! boundary-length variant, and the boundary-curve count.

use minsurf::bounds::index_lower_bound;
use minsurf::intrinsic::mesh::build_mesh;
use minsurf::intrinsic::verify::verify_chord_arc;
use minsurf::suite::load_surface;

fn main() -> minsurf::Result<()> {
    for name in ["catenoid", "henneberg:1"] {
        let surface = load_surface(name)?;
        let profile = surface.data.topology_profile()?;
        let index = index_lower_bound(&profile)?;
        let mesh = build_mesh(&surface.data, 192, 384, 2)?;
        let p0 = mesh.nearest_vertex(surface.data.base_point());
        println!(
            "== {name}: I = {index}, B = {} , R = 1 ==",
            profile.branching_order
        );
        for report in verify_chord_arc(&mesh, p0, 1.0, index, profile.branching_order, name)? {
            println!(
                "  {:<20} measured {:>9.4}  bound {:>9.4}  {}",
                report.check,
                report.measured,
                report.bound,
                if report.pass { "pass" } else { "FAIL" }
            );
        }
        println!();
    }
    Ok(())
}
