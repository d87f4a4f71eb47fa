//! Verifies intrinsic ball-area monotonicity `A(r) >= pi r^2` on the
//! catenoid and the Enneper surface, printing the measured areas, the
//! certified lower counts, and the margins.

use minsurf::intrinsic::mesh::build_mesh;
use minsurf::intrinsic::verify::verify_monotonicity;
use minsurf::suite::load_surface;

fn main() -> minsurf::Result<()> {
    let radii = [0.25, 0.5, 1.0, 2.0];
    for name in ["catenoid", "enneper"] {
        let surface = load_surface(name)?;
        let mesh = build_mesh(&surface.data, 256, 512, 2)?;
        let source = mesh.nearest_vertex(surface.data.base_point());
        println!("== {name} at 256x512 ==");
        println!(
            "{:>8} {:>12} {:>12} {:>10} {:>10}",
            "r", "A(r)", "pi r^2", "margin", "lower/bound"
        );
        for report in verify_monotonicity(&mesh, source, &radii, name)? {
            println!(
                "{:>8} {:>12.6} {:>12.6} {:>9.2}% {:>11.4} {}",
                report.params["radius"].as_f64().unwrap_or(f64::NAN),
                report.measured,
                report.bound,
                100.0 * report.margin,
                report.params["ratio_lower"].as_f64().unwrap_or(f64::NAN),
                if report.pass { "" } else { "FAIL" }
            );
        }
        println!();
    }
    Ok(())
}
