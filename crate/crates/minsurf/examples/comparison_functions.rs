//! Tabulates the space-form comparison functions and the derived radii:
//! `s_a`, `f_a`, the mean-curvature radius `R_0`, the effective radius
//! `r_1`, the intrinsic-ball area lower bound, and the Yau-type radius
//! `r_2` with its chord-area constant.

use minsurf::comparison::{
    area_lower_bound, chord_area_constant, f_a, mean_curvature_radius, r1, s_a, yau_r2,
    ComparisonParams, ExtendedRadius,
};

fn main() -> minsurf::Result<()> {
    println!("s_a and f_a across curvature bounds");
    println!("{:>6} {:>8} {:>12} {:>12}", "a", "t", "s_a(t)", "f_a(t)");
    for &a in &[-1.0, 0.0, 1.0] {
        for &t in &[0.25, 0.5, 1.0] {
            println!(
                "{:>6} {:>8} {:>12.6} {:>12.6}",
                a,
                t,
                s_a(a, t)?,
                f_a(a, t)?
            );
        }
    }

    println!("\nmean-curvature radius R_0(a, H0)");
    for &(a, h0) in &[(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (-1.0, 0.5), (-1.0, 2.0)] {
        println!("  R_0({a:>4}, {h0}) = {}", mean_curvature_radius(a, h0)?);
    }

    println!("\nminimal surface in R^3 (a = 0, H0 = 0):");
    let flat = ComparisonParams::minimal_in_r3();
    println!("  r_1 = {}", r1(&flat)?);
    for &r in &[0.5, 1.0, 2.0] {
        println!(
            "  area lower bound at r = {r}: {:.6} (= pi r^2)",
            area_lower_bound(&flat, r)?
        );
    }
    println!("  r_2 = {}", yau_r2(&flat)?);

    println!("\nbounded mean curvature (a = 0, H0 = 1):");
    let bounded = ComparisonParams::new(0.0, 1.0, ExtendedRadius::Infinite, 2, 3)?;
    let r2 = yau_r2(&bounded)?;
    println!("  r_1 = {}", r1(&bounded)?);
    println!("  r_2 = {r2}   (solves pi e^(-2r) = 3)");
    println!("  C_A(eps0 = 1) = {}", chord_area_constant(1.0, r2)?);
    Ok(())
}
