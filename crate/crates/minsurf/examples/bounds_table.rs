//! Prints the topological bound set (Morse-index lower bound, chord-arc
//! constants, boundary-curve cap, spinning cap) for the built-in surfaces
//! and the first few members of the generalized Henneberg family.

use minsurf::bounds::{index_lower_bound, BoundSet, TopologyProfile};

fn row(name: &str, profile: &TopologyProfile) -> minsurf::Result<()> {
    let index = index_lower_bound(profile)?;
    let set = BoundSet::new(index, profile.branching_order, profile.ends.len() as u32)?;
    println!(
        "{:>14} {:>6} {:>4} {:>8.4} {:>10.4} {:>6} {:>8}",
        name, set.index, set.branching, set.l_hat, set.c_hat, set.b_max, set.spinning_2s_ub
    );
    Ok(())
}

fn main() -> minsurf::Result<()> {
    println!(
        "{:>14} {:>6} {:>4} {:>8} {:>10} {:>6} {:>8}",
        "surface", "index", "B", "L-hat", "C-hat", "b_max", "2S cap"
    );
    row("plane", &TopologyProfile::plane())?;
    row("catenoid", &TopologyProfile::catenoid())?;
    row("enneper", &TopologyProfile::enneper())?;
    for m in [1u32, 3, 5, 7, 9] {
        row(&format!("henneberg:{m}"), &TopologyProfile::henneberg(m))?;
    }
    println!("\nnegative C-hat or b_max marks a vacuous clause for that surface");
    Ok(())
}
