//! Closed-form calculators for index, spinning, boundary-count and
//! chord-arc bounds of complete finitely branched minimal surfaces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Topological data of a complete branched minimal surface.
///
/// For a non-orientable surface, `genus` is the genus of its oriented
/// double cover.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TopologyProfile {
    pub orientable: bool,
    pub genus: u32,
    /// End multiplicities `d_j ≥ 1` (spinning of each end).
    pub ends: Vec<u32>,
    /// Total branching order `B(Σ)`.
    pub branching_order: u32,
}

impl TopologyProfile {
    pub fn validate(&self) -> Result<()> {
        if self.ends.is_empty() {
            return Err(Error::Domain(
                "a complete non-compact surface needs at least one end".into(),
            ));
        }
        if self.ends.iter().any(|&d| d < 1) {
            return Err(Error::Domain("end multiplicities must be >= 1".into()));
        }
        Ok(())
    }

    pub fn catenoid() -> Self {
        Self {
            orientable: true,
            genus: 0,
            ends: vec![1, 1],
            branching_order: 0,
        }
    }

    pub fn enneper() -> Self {
        Self {
            orientable: true,
            genus: 0,
            ends: vec![3],
            branching_order: 0,
        }
    }

    pub fn plane() -> Self {
        Self {
            orientable: true,
            genus: 0,
            ends: vec![1],
            branching_order: 0,
        }
    }

    /// Generalized Henneberg surface `H_m` (m odd): non-orientable with
    /// spherical oriented cover, one end of spinning `m+2`, and `m+1`
    /// branch points of order 1.
    pub fn henneberg(m: u32) -> Self {
        Self {
            orientable: false,
            genus: 0,
            ends: vec![m + 2],
            branching_order: m + 1,
        }
    }
}

/// Morse-index lower bound:
/// `ceil((2g + 2Σ(d_j+1) - 2B - 5)/3)` in the orientable case and
/// `ceil((g̃ + 2Σ(d_j+1) - 2B - 4)/3)` in the non-orientable case,
/// clamped at 0 since an index is nonnegative.
pub fn index_lower_bound(profile: &TopologyProfile) -> Result<u32> {
    profile.validate()?;
    let spin_sum: i64 = profile.ends.iter().map(|&d| d as i64 + 1).sum();
    let b = profile.branching_order as i64;
    let numerator = if profile.orientable {
        2 * profile.genus as i64 + 2 * spin_sum - 2 * b - 5
    } else {
        profile.genus as i64 + 2 * spin_sum - 2 * b - 4
    };
    // ceil(numerator / 3), clamped at zero
    Ok((numerator + 2).div_euclid(3).max(0) as u32)
}

/// Upper bound on twice the total spinning: `2S ≤ 3I - 2e + 2B + 5`.
pub fn spinning_bound(index: u32, ends: u32, branching: u32) -> Result<i64> {
    if ends < 1 {
        return Err(Error::Domain("need at least one end".into()));
    }
    Ok(3 * index as i64 - 2 * ends as i64 + 2 * branching as i64 + 5)
}

/// `L̂ = sqrt((3I + 2B + 3)/2)`.
pub fn chord_arc_l(index: u32, branching: u32) -> f64 {
    ((3.0 * index as f64 + 2.0 * branching as f64 + 3.0) / 2.0).sqrt()
}

/// `Ĉ = 8L̂³ + 2πL̂² - 20L̂ - π/2`.
///
/// May be negative for small `(I, B)`; callers treat such checks as
/// vacuous rather than failed.
pub fn chord_arc_c(index: u32, branching: u32) -> f64 {
    let l = chord_arc_l(index, branching);
    8.0 * l * l * l + 2.0 * std::f64::consts::PI * l * l
        - 20.0 * l
        - std::f64::consts::PI / 2.0
}

/// Boundary-component bound `b ≤ 3I + 2B - 1`.
///
/// Returns the raw value, which is `-1` at `(0,0)`; callers treat a
/// negative bound as signalling that no such non-planar surface exists.
pub fn boundary_count_bound(index: u32, branching: u32) -> i64 {
    3 * index as i64 + 2 * branching as i64 - 1
}

/// Total spinning `S = Σ d_j`, which governs the `πSR²` asymptotic area
/// growth in extrinsic balls.
pub fn total_spinning(profile: &TopologyProfile) -> Result<u32> {
    profile.validate()?;
    Ok(profile.ends.iter().sum())
}

/// The bound constants for a given `(I, B, e)` triple, bundled for reports.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundSet {
    pub index: u32,
    pub branching: u32,
    pub ends: u32,
    pub l_hat: f64,
    pub c_hat: f64,
    pub b_max: i64,
    pub spinning_2s_ub: i64,
}

impl BoundSet {
    pub fn new(index: u32, branching: u32, ends: u32) -> Result<Self> {
        Ok(Self {
            index,
            branching,
            ends,
            l_hat: chord_arc_l(index, branching),
            c_hat: chord_arc_c(index, branching),
            b_max: boundary_count_bound(index, branching),
            spinning_2s_ub: spinning_bound(index, ends, branching)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_examples() {
        // catenoid: (2*0 + 2*4 - 0 - 5)/3 = 1, tight
        assert_eq!(index_lower_bound(&TopologyProfile::catenoid()).unwrap(), 1);
        // Enneper: 2*4 - 5 = 3 -> 1
        assert_eq!(index_lower_bound(&TopologyProfile::enneper()).unwrap(), 1);
        // H_m: 0 + 2(m+3) - 2(m+1) - 4 = 0 for every odd m
        for m in [1u32, 3, 5, 7, 9] {
            assert_eq!(index_lower_bound(&TopologyProfile::henneberg(m)).unwrap(), 0);
        }
        // plane: 2*2 - 5 = -1 -> clamped to 0
        assert_eq!(index_lower_bound(&TopologyProfile::plane()).unwrap(), 0);
    }

    #[test]
    fn index_ceil_rounds_up() {
        // orientable, g=1, one end d=2: (2 + 6 - 5)/3 = 3/3 = 1
        let p = TopologyProfile {
            orientable: true,
            genus: 1,
            ends: vec![2],
            branching_order: 0,
        };
        assert_eq!(index_lower_bound(&p).unwrap(), 1);
        // orientable, g=2, one end d=2: (4 + 6 - 5)/3 = 5/3 -> 2
        let p = TopologyProfile {
            orientable: true,
            genus: 2,
            ends: vec![2],
            branching_order: 0,
        };
        assert_eq!(index_lower_bound(&p).unwrap(), 2);
    }

    #[test]
    fn index_monotonicity() {
        let base = TopologyProfile {
            orientable: true,
            genus: 0,
            ends: vec![2, 3],
            branching_order: 1,
        };
        let base_lb = index_lower_bound(&base).unwrap();
        for g in 0..6 {
            let mut p = base.clone();
            p.genus = g;
            let lb = index_lower_bound(&p).unwrap();
            assert!(lb >= base_lb);
            // nondecreasing in each d_j
            let mut q = p.clone();
            q.ends[0] += 1;
            assert!(index_lower_bound(&q).unwrap() >= lb);
            // nonincreasing in B
            let mut r = p.clone();
            r.branching_order += 1;
            assert!(index_lower_bound(&r).unwrap() <= lb);
        }
    }

    #[test]
    fn spinning_examples() {
        assert_eq!(spinning_bound(1, 2, 0).unwrap(), 4); // catenoid: S <= 2, tight
        assert_eq!(spinning_bound(0, 1, 2).unwrap(), 7); // H_1: S <= 3, tight (S = 3)
        assert_eq!(spinning_bound(0, 1, 0).unwrap(), 3);
    }

    #[test]
    fn chord_arc_examples() {
        // formula evaluation oracles
        assert!((chord_arc_l(0, 0) - 1.5f64.sqrt()).abs() < 1e-15);
        assert!((chord_arc_l(1, 0) - 3.0f64.sqrt()).abs() < 1e-15);
        assert!((chord_arc_l(0, 2) - 3.5f64.sqrt()).abs() < 1e-15);
        // C(1,0) = 4 sqrt 3 + 11 pi / 2 (algebraic simplification oracle)
        let want = 4.0 * 3.0f64.sqrt() + 5.5 * std::f64::consts::PI;
        assert!((chord_arc_c(1, 0) - want).abs() < 1e-12);
        assert!((chord_arc_c(1, 0) - 24.207).abs() < 1e-3);
        // C(0,0) is negative: vacuous regime
        assert!(chord_arc_c(0, 0) < 0.0);
        // catenoid estimate 4 pi is subsumed
        assert!(chord_arc_c(1, 0) > 4.0 * std::f64::consts::PI);
    }

    #[test]
    fn l_hat_identity() {
        // 2 L̂² - 3 = 3I + 2B exactly
        for i in 0..5u32 {
            for b in 0..5u32 {
                let l = chord_arc_l(i, b);
                assert!((2.0 * l * l - 3.0 - (3 * i + 2 * b) as f64).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn boundary_count_examples() {
        assert_eq!(boundary_count_bound(1, 0), 2); // catenoid, tight
        assert_eq!(boundary_count_bound(0, 1), 1); // branched plane, equality
        assert_eq!(boundary_count_bound(0, 0), -1); // vacuous
    }

    #[test]
    fn total_spinning_examples() {
        assert_eq!(total_spinning(&TopologyProfile::catenoid()).unwrap(), 2);
        assert_eq!(total_spinning(&TopologyProfile::plane()).unwrap(), 1);
        for m in [1u32, 3, 5] {
            assert_eq!(total_spinning(&TopologyProfile::henneberg(m)).unwrap(), m + 2);
        }
    }

    #[test]
    fn builtin_surfaces_respect_bounds() {
        // S <= spinning bound / 2 and literature index >= lower bound.
        let cases = [
            (TopologyProfile::catenoid(), 1u32), // catenoid has index 1
            (TopologyProfile::enneper(), 1u32),  // Enneper has index 1
            (TopologyProfile::henneberg(1), 0u32),
            (TopologyProfile::henneberg(3), 0u32),
        ];
        for (profile, literature_index) in cases {
            let s = total_spinning(&profile).unwrap() as i64;
            let bound = spinning_bound(
                literature_index,
                profile.ends.len() as u32,
                profile.branching_order,
            )
            .unwrap();
            assert!(2 * s <= bound, "{profile:?}");
            assert!(literature_index >= index_lower_bound(&profile).unwrap());
        }
    }
}
