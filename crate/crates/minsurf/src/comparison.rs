//! Space-form comparison functions and the constants they feed.
//!
//! For a curvature upper bound `a`, `s_a` solves `x'' + a x = 0`, `x(0)=0`,
//! `x'(0)=1` on the interval `I_a` (all of `[0,∞)` for `a ≤ 0`, and
//! `[0, π/√a)` for `a > 0`). From it derive `f_a`, the mean-curvature
//! radius `R_0`, the radius `r_1`, the intrinsic-ball area lower bound,
//! and the Yau-type constants `r_2` and `C_A`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// A nonnegative radius that may be infinite.
///
/// Infinity is represented explicitly so that comparisons and minima are
/// total, rather than through a sentinel float.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtendedRadius {
    Finite(f64),
    Infinite,
}

impl ExtendedRadius {
    pub fn min(self, other: Self) -> Self {
        match (self, other) {
            (Self::Infinite, r) | (r, Self::Infinite) => r,
            (Self::Finite(a), Self::Finite(b)) => Self::Finite(a.min(b)),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Self::Finite(_))
    }

    /// Collapses to `f64`, mapping the infinite case to `f64::INFINITY`.
    pub fn as_f64(&self) -> f64 {
        match self {
            Self::Finite(v) => *v,
            Self::Infinite => f64::INFINITY,
        }
    }
}

impl std::fmt::Display for ExtendedRadius {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Finite(v) => write!(f, "{v}"),
            Self::Infinite => write!(f, "inf"),
        }
    }
}

/// Hypotheses of the intrinsic monotonicity setup.
#[derive(Clone, Copy, Debug)]
pub struct ComparisonParams {
    /// Sectional-curvature upper bound of the ambient space.
    pub a: f64,
    /// Mean-curvature bound, `≥ 0`.
    pub h0: f64,
    /// Radius budget `R_1 > 0`, possibly infinite.
    pub r1_budget: ExtendedRadius,
    /// Submanifold dimension, `≥ 1`.
    pub n: u32,
    /// Ambient dimension, `> n`.
    pub m: u32,
}

impl ComparisonParams {
    pub fn new(a: f64, h0: f64, r1_budget: ExtendedRadius, n: u32, m: u32) -> Result<Self> {
        if h0 < 0.0 {
            return Err(Error::Domain(format!("H0 must be >= 0, got {h0}")));
        }
        if let ExtendedRadius::Finite(r) = r1_budget {
            if r <= 0.0 {
                return Err(Error::Domain(format!("R1 must be > 0, got {r}")));
            }
        }
        if n < 1 || m <= n {
            return Err(Error::Domain(format!(
                "dimensions must satisfy 1 <= n < m, got n={n}, m={m}"
            )));
        }
        Ok(Self {
            a,
            h0,
            r1_budget,
            n,
            m,
        })
    }

    /// Euclidean minimal-surface case: `a = 0`, `H0 = 0`, `R1 = ∞`, surfaces
    /// in 3-space.
    pub fn minimal_in_r3() -> Self {
        Self {
            a: 0.0,
            h0: 0.0,
            r1_budget: ExtendedRadius::Infinite,
            n: 2,
            m: 3,
        }
    }
}

fn check_interval(a: f64, t: f64) -> Result<()> {
    if t < 0.0 {
        return Err(Error::Domain(format!("t must be >= 0, got {t}")));
    }
    if a > 0.0 && t >= PI / a.sqrt() {
        return Err(Error::Domain(format!(
            "t = {t} outside I_a = [0, {}) for a = {a}",
            PI / a.sqrt()
        )));
    }
    Ok(())
}

/// Solution of `x'' + a x = 0` with `x(0) = 0`, `x'(0) = 1`.
pub fn s_a(a: f64, t: f64) -> Result<f64> {
    check_interval(a, t)?;
    Ok(if a > 0.0 {
        let sq = a.sqrt();
        (sq * t).sin() / sq
    } else if a < 0.0 {
        let sq = (-a).sqrt();
        (sq * t).sinh() / sq
    } else {
        t
    })
}

/// Crossover below which `f_a` switches to its Taylor expansion. At
/// `x = √|a| t = 0.1` the closed form's cancellation error is about
/// `3ε/x² ≈ 7e-14` relative, while the degree-5 series tail
/// `~6ζ(12)(x/π)^10` is below 1e-14; both branches agree to ~1e-13.
const FA_SERIES_THRESHOLD: f64 = 0.1;

/// `f_a(t) = (1 - t s_a'(t)/s_a(t)) / t²`, smooth at `t = 0` with value `a/3`.
pub fn f_a(a: f64, t: f64) -> Result<f64> {
    check_interval(a, t)?;
    if a == 0.0 {
        return Ok(0.0);
    }
    let x = a.abs().sqrt() * t;
    if x < FA_SERIES_THRESHOLD {
        // a/3 + a²t²/45 + 2a³t⁴/945 + a⁴t⁶/4725 + 2a⁵t⁸/93555, in u = a t².
        let u = a * t * t;
        let u2 = u * u;
        return Ok(a
            * (1.0 / 3.0 + u / 45.0 + 2.0 * u2 / 945.0 + u2 * u / 4725.0
                + 2.0 * u2 * u2 / 93555.0));
    }
    let t2 = t * t;
    if a > 0.0 {
        Ok((1.0 - x / x.tan()) / t2)
    } else {
        Ok((1.0 - x / x.tanh()) / t2)
    }
}

/// `R_0(a, H0)`: the radius at which geodesic spheres in the model space of
/// curvature `a` have mean curvature `H0`.
///
/// For `a < 0` the infinite case is taken to be `H0 ≤ √-a` (arccoth needs
/// an argument `> 1`; spheres in hyperbolic space have mean curvature
/// strictly above `√-a`).
pub fn mean_curvature_radius(a: f64, h0: f64) -> Result<ExtendedRadius> {
    if h0 < 0.0 {
        return Err(Error::Domain(format!("H0 must be >= 0, got {h0}")));
    }
    Ok(if a > 0.0 {
        let sq = a.sqrt();
        // arccot on [0, ∞) -> (0, π/2]
        ExtendedRadius::Finite((PI / 2.0 - (h0 / sq).atan()) / sq)
    } else if a == 0.0 {
        if h0 == 0.0 {
            ExtendedRadius::Infinite
        } else {
            ExtendedRadius::Finite(1.0 / h0)
        }
    } else {
        let sq = (-a).sqrt();
        let x = h0 / sq;
        if x <= 1.0 {
            ExtendedRadius::Infinite
        } else {
            // arccoth(x) = ln((x+1)/(x-1)) / 2
            ExtendedRadius::Finite(0.5 * ((x + 1.0) / (x - 1.0)).ln() / sq)
        }
    })
}

/// `r_1 = min(R_1, R_0(a, H0))`, with infinity absorbing.
pub fn r1(params: &ComparisonParams) -> Result<ExtendedRadius> {
    Ok(params
        .r1_budget
        .min(mean_curvature_radius(params.a, params.h0)?))
}

/// Volume of the unit ball in `R^n`: `π^{n/2} / Γ(n/2 + 1)`.
pub fn unit_ball_volume(n: u32) -> f64 {
    // Γ(n/2 + 1) by the half-integer recurrence.
    let mut gamma = if n % 2 == 0 { 1.0 } else { PI.sqrt() };
    let mut x = n as f64 / 2.0;
    while x > 0.0 {
        gamma *= x;
        x -= 1.0;
    }
    PI.powf(n as f64 / 2.0) / gamma
}

/// Intrinsic-ball area/volume lower bound at radius `r ≤ r_1`:
/// `ω_n rⁿ e^{-n H0 r}` for `a ≤ 0`, and
/// `ω_n rⁿ e^{-n r (H0 + ½ f_a(r_1) r)}` for `a > 0`.
pub fn area_lower_bound(params: &ComparisonParams, r: f64) -> Result<f64> {
    lower_bound_impl(params, r, false)
}

/// Pointwise variant for `a > 0` with `f_a(r)` in place of `f_a(r_1)`;
/// never smaller than [`area_lower_bound`] since `f_a` is increasing.
pub fn area_lower_bound_pointwise(params: &ComparisonParams, r: f64) -> Result<f64> {
    lower_bound_impl(params, r, true)
}

fn lower_bound_impl(params: &ComparisonParams, r: f64, pointwise: bool) -> Result<f64> {
    if r <= 0.0 {
        return Err(Error::Domain(format!("radius must be > 0, got {r}")));
    }
    let r1 = r1(params)?;
    if let ExtendedRadius::Finite(r1v) = r1 {
        if r > r1v * (1.0 + 1e-12) {
            return Err(Error::Domain(format!("radius {r} exceeds r1 = {r1v}")));
        }
    }
    let n = params.n as f64;
    let omega = unit_ball_volume(params.n);
    let exponent = if params.a > 0.0 {
        let fa = if pointwise {
            f_a(params.a, r)?
        } else {
            match r1 {
                ExtendedRadius::Finite(r1v) => f_a(params.a, r1v)?,
                ExtendedRadius::Infinite => unreachable!("r1 finite whenever a > 0"),
            }
        };
        -n * r * (params.h0 + 0.5 * fa * r)
    } else {
        -n * params.h0 * r
    };
    Ok(omega * r.powf(n) * exponent.exp())
}

/// `φ(r) = π e^{-2r(H0 + ½ f_a(r_1) r)}`, the surface-case density profile.
fn phi(params: &ComparisonParams, fa_r1: f64, r: f64) -> f64 {
    PI * (-2.0 * r * (params.h0 + 0.5 * fa_r1 * r)).exp()
}

const YAU_BISECTION_ITERS: usize = 200;
const YAU_REL_TOL: f64 = 1e-12;

/// The largest `r_2 ∈ (0, r_1]` with `φ(r_2) ≥ 3`, found by bisection.
///
/// `φ(0⁺) = π > 3` guarantees existence; the crossing is unique because
/// the exponent is increasing in `r` on the relevant range. Requires
/// `n = 2` hypotheses.
pub fn yau_r2(params: &ComparisonParams) -> Result<ExtendedRadius> {
    if params.n != 2 {
        return Err(Error::Domain(format!(
            "r2 is defined for surfaces (n=2), got n={}",
            params.n
        )));
    }
    let r1 = r1(params)?;
    // f_a(r_1): zero when a ≤ 0 and r_1 = ∞ (the limit value).
    let fa_r1 = match r1 {
        ExtendedRadius::Finite(v) => f_a(params.a, v)?,
        ExtendedRadius::Infinite => 0.0,
    };
    let hi_cap = match r1 {
        ExtendedRadius::Finite(v) => v,
        ExtendedRadius::Infinite => 1e6,
    };
    if phi(params, fa_r1, hi_cap) >= 3.0 {
        return Ok(if r1.is_finite() {
            r1
        } else if params.h0 == 0.0 && params.a <= 0.0 {
            ExtendedRadius::Infinite
        } else {
            ExtendedRadius::Finite(hi_cap)
        });
    }
    let mut lo = 0.0f64;
    let mut hi = hi_cap;
    for _ in 0..YAU_BISECTION_ITERS {
        let mid = 0.5 * (lo + hi);
        if phi(params, fa_r1, mid) >= 3.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= YAU_REL_TOL * hi.abs() {
            break;
        }
    }
    Ok(ExtendedRadius::Finite(lo))
}

/// `C_A = min(ε₀, r_2²/ε₀)`, with `r_2 = ∞` yielding `ε₀`.
pub fn chord_area_constant(eps0: f64, r2: ExtendedRadius) -> Result<f64> {
    if eps0 <= 0.0 {
        return Err(Error::Domain(format!("eps0 must be > 0, got {eps0}")));
    }
    Ok(match r2 {
        ExtendedRadius::Infinite => eps0,
        ExtendedRadius::Finite(r) => eps0.min(r * r / eps0),
    })
}
