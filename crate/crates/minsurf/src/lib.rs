//! Numerical laboratory for branched minimal surfaces in R³ built from
//! Weierstrass data.
//!
//! The crate constructs surfaces (plane, catenoid, Enneper, the generalized
//! Henneberg family) from Laurent-polynomial Weierstrass pairs `(g, ω)`,
//! discretizes them into intrinsic meshes, and empirically verifies
//! quantitative comparison-geometry results: intrinsic monotonicity of area,
//! Morse-index lower bounds, and scale-invariant chord-arc estimates.
//!
//! Entry points:
//! - [`comparison`]: closed-form space-form comparison functions (`s_a`,
//!   `f_a`, mean-curvature radius, area lower bounds, Yau-type constants).
//! - [`weierstrass`]: surface representation, evaluation, branch points,
//!   end multiplicities, curvature.
//! - [`henneberg`]: the generalized Henneberg family `H_m` with its
//!   closed-form polar parameterization as an oracle.
//! - [`bounds`]: index, spinning, boundary-count and chord-arc bound
//!   calculators.
//! - [`intrinsic`]: meshing, geodesic distances, extrinsic-ball components
//!   and the verification harnesses.
//! - [`suite`]: named check suites producing JSON reports (used by the CLI).

pub mod bounds;
pub mod comparison;
pub mod error;
pub mod export;
pub mod henneberg;
pub mod intrinsic;
pub mod laurent;
pub mod roots;
pub mod suite;
pub mod weierstrass;

pub use error::{Error, Result};
