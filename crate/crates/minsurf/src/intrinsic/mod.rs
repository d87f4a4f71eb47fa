//! Discrete intrinsic geometry: polar meshes carrying the induced metric,
//! geodesic distance fields, extrinsic-ball components, a cotangent
//! Laplacian, and the verification harnesses built on them.

pub mod component;
pub mod distance;
pub mod laplacian;
pub mod mesh;
pub mod verify;

pub use component::OmegaComponent;
pub use distance::{DistanceField, DistanceMethod};
pub use mesh::IntrinsicMesh;
pub use verify::VerificationReport;
