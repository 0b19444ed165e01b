//! Soft subdivision search for a rigid polygonal robot moving in the plane.
//!
//! The robot is split into nice triangles sharing one rotation origin; each
//! triangle's rotational sweep has a simple exact description, which makes
//! box classification cheap and conservative.

pub mod decomposition;
pub mod engine;
pub mod environment;
pub mod geometry;
pub mod io;
pub mod predicates;
pub mod swept;
