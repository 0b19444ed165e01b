//! Planar primitives: points, angular ranges, obstacle features and the
//! basic-shape algebra used by the swept-set tests.

pub mod angle;
pub mod curve;
pub mod feature;
pub mod piece;
pub mod point;
pub mod shapes;

pub use angle::{angular_width, normalize_angle, AngularRange};
pub use curve::Curve;
pub use feature::{nearest_feature, separation, side_of_feature, Feature, Side};
pub use piece::Piece;
pub use point::Point2;
pub use shapes::{
    feature_intersects_1basic, feature_intersects_2basic, Annulus, Disc, DiscComplement,
    HalfPlane, OneBasicShape, Primitive, TwoBasicShape,
};

/// Global incidence tolerance in world units.
pub const TOLERANCE: f64 = 1e-9;
