use serde::{Deserialize, Serialize};

use super::curve::Curve;
use super::feature::Feature;
use super::point::Point2;
use super::shapes::{feature_intersects_1basic, OneBasicShape, TwoBasicShape};

/// A 1-basic shape together with curves covering its boundary. The explicit
/// boundary turns feature-to-shape separation into curve distances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Piece {
    pub shape: OneBasicShape,
    pub boundary: Vec<Curve>,
}

impl Piece {
    pub fn new(shape: OneBasicShape, boundary: Vec<Curve>) -> Self {
        Piece { shape, boundary }
    }

    pub fn contains(&self, p: Point2) -> bool {
        self.shape.contains(p)
    }

    /// Distance from the feature to the closed piece.
    pub fn separation(&self, f: &Feature) -> f64 {
        if feature_intersects_1basic(f, &self.shape) {
            return 0.0;
        }
        self.boundary
            .iter()
            .map(|c| c.feature_distance(f))
            .fold(f64::INFINITY, f64::min)
    }

    /// Distance from a point to the closed piece.
    pub fn point_separation(&self, p: Point2) -> f64 {
        if self.shape.contains(p) {
            return 0.0;
        }
        self.boundary
            .iter()
            .map(|c| c.point_distance(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn translated(&self, v: Point2) -> Self {
        Piece {
            shape: self.shape.translated(v),
            boundary: self.boundary.iter().map(|c| c.translated(v)).collect(),
        }
    }
}

/// A union of pieces; the separation to a union is the minimum over its parts.
pub fn union_separation(pieces: &[Piece], f: &Feature) -> f64 {
    let mut best = f64::INFINITY;
    for p in pieces {
        best = best.min(p.separation(f));
        if best == 0.0 {
            break;
        }
    }
    best
}

pub fn union_shape(pieces: &[Piece]) -> TwoBasicShape {
    TwoBasicShape::new(pieces.iter().map(|p| p.shape.clone()).collect())
}
