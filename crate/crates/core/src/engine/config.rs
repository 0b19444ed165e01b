use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::geometry::{normalize_angle, Point2};

/// A pose in SE(2): the robot origin sits at `(x, y)` and the robot is
/// rotated CCW by `theta` radians.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Configuration {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

impl Configuration {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        Configuration { x, y, theta: normalize_angle(theta) }
    }

    pub fn from_degrees(x: f64, y: f64, deg: f64) -> Self {
        Configuration::new(x, y, deg_to_rad(deg))
    }

    pub fn position(&self) -> Point2 {
        Point2::new(self.x, self.y)
    }

    pub fn theta_degrees(&self) -> f64 {
        rad_to_deg(self.theta)
    }

    /// World position of a point given in the origin-centered robot frame.
    pub fn apply(&self, local: Point2) -> Point2 {
        local.rotate(self.theta) + self.position()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.theta.is_finite()
    }
}

/// Degrees to radians, exact at multiples of 45°.
pub fn deg_to_rad(deg: f64) -> f64 {
    let d = deg.rem_euclid(360.0);
    let eighths = d / 45.0;
    if eighths.fract() == 0.0 {
        eighths * (TAU / 8.0)
    } else {
        d.to_radians()
    }
}

/// Radians to degrees in `[0, 360)`, exact at multiples of π/4.
pub fn rad_to_deg(rad: f64) -> f64 {
    let r = normalize_angle(rad);
    let eighths = r / (TAU / 8.0);
    if (eighths - eighths.round()).abs() < 1e-12 {
        (eighths.round() * 45.0).rem_euclid(360.0)
    } else {
        r.to_degrees()
    }
}
