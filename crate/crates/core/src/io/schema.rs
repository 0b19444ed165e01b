//! JSON documents exchanged with files, the CLI and the HTTP service.
//! Angles are degrees everywhere in these types.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::IoError;
use crate::decomposition::{area_centroid, RobotKind, RobotPolygon};
use crate::engine::config::rad_to_deg;
use crate::engine::{Configuration, LeafRecord, NoPathReason, PlanStats, PlanStatus, Strategy};
use crate::environment::{Environment, Rect};
use crate::geometry::point::signed_area;
use crate::geometry::Point2;
use crate::predicates::Classification;

/// `[x, y]`.
pub type Xy = [f64; 2];

fn xy(p: Point2) -> Xy {
    [p.x, p.y]
}

fn pt(v: Xy) -> Point2 {
    Point2::new(v[0], v[1])
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    pub min: Xy,
    pub max: Xy,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { min: [0.0, 0.0], max: [512.0, 512.0] }
    }
}

/// A configuration with its angle in degrees.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Pose {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

impl Pose {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        Pose { x, y, theta }
    }

    pub fn to_config(&self) -> Configuration {
        Configuration::from_degrees(self.x, self.y, self.theta)
    }

    pub fn from_config(q: &Configuration) -> Self {
        Pose { x: q.x, y: q.y, theta: q.theta_degrees() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvironmentFile {
    pub name: String,
    #[serde(default)]
    pub bounds: Bounds,
    /// Simple polygons; counter-clockwise after normalization.
    pub obstacles: Vec<Vec<Xy>>,
    /// Rebuilt from a description rather than copied from source data.
    #[serde(default)]
    pub reconstructed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<Pose>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub goal: Option<Pose>,
}

impl EnvironmentFile {
    pub fn to_environment(&self) -> Result<Environment, IoError> {
        let b = Rect::new(pt(self.bounds.min), pt(self.bounds.max));
        let obstacles = self.obstacles.iter().map(|p| p.iter().copied().map(pt).collect()).collect();
        Environment::new(b, obstacles).map_err(|e| IoError::Invalid(format!("environment `{}`: {e}", self.name)))
    }

    /// Validated copy with counter-clockwise obstacles.
    pub fn normalized(&self) -> Result<Self, IoError> {
        let env = self.to_environment()?;
        Ok(EnvironmentFile {
            obstacles: env.obstacles.iter().map(|p| p.iter().copied().map(xy).collect()).collect(),
            ..self.clone()
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RobotKindSpec {
    #[default]
    General,
    Star,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RobotFile {
    pub name: String,
    pub vertices: Vec<Xy>,
    /// Rotation origin; the area centroid when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub origin: Option<Xy>,
    #[serde(default)]
    pub kind: RobotKindSpec,
}

impl RobotFile {
    pub fn to_robot(&self) -> Result<RobotPolygon, IoError> {
        let verts: Vec<Point2> = self.vertices.iter().copied().map(pt).collect();
        if verts.len() < 3 {
            return Err(IoError::Invalid(format!("robot `{}`: needs at least 3 vertices", self.name)));
        }
        let origin = self.origin.map(pt).unwrap_or_else(|| area_centroid(&verts));
        let kind = match self.kind {
            RobotKindSpec::General => RobotKind::General,
            RobotKindSpec::Star => RobotKind::Star,
        };
        RobotPolygon::new(verts, origin, kind).map_err(|e| IoError::Invalid(format!("robot `{}`: {e}", self.name)))
    }

    /// Validated copy with counter-clockwise vertices and an explicit origin.
    pub fn normalized(&self) -> Result<Self, IoError> {
        let r = self.to_robot()?;
        debug_assert!(signed_area(&r.vertices) > 0.0);
        Ok(RobotFile {
            vertices: r.vertices.iter().copied().map(xy).collect(),
            origin: Some(xy(r.origin)),
            ..self.clone()
        })
    }
}

/// A fixture name or an inline document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source<T> {
    Named(String),
    Inline(T),
}

fn default_true() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanRequest {
    pub environment: Source<EnvironmentFile>,
    pub robot: Source<RobotFile>,
    pub start: Pose,
    pub goal: Pose,
    pub epsilon: f64,
    #[serde(default)]
    pub strategy: Strategy,
    #[serde(default)]
    pub seed: u64,
    /// Attach the leaf boxes to the response.
    #[serde(default = "default_true")]
    pub include_leaves: bool,
    /// Upper bound on attached leaves; the server default applies when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leaf_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_boxes: Option<usize>,
}

/// A leaf box with angles in degrees.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LeafOut {
    pub id: usize,
    pub x: f64,
    pub y: f64,
    pub size: f64,
    pub theta_lo: f64,
    pub theta_hi: f64,
    pub class: Classification,
    pub discarded: bool,
    pub feature_counts: Vec<usize>,
}

/// Arc endpoint in degrees. Dyadic endpoints `k·2π/2^d` come out exact and
/// the closing 2π stays 360.
fn arc_degrees(rad: f64) -> f64 {
    const SCALE: f64 = (1u64 << 40) as f64;
    let t = rad / TAU * SCALE;
    if (t - t.round()).abs() < 1e-3 {
        t.round() * 360.0 / SCALE
    } else {
        rad_to_deg(rad)
    }
}

impl From<&LeafRecord> for LeafOut {
    fn from(l: &LeafRecord) -> Self {
        LeafOut {
            id: l.id,
            x: l.x,
            y: l.y,
            size: l.size,
            theta_lo: arc_degrees(l.theta_lo),
            theta_hi: arc_degrees(l.theta_hi),
            class: l.class,
            discarded: l.discarded,
            feature_counts: l.feature_counts.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanResponse {
    pub status: PlanStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<NoPathReason>,
    pub path: Vec<Pose>,
    /// Number of FREE boxes the path runs through.
    pub channel_boxes: usize,
    pub stats: PlanStats,
    pub environment: String,
    pub robot: String,
    pub epsilon: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leaves: Option<Vec<LeafOut>>,
    pub leaves_total: usize,
    pub leaves_truncated: bool,
}
