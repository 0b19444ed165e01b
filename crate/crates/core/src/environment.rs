//! Polygonal workspace: an axis-aligned container with solid polygon obstacles.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposition::{is_simple, RobotPolygon};
use crate::engine::Configuration;
use crate::geometry::point::{point_in_polygon, segment_segment_distance, signed_area};
use crate::geometry::{Feature, Point2, TOLERANCE};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnvironmentError {
    #[error("bounding box is empty or not finite")]
    BadBounds,
    #[error("obstacle {0} needs at least 3 vertices")]
    TooFewVertices(usize),
    #[error("obstacle {0} is not a simple polygon")]
    NotSimple(usize),
    #[error("obstacle {0} does not lie strictly inside the bounding box")]
    OutOfBounds(usize),
    #[error("obstacles {0} and {1} overlap or touch")]
    Overlap(usize, usize),
}

/// Axis-aligned rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub min: Point2,
    pub max: Point2,
}

impl Rect {
    pub fn new(min: Point2, max: Point2) -> Self {
        Rect { min, max }
    }

    pub fn of_points(pts: &[Point2]) -> Self {
        let mut r = Rect { min: pts[0], max: pts[0] };
        for p in &pts[1..] {
            r.min.x = r.min.x.min(p.x);
            r.min.y = r.min.y.min(p.y);
            r.max.x = r.max.x.max(p.x);
            r.max.y = r.max.y.max(p.y);
        }
        r
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    /// Corners in CCW order starting at `min`.
    pub fn corners(&self) -> [Point2; 4] {
        [
            self.min,
            Point2::new(self.max.x, self.min.y),
            self.max,
            Point2::new(self.min.x, self.max.y),
        ]
    }

    pub fn contains_strictly(&self, p: Point2, margin: f64) -> bool {
        p.x > self.min.x + margin
            && p.x < self.max.x - margin
            && p.y > self.min.y + margin
            && p.y < self.max.y - margin
    }

    /// True when the closed rectangles are within `gap` of each other.
    pub fn near(&self, o: &Rect, gap: f64) -> bool {
        self.min.x <= o.max.x + gap
            && o.min.x <= self.max.x + gap
            && self.min.y <= o.max.y + gap
            && o.min.y <= self.max.y + gap
    }
}

/// The free space is the inside of `bounds` minus the closed obstacles.
#[derive(Clone, Debug, PartialEq)]
pub struct Environment {
    pub bounds: Rect,
    /// Simple CCW polygons.
    pub obstacles: Vec<Vec<Point2>>,
    boxes: Vec<Rect>,
}

impl Environment {
    /// Validates the obstacles and reorients clockwise ones to CCW.
    pub fn new(bounds: Rect, obstacles: Vec<Vec<Point2>>) -> Result<Self, EnvironmentError> {
        let finite = bounds.min.is_finite() && bounds.max.is_finite();
        if !finite || bounds.width() <= 0.0 || bounds.height() <= 0.0 {
            return Err(EnvironmentError::BadBounds);
        }
        let mut obstacles = obstacles;
        for (i, poly) in obstacles.iter_mut().enumerate() {
            if poly.len() < 3 {
                return Err(EnvironmentError::TooFewVertices(i));
            }
            if !is_simple(poly) || signed_area(poly).abs() <= TOLERANCE {
                return Err(EnvironmentError::NotSimple(i));
            }
            if signed_area(poly) < 0.0 {
                poly.reverse();
            }
            if !poly.iter().all(|&p| bounds.contains_strictly(p, 0.0)) {
                return Err(EnvironmentError::OutOfBounds(i));
            }
        }
        let boxes: Vec<Rect> = obstacles.iter().map(|p| Rect::of_points(p)).collect();
        for i in 0..obstacles.len() {
            for j in i + 1..obstacles.len() {
                if boxes[i].near(&boxes[j], 0.0) && polygons_meet(&obstacles[i], &obstacles[j], 0.0) {
                    return Err(EnvironmentError::Overlap(i, j));
                }
            }
        }
        Ok(Environment { bounds, obstacles, boxes })
    }

    pub fn empty(bounds: Rect) -> Self {
        Environment { bounds, obstacles: Vec::new(), boxes: Vec::new() }
    }

    /// Container walls traversed clockwise, so the outside is on the left.
    pub fn container_loop(&self) -> [Point2; 4] {
        let [a, b, c, d] = self.bounds.corners();
        [a, d, c, b]
    }

    /// Corners and oriented edges of all obstacles and of the container walls.
    pub fn features(&self) -> Vec<Feature> {
        let mut out = Vec::new();
        let container = self.container_loop();
        for poly in self.obstacles.iter().map(|p| p.as_slice()).chain(std::iter::once(&container[..])) {
            let n = poly.len();
            for i in 0..n {
                let (prev, p, next) = (poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]);
                out.push(Feature::corner(prev, p, next));
                out.push(Feature::edge(p, next));
            }
        }
        out
    }

    /// Total vertex count, container included.
    pub fn vertex_count(&self) -> usize {
        self.obstacles.iter().map(Vec::len).sum::<usize>() + 4
    }
}

fn polygons_meet(a: &[Point2], b: &[Point2], gap: f64) -> bool {
    let (n, m) = (a.len(), b.len());
    for i in 0..n {
        for j in 0..m {
            if segment_segment_distance(a[i], a[(i + 1) % n], b[j], b[(j + 1) % m]) <= gap {
                return true;
            }
        }
    }
    point_in_polygon(a[0], b) || point_in_polygon(b[0], a)
}

/// Robot vertices in world coordinates at `pose`.
pub fn robot_footprint(robot: &RobotPolygon, pose: &Configuration) -> Vec<Point2> {
    robot.local_vertices().into_iter().map(|v| pose.apply(v)).collect()
}

/// Exact static test of the closed robot against the closed obstacles and
/// the container walls; contact within the global tolerance counts.
pub fn exact_collides(robot: &RobotPolygon, pose: &Configuration, env: &Environment) -> bool {
    footprint_collides(&robot_footprint(robot, pose), env)
}

pub fn footprint_collides(fp: &[Point2], env: &Environment) -> bool {
    if !fp.iter().all(|&p| env.bounds.contains_strictly(p, TOLERANCE)) {
        return true;
    }
    let rb = Rect::of_points(fp);
    for (poly, bb) in env.obstacles.iter().zip(&env.boxes) {
        if rb.near(bb, TOLERANCE) && polygons_meet(fp, poly, TOLERANCE) {
            return true;
        }
    }
    false
}

/// Distance between the robot at `pose` and the obstacle set (walls
/// included); zero when they touch or overlap.
pub fn clearance(robot: &RobotPolygon, pose: &Configuration, env: &Environment) -> f64 {
    let fp = robot_footprint(robot, pose);
    if footprint_collides(&fp, env) {
        return 0.0;
    }
    let n = fp.len();
    let mut best = f64::INFINITY;
    for p in &fp {
        best = best
            .min(p.x - env.bounds.min.x)
            .min(env.bounds.max.x - p.x)
            .min(p.y - env.bounds.min.y)
            .min(env.bounds.max.y - p.y);
    }
    for poly in &env.obstacles {
        let m = poly.len();
        for i in 0..n {
            for j in 0..m {
                best = best.min(segment_segment_distance(fp[i], fp[(i + 1) % n], poly[j], poly[(j + 1) % m]));
            }
        }
    }
    best
}
