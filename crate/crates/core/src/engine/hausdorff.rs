//! Sampled Hausdorff distance between robot footprints inside one box.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Configuration;
use crate::decomposition::RobotPolygon;
use crate::environment::{robot_footprint, Rect};
use crate::geometry::point::{point_in_polygon, point_segment_distance};
use crate::geometry::{AngularRange, Point2};

fn boundary_distance(p: Point2, poly: &[Point2]) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| point_segment_distance(p, poly[i], poly[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min)
}

fn samples(poly: &[Point2]) -> Vec<Point2> {
    const EDGE: usize = 8;
    const GRID: usize = 16;
    let n = poly.len();
    let mut out = Vec::with_capacity(n * EDGE + GRID * GRID);
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        for k in 0..EDGE {
            out.push(a.lerp(b, k as f64 / EDGE as f64));
        }
    }
    let r = Rect::of_points(poly);
    for i in 0..GRID {
        for j in 0..GRID {
            let p = Point2::new(
                r.min.x + r.width() * (i as f64 + 0.5) / GRID as f64,
                r.min.y + r.height() * (j as f64 + 0.5) / GRID as f64,
            );
            if point_in_polygon(p, poly) {
                out.push(p);
            }
        }
    }
    out
}

fn directed(a: &[Point2], b: &[Point2]) -> f64 {
    samples(a)
        .into_iter()
        .map(|p| if point_in_polygon(p, b) { 0.0 } else { boundary_distance(p, b) })
        .fold(0.0, f64::max)
}

/// Hausdorff distance between two filled polygons, sampled on their
/// boundaries and on an interior grid.
pub fn footprint_hausdorff(a: &[Point2], b: &[Point2]) -> f64 {
    directed(a, b).max(directed(b, a))
}

/// Largest sampled footprint Hausdorff distance over pairs of configurations
/// in the box `center ± half_width` × `range`. The eight corner
/// configurations are always paired; `pairs` random pairs are added.
pub fn hausdorff_bound_check(
    center: Point2,
    half_width: f64,
    range: &AngularRange,
    robot: &RobotPolygon,
    pairs: usize,
    seed: u64,
) -> f64 {
    let w = range.width();
    let mut configs = Vec::with_capacity(8);
    for sx in [-1.0, 1.0] {
        for sy in [-1.0, 1.0] {
            for t in [0.0, w] {
                configs.push(Configuration::new(center.x + sx * half_width, center.y + sy * half_width, range.lo + t));
            }
        }
    }
    let fps: Vec<Vec<Point2>> = configs.iter().map(|q| robot_footprint(robot, q)).collect();
    let mut best = 0.0f64;
    for i in 0..fps.len() {
        for j in i + 1..fps.len() {
            best = best.max(footprint_hausdorff(&fps[i], &fps[j]));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        Configuration::new(
            center.x + half_width * rng.gen_range(-1.0..=1.0),
            center.y + half_width * rng.gen_range(-1.0..=1.0),
            range.lo + w * rng.gen::<f64>(),
        )
    };
    for _ in 0..pairs {
        let (p, q) = (draw(&mut rng), draw(&mut rng));
        best = best.max(footprint_hausdorff(&robot_footprint(robot, &p), &robot_footprint(robot, &q)));
    }
    best
}
