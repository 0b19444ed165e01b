//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use rand::Rng;
use sss_core::decomposition::{decompose_triangle, NiceTriangle, RobotKind, RobotPolygon, TriangleMode};
use sss_core::environment::Environment;
use sss_core::geometry::point::{point_in_polygon, point_segment_distance, segments_intersect};
use sss_core::geometry::{AngularRange, Point2};

pub fn pt(x: f64, y: f64) -> Point2 {
    Point2::new(x, y)
}

/// Star polygon about the origin: increasing angles with gaps below π,
/// random radii.
pub fn random_star<R: Rng>(rng: &mut R, n: usize) -> RobotPolygon {
    loop {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..n).all(|i| {
            let next = if i + 1 < n { angles[i + 1] } else { angles[0] + TAU };
            let g = next - angles[i];
            g > 1e-3 && g < PI - 1e-3
        });
        if !gaps_ok {
            continue;
        }
        let verts: Vec<Point2> = angles.iter().map(|&a| Point2::from_angle(a) * rng.gen_range(0.3..3.0)).collect();
        if let Ok(r) = RobotPolygon::new(verts, Point2::ORIGIN, RobotKind::Star) {
            return r;
        }
    }
}

fn crossing(poly: &[Point2]) -> Option<(usize, usize)> {
    let n = poly.len();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if segments_intersect(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Simple polygon from random points by 2-opt untangling; usually not
/// star-shaped.
pub fn random_simple_polygon<R: Rng>(rng: &mut R, n: usize) -> Vec<Point2> {
    'outer: loop {
        let mut poly: Vec<Point2> = (0..n).map(|_| pt(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))).collect();
        for _ in 0..10 * n * n {
            match crossing(&poly) {
                None => {
                    if sss_core::decomposition::is_simple(&poly) {
                        return poly;
                    }
                    continue 'outer;
                }
                Some((i, j)) => poly[i + 1..=j].reverse(),
            }
        }
    }
}

/// A nice triangle of either mode from splitting a random triangle about
/// the origin.
pub fn random_nice_triangle<R: Rng>(rng: &mut R, mode: Option<TriangleMode>) -> NiceTriangle {
    loop {
        let p: Vec<Point2> = (0..3).map(|_| pt(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))).collect();
        if (p[1] - p[0]).cross(p[2] - p[0]).abs() < 0.05 {
            continue;
        }
        let pieces: Vec<NiceTriangle> = decompose_triangle(p[0], p[1], p[2])
            .into_iter()
            .filter(|t| mode.is_none_or(|m| t.mode == m) && t.area() > 1e-3)
            .collect();
        if !pieces.is_empty() {
            return pieces[rng.gen_range(0..pieces.len())];
        }
    }
}

/// Smallest arc of directions from the origin covering `pts` (none at the
/// origin): `(start, width)`.
pub fn direction_cover(pts: &[Point2]) -> (f64, f64) {
    let dirs: Vec<f64> = pts.iter().map(|v| v.y.atan2(v.x).rem_euclid(TAU)).collect();
    let mut best = (0.0, f64::INFINITY);
    for &s in &dirs {
        let span = dirs.iter().map(|&d| (d - s).rem_euclid(TAU)).fold(0.0, f64::max);
        if span < best.1 {
            best = (s, span);
        }
    }
    best
}

fn in_triangle_or_near(p: Point2, t: &[Point2; 3], gap: f64) -> bool {
    point_in_polygon(p, t) || (0..3).any(|e| point_segment_distance(p, t[e], t[(e + 1) % 3]) <= gap)
}

/// Dense-θ sweep oracle: is `p` in `∪_{θ ∈ range} rot(θ)·t`?
///
/// Rotations are sampled every ≤ `step` radians. A point within the chord
/// deviation `‖p‖·step/2` of a sampled copy counts as inside, so every
/// point of the true sweep is reported and every reported point lies within
/// that distance of it. Only angles that can bring `p` into the triangle's
/// cone of directions are sampled.
pub fn sweep_oracle(t: &NiceTriangle, range: &AngularRange, p: Point2, step: f64) -> bool {
    let w = range.width();
    let steps = ((w / step).ceil() as usize).max(1);
    let dt = w / steps as f64;
    let rp = p.norm();
    let gap = rp * dt / 2.0 + 1e-12;
    let verts = t.vertices();
    if rp < 1e-12 {
        return (0..=steps).any(|k| {
            let th = range.lo + dt * k as f64;
            in_triangle_or_near(p, &verts.map(|v| v.rotate(th)), gap)
        });
    }
    let nonzero: Vec<Point2> = verts.iter().copied().filter(|v| v.norm() > 1e-12).collect();
    let (c_lo, c_w) = direction_cover(&nonzero);
    // θ must put angle(p) − θ within the cone, padded by the gap.
    let pad = (2.0 * gap / rp).min(PI) + 1e-9;
    let phi = p.y.atan2(p.x);
    let first = (phi - c_lo - c_w - pad - range.lo).rem_euclid(TAU);
    let len = c_w + 2.0 * pad;
    let mut ks = Vec::new();
    for shift in [0.0, -TAU] {
        let a = first + shift;
        let k0 = (a / dt).ceil().max(0.0);
        let k1 = ((a + len) / dt).floor().min(steps as f64);
        if k0 <= k1 {
            ks.push((k0 as usize, k1 as usize));
        }
    }
    // Edges of the window, in case rounding shaved a step.
    ks.iter().any(|&(k0, k1)| {
        (k0.saturating_sub(1)..=(k1 + 1).min(steps)).any(|k| {
            let th = range.lo + dt * k as f64;
            in_triangle_or_near(p, &verts.map(|v| v.rotate(th)), gap)
        })
    })
}

/// Width of the thinnest strip containing the polygon (rotating calipers
/// over the convex hull, done by brute force over hull edges).
pub fn min_strip_width(poly: &[Point2]) -> f64 {
    let mut best = f64::INFINITY;
    let n = poly.len();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a, b) = (poly[i], poly[j]);
            let d = (b - a).normalized();
            let offs: Vec<f64> = poly.iter().map(|&q| d.cross(q - a)).collect();
            let (lo, hi) = offs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &o| (l.min(o), h.max(o)));
            // A supporting line through a and b: everything on one side.
            if lo >= -1e-9 || hi <= 1e-9 {
                best = best.min(hi - lo);
            }
        }
    }
    best
}

/// Whether the closed triangle sits inside some obstacle with at least
/// `margin` to spare.
pub fn buried(tri: &[Point2; 3], env: &Environment, margin: f64) -> bool {
    env.obstacles.iter().any(|poly| {
        if !tri.iter().all(|&v| point_in_polygon(v, poly)) {
            return false;
        }
        let m = poly.len();
        (0..3).all(|e| {
            (0..m).all(|j| {
                sss_core::geometry::point::segment_segment_distance(
                    tri[e],
                    tri[(e + 1) % 3],
                    poly[j],
                    poly[(j + 1) % m],
                ) > margin
            })
        })
    })
}
