//! Boundary curves of basic shapes and distances from features to them.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::angle::ccw_delta;
use super::feature::Feature;
use super::point::{point_segment_distance, segment_segment_distance, Point2};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Curve {
    Segment(Point2, Point2),
    /// CCW arc of the circle `(center, radius)` starting at polar angle `start`.
    Arc { center: Point2, radius: f64, start: f64, sweep: f64 },
}

impl Curve {
    /// The CCW arc from the direction of `from` to the direction of `to`
    /// (both taken relative to `center`) on the circle of radius `radius`.
    pub fn arc_between(center: Point2, radius: f64, from: Point2, to: Point2) -> Self {
        let start = (from - center).angle();
        let sweep = ccw_delta(start, (to - center).angle());
        Curve::Arc { center, radius, start, sweep }
    }

    pub fn circle(center: Point2, radius: f64) -> Self {
        Curve::Arc { center, radius, start: 0.0, sweep: TAU }
    }

    pub fn translated(&self, v: Point2) -> Self {
        match *self {
            Curve::Segment(a, b) => Curve::Segment(a + v, b + v),
            Curve::Arc { center, radius, start, sweep } => {
                Curve::Arc { center: center + v, radius, start, sweep }
            }
        }
    }

    pub fn endpoints(&self) -> (Point2, Point2) {
        match *self {
            Curve::Segment(a, b) => (a, b),
            Curve::Arc { center, radius, start, sweep } => (
                center + Point2::from_angle(start) * radius,
                center + Point2::from_angle(start + sweep) * radius,
            ),
        }
    }

    pub fn point_distance(&self, p: Point2) -> f64 {
        match *self {
            Curve::Segment(a, b) => point_segment_distance(p, a, b),
            Curve::Arc { center, radius, start, sweep } => {
                let v = p - center;
                let r = v.norm();
                if r > 0.0 && arc_contains_dir(start, sweep, v.angle()) {
                    (r - radius).abs()
                } else if r == 0.0 {
                    radius
                } else {
                    let (e0, e1) = self.endpoints();
                    p.dist(e0).min(p.dist(e1))
                }
            }
        }
    }

    pub fn segment_distance(&self, a: Point2, b: Point2) -> f64 {
        match *self {
            Curve::Segment(c, d) => segment_segment_distance(a, b, c, d),
            Curve::Arc { center, radius, start, sweep } => {
                segment_arc_distance(a, b, center, radius, start, sweep)
            }
        }
    }

    pub fn feature_distance(&self, f: &Feature) -> f64 {
        match *f {
            Feature::Corner { p, .. } => self.point_distance(p),
            Feature::Edge { start, end } => self.segment_distance(start, end),
        }
    }
}

#[inline]
fn arc_contains_dir(start: f64, sweep: f64, phi: f64) -> bool {
    sweep >= TAU || ccw_delta(start, phi) <= sweep
}

fn segment_arc_distance(
    a: Point2,
    b: Point2,
    center: Point2,
    radius: f64,
    start: f64,
    sweep: f64,
) -> f64 {
    let arc = Curve::Arc { center, radius, start, sweep };
    let d = b - a;
    let w = a - center;
    let qa = d.norm2();
    if qa == 0.0 {
        return arc.point_distance(a);
    }
    // Crossing points of the segment with the full circle.
    let qb = d.dot(w);
    let qc = w.norm2() - radius * radius;
    let disc = qb * qb - qa * qc;
    if disc >= 0.0 {
        let sq = disc.sqrt();
        for t in [(-qb - sq) / qa, (-qb + sq) / qa] {
            if (0.0..=1.0).contains(&t) {
                let q = a + d * t - center;
                if arc_contains_dir(start, sweep, q.angle()) {
                    return 0.0;
                }
            }
        }
    }
    let (e0, e1) = arc.endpoints();
    let mut best = arc
        .point_distance(a)
        .min(arc.point_distance(b))
        .min(point_segment_distance(e0, a, b))
        .min(point_segment_distance(e1, a, b));
    // Interior critical pairs lie on the normal line through the center.
    let t = -qb / qa;
    if (0.0..=1.0).contains(&t) {
        let foot = a + d * t;
        let n = foot - center;
        let h = n.norm();
        if h > 0.0 {
            let u = n / h;
            for (dir, dist) in [(u, (h - radius).abs()), (-u, h + radius)] {
                if arc_contains_dir(start, sweep, dir.angle()) {
                    best = best.min(dist);
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn brute(c: &Curve, a: Point2, b: Point2) -> f64 {
        let samples = |cv: &Curve| -> Vec<Point2> {
            (0..=2000)
                .map(|i| {
                    let t = i as f64 / 2000.0;
                    match *cv {
                        Curve::Segment(p, q) => p.lerp(q, t),
                        Curve::Arc { center, radius, start, sweep } => {
                            center + Point2::from_angle(start + sweep * t) * radius
                        }
                    }
                })
                .collect()
        };
        let cs = samples(c);
        cs.iter().map(|&p| point_segment_distance(p, a, b)).fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn point_to_arc() {
        let arc = Curve::Arc { center: Point2::ORIGIN, radius: 1.0, start: 0.0, sweep: FRAC_PI_2 };
        assert!((arc.point_distance(Point2::new(2.0, 2.0)) - (8f64.sqrt() - 1.0)).abs() < 1e-12);
        assert!((arc.point_distance(Point2::new(0.0, -1.0)) - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(arc.point_distance(Point2::ORIGIN), 1.0);
    }

    #[test]
    fn segment_to_arc_matches_sampling() {
        let arcs = [
            Curve::Arc { center: Point2::ORIGIN, radius: 1.0, start: 0.3, sweep: 1.2 },
            Curve::Arc { center: Point2::new(1.0, -1.0), radius: 2.0, start: PI, sweep: 2.5 },
            Curve::circle(Point2::ORIGIN, 0.5),
        ];
        let segs = [
            (Point2::new(2.0, -1.0), Point2::new(2.0, 3.0)),
            (Point2::new(-0.2, -0.1), Point2::new(0.1, 0.2)),
            (Point2::new(-3.0, 0.5), Point2::new(-1.0, -2.0)),
            (Point2::new(0.0, 0.0), Point2::new(3.0, 3.0)),
        ];
        for arc in &arcs {
            for &(a, b) in &segs {
                let exact = arc.segment_distance(a, b);
                let approx = brute(arc, a, b);
                assert!(exact <= approx + 1e-12, "{arc:?} {a:?} {b:?}: {exact} > {approx}");
                assert!(approx - exact < 5e-3, "{arc:?} {a:?} {b:?}: {exact} vs {approx}");
            }
        }
    }
}
