//! Deterministic SVG rendering of a workspace, its leaves and a path.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::schema::{LeafOut, Pose};
use crate::decomposition::RobotPolygon;
use crate::environment::{robot_footprint, Environment};
use crate::geometry::Point2;
use crate::predicates::Classification;

/// Everything that goes into one picture.
pub struct Scene<'a> {
    pub env: &'a Environment,
    pub robot: &'a RobotPolygon,
    pub leaves: &'a [LeafOut],
    pub path: &'a [Pose],
    pub start: Pose,
    pub goal: Pose,
}

fn fill(c: Classification) -> &'static str {
    match c {
        Classification::Free => "#8fd18f",
        Classification::Stuck => "#e08080",
        Classification::Mixed => "#e8e0a0",
    }
}

fn points(pts: &[Point2]) -> String {
    let mut s = String::new();
    for (i, p) in pts.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{:.3},{:.3}", p.x, p.y);
    }
    s
}

/// Leaves are projected onto the plane; a square shows FREE if any leaf over
/// it is FREE, else MIXED if any is MIXED, else STUCK.
pub fn render(scene: &Scene) -> String {
    let b = scene.env.bounds;
    let (w, h) = (b.width(), b.height());
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.3} {:.3} {:.3} {:.3}" width="{:.0}" height="{:.0}">"#,
        b.min.x,
        -b.max.y,
        w,
        h,
        w.max(256.0),
        h.max(256.0)
    );
    let _ = writeln!(s, r#"<g transform="scale(1,-1)">"#);
    let _ = writeln!(
        s,
        r##"<rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}" fill="#ffffff" stroke="#000000" stroke-width="1"/>"##,
        b.min.x, b.min.y, w, h
    );

    let mut squares: BTreeMap<(u64, u64, u64), Classification> = BTreeMap::new();
    for l in scene.leaves {
        let key = (l.x.to_bits(), l.y.to_bits(), l.size.to_bits());
        let rank = |c: Classification| match c {
            Classification::Free => 2,
            Classification::Mixed => 1,
            Classification::Stuck => 0,
        };
        let e = squares.entry(key).or_insert(l.class);
        if rank(l.class) > rank(*e) {
            *e = l.class;
        }
    }
    // Larger squares first so finer ones stay visible.
    let mut order: Vec<_> = squares.into_iter().collect();
    order.sort_by(|a, b| b.0 .2.cmp(&a.0 .2).then(a.0.cmp(&b.0)));
    let _ = writeln!(s, r##"<g stroke="#606060" stroke-width="0.2">"##);
    for ((x, y, size), class) in order {
        let (x, y, size) = (f64::from_bits(x), f64::from_bits(y), f64::from_bits(size));
        let _ = writeln!(
            s,
            r#"<rect x="{x:.3}" y="{y:.3}" width="{size:.3}" height="{size:.3}" fill="{}"/>"#,
            fill(class)
        );
    }
    let _ = writeln!(s, "</g>");

    for poly in &scene.env.obstacles {
        let _ = writeln!(s, r##"<polygon points="{}" fill="#404040"/>"##, points(poly));
    }

    if scene.path.len() > 1 {
        let pts: Vec<Point2> = scene.path.iter().map(|p| Point2::new(p.x, p.y)).collect();
        let _ = writeln!(
            s,
            r##"<polyline points="{}" fill="none" stroke="#1f4fbf" stroke-width="1.5"/>"##,
            points(&pts)
        );
        for p in scene.path {
            let fp = robot_footprint(scene.robot, &p.to_config());
            let _ = writeln!(
                s,
                r##"<polygon points="{}" fill="none" stroke="#1f4fbf" stroke-width="0.5"/>"##,
                points(&fp)
            );
        }
    }
    for (pose, color) in [(scene.start, "#0a8a0a"), (scene.goal, "#b01010")] {
        let fp = robot_footprint(scene.robot, &pose.to_config());
        let _ = writeln!(s, r#"<polygon points="{}" fill="{color}" fill-opacity="0.6"/>"#, points(&fp));
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}
