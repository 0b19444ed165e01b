//! Splitting a robot polygon into nice triangles about a common rotation origin.
//!
//! All triangle coordinates here are relative to the origin `O`, which sits
//! at `(0, 0)`.

pub mod triangulate;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::point::{closest_on_segment, orient, signed_area, Point2};
use crate::geometry::TOLERANCE;

pub use triangulate::{ear_clip, is_simple};

/// Tolerance on the nice-angle test, in radians.
pub const ANGLE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DecompositionError {
    #[error("polygon needs at least 3 vertices")]
    TooFewVertices,
    #[error("polygon is not simple")]
    NotSimple,
    #[error("degenerate triangle")]
    Degenerate,
    #[error("not star-shaped about O")]
    NotStarShaped,
    #[error("origin lies strictly inside the triangle")]
    OriginInside,
    #[error("triangulation failed")]
    TriangulationFailed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RobotKind {
    Star,
    General,
}

/// A simple CCW polygon with a rotation origin, both in the robot's own frame.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RobotPolygon {
    pub vertices: Vec<Point2>,
    pub origin: Point2,
    pub kind: RobotKind,
}

impl RobotPolygon {
    /// Validates simplicity and reorients clockwise input to CCW.
    pub fn new(
        mut vertices: Vec<Point2>,
        origin: Point2,
        kind: RobotKind,
    ) -> Result<Self, DecompositionError> {
        if vertices.len() < 3 {
            return Err(DecompositionError::TooFewVertices);
        }
        if !is_simple(&vertices) || signed_area(&vertices).abs() <= TOLERANCE {
            return Err(DecompositionError::NotSimple);
        }
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        let poly = RobotPolygon { vertices, origin, kind };
        if kind == RobotKind::Star && !poly.origin_in_kernel() {
            return Err(DecompositionError::NotStarShaped);
        }
        Ok(poly)
    }

    /// Polygon with the origin at its vertex centroid.
    pub fn with_centroid_origin(vertices: Vec<Point2>, kind: RobotKind) -> Result<Self, DecompositionError> {
        let origin = area_centroid(&vertices);
        RobotPolygon::new(vertices, origin, kind)
    }

    /// Vertices relative to the origin.
    pub fn local_vertices(&self) -> Vec<Point2> {
        self.vertices.iter().map(|&v| v - self.origin).collect()
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    /// True when every edge keeps `O` on its closed left side.
    pub fn origin_in_kernel(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| orient(self.vertices[i], self.vertices[(i + 1) % n], self.origin) >= -TOLERANCE)
    }

    /// Largest distance from `O` to a vertex.
    pub fn r0(&self) -> f64 {
        self.vertices.iter().map(|v| v.dist(self.origin)).fold(0.0, f64::max)
    }
}

/// Area centroid of a simple polygon.
pub fn area_centroid(poly: &[Point2]) -> Point2 {
    let n = poly.len();
    let a = signed_area(poly);
    if a.abs() <= f64::MIN_POSITIVE {
        let s = poly.iter().fold(Point2::ORIGIN, |acc, &p| acc + p);
        return s / n as f64;
    }
    let mut c = Point2::ORIGIN;
    for i in 0..n {
        let (p, q) = (poly[i], poly[(i + 1) % n]);
        c += (p + q) * p.cross(q);
    }
    c / (6.0 * a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriangleMode {
    /// `a` is the origin itself; `b` carries the angle of at least π/2.
    Apex,
    /// The origin lies outside; every edge moves monotonically away from it.
    General,
}

/// A triangle whose rotational sweep about the origin has an exact
/// 1-basic or sector-plus-strip description.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NiceTriangle {
    pub a: Point2,
    pub b: Point2,
    pub c: Point2,
    pub mode: TriangleMode,
    /// Distance of the farthest vertex, `‖c‖`.
    pub r: f64,
}

impl NiceTriangle {
    fn sorted(p: Point2, q: Point2, s: Point2, mode: TriangleMode) -> Self {
        let mut v = [p, q, s];
        v.sort_by(|x, y| x.norm2().total_cmp(&y.norm2()));
        NiceTriangle { a: v[0], b: v[1], c: v[2], mode, r: v[2].norm() }
    }

    /// Apex triangle `(O, p, q)`.
    pub fn apex(p: Point2, q: Point2) -> Self {
        let (b, c) = if p.norm2() <= q.norm2() { (p, q) } else { (q, p) };
        NiceTriangle { a: Point2::ORIGIN, b, c, mode: TriangleMode::Apex, r: c.norm() }
    }

    pub fn general(p: Point2, q: Point2, s: Point2) -> Self {
        NiceTriangle::sorted(p, q, s, TriangleMode::General)
    }

    pub fn vertices(&self) -> [Point2; 3] {
        [self.a, self.b, self.c]
    }

    pub fn area(&self) -> f64 {
        0.5 * orient(self.a, self.b, self.c).abs()
    }

    pub fn centroid(&self) -> Point2 {
        (self.a + self.b + self.c) / 3.0
    }

    /// Checks this triangle's own niceness condition.
    pub fn is_nice(&self) -> bool {
        match self.mode {
            TriangleMode::Apex => {
                self.a == Point2::ORIGIN
                    && matches!(is_nice_apex(self.a, self.b, self.c), Ok(Some(_)))
            }
            TriangleMode::General => general_conditions(self.a, self.b, self.c),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceVertex {
    B,
    C,
}

/// A triangle is degenerate when its smallest height is within tolerance.
fn is_degenerate(a: Point2, b: Point2, c: Point2) -> bool {
    let longest = a.dist(b).max(b.dist(c)).max(c.dist(a));
    longest == 0.0 || orient(a, b, c).abs() / longest <= TOLERANCE
}

/// Angle test for the triangle with apex `a`: nice iff the angle at `b` or at
/// `c` is at least π/2. Returns which vertex carries that angle.
pub fn is_nice_apex(a: Point2, b: Point2, c: Point2) -> Result<Option<NiceVertex>, DecompositionError> {
    if is_degenerate(a, b, c) {
        return Err(DecompositionError::Degenerate);
    }
    let slack = (PI / 2.0 - ANGLE_TOLERANCE).cos();
    let cos_at = |p: Point2, q: Point2, r: Point2| {
        let (u, v) = (q - p, r - p);
        u.dot(v) / (u.norm() * v.norm())
    };
    if cos_at(b, a, c) <= slack {
        Ok(Some(NiceVertex::B))
    } else if cos_at(c, a, b) <= slack {
        Ok(Some(NiceVertex::C))
    } else {
        Ok(None)
    }
}

/// Split an apex triangle at the foot of the perpendicular from the apex, if
/// needed. The result is expressed relative to `a`.
pub fn split_apex(a: Point2, b: Point2, c: Point2) -> Result<Vec<NiceTriangle>, DecompositionError> {
    let (b, c) = (b - a, c - a);
    if is_nice_apex(Point2::ORIGIN, b, c)?.is_some() {
        return Ok(vec![NiceTriangle::apex(b, c)]);
    }
    // Both base angles are acute, so the foot lies strictly inside [b, c].
    let (d, _) = closest_on_segment(Point2::ORIGIN, b, c);
    let mut out = Vec::with_capacity(2);
    for q in [b, c] {
        if !is_degenerate(Point2::ORIGIN, d, q) {
            out.push(NiceTriangle::apex(d, q));
        }
    }
    Ok(out)
}

/// Fan from the origin over a polygon star-shaped about it, splitting each
/// fan triangle into apex-nice pieces. At most `2n` pieces.
pub fn decompose_star(poly: &RobotPolygon) -> Result<Decomposition, DecompositionError> {
    if !poly.origin_in_kernel() {
        return Err(DecompositionError::NotStarShaped);
    }
    let v = snap(poly.local_vertices());
    let n = v.len();
    let mut tris = Vec::with_capacity(2 * n);
    for i in 0..n {
        let (p, q) = (v[i], v[(i + 1) % n]);
        if is_degenerate(Point2::ORIGIN, p, q) {
            continue;
        }
        tris.extend(split_apex(Point2::ORIGIN, p, q)?);
    }
    Ok(Decomposition::new(tris, poly.origin))
}

fn general_conditions(a: Point2, b: Point2, c: Point2) -> bool {
    let scale = c.norm().max(1.0);
    let tol = TOLERANCE * scale;
    a.dot(b - a) >= -tol && a.dot(c - a) >= -tol && b.dot(c - b) >= -tol
}

fn strictly_inside(a: Point2, b: Point2, c: Point2, p: Point2) -> bool {
    let s = orient(a, b, c).signum();
    s * orient(a, b, p) > 0.0 && s * orient(b, c, p) > 0.0 && s * orient(c, a, p) > 0.0
}

/// Niceness of a triangle not containing the origin: with vertices sorted
/// by norm, `⟨A,B−A⟩ ≥ 0`, `⟨A,C−A⟩ ≥ 0` and `⟨B,C−B⟩ ≥ 0`.
pub fn is_nice_general(p: Point2, q: Point2, s: Point2) -> Result<bool, DecompositionError> {
    if is_degenerate(p, q, s) {
        return Err(DecompositionError::Degenerate);
    }
    if strictly_inside(p, q, s, Point2::ORIGIN) {
        return Err(DecompositionError::OriginInside);
    }
    let t = NiceTriangle::general(p, q, s);
    Ok(general_conditions(t.a, t.b, t.c))
}

/// Split a triangle not containing the origin into at most four nice pieces.
pub fn split_general(p: Point2, q: Point2, s: Point2) -> Result<Vec<NiceTriangle>, DecompositionError> {
    if is_degenerate(p, q, s) {
        return Err(DecompositionError::Degenerate);
    }
    if strictly_inside(p, q, s, Point2::ORIGIN) {
        return Err(DecompositionError::OriginInside);
    }
    Ok(decompose_triangle(p, q, s))
}

/// Nice pieces of an arbitrary triangle (origin inside, on, or outside).
///
/// Let `D` be the point of the triangle closest to the origin. Fanning from
/// `D` over the edges not containing it gives pieces whose two `D`-edges are
/// monotone; an opposite edge that is not monotone is split at the foot of
/// the perpendicular from the origin. This gives at most 6 pieces when the
/// origin is inside and at most 4 otherwise.
pub fn decompose_triangle(p: Point2, q: Point2, s: Point2) -> Vec<NiceTriangle> {
    let v = snap(vec![p, q, s]);
    let v = if orient(v[0], v[1], v[2]) < 0.0 { [v[0], v[2], v[1]] } else { [v[0], v[1], v[2]] };
    if is_degenerate(v[0], v[1], v[2]) {
        return Vec::new();
    }
    let o = Point2::ORIGIN;
    let mut out = Vec::with_capacity(6);

    // Closest point of the triangle to the origin, remembering its edge.
    let mut best = (f64::INFINITY, o, 0usize, 0.0f64);
    for i in 0..3 {
        let (d, t) = closest_on_segment(o, v[i], v[(i + 1) % 3]);
        let dist = d.norm2();
        if dist < best.0 {
            best = (dist, d, i, t);
        }
    }
    let inside = (0..3).all(|i| orient(v[i], v[(i + 1) % 3], o) >= 0.0) || best.0.sqrt() < TOLERANCE;
    if inside {
        for i in 0..3 {
            let (e0, e1) = (v[i], v[(i + 1) % 3]);
            if is_degenerate(o, e0, e1) {
                continue;
            }
            if let Ok(pieces) = split_apex(o, e0, e1) {
                out.extend(pieces);
            }
        }
        return out;
    }

    let (_, d, ei, t) = best;
    let fan_edges: Vec<(Point2, Point2)> = if t == 0.0 || t == 1.0 {
        let k = if t == 0.0 { ei } else { (ei + 1) % 3 };
        vec![(v[(k + 1) % 3], v[(k + 2) % 3])]
    } else {
        vec![(v[(ei + 1) % 3], v[(ei + 2) % 3]), (v[(ei + 2) % 3], v[ei])]
    };
    for (e0, e1) in fan_edges {
        let (f, tf) = closest_on_segment(o, e0, e1);
        let split = tf > 0.0 && tf < 1.0 && (e0.dot(e1 - e0) < 0.0 && e1.dot(e0 - e1) < 0.0);
        if split {
            for (x, y) in [(e0, f), (f, e1)] {
                if !is_degenerate(d, x, y) {
                    out.push(NiceTriangle::general(d, x, y));
                }
            }
        } else if !is_degenerate(d, e0, e1) {
            out.push(NiceTriangle::general(d, e0, e1));
        }
    }
    out
}

fn snap(mut v: Vec<Point2>) -> Vec<Point2> {
    for p in &mut v {
        if p.norm() < TOLERANCE {
            *p = Point2::ORIGIN;
        }
    }
    v
}

/// Nice triangles covering a robot, all about the same origin.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub triangles: Vec<NiceTriangle>,
    /// Largest `r_j`, the radius of the robot's circumcircle about `O`.
    pub r0: f64,
    /// Rotation origin in the robot's own frame.
    pub origin: Point2,
}

impl Decomposition {
    pub fn new(triangles: Vec<NiceTriangle>, origin: Point2) -> Self {
        let r0 = triangles.iter().map(|t| t.r).fold(0.0, f64::max);
        Decomposition { triangles, r0, origin }
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn area(&self) -> f64 {
        self.triangles.iter().map(|t| t.area()).sum()
    }
}

/// Decompose a robot using a caller-supplied triangulation (in the robot frame).
pub fn decompose_with_triangulation(poly: &RobotPolygon, tris: &[[Point2; 3]]) -> Decomposition {
    let mut out = Vec::with_capacity(4 * tris.len() + 2);
    for t in tris {
        out.extend(decompose_triangle(t[0] - poly.origin, t[1] - poly.origin, t[2] - poly.origin));
    }
    Decomposition::new(out, poly.origin)
}

/// Ear-clip, then split every triangle into nice pieces. At most `4n − 6`.
pub fn decompose_general(poly: &RobotPolygon) -> Result<Decomposition, DecompositionError> {
    if !is_simple(&poly.vertices) {
        return Err(DecompositionError::NotSimple);
    }
    let tris = ear_clip(&poly.vertices).ok_or(DecompositionError::TriangulationFailed)?;
    Ok(decompose_with_triangulation(poly, &tris))
}

/// Decompose according to the polygon's declared kind.
pub fn decompose(poly: &RobotPolygon) -> Result<Decomposition, DecompositionError> {
    match poly.kind {
        RobotKind::Star => decompose_star(poly),
        RobotKind::General => decompose_general(poly),
    }
}

/// The extremal family needing exactly `4n − 6` nice triangles: vertices
/// `v_k = exp(2kπi / 3(n−2))`, `k = 0..=n−2`, plus `exp(4πi/3)`, with the
/// origin at the circle center. The triangulation is the central triangle
/// plus a fan from `v_0` over the short arc.
pub fn worst_case_instance(n: usize) -> (RobotPolygon, Vec<[Point2; 3]>) {
    assert!(n >= 3, "worst_case_instance needs n >= 3");
    let m = n - 2;
    let step = 2.0 * PI / (3.0 * m as f64);
    let mut verts: Vec<Point2> = (0..=m).map(|k| Point2::from_angle(step * k as f64)).collect();
    let u2 = Point2::from_angle(4.0 * PI / 3.0);
    verts.push(u2);
    let mut tris = vec![[verts[0], verts[m], u2]];
    for k in 1..m {
        tris.push([verts[0], verts[k], verts[k + 1]]);
    }
    let poly = RobotPolygon { vertices: verts, origin: Point2::ORIGIN, kind: RobotKind::General };
    (poly, tris)
}
