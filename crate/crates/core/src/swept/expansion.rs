//! Truncated strips and their explicit s-expansion as a 2-basic shape.

use serde::{Deserialize, Serialize};

use crate::geometry::{
    Curve, Disc, DiscComplement, HalfPlane, OneBasicShape, Piece, Point2, Primitive, TwoBasicShape,
};

/// Region between two parallel lines, inside the annulus `inner ≤ ‖p‖ ≤ outer`
/// and beyond the chord joining the two inner corners.
///
/// `corners = [p0, p1, q0, q1]`: `p0, p1` lie on the first line at the inner
/// and outer radius, `q0, q1` likewise on the second, and `q0` is CCW of `p0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TruncStrip {
    pub corners: [Point2; 4],
    pub inner: f64,
    pub outer: f64,
}

fn flipped(h: HalfPlane) -> HalfPlane {
    HalfPlane { normal: -h.normal, offset: -h.offset }
}

impl TruncStrip {
    pub fn new(corners: [Point2; 4], inner: f64, outer: f64) -> Self {
        TruncStrip { corners, inner, outer }
    }

    fn direction(&self) -> Point2 {
        let [p0, p1, q0, q1] = self.corners;
        let d = p1 - p0;
        if d.norm2() > 0.0 {
            d.normalized()
        } else {
            (q1 - q0).normalized()
        }
    }

    pub fn halfplanes(&self) -> Vec<HalfPlane> {
        let [p0, _, q0, _] = self.corners;
        let d = self.direction();
        let mut hs = Vec::with_capacity(3);
        if (q0 - p0).cross(d).abs() > 0.0 {
            hs.push(HalfPlane::containing(p0, d, q0));
            hs.push(HalfPlane::containing(q0, d, p0));
        }
        if q0 != p0 {
            hs.push(flipped(HalfPlane::containing(p0, q0 - p0, Point2::ORIGIN)));
        }
        hs
    }

    pub fn shape(&self) -> OneBasicShape {
        let o = Point2::ORIGIN;
        let mut parts: Vec<Primitive> = self.halfplanes().into_iter().map(Primitive::HalfPlane).collect();
        parts.push(Primitive::Disc(Disc::new(o, self.outer)));
        parts.push(Primitive::DiscComplement(DiscComplement::new(o, self.inner)));
        OneBasicShape::new(parts).expect("one complement")
    }

    pub fn boundary(&self) -> Vec<Curve> {
        let o = Point2::ORIGIN;
        let [p0, p1, q0, q1] = self.corners;
        vec![
            Curve::Segment(p0, p1),
            Curve::Segment(q0, q1),
            Curve::arc_between(o, self.inner, p0, q0),
            Curve::arc_between(o, self.outer, p1, q1),
        ]
    }

    pub fn piece(&self) -> Piece {
        Piece::new(self.shape(), self.boundary())
    }
}

/// Explicit `s`-expansion of a truncated strip: four corner discs plus a
/// convex hexagon (offset strip lines and one chord per corner) clipped to
/// the annulus grown by `s`. When `s` exceeds the inner radius the inner
/// circle disappears and the hexagon is instead cut by the chord through the
/// two inner offset points; the corner discs round off the resulting
/// concave vertex.
pub fn trunc_strip_expansion(x: &TruncStrip, s: f64) -> TwoBasicShape {
    let o = Point2::ORIGIN;
    let [p0, p1, q0, q1] = x.corners;
    let d = x.direction();
    let mut n1 = d.perp();
    if n1.dot(q0 - p0) > 0.0 {
        n1 = -n1;
    }
    let n2 = -n1;

    let mut hs = vec![HalfPlane::through(p0 + n1 * s, n1), HalfPlane::through(q0 + n2 * s, n2)];
    let hat = |p: Point2| p.normalized();
    for (c, e1, e2, into) in [
        (p0, -hat(p0), n1, d),
        (p1, n1, hat(p1), -d),
        (q0, -hat(q0), n2, d),
        (q1, n2, hat(q1), -d),
    ] {
        hs.push(chord_halfplane(c, s, e1, e2, into));
    }

    let mut parts: Vec<Primitive> = Vec::with_capacity(9);
    let inner = x.inner - s;
    if inner > 0.0 {
        parts.push(Primitive::DiscComplement(DiscComplement::new(o, inner)));
    } else {
        let (a, b) = (-hat(p0), -hat(q0));
        hs.push(chord_halfplane(o, -inner, a, b, -(a + b)));
    }
    parts.extend(hs.into_iter().map(Primitive::HalfPlane));
    parts.push(Primitive::Disc(Disc::new(o, x.outer + s)));
    let hexagon = OneBasicShape::new(parts).expect("one complement");

    let mut all = vec![hexagon];
    for c in x.corners {
        all.push(OneBasicShape::new(vec![Primitive::Disc(Disc::new(c, s))]).expect("no complements"));
    }
    TwoBasicShape::new(all)
}

/// Half-plane bounded by the chord joining `center + r·e1` and `center + r·e2`
/// (unit directions at most π apart), on the side of `center`. `into` points
/// from the corner into the region the chord must keep; it fixes the normal
/// when the two directions are antipodal (a cusp corner). The bisector form
/// stays well-conditioned when the endpoints nearly coincide.
fn chord_halfplane(center: Point2, r: f64, e1: Point2, e2: Point2, into: Point2) -> HalfPlane {
    let sum = e1 + e2;
    let m = if sum.norm() > 1e-6 {
        sum.normalized()
    } else {
        let p = e1.perp();
        if p.dot(into) > 0.0 {
            -p
        } else {
            p
        }
    };
    HalfPlane { normal: m, offset: m.dot(center) + r * e1.dot(m).max(0.0) }
}
