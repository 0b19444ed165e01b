//! Footprints of nice triangles rotating through an angular range.
//!
//! Everything here lives in the origin-centered robot frame; callers shift
//! features by the box center before testing.

pub mod expansion;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposition::{NiceTriangle, TriangleMode};
use crate::engine::config::Configuration;
use crate::geometry::angle::ccw_delta;
use crate::geometry::piece::union_separation;
use crate::geometry::{
    AngularRange, Curve, Disc, DiscComplement, Feature, HalfPlane, OneBasicShape, Piece, Point2,
    Primitive,
};

pub use expansion::{trunc_strip_expansion, TruncStrip};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SweptError {
    #[error("range too wide for TTS")]
    TooWideForTts,
    #[error("range too wide for NSS")]
    TooWideForNss,
    #[error("triangle is not nice in the required mode")]
    WrongMode,
}

/// Triangle vertices at a pose, in world coordinates.
pub fn footprint_at(t: &NiceTriangle, pose: &Configuration) -> [Point2; 3] {
    t.vertices().map(|v| pose.apply(v))
}

fn rotated(t: &NiceTriangle, theta: f64) -> [Point2; 3] {
    let (s, c) = theta.sin_cos();
    t.vertices().map(|v| v.rotate_sc(s, c))
}

/// CCW triangle as a 1-basic piece.
pub fn triangle_piece(p: [Point2; 3]) -> Piece {
    let [a, b, c] = p;
    let (b, c) = if (b - a).cross(c - a) < 0.0 { (c, b) } else { (b, c) };
    let shape = OneBasicShape::new(vec![
        Primitive::HalfPlane(HalfPlane::left_of(a, b)),
        Primitive::HalfPlane(HalfPlane::left_of(b, c)),
        Primitive::HalfPlane(HalfPlane::left_of(c, a)),
    ])
    .expect("no complements");
    Piece::new(shape, vec![Curve::Segment(a, b), Curve::Segment(b, c), Curve::Segment(c, a)])
}

/// Truncated triangular set: the sweep of an apex triangle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tts {
    pub halfplanes: [HalfPlane; 3],
    pub disc: Disc,
    pub piece: Piece,
}

/// Sweep of an apex-nice triangle over `range`, valid while the range is
/// narrower than `π` minus the apex angle.
pub fn tts_of(t: &NiceTriangle, range: &AngularRange) -> Result<Tts, SweptError> {
    if t.mode != TriangleMode::Apex || !t.is_nice() {
        return Err(SweptError::WrongMode);
    }
    let w = range.width();
    let apex = t.b.cross(t.c).atan2(t.b.dot(t.c)).abs();
    if range.full_circle || w >= PI - apex {
        return Err(SweptError::TooWideForTts);
    }
    let o = Point2::ORIGIN;
    let (th0, th1) = (range.lo, range.lo + w);
    let (b0, c0) = (t.b.rotate(th0), t.c.rotate(th0));
    let (b1, c1) = (t.b.rotate(th1), t.c.rotate(th1));
    let r = t.c.norm();
    let disc = Disc::new(o, r);
    let arc = Curve::Arc { center: o, radius: r, start: c0.angle(), sweep: w };
    let (halfplanes, boundary) = if t.b.cross(t.c) > 0.0 {
        (
            [HalfPlane::left_of(o, b0), HalfPlane::left_of(c1, o), HalfPlane::containing(b0, c0 - b0, o)],
            vec![Curve::Segment(o, b0), Curve::Segment(b0, c0), arc, Curve::Segment(c1, o)],
        )
    } else {
        (
            [HalfPlane::left_of(o, c0), HalfPlane::left_of(b1, o), HalfPlane::containing(b1, c1 - b1, o)],
            vec![Curve::Segment(o, c0), arc, Curve::Segment(c1, b1), Curve::Segment(b1, o)],
        )
    };
    let mut parts: Vec<Primitive> = halfplanes.iter().map(|h| Primitive::HalfPlane(*h)).collect();
    parts.push(Primitive::Disc(disc));
    let piece = Piece::new(OneBasicShape::new(parts).expect("no complements"), boundary);
    Ok(Tts { halfplanes, disc, piece })
}

/// Which pair of parallel lines bounds the truncated strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StripVariant {
    /// Strip sides parallel to the long edge at the start of the range; the
    /// sector has its apex at the rotated near vertex.
    AlongStart,
    /// Strip sides parallel to the long edge at the end of the range; the
    /// sector has its apex at the unrotated near vertex.
    AlongEnd,
}

/// The sweep of the long edge `[A, C]`, split into a sector and a strip.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweptSegmentDecomp {
    pub sector: Piece,
    pub strip: TruncStrip,
    pub variant: StripVariant,
    pub c_double_prime: Point2,
}

/// Nicely swept set: the triangle at one end of the range plus the swept
/// long edge.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NssDecomp {
    pub triangle: [Point2; 3],
    pub swept: SweptSegmentDecomp,
}

impl NssDecomp {
    pub fn pieces(&self) -> Vec<Piece> {
        vec![triangle_piece(self.triangle), self.swept.sector.clone(), self.swept.strip.piece()]
    }
}

/// Point where the ray `p + t·u` (unit `u`, `t ≥ 0`) leaves the circle of
/// radius `r` about the origin; `p` must lie inside it.
fn ray_exit(p: Point2, u: Point2, r: f64) -> Point2 {
    let pu = p.dot(u);
    let t = -pu + (pu * pu - p.norm2() + r * r).max(0.0).sqrt();
    p + u * t
}

/// Sector at `apex` between directions `d0` and `d1` (CCW, less than π),
/// clipped to the disc of radius `r` about the origin.
fn sector_piece(apex: Point2, d0: Point2, d1: Point2, e0: Point2, e1: Point2, r: f64) -> Piece {
    let o = Point2::ORIGIN;
    let shape = OneBasicShape::new(vec![
        Primitive::HalfPlane(HalfPlane::left_of(apex, apex + d0)),
        Primitive::HalfPlane(HalfPlane::left_of(apex + d1, apex)),
        Primitive::Disc(Disc::new(o, r)),
    ])
    .expect("no complements");
    Piece::new(
        shape,
        vec![Curve::Segment(apex, e0), Curve::Segment(apex, e1), Curve::arc_between(o, r, e0, e1)],
    )
}

/// Sweep of a general nice triangle over a range of width at most π/2.
pub fn nss_of(t: &NiceTriangle, range: &AngularRange) -> Result<NssDecomp, SweptError> {
    if t.mode != TriangleMode::General {
        return Err(SweptError::WrongMode);
    }
    let w = range.width();
    if range.full_circle || w > PI / 2.0 {
        return Err(SweptError::TooWideForNss);
    }
    let (th0, th1) = (range.lo, range.lo + w);
    let start = rotated(t, th0);
    let end = rotated(t, th1);
    let triangle = if (t.b - t.a).cross(t.c - t.a) > 0.0 { start } else { end };
    let (a0, c0) = (start[0], start[2]);
    let (a1, c1) = (end[0], end[2]);
    let (ra, rc) = (t.a.norm(), t.c.norm());
    let d0 = c0 - a0;
    let d1 = c1 - a1;

    let (variant, sector, corners, c2) = if a1.dot(d0) >= 0.0 {
        let c2 = ray_exit(a1, d0.normalized(), rc);
        let sector = sector_piece(a1, d0, d1, c2, c1, rc);
        (StripVariant::AlongStart, sector, [a0, c0, a1, c2], c2)
    } else {
        let c2 = ray_exit(a0, d1.normalized(), rc);
        let sector = sector_piece(a0, d0, d1, c0, c2, rc);
        (StripVariant::AlongEnd, sector, [a0, c2, a1, c1], c2)
    };
    let strip = TruncStrip::new(corners, ra, rc);
    Ok(NssDecomp { triangle, swept: SweptSegmentDecomp { sector, strip, variant, c_double_prime: c2 } })
}

/// Conservative cover of the sweep used when no exact form applies: the
/// annulus between the triangle's nearest and farthest radii, cut to the
/// directions it can reach when the total angle is below π.
pub fn fallback_piece(t: &NiceTriangle, range: &AngularRange) -> Piece {
    let o = Point2::ORIGIN;
    let inner = match t.mode {
        TriangleMode::Apex => 0.0,
        TriangleMode::General => t.a.norm(),
    };
    let outer = t.c.norm();
    let mut parts = vec![Primitive::Disc(Disc::new(o, outer))];
    if inner > 0.0 {
        parts.push(Primitive::DiscComplement(DiscComplement::new(o, inner)));
    }
    let full_boundary = |mut parts: Vec<Primitive>| {
        let mut boundary = vec![Curve::circle(o, outer)];
        if inner > 0.0 {
            boundary.push(Curve::circle(o, inner));
        } else {
            parts.retain(|p| !matches!(p, Primitive::DiscComplement(_)));
        }
        Piece::new(OneBasicShape::new(parts).expect("one complement"), boundary)
    };
    if range.full_circle {
        return full_boundary(parts);
    }
    let (phi_s, extent) = angular_extent(t);
    let total = extent + range.width();
    if total >= PI {
        return full_boundary(parts);
    }
    let lo = phi_s + range.lo;
    let (u0, u1) = (Point2::from_angle(lo), Point2::from_angle(lo + total));
    parts.push(Primitive::HalfPlane(HalfPlane::left_of(o, u0)));
    parts.push(Primitive::HalfPlane(HalfPlane::left_of(u1, o)));
    let mut boundary = vec![
        Curve::Segment(u0 * inner, u0 * outer),
        Curve::Segment(u1 * inner, u1 * outer),
        Curve::Arc { center: o, radius: outer, start: lo, sweep: total },
    ];
    if inner > 0.0 {
        boundary.push(Curve::Arc { center: o, radius: inner, start: lo, sweep: total });
    }
    Piece::new(OneBasicShape::new(parts).expect("one complement"), boundary)
}

/// Start direction and CCW width of the smallest arc of directions covering
/// the triangle as seen from the origin.
pub fn angular_extent(t: &NiceTriangle) -> (f64, f64) {
    let dirs: Vec<f64> = t
        .vertices()
        .iter()
        .filter(|v| **v != Point2::ORIGIN)
        .map(|v| v.angle())
        .collect();
    let mut best = (0.0, f64::INFINITY);
    for &s in &dirs {
        let span = dirs.iter().map(|&d| ccw_delta(s, d)).fold(0.0, f64::max);
        if span < best.1 {
            best = (s, span);
        }
    }
    best
}

/// The swept footprint of one triangle over an angular range.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum SweptRegion {
    Tts(Tts),
    Nss(NssDecomp),
    Fallback(Piece),
}

impl SweptRegion {
    /// Exact form when the range allows one, otherwise the annular cover.
    pub fn of(t: &NiceTriangle, range: &AngularRange) -> Self {
        let exact = match t.mode {
            TriangleMode::Apex => tts_of(t, range).map(SweptRegion::Tts).ok(),
            TriangleMode::General => nss_of(t, range).map(SweptRegion::Nss).ok(),
        };
        exact.unwrap_or_else(|| SweptRegion::Fallback(fallback_piece(t, range)))
    }

    pub fn pieces(&self) -> Vec<Piece> {
        match self {
            SweptRegion::Tts(tts) => vec![tts.piece.clone()],
            SweptRegion::Nss(nss) => nss.pieces(),
            SweptRegion::Fallback(p) => vec![p.clone()],
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, SweptRegion::Fallback(_))
    }
}

/// Slack added to separation comparisons; keeps rounding on the side of
/// retaining features.
pub fn separation_slack(scale: f64) -> f64 {
    1e-9 * (1.0 + scale)
}

/// True iff `f` meets the closed `s`-expansion of the union of `pieces`.
pub fn expand_and_test(pieces: &[Piece], s: f64, f: &Feature) -> bool {
    union_separation(pieces, f) <= s + separation_slack(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::point_in_polygon;
    use std::f64::consts::FRAC_PI_4;

    fn in_sweep(t: &NiceTriangle, range: &AngularRange, p: Point2, steps: usize) -> bool {
        (0..=steps).any(|k| {
            let th = range.lo + range.width() * k as f64 / steps as f64;
            point_in_polygon(p, &rotated(t, th))
        })
    }

    #[test]
    fn footprint_examples() {
        let t = NiceTriangle::apex(Point2::new(1.0, 0.0), Point2::new(1.0, 1.0));
        let id = footprint_at(&t, &Configuration::new(0.0, 0.0, 0.0));
        assert_eq!(id, t.vertices());
        let half = footprint_at(&t, &Configuration::new(0.0, 0.0, PI));
        assert!((half[1] - Point2::new(-1.0, 0.0)).norm() < 1e-12);
        let q = footprint_at(&t, &Configuration::new(5.0, 5.0, PI / 2.0));
        assert!((q[1] - Point2::new(5.0, 6.0)).norm() < 1e-12);
    }

    #[test]
    fn tts_right_isoceles_matches_sweep() {
        let t = NiceTriangle::apex(Point2::new(1.0, 0.0), Point2::new(1.0, 1.0));
        let range = AngularRange::new(0.0, FRAC_PI_4);
        let tts = tts_of(&t, &range).unwrap();
        let mut disagree = 0;
        for i in 0..100 {
            for j in 0..100 {
                let p = Point2::new(-1.5 + 3.0 * i as f64 / 99.0, -1.5 + 3.0 * j as f64 / 99.0);
                let near = tts.piece.boundary.iter().any(|c| c.point_distance(p) < 2e-3);
                if !near && tts.piece.contains(p) != in_sweep(&t, &range, p, 800) {
                    disagree += 1;
                }
            }
        }
        assert_eq!(disagree, 0);
    }

    #[test]
    fn tts_refuses_wide_range() {
        let t = NiceTriangle::apex(Point2::new(1.0, 0.0), Point2::new(1.0, 1.0));
        // Apex angle π/4, so the limit is 3π/4.
        assert!(tts_of(&t, &AngularRange::new(0.0, 0.8 * PI)).is_err());
        assert!(tts_of(&t, &AngularRange::new(0.0, 0.7 * PI)).is_ok());
    }

    #[test]
    fn tts_refuses_non_nice() {
        let h = 3f64.sqrt() / 2.0;
        let t = NiceTriangle::apex(Point2::new(1.0, 0.0), Point2::new(0.5, h));
        assert_eq!(tts_of(&t, &AngularRange::new(0.0, 0.1)).unwrap_err(), SweptError::WrongMode);
    }

    #[test]
    fn tts_zero_width_limit_is_triangle() {
        let t = NiceTriangle::apex(Point2::new(1.0, 0.0), Point2::new(1.0, 1.0));
        let tts = tts_of(&t, &AngularRange::from_start_width(0.0, 1e-12)).unwrap();
        assert!(tts.piece.contains(Point2::new(0.9, 0.5)));
        assert!(!tts.piece.contains(Point2::new(0.5, 0.9)));
    }

    #[test]
    fn fallback_covers_wide_sweep() {
        let t = NiceTriangle::general(Point2::new(2.0, 0.0), Point2::new(2.0, 1.0), Point2::new(3.0, 1.0));
        let range = AngularRange::new(0.0, 2.0);
        let cover = fallback_piece(&t, &range);
        for k in 0..=200 {
            let th = 2.0 * k as f64 / 200.0;
            for v in rotated(&t, th) {
                assert!(cover.point_separation(v) < 1e-9);
            }
        }
    }
}
