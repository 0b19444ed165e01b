//! The 0/1/2-basic shape algebra: half-planes, discs and disc complements,
//! their intersections, and finite unions of those.

use serde::{Deserialize, Serialize};

use super::feature::Feature;
use super::point::Point2;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane {
    /// Unit outward normal.
    pub normal: Point2,
    /// Points with `⟨normal, p⟩ ≤ offset` are inside.
    pub offset: f64,
}

impl HalfPlane {
    /// Half-plane with the given (not necessarily unit) outward normal through `p`.
    pub fn through(p: Point2, normal: Point2) -> Self {
        let n = normal.normalized();
        HalfPlane { normal: n, offset: n.dot(p) }
    }

    /// Closed half-plane to the left of the directed line `a → b`.
    pub fn left_of(a: Point2, b: Point2) -> Self {
        HalfPlane::through(a, -(b - a).perp())
    }

    /// Closed half-plane bounded by the line through `a` with direction `dir`,
    /// on the side containing `witness`.
    pub fn containing(a: Point2, dir: Point2, witness: Point2) -> Self {
        let mut n = dir.perp();
        if n.dot(witness - a) > 0.0 {
            n = -n;
        }
        HalfPlane::through(a, n)
    }

    #[inline]
    pub fn signed_distance(&self, p: Point2) -> f64 {
        self.normal.dot(p) - self.offset
    }

    #[inline]
    pub fn contains(&self, p: Point2) -> bool {
        self.signed_distance(p) <= 0.0
    }

    pub fn translated(&self, v: Point2) -> Self {
        HalfPlane { normal: self.normal, offset: self.offset + self.normal.dot(v) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Disc {
    pub center: Point2,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: Point2, radius: f64) -> Self {
        Disc { center, radius }
    }

    #[inline]
    pub fn contains(&self, p: Point2) -> bool {
        (p - self.center).norm2() <= self.radius * self.radius
    }
}

/// Closed complement of an open disc: points at distance ≥ radius from the center.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscComplement {
    pub center: Point2,
    pub radius: f64,
}

impl DiscComplement {
    pub fn new(center: Point2, radius: f64) -> Self {
        DiscComplement { center, radius }
    }

    #[inline]
    pub fn contains(&self, p: Point2) -> bool {
        (p - self.center).norm2() >= self.radius * self.radius
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Annulus {
    pub center: Point2,
    pub inner: f64,
    pub outer: f64,
}

impl Annulus {
    pub fn new(center: Point2, inner: f64, outer: f64) -> Self {
        debug_assert!(0.0 <= inner && inner <= outer);
        Annulus { center, inner, outer }
    }

    pub fn contains(&self, p: Point2) -> bool {
        let d2 = (p - self.center).norm2();
        d2 >= self.inner * self.inner && d2 <= self.outer * self.outer
    }

    pub fn parts(&self) -> [Primitive; 2] {
        [
            Primitive::Disc(Disc::new(self.center, self.outer)),
            Primitive::DiscComplement(DiscComplement::new(self.center, self.inner)),
        ]
    }
}

/// A 0-basic shape.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Primitive {
    HalfPlane(HalfPlane),
    Disc(Disc),
    DiscComplement(DiscComplement),
}

impl Primitive {
    #[inline]
    pub fn contains(&self, p: Point2) -> bool {
        match self {
            Primitive::HalfPlane(h) => h.contains(p),
            Primitive::Disc(d) => d.contains(p),
            Primitive::DiscComplement(d) => d.contains(p),
        }
    }

    pub fn translated(&self, v: Point2) -> Self {
        match *self {
            Primitive::HalfPlane(h) => Primitive::HalfPlane(h.translated(v)),
            Primitive::Disc(d) => Primitive::Disc(Disc::new(d.center + v, d.radius)),
            Primitive::DiscComplement(d) => {
                Primitive::DiscComplement(DiscComplement::new(d.center + v, d.radius))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ShapeError {
    #[error("a 1-basic shape may hold at most one disc complement")]
    TooManyComplements,
}

/// Intersection of 0-basic shapes, holding at most one disc complement.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct OneBasicShape {
    parts: Vec<Primitive>,
}

impl OneBasicShape {
    pub fn new(parts: Vec<Primitive>) -> Result<Self, ShapeError> {
        let n = parts
            .iter()
            .filter(|p| matches!(p, Primitive::DiscComplement(_)))
            .count();
        if n > 1 {
            return Err(ShapeError::TooManyComplements);
        }
        Ok(OneBasicShape { parts })
    }

    pub fn parts(&self) -> &[Primitive] {
        &self.parts
    }

    pub fn contains(&self, p: Point2) -> bool {
        self.parts.iter().all(|q| q.contains(p))
    }

    pub fn translated(&self, v: Point2) -> Self {
        OneBasicShape { parts: self.parts.iter().map(|p| p.translated(v)).collect() }
    }

    /// Parameter interval of `a + t(b − a)`, `t ∈ [0, 1]`, surviving every
    /// convex part. The disc complement (if any) is not applied.
    pub fn clip_convex(&self, a: Point2, b: Point2) -> Option<(f64, f64)> {
        let d = b - a;
        let (mut t0, mut t1) = (0.0f64, 1.0f64);
        for part in &self.parts {
            match part {
                Primitive::HalfPlane(h) => {
                    let k = h.normal.dot(d);
                    let c = h.offset - h.normal.dot(a);
                    if k == 0.0 {
                        if c < 0.0 {
                            return None;
                        }
                    } else if k > 0.0 {
                        t1 = t1.min(c / k);
                    } else {
                        t0 = t0.max(c / k);
                    }
                }
                Primitive::Disc(disc) => {
                    let (lo, hi) = line_disc_interval(a, d, disc.center, disc.radius)?;
                    t0 = t0.max(lo);
                    t1 = t1.min(hi);
                }
                Primitive::DiscComplement(_) => {}
            }
            if t0 > t1 {
                return None;
            }
        }
        Some((t0, t1))
    }

    /// True iff the closed segment `[a, b]` meets the shape.
    pub fn intersects_segment(&self, a: Point2, b: Point2) -> bool {
        let Some((t0, t1)) = self.clip_convex(a, b) else {
            return false;
        };
        let d = b - a;
        // A subsegment meets a disc complement iff one of its endpoints does:
        // the disc is convex, so both endpoints inside keeps the whole piece inside.
        self.parts.iter().all(|p| match p {
            Primitive::DiscComplement(dc) => dc.contains(a + d * t0) || dc.contains(a + d * t1),
            _ => true,
        })
    }
}

/// Parameter interval where `a + t d` lies in the closed disc.
fn line_disc_interval(a: Point2, d: Point2, c: Point2, r: f64) -> Option<(f64, f64)> {
    let w = a - c;
    let qa = d.norm2();
    let qb = d.dot(w);
    let qc = w.norm2() - r * r;
    if qa == 0.0 {
        return if qc <= 0.0 { Some((f64::NEG_INFINITY, f64::INFINITY)) } else { None };
    }
    let disc = qb * qb - qa * qc;
    if disc < 0.0 {
        return None;
    }
    let sq = disc.sqrt();
    // Numerically stable root pair.
    let q = -(qb + qb.signum() * sq);
    let (r1, r2) = if q == 0.0 { (0.0, 0.0) } else { (q / qa, qc / q) };
    Some((r1.min(r2), r1.max(r2)))
}

pub fn feature_intersects_1basic(f: &Feature, x: &OneBasicShape) -> bool {
    match f {
        Feature::Corner { p, .. } => x.contains(*p),
        Feature::Edge { start, end } => x.intersects_segment(*start, *end),
    }
}

/// Finite union of 1-basic shapes.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TwoBasicShape {
    pub parts: Vec<OneBasicShape>,
}

impl TwoBasicShape {
    pub fn new(parts: Vec<OneBasicShape>) -> Self {
        TwoBasicShape { parts }
    }

    pub fn contains(&self, p: Point2) -> bool {
        self.parts.iter().any(|s| s.contains(p))
    }

    /// Total number of primitives over all parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|s| s.parts.len()).sum()
    }
}

pub fn feature_intersects_2basic(f: &Feature, x: &TwoBasicShape) -> bool {
    x.parts.iter().any(|s| feature_intersects_1basic(f, s))
}
