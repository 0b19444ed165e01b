use serde::{Deserialize, Serialize};

use super::point::{closest_on_segment, orient, Point2};
use super::TOLERANCE;

/// A corner or an oriented edge of the obstacle set. Edges keep the obstacle
/// interior on their left; corners remember their two incident edges.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Feature {
    Corner {
        p: Point2,
        /// Previous vertex along the boundary (interior on the left).
        prev: Point2,
        /// Next vertex along the boundary.
        next: Point2,
        convex: bool,
    },
    Edge { start: Point2, end: Point2 },
}

/// Which side of the obstacle boundary a point lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Inside,
    Outside,
    Boundary,
}

impl Feature {
    pub fn edge(start: Point2, end: Point2) -> Self {
        Feature::Edge { start, end }
    }

    /// Corner at `p` between boundary edges `prev → p` and `p → next`.
    pub fn corner(prev: Point2, p: Point2, next: Point2) -> Self {
        Feature::Corner { p, prev, next, convex: orient(prev, p, next) > 0.0 }
    }

    /// A bare point, used where only incidence matters.
    pub fn point(p: Point2) -> Self {
        Feature::Corner { p, prev: p, next: p, convex: true }
    }

    pub fn translated(&self, v: Point2) -> Self {
        match *self {
            Feature::Corner { p, prev, next, convex } => {
                Feature::Corner { p: p + v, prev: prev + v, next: next + v, convex }
            }
            Feature::Edge { start, end } => Feature::Edge { start: start + v, end: end + v },
        }
    }

    pub fn is_corner(&self) -> bool {
        matches!(self, Feature::Corner { .. })
    }

    /// Closest point of the feature to `p`.
    pub fn closest_point(&self, p: Point2) -> Point2 {
        match *self {
            Feature::Corner { p: c, .. } => c,
            Feature::Edge { start, end } => closest_on_segment(p, start, end).0,
        }
    }
}

/// Euclidean distance from `p` to the closed feature.
#[inline]
pub fn separation(p: Point2, f: &Feature) -> f64 {
    p.dist(f.closest_point(p))
}

/// Side of `p` relative to the obstacle set, judged by the local geometry of
/// `f`. Correct whenever `f` is a feature nearest to `p`.
pub fn side_of_feature(p: Point2, f: &Feature) -> Side {
    match *f {
        Feature::Edge { start, end } => {
            let len = start.dist(end);
            let h = orient(start, end, p) / len;
            if h > TOLERANCE {
                Side::Inside
            } else if h < -TOLERANCE {
                Side::Outside
            } else {
                Side::Boundary
            }
        }
        Feature::Corner { p: c, prev, next, convex } => {
            if p.dist(c) <= TOLERANCE {
                return Side::Boundary;
            }
            if prev == c || next == c {
                return if convex { Side::Outside } else { Side::Inside };
            }
            // Test against the wedge of the two incident edges. This agrees with
            // "outside iff convex" whenever the corner is the nearest feature,
            // and stays right on near-ties with an incident edge.
            let l1 = orient(prev, c, p) / prev.dist(c);
            let l2 = orient(c, next, p) / c.dist(next);
            if convex {
                if l1 < -TOLERANCE || l2 < -TOLERANCE {
                    Side::Outside
                } else if l1 > TOLERANCE && l2 > TOLERANCE {
                    Side::Inside
                } else {
                    Side::Boundary
                }
            } else if l1 > TOLERANCE || l2 > TOLERANCE {
                Side::Inside
            } else if l1 < -TOLERANCE && l2 < -TOLERANCE {
                Side::Outside
            } else {
                Side::Boundary
            }
        }
    }
}

/// Index and distance of the feature nearest to `p`; corners win ties.
pub fn nearest_feature<'a, I>(p: Point2, features: I) -> Option<(usize, f64)>
where
    I: IntoIterator<Item = &'a Feature>,
{
    let mut best: Option<(usize, f64, bool)> = None;
    for (i, f) in features.into_iter().enumerate() {
        let d = separation(p, f);
        let better = match best {
            None => true,
            Some((_, bd, bc)) => d < bd || (d == bd && f.is_corner() && !bc),
        };
        if better {
            best = Some((i, d, f.is_corner()));
        }
    }
    best.map(|(i, d, _)| (i, d))
}
