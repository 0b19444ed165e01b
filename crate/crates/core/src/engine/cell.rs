//! Integer addressing of translational squares and dyadic angular ranges.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::environment::Rect;
use crate::geometry::{AngularRange, Point2};

/// A square of the quadtree: `level` halvings of the root, column `ix`, row `iy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub level: u8,
    pub ix: u32,
    pub iy: u32,
}

impl Cell {
    pub const ROOT: Cell = Cell { level: 0, ix: 0, iy: 0 };

    pub fn parent(&self) -> Option<Cell> {
        (self.level > 0).then(|| Cell { level: self.level - 1, ix: self.ix >> 1, iy: self.iy >> 1 })
    }

    /// The four quadrants, in the order (0,0), (1,0), (0,1), (1,1).
    pub fn children(&self) -> [Cell; 4] {
        let (l, x, y) = (self.level + 1, self.ix << 1, self.iy << 1);
        [
            Cell { level: l, ix: x, iy: y },
            Cell { level: l, ix: x + 1, iy: y },
            Cell { level: l, ix: x, iy: y + 1 },
            Cell { level: l, ix: x + 1, iy: y + 1 },
        ]
    }

    /// Same-level neighbor, if it stays inside the root.
    pub fn offset(&self, dx: i64, dy: i64) -> Option<Cell> {
        let n = 1i64 << self.level;
        let (x, y) = (self.ix as i64 + dx, self.iy as i64 + dy);
        (x >= 0 && y >= 0 && x < n && y < n).then(|| Cell { level: self.level, ix: x as u32, iy: y as u32 })
    }

    /// Integer bounds `[x0, x1] × [y0, y1]` at a finer `level`.
    pub fn span_at(&self, level: u8) -> [u64; 4] {
        let k = (level - self.level) as u32;
        let (x0, y0) = ((self.ix as u64) << k, (self.iy as u64) << k);
        [x0, x0 + (1 << k), y0, y0 + (1 << k)]
    }
}

/// How two closed squares of the quadtree meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contact {
    Same,
    /// They share a boundary segment of positive length.
    Side,
    /// A corner point at most, or nothing.
    None,
}

pub fn contact(a: &Cell, b: &Cell) -> Contact {
    if a == b {
        return Contact::Same;
    }
    let l = a.level.max(b.level);
    let [ax0, ax1, ay0, ay1] = a.span_at(l);
    let [bx0, bx1, by0, by1] = b.span_at(l);
    let x_overlap = ax0.max(bx0) < ax1.min(bx1);
    let y_overlap = ay0.max(by0) < ay1.min(by1);
    let x_touch = ax1 == bx0 || bx1 == ax0;
    let y_touch = ay1 == by0 || by1 == ay0;
    if (x_touch && y_overlap) || (y_touch && x_overlap) {
        Contact::Side
    } else {
        Contact::None
    }
}

/// The arc `[index, index + 1] · 2π / 2^depth`; depth 0 is the full circle.
/// Dyadic arcs never straddle the 0/2π seam.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DyadicArc {
    pub depth: u8,
    pub index: u32,
}

impl DyadicArc {
    pub const FULL: DyadicArc = DyadicArc { depth: 0, index: 0 };

    pub fn is_full(&self) -> bool {
        self.depth == 0
    }

    pub fn width(&self) -> f64 {
        TAU / (1u64 << self.depth) as f64
    }

    pub fn lo(&self) -> f64 {
        self.index as f64 * self.width()
    }

    pub fn hi(&self) -> f64 {
        (self.index + 1) as f64 * self.width()
    }

    pub fn range(&self) -> AngularRange {
        if self.is_full() {
            AngularRange::full()
        } else {
            AngularRange { lo: self.lo(), hi: self.hi() % TAU, full_circle: false }
        }
    }

    pub fn mid(&self) -> f64 {
        (self.index as f64 + 0.5) * self.width()
    }

    pub fn children(&self) -> [DyadicArc; 2] {
        let (d, i) = (self.depth + 1, self.index << 1);
        [DyadicArc { depth: d, index: i }, DyadicArc { depth: d, index: i + 1 }]
    }

    /// Child arc containing `theta` (in `[0, 2π)`); ties go to the lower child.
    pub fn child_containing(&self, theta: f64) -> DyadicArc {
        let [a, b] = self.children();
        if theta <= a.hi() {
            a
        } else {
            b
        }
    }

    /// Closed-arc overlap or shared endpoint, with wraparound at 0/2π.
    pub fn touches(&self, o: &DyadicArc) -> bool {
        self.shared_angle(o).is_some()
    }

    /// An angle common to both closed arcs: the middle of their overlap, or
    /// the shared endpoint. `None` when they are apart. A full arc yields the
    /// other arc's middle; two full arcs yield π.
    pub fn shared_angle(&self, o: &DyadicArc) -> Option<f64> {
        if self.is_full() && o.is_full() {
            return Some(std::f64::consts::PI);
        }
        if self.is_full() {
            return Some(o.mid());
        }
        if o.is_full() {
            return Some(self.mid());
        }
        let d = self.depth.max(o.depth);
        let n = 1u64 << d;
        let span = |a: &DyadicArc| {
            let k = (d - a.depth) as u32;
            let lo = (a.index as u64) << k;
            (lo, lo + (1 << k))
        };
        let (a0, a1) = span(self);
        let (b0, b1) = span(o);
        let unit = TAU / n as f64;
        for shift in [0i64, n as i64, -(n as i64)] {
            let (c0, c1) = ((b0 as i64) + shift, (b1 as i64) + shift);
            let lo = (a0 as i64).max(c0);
            let hi = (a1 as i64).min(c1);
            if lo <= hi {
                let mid = 0.5 * (lo + hi) as f64 * unit;
                return Some(mid.rem_euclid(TAU));
            }
        }
        None
    }
}

/// The root square and the geometry of its cells.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub origin: Point2,
    pub size: f64,
}

impl Grid {
    /// Smallest square anchored at the lower-left corner covering `bounds`.
    pub fn covering(bounds: &Rect) -> Self {
        Grid { origin: bounds.min, size: bounds.width().max(bounds.height()) }
    }

    pub fn side(&self, level: u8) -> f64 {
        self.size / (1u64 << level) as f64
    }

    pub fn min_corner(&self, c: &Cell) -> Point2 {
        let s = self.side(c.level);
        Point2::new(self.origin.x + c.ix as f64 * s, self.origin.y + c.iy as f64 * s)
    }

    pub fn center(&self, c: &Cell) -> Point2 {
        let s = self.side(c.level);
        self.min_corner(c) + Point2::new(0.5 * s, 0.5 * s)
    }

    /// Circumradius of the square.
    pub fn radius(&self, level: u8) -> f64 {
        0.5 * self.side(level) * std::f64::consts::SQRT_2
    }

    pub fn rect(&self, c: &Cell) -> Rect {
        let s = self.side(c.level);
        let lo = self.min_corner(c);
        Rect::new(lo, lo + Point2::new(s, s))
    }

    /// Child quadrant of `c` containing `p` (clamped to the square).
    pub fn child_containing(&self, c: &Cell, p: Point2) -> Cell {
        let m = self.center(c);
        let [c00, c10, c01, c11] = c.children();
        match (p.x > m.x, p.y > m.y) {
            (false, false) => c00,
            (true, false) => c10,
            (false, true) => c01,
            (true, true) => c11,
        }
    }

    /// Midpoint of the segment shared by two squares in side contact, or the
    /// common center when they coincide.
    pub fn crossing_point(&self, a: &Cell, b: &Cell) -> Point2 {
        if a == b {
            return self.center(a);
        }
        let (ra, rb) = (self.rect(a), self.rect(b));
        let lo = Point2::new(ra.min.x.max(rb.min.x), ra.min.y.max(rb.min.y));
        let hi = Point2::new(ra.max.x.min(rb.max.x), ra.max.y.min(rb.max.y));
        lo.lerp(hi, 0.5)
    }
}
