use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

/// Reduce an angle to `[0, 2π)`.
#[inline]
pub fn normalize_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// CCW angular distance from `from` to `to`, in `[0, 2π)`.
#[inline]
pub fn ccw_delta(from: f64, to: f64) -> f64 {
    normalize_angle(to - from)
}

/// Signed shortest rotation taking `from` to `to`, in `(-π, π]`.
#[inline]
pub fn shortest_delta(from: f64, to: f64) -> f64 {
    let d = ccw_delta(from, to);
    if d > PI {
        d - TAU
    } else {
        d
    }
}

/// A closed arc of directions, traversed CCW from `lo` to `hi`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngularRange {
    pub lo: f64,
    pub hi: f64,
    pub full_circle: bool,
}

impl AngularRange {
    pub fn full() -> Self {
        AngularRange { lo: 0.0, hi: 0.0, full_circle: true }
    }

    /// The CCW arc from `lo` to `hi`. Equal endpoints give the full circle.
    pub fn new(lo: f64, hi: f64) -> Self {
        let (lo, hi) = (normalize_angle(lo), normalize_angle(hi));
        AngularRange { lo, hi, full_circle: lo == hi }
    }

    /// Arc starting at `lo` with the given CCW width; widths ≥ 2π give the full circle.
    pub fn from_start_width(lo: f64, width: f64) -> Self {
        if width >= TAU {
            return AngularRange::full();
        }
        let lo = normalize_angle(lo);
        AngularRange { lo, hi: normalize_angle(lo + width), full_circle: false }
    }

    pub fn width(&self) -> f64 {
        if self.full_circle {
            TAU
        } else if self.hi >= self.lo {
            self.hi - self.lo
        } else {
            TAU + self.hi - self.lo
        }
    }

    /// The complementary arc `[hi, lo]`.
    pub fn complement(&self) -> Self {
        AngularRange { lo: self.hi, hi: self.lo, full_circle: false }
    }

    pub fn contains(&self, theta: f64) -> bool {
        self.full_circle || ccw_delta(self.lo, theta) <= self.width()
    }

    pub fn mid(&self) -> f64 {
        normalize_angle(self.lo + 0.5 * self.width())
    }
}

/// Width of an angular range; in `(0, 2π]`.
pub fn angular_width(r: &AngularRange) -> f64 {
    r.width()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn width_examples() {
        assert_eq!(angular_width(&AngularRange::new(0.0, FRAC_PI_2)), FRAC_PI_2);
        let wrap = AngularRange::new(3.0 * FRAC_PI_2, FRAC_PI_2);
        assert!((angular_width(&wrap) - PI).abs() < 1e-15);
        assert_eq!(angular_width(&AngularRange::full()), TAU);
    }

    #[test]
    fn wraparound_membership() {
        let wrap = AngularRange::new(3.0 * FRAC_PI_2, FRAC_PI_2);
        assert!(wrap.contains(0.0));
        assert!(wrap.contains(0.1));
        assert!(!wrap.contains(PI));
    }

    #[test]
    fn normalization_stays_in_range() {
        for t in [-1e-18, -TAU, TAU, 7.0 * PI, -0.5] {
            let n = normalize_angle(t);
            assert!((0.0..TAU).contains(&n), "{t} -> {n}");
        }
        assert!((shortest_delta(0.1, TAU - 0.1) + 0.2).abs() < 1e-12);
    }
}
