//! Ear-clipping triangulation and simplicity checks for small polygons.

use crate::geometry::point::{orient, segments_intersect, signed_area, Point2};

/// True when the closed polygon has no repeated vertices and no two
/// non-adjacent edges touch.
pub fn is_simple(poly: &[Point2]) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            if poly[i] == poly[j] {
                return false;
            }
        }
    }
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        for j in i + 1..n {
            let (c, d) = (poly[j], poly[(j + 1) % n]);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // Adjacent edges may only share their common vertex: reject folds.
                let (shared, p, q) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                if orient(p, shared, q) == 0.0 && (p - shared).dot(q - shared) > 0.0 {
                    return false;
                }
            } else if segments_intersect(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

fn in_closed_triangle(p: Point2, a: Point2, b: Point2, c: Point2) -> bool {
    orient(a, b, p) >= 0.0 && orient(b, c, p) >= 0.0 && orient(c, a, p) >= 0.0
}

/// Triangulate a simple polygon by ear clipping. Input may be CW or CCW;
/// output triangles are CCW. Collinear vertices are clipped without emitting
/// a zero-area triangle. Returns `None` if no ear can be found, which only
/// happens for non-simple input.
pub fn ear_clip(poly: &[Point2]) -> Option<Vec<[Point2; 3]>> {
    let mut idx: Vec<usize> = (0..poly.len()).collect();
    if signed_area(poly) < 0.0 {
        idx.reverse();
    }
    let mut out = Vec::with_capacity(poly.len().saturating_sub(2));
    while idx.len() > 3 {
        let m = idx.len();
        let mut clipped = false;
        for i in 0..m {
            let (ip, ic, inx) = (idx[(i + m - 1) % m], idx[i], idx[(i + 1) % m]);
            let (a, b, c) = (poly[ip], poly[ic], poly[inx]);
            let o = orient(a, b, c);
            if o < 0.0 {
                continue;
            }
            if o == 0.0 {
                // Spike or straight vertex: drop it only when it is a straight pass.
                if (a - b).dot(c - b) < 0.0 {
                    idx.remove(i);
                    clipped = true;
                    break;
                }
                continue;
            }
            let blocked = idx.iter().any(|&k| {
                k != ip && k != ic && k != inx && {
                    let p = poly[k];
                    p != a && p != b && p != c && in_closed_triangle(p, a, b, c)
                }
            });
            if !blocked {
                out.push([a, b, c]);
                idx.remove(i);
                clipped = true;
                break;
            }
        }
        if !clipped {
            return None;
        }
    }
    let (a, b, c) = (poly[idx[0]], poly[idx[1]], poly[idx[2]]);
    if orient(a, b, c) > 0.0 {
        out.push([a, b, c]);
    }
    Some(out)
}
