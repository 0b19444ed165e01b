mod support;

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sss_core::decomposition::{
    decompose, decompose_general, decompose_star, decompose_with_triangulation, is_nice_apex, is_nice_general,
    split_apex, split_general, worst_case_instance, Decomposition, NiceVertex, RobotKind, RobotPolygon, TriangleMode,
};
use sss_core::geometry::point::signed_area;
use sss_core::geometry::Point2;
use support::pt;

fn angle_at(p: Point2, q: Point2, r: Point2) -> f64 {
    let (u, v) = (q - p, r - p);
    u.cross(v).abs().atan2(u.dot(v))
}

fn assert_valid(d: &Decomposition, area: f64) {
    assert!(d.triangles.iter().all(|t| t.is_nice()), "non-nice piece in {:?}", d.triangles);
    assert!((d.area() - area).abs() <= 1e-9 * area.max(1.0), "area {} vs {area}", d.area());
}

#[test]
fn apex_niceness_by_angles() {
    let o = pt(0.0, 0.0);
    let (b, c) = (pt(1.0, 0.0), pt(1.0, 1.0));
    assert!((angle_at(b, o, c) - FRAC_PI_2).abs() < 1e-15);
    assert_eq!(is_nice_apex(o, b, c).unwrap(), Some(NiceVertex::B));

    let h = 3f64.sqrt() / 2.0;
    assert_eq!(is_nice_apex(o, pt(1.0, 0.0), pt(0.5, h)).unwrap(), None);

    let (b, c) = (pt(2.0, 0.0), pt(1.0, 3.0));
    assert!(angle_at(b, o, c) < FRAC_PI_2 && angle_at(c, o, b) < FRAC_PI_2);
    assert_eq!(is_nice_apex(o, b, c).unwrap(), None);
}

#[test]
fn equilateral_splits_at_the_foot() {
    let h = 3f64.sqrt() / 2.0;
    let (a, b, c) = (pt(0.0, 0.0), pt(1.0, 0.0), pt(0.5, h));
    let pieces = split_apex(a, b, c).unwrap();
    assert_eq!(pieces.len(), 2);
    let d = pt(0.75, h / 2.0);
    // Foot of the perpendicular from a onto [b, c].
    let t = (a - b).dot(c - b) / (c - b).norm2();
    assert!(b.lerp(c, t).dist(d) < 1e-15);
    for p in &pieces {
        assert!(p.vertices().iter().any(|v| v.dist(d) < 1e-12));
        assert!(p.is_nice());
    }
    assert!((pieces.iter().map(|p| p.area()).sum::<f64>() - h / 2.0).abs() < 1e-12);
}

#[test]
fn split_apex_identity_and_obtuse() {
    let right = split_apex(pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0)).unwrap();
    assert_eq!(right.len(), 1);
    let (a, b, c) = (pt(0.0, 0.0), pt(3.0, 1.0), pt(-3.0, 1.0));
    let pieces = split_apex(a, b, c).unwrap();
    assert_eq!(pieces.len(), 2);
    assert!(pieces.iter().all(|p| p.is_nice()));
    assert!((pieces.iter().map(|p| p.area()).sum::<f64>() - 3.0).abs() < 1e-12);
}

#[test]
fn star_square_and_hexagon() {
    let square = RobotPolygon::new(
        vec![pt(-1.0, -1.0), pt(1.0, -1.0), pt(1.0, 1.0), pt(-1.0, 1.0)],
        pt(0.0, 0.0),
        RobotKind::Star,
    )
    .unwrap();
    let d = decompose_star(&square).unwrap();
    assert_eq!(d.len(), 8);
    assert!(d.triangles.iter().all(|t| t.mode == TriangleMode::Apex));
    assert_valid(&d, 4.0);

    let hex: Vec<Point2> = (0..6).map(|k| Point2::from_angle(k as f64 * PI / 3.0)).collect();
    let area = signed_area(&hex);
    let hex = RobotPolygon::new(hex, pt(0.0, 0.0), RobotKind::Star).unwrap();
    let d = decompose_star(&hex).unwrap();
    assert_eq!(d.len(), 12);
    assert_valid(&d, area);
}

#[test]
fn star_triangle_with_origin_at_a_vertex() {
    let tri = RobotPolygon::new(vec![pt(0.0, 0.0), pt(3.0, 0.0), pt(1.0, 2.0)], pt(0.0, 0.0), RobotKind::Star).unwrap();
    let d = decompose_star(&tri).unwrap();
    assert!(d.len() <= 6);
    assert_valid(&d, 3.0);
}

#[test]
fn general_niceness_by_hand() {
    let dots = |a: Point2, b: Point2, c: Point2| [a.dot(b - a), a.dot(c - a), b.dot(c - b)];
    let (a, b, c) = (pt(1.0, 0.0), pt(1.0, 1.0), pt(2.0, 1.0));
    assert_eq!(dots(a, b, c), [0.0, 1.0, 1.0]);
    assert!(is_nice_general(a, b, c).unwrap());
    let c = pt(0.0, 2.0);
    assert_eq!(dots(a, b, c)[1], -1.0);
    assert!(!is_nice_general(a, b, c).unwrap());
}

#[test]
fn circumcentered_triangles_are_never_nice() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let r = rng.gen_range(0.5..5.0);
        let v: Vec<Point2> = (0..3).map(|_| Point2::from_angle(rng.gen_range(0.0..TAU)) * r).collect();
        if let Ok(nice) = is_nice_general(v[0], v[1], v[2]) {
            assert!(!nice);
        }
    }
}

#[test]
fn split_general_piece_counts() {
    let (a, b, c) = (pt(1.0, 0.0), pt(1.0, 1.0), pt(2.0, 1.0));
    assert_eq!(split_general(a, b, c).unwrap().len(), 1);

    // Equilateral with circumradius 1, shifted so O sits just below the bottom edge.
    let shift = pt(0.0, 0.5 + 1e-2);
    let v: Vec<Point2> = [FRAC_PI_2, FRAC_PI_2 + TAU / 3.0, FRAC_PI_2 + 2.0 * TAU / 3.0]
        .iter()
        .map(|&t| Point2::from_angle(t) + shift)
        .collect();
    let pieces = split_general(v[0], v[1], v[2]).unwrap();
    assert_eq!(pieces.len(), 4);
    assert!(pieces.iter().all(|p| p.mode == TriangleMode::General && p.is_nice()));
    let area = 0.5 * (v[1] - v[0]).cross(v[2] - v[0]).abs();
    assert!((pieces.iter().map(|p| p.area()).sum::<f64>() - area).abs() < 1e-12);

    // Only the third condition fails.
    let (a, b, c) = (pt(1.0, 0.0), pt(1.0, 2.0), pt(2.3, 0.0));
    assert!(a.dot(b - a) >= 0.0 && a.dot(c - a) >= 0.0 && b.dot(c - b) < 0.0);
    let pieces = split_general(a, b, c).unwrap();
    assert_eq!(pieces.len(), 2);
    assert!(pieces.iter().all(|p| p.is_nice()));
}

#[test]
fn general_square_and_triangle_with_inner_origin() {
    let square = RobotPolygon::new(
        vec![pt(-1.0, -1.0), pt(1.0, -1.0), pt(1.0, 1.0), pt(-1.0, 1.0)],
        pt(0.0, 0.0),
        RobotKind::General,
    )
    .unwrap();
    let d = decompose_general(&square).unwrap();
    assert!(d.len() <= 10);
    assert_eq!(d.len(), 8);
    assert_valid(&d, 4.0);

    let tri = RobotPolygon::with_centroid_origin(vec![pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0)], RobotKind::General).unwrap();
    let d = decompose(&tri).unwrap();
    assert_eq!(d.len(), 6);
    assert_valid(&d, 6.0);
}

#[test]
fn far_origin_stays_within_four_per_triangle() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let n = rng.gen_range(3..12);
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let verts: Vec<Point2> = angles.iter().map(|&a| Point2::from_angle(a) * 2.0).collect();
        let Ok(mut poly) = RobotPolygon::new(verts.clone(), pt(0.0, 0.0), RobotKind::General) else { continue };
        poly.origin = Point2::from_angle(rng.gen_range(0.0..TAU)) * rng.gen_range(10.0..100.0);
        let d = decompose_general(&poly).unwrap();
        assert!(d.len() <= 4 * (n - 2), "{} pieces for n = {n}", d.len());
        assert_valid(&d, signed_area(&verts));
    }
}

#[test]
fn worst_case_family_needs_four_n_minus_six() {
    for (n, want) in [(3, 6), (5, 14), (10, 34)] {
        let (poly, tris) = worst_case_instance(n);
        assert_eq!(poly.vertices.len(), n);
        assert_eq!(tris.len(), n - 2);
        let d = decompose_with_triangulation(&poly, &tris);
        assert_eq!(d.len(), want, "n = {n}");
        assert_valid(&d, signed_area(&poly.vertices));
    }
}
