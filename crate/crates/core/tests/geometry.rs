mod support;

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sss_core::geometry::point::point_segment_distance;
use sss_core::geometry::{
    angular_width, feature_intersects_1basic, feature_intersects_2basic, separation, side_of_feature, AngularRange,
    Disc, DiscComplement, Feature, HalfPlane, OneBasicShape, Primitive, Side, TwoBasicShape,
};
use support::pt;

#[test]
fn separation_to_corner_and_edge_interior() {
    assert_eq!(separation(pt(0.0, 0.0), &Feature::point(pt(3.0, 4.0))), 5.0);
    assert_eq!(separation(pt(0.0, 0.0), &Feature::edge(pt(1.0, -1.0), pt(1.0, 1.0))), 1.0);
}

#[test]
fn separation_to_edge_endpoint_matches_sampling() {
    let p = pt(2.0, 3.0);
    let f = Feature::edge(pt(0.0, 0.0), pt(1.0, 0.0));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut best = f64::INFINITY;
    for _ in 0..1_000_000 {
        best = best.min(p.dist(pt(rng.gen_range(0.0..=1.0), 0.0)));
    }
    let got = separation(p, &f);
    assert!((got - 10f64.sqrt()).abs() < 1e-12);
    assert!(got <= best && best - got < 1e-5, "got {got}, sampled {best}");
}

#[test]
fn edge_side_follows_interior_left() {
    let f = Feature::edge(pt(0.0, 0.0), pt(1.0, 0.0));
    assert_eq!(side_of_feature(pt(0.0, 1.0), &f), Side::Inside);
    assert_eq!(side_of_feature(pt(0.0, -1.0), &f), Side::Outside);
}

#[test]
fn nearest_convex_corner_means_outside() {
    // Unit square obstacle, CCW; the point sits diagonally off its corner.
    let f = Feature::corner(pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0));
    assert_eq!(side_of_feature(pt(1.5, 1.4), &f), Side::Outside);
}

#[test]
fn angular_width_cases() {
    assert!((angular_width(&AngularRange::new(0.0, FRAC_PI_2)) - FRAC_PI_2).abs() < 1e-15);
    assert!((angular_width(&AngularRange::new(3.0 * FRAC_PI_2, FRAC_PI_2)) - PI).abs() < 1e-12);
    assert_eq!(angular_width(&AngularRange::full()), TAU);
}

fn one_basic(parts: Vec<Primitive>) -> OneBasicShape {
    OneBasicShape::new(parts).unwrap()
}

#[test]
fn clipped_segment_against_sampling() {
    let x = one_basic(vec![
        Primitive::HalfPlane(HalfPlane::through(pt(1.0, 0.0), pt(-1.0, 0.0))),
        Primitive::Disc(Disc::new(pt(0.0, 0.0), 1.5)),
    ]);
    let (a, b) = (pt(-2.0, 0.0), pt(2.0, 0.0));
    assert!(feature_intersects_1basic(&Feature::edge(a, b), &x));
    let hits: Vec<f64> = (0..=100_000)
        .map(|k| -2.0 + 4.0 * k as f64 / 100_000.0)
        .filter(|&t| x.contains(pt(t, 0.0)))
        .collect();
    assert!((hits[0] - 1.0).abs() < 1e-4 && (hits[hits.len() - 1] - 1.5).abs() < 1e-4);
    let (s, t) = x.clip_convex(a, b).unwrap();
    assert!((a.lerp(b, s).x - 1.0).abs() < 1e-12 && (a.lerp(b, t).x - 1.5).abs() < 1e-12);
}

#[test]
fn contradictory_halfplanes_block_everything() {
    let x = one_basic(vec![
        Primitive::HalfPlane(HalfPlane::through(pt(1.0, 0.0), pt(-1.0, 0.0))),
        Primitive::HalfPlane(HalfPlane::through(pt(-1.0, 0.0), pt(1.0, 0.0))),
    ]);
    assert!(!feature_intersects_1basic(&Feature::edge(pt(-2.0, 0.0), pt(2.0, 0.0)), &x));
}

#[test]
fn center_is_not_in_disc_complement() {
    let x = one_basic(vec![Primitive::DiscComplement(DiscComplement::new(pt(0.0, 0.0), 1.0))]);
    assert!(!feature_intersects_1basic(&Feature::point(pt(0.0, 0.0)), &x));
}

#[test]
fn empty_union_and_first_part() {
    let f = Feature::edge(pt(-1.0, 0.0), pt(1.0, 0.0));
    assert!(!feature_intersects_2basic(&f, &TwoBasicShape::new(vec![])));
    let inside = one_basic(vec![Primitive::Disc(Disc::new(pt(0.0, 0.0), 5.0))]);
    let far = one_basic(vec![Primitive::Disc(Disc::new(pt(100.0, 0.0), 1.0))]);
    assert!(feature_intersects_2basic(&f, &TwoBasicShape::new(vec![inside, far])));
}

#[test]
fn union_of_three_discs_matches_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let discs: Vec<Disc> = (0..3)
        .map(|_| Disc::new(pt(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)), rng.gen_range(0.5..2.0)))
        .collect();
    let union = TwoBasicShape::new(discs.iter().map(|d| one_basic(vec![Primitive::Disc(*d)])).collect());
    let mut checked = 0;
    while checked < 200 {
        let a = pt(rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0));
        let b = pt(rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0));
        // Skip grazing segments the sampling cannot resolve.
        let margin = discs.iter().map(|d| (point_segment_distance(d.center, a, b) - d.radius).abs()).fold(f64::INFINITY, f64::min);
        if margin < 1e-3 {
            continue;
        }
        checked += 1;
        let f = Feature::edge(a, b);
        let sampled = (0..=100_000).any(|k| union.contains(a.lerp(b, k as f64 / 100_000.0)));
        let per_disc = discs.iter().any(|d| feature_intersects_1basic(&f, &one_basic(vec![Primitive::Disc(*d)])));
        assert_eq!(feature_intersects_2basic(&f, &union), sampled, "segment {a:?}-{b:?}");
        assert_eq!(per_disc, sampled);
    }
}
