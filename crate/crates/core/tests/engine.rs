mod support;

use std::collections::{HashMap, HashSet, VecDeque};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use sss_core::decomposition::{RobotKind, RobotPolygon};
use sss_core::engine::planner::epsilon_small;
use sss_core::engine::{
    Cell, Configuration, DyadicArc, LeafRecord, PlanResult, PlanStatus, Planner, PlannerConfig, Strategy,
};
use sss_core::environment::{exact_collides, Environment, Rect};
use sss_core::geometry::angle::shortest_delta;
use sss_core::geometry::Point2;
use sss_core::predicates::Classification;
use support::pt;

fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Vec<Point2> {
    vec![pt(x0, y0), pt(x1, y0), pt(x1, y1), pt(x0, y1)]
}

/// Regular octagon of circumradius 4 about the origin.
fn octagon() -> RobotPolygon {
    let v = (0..8).map(|k| Point2::from_angle(k as f64 * FRAC_PI_4) * 4.0).collect();
    RobotPolygon::new(v, pt(0.0, 0.0), RobotKind::Star).unwrap()
}

fn world(obstacles: Vec<Vec<Point2>>) -> Environment {
    Environment::new(Rect::new(pt(0.0, 0.0), pt(128.0, 128.0)), obstacles).unwrap()
}

/// Two blocks leaving a horizontal channel of width `w` centered at y = 64.
fn channel(w: f64) -> Environment {
    world(vec![rect(40.0, 1.0, 88.0, 64.0 - w / 2.0), rect(40.0, 64.0 + w / 2.0, 88.0, 127.0)])
}

fn config(epsilon: f64) -> PlannerConfig {
    PlannerConfig { epsilon, ..PlannerConfig::default() }
}

fn path_is_sound(res: &PlanResult, env: &Environment, robot: &RobotPolygon) -> bool {
    res.path.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        let dth = shortest_delta(a.theta, b.theta);
        (0..=10).all(|k| {
            let t = k as f64 / 10.0;
            let q = Configuration::new(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t, a.theta + dth * t);
            !exact_collides(robot, &q, env)
        })
    })
}

#[test]
fn splits_halve_squares_and_arcs() {
    let kids = Cell::ROOT.children();
    assert_eq!(kids.len(), 4);
    assert!(kids.iter().all(|c| c.level == 1));
    let arc = DyadicArc { depth: 1, index: 0 };
    assert_eq!((arc.lo(), arc.hi()), (0.0, PI));
    let [a, b] = arc.children();
    assert_eq!((a.lo(), a.hi(), b.lo(), b.hi()), (0.0, FRAC_PI_2, FRAC_PI_2, PI));
}

#[test]
fn epsilon_small_examples() {
    let (eps, r0) = (2.0, 50.0);
    assert!(epsilon_small(eps / 2.0, eps / (2.0 * r0), eps, r0));
    assert!(!epsilon_small(2.0 * eps, 0.0, eps, r0));
    assert_eq!(eps / r0, 0.04);
    assert!(epsilon_small(1.0, 0.04, eps, r0));
    assert!(!epsilon_small(1.0, 0.0401, eps, r0));
}

#[test]
fn arc_adjacency_with_wraparound() {
    let q = |i| DyadicArc { depth: 2, index: i };
    let last = q(3);
    let first_eighth = DyadicArc { depth: 3, index: 0 };
    assert!(last.touches(&first_eighth));
    assert_eq!(last.shared_angle(&first_eighth), Some(0.0));
    assert!(!q(0).touches(&q(2)));
    assert!(q(0).touches(&q(1)));
    assert!(DyadicArc::FULL.touches(&q(2)));
}

#[test]
fn empty_world_gives_a_path() {
    let env = world(vec![]);
    let robot = octagon();
    let (a, b) = (Configuration::new(10.0, 10.0, 0.0), Configuration::new(118.0, 100.0, 1.0));
    let res = Planner::new(&env, &robot, config(2.0)).unwrap().run(a, b).unwrap();
    assert_eq!(res.status, PlanStatus::Path);
    assert_eq!(res.path.first(), Some(&a));
    assert_eq!(res.path.last(), Some(&b));
    assert!(path_is_sound(&res, &env, &robot));
}

#[test]
fn full_wall_gives_no_path() {
    let env = world(vec![rect(60.0, 1.0, 68.0, 127.0)]);
    let robot = octagon();
    // No pose with the robot center inside the wall's slab is collision-free.
    for i in 0..=16 {
        for j in 0..=32 {
            let q = Configuration::new(60.0 + 0.5 * i as f64, 4.0 * j as f64, TAU * j as f64 / 32.0);
            assert!(exact_collides(&robot, &q, &env));
        }
    }
    let res = Planner::new(&env, &robot, config(1.0))
        .unwrap()
        .run(Configuration::new(20.0, 64.0, 0.0), Configuration::new(108.0, 64.0, 0.0))
        .unwrap();
    assert_eq!(res.status, PlanStatus::NoPath);
}

#[test]
fn wide_enough_channel_gives_a_path() {
    let robot = octagon();
    let d = 8.0;
    for w in [12.0, 16.0] {
        let env = channel(w);
        let res = Planner::new(&env, &robot, config((w - d) / 4.0))
            .unwrap()
            .run(Configuration::new(16.0, 64.0, 0.0), Configuration::new(112.0, 64.0, 0.0))
            .unwrap();
        assert_eq!(res.status, PlanStatus::Path, "w = {w}");
        assert!(path_is_sound(&res, &env, &robot));
    }
}

#[test]
fn colliding_endpoints_are_reported() {
    let env = world(vec![rect(60.0, 1.0, 68.0, 127.0)]);
    let robot = octagon();
    let res = Planner::new(&env, &robot, config(2.0))
        .unwrap()
        .run(Configuration::new(64.0, 64.0, 0.0), Configuration::new(108.0, 64.0, 0.0))
        .unwrap();
    assert_eq!(res.status, PlanStatus::NoPath);
    assert_eq!(res.reason, Some(sss_core::engine::NoPathReason::StartInCollision));
}

fn squares_share_side(a: &LeafRecord, b: &LeafRecord) -> bool {
    let overlap = |a0: f64, a1: f64, b0: f64, b1: f64| a0.max(b0) < a1.min(b1);
    let (ax1, ay1, bx1, by1) = (a.x + a.size, a.y + a.size, b.x + b.size, b.y + b.size);
    let same = a.x == b.x && a.y == b.y && a.size == b.size;
    same || ((ax1 == b.x || bx1 == a.x) && overlap(a.y, ay1, b.y, by1))
        || ((ay1 == b.y || by1 == a.y) && overlap(a.x, ax1, b.x, bx1))
}

fn arcs_touch(a: &LeafRecord, b: &LeafRecord) -> bool {
    let full = |l: &LeafRecord| l.theta_hi - l.theta_lo >= TAU;
    if full(a) || full(b) {
        return true;
    }
    [0.0, TAU, -TAU].iter().any(|s| a.theta_lo.max(b.theta_lo + s) <= a.theta_hi.min(b.theta_hi + s))
}

#[test]
fn adjacency_matches_geometry_and_components_match_search() {
    let env = channel(14.0);
    let robot = octagon();
    let mut planner = Planner::new(&env, &robot, config(1.5)).unwrap();
    let res = planner
        .run(Configuration::new(16.0, 64.0, 0.0), Configuration::new(112.0, 64.0, 0.0))
        .unwrap();
    assert_eq!(res.status, PlanStatus::Path);
    let leaves = planner.leaves();
    let by_id: HashMap<usize, &LeafRecord> = leaves.iter().map(|l| (l.id, l)).collect();

    // Sibling squares of any T-split are neighbors.
    for (i, l) in leaves.iter().enumerate().step_by(97) {
        let got: HashSet<u32> = planner.neighbor_leaves(l.id as u32).into_iter().collect();
        for m in &leaves {
            if m.id == l.id {
                continue;
            }
            let want = squares_share_side(l, m) && arcs_touch(l, m);
            assert_eq!(got.contains(&(m.id as u32)), want, "leaf #{i} {l:?} vs {m:?}");
        }
    }

    // Union-find components agree with a BFS over the recorded FREE adjacency.
    let adj = planner.free_adjacency().clone();
    let free: Vec<u32> = leaves.iter().filter(|l| l.class == Classification::Free).map(|l| l.id as u32).collect();
    let start = free[0];
    let mut seen = HashSet::from([start]);
    let mut q = VecDeque::from([start]);
    while let Some(x) = q.pop_front() {
        for &y in adj.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
            if seen.insert(y) {
                q.push_back(y);
            }
        }
    }
    for &f in free.iter().step_by(13) {
        assert_eq!(planner.connected(start, f), seen.contains(&f));
    }

    // Consecutive channel boxes are adjacent FREE leaves.
    for w in res.channel.windows(2) {
        let (a, b) = (by_id[&w[0]], by_id[&w[1]]);
        assert!(a.class == Classification::Free && b.class == Classification::Free);
        assert!(squares_share_side(a, b) && arcs_touch(a, b));
    }
}

#[test]
fn no_box_below_epsilon_is_split() {
    let env = channel(14.0);
    let robot = octagon();
    let mut planner = Planner::new(&env, &robot, config(1.5)).unwrap();
    planner.run(Configuration::new(16.0, 64.0, 0.0), Configuration::new(112.0, 64.0, 0.0)).unwrap();
    let r0 = planner.decomposition().r0;
    for b in planner.boxes() {
        if !b.is_leaf() {
            let side = planner.grid().side(b.cell.level);
            assert!(!epsilon_small(side, b.arc.width(), 1.5, r0), "split an eps-small box {:?}", b.cell);
        }
    }
}

#[test]
fn verdict_does_not_depend_on_strategy() {
    let robot = octagon();
    for (w, want) in [(14.0, PlanStatus::Path), (7.0, PlanStatus::NoPath)] {
        let env = channel(w);
        for strategy in [Strategy::Greedy, Strategy::Bfs, Strategy::Random] {
            for parallel in [false, true] {
                let cfg = PlannerConfig { epsilon: 1.0, strategy, seed: 7, parallel, ..PlannerConfig::default() };
                let res = Planner::new(&env, &robot, cfg)
                    .unwrap()
                    .run(Configuration::new(16.0, 64.0, 0.0), Configuration::new(112.0, 64.0, 0.0))
                    .unwrap();
                assert_eq!(res.status, want, "w = {w}, {strategy:?}, parallel = {parallel}");
                if res.status == PlanStatus::Path {
                    assert!(path_is_sound(&res, &env, &robot));
                }
            }
        }
    }
}

#[test]
fn bad_epsilon_is_rejected() {
    let env = world(vec![]);
    let robot = octagon();
    assert!(Planner::new(&env, &robot, config(0.0)).is_err());
    assert!(Planner::new(&env, &robot, config(f64::NAN)).is_err());
}
