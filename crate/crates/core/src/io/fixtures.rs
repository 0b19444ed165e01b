//! Bundled robots and environments on the default 512 × 512 workspace.
//!
//! Every obstacle keeps a 1-unit margin from the container, so the walls that
//! split a workspace into rooms leave slivers far too thin for any robot.

use super::schema::{Bounds, EnvironmentFile, Pose, RobotFile, RobotKindSpec, Xy};

pub const ROBOT_NAMES: [&str; 5] = ["l-shape", "snowflake", "s-shape", "three-legged", "c-shape"];
pub const ENVIRONMENT_NAMES: [&str; 6] = ["gateway", "sparks", "corridor", "corridor-l", "corridor-s", "maze"];

/// Gate width of the default `gateway`: the L robot gets through at ε = 2
/// but not at ε = 4.
pub const GATEWAY_GAP: f64 = 30.0;
/// Channel width of the default corridor fixtures.
pub const CORRIDOR_GAP: f64 = 64.0;
/// Width of the thinnest strip the L robot fits in (its short side).
pub const L_SHAPE_WIDTH: f64 = 24.0;

const LO: f64 = 1.0;
const HI: f64 = 511.0;

fn polar(r: f64, deg: f64) -> Xy {
    let t = deg.to_radians();
    [r * t.cos(), r * t.sin()]
}

fn rot(p: Xy, deg: f64) -> Xy {
    let (s, c) = deg.to_radians().sin_cos();
    [p[0] * c - p[1] * s, p[0] * s + p[1] * c]
}

fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Vec<Xy> {
    vec![[x0, y0], [x1, y0], [x1, y1], [x0, y1]]
}

fn robot(name: &str, vertices: Vec<Xy>, kind: RobotKindSpec) -> RobotFile {
    RobotFile { name: name.into(), vertices, origin: None, kind }
}

/// 32 × 24 L with 8-unit legs; 6 vertices.
pub fn l_shape() -> RobotFile {
    let v = vec![[0.0, 0.0], [32.0, 0.0], [32.0, 8.0], [8.0, 8.0], [8.0, 24.0], [0.0, 24.0]];
    robot("l-shape", v, RobotKindSpec::General)
}

/// Six-armed star about its center; 18 vertices.
pub fn snowflake() -> RobotFile {
    let mut v = Vec::new();
    for k in 0..6 {
        let a = 60.0 * k as f64;
        v.push(polar(7.0, a - 30.0));
        v.push(polar(22.0, a - 7.0));
        v.push(polar(22.0, a + 7.0));
    }
    RobotFile { origin: Some([0.0, 0.0]), ..robot("snowflake", v, RobotKindSpec::Star) }
}

/// Squared-off S made of three bars; 12 vertices.
pub fn s_shape() -> RobotFile {
    let v = vec![
        [0.0, 0.0],
        [30.0, 0.0],
        [30.0, 18.0],
        [7.0, 18.0],
        [7.0, 23.0],
        [30.0, 23.0],
        [30.0, 30.0],
        [0.0, 30.0],
        [0.0, 12.0],
        [23.0, 12.0],
        [23.0, 7.0],
        [0.0, 7.0],
    ];
    robot("s-shape", v, RobotKindSpec::General)
}

/// Three legs at 120° plus a bump between the first two; 14 vertices.
pub fn three_legged() -> RobotFile {
    let mut v = Vec::new();
    for (k, phi) in [90.0, 210.0, 330.0].into_iter().enumerate() {
        for p in [[7.0, -4.0], [24.0, -4.0], [24.0, 4.0], [7.0, 4.0]] {
            v.push(rot(p, phi));
        }
        if k == 0 {
            v.push(polar(11.0, 140.0));
            v.push(polar(11.0, 160.0));
        }
    }
    robot("three-legged", v, RobotKindSpec::General)
}

/// Thick circular arc open to the right; 18 vertices.
pub fn c_shape() -> RobotFile {
    let angles: Vec<f64> = (0..9).map(|i| 45.0 + 33.75 * i as f64).collect();
    let mut v: Vec<Xy> = angles.iter().map(|&a| polar(21.0, a)).collect();
    v.extend(angles.iter().rev().map(|&a| polar(12.0, a)));
    robot("c-shape", v, RobotKindSpec::General)
}

pub fn robot_fixture(name: &str) -> Option<RobotFile> {
    Some(match name {
        "l-shape" => l_shape(),
        "snowflake" => snowflake(),
        "s-shape" => s_shape(),
        "three-legged" => three_legged(),
        "c-shape" => c_shape(),
        _ => return None,
    })
}

fn env(name: &str, obstacles: Vec<Vec<Xy>>, start: Pose, goal: Pose) -> EnvironmentFile {
    EnvironmentFile {
        name: name.into(),
        bounds: Bounds::default(),
        obstacles,
        reconstructed: true,
        start: Some(start),
        goal: Some(goal),
    }
}

/// A 40-unit thick wall at x ∈ [230, 270] with one gate of width `gap`
/// centered at y = 300.
pub fn gateway(gap: f64) -> EnvironmentFile {
    let h = 0.5 * gap;
    let obstacles = vec![rect(230.0, LO, 270.0, 300.0 - h), rect(230.0, 300.0 + h, 270.0, HI)];
    env("gateway", obstacles, Pose::new(18.0, 98.0, 340.0), Pose::new(458.0, 119.0, 270.0))
}

/// A 4 × 4 lattice of four-pointed sparks.
pub fn sparks() -> EnvironmentFile {
    let mut obstacles = Vec::new();
    for j in 0..4 {
        for i in 0..4 {
            let (cx, cy) = (100.0 + 104.0 * i as f64, 100.0 + 104.0 * j as f64);
            let tilt = 15.0 * ((i + j) % 3) as f64;
            let star: Vec<Xy> = (0..8)
                .map(|k| {
                    let r = if k % 2 == 0 { 22.0 } else { 6.0 };
                    let p = polar(r, tilt + 45.0 * k as f64);
                    [cx + p[0], cy + p[1]]
                })
                .collect();
            obstacles.push(star);
        }
    }
    env("sparks", obstacles, Pose::new(40.0, 40.0, 0.0), Pose::new(470.0, 470.0, 90.0))
}

/// Two rooms joined by a straight channel of width `gap` and length 152.
pub fn corridor(gap: f64) -> EnvironmentFile {
    let h = 0.5 * gap;
    let obstacles = vec![rect(180.0, LO, 332.0, 256.0 - h), rect(180.0, 256.0 + h, 332.0, HI)];
    env("corridor", obstacles, Pose::new(90.0, 256.0, 0.0), Pose::new(422.0, 256.0, 0.0))
}

/// A room at the lower left joined by a channel with one right-angle bend
/// to a room along the top right.
pub fn corridor_l(gap: f64) -> EnvironmentFile {
    let h = 0.5 * gap;
    let (c, x) = (180.0, 300.0);
    let lower = vec![[100.0, LO], [HI, LO], [HI, 412.0], [x + h, 412.0], [x + h, c - h], [100.0, c - h]];
    let upper = vec![[LO, 251.0], [100.0, 251.0], [100.0, c + h], [x - h, c + h], [x - h, HI], [LO, HI]];
    env("corridor-l", vec![lower, upper], Pose::new(50.0, 120.0, 0.0), Pose::new(430.0, 462.0, 0.0))
}

/// Rooms on the left and right joined by a channel with two bends.
pub fn corridor_s(gap: f64) -> EnvironmentFile {
    let h = 0.5 * gap;
    let (c1, c2, x) = (150.0, 362.0, 256.0);
    let lower = vec![[100.0, LO], [412.0, LO], [412.0, c2 - h], [x + h, c2 - h], [x + h, c1 - h], [100.0, c1 - h]];
    let upper = vec![[100.0, c1 + h], [x - h, c1 + h], [x - h, c2 + h], [412.0, c2 + h], [412.0, HI], [100.0, HI]];
    env("corridor-s", vec![lower, upper], Pose::new(50.0, 256.0, 0.0), Pose::new(462.0, 256.0, 180.0))
}

/// Three walls with openings alternating top and bottom, plus two thin pillars.
pub fn maze() -> EnvironmentFile {
    let obstacles = vec![
        rect(120.0, LO, 136.0, 420.0),
        rect(248.0, 92.0, 264.0, HI),
        rect(376.0, LO, 392.0, 420.0),
        rect(187.0, 200.0, 197.0, 230.0),
        rect(315.0, 300.0, 325.0, 330.0),
    ];
    env("maze", obstacles, Pose::new(50.0, 50.0, 0.0), Pose::new(460.0, 50.0, 0.0))
}

pub fn environment_fixture(name: &str) -> Option<EnvironmentFile> {
    Some(match name {
        "gateway" => gateway(GATEWAY_GAP),
        "sparks" => sparks(),
        "corridor" => corridor(CORRIDOR_GAP),
        "corridor-l" => corridor_l(CORRIDOR_GAP),
        "corridor-s" => corridor_s(CORRIDOR_GAP),
        "maze" => maze(),
        _ => return None,
    })
}

/// Start and goal that leave every bundled robot collision-free; equal to the
/// file's own poses except on `gateway`, whose start hugs the wall.
pub fn suite_poses(env: &EnvironmentFile) -> (Pose, Pose) {
    let start = env.start.unwrap_or(Pose::new(40.0, 40.0, 0.0));
    let goal = env.goal.unwrap_or(Pose::new(470.0, 470.0, 0.0));
    if env.name == "gateway" {
        (Pose::new(60.0, 98.0, 340.0), goal)
    } else {
        (start, goal)
    }
}

