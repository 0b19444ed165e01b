//! Flag parsing and the one-shot planning command.

use std::fs;
use std::path::{Path, PathBuf};

use clap::Parser;
use sss_core::engine::{PlanStatus, Strategy};
use sss_core::io::fixtures::{environment_fixture, robot_fixture, ENVIRONMENT_NAMES, ROBOT_NAMES};
use sss_core::io::service::{handle_plan, DEFAULT_LEAF_CAP};
use sss_core::io::svg::{render, Scene};
use sss_core::io::{self, EnvironmentFile, PlanRequest, PlanResponse, Pose, RobotFile, Source};

pub const EXIT_PATH: i32 = 0;
pub const EXIT_NO_PATH: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Plan a collision-free motion for a polygonal robot, or serve plans over HTTP.
#[derive(Parser, Debug, Clone)]
#[command(name = "sss", version)]
pub struct Args {
    /// Environment JSON file, or the name of a bundled environment.
    #[arg(long)]
    pub env: Option<String>,
    /// Robot JSON file, or the name of a bundled robot.
    #[arg(long)]
    pub robot: Option<String>,
    /// Start pose `x,y,theta` with theta in degrees; defaults to the environment's.
    #[arg(long, value_parser = parse_pose, allow_hyphen_values = true)]
    pub start: Option<Pose>,
    /// Goal pose `x,y,theta`; defaults to the environment's.
    #[arg(long, value_parser = parse_pose, allow_hyphen_values = true)]
    pub goal: Option<Pose>,
    /// Resolution parameter.
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub eps: f64,
    /// greedy, bfs or random.
    #[arg(long, default_value = "greedy")]
    pub strategy: Strategy,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write an SVG picture of the subdivision and path.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Write the full response as JSON.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Stop with NO_PATH after this many boxes.
    #[arg(long)]
    pub max_boxes: Option<usize>,
    /// Leaves kept in JSON output and service responses.
    #[arg(long, default_value_t = DEFAULT_LEAF_CAP)]
    pub leaf_cap: usize,
    /// Classify on the calling thread only.
    #[arg(long)]
    pub sequential: bool,
    /// Serve the JSON API on this port instead of planning once.
    #[arg(long, env = "SSS_PORT")]
    pub serve: Option<u16>,
    /// Write the bundled fixtures as JSON files under this directory and exit.
    #[arg(long)]
    pub export_fixtures: Option<PathBuf>,
    /// Suppress the summary line.
    #[arg(long, short)]
    pub quiet: bool,
}

pub fn parse_pose(s: &str) -> Result<Pose, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected x,y,theta but got `{s}`"));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p.parse::<f64>().map_err(|e| format!("`{p}`: {e}"))?;
        if !slot.is_finite() {
            return Err(format!("`{p}` is not finite"));
        }
    }
    Ok(Pose::new(v[0], v[1], v[2]))
}

/// A file path if it exists, otherwise a bundled fixture name.
pub fn resolve_environment(arg: &str) -> Result<EnvironmentFile, String> {
    let path = Path::new(arg);
    if path.is_file() {
        return io::load_environment(path).map_err(|e| e.to_string());
    }
    let f = environment_fixture(arg).ok_or_else(|| {
        format!("`{arg}` is neither a file nor a bundled environment ({})", ENVIRONMENT_NAMES.join(", "))
    })?;
    f.normalized().map_err(|e| e.to_string())
}

pub fn resolve_robot(arg: &str) -> Result<RobotFile, String> {
    let path = Path::new(arg);
    if path.is_file() {
        return io::load_robot(path).map_err(|e| e.to_string());
    }
    let f = robot_fixture(arg)
        .ok_or_else(|| format!("`{arg}` is neither a file nor a bundled robot ({})", ROBOT_NAMES.join(", ")))?;
    f.normalized().map_err(|e| e.to_string())
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Normalized JSON of every bundled fixture, as `environments/*.json` and
/// `robots/*.json`.
pub fn export_fixtures(dir: &Path) -> Result<usize, String> {
    let mut n = 0;
    for name in ENVIRONMENT_NAMES {
        let f = resolve_environment(name)?;
        write(&dir.join("environments").join(format!("{name}.json")), &io::to_json(&f))?;
        n += 1;
    }
    for name in ROBOT_NAMES {
        let f = resolve_robot(name)?;
        write(&dir.join("robots").join(format!("{name}.json")), &io::to_json(&f))?;
        n += 1;
    }
    Ok(n)
}

/// The request the CLI hands to the shared service handler.
pub fn build_request(args: &Args) -> Result<PlanRequest, String> {
    let env = resolve_environment(args.env.as_deref().ok_or("--env is required")?)?;
    let robot = resolve_robot(args.robot.as_deref().ok_or("--robot is required")?)?;
    let start = args.start.or(env.start).ok_or("--start is required (the environment has no default)")?;
    let goal = args.goal.or(env.goal).ok_or("--goal is required (the environment has no default)")?;
    Ok(PlanRequest {
        environment: Source::Inline(env),
        robot: Source::Inline(robot),
        start,
        goal,
        epsilon: args.eps,
        strategy: args.strategy,
        seed: args.seed,
        include_leaves: args.svg.is_some() || args.json.is_some(),
        leaf_cap: Some(if args.svg.is_some() { usize::MAX } else { args.leaf_cap }),
        max_boxes: args.max_boxes,
    })
}

pub fn svg_for(req: &PlanRequest, resp: &PlanResponse) -> Result<String, String> {
    let (Source::Inline(env), Source::Inline(robot)) = (&req.environment, &req.robot) else {
        return Err("SVG output needs inline documents".into());
    };
    let env = env.to_environment().map_err(|e| e.to_string())?;
    let robot = robot.to_robot().map_err(|e| e.to_string())?;
    let leaves = resp.leaves.as_deref().unwrap_or(&[]);
    Ok(render(&Scene { env: &env, robot: &robot, leaves, path: &resp.path, start: req.start, goal: req.goal }))
}

pub fn summary(resp: &PlanResponse) -> String {
    let s = &resp.stats;
    let verdict = match (resp.status, resp.reason) {
        (PlanStatus::Path, _) => "PATH".to_string(),
        (PlanStatus::NoPath, Some(r)) => format!("NO_PATH ({})", serde_json::to_value(r).unwrap().as_str().unwrap_or("")),
        (PlanStatus::NoPath, None) => "NO_PATH".to_string(),
    };
    format!(
        "{verdict} env={} robot={} eps={} boxes={} free={} stuck={} mixed={} triangles={} poses={} time={:.1}ms",
        resp.environment,
        resp.robot,
        resp.epsilon,
        s.boxes,
        s.free_leaves,
        s.stuck_leaves,
        s.mixed_leaves,
        s.triangles,
        resp.path.len(),
        s.wall_ms
    )
}

/// Plan once and write the requested outputs; returns the exit code.
pub fn run_once(args: &Args) -> Result<i32, String> {
    let req = build_request(args)?;
    let mut resp = handle_plan(&req, !args.sequential).map_err(|e| e.to_string())?;
    if let Some(path) = &args.svg {
        write(path, &svg_for(&req, &resp)?)?;
    }
    if let Some(path) = &args.json {
        if let Some(leaves) = resp.leaves.as_mut() {
            if leaves.len() > args.leaf_cap {
                leaves.truncate(args.leaf_cap);
                resp.leaves_truncated = true;
            }
        }
        write(path, &io::to_json(&resp))?;
    }
    if !args.quiet {
        println!("{}", summary(&resp));
    }
    Ok(match resp.status {
        PlanStatus::Path => EXIT_PATH,
        PlanStatus::NoPath => EXIT_NO_PATH,
    })
}
