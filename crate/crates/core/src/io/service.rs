//! Transport-free request handling shared by the CLI and the HTTP server.

use serde::Serialize;
use thiserror::Error;

use super::fixtures::{environment_fixture, robot_fixture, ENVIRONMENT_NAMES, ROBOT_NAMES};
use super::schema::{EnvironmentFile, LeafOut, PlanRequest, PlanResponse, Pose, RobotFile, Source};
use crate::engine::{PlanError, Planner, PlannerConfig};

/// Leaves attached to a response when the request names no cap.
pub const DEFAULT_LEAF_CAP: usize = 50_000;

#[derive(Debug, Error, PartialEq)]
pub enum ServiceError {
    /// The request itself is at fault (HTTP 4xx).
    #[error("{0}")]
    BadRequest(String),
    #[error("unknown {kind} `{name}`")]
    NotFound { kind: &'static str, name: String },
    /// The planner failed on a valid request (HTTP 5xx).
    #[error("{0}")]
    Internal(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FixtureList {
    pub environments: Vec<String>,
    pub robots: Vec<String>,
}

pub fn list_fixtures() -> FixtureList {
    FixtureList {
        environments: ENVIRONMENT_NAMES.iter().map(|s| s.to_string()).collect(),
        robots: ROBOT_NAMES.iter().map(|s| s.to_string()).collect(),
    }
}

pub fn resolve_environment(src: &Source<EnvironmentFile>) -> Result<EnvironmentFile, ServiceError> {
    match src {
        Source::Named(n) => {
            environment_fixture(n).ok_or_else(|| ServiceError::NotFound { kind: "environment", name: n.clone() })
        }
        Source::Inline(f) => Ok(f.clone()),
    }
}

pub fn resolve_robot(src: &Source<RobotFile>) -> Result<RobotFile, ServiceError> {
    match src {
        Source::Named(n) => robot_fixture(n).ok_or_else(|| ServiceError::NotFound { kind: "robot", name: n.clone() }),
        Source::Inline(f) => Ok(f.clone()),
    }
}

fn finite(p: &Pose) -> bool {
    p.x.is_finite() && p.y.is_finite() && p.theta.is_finite()
}

/// Validate, plan and package the response.
pub fn handle_plan(req: &PlanRequest, parallel: bool) -> Result<PlanResponse, ServiceError> {
    if !(req.epsilon.is_finite() && req.epsilon > 0.0) {
        return Err(ServiceError::BadRequest(format!("epsilon must be positive and finite, got {}", req.epsilon)));
    }
    if !finite(&req.start) || !finite(&req.goal) {
        return Err(ServiceError::BadRequest("start and goal must be finite".into()));
    }
    let env_file = resolve_environment(&req.environment)?;
    let robot_file = resolve_robot(&req.robot)?;
    let env = env_file.to_environment().map_err(|e| ServiceError::BadRequest(e.to_string()))?;
    let robot = robot_file.to_robot().map_err(|e| ServiceError::BadRequest(e.to_string()))?;
    let config = PlannerConfig {
        epsilon: req.epsilon,
        strategy: req.strategy,
        seed: req.seed,
        parallel,
        max_boxes: req.max_boxes,
        ..PlannerConfig::default()
    };
    let mut planner = Planner::new(&env, &robot, config).map_err(|e| match e {
        PlanError::BadEpsilon(_) | PlanError::BadBatch | PlanError::BadConfiguration => {
            ServiceError::BadRequest(e.to_string())
        }
        PlanError::Robot(_) => ServiceError::BadRequest(e.to_string()),
    })?;
    let result = planner
        .run(req.start.to_config(), req.goal.to_config())
        .map_err(|e| ServiceError::Internal(e.to_string()))?;

    let cap = req.leaf_cap.unwrap_or(DEFAULT_LEAF_CAP);
    let (leaves, total, truncated) = if req.include_leaves {
        let all = planner.leaves();
        let total = all.len();
        let kept: Vec<LeafOut> = all.iter().take(cap).map(LeafOut::from).collect();
        (Some(kept), total, total > cap)
    } else {
        (None, result.stats.free_leaves + result.stats.stuck_leaves + result.stats.mixed_leaves, false)
    };
    Ok(PlanResponse {
        status: result.status,
        reason: result.reason,
        path: result.path.iter().map(Pose::from_config).collect(),
        channel_boxes: result.channel.len(),
        stats: result.stats,
        environment: env_file.name,
        robot: robot_file.name,
        epsilon: req.epsilon,
        leaves,
        leaves_total: total,
        leaves_truncated: truncated,
    })
}
