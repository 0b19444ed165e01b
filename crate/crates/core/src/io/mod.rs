//! File formats, bundled fixtures, rendering and request handling.

pub mod fixtures;
pub mod schema;
pub mod service;
pub mod svg;

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

pub use schema::{
    Bounds, EnvironmentFile, LeafOut, PlanRequest, PlanResponse, Pose, RobotFile, RobotKindSpec, Source, Xy,
};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    /// Malformed JSON; the message carries line and column.
    #[error("{context}: {source}")]
    Parse { context: String, source: serde_json::Error },
    #[error("{0}")]
    Invalid(String),
}

fn parse<T: DeserializeOwned>(text: &str, context: &str) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|source| IoError::Parse { context: context.to_string(), source })
}

fn read(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.display().to_string(), source })
}

/// Parse and validate; the result is normalized.
pub fn parse_environment(text: &str, context: &str) -> Result<EnvironmentFile, IoError> {
    parse::<EnvironmentFile>(text, context)?.normalized()
}

pub fn parse_robot(text: &str, context: &str) -> Result<RobotFile, IoError> {
    parse::<RobotFile>(text, context)?.normalized()
}

pub fn load_environment(path: &Path) -> Result<EnvironmentFile, IoError> {
    parse_environment(&read(path)?, &path.display().to_string())
}

pub fn load_robot(path: &Path) -> Result<RobotFile, IoError> {
    parse_robot(&read(path)?, &path.display().to_string())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
