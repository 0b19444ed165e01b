//! Command-line front end and HTTP service for the planner.

pub mod cli;
pub mod server;

pub use cli::{run_once, Args, EXIT_ERROR, EXIT_NO_PATH, EXIT_PATH};
pub use server::{router, serve, ServerConfig};
