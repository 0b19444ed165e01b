use std::process::ExitCode;

use clap::Parser;
use sss_cli::{cli, Args, ServerConfig, EXIT_ERROR};

fn exit(code: i32) -> ExitCode {
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(dir) = &args.export_fixtures {
        return match cli::export_fixtures(dir) {
            Ok(n) => {
                println!("wrote {n} fixtures under {}", dir.display());
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("sss: {e}");
                exit(EXIT_ERROR)
            }
        };
    }
    if let Some(port) = args.serve {
        let cfg = ServerConfig { leaf_cap: args.leaf_cap, parallel: !args.sequential };
        let rt = match tokio::runtime::Runtime::new() {
            Ok(rt) => rt,
            Err(e) => {
                eprintln!("sss: {e}");
                return exit(EXIT_ERROR);
            }
        };
        return match rt.block_on(sss_cli::serve(port, cfg)) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("sss: {e}");
                exit(EXIT_ERROR)
            }
        };
    }
    match sss_cli::run_once(&args) {
        Ok(code) => exit(code),
        Err(e) => {
            eprintln!("sss: {e}");
            exit(EXIT_ERROR)
        }
    }
}
