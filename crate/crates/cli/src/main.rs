mod output;
mod request;

use std::process::ExitCode;
use std::time::Instant;

use charclass::Error;
use clap::Parser;

use crate::request::{build_request, Args};

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Genericity { .. } | Error::VerificationMismatch { .. } => 3,
        Error::Invariant(_) => 4,
        Error::Parse { .. }
        | Error::NotHomogeneous { .. }
        | Error::CharacteristicHazard { .. }
        | Error::InvalidPrime(_)
        | Error::InvalidRing(_)
        | Error::ZeroInput(_) => 2,
        _ => 4,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = Args::parse();
    let started = Instant::now();

    if let Some(jobs) = args.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("ccc: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    let file_text = match &args.ideal_file {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(t) => Some(t),
            Err(e) => {
                eprintln!("ccc: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => None,
    };
    let seed = args.seed.unwrap_or_else(rand::random);
    let req = match build_request(&args, file_text.as_deref(), seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("ccc: {e}");
            return ExitCode::from(2);
        }
    };
    match output::run(&req) {
        Ok(resp) => {
            println!("{}", output::format_output(&resp, req.format));
            eprintln!("ccc: seed {} retries {} time {:.3}s", resp.seed, resp.retries, started.elapsed().as_secs_f64());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("ccc: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
