use std::process::ExitCode;

use clap::Parser;
use hxdft::Direction;
use hxdft_cli::args::{Cli, Command};
use hxdft_cli::commands;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Roots(a) => commands::roots(a).map(|_| true),
        Command::Fwd(a) => commands::transform1d(a, Direction::Forward).map(|_| true),
        Command::Inv(a) => commands::transform1d(a, Direction::Inverse).map(|_| true),
        Command::Fwd2d(a) => commands::transform2d(a, Direction::Forward).map(|_| true),
        Command::Inv2d(a) => commands::transform2d(a, Direction::Inverse).map(|_| true),
        Command::Verify(a) => commands::verify(a),
        Command::Ellipse(a) => commands::ellipse(a).map(|_| true),
        Command::Bench(a) => commands::bench(a).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("hxdft: error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
