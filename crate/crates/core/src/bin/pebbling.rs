use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(pebbling::cli::run(std::env::args_os()))
}
