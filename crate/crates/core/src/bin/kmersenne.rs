use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(kmersenne::cli::run(std::env::args_os()))
}
