use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(qhd_profiles::cli::run_main(std::env::args_os()) as u8)
}
