use std::process::ExitCode;

fn main() -> ExitCode {
    catalan_log::cli::run()
}
