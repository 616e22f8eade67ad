use std::process::ExitCode;

fn main() -> ExitCode {
    gamma_sharp::cli::run()
}
