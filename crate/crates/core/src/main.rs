use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(nakayama::cli::main())
}
