use std::process::ExitCode;

fn main() -> ExitCode {
    preprojective::cli::main()
}
