use std::process::ExitCode;

fn main() -> ExitCode {
    hallpost::cli::main()
}
