use std::process::ExitCode;

fn main() -> ExitCode {
    tgraph_cli::run(std::env::args_os())
}
