use std::io::Write;
use std::process::ExitCode;

use moment_forge::cli;

fn main() -> ExitCode {
    if let Err(msg) = cli::configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(cli::EXIT_USAGE as u8);
    }
    let out = cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
