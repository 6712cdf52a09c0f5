//! Runs every acceptance criterion and prints one ledger line per criterion.
//! Built with `harness = false` so the ledger is always shown.

use std::process::ExitCode;

use moment_forge::selftest::run_all;

fn main() -> ExitCode {
    let outcomes = run_all(0);
    for o in &outcomes {
        println!("{}  ({:.2}s)", o.ledger_line(), o.elapsed.as_secs_f64());
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        outcomes.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
