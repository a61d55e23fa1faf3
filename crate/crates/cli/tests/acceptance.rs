//! The twelve acceptance criteria, one pass/fail line each.

use std::process::ExitCode;

use superalg_cli::verify::{all_passed, run_suite, Suite};

fn main() -> ExitCode {
    let results = run_suite(Suite::Full, &[]);
    for r in &results {
        println!("{}", r.line());
    }
    if results.len() == 12 && all_passed(&results) {
        println!("acceptance: all 12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
