//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;

use homvec::suite::{run_suite, SUITES};

fn main() -> ExitCode {
    let mut failed = 0;
    for name in SUITES {
        match run_suite(name) {
            Ok(report) => {
                println!("{report} ({:.2?})", report.elapsed);
                for extra in report.failures.iter().skip(1).take(4) {
                    println!("       also: {extra}");
                }
                if !report.passed() {
                    failed += 1;
                }
            }
            Err(e) => {
                println!("FAIL    {name:<24} error: {e}");
                failed += 1;
            }
        }
    }
    println!("{} of {} criteria passed", SUITES.len() - failed, SUITES.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
