//! One PASS/FAIL line per acceptance criterion, followed by the individual
//! checks behind it. Runs without the libtest harness so the lines are
//! printed on every run.

use std::process::ExitCode;

use beltrami::construct::catalog;
use beltrami::verify::{run_criterion_with, CRITERIA};

fn main() -> ExitCode {
    let catalog = match catalog() {
        Ok(c) => c,
        Err(e) => {
            for (n, title) in CRITERIA {
                println!("FAIL criterion {n:>2}: {title} (catalog: {e})");
            }
            return ExitCode::FAILURE;
        }
    };
    let mut failed = Vec::new();
    for (n, title) in CRITERIA {
        let start = std::time::Instant::now();
        let checks = run_criterion_with(n, &catalog).expect("criterion exists");
        let ok = !checks.is_empty() && checks.iter().all(|c| c.passed);
        println!(
            "{} criterion {n:>2}: {title} [{:.1}s]",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for c in &checks {
            println!("       {c}");
        }
        if !ok {
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
