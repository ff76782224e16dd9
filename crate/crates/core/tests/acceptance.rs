//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.
//! `ACCEPTANCE_ONLY=3,7` restricts the run to the listed criteria.

use klr_core::acceptance::{run_criterion, CRITERIA, DEFAULT_SEED};

fn main() {
    let only: Option<Vec<u8>> =
        std::env::var("ACCEPTANCE_ONLY").ok().map(|s| s.split(',').filter_map(|t| t.trim().parse().ok()).collect());
    let mut failed = 0;
    for id in CRITERIA {
        if only.as_ref().is_some_and(|o| !o.contains(&id)) {
            continue;
        }
        let report = run_criterion(id, DEFAULT_SEED);
        println!("{}", report.line());
        if !report.passed {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
