//! Runs every acceptance scenario and prints one PASS/FAIL line per criterion.
//! `LATCUT_SEED` selects the seed (default 0); a criterion name as argument
//! restricts the run to scenarios whose name contains it.

use latcut_cli::scenario::{run_scenario, scenarios};
use std::process::ExitCode;

/// Expected wall-clock budgets in seconds, reported next to the measured time.
const BUDGET_S: [u64; 9] = [5, 5, 30, 30, 10, 30, 60, 30, 30];

fn main() -> ExitCode {
    let seed = std::env::var("LATCUT_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let mut failures = 0;
    for sc in scenarios() {
        if filter.as_ref().is_some_and(|f| !sc.name.contains(f.as_str())) {
            continue;
        }
        let budget = BUDGET_S[sc.criterion as usize - 1];
        match run_scenario(sc.name, &[], seed) {
            Ok(rep) => {
                let verdict = if rep.passed() { "PASS" } else { "FAIL" };
                println!(
                    "{verdict} criterion {} ({}): {}/{} assertions, seed {}, {:.1} s (budget {} s)",
                    sc.criterion,
                    sc.name,
                    rep.assertions.len() - rep.failed(),
                    rep.assertions.len(),
                    seed,
                    rep.wall_ms as f64 / 1000.0,
                    budget
                );
                for a in rep.assertions.iter().filter(|a| !a.passed) {
                    println!("    failed: {} {}", a.name, a.detail);
                }
                if !rep.passed() {
                    failures += 1;
                }
            }
            Err(e) => {
                println!("FAIL criterion {} ({}): {e}", sc.criterion, sc.name);
                failures += 1;
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
