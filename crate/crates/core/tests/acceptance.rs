//! Runs every acceptance criterion and prints one PASS/FAIL line each. The slow criteria (A10,
//! A12) run only when `IRK_SLOW=1`; `IRK_SEED` overrides the default seed.

use std::process::ExitCode;

use irk::acceptance::{run_criterion, CRITERIA};

fn main() -> ExitCode {
    let slow = std::env::var("IRK_SLOW").is_ok_and(|v| v == "1");
    let seed = std::env::var("IRK_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let mut failed = Vec::new();
    println!("\nacceptance (seed {seed})");
    for c in CRITERIA {
        if c.slow && !slow {
            println!("SKIP {:<4} {} (set IRK_SLOW=1)", c.id, c.title);
            continue;
        }
        let r = run_criterion(c, seed);
        println!("{}", r.line());
        if !r.passed {
            failed.push(r.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all run criteria passed\n");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {}\n", failed.join(", "));
        ExitCode::FAILURE
    }
}
