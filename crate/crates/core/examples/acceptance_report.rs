//! Runs the fast acceptance criteria and prints one line per criterion. Pass `slow` as the
//! first argument to include the slow ones.

use irk::acceptance::{run_acceptance, Profile};

fn main() {
    let profile = match std::env::args().nth(1).as_deref() {
        Some("slow") => Profile::Slow,
        _ => Profile::Fast,
    };
    let summary = run_acceptance(profile, 0, |r| println!("{}", r.line()));
    println!("{} passed, {} failed", summary.passed, summary.failed);
    if summary.failed > 0 {
        std::process::exit(1);
    }
}
