use std::process::{Command, ExitCode};
use std::time::Instant;

use kkwreath::report::{CheckEntry, Status};
use kkwreath::suite::{criterion, CRITERIA, SUITE_TIME_LIMIT};

fn verdict(entries: &[CheckEntry]) -> bool {
    !entries.is_empty() && entries.iter().all(|c| c.status != Status::Fail)
}

fn full_suite() -> (bool, String) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_kkwreath"))
        .args(["suite", "--text"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let ok = out.status.code() == Some(0) && elapsed < SUITE_TIME_LIMIT;
    (
        ok,
        format!("exit {:?} in {:.1}s", out.status.code(), elapsed.as_secs_f64()),
    )
}

fn main() -> ExitCode {
    let mut all = true;
    for n in 1..CRITERIA {
        let entries = criterion(n);
        let ok = verdict(&entries);
        all &= ok;
        println!(
            "criterion {n:>2}: {} ({} checks)",
            if ok { "PASS" } else { "FAIL" },
            entries.len()
        );
        for c in entries.iter().filter(|c| c.status == Status::Fail) {
            println!("    {} {}", c.id, c.witnesses);
        }
    }
    let (ok, detail) = full_suite();
    all &= ok;
    println!("criterion {CRITERIA}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
