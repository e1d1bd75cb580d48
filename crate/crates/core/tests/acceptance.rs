//! End-to-end acceptance run: prints one pass/fail line per criterion and
//! fails if any criterion fails.

use vpoly::bkk::Tolerances;
use vpoly::suite::run_all;

#[test]
fn acceptance() {
    let results = run_all(20260823, &Tolerances::default());
    let mut failed = 0;
    for r in &results {
        println!(
            "[{}] criterion {:2} {:<35} {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.detail
        );
        if !r.passed {
            failed += 1;
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
