use std::io::Write;

use vtangle::selftest;

#[test]
fn acceptance() {
    let results = selftest::run_all();
    // written past the test harness's capture so the lines show on every run
    let mut out = std::io::stdout().lock();
    for r in &results {
        writeln!(out, "{r}").unwrap();
    }
    let failed: Vec<_> = results.iter().filter(|r| !r.passed).map(|r| r.number).collect();
    assert_eq!(results.len(), 10);
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
