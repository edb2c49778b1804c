use specseq::acceptance::{run_criterion, AcceptanceConfig, CRITERIA};
use std::time::Instant;

#[test]
fn acceptance() {
    let config = AcceptanceConfig::default();
    let mut failed = Vec::new();
    for id in 1..=CRITERIA {
        let start = Instant::now();
        let report = run_criterion(id, &config);
        println!("{report} [{:.1}s]", start.elapsed().as_secs_f64());
        if !report.passed() {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
