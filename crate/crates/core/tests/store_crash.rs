use knowcard_testkit::crash;

#[test]
fn every_injected_fault_leaves_all_or_nothing() {
    let outcome = crash::run_standard();
    assert!(outcome.failures.is_empty(), "{:#?}", outcome.failures);
    assert!(outcome.crash_points >= 50, "only {} crash points", outcome.crash_points);
}
