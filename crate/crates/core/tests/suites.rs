use palcomb::verify::{run, Suite};

#[test]
fn every_suite_passes_at_default_bounds() {
    for suite in Suite::ALL {
        let report = run(suite, suite.default_max_n()).unwrap();
        assert!(report.passed(), "{suite}: {}", report.counterexample.unwrap());
        assert!(report.checked > 0);
    }
}
