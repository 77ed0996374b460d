use super::*;
use std::time::Instant;

#[test]
fn every_expectation_is_unique_and_sourced() {
    for e in catalog_entries() {
        let mut seen = std::collections::HashSet::new();
        for x in &e.expected {
            assert!(seen.insert(x.check), "{}/{} listed twice", e.name, x.check);
            let note = match &x.source {
                Source::Claim(n) | Source::Derived(n) => n,
            };
            assert!(!note.is_empty(), "{}/{}", e.name, x.check);
        }
    }
}

#[test]
fn regression_over_rationals() {
    let start = Instant::now();
    let s = run_regression(Field::Rational, &DecideOptions::default());
    assert!(start.elapsed().as_secs() < 60);
    assert!(s.passed, "{}", s.to_text());
    assert!(s.skipped.is_empty());
    let again = run_regression(Field::Rational, &DecideOptions::default());
    assert_eq!(s, again);
}

#[test]
fn regression_over_f5_and_f2() {
    let s = run_regression(Field::prime(5).unwrap(), &DecideOptions::default());
    assert!(s.passed, "{}", s.to_text());
    let s = run_regression(Field::prime(2).unwrap(), &DecideOptions::default());
    assert!(s.passed, "{}", s.to_text());
    assert!(s.skipped.iter().any(|n| n.entry == "h4_regular"));
}

#[test]
fn summary_formats() {
    let s = run_regression(Field::prime(7).unwrap(), &DecideOptions::default());
    let text = s.to_text();
    assert!(text.contains("PASS h4_regular/symmetric_alpha"));
    let json: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
    assert_eq!(json["field"], "fp:7");
    assert!(run_named("no_such_entry", Field::Rational, &DecideOptions::default()).is_none());
}
