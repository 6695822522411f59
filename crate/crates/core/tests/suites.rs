use quadbent_core::classify::Classifier;
use quadbent_core::suite;
use quadbent_core::FieldContext;

fn assert_all(checks: &[suite::SuiteCheck]) {
    for c in checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn field_and_property_suites() {
    for n in [4, 6, 8] {
        let ctx = FieldContext::new(n).unwrap();
        assert_all(&[suite::field_axioms(&ctx)]);
        assert_all(&suite::properties(&ctx, false).unwrap());
        assert_all(&[suite::modulus_independence(n, false).unwrap()]);
    }
    for n in (4..=12).step_by(2) {
        assert_all(&[suite::weight_lemma(n)]);
    }
    let ctx = FieldContext::new(6).unwrap();
    assert_all(&[suite::sos_apn(&ctx).unwrap()]);
}

#[test]
fn maximality_ground_truth_small_fields() {
    for n in [4, 6, 8] {
        let ctx = FieldContext::new(n).unwrap();
        assert_all(&[suite::maximality_ground_truth(&ctx, false).unwrap()]);
    }
}

#[test]
fn exhaustive_search_checks() {
    for n in [6, 8] {
        let ctx = FieldContext::new(n).unwrap();
        let cl = Classifier::new(&ctx, false).unwrap();
        let checks = suite::search_checks(&cl, None).unwrap();
        for c in &checks {
            println!("{}: {} {}", c.name, c.passed, c.detail);
        }
        assert_all(&checks);
    }
}

#[test]
fn explicit_images_and_flag() {
    let mut flagged = Vec::new();
    for n in [4, 6, 8, 10] {
        let ctx = FieldContext::new(n).unwrap();
        let (check, f) = suite::explicit_images(&ctx).unwrap();
        assert_all(&[check]);
        flagged.extend(f.into_iter().map(|(l, p, d)| (n, l, p, d)));
    }
    assert_eq!(flagged, vec![(8, 2, 81, 49)]);
}

#[test]
fn kernel_and_walsh_agree() {
    for n in [4, 6, 8] {
        let ctx = FieldContext::new(n).unwrap();
        assert_all(&[suite::cross_validation(&ctx).unwrap()]);
    }
}

#[test]
fn valuation_and_stickelberger() {
    assert_all(&[
        suite::valuation(&FieldContext::new(6).unwrap(), 3, 10).unwrap(),
        suite::valuation(&FieldContext::new(8).unwrap(), 5, 20).unwrap(),
    ]);
    for n in [2, 4, 6, 8] {
        assert_all(&[suite::stickelberger(&FieldContext::new(n).unwrap()).unwrap()]);
    }
}
