mod common;

use common::props::{check_eigenmatrices, check_krein, field_axioms, mixed_triple, order_axioms, triple};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn scalar_field_axioms((a, b, c) in triple()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn scalar_order((a, b, c) in triple()) {
        order_axioms(&a, &b, &c)?;
    }

    #[test]
    fn display_round_trip_for_rationals(n in -1000i64..1000, d in 1i64..1000) {
        let x = drgkit::exactnum::Scalar::ratio(n, d);
        let back = drgkit::exactnum::parse_rational(&x.to_string()).unwrap();
        prop_assert_eq!(drgkit::exactnum::Scalar::from(back), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scalar_axioms_across_fields((a, b, c) in mixed_triple()) {
        field_axioms(&a, &b, &c)?;
        order_axioms(&a, &b, &c)?;
    }
}

#[test]
fn eigenmatrices_on_corpus() {
    for (name, a) in common::corpus() {
        check_eigenmatrices(&a).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn krein_on_corpus() {
    for (name, a) in common::corpus() {
        check_krein(&a).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}
