//! Structural invariants of the exact arithmetic and the operator algebra,
//! over randomized inputs.

use proptest::prelude::*;

use bigm1::dunkl::DunklOperator;
use bigm1::laurent::LaurentPoly;
use bigm1::rational::{rat, Rational};
use bigm1::{MonicPolySeq, Params};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, arb_rational()), 0..5).prop_map(LaurentPoly::from_terms)
}

fn arb_operator() -> impl Strategy<Value = DunklOperator> {
    prop::collection::vec((0usize..=2, any::<bool>(), arb_laurent()), 0..4)
        .prop_map(DunklOperator::from_terms)
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn reflection_is_a_ring_automorphism(a in arb_laurent(), b in arb_laurent()) {
        prop_assert_eq!((&a * &b).reflect(), &a.reflect() * &b.reflect());
        prop_assert_eq!(a.reflect().reflect(), a);
    }

    #[test]
    fn derivative_satisfies_leibniz(a in arb_laurent(), b in arb_laurent()) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_is_associative(
        a in arb_operator(),
        b in arb_operator(),
        c in arb_operator(),
    ) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn apply_is_a_homomorphism(a in arb_operator(), b in arb_operator(), f in arb_laurent()) {
        prop_assert_eq!(a.compose(&b).apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn composition_respects_the_grading(
        d1 in 0usize..=2, e1 in any::<bool>(), f in arb_laurent(),
        d2 in 0usize..=2, e2 in any::<bool>(), g in arb_laurent(),
    ) {
        let a = DunklOperator::from_term(d1, e1, f);
        let b = DunklOperator::from_term(d2, e2, g);
        for (&(d, e), _) in a.compose(&b).terms() {
            prop_assert_eq!(e, e1 ^ e2);
            prop_assert!(d <= d1 + d2);
        }
    }

    #[test]
    fn operator_json_round_trips(op in arb_operator()) {
        let v = op.to_json();
        prop_assert_eq!(DunklOperator::from_json(&v).unwrap(), op);
    }
}

#[test]
fn monic_seq_concurrent_readers_see_consistent_prefix() {
    use std::sync::Arc;
    let seq = Arc::new(MonicPolySeq::new(Params::from_ints(1, 1, 1, 2)));
    let handles: Vec<_> = (0..4)
        .map(|t| {
            let seq = Arc::clone(&seq);
            std::thread::spawn(move || {
                let mut out = Vec::new();
                for n in 0..=12 {
                    out.push(seq.poly((n + 3 * t) % 13).unwrap());
                }
                out
            })
        })
        .collect();
    let single = MonicPolySeq::new(Params::from_ints(1, 1, 1, 2));
    for (t, h) in handles.into_iter().enumerate() {
        for (i, p) in h.join().unwrap().into_iter().enumerate() {
            assert_eq!(p, single.poly((i + 3 * t) % 13).unwrap());
        }
    }
}
