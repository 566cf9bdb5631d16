use hecke_core::idempotents::{resolution, RankLimits};
use hecke_core::scalar::{delta, markov_weight, quantum_int, FieldOp, IntLaurent, RatFunc};
use hecke_core::trace::{conditional_expectation, TraceContext};
use hecke_core::{Hecke, HeckeElement, Permutation};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = IntLaurent> {
    (-3i32..=3, prop::collection::vec(-4i64..=4, 1..5))
        .prop_map(|(low, cs)| IntLaurent::from_coeffs(low, cs.into_iter().map(BigInt::from).collect()))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(n, d)| RatFunc::from_parts(n, d).ok())
}

fn nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    ratfunc().prop_filter("nonzero", |f| !f.is_zero())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=9)
        .prop_filter("nonzero", |(a, _)| *a != 0)
        .prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn element(n: usize) -> impl Strategy<Value = HeckeElement<RatFunc>> {
    prop::collection::vec((perm(n), -3i64..=3, -2i32..=2), 0..5).prop_map(move |ts| {
        let mut x = HeckeElement::zero(n);
        for (w, c, e) in ts {
            let c = &RatFunc::from_int(c) * &RatFunc::q_pow(e);
            x = x.add(&HeckeElement::from_terms(n, [(w, c)])).unwrap();
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_unique(a in ratfunc(), b in nonzero_ratfunc()) {
        let back = &(&a * &b) / &b;
        prop_assert_eq!(back, a.clone());
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(a.field_arith(&b, FieldOp::Mul).unwrap(), &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), q0 in rational()) {
        let (ea, eb) = match (a.eval_at(&q0), b.eval_at(&q0)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => return Ok(()),
        };
        prop_assert_eq!((&a * &b).eval_at(&q0).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_at(&q0).unwrap(), &ea + &eb);
    }

    #[test]
    fn quantum_integers(k in -20i32..=20) {
        prop_assert_eq!(&quantum_int(k) * &delta(), &RatFunc::q_pow(k) - &RatFunc::q_pow(-k));
        prop_assert_eq!(quantum_int(-k), -quantum_int(k));
        prop_assert_eq!(markov_weight(k), &RatFunc::q_pow(-k) * &quantum_int(k));
    }

    #[test]
    fn canonical_words_round_trip(w in (1usize..=6).prop_flat_map(perm)) {
        let word = w.canonical_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(&word, w.rank()).unwrap(), w);
    }

    #[test]
    fn coset_decomposition(w in (2usize..=6).prop_flat_map(perm)) {
        let m = w.rank() - 1;
        let (u, k) = w.coset_decompose(m);
        let mut rebuilt = u.promote(m + 1);
        if let Some(k) = k {
            for i in (k..=m).rev() {
                rebuilt = rebuilt.mul_generator(i);
            }
            prop_assert_eq!(w.length(), u.length() + m - k + 1);
        } else {
            prop_assert_eq!(w.length(), u.length());
        }
        prop_assert_eq!(rebuilt, w);
    }

    #[test]
    fn multiplication_is_associative(a in element(4), b in element(4), c in element(4)) {
        let h = Hecke::symbolic();
        let l = h.mul(&h.mul(&a, &b).unwrap(), &c).unwrap();
        let r = h.mul(&a, &h.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        prop_assert_eq!(h.mul(&HeckeElement::one(4), &a).unwrap(), a.clone());
        let sum = h.mul(&a, &b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(sum, h.mul(&a, &b).unwrap().add(&h.mul(&a, &c).unwrap()).unwrap());
    }

    #[test]
    fn promotion_respects_products(a in element(3), b in element(3)) {
        let h = Hecke::symbolic();
        let small = h.mul(&a, &b).unwrap().promote(5);
        prop_assert_eq!(small, h.mul(&a.promote(5), &b.promote(5)).unwrap());
    }

    #[test]
    fn evaluated_products_agree(a in element(3), b in element(3), q0 in rational()) {
        prop_assume!(q0 != BigRational::from_integer(1.into()) && q0 != BigRational::from_integer((-1).into()));
        let h = Hecke::symbolic();
        let he = Hecke::at(q0.clone()).unwrap();
        let sym = h.mul(&a, &b).unwrap().eval_at(&q0).unwrap();
        let ev = he.mul(&a.eval_at(&q0).unwrap(), &b.eval_at(&q0).unwrap()).unwrap();
        prop_assert_eq!(sym, ev);
    }

    #[test]
    fn expectation_is_a_bimodule_map(x in element(3), y in element(3), z in element(4), d in 1i32..=3) {
        let h = Hecke::symbolic();
        let ctx = TraceContext::new(&h, d);
        let inner = h.product(&[&x.promote(4), &z, &y.promote(4)]).unwrap();
        let l = conditional_expectation(&h, &inner, &ctx).unwrap();
        let r = h.product(&[&x, &conditional_expectation(&h, &z, &ctx).unwrap(), &y]).unwrap();
        prop_assert_eq!(l, r);
    }
}

#[test]
fn resolution_respects_configured_limits() {
    let h: Hecke<RatFunc> = Hecke::symbolic();
    let tight = RankLimits { symbolic: 2, evaluated: 3 };
    assert!(hecke_core::idempotents::resolution_with_limits(&h, 3, &tight).is_err());
    assert_eq!(resolution(&h, 2).unwrap().len(), 2);
}
