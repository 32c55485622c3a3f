//! Algebraic invariants checked on random inputs.

use ggp_core::csoperator::{eigensolve, eigensolve_specialized};
use ggp_core::scalar::rat;
use ggp_core::{Axis, BiPoly, KappaRational, Rational, UniPoly, Weight};
use proptest::prelude::*;

fn unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 0..=max_deg + 1).prop_map(|c| UniPoly::from_ints(&c))
}

fn kappa_rational() -> impl Strategy<Value = KappaRational> {
    (unipoly(3), unipoly(3).prop_filter("nonzero", |d| !d.is_zero()))
        .prop_map(|(n, d)| KappaRational::normalize(n, d).unwrap())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-7i64..=7, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..4, 0u32..4), kappa_rational()), 0..5).prop_map(|ts| {
        BiPoly::from_terms(ts.into_iter().map(|((a, b), c)| (Weight::new(a, b), c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form(x in kappa_rational()) {
        prop_assert!(x.den().leading().unwrap() == &rat(1, 1));
        prop_assert!(UniPoly::gcd(x.num(), x.den()).is_one() || x.is_zero());
        if x.is_zero() {
            prop_assert!(x.den().is_one());
        }
    }

    #[test]
    fn field_axioms(a in kappa_rational(), b in kappa_rational(), c in kappa_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn eval_is_a_morphism(a in kappa_rational(), b in kappa_rational(), r in small_rational()) {
        if let (Ok(ea), Ok(eb)) = (a.eval(&r), b.eval(&r)) {
            prop_assert_eq!((&a + &b).eval(&r).unwrap(), &ea + &eb);
            prop_assert_eq!((&a * &b).eval(&r).unwrap(), &ea * &eb);
        }
    }

    #[test]
    fn shift_commutes_with_field_ops(a in kappa_rational(), b in kappa_rational(), d in -3i64..=3) {
        prop_assert_eq!((&a + &b).shift_kappa(d), &a.shift_kappa(d) + &b.shift_kappa(d));
        prop_assert_eq!((&a * &b).shift_kappa(d), &a.shift_kappa(d) * &b.shift_kappa(d));
        prop_assert_eq!(a.shift_kappa(d).shift_kappa(-d), a);
    }

    #[test]
    fn leibniz_rule(p in bipoly(), q in bipoly()) {
        for axis in [Axis::Z1, Axis::Z2] {
            let lhs = (&p * &q).partial(axis);
            let rhs = &(&p.partial(axis) * &q) + &(&p * &q.partial(axis));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn swap_and_shift_are_ring_morphisms(p in bipoly(), q in bipoly()) {
        prop_assert_eq!((&p * &q).swap_vars(), &p.swap_vars() * &q.swap_vars());
        prop_assert_eq!((&p + &q).swap_vars(), &p.swap_vars() + &q.swap_vars());
        prop_assert_eq!(p.swap_vars().swap_vars(), p.clone());
        prop_assert_eq!((&p * &q).shift_kappa(1), &p.shift_kappa(1) * &q.shift_kappa(1));
    }

    #[test]
    fn specialize_commutes(p in bipoly(), q in bipoly(), r in small_rational()) {
        if let (Ok(sp), Ok(sq)) = (p.specialize(&r), q.specialize(&r)) {
            prop_assert_eq!((&p + &q).specialize(&r).unwrap(), &sp + &sq);
            prop_assert_eq!((&p * &q).specialize(&r).unwrap(), &sp * &sq);
        }
    }

    #[test]
    fn specialization_consistency(m in 0u32..5, n in 0u32..5, p in 1i64..5, q in 1i64..4) {
        let r = rat(p, q);
        let sym = eigensolve(m, n).specialize(&r).unwrap();
        let specialized = eigensolve_specialized(m, n, &r, false).unwrap();
        prop_assert_eq!(sym.poly, specialized.poly);
    }
}
