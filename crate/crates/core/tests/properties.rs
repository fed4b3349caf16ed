use eo_core::algebra::Mobius;
use eo_core::catalan::CatalanTable;
use eo_core::hurwitz::HurwitzTable;
use eo_core::schur::{partitions, CharacterTable, Partition};
use eo_core::{Poly, Rational, RationalFunction, SparseLaurent, Var};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(p, q)| Rational::frac(p, q))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..5).prop_map(Poly::new)
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RationalFunction::new(n, d, Var::T).unwrap())
}

fn laurent(arity: usize) -> impl Strategy<Value = SparseLaurent> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, arity), -9i64..=9), 0..6).prop_map(move |terms| {
        let mut out = SparseLaurent::zero(arity);
        for (e, c) in terms {
            out = &out + &SparseLaurent::monomial(arity, &e, Rational::from(c));
        }
        out
    })
}

fn mobius() -> impl Strategy<Value = Mobius> {
    (-4i64..=4, -4i64..=4, -4i64..=4, -4i64..=4)
        .prop_filter("invertible", |(a, b, c, d)| a * d - b * c != 0)
        .prop_map(|(a, b, c, d)| Mobius::new(a, b, c, d))
}

fn profile() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=4, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_form_a_field(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!((&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a / &b) * &b, a);
        }
    }

    #[test]
    fn rationals_round_trip_through_strings(a in rational()) {
        let json = serde_json::to_string(&a).unwrap();
        prop_assert!(json.starts_with('"'));
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), a.clone());
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn polynomials_form_a_ring(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!((&p * &q).derivative(), &(&p.derivative() * &q) + &(&p * &q.derivative()));
    }

    #[test]
    fn division_with_remainder(p in poly(), d in nonzero_poly()) {
        let (q, r) = p.div_rem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, p);
        prop_assert!(r.degree() < d.degree() || r.is_zero());
    }

    #[test]
    fn rational_functions_are_canonical(f in ratfun(), g in ratfun()) {
        let sum = &f + &g;
        prop_assert_eq!(&sum - &g, f.clone());
        if !g.is_zero() {
            prop_assert_eq!(&(&f * &g).checked_div(&g).unwrap(), &f);
        }
        let json = serde_json::to_string(&sum).unwrap();
        prop_assert_eq!(serde_json::from_str::<RationalFunction>(&json).unwrap(), sum);
    }

    #[test]
    fn float_evaluation_matches_exact(f in ratfun(), x in rational()) {
        if let Ok(exact) = f.eval(&x) {
            let approx = f.eval_f64(x.to_f64());
            let scale = exact.to_f64().abs().max(1.0);
            prop_assert!((approx - exact.to_f64()).abs() <= 1e-9 * scale, "{} vs {}", approx, exact);
        }
    }

    #[test]
    fn mobius_substitution_composes(f in ratfun(), m1 in mobius(), m2 in mobius()) {
        let step = f.substitute_mobius(&m1, Var::T).unwrap().substitute_mobius(&m2, Var::T).unwrap();
        let once = f.substitute_mobius(&m1.after(&m2), Var::T).unwrap();
        prop_assert_eq!(step, once);
    }

    #[test]
    fn laurent_integration_inverts_differentiation(p in laurent(2), base in rational().prop_filter("nonzero", |b| !b.is_zero())) {
        let without_residue = SparseLaurent::from_terms(
            2,
            p.terms().filter(|(e, _)| e[0] != -1).map(|(e, c)| (e.clone(), c.clone())),
        );
        let integral = without_residue.integrate(0, &base).unwrap();
        prop_assert_eq!(integral.derivative(0), without_residue);
        prop_assert!(integral.substitute(0, &base).unwrap().is_zero());
    }

    #[test]
    fn laurent_multiplication_is_commutative(p in laurent(3), q in laurent(3)) {
        prop_assert_eq!(&p * &q, &q * &p);
        let back: SparseLaurent = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        if p.is_zero() {
            // The empty term list carries no arity.
            prop_assert!(back.is_zero());
        } else {
            prop_assert_eq!(back, p);
        }
    }

    #[test]
    fn catalan_counts_are_symmetric(g in 0u32..=1, mu in profile()) {
        let table = CatalanTable::new();
        let mut rev = mu.clone();
        rev.reverse();
        prop_assert_eq!(table.count(g, &mu).unwrap(), table.count(g, &rev).unwrap());
        if mu.iter().sum::<u32>() % 2 == 1 {
            prop_assert_eq!(table.count(g, &mu).unwrap(), 0.into());
        }
    }

    #[test]
    fn hurwitz_numbers_are_symmetric(g in 0u32..=1, mu in profile()) {
        let table = HurwitzTable::new();
        let mut rev = mu.clone();
        rev.rotate_left(1);
        let h = table.number(g, &mu).unwrap();
        prop_assert_eq!(&h, &table.number(g, &rev).unwrap());
        prop_assert!(!h.is_negative());
    }

    #[test]
    fn characters_satisfy_row_orthogonality(n in 1u32..=6, i in 0usize..11, j in 0usize..11) {
        let ps = partitions(n);
        let (mu, nu) = (&ps[i % ps.len()], &ps[j % ps.len()]);
        let chars = CharacterTable::new();
        let s: Rational = ps
            .iter()
            .map(|l| Rational::new(chars.character(mu, l).unwrap() * chars.character(nu, l).unwrap(), l.z()).unwrap())
            .sum();
        prop_assert_eq!(s, if mu == nu { Rational::one() } else { Rational::zero() });
    }

    #[test]
    fn conjugation_is_an_involution(parts in prop::collection::vec(1u32..=6, 0..6)) {
        let p = Partition::new(parts);
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().dimension(), p.dimension());
        prop_assert_eq!(p.conjugate().content_sum(), -p.content_sum());
    }
}
