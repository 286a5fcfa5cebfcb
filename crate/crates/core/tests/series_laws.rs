use proptest::prelude::*;

use walsh::compose::{specialize_tilde, tilde_of_composition};
use walsh::cores::walsh_k5;
use walsh::enumerate::PlanarNetworkData;
use walsh::series::{ratio, IndexSeries, Monomial, VarRef};

fn variable() -> impl Strategy<Value = VarRef> {
    prop_oneof![
        (1u32..4).prop_map(VarRef::a),
        (1u32..4).prop_map(VarRef::b),
        (1u32..3).prop_map(VarRef::c),
        (1u32..3).prop_map(VarRef::beta),
        Just(VarRef::x()),
        Just(VarRef::y()),
    ]
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((variable(), 1u32..4), 0..4).prop_map(Monomial::from_pairs)
}

fn series() -> impl Strategy<Value = IndexSeries> {
    prop::collection::vec((monomial(), -5i64..6, 1i64..4), 0..6).prop_map(|terms| {
        IndexSeries::from_terms(terms.into_iter().map(|(m, p, q)| (m, ratio(p, q))))
    })
}

/// Series whose variables are all cylindrical edge or vertex variables,
/// so they specialize to counting-free bivariate polynomials.
fn ab_series() -> impl Strategy<Value = IndexSeries> {
    let var = prop_oneof![(1u32..3).prop_map(VarRef::a), (1u32..3).prop_map(VarRef::b)];
    prop::collection::vec((prop::collection::vec((var, 1u32..3), 0..3), 1i64..4), 0..5).prop_map(
        |terms| {
            IndexSeries::from_terms(
                terms
                    .into_iter()
                    .map(|(m, c)| (Monomial::from_pairs(m), ratio(c, 1))),
            )
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(f in series(), g in series(), h in series()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f - &f, IndexSeries::zero());
        prop_assert_eq!(&f * &IndexSeries::one(), f.clone());
    }

    #[test]
    fn reindex_is_a_ring_map(f in series(), g in series(), j in 1u32..4, k in 1u32..4) {
        prop_assert_eq!((&f * &g).reindex(k), &f.reindex(k) * &g.reindex(k));
        prop_assert_eq!((&f + &g).reindex(k), &f.reindex(k) + &g.reindex(k));
        prop_assert_eq!(f.reindex(j).reindex(k), f.reindex(j * k));
    }

    #[test]
    fn truncation_commutes_with_products(f in series(), g in series(), t in 0u32..8) {
        let truncated = &f.clone().truncate(t) * &g.clone().truncate(t);
        prop_assert_eq!(truncated, (&f * &g).truncate(t));
    }

    #[test]
    fn substitution_composes(f in series(), s1 in series(), s2 in series()) {
        // Substituting b1 -> s1 and then y -> s2 equals substituting
        // b1 -> s1(y -> s2) into f(y -> s2).
        let b1 = VarRef::b(1);
        let y = VarRef::y();
        let two_step = f
            .substitute_with(None, |v| (v == b1).then(|| s1.clone()))
            .unwrap()
            .substitute_with(None, |v| (v == y).then(|| s2.clone()))
            .unwrap();
        let inner = s1.substitute_with(None, |v| (v == y).then(|| s2.clone())).unwrap();
        let one_step = f
            .substitute_with(None, |v| {
                if v == b1 {
                    Some(inner.clone())
                } else if v == y {
                    Some(s2.clone())
                } else {
                    None
                }
            })
            .unwrap();
        prop_assert_eq!(two_step, one_step);
    }

    #[test]
    fn specialization_is_multiplicative(f in ab_series(), g in ab_series()) {
        let lhs = specialize_tilde(&(&f * &g)).unwrap();
        let rhs = &specialize_tilde(&f).unwrap() * &specialize_tilde(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_is_a_derivation(f in series(), g in series()) {
        let v = VarRef::b(1);
        let lhs = (&f * &g).partial_derivative(v);
        let rhs = &(&f.partial_derivative(v) * &g) + &(&f * &g.partial_derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_text_round_trips(f in series(), t in prop::option::of(0u32..10)) {
        let f = match t { Some(t) => f.truncate(t), None => f };
        let text = f.to_canonical_text();
        prop_assert_eq!(IndexSeries::parse_canonical_text(&text).unwrap(), f);
    }

    #[test]
    fn monomials_print_and_parse(m in monomial()) {
        prop_assert_eq!(m.to_string().parse::<Monomial>().unwrap(), m);
    }

    #[test]
    fn raising_the_order_keeps_coefficients(lo in 5u32..9, extra in 0u32..3) {
        let nets = PlanarNetworkData::embedded().series();
        let hi = (lo + extra).min(9);
        let small = tilde_of_composition(&walsh_k5(), &nets, Some(lo)).unwrap();
        let large = tilde_of_composition(&walsh_k5(), &nets, Some(hi)).unwrap();
        prop_assert_eq!(small, large.truncate(lo));
    }
}
