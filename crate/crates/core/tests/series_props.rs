use lampart_core::qfactory::{geometric, pochhammer, Base, GeometricSpec, PochhammerSpec};
use lampart_core::TruncatedSeries;
use num_bigint::BigInt;
use proptest::prelude::*;

fn series_of(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-1000i64..1000, order + 1)
        .prop_map(|c| TruncatedSeries::from_i64s(&c).unwrap())
}

fn triple() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
    (0usize..=64).prop_flat_map(|n| (series_of(n), series_of(n), series_of(n)))
}

fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
    (0usize..=64, prop::bool::ANY).prop_flat_map(|(n, negative)| {
        prop::collection::vec(-50i64..50, n + 1).prop_map(move |mut c| {
            c[0] = if negative { -1 } else { 1 };
            TruncatedSeries::from_i64s(&c).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn add_commutes((a, b, _) in triple()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
    }

    #[test]
    fn add_associates((a, b, c) in triple()) {
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn mul_commutes((a, b, _) in triple()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn mul_associates((a, b, c) in triple()) {
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn mul_distributes((a, b, c) in triple()) {
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn identities((a, _, _) in triple()) {
        let n = a.order();
        prop_assert_eq!(a.mul(&TruncatedSeries::one(n)).unwrap(), a.clone());
        prop_assert_eq!(a.add(&TruncatedSeries::zero(n)).unwrap(), a.clone());
        prop_assert_eq!(a.sub(&a).unwrap(), TruncatedSeries::zero(n));
        prop_assert_eq!(a.add(&a.neg()).unwrap(), TruncatedSeries::zero(n));
    }

    #[test]
    fn invert_round_trip(a in unit_series()) {
        let r = a.invert().unwrap();
        prop_assert_eq!(a.mul(&r).unwrap(), TruncatedSeries::one(a.order()));
        prop_assert_eq!(r.invert().unwrap(), a);
    }

    #[test]
    fn truncation_commutes_with_operations(
        (a, b, _) in triple(),
        u in unit_series(),
        cut in 0usize..=64,
    ) {
        let m = cut.min(a.order());
        let t = |s: &TruncatedSeries, m| s.truncate(m).unwrap();
        prop_assert_eq!(t(&a.add(&b).unwrap(), m), t(&a, m).add(&t(&b, m)).unwrap());
        prop_assert_eq!(t(&a.sub(&b).unwrap(), m), t(&a, m).sub(&t(&b, m)).unwrap());
        prop_assert_eq!(t(&a.mul(&b).unwrap(), m), t(&a, m).mul(&t(&b, m)).unwrap());
        prop_assert_eq!(t(&a.neg(), m), t(&a, m).neg());
        let mu = cut.min(u.order());
        prop_assert_eq!(t(&u.invert().unwrap(), mu), t(&u, mu).invert().unwrap());
    }

    #[test]
    fn builders_truncate_coherently(
        offset in 1usize..8,
        step in 1usize..8,
        k in 0usize..10,
        d in 1usize..10,
        big in 0usize..=64,
        small in 0usize..=64,
    ) {
        let (big, small) = (big.max(small), big.min(small));
        let spec = PochhammerSpec::shared_step(&[(Base::Positive, offset), (Base::Negated, offset + 1)], step).unwrap();
        prop_assert_eq!(pochhammer(&spec, big).truncate(small).unwrap(), pochhammer(&spec, small));
        let g = GeometricSpec::new(k, d).unwrap();
        prop_assert_eq!(geometric(&g, big).truncate(small).unwrap(), geometric(&g, small));
    }

    #[test]
    fn geometric_is_shifted_inverse(k in 0usize..70, d in 1usize..70, order in 0usize..=64) {
        let denom = TruncatedSeries::one(order)
            .sub(&TruncatedSeries::monomial(1, d, order))
            .unwrap();
        let expected = TruncatedSeries::monomial(1, k, order)
            .mul(&denom.invert().unwrap())
            .unwrap();
        prop_assert_eq!(geometric(&GeometricSpec::new(k, d).unwrap(), order), expected);
    }

    #[test]
    fn negated_products_are_nonnegative(offset in 1usize..10, step in 1usize..10, order in 0usize..=64) {
        let spec = PochhammerSpec::single(Base::Negated, offset, step).unwrap();
        let s = pochhammer(&spec, order);
        prop_assert!(s.coeffs().iter().all(|c| *c >= BigInt::from(0)));
    }

    #[test]
    fn binomial_product_matches_dense((a, _, _) in triple(), c in -5i64..5, e in 1usize..70) {
        let n = a.order();
        let two_term = TruncatedSeries::one(n)
            .add(&TruncatedSeries::monomial(c, e, n))
            .unwrap();
        prop_assert_eq!(a.mul_binomial(&BigInt::from(c), e), a.mul(&two_term).unwrap());
    }
}
