use proptest::prelude::*;

use typeseq::invariants::{type_sequence, type_sequence_via_canonical, SemigroupContext};
use typeseq::{NumericalSemigroup, RelativeIdeal};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Semigroups with a few generators below 24 and conductor at most 48.
fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i64..24, 1..5)
        .prop_filter("coprime generators", |g| g.iter().fold(0, |acc, &x| gcd(acc, x)) == 1)
        .prop_map(|g| NumericalSemigroup::from_generators(&g).unwrap())
        .prop_filter("small conductor", |s| s.conductor() <= 48)
}

/// A semigroup together with ideal generators taken from its nonzero elements.
fn semigroup_and_ideal() -> impl Strategy<Value = (NumericalSemigroup, Vec<i64>)> {
    (semigroup(), prop::collection::vec(0usize..40, 1..4)).prop_map(|(s, picks)| {
        let pool: Vec<i64> = (1..s.conductor() + 12).filter(|&x| s.contains(x)).collect();
        let gens = picks.iter().map(|&k| pool[k % pool.len()]).collect();
        (s, gens)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn encodings_round_trip((s, gens) in semigroup_and_ideal()) {
        let back = NumericalSemigroup::parse_encoding(&s.encoding()).unwrap();
        prop_assert_eq!(&back, &s);
        let i = RelativeIdeal::from_generators(&s, &gens).unwrap();
        prop_assert_eq!(RelativeIdeal::parse_encoding(&s, &i.encoding()).unwrap(), i);
    }

    #[test]
    fn type_sequence_identities(s in semigroup()) {
        let ts = type_sequence(&s);
        prop_assert_eq!(&ts, &type_sequence_via_canonical(&s));
        let v = ts.values();
        prop_assert_eq!(v.len(), s.n());
        prop_assert_eq!(v.iter().sum::<i64>(), s.genus());
        prop_assert_eq!(v.iter().map(|r| r - 1).sum::<i64>(), 2 * s.genus() - s.conductor());
        if let Some(&r1) = v.first() {
            prop_assert_eq!(r1, s.cm_type());
            prop_assert!(v.iter().all(|&r| 1 <= r && r <= r1));
        }
    }

    #[test]
    fn semigroup_checks_pass(s in semigroup()) {
        let ctx = SemigroupContext::new(&s);
        let failed: Vec<_> = ctx.semigroup_checks().into_iter().filter(|c| !c.pass).collect();
        prop_assert!(failed.is_empty(), "{}: {:?}", s, failed);
    }

    #[test]
    fn ideal_checks_pass((s, gens) in semigroup_and_ideal()) {
        let ctx = SemigroupContext::new(&s);
        let i = RelativeIdeal::from_generators(&s, &gens).unwrap();
        let x = ctx.analyze(&i).unwrap();
        let failed: Vec<_> = ctx.ideal_checks(&x).into_iter().filter(|c| !c.pass).collect();
        prop_assert!(failed.is_empty(), "{} {}: {:?}", s, i, failed);
        prop_assert!(x.d >= 0);
        prop_assert_eq!(x.a + x.b, (ctx.r - 1) * x.l_r_over_i);
    }

    #[test]
    fn duality_laws((s, gens) in semigroup_and_ideal()) {
        let i = RelativeIdeal::from_generators(&s, &gens).unwrap();
        let k = s.canonical_ideal();
        // K:(K:I) = I, and the third dual is the first
        prop_assert_eq!(k.colon(&k.colon(&i).unwrap()).unwrap(), i.clone());
        prop_assert_eq!(i.dual().dual().dual(), i.dual());
        prop_assert!(i.is_subset_of(&i.bidual()));
        prop_assert!(i.bidual().is_subset_of(&i.integral_closure().unwrap()));
        prop_assert!(i.bidual().is_subset_of(&k.product(&i).unwrap()));
    }

    #[test]
    fn a_is_translation_invariant((s, gens) in semigroup_and_ideal(), pick in 0usize..8) {
        let ctx = SemigroupContext::new(&s);
        let i = RelativeIdeal::from_generators(&s, &gens).unwrap();
        let g = (1..).filter(|&x| s.contains(x)).nth(pick).unwrap();
        let (a, _) = ctx.ab(&i).unwrap();
        let (a_shift, _) = ctx.ab(&i.translate(g)).unwrap();
        prop_assert_eq!(a, a_shift);
        // d is not invariant under translation, but stays non-negative
        prop_assert!(ctx.analyze(&i.translate(g)).unwrap().d >= 0);
    }

    #[test]
    fn overring_checks_pass(s in semigroup().prop_filter("small genus", |s| s.genus() <= 12), pick in 0usize..64) {
        let overs = s.oversemigroups();
        let t = &overs[pick % overs.len()];
        let rep = SemigroupContext::new(&s).overring_report(t).unwrap();
        prop_assert!(rep.checks.iter().all(|c| c.pass), "{} in {}: {:?}", s, t, rep.checks);
        prop_assert_eq!(rep.length, s.genus() - t.genus());
    }
}

#[test]
fn d_changes_under_translation() {
    let s = NumericalSemigroup::from_generators(&[3, 7, 8]).unwrap();
    let ctx = SemigroupContext::new(&s);
    let i = RelativeIdeal::from_generators(&s, &[3, 7, 8]).unwrap();
    assert_eq!(i.encoding(), "3|3|6");
    assert_eq!(ctx.analyze(&i).unwrap().d, 0);
    assert_eq!(ctx.analyze(&i.translate(3)).unwrap().d, 1);
}
