use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use salient::series::{cf_series, expand_rational, TruncatedSeries};

const CAPS: [u32; 2] = [3, 4];

fn series_strategy() -> impl Strategy<Value = TruncatedSeries<BigRational>> {
    prop::collection::vec(((0u32..=3, 0u32..=4), -5i64..=5, 1i64..=3), 0..6).prop_map(|terms| {
        TruncatedSeries::from_terms(
            &["x", "y"],
            &CAPS,
            terms
                .into_iter()
                .map(|((a, b), n, d)| (vec![a, b], BigRational::new(n.into(), d.into()))),
        )
    })
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in series_strategy(), b in series_strategy(), c in series_strategy()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_commutes_and_distributes(a in series_strategy(), b in series_strategy(), c in series_strategy()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn inverse_is_exact_below_the_caps(a in series_strategy(), c in 1i64..=4) {
        let mut unit = a.clone();
        let zero = vec![0, 0];
        let shift = BigRational::from_integer(c.into()) - a.coefficient(&zero);
        unit.add_term(zero, shift);
        let inv = unit.inverse().unwrap();
        prop_assert_eq!(unit.mul(&inv), unit.one_like());
    }

    #[test]
    fn truncated_product_matches_full_product(a in series_strategy(), b in series_strategy()) {
        // recompute each coefficient of a*b by brute force over pairs of terms
        let p = a.mul(&b);
        for x in 0..=CAPS[0] {
            for y in 0..=CAPS[1] {
                let mut want = BigRational::zero();
                for (e, c) in a.terms() {
                    if e[0] <= x && e[1] <= y {
                        want += c * b.coefficient(&[x - e[0], y - e[1]]);
                    }
                }
                prop_assert_eq!(p.coefficient(&[x, y]), want);
            }
        }
    }
}

#[test]
fn division_by_a_series_without_constant_term_is_rejected() {
    assert!(expand_rational(&[1], &[0, 1], 4).is_err());
}

#[test]
fn squarefree_coefficients_count_classes() {
    let f = [1u64, 1, 2, 8, 42, 258, 1824];
    for n in 1..=7 {
        let caps = vec![1u32; n];
        let s = cf_series(n, &caps).unwrap();
        assert_eq!(s.coefficient(&caps), BigInt::from(f[n - 1]), "n = {n}");
    }
    let s = cf_series(1, &[6]).unwrap();
    assert!((0..=6).all(|r| s.coefficient(&[r]).is_one()));
}

#[test]
fn series_json_round_trips() {
    let s = cf_series(3, &[2, 1, 2]).unwrap();
    let text = serde_json::to_string(&s).unwrap();
    let back: TruncatedSeries<BigInt> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, s);
}
