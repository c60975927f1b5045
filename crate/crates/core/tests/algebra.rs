use burge_core::qcore::{lp_arith, lp_inverse_q, ts_from_factors, LpOp};
use burge_core::{LaurentPoly, TruncatedSeries};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..6, prop::collection::vec(-20i64..20, 0..7)).prop_map(|(low, c)| LaurentPoly::from_coeffs(low, c))
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn addition_commutes_and_cancels(a in small_poly(), b in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(lp_arith(&a, &b, LpOp::Sub), &a - &b);
    }

    #[test]
    fn inverse_q_is_multiplicative(a in small_poly(), b in small_poly()) {
        prop_assert_eq!(lp_inverse_q(&(&a * &b)), &lp_inverse_q(&a) * &lp_inverse_q(&b));
        prop_assert_eq!(lp_inverse_q(&lp_inverse_q(&a)), a);
    }

    #[test]
    fn shift_matches_monomial_product(a in small_poly(), k in -10i64..10) {
        prop_assert_eq!(lp_arith(&a, &LaurentPoly::zero(), LpOp::Shift(k)), &a * &LaurentPoly::monomial(k, 1));
    }

    #[test]
    fn canonical_form_is_structural(a in small_poly()) {
        // zero padding on either side does not change the value
        let mut c: Vec<i64> = vec![0, 0];
        let lo = a.min_exp().unwrap_or(0);
        if let Some(hi) = a.max_exp() {
            for e in lo..=hi {
                c.push(i64::try_from(a.coeff(e)).unwrap());
            }
        }
        c.extend([0, 0, 0]);
        prop_assert_eq!(LaurentPoly::from_coeffs(lo - 2, c), a);
    }
}

#[test]
fn rogers_ramanujan_partitions() {
    // parts congruent to 1 or 4 mod 5
    let factors: Vec<(i64, i32)> = (1..=10).filter(|e| e % 5 == 1 || e % 5 == 4).map(|e| (e, -1)).collect();
    let s = ts_from_factors(&factors, 10).unwrap();
    let want: Vec<BigInt> = [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6]
        .into_iter()
        .map(BigInt::from)
        .collect();
    assert_eq!(s.coeffs(), want);
}

#[test]
fn series_division_inverts_multiplication() {
    let one = TruncatedSeries::one(30);
    assert_eq!(one.over_poch(1, 30).times_poch(1, 30), one);
    assert_eq!(one.over_poch(2, 7).times_poch(2, 7), one);
}
