use burge_core::qcombinat::{b_kernel, d_poly, g_poly, poch_ratio, q_poch, qbin_shared};
use burge_core::{LaurentPoly, RationalParam};
use proptest::prelude::*;

fn qbin(n: i64, m: i64) -> LaurentPoly {
    qbin_shared(n, m).as_ref().clone()
}

fn rat(n: i64, d: i64) -> RationalParam {
    RationalParam::new(n, d).unwrap()
}

#[test]
fn pascal_recurrences() {
    for n in 1..=20 {
        for m in 0..=n {
            let left = &qbin(n - 1, m) + &qbin(n - 1, m - 1).shift(n - m);
            let right = &qbin(n - 1, m - 1) + &qbin(n - 1, m).shift(m);
            assert_eq!(qbin(n, m), left, "n={n} m={m}");
            assert_eq!(qbin(n, m), right, "n={n} m={m}");
        }
    }
}

#[test]
fn binomial_reciprocity() {
    for n in 0..=15 {
        for m in 0..=n {
            assert_eq!(qbin(n, m).inverse_q(), qbin(n, m).shift(m * (m - n)));
        }
    }
}

#[test]
fn binomial_is_factorial_quotient() {
    for n in 0..=12 {
        for m in 0..=n {
            let lhs = &(&qbin(n, m) * &q_poch(m).unwrap()) * &q_poch(n - m).unwrap();
            assert_eq!(lhs, q_poch(n).unwrap());
        }
    }
}

#[test]
fn kernel_symmetry_and_reciprocity() {
    for l in 0..=8 {
        for m in 0..=8 {
            for a in -l..=l {
                for b in -m..=m {
                    let x = b_kernel(l, m, a, b);
                    assert_eq!(x, b_kernel(m, l, b, a));
                    assert_eq!(x, b_kernel(l, m, -a, -b));
                    assert_eq!(x.inverse_q(), x.shift(2 * a * b - 2 * l * m));
                }
            }
        }
    }
}

/// `B(L,M,a,b) (q)_{2L}` agrees with `[2L, L-a]` through `q^{M-|b|}`.
#[test]
fn kernel_large_m_window() {
    for l in 0..=4 {
        for m in 10..=14 {
            for a in -l..=l {
                for b in -m..=m {
                    let lhs = &b_kernel(l, m, a, b) * &q_poch(2 * l).unwrap();
                    let rhs = qbin(2 * l, l - a);
                    let window = m - b.abs();
                    let diff = lhs.first_difference(&rhs);
                    assert!(diff.is_none_or(|e| e > window), "L={l} M={m} a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn borwein_parts_reassemble() {
    use burge_core::qcombinat::{borwein_reassemble, borwein_split};
    for n in 0..=10 {
        let (a, b, c) = borwein_split(n).unwrap();
        let mut prod = LaurentPoly::one();
        for k in 1..=n {
            prod = &prod * &LaurentPoly::from_terms([(0, 1), (3 * k - 2, -1)]);
            prod = &prod * &LaurentPoly::from_terms([(0, 1), (3 * k - 1, -1)]);
        }
        assert_eq!(borwein_reassemble(&a, &b, &c), prod);
    }
}

#[test]
fn poch_ratio_is_rising_product() {
    for top in 0..=10 {
        for bottom in 0..=top {
            let lhs = &poch_ratio(top, bottom) * &q_poch(bottom).unwrap();
            assert_eq!(lhs, q_poch(top).unwrap());
        }
    }
}

/// `(N, M, K, K alpha, K beta)`.
fn g_params() -> impl Strategy<Value = (i64, i64, i64, i64, i64)> {
    (1i64..=4).prop_flat_map(|k| (0i64..=7, 0i64..=7, Just(k), -2 * k..=3 * k, -2 * k..=3 * k))
}

proptest! {
    #[test]
    fn g_recurrences((n, m, k, ka, kb) in g_params()) {
        prop_assume!(n >= 1 && m >= 1);
        let g = |n, m, ka, kb| g_poly(n, m, rat(ka, k), rat(kb, k), k).unwrap();
        let whole = g(n, m, ka, kb);
        prop_assert_eq!(&whole, &(&g(n, m - 1, ka, kb) + &g(n - 1, m, ka + k, kb - k).shift(m)));
        prop_assert_eq!(&whole, &(&g(n - 1, m, ka, kb) + &g(n, m - 1, ka - k, kb + k).shift(n)));
    }

    #[test]
    fn g_symmetry_and_reciprocity((n, m, k, ka, kb) in g_params()) {
        let g = |n, m, ka, kb| g_poly(n, m, rat(ka, k), rat(kb, k), k).unwrap();
        let whole = g(n, m, ka, kb);
        prop_assert_eq!(&whole, &g(m, n, kb, ka));
        let dual = g(n, m, k * k - ka - k * (n - m), k * k - kb + k * (n - m));
        prop_assert_eq!(whole.inverse_q(), dual.shift(-m * n));
    }

    #[test]
    fn g_is_hook_polynomial_at_double_k((n, m, k, ka, kb) in g_params()) {
        let g = g_poly(n, m, rat(ka, k), rat(kb, k), k).unwrap();
        let d = d_poly(2 * k, k, n, m, rat(ka, k), rat(kb, k)).unwrap();
        prop_assert_eq!(g, d);
    }
}
