//! Gaussian polynomials, q-shifted factorials, the doubly-bounded kernel
//! `B(L, M, a, b)`, the `G` and `D` alternating sums and the residue split
//! of `(q, q^2; q^3)_n`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::qcore::LaurentPoly;

/// An exact rational parameter kept in lowest terms with a positive
/// denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalParam(Ratio<i64>);

impl RationalParam {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalParam(Ratio::new(numerator, denominator)))
    }

    pub fn integer(n: i64) -> Self {
        RationalParam(Ratio::from_integer(n))
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl From<Ratio<i64>> for RationalParam {
    fn from(r: Ratio<i64>) -> Self {
        RationalParam(r)
    }
}

impl fmt::Display for RationalParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for RationalParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("cannot parse rational parameter {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse().map_err(|_| bad())?;
                let d = d.trim().parse().map_err(|_| bad())?;
                RationalParam::new(n, d)
            }
            None => Ok(RationalParam::integer(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

/// Converts a rational exponent to an integer, failing loudly when the
/// parameters make it fractional.
pub(crate) fn integral_exponent(e: Ratio<i64>, j: i64) -> Result<i64> {
    if e.is_integer() {
        Ok(e.to_integer())
    } else {
        Err(Error::NonIntegralExponent {
            j,
            num: *e.numer(),
            den: *e.denom(),
        })
    }
}

type QbinMemo = RwLock<HashMap<(i64, i64), Arc<LaurentPoly>>>;

static QBIN_MEMO: LazyLock<QbinMemo> = LazyLock::new(|| RwLock::new(HashMap::new()));
static ZERO: LazyLock<Arc<LaurentPoly>> = LazyLock::new(|| Arc::new(LaurentPoly::zero()));
static ONE: LazyLock<Arc<LaurentPoly>> = LazyLock::new(|| Arc::new(LaurentPoly::one()));

/// Shared handle to the Gaussian polynomial `[n, m]` in base `q`.
///
/// Built by the Pascal recurrence `[n, m] = [n-1, m-1] + q^m [n-1, m]` and
/// memoized under the normalized key `(n, min(m, n - m))`.
pub fn qbin_shared(n: i64, m: i64) -> Arc<LaurentPoly> {
    if m < 0 || n - m < 0 {
        return ZERO.clone();
    }
    if m == 0 || m == n {
        return ONE.clone();
    }
    let key = (n, m.min(n - m));
    if let Some(p) = QBIN_MEMO.read().unwrap().get(&key) {
        return p.clone();
    }
    let (n0, m0) = key;
    let left = qbin_shared(n0 - 1, m0 - 1);
    let right = qbin_shared(n0 - 1, m0);
    let value = Arc::new(left.as_ref() + &right.shift(m0));
    QBIN_MEMO.write().unwrap().entry(key).or_insert(value).clone()
}

/// The Gaussian polynomial `[n, m]` evaluated at `q^base_exp`.
///
/// Out-of-range arguments (`m < 0` or `n - m < 0`) give zero.
pub fn qbinomial(n: i64, m: i64, base_exp: i64) -> LaurentPoly {
    assert!(base_exp >= 1, "base exponent must be positive");
    qbin_shared(n, m).dilate(base_exp)
}

/// `(q; q)_n`.
pub fn q_poch(n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::NegativeLength(n));
    }
    Ok(poch_ratio(n, 0))
}

/// `(q; q)_top / (q; q)_bottom = prod_{k = bottom+1}^{top} (1 - q^k)` for
/// `0 <= bottom <= top`.
pub fn poch_ratio(top: i64, bottom: i64) -> LaurentPoly {
    assert!(0 <= bottom && bottom <= top, "poch_ratio needs 0 <= bottom <= top");
    let mut acc = LaurentPoly::one();
    for k in bottom + 1..=top {
        let factor = LaurentPoly::from_terms([(0, 1), (k, -1)]);
        acc = &acc * &factor;
    }
    acc
}

/// `(q; q)_top / prod_k (q; q)_{parts[k]}`, with `1/(q)_n = 0` for `n < 0`.
///
/// Requires `sum(parts) <= top`; the result is a q-multinomial coefficient
/// times a finite product and therefore a polynomial.
pub fn poch_quotient(top: i64, parts: &[i64]) -> LaurentPoly {
    if parts.iter().any(|p| *p < 0) {
        return LaurentPoly::zero();
    }
    let total: i64 = parts.iter().sum();
    assert!(total <= top, "poch_quotient: parts sum {total} exceeds {top}");
    let mut acc = poch_ratio(top, total);
    let mut remaining = total;
    for &p in parts {
        acc = &acc * qbin_shared(remaining, p).as_ref();
        remaining -= p;
    }
    acc
}

/// The kernel `B(L, M, a, b) = [L+M+a-b, L+a] [L+M-a+b, L-a]`.
pub fn b_kernel(l: i64, m: i64, a: i64, b: i64) -> LaurentPoly {
    if a.abs() > l || b.abs() > m {
        return LaurentPoly::zero();
    }
    let x = qbin_shared(l + m + a - b, l + a);
    let y = qbin_shared(l + m - a + b, l - a);
    x.as_ref() * y.as_ref()
}

fn check_k_multiple(name: &str, x: RationalParam, k: i64) -> Result<()> {
    if (x.ratio() * k).is_integer() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "K*{name} must be an integer (K = {k}, {name} = {x})"
        )))
    }
}

/// `G(N, M; alpha, beta, K) = sum_j (-1)^j q^{K j ((alpha+beta) j + alpha - beta)/2} [M+N, N-Kj]`.
pub fn g_poly(n: i64, m: i64, alpha: RationalParam, beta: RationalParam, k: i64) -> Result<LaurentPoly> {
    if k < 1 {
        return Err(Error::Domain(format!("K must be positive, got {k}")));
    }
    check_k_multiple("alpha", alpha, k)?;
    check_k_multiple("beta", beta, k)?;
    if m + n < 0 {
        return Ok(LaurentPoly::zero());
    }
    let (s, d) = (alpha.ratio() + beta.ratio(), alpha.ratio() - beta.ratio());
    // support: 0 <= N - K j <= M + N
    let j_lo = Integer::div_ceil(&(-m), &k);
    let j_hi = Integer::div_floor(&n, &k);
    let mut acc = LaurentPoly::zero();
    for j in j_lo..=j_hi {
        let e = Ratio::from_integer(k * j) * (s * j + d) / 2;
        let e = integral_exponent(e, j)?;
        let term = qbin_shared(m + n, n - k * j).shift(e);
        if j.is_odd() {
            acc -= &term;
        } else {
            acc += &term;
        }
    }
    Ok(acc)
}

/// The hook-difference generating function `D_{K,i}(N, M; alpha, beta)` as
/// a formal two-part alternating sum.
pub fn d_poly(k: i64, i: i64, n: i64, m: i64, alpha: RationalParam, beta: RationalParam) -> Result<LaurentPoly> {
    if k < 1 {
        return Err(Error::Domain(format!("K must be positive, got {k}")));
    }
    if m + n < 0 {
        return Ok(LaurentPoly::zero());
    }
    let (a, b) = (alpha.ratio(), beta.ratio());
    let s = a + b;
    // first sum: 0 <= M - K j <= M + N; second: 0 <= M - K j - i <= M + N
    let lo = Integer::div_ceil(&(-n), &k).min(Integer::div_ceil(&(-n - i), &k));
    let hi = Integer::div_floor(&m, &k).max(Integer::div_floor(&(m - i), &k));
    let mut acc = LaurentPoly::zero();
    for j in lo..=hi {
        let first = qbin_shared(m + n, m - k * j);
        if !first.is_zero() {
            let e = Ratio::from_integer(j) * (s * (k * j) + b * k - s * i);
            acc += first.shift(integral_exponent(e, j)?);
        }
        let second = qbin_shared(m + n, m - k * j - i);
        if !second.is_zero() {
            let e = (s * j + b) * (k * j + i);
            acc -= &second.shift(integral_exponent(e, j)?);
        }
    }
    Ok(acc)
}

/// Residue split of `(q, q^2; q^3)_n = A_n(q^3) - q B_n(q^3) - q^2 C_n(q^3)`.
pub fn borwein_split(n: i64) -> Result<(LaurentPoly, LaurentPoly, LaurentPoly)> {
    if n < 0 {
        return Err(Error::NegativeLength(n));
    }
    let mut prod = LaurentPoly::one();
    for k in 1..=n {
        let f = LaurentPoly::from_terms([(0, 1), (3 * k - 2, -1)]);
        let g = LaurentPoly::from_terms([(0, 1), (3 * k - 1, -1)]);
        prod = &(&prod * &f) * &g;
    }
    let mut parts: [Vec<(i64, BigInt)>; 3] = Default::default();
    for (e, c) in prod.terms() {
        let r = e.rem_euclid(3);
        let c = if r == 0 { c } else { -c };
        parts[r as usize].push((e / 3, c));
    }
    let [a, b, c] = parts;
    Ok((
        LaurentPoly::from_terms(a),
        LaurentPoly::from_terms(b),
        LaurentPoly::from_terms(c),
    ))
}

/// Reassembles `A(q^3) - q B(q^3) - q^2 C(q^3)`.
pub fn borwein_reassemble(a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly) -> LaurentPoly {
    &(&a.dilate(3) - &b.dilate(3).shift(1)) - &c.dilate(3).shift(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, c.to_vec())
    }

    fn r(n: i64, d: i64) -> RationalParam {
        RationalParam::new(n, d).unwrap()
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(2, 1, 1), p(&[1, 1]));
        assert_eq!(qbinomial(4, 2, 1), p(&[1, 1, 2, 1, 1]));
        assert!(qbinomial(3, -1, 1).is_zero());
        assert!(qbinomial(3, 4, 1).is_zero());
        assert_eq!(qbinomial(2, 1, 2), p(&[1, 0, 1]));
    }

    #[test]
    fn q_poch_examples() {
        assert_eq!(q_poch(0).unwrap(), LaurentPoly::one());
        assert_eq!(q_poch(2).unwrap(), p(&[1, -1, -1, 1]));
        for n in 0..=10 {
            assert_eq!(q_poch(n).unwrap().max_exp(), Some(n * (n + 1) / 2));
        }
        assert_eq!(q_poch(-1), Err(Error::NegativeLength(-1)));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(b_kernel(1, 1, 0, 0), p(&[1, 2, 1]));
        assert!(b_kernel(1, 1, 2, 0).is_zero());
        assert_eq!(b_kernel(1, 1, 1, 1), LaurentPoly::one());
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_poly(1, 1, r(1, 1), r(3, 2), 2).unwrap(), p(&[1, 1]));
        assert_eq!(g_poly(2, 2, r(1, 1), r(3, 2), 2).unwrap(), p(&[1, 1, 1, 0, 1]));
    }

    #[test]
    fn g_rejects_fractional_exponent() {
        let err = g_poly(3, 3, r(1, 2), r(1, 2), 1).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        // integral K alpha, K beta always give integral exponents
        assert!(g_poly(4, 4, r(1, 2), r(3, 2), 2).is_ok());
    }

    #[test]
    fn d_on_empty_board() {
        for i in [-2, -1, 1, 2, 3] {
            assert_eq!(d_poly(4, i, 0, 0, r(1, 1), r(1, 1)).unwrap(), LaurentPoly::one());
        }
    }

    #[test]
    fn borwein_small_cases() {
        let (a, b, c) = borwein_split(0).unwrap();
        assert_eq!(
            (a, b, c),
            (LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero())
        );
        let (a, b, c) = borwein_split(1).unwrap();
        assert_eq!(a, p(&[1, 1]));
        assert_eq!(b, LaurentPoly::one());
        assert_eq!(c, LaurentPoly::one());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!("3/2".parse::<RationalParam>().unwrap(), r(3, 2));
        assert_eq!("6/4".parse::<RationalParam>().unwrap(), r(3, 2));
        assert_eq!("2".parse::<RationalParam>().unwrap(), RationalParam::integer(2));
        assert!("1/0".parse::<RationalParam>().is_err());
        assert!("x".parse::<RationalParam>().is_err());
        assert_eq!(r(6, 4).to_string(), "3/2");
        assert_eq!(r(-2, -1).to_string(), "2");
    }
}
