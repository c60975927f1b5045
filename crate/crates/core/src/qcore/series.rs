//! Power series in `q` truncated at a caller-supplied order.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Coefficients of `q^0..=q^order` of a formal power series.
///
/// Arithmetic between series of orders `T1` and `T2` yields order
/// `min(T1, T2)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncatedSeries {
    order: u32,
    poly: LaurentPoly,
}

/// Dense working buffer used while expanding products term by term.
fn dense(p: &LaurentPoly, order: u32) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); order as usize + 1];
    for (e, c) in p.truncate_above(order as i64).terms() {
        v[e as usize] = c;
    }
    v
}

/// In place multiplication by `1 - q^e`.
fn times_one_minus(v: &mut [BigInt], e: usize) {
    for k in (e..v.len()).rev() {
        let (lo, hi) = v.split_at_mut(k);
        hi[0] -= &lo[k - e];
    }
}

/// In place division by `1 - q^e` (multiplication by the geometric series).
fn over_one_minus(v: &mut [BigInt], e: usize) {
    for k in e..v.len() {
        let (lo, hi) = v.split_at_mut(k);
        hi[0] += &lo[k - e];
    }
}

impl TruncatedSeries {
    pub fn zero(order: u32) -> Self {
        TruncatedSeries {
            order,
            poly: LaurentPoly::zero(),
        }
    }

    pub fn one(order: u32) -> Self {
        TruncatedSeries {
            order,
            poly: LaurentPoly::one(),
        }
    }

    /// Truncates a polynomial without negative exponents to `order`.
    pub fn from_poly(p: &LaurentPoly, order: u32) -> Result<Self> {
        if let Some(lo) = p.min_exp() {
            if lo < 0 {
                return Err(Error::NegativeExponent(lo));
            }
        }
        Ok(TruncatedSeries {
            order,
            poly: p.truncate_above(order as i64),
        })
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        let order = coeffs.len() as u32 - 1;
        TruncatedSeries {
            order,
            poly: LaurentPoly::from_big(0, coeffs),
        }
    }

    fn from_dense(v: Vec<BigInt>) -> Self {
        Self::from_coeffs(v)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, k: u32) -> BigInt {
        self.poly.coeff(k as i64)
    }

    /// All `order + 1` coefficients, zeros included.
    pub fn coeffs(&self) -> Vec<BigInt> {
        dense(&self.poly, self.order)
    }

    /// The retained terms as a polynomial.
    pub fn as_poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn truncate(&self, order: u32) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            poly: self.poly.truncate_above(order as i64),
        }
    }

    /// Multiplies by a polynomial (negative exponents are rejected).
    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<Self> {
        let rhs = Self::from_poly(p, self.order)?;
        Ok(self * &rhs)
    }

    /// Multiplies by `q^k`, `k >= 0`.
    pub fn shift(&self, k: u32) -> Self {
        TruncatedSeries {
            order: self.order,
            poly: self.poly.shift(k as i64).truncate_above(self.order as i64),
        }
    }

    /// Divides by `(q^base; q^base)_n`.
    pub fn over_poch(&self, base: u32, n: u32) -> Self {
        assert!(base >= 1);
        if n == 0 || self.poly.is_zero() {
            return self.clone();
        }
        let mut v = dense(&self.poly, self.order);
        for k in 1..=n as usize {
            let e = k * base as usize;
            if e > self.order as usize {
                break;
            }
            over_one_minus(&mut v, e);
        }
        Self::from_dense(v)
    }

    /// Multiplies by `(q^base; q^base)_n`.
    pub fn times_poch(&self, base: u32, n: u32) -> Self {
        assert!(base >= 1);
        let mut v = dense(&self.poly, self.order);
        for k in 1..=n as usize {
            let e = k * base as usize;
            if e > self.order as usize {
                break;
            }
            times_one_minus(&mut v, e);
        }
        Self::from_dense(v)
    }

    /// Lowest exponent where the two series differ, compared up to the
    /// smaller order.
    pub fn first_difference(&self, other: &TruncatedSeries) -> Option<u32> {
        let t = self.order.min(other.order) as i64;
        let a = self.poly.truncate_above(t);
        let b = other.poly.truncate_above(t);
        a.first_difference(&b).map(|e| e as u32)
    }
}

/// Expands `prod (1 - q^e)^sign` to order `order`; a sign of `-1` denotes a
/// reciprocal factor, expanded as a geometric series.
pub fn ts_from_factors(factors: &[(i64, i32)], order: u32) -> Result<TruncatedSeries> {
    let mut v = vec![BigInt::zero(); order as usize + 1];
    v[0] = BigInt::from(1);
    for &(e, sign) in factors {
        if e <= 0 {
            return Err(Error::NonPositiveFactor(e));
        }
        if e > order as i64 {
            continue;
        }
        match sign {
            1 => times_one_minus(&mut v, e as usize),
            -1 => over_one_minus(&mut v, e as usize),
            s => {
                return Err(Error::Domain(format!("factor sign must be +1 or -1, got {s}")));
            }
        }
    }
    Ok(TruncatedSeries::from_dense(v))
}

/// Whether the polynomial `p` agrees with `s` on exponents `0..=order(s)`.
pub fn ts_equal_to(p: &LaurentPoly, s: &TruncatedSeries) -> Result<bool> {
    let t = TruncatedSeries::from_poly(p, s.order())?;
    Ok(t == *s)
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        TruncatedSeries {
            order,
            poly: (&self.poly + &rhs.poly).truncate_above(order as i64),
        }
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        TruncatedSeries {
            order,
            poly: (&self.poly - &rhs.poly).truncate_above(order as i64),
        }
    }
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        TruncatedSeries {
            order,
            poly: self.poly.mul_truncated(&rhs.poly, order as i64),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn partition_numbers() {
        let f: Vec<(i64, i32)> = (1..=5).map(|e| (e, -1)).collect();
        let s = ts_from_factors(&f, 5).unwrap();
        assert_eq!(ints(&s), vec![1, 1, 2, 3, 5, 7]);
    }

    #[test]
    fn single_factor_and_empty_product() {
        assert_eq!(ints(&ts_from_factors(&[(1, 1)], 3).unwrap()), vec![1, -1, 0, 0]);
        assert_eq!(ints(&ts_from_factors(&[], 3).unwrap()), vec![1, 0, 0, 0]);
    }

    #[test]
    fn rejects_nonpositive_exponent() {
        assert_eq!(ts_from_factors(&[(0, 1)], 3), Err(Error::NonPositiveFactor(0)));
        assert_eq!(ts_from_factors(&[(-2, -1)], 3), Err(Error::NonPositiveFactor(-2)));
    }

    #[test]
    fn equality_against_polynomials() {
        let p = LaurentPoly::from_coeffs(0, vec![1, 1]);
        let s = TruncatedSeries::from_coeffs(vec![1.into(), 1.into(), 1.into()]);
        assert!(!ts_equal_to(&p, &s).unwrap());
        let s2 = TruncatedSeries::from_poly(&p, 1).unwrap();
        assert!(ts_equal_to(&p, &s2).unwrap());
        assert!(ts_equal_to(&LaurentPoly::zero(), &TruncatedSeries::zero(4)).unwrap());
        let neg = LaurentPoly::monomial(-1, 1);
        assert_eq!(ts_equal_to(&neg, &s), Err(Error::NegativeExponent(-1)));
    }

    #[test]
    fn order_is_min_of_operands() {
        let a = TruncatedSeries::one(10);
        let b = TruncatedSeries::one(4);
        assert_eq!((&a * &b).order(), 4);
        assert_eq!((&a + &b).order(), 4);
    }

    #[test]
    fn poch_division_inverts_multiplication() {
        let s = TruncatedSeries::one(30).over_poch(2, 6).times_poch(2, 6);
        assert_eq!(s, TruncatedSeries::one(30));
    }
}
