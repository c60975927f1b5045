//! Exact Laurent polynomials in `q` over arbitrary-precision integers.
//!
//! Values are stored densely between the lowest and highest nonzero
//! exponent. Coefficients live in machine words while they fit and are
//! promoted to [`BigInt`] otherwise; the representation is canonical, so
//! structural equality is mathematical equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Coeffs {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// A finite Laurent polynomial `sum c_e q^e` with exact integer coefficients.
///
/// Canonical form: the zero polynomial has no stored terms, and otherwise
/// the lowest and highest stored coefficients are nonzero. Coefficients are
/// kept as `i64` exactly when every one of them fits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Coeffs,
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

fn trim_small(low: i64, mut v: Vec<i64>) -> (i64, Vec<i64>) {
    let Some(first) = v.iter().position(|c| *c != 0) else {
        return (0, Vec::new());
    };
    let last = v.iter().rposition(|c| *c != 0).unwrap();
    v.truncate(last + 1);
    v.drain(..first);
    (low + first as i64, v)
}

fn trim_big(low: i64, mut v: Vec<BigInt>) -> (i64, Vec<BigInt>) {
    let Some(first) = v.iter().position(|c| !c.is_zero()) else {
        return (0, Vec::new());
    };
    let last = v.iter().rposition(|c| !c.is_zero()).unwrap();
    v.truncate(last + 1);
    v.drain(..first);
    (low + first as i64, v)
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Coeffs::Small(Vec::new()),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c q^e`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        Self::from_big(exp, vec![c.into()])
    }

    /// Dense constructor: `coeffs[k]` is the coefficient of `q^(low + k)`.
    pub fn from_coeffs(low: i64, coeffs: Vec<i64>) -> Self {
        let (low, v) = trim_small(low, coeffs);
        LaurentPoly {
            low,
            coeffs: Coeffs::Small(v),
        }
    }

    /// Dense constructor over big integers.
    pub fn from_big(low: i64, coeffs: Vec<BigInt>) -> Self {
        let (low, v) = trim_big(low, coeffs);
        Self::canonical_big(low, v)
    }

    fn from_wide(low: i64, coeffs: Vec<i128>) -> Self {
        if coeffs.iter().all(|c| i64::try_from(*c).is_ok()) {
            Self::from_coeffs(low, coeffs.into_iter().map(|c| c as i64).collect())
        } else {
            Self::from_big(low, coeffs.into_iter().map(BigInt::from).collect())
        }
    }

    fn canonical_big(low: i64, v: Vec<BigInt>) -> Self {
        if v.iter().all(|c| c.to_i64().is_some()) {
            let small = v.iter().map(|c| c.to_i64().unwrap()).collect();
            LaurentPoly {
                low,
                coeffs: Coeffs::Small(small),
            }
        } else {
            LaurentPoly {
                low,
                coeffs: Coeffs::Big(v),
            }
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            v[(e - lo) as usize] += c;
        }
        Self::from_big(lo, v)
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    fn len(&self) -> usize {
        match &self.coeffs {
            Coeffs::Small(v) => v.len(),
            Coeffs::Big(v) => v.len(),
        }
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k >= self.len() as i64 {
            return BigInt::zero();
        }
        match &self.coeffs {
            Coeffs::Small(v) => BigInt::from(v[k as usize]),
            Coeffs::Big(v) => v[k as usize].clone(),
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        let low = self.low;
        match &self.coeffs {
            Coeffs::Small(v) => v
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(k, c)| (low + k as i64, BigInt::from(*c)))
                .collect(),
            Coeffs::Big(v) => v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (low + k as i64, c.clone()))
                .collect(),
        }
    }

    fn big_vec(&self) -> Vec<BigInt> {
        match &self.coeffs {
            Coeffs::Small(v) => v.iter().map(|c| BigInt::from(*c)).collect(),
            Coeffs::Big(v) => v.clone(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let v = self.big_vec().into_iter().map(|x| x * c).collect();
        Self::from_big(self.low, v)
    }

    /// The substitution `q -> 1/q`.
    pub fn inverse_q(&self) -> Self {
        let Some(hi) = self.max_exp() else {
            return Self::zero();
        };
        let coeffs = match &self.coeffs {
            Coeffs::Small(v) => Coeffs::Small(v.iter().rev().copied().collect()),
            Coeffs::Big(v) => Coeffs::Big(v.iter().rev().cloned().collect()),
        };
        LaurentPoly { low: -hi, coeffs }
    }

    /// The substitution `q -> q^k` for `k >= 1`.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let n = self.len();
        let span = (n - 1) * k as usize + 1;
        match &self.coeffs {
            Coeffs::Small(v) => {
                let mut out = vec![0i64; span];
                for (i, c) in v.iter().enumerate() {
                    out[i * k as usize] = *c;
                }
                LaurentPoly {
                    low: self.low * k,
                    coeffs: Coeffs::Small(out),
                }
            }
            Coeffs::Big(v) => {
                let mut out = vec![BigInt::zero(); span];
                for (i, c) in v.iter().enumerate() {
                    out[i * k as usize] = c.clone();
                }
                LaurentPoly {
                    low: self.low * k,
                    coeffs: Coeffs::Big(out),
                }
            }
        }
    }

    /// Drops every term with exponent above `max_exp`.
    pub fn truncate_above(&self, max_exp: i64) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) if hi <= max_exp => self.clone(),
            Some(_) if max_exp < self.low => Self::zero(),
            Some(_) => {
                let keep = (max_exp - self.low + 1) as usize;
                match &self.coeffs {
                    Coeffs::Small(v) => Self::from_coeffs(self.low, v[..keep].to_vec()),
                    Coeffs::Big(v) => Self::from_big(self.low, v[..keep].to_vec()),
                }
            }
        }
    }

    /// First negative coefficient in increasing exponent order.
    pub fn first_negative(&self) -> Option<(i64, BigInt)> {
        match &self.coeffs {
            Coeffs::Small(v) => v
                .iter()
                .position(|c| *c < 0)
                .map(|k| (self.low + k as i64, BigInt::from(v[k]))),
            Coeffs::Big(v) => v
                .iter()
                .position(|c| c.is_negative())
                .map(|k| (self.low + k as i64, v[k].clone())),
        }
    }

    /// Lowest exponent at which `self` and `other` differ.
    pub fn first_difference(&self, other: &LaurentPoly) -> Option<i64> {
        if self == other {
            return None;
        }
        let diff = self - other;
        diff.min_exp()
    }

    /// Sum of coefficients (the value at `q = 1`).
    pub fn eval_at_one(&self) -> BigInt {
        self.big_vec().into_iter().sum()
    }

    fn add_signed(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let lo = self.low.min(other.low);
        let hi = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let span = (hi - lo + 1) as usize;
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.coeffs, &other.coeffs) {
            let mut out = vec![0i64; span];
            let oa = (self.low - lo) as usize;
            out[oa..oa + a.len()].copy_from_slice(a);
            let ob = (other.low - lo) as usize;
            let mut overflow = false;
            for (k, c) in b.iter().enumerate() {
                let r = if negate {
                    out[ob + k].checked_sub(*c)
                } else {
                    out[ob + k].checked_add(*c)
                };
                match r {
                    Some(x) => out[ob + k] = x,
                    None => {
                        overflow = true;
                        break;
                    }
                }
            }
            if !overflow {
                return Self::from_coeffs(lo, out);
            }
        }
        let mut out = vec![BigInt::zero(); span];
        let oa = (self.low - lo) as usize;
        for (k, c) in self.big_vec().into_iter().enumerate() {
            out[oa + k] = c;
        }
        let ob = (other.low - lo) as usize;
        for (k, c) in other.big_vec().into_iter().enumerate() {
            if negate {
                out[ob + k] -= c;
            } else {
                out[ob + k] += c;
            }
        }
        Self::from_big(lo, out)
    }

    fn mul_impl(&self, other: &LaurentPoly, max_exp: Option<i64>) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let low = self.low + other.low;
        let full = self.len() + other.len() - 1;
        let span = match max_exp {
            Some(m) if m < low => return Self::zero(),
            Some(m) => full.min((m - low + 1) as usize),
            None => full,
        };
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.coeffs, &other.coeffs) {
            let ma = a.iter().map(|c| c.unsigned_abs()).max().unwrap() as u128;
            let mb = b.iter().map(|c| c.unsigned_abs()).max().unwrap() as u128;
            let terms = a.len().min(b.len()) as u128;
            let fits = ma
                .checked_mul(mb)
                .and_then(|p| p.checked_mul(terms))
                .is_some_and(|p| p < (1u128 << 126));
            if fits {
                let mut out = vec![0i128; span];
                for (i, x) in a.iter().enumerate() {
                    if i >= span {
                        break;
                    }
                    if *x == 0 {
                        continue;
                    }
                    let x = *x as i128;
                    let lim = b.len().min(span - i);
                    for (o, y) in out[i..i + lim].iter_mut().zip(&b[..lim]) {
                        *o += x * (*y as i128);
                    }
                }
                return Self::from_wide(low, out);
            }
        }
        let a = self.big_vec();
        let b = other.big_vec();
        let mut out = vec![BigInt::zero(); span];
        for (i, x) in a.iter().enumerate() {
            if i >= span {
                break;
            }
            if x.is_zero() {
                continue;
            }
            let lim = b.len().min(span - i);
            for (o, y) in out[i..i + lim].iter_mut().zip(&b[..lim]) {
                *o += x * y;
            }
        }
        Self::from_big(low, out)
    }

    /// Product with every term above `max_exp` discarded.
    pub fn mul_truncated(&self, other: &LaurentPoly, max_exp: i64) -> LaurentPoly {
        self.mul_impl(other, Some(max_exp))
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{self}]")
    }
}

/// Sorted `exponent:coefficient` pairs separated by single spaces; the zero
/// polynomial prints as the empty string.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{e}:{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        match &self.coeffs {
            Coeffs::Small(v) if v.iter().all(|c| *c != i64::MIN) => LaurentPoly {
                low: self.low,
                coeffs: Coeffs::Small(v.iter().map(|c| -c).collect()),
            },
            _ => LaurentPoly::from_big(self.low, self.big_vec().into_iter().map(|c| -c).collect()),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_signed(b, false));
forward_binop!(Sub, sub, |a, b| a.add_signed(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b, None));

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_signed(rhs, false);
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self = self.add_signed(&rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_signed(rhs, true);
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(0, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c.to_vec())
    }

    #[test]
    fn binomial_square() {
        let a = p(0, &[1, 1]);
        assert_eq!(&a * &a, p(0, &[1, 2, 1]));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let a = p(-2, &[3, 0, -1, 7]);
        let z = &a + &(-&a);
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
        assert_eq!(z.to_string(), "");
    }

    #[test]
    fn monomial_scaling() {
        assert_eq!(p(0, &[1, 1]).shift(-1), p(-1, &[1, 1]));
        assert_eq!(p(0, &[1, 1]).shift(-1).to_string(), "-1:1 0:1");
    }

    #[test]
    fn inverse_q_negates_exponents() {
        assert_eq!(p(0, &[1, 2, 1]).inverse_q(), p(-2, &[1, 2, 1]));
        assert!(LaurentPoly::zero().inverse_q().is_zero());
    }

    #[test]
    fn canonical_trims_zeros() {
        let a = p(-3, &[0, 0, 5, 0, 1, 0]);
        assert_eq!(a.min_exp(), Some(-1));
        assert_eq!(a.max_exp(), Some(1));
        assert_eq!(a.terms().len(), 2);
    }

    #[test]
    fn overflow_promotes_to_big_and_back() {
        let big = LaurentPoly::monomial(0, i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.coeff(0), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let sum = &big + &big;
        assert_eq!(sum.coeff(0), BigInt::from(i64::MAX) * 2);
        let back = &sum - &big;
        assert_eq!(back, big);
        assert!(matches!(back.coeffs, Coeffs::Small(_)));
    }

    #[test]
    fn truncated_product() {
        let a = p(0, &[1, 1, 1]);
        assert_eq!(a.mul_truncated(&a, 2), p(0, &[1, 2, 3]));
        assert!(a.mul_truncated(&a.shift(5), 3).is_zero());
    }

    #[test]
    fn dilation() {
        assert_eq!(p(1, &[1, -1]).dilate(3), p(3, &[1, 0, 0, -1]));
    }

    #[test]
    fn first_negative_and_difference() {
        let a = p(0, &[1, 0, 0, -1]);
        assert_eq!(a.first_negative(), Some((3, BigInt::from(-1))));
        assert_eq!(a.first_difference(&p(0, &[1])), Some(3));
        assert_eq!(a.first_difference(&a), None);
    }
}
