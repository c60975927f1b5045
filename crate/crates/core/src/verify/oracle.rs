//! Independent reference computations: brute-force partition enumeration,
//! literal evaluation of explicit multiple sums, and infinite products
//! expanded two different ways.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::qcombinat::{qbin_shared, qbinomial};
use crate::qcore::{ts_from_factors, LaurentPoly, TruncatedSeries};

/// Generating function of the partitions with at most `m` parts, each at
/// most `n`, whose hook differences satisfy
///
/// * `lambda_r - lambda'_c >= beta - i + 1` on nodes with `r - c = 1 - beta`,
/// * `lambda_r - lambda'_c <= K - alpha - i - 1` on nodes with `r - c = alpha - 1`,
///
/// where only nodes of the Ferrers diagram itself are inspected.
///
/// Requires `alpha, beta >= 1` and `beta - i <= n - m <= K - alpha - i`.
pub fn partition_oracle(k: i64, i: i64, n: i64, m: i64, alpha: i64, beta: i64) -> Result<LaurentPoly> {
    if k < 1 {
        return Err(Error::Domain(format!("K must be positive, got {k}")));
    }
    if n < 0 || m < 0 {
        return Err(Error::Domain(format!("box sides must be nonnegative, got ({n}, {m})")));
    }
    if alpha < 1 || beta < 1 {
        return Err(Error::Domain(format!(
            "alpha and beta must be at least 1, got ({alpha}, {beta})"
        )));
    }
    if !(beta - i <= n - m && n - m <= k - alpha - i) {
        return Err(Error::Domain(format!(
            "need beta - i <= N - M <= K - alpha - i, got N - M = {}",
            n - m
        )));
    }
    let low = beta - i + 1;
    let high = k - alpha - i - 1;
    let mut counts = vec![0u64; (n * m) as usize + 1];
    let mut parts = vec![0i64; m as usize];
    enumerate_box(&mut parts, 0, n, &mut |lambda| {
        if hooks_ok(lambda, 1 - beta, low, alpha - 1, high) {
            counts[lambda.iter().sum::<i64>() as usize] += 1;
        }
    });
    Ok(LaurentPoly::from_terms(
        counts
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c > 0)
            .map(|(e, c)| (e as i64, BigInt::from(c))),
    ))
}

/// Calls `f` on every weakly decreasing sequence in `parts` with entries in
/// `0..=cap`.
fn enumerate_box(parts: &mut [i64], pos: usize, cap: i64, f: &mut impl FnMut(&[i64])) {
    if pos == parts.len() {
        f(parts);
        return;
    }
    for v in 0..=cap {
        parts[pos] = v;
        enumerate_box(parts, pos + 1, v, f);
    }
}

fn hooks_ok(lambda: &[i64], diag_low: i64, low: i64, diag_high: i64, high: i64) -> bool {
    let conj = |c: i64| lambda.iter().take_while(|&&p| p >= c).count() as i64;
    for (r0, &row) in lambda.iter().enumerate() {
        let r = r0 as i64 + 1;
        for c in 1..=row {
            let d = r - c;
            if d != diag_low && d != diag_high {
                continue;
            }
            let hd = row - conj(c);
            if d == diag_low && hd < low {
                return false;
            }
            if d == diag_high && hd > high {
                return false;
            }
        }
    }
    true
}

/// One summand of an explicit multiple sum: `q^exponent` times Gaussian
/// polynomials `[n, m]_{q^base}` divided by `(q^base; q^base)_n` factors.
#[derive(Debug, Clone, Default)]
pub struct Summand {
    pub exponent: i64,
    pub binomials: Vec<(i64, i64, i64)>,
    pub denominators: Vec<(u32, i64)>,
}

impl Summand {
    pub fn new(exponent: i64) -> Self {
        Summand {
            exponent,
            ..Default::default()
        }
    }

    pub fn binom(mut self, n: i64, m: i64) -> Self {
        self.binomials.push((n, m, 1));
        self
    }

    pub fn binom_base(mut self, n: i64, m: i64, base: i64) -> Self {
        self.binomials.push((n, m, base));
        self
    }

    pub fn over(mut self, base: u32, n: i64) -> Self {
        self.denominators.push((base, n));
        self
    }

    /// The summand as a polynomial; it must carry no denominators.
    pub fn poly(&self) -> LaurentPoly {
        assert!(self.denominators.is_empty(), "summand has denominators");
        if self.vanishes() {
            LaurentPoly::zero()
        } else {
            self.numerator()
        }
    }

    fn vanishes(&self) -> bool {
        self.binomials.iter().any(|&(n, m, _)| m < 0 || n - m < 0) || self.denominators.iter().any(|&(_, n)| n < 0)
    }

    fn numerator(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for &(n, m, base) in &self.binomials {
            if base == 1 {
                acc = &acc * qbin_shared(n, m).as_ref();
            } else {
                acc = &acc * &qbinomial(n, m, base);
            }
        }
        acc.shift(self.exponent)
    }
}

/// Sums `term` over all integer vectors in `0..=bound` of length `vars`,
/// with no denominators allowed.
pub fn explicit_poly(vars: usize, bound: i64, term: impl Fn(&[i64]) -> Option<Summand>) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero();
    let mut failure = None;
    each_vector(vars, bound, &mut |v| {
        let Some(s) = term(v) else { return };
        if !s.denominators.is_empty() {
            failure = Some(Error::Domain("a polynomial sum cannot carry denominators".into()));
            return;
        }
        if !s.vanishes() {
            acc += &s.numerator();
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}

/// Sums `term` as a power series to `order` over all vectors in
/// `0..=bound`; summands whose exponent exceeds `order` are dropped.
pub fn explicit_series(
    vars: usize,
    bound: i64,
    order: u32,
    term: impl Fn(&[i64]) -> Option<Summand>,
) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::zero(order);
    let mut failure = None;
    each_vector(vars, bound, &mut |v| {
        let Some(s) = term(v) else { return };
        if s.vanishes() || s.exponent > order as i64 {
            return;
        }
        if s.exponent < 0 {
            failure = Some(Error::NegativeExponent(s.exponent));
            return;
        }
        let mut t = match TruncatedSeries::from_poly(&s.numerator(), order) {
            Ok(t) => t,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        for &(base, n) in &s.denominators {
            t = t.over_poch(base, n as u32);
        }
        acc = &acc + &t;
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}

fn each_vector(vars: usize, bound: i64, f: &mut impl FnMut(&[i64])) {
    fn go(v: &mut Vec<i64>, vars: usize, bound: i64, f: &mut impl FnMut(&[i64])) {
        if v.len() == vars {
            f(v);
            return;
        }
        for x in 0..=bound {
            v.push(x);
            go(v, vars, bound, f);
            v.pop();
        }
    }
    go(&mut Vec::with_capacity(vars), vars, bound, f);
}

/// Largest `x >= 0` with `x^2 <= order`, plus one; a safe per-variable
/// bound when every variable appears squared in the exponent.
pub fn square_bound(order: u32) -> i64 {
    num_integer::Roots::sqrt(&(order as i64)) + 1
}

/// `(q^r, q^{c-r}, q^c; q^c)_oo / (q)_oo` to `order`, expanded once as a
/// product and once through the Jacobi triple product
/// `sum_j (-1)^j q^{c j(j-1)/2 + r j}`. The two must agree.
pub fn theta_quotient(r: i64, c: i64, order: u32) -> Result<TruncatedSeries> {
    if !(0 < r && r < c) {
        return Err(Error::Domain(format!("need 0 < r < c, got r = {r}, c = {c}")));
    }
    let t = order as i64;
    let mut factors = Vec::new();
    let mut k = 0;
    while k * c < t {
        for e in [k * c + r, k * c + c - r, k * c + c] {
            if e <= t {
                factors.push((e, 1));
            }
        }
        k += 1;
    }
    for e in 1..=t {
        factors.push((e, -1));
    }
    let by_product = ts_from_factors(&factors, order)?;

    let mut coeffs = vec![BigInt::from(0); order as usize + 1];
    let mut j = 0i64;
    loop {
        let mut any = false;
        for jj in if j == 0 { vec![0] } else { vec![j, -j] } {
            let e = c * jj * (jj - 1) / 2 + r * jj;
            if (0..=t).contains(&e) {
                any = true;
                let sign = if jj.rem_euclid(2) == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                coeffs[e as usize] += sign;
            }
        }
        if !any && j > 0 && c * j * (j - 1) / 2 - r * j > t {
            break;
        }
        j += 1;
    }
    let by_theta = TruncatedSeries::from_coeffs(coeffs).over_poch(1, order);

    if let Some(e) = by_product.first_difference(&by_theta) {
        return Err(Error::Domain(format!(
            "product expansions of (q^{r}, q^{}, q^{c}; q^{c}) disagree at q^{e}",
            c - r
        )));
    }
    Ok(by_product)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_box() {
        assert_eq!(partition_oracle(4, 2, 0, 0, 1, 1).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn vacuous_constraints_fill_the_box() {
        for (n, m) in [(2, 3), (3, 3), (4, 2)] {
            let got = partition_oracle(40, 20, n, m, 1, 1).unwrap();
            assert_eq!(got, *qbin_shared(n + m, m));
        }
    }

    #[test]
    fn oracle_rejects_bad_window() {
        assert!(partition_oracle(4, 2, 5, 0, 1, 1).is_err());
        assert!(partition_oracle(4, 2, 1, 1, 0, 1).is_err());
    }

    #[test]
    fn rogers_ramanujan_product() {
        // 1/((1-q)(1-q^4)(1-q^6)(1-q^9)...) through q^8
        let s = theta_quotient(2, 5, 8).unwrap();
        let want: Vec<i64> = vec![1, 1, 1, 1, 2, 2, 3, 3, 4];
        assert_eq!(s.coeffs(), want.into_iter().map(BigInt::from).collect::<Vec<_>>());
    }

    #[test]
    fn explicit_sum_of_squares() {
        // sum_n q^{n^2} / (q)_n through q^8
        let s = explicit_series(1, 3, 8, |v| Some(Summand::new(v[0] * v[0]).over(1, v[0]))).unwrap();
        assert_eq!(s, theta_quotient(2, 5, 8).unwrap());
    }
}
