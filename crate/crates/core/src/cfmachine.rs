//! Continued fractions of coprime pairs and the matrices built from them.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A pair of coprime integers with `1 <= b < a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoprimePair {
    a: i64,
    b: i64,
}

impl CoprimePair {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if b < 1 || b >= a || a.gcd(&b) != 1 {
            return Err(Error::InvalidPair { a, b });
        }
        Ok(CoprimePair { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `a < 2b`.
    pub fn below_double(&self) -> bool {
        self.a < 2 * self.b
    }

    /// `a > 2b`.
    pub fn above_double(&self) -> bool {
        self.a > 2 * self.b
    }

    /// `(a, a - b)`; `(2, 1)` maps to itself.
    pub fn mirror(&self) -> CoprimePair {
        CoprimePair {
            a: self.a,
            b: self.a - self.b,
        }
    }

    /// All valid pairs with `a <= a_max`, ordered by `(a, b)`.
    pub fn all_up_to(a_max: i64) -> Vec<CoprimePair> {
        let mut out = Vec::new();
        for a in 2..=a_max {
            for b in 1..a {
                if let Ok(p) = CoprimePair::new(a, b) {
                    out.push(p);
                }
            }
        }
        out
    }
}

impl fmt::Display for CoprimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Which of the two equivalent continued fraction expansions to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Rep {
    /// Last partial quotient at least two.
    #[default]
    LastAtLeastTwo,
    /// Last partial quotient equal to one.
    LastOne,
}

/// The expansion of `(a/b - 1)^{sign(a - 2b)}` together with its partial
/// sums.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CFData {
    pair: CoprimePair,
    quotients: Vec<i64>,
    t: Vec<i64>,
    rep: Rep,
}

impl CFData {
    pub fn pair(&self) -> CoprimePair {
        self.pair
    }

    /// Partial quotients `a_0..a_n`.
    pub fn quotients(&self) -> &[i64] {
        &self.quotients
    }

    /// Partial sums `t_0..t_{n+1}`.
    pub fn t(&self) -> &[i64] {
        &self.t
    }

    /// The order `n` (number of quotients minus one).
    pub fn order(&self) -> usize {
        self.quotients.len() - 1
    }

    /// `d(a, b) = t_{n+1}`.
    pub fn d(&self) -> usize {
        *self.t.last().unwrap() as usize
    }

    pub fn rep(&self) -> Rep {
        self.rep
    }
}

/// Regular continued fraction of `num/den > 0` with the Euclidean
/// algorithm; the last quotient is at least two unless the value is one.
fn euclid(mut num: i64, mut den: i64) -> Vec<i64> {
    let mut out = Vec::new();
    while den != 0 {
        let (q, r) = num.div_rem(&den);
        out.push(q);
        num = den;
        den = r;
    }
    out
}

fn partial_sums(q: &[i64]) -> Vec<i64> {
    let mut t = vec![0];
    for x in q {
        t.push(t.last().unwrap() + x);
    }
    t
}

/// Expands `cf(a, b)` in the requested representation. The pair `(2, 1)`
/// only has `[1]`.
pub fn cf_expand(p: CoprimePair, rep: Rep) -> CFData {
    let (a, b) = (p.a, p.b);
    let quotients = if a < 2 * b {
        euclid(b, a - b)
    } else if a > 2 * b {
        euclid(a - b, b)
    } else {
        vec![1]
    };
    let canonical = CFData {
        pair: p,
        t: partial_sums(&quotients),
        quotients,
        rep: Rep::LastAtLeastTwo,
    };
    if rep == Rep::LastOne && (a, b) != (2, 1) {
        cf_toggle_rep(&canonical).expect("pairs other than (2,1) have two expansions")
    } else {
        canonical
    }
}

/// Switches between `[c_0, .., c_n]` and `[c_0, .., c_n - 1, 1]`.
pub fn cf_toggle_rep(c: &CFData) -> Result<CFData> {
    if c.quotients == [1] {
        return Err(Error::NoAlternateRepresentation);
    }
    let mut q = c.quotients.clone();
    let rep = match c.rep {
        Rep::LastAtLeastTwo => {
            *q.last_mut().unwrap() -= 1;
            q.push(1);
            Rep::LastOne
        }
        Rep::LastOne => {
            q.pop();
            *q.last_mut().unwrap() += 1;
            Rep::LastAtLeastTwo
        }
    };
    Ok(CFData {
        pair: c.pair,
        t: partial_sums(&q),
        quotients: q,
        rep,
    })
}

/// The incidence matrix `I`, the Cartan-type matrix `C = 2 Id - I` and the
/// vectors `tau`, `taubar` of a continued fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanData {
    pub d: usize,
    pub incidence: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<i64>>,
    pub tau: Vec<i64>,
    pub taubar: Vec<i64>,
    /// `block_start[k]` is true when the 0-based index `k` opens a tadpole
    /// block, i.e. `k + 1 = t_j + 1` for some `j`.
    pub block_start: Vec<bool>,
}

impl CartanData {
    /// `sum_k C[j][k] m[k]` for a 0-based row.
    pub fn row_dot(&self, j: usize, m: &[i64]) -> i64 {
        let lo = j.saturating_sub(1);
        let hi = (j + 1).min(self.d - 1);
        (lo..=hi).map(|k| self.cartan[j][k] * m[k]).sum()
    }
}

pub fn build_cartan(c: &CFData) -> CartanData {
    let d = c.d();
    let ends = &c.t[1..];
    let mut incidence = vec![vec![0i64; d]; d];
    for j in 1..=d {
        let at_end = ends.contains(&(j as i64));
        for k in 1..=d {
            let delta = |x: usize, y: usize| i64::from(x == y);
            incidence[j - 1][k - 1] = if at_end {
                delta(j, k + 1) + delta(j, k) - delta(j + 1, k)
            } else {
                delta(j, k + 1) + delta(j + 1, k)
            };
        }
    }
    let cartan = (0..d)
        .map(|j| (0..d).map(|k| 2 * i64::from(j == k) - incidence[j][k]).collect())
        .collect();
    let mut tau = vec![2; d];
    tau[d - 1] = 1;
    let taubar = tau.iter().map(|t| 3 - t).collect();
    let starts = &c.t[..c.t.len() - 1];
    let block_start = (0..d).map(|k| starts.contains(&(k as i64))).collect();
    CartanData {
        d,
        incidence,
        cartan,
        tau,
        taubar,
        block_start,
    }
}

fn check_len(c: &CartanData, m: &[i64]) -> Result<()> {
    if m.len() != c.d {
        return Err(Error::DimensionMismatch {
            expected: c.d,
            got: m.len(),
        });
    }
    Ok(())
}

/// `n_j = L delta_{j,1} - (C m)_j`.
pub fn mn_solve(c: &CartanData, l: i64, m: &[i64]) -> Result<Vec<i64>> {
    check_len(c, m)?;
    Ok((0..c.d).map(|j| if j == 0 { l } else { 0 } - c.row_dot(j, m)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadVariant {
    /// `m C m`.
    Full,
    /// `mbar C m` with `mbar = (m_1, .., m_{d-1}, 0)`.
    Barred,
}

pub fn quad_form(c: &CartanData, m: &[i64], variant: QuadVariant) -> Result<i64> {
    check_len(c, m)?;
    let rows = match variant {
        QuadVariant::Full => c.d,
        QuadVariant::Barred => c.d - 1,
    };
    Ok((0..rows).map(|j| m[j] * c.row_dot(j, m)).sum())
}

/// The block-wise sum of squares `sum_j (m_{t_j+1}^2 + sum_k (m_k - m_{k+1})^2)`.
pub fn sum_of_squares(c: &CartanData, m: &[i64]) -> Result<i64> {
    check_len(c, m)?;
    Ok((0..c.d)
        .map(|k| {
            if c.block_start[k] {
                m[k] * m[k]
            } else {
                (m[k - 1] - m[k]).pow(2)
            }
        })
        .sum())
}

/// The shifted pair `(abar, bbar)` attached to `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BarPair {
    pub abar: i64,
    pub bbar: i64,
}

/// Value `p/q` of a finite regular continued fraction.
fn convergent(q: &[i64]) -> (i64, i64) {
    let (mut num, mut den) = (1i64, 0i64);
    for &x in q.iter().rev() {
        (num, den) = (x * num + den, num);
    }
    (num, den)
}

pub fn bar_pair(p: CoprimePair) -> BarPair {
    let (a, b) = (p.a, p.b);
    if b == 1 {
        return BarPair { abar: 1, bbar: 0 };
    }
    if b == a - 1 {
        return BarPair { abar: 1, bbar: 1 };
    }
    let cf = cf_expand(p, Rep::LastAtLeastTwo);
    let q = cf.quotients();
    let head = &q[..q.len() - 1];
    let expansion: Vec<i64> = if p.below_double() {
        std::iter::once(1).chain(head.iter().copied()).collect()
    } else {
        let mut v = head.to_vec();
        v[0] += 1;
        v
    };
    let (abar, bbar) = convergent(&expansion);
    BarPair { abar, bbar }
}

/// Which of the two shifted bosonic forms pairs with `H_{a,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HVariant {
    /// Linear term `4 abar b`.
    Ex1,
    /// Linear term `4 a bbar`.
    Ex2,
}

pub fn h_variant(p: CoprimePair) -> HVariant {
    let even = cf_expand(p, Rep::LastAtLeastTwo).order().is_multiple_of(2);
    if (p.below_double() && even) || (p.above_double() && !even) {
        HVariant::Ex1
    } else {
        HVariant::Ex2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: i64, b: i64) -> CoprimePair {
        CoprimePair::new(a, b).unwrap()
    }

    #[test]
    fn rejects_invalid_pairs() {
        assert!(CoprimePair::new(4, 2).is_err());
        assert!(CoprimePair::new(3, 3).is_err());
        assert!(CoprimePair::new(3, 0).is_err());
        assert!(CoprimePair::new(2, 3).is_err());
    }

    #[test]
    fn expansions() {
        assert_eq!(cf_expand(pair(7, 5), Rep::LastAtLeastTwo).quotients(), [2, 2]);
        assert_eq!(cf_expand(pair(7, 5), Rep::LastOne).quotients(), [2, 1, 1]);
        assert_eq!(cf_expand(pair(7, 5), Rep::LastOne).d(), 4);
        assert_eq!(cf_expand(pair(7, 5), Rep::LastAtLeastTwo).d(), 4);
        for rep in [Rep::LastAtLeastTwo, Rep::LastOne] {
            let c = cf_expand(pair(2, 1), rep);
            assert_eq!(c.quotients(), [1]);
            assert_eq!(c.d(), 1);
        }
        assert_eq!(cf_expand(pair(5, 3), Rep::LastOne).quotients(), [1, 1, 1]);
        assert_eq!(cf_expand(pair(19, 12), Rep::LastAtLeastTwo).quotients(), [1, 1, 2, 2]);
        assert_eq!(cf_expand(pair(19, 7), Rep::LastAtLeastTwo).quotients(), [1, 1, 2, 2]);
    }

    #[test]
    fn mirror_symmetry() {
        for p in CoprimePair::all_up_to(12) {
            for rep in [Rep::LastAtLeastTwo, Rep::LastOne] {
                assert_eq!(cf_expand(p, rep).quotients(), cf_expand(p.mirror(), rep).quotients());
            }
        }
    }

    #[test]
    fn toggling() {
        let c = cf_expand(pair(7, 5), Rep::LastAtLeastTwo);
        let t = cf_toggle_rep(&c).unwrap();
        assert_eq!(t.quotients(), [2, 1, 1]);
        assert_eq!(cf_toggle_rep(&t).unwrap(), c);
        let three = cf_expand(pair(4, 1), Rep::LastAtLeastTwo);
        assert_eq!(three.quotients(), [3]);
        assert_eq!(cf_toggle_rep(&three).unwrap().quotients(), [2, 1]);
        let two_one = cf_expand(pair(2, 1), Rep::LastAtLeastTwo);
        assert_eq!(cf_toggle_rep(&two_one), Err(Error::NoAlternateRepresentation));
    }

    #[test]
    fn matrices_for_seven_five() {
        let c = build_cartan(&cf_expand(pair(7, 5), Rep::LastOne));
        assert_eq!(
            c.incidence,
            vec![vec![0, 1, 0, 0], vec![1, 1, -1, 0], vec![0, 1, 1, -1], vec![0, 0, 1, 1]]
        );
        assert_eq!(
            c.cartan,
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 1, 1, 0],
                vec![0, -1, 1, 1],
                vec![0, 0, -1, 1]
            ]
        );
        assert_eq!(c.tau, vec![2, 2, 2, 1]);
        assert_eq!(c.taubar, vec![1, 1, 1, 2]);
        let c21 = build_cartan(&cf_expand(pair(2, 1), Rep::LastAtLeastTwo));
        assert_eq!(c21.incidence, vec![vec![1]]);
        assert_eq!(c21.cartan, vec![vec![1]]);
    }

    #[test]
    fn mn_examples() {
        let c21 = build_cartan(&cf_expand(pair(2, 1), Rep::LastAtLeastTwo));
        assert_eq!(mn_solve(&c21, 5, &[2]).unwrap(), vec![3]);
        let c = build_cartan(&cf_expand(pair(7, 5), Rep::LastOne));
        assert_eq!(mn_solve(&c, 3, &[0, 0, 0, 0]).unwrap(), vec![3, 0, 0, 0]);
        assert_eq!(mn_solve(&c, 3, &[1, 1, 1, 0]).unwrap(), vec![2, -1, 0, 1]);
        assert!(mn_solve(&c, 3, &[1]).is_err());
    }

    #[test]
    fn quad_examples() {
        let c = build_cartan(&cf_expand(pair(7, 5), Rep::LastOne));
        assert_eq!(quad_form(&c, &[1, 1, 0, 0], QuadVariant::Full).unwrap(), 1);
        assert_eq!(quad_form(&c, &[0; 4], QuadVariant::Full).unwrap(), 0);
        assert_eq!(quad_form(&c, &[0; 4], QuadVariant::Barred).unwrap(), 0);
        let m = [2, 3, 1, 4];
        assert_eq!(
            quad_form(&c, &m, QuadVariant::Full).unwrap(),
            sum_of_squares(&c, &m).unwrap()
        );
        assert_eq!(
            quad_form(&c, &m, QuadVariant::Barred).unwrap(),
            quad_form(&c, &m, QuadVariant::Full).unwrap() + m[3] * (m[2] - m[3])
        );
    }

    #[test]
    fn bar_examples() {
        assert_eq!(bar_pair(pair(19, 12)), BarPair { abar: 8, bbar: 5 });
        assert_eq!(bar_pair(pair(19, 7)), BarPair { abar: 8, bbar: 3 });
        assert_eq!(bar_pair(pair(3, 1)), BarPair { abar: 1, bbar: 0 });
        assert_eq!(bar_pair(pair(3, 2)), BarPair { abar: 1, bbar: 1 });
        assert_eq!(bar_pair(pair(2, 1)), BarPair { abar: 1, bbar: 0 });
    }

    #[test]
    fn variants() {
        assert_eq!(h_variant(pair(3, 2)), HVariant::Ex1);
        assert_eq!(h_variant(pair(3, 1)), HVariant::Ex2);
        assert_eq!(h_variant(pair(2, 1)), HVariant::Ex2);
    }
}
