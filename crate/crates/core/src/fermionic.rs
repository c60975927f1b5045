//! Fermionic lattice sums `F`, `f`, `H`, `I` and their limits, evaluated
//! by exhaustive enumeration of the (finite, or exponent-bounded) support.
//!
//! Polynomial modes enumerate `m_1..m_d` directly. Every contributing point
//! has `m_j <= L` (resp. `<= M` in the large-`L` limit); the search can be
//! widened with a slack argument to confirm the support is exhausted.
//! Series modes prune on the exponent, which is a sum of nonnegative
//! squares accumulated variable by variable.

use std::sync::Arc;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::cfmachine::{build_cartan, cf_expand, CFData, CartanData, CoprimePair, QuadVariant, Rep};
use crate::error::{Error, Result};
use crate::qcombinat::{poch_quotient, poch_ratio, qbin_shared};
use crate::qcore::{LaurentPoly, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Exponent `mCm`.
    F,
    /// Exponent `mbar C m`.
    LittleF,
    /// Exponent `mCm + A_m` with shifted binomials.
    H,
    /// Binomials in base `q^{taubar_j}`.
    I,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::F => "F",
            Family::LittleF => "f",
            Family::H => "H",
            Family::I => "I",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundMode {
    /// The polynomial `X(L, M)`.
    Double { l: i64, m: i64 },
    /// `(q)_{2L} lim_{M -> oo} X(L, M)`.
    LimitM { l: i64 },
    /// `(q)_{2M} lim_{L -> oo} X(L, M)`.
    LimitL { m: i64 },
    /// Both bounds removed, as a series truncated at `order`.
    LimitBoth { order: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermionicSpec {
    pub pair: CoprimePair,
    pub family: Family,
    pub bound_mode: BoundMode,
    pub cf: CFData,
    pub cartan: CartanData,
}

impl FermionicSpec {
    /// Uses the expansion whose last partial quotient is at least two.
    pub fn new(pair: CoprimePair, family: Family, bound_mode: BoundMode) -> Self {
        Self::with_rep(pair, family, bound_mode, Rep::LastAtLeastTwo)
    }

    pub fn with_rep(pair: CoprimePair, family: Family, bound_mode: BoundMode, rep: Rep) -> Self {
        let cf = cf_expand(pair, rep);
        let cartan = build_cartan(&cf);
        FermionicSpec {
            pair,
            family,
            bound_mode,
            cf,
            cartan,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FermionicValue {
    Poly(LaurentPoly),
    Series(TruncatedSeries),
}

impl FermionicValue {
    pub fn into_poly(self) -> Option<LaurentPoly> {
        match self {
            FermionicValue::Poly(p) => Some(p),
            FermionicValue::Series(_) => None,
        }
    }

    pub fn into_series(self) -> Option<TruncatedSeries> {
        match self {
            FermionicValue::Series(s) => Some(s),
            FermionicValue::Poly(_) => None,
        }
    }
}

/// A contributing summation vector with its auxiliary `n` and exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePoint {
    pub m: Vec<i64>,
    pub n: Vec<i64>,
    pub weight_exponent: i64,
}

/// Cases whose values are fixed separately rather than by the general
/// formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialCase {
    /// `f_{2,1}(L, M) = sum_m q^{Lm} [2L+M-m, 2L] [L, m]`.
    LittleF21,
    /// `f_{2,1}(L) = sum_m q^{Lm} [L, m]`.
    LittleF21LimitM,
    /// `ftilde_{a,1}(M) = Ftilde_{a-1,1}(M)` and `ftilde_{2,1}(M) = (q)_{2M}/(q)_M`.
    LittleFTildeA1,
    /// The `(a, 1)` series of the `f` family is the `(a-1, 1)` series of `F`;
    /// for `(2, 1)` it is `1`.
    LittleFSeriesA1,
    /// `H_{2,1}(L, M) = sum_n q^{n^2} [2L+M-n-1, 2L-1] [L-1, n]`.
    H21,
    /// `(q)_{2L} lim H_{2,1}(L, M) = (1 - q^{2L}) sum_n q^{n^2} [L-1, n]`.
    H21LimitM,
}

pub fn special_case(family: Family, pair: CoprimePair, mode: BoundMode) -> Option<SpecialCase> {
    use BoundMode::*;
    use Family::*;
    match (family, pair.a(), pair.b(), mode) {
        (LittleF, 2, 1, Double { .. }) => Some(SpecialCase::LittleF21),
        (LittleF, 2, 1, LimitM { .. }) => Some(SpecialCase::LittleF21LimitM),
        (LittleF, _, 1, LimitL { .. }) => Some(SpecialCase::LittleFTildeA1),
        (LittleF, _, 1, LimitBoth { .. }) => Some(SpecialCase::LittleFSeriesA1),
        (H, 2, 1, Double { .. }) => Some(SpecialCase::H21),
        (H, 2, 1, LimitM { .. }) => Some(SpecialCase::H21LimitM),
        _ => None,
    }
}

fn eval_special(case: SpecialCase, spec: &FermionicSpec) -> Result<FermionicValue> {
    let poly = |p| Ok(FermionicValue::Poly(p));
    match (case, spec.bound_mode) {
        (SpecialCase::LittleF21, BoundMode::Double { l, m }) => poly(
            (0..=l)
                .map(|k| qbin_shared(2 * l + m - k, 2 * l).as_ref() * qbin_shared(l, k).as_ref())
                .enumerate()
                .map(|(k, t)| t.shift(l * k as i64))
                .sum(),
        ),
        (SpecialCase::LittleF21LimitM, BoundMode::LimitM { l }) => {
            poly((0..=l).map(|k| qbin_shared(l, k).shift(l * k)).sum())
        }
        (SpecialCase::LittleFTildeA1, BoundMode::LimitL { m }) => {
            if spec.pair.a() == 2 {
                poly(poch_ratio(2 * m, m))
            } else {
                let lower = CoprimePair::new(spec.pair.a() - 1, 1)?;
                evaluate(&FermionicSpec::new(lower, Family::F, spec.bound_mode))
            }
        }
        (SpecialCase::LittleFSeriesA1, BoundMode::LimitBoth { order }) => {
            if spec.pair.a() == 2 {
                Ok(FermionicValue::Series(TruncatedSeries::one(order as u32)))
            } else {
                let lower = CoprimePair::new(spec.pair.a() - 1, 1)?;
                evaluate(&FermionicSpec::new(lower, Family::F, spec.bound_mode))
            }
        }
        (SpecialCase::H21, BoundMode::Double { l, m }) => poly(
            (0..l.max(0))
                .map(|n| {
                    (qbin_shared(2 * l + m - n - 1, 2 * l - 1).as_ref() * qbin_shared(l - 1, n).as_ref()).shift(n * n)
                })
                .sum(),
        ),
        (SpecialCase::H21LimitM, BoundMode::LimitM { l }) => {
            let s: LaurentPoly = (0..l.max(0)).map(|n| qbin_shared(l - 1, n).shift(n * n)).sum();
            poly(&s - &s.shift(2 * l))
        }
        _ => unreachable!("special case dispatched for a mismatched bound mode"),
    }
}

/// One factor `[tau m + n + up, tau m + low]` evaluated at `q^base`.
#[derive(Debug, Clone, Copy)]
struct Row {
    tau: i64,
    up: i64,
    low: i64,
    base: i64,
}

impl Row {
    fn feasible(&self, m: i64, n: i64) -> bool {
        self.tau * m + self.low >= 0 && n + self.up - self.low >= 0
    }

    fn binom(&self, m: i64, n: i64) -> Arc<LaurentPoly> {
        let p = qbin_shared(self.tau * m + n + self.up, self.tau * m + self.low);
        if self.base == 1 {
            p
        } else {
            Arc::new(p.dilate(self.base))
        }
    }
}

fn rows_for(spec: &FermionicSpec) -> Vec<Row> {
    let c = &spec.cartan;
    let d = c.d;
    (0..d)
        .map(|j| {
            let (up, low) = if spec.family == Family::H {
                (-i64::from(j + 1 == d), -i64::from(j + 2 == d))
            } else {
                (0, 0)
            };
            let base = if spec.family == Family::I { c.taubar[j] } else { 1 };
            Row {
                tau: c.tau[j],
                up,
                low,
                base,
            }
        })
        .collect()
}

/// Extra exponent beyond `mCm` for `f` and `H`, in m-coordinates.
fn family_extra(family: Family, m: &[i64]) -> i64 {
    let d = m.len();
    match family {
        Family::LittleF if d >= 2 => m[d - 1] * (m[d - 2] - m[d - 1]),
        Family::H => 2 * m[d - 1] - 2 * m[d - 2] + 1,
        _ => 0,
    }
}

/// Contribution of variable `k` to the block-wise sum of squares.
fn square_increment(c: &CartanData, m: &[i64], k: usize) -> i64 {
    if c.block_start[k] {
        m[k] * m[k]
    } else {
        (m[k - 1] - m[k]).pow(2)
    }
}

/// Range of values for variable `k` compatible with a remaining exponent
/// budget, given the fixed bounds `lo..=hi`.
fn budget_range(c: &CartanData, m: &[i64], k: usize, rem: Option<i64>, lo: i64, hi: i64) -> (i64, i64) {
    match rem {
        None => (lo, hi),
        Some(rem) => {
            let r = rem.sqrt();
            if c.block_start[k] {
                (lo, hi.min(r))
            } else {
                (lo.max(m[k - 1] - r), hi.min(m[k - 1] + r))
            }
        }
    }
}

/// Depth-first walk over `m_1..m_d` in m-coordinates.
struct MWalk<'a> {
    c: &'a CartanData,
    rows: &'a [Row],
    l: i64,
    /// Rows below this index carry no binomial.
    first_row: usize,
    lo0: i64,
    hi0: i64,
    hi: i64,
    budget: Option<i64>,
}

impl MWalk<'_> {
    fn row_ok(&self, r: usize, m: &[i64]) -> bool {
        if r < self.first_row {
            return true;
        }
        let n = if r == 0 { self.l } else { 0 } - self.c.row_dot(r, m);
        self.rows[r].feasible(m[r], n)
    }

    fn run(&self, visit: &mut dyn FnMut(&[i64], i64)) {
        let mut m = vec![0i64; self.c.d];
        self.step(0, &mut m, 0, visit);
    }

    fn step(&self, k: usize, m: &mut Vec<i64>, partial: i64, visit: &mut dyn FnMut(&[i64], i64)) {
        let d = self.c.d;
        if k == d {
            visit(m, partial);
            return;
        }
        let (lo, hi) = if k == 0 { (self.lo0, self.hi0) } else { (0, self.hi) };
        let rem = self.budget.map(|b| b - partial);
        let (lo, hi) = budget_range(self.c, m, k, rem, lo.max(0), hi);
        for v in lo..=hi {
            m[k] = v;
            let inc = square_increment(self.c, m, k);
            if let Some(b) = self.budget {
                if partial + inc > b {
                    continue;
                }
            }
            if k >= 1 && !self.row_ok(k - 1, m) {
                continue;
            }
            if k + 1 == d && !self.row_ok(k, m) {
                continue;
            }
            self.step(k + 1, m, partial + inc, visit);
        }
        m[k] = 0;
    }
}

/// Depth-first walk in the coordinates `mu = m_{a0+1}`, `m_{a0+2..d}`,
/// `n_{a0}, .., n_1` used when `a > 2b`.
struct NWalk<'a> {
    c: &'a CartanData,
    rows: &'a [Row],
    a0: usize,
    /// Bound `N_1 + mu <= M` in the large-`L` limit.
    m_cap: Option<i64>,
    hi: i64,
    budget: Option<i64>,
}

struct NPoint<'a> {
    m: &'a [i64],
    n: &'a [i64],
    exponent: i64,
}

impl NWalk<'_> {
    fn run(&self, visit: &mut dyn FnMut(&NPoint)) {
        let mut n = vec![0i64; self.a0];
        self.run_m(&mut |m, partial| self.step_n(self.a0, 0, m, &mut n, partial, visit));
    }

    /// Visits only the `m` part, with the exponent accumulated so far.
    fn run_m(&self, leaf: &mut dyn FnMut(&[i64], i64)) {
        let mut m = vec![0i64; self.c.d];
        self.step_m(self.a0, &mut m, 0, leaf);
    }

    fn row_ok(&self, r: usize, m: &[i64]) -> bool {
        self.rows[r].feasible(m[r], -self.c.row_dot(r, m))
    }

    fn step_m(&self, k: usize, m: &mut Vec<i64>, partial: i64, leaf: &mut dyn FnMut(&[i64], i64)) {
        let d = self.c.d;
        if k >= d {
            leaf(m, partial);
            return;
        }
        let hi = if k == self.a0 {
            self.m_cap.unwrap_or(self.hi).min(self.hi)
        } else {
            self.hi
        };
        let rem = self.budget.map(|b| b - partial);
        let (lo, hi) = budget_range(self.c, m, k, rem, 0, hi);
        for v in lo..=hi {
            m[k] = v;
            let inc = square_increment(self.c, m, k);
            if let Some(b) = self.budget {
                if partial + inc > b {
                    continue;
                }
            }
            if k > self.a0 + 1 && !self.row_ok(k - 1, m) {
                continue;
            }
            if k + 1 == d && k > self.a0 && !self.row_ok(k, m) {
                continue;
            }
            self.step_m(k + 1, m, partial + inc, leaf);
        }
        m[k] = 0;
    }

    /// Assigns `n_j` for `j = a0-1, .., 0` (0-based), tracking `N_{j+1}`.
    fn step_n(&self, j: usize, big_n: i64, m: &[i64], n: &mut Vec<i64>, partial: i64, visit: &mut dyn FnMut(&NPoint)) {
        if j == 0 {
            visit(&NPoint {
                m,
                n,
                exponent: partial,
            });
            return;
        }
        let j = j - 1;
        let mu = if self.a0 < self.c.d { m[self.a0] } else { 0 };
        let mut hi = self.hi;
        if let Some(cap) = self.m_cap {
            hi = hi.min(cap - mu - big_n);
        }
        if let Some(b) = self.budget {
            hi = hi.min((b - partial).max(0).sqrt() - mu - big_n);
        }
        for v in 0..=hi {
            n[j] = v;
            let inc = (big_n + v + mu).pow(2);
            if let Some(b) = self.budget {
                if partial + inc > b {
                    break;
                }
            }
            self.step_n(j, big_n + v, m, n, partial + inc, visit);
        }
        n[j] = 0;
    }
}

fn check_nonneg(name: &str, v: i64) -> Result<()> {
    if v < 0 {
        Err(Error::Domain(format!("{name} must be nonnegative, got {v}")))
    } else {
        Ok(())
    }
}

/// Evaluates the sum described by `spec`.
pub fn evaluate(spec: &FermionicSpec) -> Result<FermionicValue> {
    evaluate_with_slack(spec, 0)
}

/// As [`evaluate`] with every search bound widened by `slack`; the result
/// must not change for any `slack >= 0`.
pub fn evaluate_with_slack(spec: &FermionicSpec, slack: i64) -> Result<FermionicValue> {
    match spec.bound_mode {
        BoundMode::Double { l, m } => {
            check_nonneg("L", l)?;
            check_nonneg("M", m)?;
        }
        BoundMode::LimitM { l } => check_nonneg("L", l)?,
        BoundMode::LimitL { m } => check_nonneg("M", m)?,
        BoundMode::LimitBoth { order } => check_nonneg("truncation order", order)?,
    }
    if let Some(case) = special_case(spec.family, spec.pair, spec.bound_mode) {
        return eval_special(case, spec);
    }
    if spec.family == Family::H && spec.cf.rep() != Rep::LastAtLeastTwo {
        return Err(Error::Unsupported(
            "H is defined with the last partial quotient at least two".into(),
        ));
    }
    match spec.bound_mode {
        BoundMode::Double { l, m } => Ok(FermionicValue::Poly(bounded_sum(spec, l, Some(m), slack))),
        BoundMode::LimitM { l } => Ok(FermionicValue::Poly(bounded_sum(spec, l, None, slack))),
        BoundMode::LimitL { m } => large_l_sum(spec, m, slack).map(FermionicValue::Poly),
        BoundMode::LimitBoth { order } => series_sum(spec, order).map(FermionicValue::Series),
    }
}

/// Same as [`evaluate`]; rejects the two-sided polynomial mode.
pub fn eval_limit(spec: &FermionicSpec) -> Result<FermionicValue> {
    if let BoundMode::Double { .. } = spec.bound_mode {
        return Err(Error::Domain("eval_limit needs a limit bound mode".into()));
    }
    evaluate(spec)
}

fn double(pair: CoprimePair, family: Family, l: i64, m: i64) -> Result<LaurentPoly> {
    let spec = FermionicSpec::new(pair, family, BoundMode::Double { l, m });
    Ok(evaluate(&spec)?.into_poly().expect("polynomial mode"))
}

#[allow(non_snake_case)]
pub fn eval_F(pair: CoprimePair, l: i64, m: i64) -> Result<LaurentPoly> {
    double(pair, Family::F, l, m)
}

pub fn eval_f(pair: CoprimePair, l: i64, m: i64) -> Result<LaurentPoly> {
    double(pair, Family::LittleF, l, m)
}

#[allow(non_snake_case)]
pub fn eval_H(pair: CoprimePair, l: i64, m: i64) -> Result<LaurentPoly> {
    double(pair, Family::H, l, m)
}

#[allow(non_snake_case)]
pub fn eval_I(pair: CoprimePair, l: i64, m: i64) -> Result<LaurentPoly> {
    double(pair, Family::I, l, m)
}

/// Visits every contributing point of the two-sided or large-`M` sum.
fn walk_bounded(
    spec: &FermionicSpec,
    l: i64,
    m_bound: Option<i64>,
    slack: i64,
    rows: &[Row],
    visit: &mut dyn FnMut(&[i64], i64),
) {
    let below = !spec.pair.above_double();
    let (lo0, hi0) = match (below, m_bound) {
        (true, Some(mm)) => (0, mm.min(l + slack)),
        (false, Some(mm)) => (l - mm, l + slack),
        (_, None) => (0, l + slack),
    };
    let walk = MWalk {
        c: &spec.cartan,
        rows,
        l,
        first_row: 0,
        lo0,
        hi0,
        hi: l + slack,
        budget: None,
    };
    walk.run(visit);
}

fn point_exponent(spec: &FermionicSpec, l: i64, m: &[i64], squares: i64) -> i64 {
    let lead = if spec.pair.above_double() {
        l * (l - 2 * m[0])
    } else {
        0
    };
    lead + squares + family_extra(spec.family, m)
}

fn bounded_sum(spec: &FermionicSpec, l: i64, m_bound: Option<i64>, slack: i64) -> LaurentPoly {
    let rows = rows_for(spec);
    let c = &spec.cartan;
    let below = !spec.pair.above_double();
    let mut total = LaurentPoly::zero();
    walk_bounded(spec, l, m_bound, slack, &rows, &mut |m, squares| {
        let mut acc = match m_bound {
            Some(mm) if below => qbin_shared(2 * l + mm - m[0], 2 * l).as_ref().clone(),
            Some(mm) => qbin_shared(l + mm + m[0], 2 * l).as_ref().clone(),
            None => LaurentPoly::one(),
        };
        for (j, row) in rows.iter().enumerate() {
            let n = if j == 0 { l } else { 0 } - c.row_dot(j, m);
            acc = &acc * row.binom(m[j], n).as_ref();
        }
        total += acc.shift(point_exponent(spec, l, m, squares));
    });
    total
}

/// Contributing points of a two-sided sum (special cases excluded).
pub fn lattice_points(spec: &FermionicSpec) -> Result<Vec<LatticePoint>> {
    let BoundMode::Double { l, m } = spec.bound_mode else {
        return Err(Error::Domain("lattice points are listed for two-sided sums".into()));
    };
    if special_case(spec.family, spec.pair, spec.bound_mode).is_some() {
        return Err(Error::Unsupported(format!(
            "{}_{} is defined separately",
            spec.family.name(),
            spec.pair
        )));
    }
    let rows = rows_for(spec);
    let mut out = Vec::new();
    walk_bounded(spec, l, Some(m), 0, &rows, &mut |mv, squares| {
        let n = crate::cfmachine::mn_solve(&spec.cartan, l, mv).expect("dimension matches");
        out.push(LatticePoint {
            m: mv.to_vec(),
            n,
            weight_exponent: point_exponent(spec, l, mv, squares),
        });
    });
    Ok(out)
}

/// Index of the first partial quotient, used by the n-coordinates.
fn a0(spec: &FermionicSpec) -> usize {
    spec.cf.quotients()[0] as usize
}

fn check_barred_tail(spec: &FermionicSpec) -> Result<()> {
    let d = spec.cartan.d;
    if spec.family == Family::LittleF && d < a0(spec) + 2 {
        return Err(Error::Unsupported(format!(
            "f_{} limit needs the last quotient at least two",
            spec.pair
        )));
    }
    Ok(())
}

fn large_l_sum(spec: &FermionicSpec, m_cap: i64, slack: i64) -> Result<LaurentPoly> {
    match spec.family {
        Family::H | Family::I => {
            return Err(Error::Unsupported(format!(
                "large-L limit of the {} family",
                spec.family.name()
            )))
        }
        Family::F | Family::LittleF => {}
    }
    let rows = rows_for(spec);
    let c = &spec.cartan;
    let d = c.d;
    let mut total = LaurentPoly::zero();
    if !spec.pair.above_double() {
        let walk = MWalk {
            c,
            rows: &rows,
            l: 0,
            first_row: 1,
            lo0: 0,
            hi0: m_cap,
            hi: m_cap + slack,
            budget: None,
        };
        walk.run(&mut |m, squares| {
            let mut acc = poch_quotient(2 * m_cap, &[m_cap - m[0], c.tau[0] * m[0]]);
            for j in 1..d {
                let n = -c.row_dot(j, m);
                acc = &acc * rows[j].binom(m[j], n).as_ref();
            }
            total += acc.shift(squares + family_extra(spec.family, m));
        });
        return Ok(total);
    }
    check_barred_tail(spec)?;
    let a0 = a0(spec);
    let walk = NWalk {
        c,
        rows: &rows,
        a0,
        m_cap: Some(m_cap),
        hi: m_cap + slack,
        budget: None,
    };
    walk.run_m(&mut |m, partial| {
        let mu = if a0 < d { m[a0] } else { 0 };
        let tau_mu = if a0 < d { c.tau[a0] * mu } else { 0 };
        // The multinomial over (M - N_1 - mu, n_1, .., n_a0, tau mu) factors
        // level by level, so the n-sum collapses to a recursion on N.
        let free = m_cap - mu;
        if free < 0 {
            return;
        }
        let mut acc = poch_ratio(2 * m_cap, m_cap + tau_mu - mu);
        acc = &acc * qbin_shared(free + tau_mu, tau_mu).as_ref();
        for r in a0 + 1..d {
            acc = &acc * rows[r].binom(m[r], -c.row_dot(r, m)).as_ref();
        }
        if acc.is_zero() {
            return;
        }
        let inner = n_levels(a0, free, mu);
        let extra = if spec.family == Family::LittleF {
            family_extra(Family::LittleF, m)
        } else {
            0
        };
        total += (&acc * &inner).shift(partial + extra);
    });
    Ok(total)
}

/// `sum over n_1..n_levels >= 0 with N_1 <= free` of
/// `q^{sum_j (N_j + mu)^2}` times the multinomial `[free; n_1, .., n_levels, free - N_1]`,
/// where `N_j = n_j + .. + n_levels`.
fn n_levels(levels: usize, free: i64, mu: i64) -> LaurentPoly {
    let width = free as usize + 1;
    let mut dp = vec![LaurentPoly::zero(); width];
    dp[0] = LaurentPoly::one();
    for _ in 0..levels {
        let mut next = vec![LaurentPoly::zero(); width];
        for (big_n, cur) in dp.iter().enumerate() {
            if cur.is_zero() {
                continue;
            }
            let big_n = big_n as i64;
            for v in 0..=free - big_n {
                let t = big_n + v;
                let step = (cur * qbin_shared(free - big_n, v).as_ref()).shift((t + mu).pow(2));
                next[t as usize] += &step;
            }
        }
        dp = next;
    }
    dp.into_iter().fold(LaurentPoly::zero(), |mut acc, p| {
        acc += &p;
        acc
    })
}

/// `q^e * prod(binomials) / prod((q^base; q^base)_len)` truncated at `order`.
fn series_term(order: i64, e: i64, binoms: &[Arc<LaurentPoly>], dens: &[(i64, i64)]) -> TruncatedSeries {
    let rem = (order - e) as u32;
    let mut p = LaurentPoly::one();
    for b in binoms {
        p = p.mul_truncated(b, rem as i64);
    }
    let mut s = TruncatedSeries::from_poly(&p, rem).expect("binomials have no negative exponents");
    for &(base, len) in dens {
        s = s.over_poch(base as u32, len as u32);
    }
    TruncatedSeries::from_poly(&s.as_poly().shift(e), order as u32).expect("nonnegative shift")
}

fn series_sum(spec: &FermionicSpec, order: i64) -> Result<TruncatedSeries> {
    if spec.family == Family::H {
        return Err(Error::Unsupported("series limit of the H family".into()));
    }
    let rows = rows_for(spec);
    let c = &spec.cartan;
    let d = c.d;
    let mut total = TruncatedSeries::zero(order as u32);
    if !spec.pair.above_double() {
        let walk = MWalk {
            c,
            rows: &rows,
            l: 0,
            first_row: 1,
            lo0: 0,
            hi0: i64::MAX / 4,
            hi: i64::MAX / 4,
            budget: Some(order),
        };
        walk.run(&mut |m, squares| {
            let e = squares + family_extra(spec.family, m);
            if e > order {
                return;
            }
            let binoms: Vec<_> = (1..d).map(|j| rows[j].binom(m[j], -c.row_dot(j, m))).collect();
            let t = series_term(order, e, &binoms, &[(rows[0].base, c.tau[0] * m[0])]);
            total = &total + &t;
        });
        return Ok(total);
    }
    check_barred_tail(spec)?;
    let a0 = a0(spec);
    let walk = NWalk {
        c,
        rows: &rows,
        a0,
        m_cap: None,
        hi: i64::MAX / 4,
        budget: Some(order),
    };
    walk.run(&mut |pt| {
        let extra = if spec.family == Family::LittleF {
            family_extra(Family::LittleF, pt.m)
        } else {
            0
        };
        let e = pt.exponent + extra;
        if e > order {
            return;
        }
        let mut dens: Vec<(i64, i64)> = pt.n.iter().map(|&v| (1, v)).collect();
        dens[a0 - 1].0 = rows[a0 - 1].base;
        if a0 < d {
            dens.push((rows[a0].base, c.tau[a0] * pt.m[a0]));
        }
        let binoms: Vec<_> = (a0 + 1..d)
            .map(|r| rows[r].binom(pt.m[r], -c.row_dot(r, pt.m)))
            .collect();
        let t = series_term(order, e, &binoms, &dens);
        total = &total + &t;
    });
    Ok(total)
}

/// `mbar C m` restricted to the indices handled by the n-coordinates is
/// the same block sum; exposed for tests of the coordinate change.
pub fn restricted_squares(c: &CartanData, m: &[i64], from: usize) -> i64 {
    (from..c.d).map(|k| square_increment(c, m, k)).sum()
}

/// `mCm` through the Cartan matrix, for cross-checks.
pub fn full_quad(c: &CartanData, m: &[i64]) -> i64 {
    crate::cfmachine::quad_form(c, m, QuadVariant::Full).expect("dimension matches")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: i64, b: i64) -> CoprimePair {
        CoprimePair::new(a, b).unwrap()
    }

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, c.to_vec())
    }

    #[test]
    fn small_values() {
        assert_eq!(eval_F(pair(2, 1), 1, 1).unwrap(), p(&[1, 2, 1]));
        assert_eq!(eval_f(pair(2, 1), 1, 1).unwrap(), p(&[1, 2, 1]));
        assert_eq!(eval_H(pair(2, 1), 1, 1).unwrap(), p(&[1, 1]));
        assert_eq!(eval_I(pair(2, 1), 1, 1).unwrap(), p(&[1, 2, 1]));
    }

    #[test]
    fn empty_board() {
        for pr in CoprimePair::all_up_to(7) {
            for mm in 0..4 {
                assert_eq!(eval_F(pr, 0, mm).unwrap(), LaurentPoly::one());
                assert_eq!(eval_f(pr, 0, mm).unwrap(), LaurentPoly::one());
                assert_eq!(eval_I(pr, 0, mm).unwrap(), LaurentPoly::one());
            }
            let h = eval_H(pr, 0, 0).unwrap();
            assert!(h.is_zero() || h.terms().len() == 1);
        }
    }

    #[test]
    fn f21_both_forms() {
        for l in 0..=5i64 {
            for mm in 0..=5i64 {
                let other: LaurentPoly = (0..=l)
                    .map(|k| {
                        (qbin_shared(l + mm + k, 2 * l).as_ref() * qbin_shared(l, k).as_ref()).shift((l - k) * (l - k))
                    })
                    .sum();
                assert_eq!(eval_F(pair(2, 1), l, mm).unwrap(), other);
            }
        }
    }

    #[test]
    fn limit_m_examples() {
        let spec = FermionicSpec::new(pair(2, 1), Family::F, BoundMode::LimitM { l: 2 });
        assert_eq!(eval_limit(&spec).unwrap().into_poly().unwrap(), p(&[1, 1, 1, 0, 1]));
        let spec = FermionicSpec::new(pair(2, 1), Family::LittleF, BoundMode::LimitM { l: 2 });
        assert_eq!(eval_limit(&spec).unwrap().into_poly().unwrap(), p(&[1, 0, 1, 1, 1]));
    }

    #[test]
    fn rogers_ramanujan_series() {
        let spec = FermionicSpec::new(pair(2, 1), Family::F, BoundMode::LimitBoth { order: 10 });
        let s = eval_limit(&spec).unwrap().into_series().unwrap();
        let want: Vec<i64> = vec![1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6];
        let got: Vec<i64> = s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn rejects_negative_bounds() {
        assert!(eval_F(pair(3, 1), -1, 2).is_err());
        let spec = FermionicSpec::new(pair(3, 1), Family::F, BoundMode::LimitBoth { order: -1 });
        assert!(eval_limit(&spec).is_err());
    }

    #[test]
    fn lattice_points_carry_exponents() {
        let spec = FermionicSpec::with_rep(pair(7, 5), Family::F, BoundMode::Double { l: 2, m: 2 }, Rep::LastOne);
        let pts = lattice_points(&spec).unwrap();
        assert!(pts.iter().any(|pt| pt.m == vec![0, 0, 0, 0] && pt.weight_exponent == 0));
        for pt in &pts {
            assert_eq!(pt.weight_exponent, full_quad(&spec.cartan, &pt.m));
        }
    }
}
