//! Every identity the campaigns know about.

use crate::burge::{bosonic_eval, tree_walk, BosonicSpec};
use crate::cfmachine::{bar_pair, h_variant, CoprimePair, HVariant, Rep};
use crate::error::{Error, Result};
use crate::fermionic::{eval_F, eval_H, eval_I, eval_f, evaluate, BoundMode, Family, FermionicSpec};
use crate::qcombinat::{borwein_split, d_poly, g_poly, poch_ratio, qbin_shared, qbinomial, RationalParam};
use crate::qcore::LaurentPoly;

use super::oracle::{explicit_poly, explicit_series, partition_oracle, square_bound, theta_quotient, Summand};
use super::{Budget, IdentityCase, Params, Suite, Value};

fn pair_of(p: &Params) -> Result<CoprimePair> {
    CoprimePair::new(p.get("a")?, p.get("b")?)
}

fn lm(p: &Params) -> Result<(i64, i64)> {
    Ok((p.get("L")?, p.get("M")?))
}

fn order(p: &Params) -> Result<u32> {
    u32::try_from(p.get("T")?).map_err(|_| Error::Domain("T must be nonnegative".into()))
}

fn rat(n: i64, d: i64) -> Result<RationalParam> {
    RationalParam::new(n, d)
}

fn pairs_between(a_min: i64, a_max: i64) -> Vec<CoprimePair> {
    CoprimePair::all_up_to(a_max)
        .into_iter()
        .filter(|p| p.a() >= a_min)
        .collect()
}

fn with_pair(p: CoprimePair) -> Params {
    Params::new().with("a", p.a()).with("b", p.b())
}

/// Every coprime pair with `a_min <= a <= a_max` crossed with the `(L, M)` box.
fn pair_lm_grid(b: &Budget, a_min: i64) -> Vec<Params> {
    let mut out = Vec::new();
    for p in pairs_between(a_min, b.a_max) {
        for l in 0..=b.l_max {
            for m in 0..=b.m_max {
                out.push(with_pair(p).with("L", l).with("M", m));
            }
        }
    }
    out
}

fn lm_grid(b: &Budget) -> Vec<Params> {
    let mut out = Vec::new();
    for l in 0..=b.l_max {
        for m in 0..=b.m_max {
            out.push(Params::new().with("L", l).with("M", m));
        }
    }
    out
}

fn index_grid(key: &str, from: i64, to: i64) -> Vec<Params> {
    (from..=to).map(|n| Params::new().with(key, n)).collect()
}

fn pair_index_grid(b: &Budget, a_min: i64, key: &str) -> Vec<Params> {
    let mut out = Vec::new();
    for p in pairs_between(a_min, b.a_max) {
        for n in 0..=b.n_max {
            out.push(with_pair(p).with(key, n));
        }
    }
    out
}

fn fixed_pairs_series(pairs: &[(i64, i64)], b: &Budget) -> Vec<Params> {
    pairs
        .iter()
        .map(|&(a, bb)| Params::new().with("a", a).with("b", bb).with("T", b.order as i64))
        .collect()
}

fn k_series(ks: impl IntoIterator<Item = i64>, b: &Budget) -> Vec<Params> {
    ks.into_iter()
        .map(|k| Params::new().with("k", k).with("T", b.order as i64))
        .collect()
}

fn poly(p: LaurentPoly) -> Result<Value> {
    Ok(Value::Poly(p))
}

/// `sum_j (-1)^j` of the given summand over `|j| <= range`.
fn alternating(range: i64, term: impl Fn(i64) -> Summand) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for j in -range..=range {
        let t = term(j).poly();
        if j.rem_euclid(2) == 0 {
            acc += &t;
        } else {
            acc -= &t;
        }
    }
    acc
}

fn bosonic(spec: BosonicSpec, p: &Params) -> Result<Value> {
    let (l, m) = lm(p)?;
    poly(bosonic_eval(&spec, l, m)?)
}

fn g(n: i64, m: i64, alpha: RationalParam, beta: RationalParam, k: i64) -> Result<Value> {
    poly(g_poly(n, m, alpha, beta, k)?)
}

fn fermionic_series(pair: CoprimePair, family: Family, rep: Rep, t: u32) -> Result<Value> {
    let spec = FermionicSpec::with_rep(pair, family, BoundMode::LimitBoth { order: t as i64 }, rep);
    Ok(Value::Series(
        evaluate(&spec)?
            .into_series()
            .ok_or_else(|| Error::Domain("expected a series".into()))?,
    ))
}

fn fermionic_limit(pair: CoprimePair, family: Family, mode: BoundMode) -> Result<Value> {
    let spec = FermionicSpec::new(pair, family, mode);
    poly(
        evaluate(&spec)?
            .into_poly()
            .ok_or_else(|| Error::Domain("expected a polynomial".into()))?,
    )
}

fn theta(r: i64, c: i64, t: u32) -> Result<Value> {
    Ok(Value::Series(theta_quotient(r, c, t)?))
}

fn fib(k: i64) -> i64 {
    let (mut x, mut y) = (0i64, 1i64);
    for _ in 0..k {
        (x, y) = (y, x + y);
    }
    x
}

// ---------------------------------------------------------------------------
// explicit displays

/// `sum_n q^{n^2} [2L+M-n, 2L] [L, n]`.
fn rogers_double_rhs(l: i64, m: i64) -> Result<LaurentPoly> {
    explicit_poly(1, l, |v| {
        let n = v[0];
        Some(Summand::new(n * n).binom(2 * l + m - n, 2 * l).binom(l, n))
    })
}

/// `sum_n q^{n(n+1)} [2L+M-n+shift, 2L+1] [L, n]`.
fn second_rogers_double_rhs(l: i64, m: i64, shift: i64) -> Result<LaurentPoly> {
    explicit_poly(1, l, |v| {
        let n = v[0];
        Some(
            Summand::new(n * (n + 1))
                .binom(2 * l + m - n + shift, 2 * l + 1)
                .binom(l, n),
        )
    })
}

/// `sum_j (-1)^j q^{j(5j+3)/2} [L+M+j+shift, M-j-1+shift] [L+M-j, M+j]`.
fn comp_lhs(l: i64, m: i64, shift: i64) -> LaurentPoly {
    alternating(l + m + 2, |j| {
        Summand::new(j * (5 * j + 3) / 2)
            .binom(l + m + j + shift, m - j - 1 + shift)
            .binom(l + m - j, m + j)
    })
}

/// `sum_n q^{n^2} [2L+M-n-1, 2L-1] [L-1, n]`.
fn shifted_rogers_rhs(l: i64, m: i64) -> Result<LaurentPoly> {
    explicit_poly(1, l, |v| {
        let n = v[0];
        Some(Summand::new(n * n).binom(2 * l + m - n - 1, 2 * l - 1).binom(l - 1, n))
    })
}

/// `sum_j (-1)^j q^{j(5j+1)/2} [L+M+j, M-j] [L+M-j-1, M+j]`.
fn brep_lhs(l: i64, m: i64) -> LaurentPoly {
    alternating(l + m + 2, |j| {
        Summand::new(j * (5 * j + 1) / 2)
            .binom(l + m + j, m - j)
            .binom(l + m - j - 1, m + j)
    })
}

/// `sum_{i,n} q^{i^2+n^2} [2L+M-i, 2L] [L+i-n-1, 2i-1] [i-1, n]`.
fn ab32_rhs(l: i64, m: i64) -> Result<LaurentPoly> {
    explicit_poly(2, l, |v| {
        let (i, n) = (v[0], v[1]);
        Some(
            Summand::new(i * i + n * n)
                .binom(2 * l + m - i, 2 * l)
                .binom(l + i - n - 1, 2 * i - 1)
                .binom(i - 1, n),
        )
    })
}

/// `sum_{m1,m2} q^{(L-m1)^2+(m1-m2-1)^2} [L+M+m1, 2L] [L+m2, 2m1-1] [m1-1, m2]`.
fn rr2inv_rhs(l: i64, m: i64) -> Result<LaurentPoly> {
    explicit_poly(2, l, |v| {
        let (m1, m2) = (v[0], v[1]);
        Some(
            Summand::new((l - m1).pow(2) + (m1 - m2 - 1).pow(2))
                .binom(l + m + m1, 2 * l)
                .binom(l + m2, 2 * m1 - 1)
                .binom(m1 - 1, m2),
        )
    })
}

/// `sum_{n,i} q^{n(n+1)+i(L+n+1)} [2L+M-i-n, 2L] [2L-2i-n-1, n] [L-i-n-1, i]`;
/// with `m = None` the first factor is dropped.
fn second_rr_rhs(l: i64, m: Option<i64>) -> Result<LaurentPoly> {
    explicit_poly(2, l, |v| {
        let (n, i) = (v[0], v[1]);
        let mut s = Summand::new(n * (n + 1) + i * (l + n + 1));
        if let Some(m) = m {
            s = s.binom(2 * l + m - i - n, 2 * l);
        }
        Some(s.binom(2 * l - 2 * i - n - 1, n).binom(l - i - n - 1, i))
    })
}

/// `sum_{n,i} q^{n^2+i(L+n)} [2L+M-n-i, 2L] [2L-2i-n, n] [L-i-n, i]`; with
/// `m = None` the first factor is dropped.
fn first_rr_rhs(l: i64, m: Option<i64>) -> Result<LaurentPoly> {
    explicit_poly(2, l, |v| {
        let (n, i) = (v[0], v[1]);
        let mut s = Summand::new(n * n + i * (l + n));
        if let Some(m) = m {
            s = s.binom(2 * l + m - n - i, 2 * l);
        }
        Some(s.binom(2 * l - 2 * i - n, n).binom(l - i - n, i))
    })
}

/// The doubly bounded Andrews-Gordon sum for the pair `(k+1, 1)`, summed
/// over `n_1..n_{k-1}` and `i`.
fn ag_bounded_rhs(k: i64, l: i64, m: i64) -> Result<LaurentPoly> {
    let vars = k as usize;
    explicit_poly(vars, l, |v| {
        let n = &v[..vars - 1];
        let i = v[vars - 1];
        // cap_n[j] = N_{j+1} = n_{j+1} + ... + n_{k-1}, with N_k = 0
        let mut cap_n = vec![0i64; vars + 1];
        for j in (0..vars - 1).rev() {
            cap_n[j] = cap_n[j + 1] + n[j];
        }
        // tilde[j] = N_1 + ... + N_{j}, i.e. tilde N_{j+1}
        let mut tilde = vec![0i64; vars + 1];
        for j in 1..=vars {
            tilde[j] = tilde[j - 1] + cap_n[j - 1];
        }
        let squares: i64 = cap_n[..vars - 1].iter().map(|x| x * x).sum();
        let tk = tilde[vars - 1];
        let mut s = Summand::new(squares + i * (l + tk))
            .binom(2 * l + m - cap_n[0] - i, 2 * l)
            .binom(l - i * (k - 1) - tk, i);
        for j in 1..k {
            let ju = j as usize;
            s = s.binom(
                2 * l - 2 * i * j - cap_n[ju - 1] - cap_n[ju] - 2 * tilde[ju - 1],
                n[ju - 1],
            );
        }
        Some(s)
    })
}

/// `sum_n q^{N_1^2+...+N_{k-1}^2} / ((q)_{n_1} ... (q^last; q^last)_{n_{k-1}})`.
fn ag_series(k: i64, last_base: u32, t: u32) -> Result<Value> {
    let vars = (k - 1) as usize;
    let s = explicit_series(vars, square_bound(t), t, |n| {
        let mut tail = 0;
        let mut e = 0;
        for j in (0..vars).rev() {
            tail += n[j];
            e += tail * tail;
        }
        let mut s = Summand::new(e);
        for (j, &x) in n.iter().enumerate() {
            s = s.over(if j + 1 == vars { last_base } else { 1 }, x);
        }
        Some(s)
    })?;
    Ok(Value::Series(s))
}

#[derive(Clone, Copy)]
struct FibShape {
    /// Pair `(F_k, F_{k-2})` rather than `(F_k, F_{k-1})`.
    second: bool,
    /// Barred quadratic form (reciprocal family).
    barred: bool,
    /// Base of the last Gaussian polynomial.
    last_base: i64,
}

/// The Fibonacci multisums over `m_1..m_{k-2}`.
fn fib_series(k: i64, shape: FibShape, t: u32) -> Result<Value> {
    let d = (k - 2) as usize;
    if shape.second && k == 4 {
        // q^{(m1+m2)^2 + m2^2} / ((q)_{m1} (q^b; q^b)_{m2}) with no binomials
        let s = explicit_series(2, square_bound(t), t, |m| {
            let e = (m[0] + m[1]).pow(2) + m[1] * m[1];
            Some(Summand::new(e).over(1, m[0]).over(shape.last_base as u32, m[1]))
        })?;
        return Ok(Value::Series(s));
    }
    let s = explicit_series(d, square_bound(t), t, |m| {
        let mm = |j: usize| m[j - 1];
        let mut e: i64 = if shape.second {
            (mm(1) + mm(2)).pow(2)
        } else {
            mm(1).pow(2)
        };
        for j in 2..=d {
            if shape.barred && j == d {
                e += mm(d - 1) * mm(d);
            } else {
                e += mm(j).pow(2);
            }
        }
        let mut s = Summand::new(e);
        let first_binom = if shape.second {
            s = s.over(1, mm(1)).over(1, 2 * mm(2));
            3
        } else {
            s = s.over(1, 2 * mm(1));
            2
        };
        for j in first_binom..d {
            s = s.binom(mm(j - 1) + mm(j) - mm(j + 1), 2 * mm(j));
        }
        Some(s.binom_base(mm(d - 1), mm(d), shape.last_base))
    })?;
    Ok(Value::Series(s))
}

/// The second Andrews-Gordon-type display for `(k, k-1)`.
fn ag_second_series(k: i64, barred: bool, t: u32) -> Result<Value> {
    let d = (k - 1) as usize;
    let bound = square_bound(t) * (k - 1);
    let s = explicit_series(d, bound, t, |m| {
        let mm = |j: usize| if j == 0 { 0 } else { m[j - 1] };
        let big = |j: usize| mm(j) - mm(j - 1);
        let mut e: i64 = (1..d).map(|j| big(j).pow(2)).sum();
        e += if barred { -mm(d - 1) * big(d) } else { big(d).pow(2) };
        let mut s = Summand::new(e).over(1, 2 * mm(1));
        for j in 2..d {
            s = s.binom(mm(j - 1) + mm(j + 1), 2 * mm(j));
        }
        Some(s.binom(mm(d - 1), mm(d)))
    })?;
    Ok(Value::Series(s))
}

/// The explicit `(7,5)` multisum; `barred` selects its reciprocal twin.
fn seven_five_series(barred: bool, t: u32) -> Result<Value> {
    let s = explicit_series(4, square_bound(t), t, |m| {
        let (m1, m2, m3, m4) = (m[0], m[1], m[2], m[3]);
        let tail = if barred { m3 * m4 } else { m4 * m4 };
        Some(
            Summand::new(m1 * m1 + (m1 - m2).pow(2) + m3 * m3 + tail)
                .over(1, 2 * m1)
                .binom(m1 + m2 - m3, 2 * m2)
                .binom(m2 + m3 - m4, 2 * m3)
                .binom(m3, m4),
        )
    })?;
    Ok(Value::Series(s))
}

/// The explicit `(7,2)` multisum; `barred` selects its reciprocal twin.
fn seven_two_series(barred: bool, t: u32) -> Result<Value> {
    let s = explicit_series(4, square_bound(t), t, |v| {
        let (n1, n2, m3, m4) = (v[0], v[1], v[2], v[3]);
        let tail = if barred { m3 * m4 } else { m4 * m4 };
        Some(
            Summand::new((n1 + n2 + m3).pow(2) + (n2 + m3).pow(2) + m3 * m3 + tail)
                .over(1, n1)
                .over(1, n2)
                .over(1, 2 * m3)
                .binom(m3, m4),
        )
    })?;
    Ok(Value::Series(s))
}

/// Sum over `m_1, m_2, m_3 <= n` of `q^{exp} [n, m1] [m1, 2 m2] [m2, m3]`.
fn triple_sum(n: i64, exp: impl Fn(i64, i64, i64) -> i64) -> Result<LaurentPoly> {
    explicit_poly(3, n, |v| {
        let (m1, m2, m3) = (v[0], v[1], v[2]);
        Some(
            Summand::new(exp(m1, m2, m3))
                .binom(n, m1)
                .binom(m1, 2 * m2)
                .binom(m2, m3),
        )
    })
}

// ---------------------------------------------------------------------------
// the catalogue

const RRAB_PAIRS: [(i64, i64); 8] = [(2, 1), (3, 1), (4, 1), (3, 2), (5, 2), (5, 3), (7, 2), (7, 5)];

pub fn catalogue() -> Vec<IdentityCase> {
    let mut v = Vec::new();
    burge_tree_cases(&mut v);
    shifted_cases(&mut v);
    even_cases(&mut v);
    corollary_cases(&mut v);
    lemma_cases(&mut v);
    series_cases(&mut v);
    positivity_cases(&mut v);
    section8_cases(&mut v);
    hook_cases(&mut v);
    v
}

fn burge_tree_cases(v: &mut Vec<IdentityCase>) {
    v.push(IdentityCase::identity(
        "thmmain",
        "Burge-tree identity: bosonic sum equals F_{a,b}(L,M)",
        Suite::Thmmain,
        "coprime 1 <= b < a <= a_max, 0 <= L <= l_max, 0 <= M <= m_max",
        |p| bosonic(BosonicSpec::thmmain(pair_of(p)?), p),
        |p| {
            let (l, m) = lm(p)?;
            poly(eval_F(pair_of(p)?, l, m)?)
        },
        |b| pair_lm_grid(b, 2),
    ));
    v.push(IdentityCase::identity(
        "thmmain.tree",
        "Burge-tree identity: recursive walk down the transform tree equals F_{a,b}(L,M)",
        Suite::Thmmain,
        "coprime 1 <= b < a <= a_max, 0 <= L <= l_max, 0 <= M <= m_max",
        |p| {
            let (l, m) = lm(p)?;
            poly(tree_walk(pair_of(p)?, Family::F, l, m)?)
        },
        |p| {
            let (l, m) = lm(p)?;
            poly(eval_F(pair_of(p)?, l, m)?)
        },
        |b| pair_lm_grid(b, 2),
    ));
}

fn shifted_cases(v: &mut Vec<IdentityCase>) {
    v.push(IdentityCase::identity(
        "thmmain2",
        "Shifted Burge-tree identity: bar-shifted bosonic sum equals H_{a,b}(L,M)",
        Suite::Thmmain2,
        "coprime 1 <= b < a, 3 <= a <= a_max, 0 <= L <= l_max, 0 <= M <= m_max",
        |p| bosonic(BosonicSpec::thmmain2(pair_of(p)?), p),
        |p| {
            let (l, m) = lm(p)?;
            poly(eval_H(pair_of(p)?, l, m)?)
        },
        |b| pair_lm_grid(b, 3),
    ));
    v.push(IdentityCase::identity(
        "thmmain2.tree",
        "Shifted Burge-tree identity: recursive walk from H_{2,1} equals H_{a,b}(L,M)",
        Suite::Thmmain2,
        "coprime 1 <= b < a, 3 <= a <= a_max, 0 <= L <= l_max, 0 <= M <= m_max",
        |p| {
            let (l, m) = lm(p)?;
            poly(tree_walk(pair_of(p)?, Family::H, l, m)?)
        },
        |p| {
            let (l, m) = lm(p)?;
            poly(eval_H(pair_of(p)?, l, m)?)
        },
        |b| pair_lm_grid(b, 3),
    ));
    v.push(IdentityCase::identity(
        "ab32",
        "Base case (3,2) of the shifted tree, explicit double sum",
        Suite::Thmmain2,
        "0 <= L <= l_max, 0 <= M <= m_max",
        |p| bosonic(BosonicSpec::thmmain2(CoprimePair::new(3, 2)?), p),
        |p| {
            let (l, m) = lm(p)?;
            poly(ab32_rhs(l, m)?)
        },
        lm_grid,
    ));
    v.push(IdentityCase::identity(
        "rr2inv",
        "Base case (3,1) of the shifted tree, explicit double sum",
        Suite::Thmmain2,
        "0 <= L <= l_max, 0 <= M <= m_max",
        |p| bosonic(BosonicSpec::thmmain2(CoprimePair::new(3, 1)?), p),
        |p| {
            let (l, m) = lm(p)?;
            poly(rr2inv_rhs(l, m)?)
        },
        lm_grid,
    ));
    v.push(IdentityCase::identity(
        "rr2inv.dual",
        "Doubly bounded second Rogers-Ramanujan identity (q -> 1/q of the (3,1) base case)",
        Suite::Thmmain2,
        "0 <= L <= l_max, 0 <= M <= m_max",
        |p| {
            let spec = BosonicSpec {
                a: 3,
                b: 1,
                abar: 1,
                bbar: 0,
                quad: (
                    num_rational::Ratio::new(5, 2),
                    num_rational::Ratio::new(3, 2),
                    num_rational::Ratio::from_integer(0),
                ),
                alternating: true,
            };
            bosonic(spec, p)
        },
        |p| {
            let (l, m) = lm(p)?;
            poly(second_rr_rhs(l, Some(m))?)
        },
        lm_grid,
    ));
}

fn even_cases(v: &mut Vec<IdentityCase>) {
    v.push(IdentityCase::identity(
        "even",
        "Even-modulus Burge tree: sum_j (-1)^j q^{abj^2} B(L,M,aj,bj) = I_{a,b}(L,M)",
        Suite::Even,
        "coprime 1 <= b < a <= a_max, 0 <= L <= l_max, 0 <= M <= m_max",
        |p| bosonic(BosonicSpec::even(pair_of(p)?), p),
        |p| {
            let (l, m) = lm(p)?;
            poly(eval_I(pair_of(p)?, l, m)?)
        },
        |b| pair_lm_grid(b, 2),
    ));
    v.push(IdentityCase::identity(
        "even.tree",
        "Even-modulus Burge tree: recursive walk from Burge's seed equals I_{a,b}(L,M)",
        Suite::Even,
        "coprime 1 <= b < a <= a_max, 0 <= L <= l_max, 0 <= M <= m_max",
        |p| {
            let (l, m) = lm(p)?;
            poly(tree_walk(pair_of(p)?, Family::I, l, m)?)
        },
        |p| {
            let (l, m) = lm(p)?;
            poly(eval_I(pair_of(p)?, l, m)?)
        },
        |b| pair_lm_grid(b, 2),
    ));
    v.push(IdentityCase::identity(
        "burge.seed",
        "Burge's identity sum_j (-1)^j q^{j^2} B(L,M,j,j) = [L+M, M]_{q^2}",
        Suite::Even,
        "0 <= L <= l_max, 0 <= M <= m_max",
        |p| bosonic(BosonicSpec::burge_even_seed(), p),
        |p| {
            let (l, m) = lm(p)?;
            poly(qbinomial(l + m, m, 2))
        },
        lm_grid,
    ));
}

fn corollary_cases(v: &mut Vec<IdentityCase>) {
    v.push(IdentityCase::identity(
        "mainrecip",
        "Reciprocal Burge-tree identity: (2ab-1) bosonic sum equals f_{a,b}(L,M)",
        Suite::Corollaries,
        "coprime 1 <= b < a <= a_max, 0 <= L <= l_max, 0 <= M <= m_max",
        |p| bosonic(BosonicSpec::mainrecip(pair_of(p)?), p),
        |p| {
            let (l, m) = lm(p)?;
            poly(eval_f(pair_of(p)?, l, m)?)
        },
        |b| pair_lm_grid(b, 2),
    ));
    v.push(IdentityCase::identity(
        "GF",
        "G(L,L;b,b+1/a,a) = F_{a,b}(L)",
        Suite::Corollaries,
        "coprime 1 <= b < a <= a_max, 0 <= L <= n_max",
        |p| {
            let (a, b, l) = (p.get("a")?, p.get("b")?, p.get("L")?);
            g(l, l, RationalParam::integer(b), rat(a * b + 1, a)?, a)
        },
        |p| fermionic_limit(pair_of(p)?, Family::F, BoundMode::LimitM { l: p.get("L")? }),
        |b| pair_index_grid(b, 2, "L"),
    ));
    v.push(IdentityCase::identity(
        "corM",
        "G(M,M;a,a+1/b,b) = tilde F_{a,b}(M)",
        Suite::Corollaries,
        "coprime 1 <= b < a <= a_max, 0 <= M <= n_max",
        |p| {
            let (a, b, m) = (p.get("a")?, p.get("b")?, p.get("M")?);
            g(m, m, RationalParam::integer(a), rat(a * b + 1, b)?, b)
        },
        |p| fermionic_limit(pair_of(p)?, Family::F, BoundMode::LimitL { m: p.get("M")? }),
        |b| pair_index_grid(b, 2, "M"),
    ));
    v.push(IdentityCase::identity(
        "Gf",
        "G(L,L;b-1/a,b,a) = f_{a,b}(L)",
        Suite::Corollaries,
        "coprime 1 <= b < a <= a_max, 0 <= L <= n_max",
        |p| {
            let (a, b, l) = (p.get("a")?, p.get("b")?, p.get("L")?);
            g(l, l, rat(a * b - 1, a)?, RationalParam::integer(b), a)
        },
        |p| fermionic_limit(pair_of(p)?, Family::LittleF, BoundMode::LimitM { l: p.get("L")? }),
        |b| pair_index_grid(b, 2, "L"),
    ));
    v.push(IdentityCase::identity(
        "ftilde",
        "G(M,M;a-1/b,a,b) = tilde f_{a,b}(M)",
        Suite::Corollaries,
        "coprime 1 <= b < a <= a_max, 0 <= M <= n_max",
        |p| {
            let (a, b, m) = (p.get("a")?, p.get("b")?, p.get("M")?);
            g(m, m, rat(a * b - 1, b)?, RationalParam::integer(a), b)
        },
        |p| fermionic_limit(pair_of(p)?, Family::LittleF, BoundMode::LimitL { m: p.get("M")? }),
        |b| pair_index_grid(b, 2, "M"),
    ));
    v.push(IdentityCase::identity(
        "GB1",
        "Bressoud's bounded Euler identity G(L,L;1/2,1,2) = sum_n q^{nL} [L, n]",
        Suite::Corollaries,
        "0 <= L <= n_max",
        |p| {
            let l = p.get("L")?;
            g(l, l, rat(1, 2)?, RationalParam::integer(1), 2)
        },
        |p| {
            let l = p.get("L")?;
            poly(explicit_poly(1, l, |v| Some(Summand::new(v[0] * l).binom(l, v[0])))?)
        },
        |b| index_grid("L", 0, b.n_max),
    ));
    v.push(IdentityCase::identity(
        "GB2",
        "Bressoud's bounded Rogers-Ramanujan identity G(L,L;1,3/2,2) = sum_n q^{n^2} [L, n]",
        Suite::Corollaries,
        "0 <= L <= n_max",
        |p| {
            let l = p.get("L")?;
            g(l, l, RationalParam::integer(1), rat(3, 2)?, 2)
        },
        |p| {
            let l = p.get("L")?;
            poly(explicit_poly(1, l, |v| Some(Summand::new(v[0] * v[0]).binom(l, v[0])))?)
        },
        |b| index_grid("L", 0, b.n_max),
    ));
    v.push(IdentityCase::identity(
        "IKS",
        "G(L,L;1/2,3/2,2) = (1+q^L)(-q^2;q^2)_{L-1}",
        Suite::Corollaries,
        "1 <= L <= n_max",
        |p| {
            let l = p.get("L")?;
            g(l, l, rat(1, 2)?, rat(3, 2)?, 2)
        },
        |p| {
            let l = p.get("L")?;
            let mut acc = LaurentPoly::from_terms([(0, 1), (l, 1)]);
            for k in 1..l {
                acc = &acc * &LaurentPoly::from_terms([(0, 1), (2 * k, 1)]);
            }
            poly(acc)
        },
        |b| index_grid("L", 1, b.n_max),
    ));
    v.push(IdentityCase::identity(
        "RR1",
        "Polynomial first Rogers-Ramanujan identity G(L,L;1,2/3,3)",
        Suite::Corollaries,
        "0 <= L <= n_max",
        |p| {
            let l = p.get("L")?;
            g(l, l, RationalParam::integer(1), rat(2, 3)?, 3)
        },
        |p| poly(first_rr_rhs(p.get("L")?, None)?),
        |b| index_grid("L", 0, b.n_max),
    ));
    v.push(IdentityCase::identity(
        "RR2",
        "Polynomial second Rogers-Ramanujan identity G(L+1,L-1;1/3,4/3,3)",
        Suite::Corollaries,
        "1 <= L <= n_max",
        |p| {
            let l = p.get("L")?;
            g(l + 1, l - 1, rat(1, 3)?, rat(4, 3)?, 3)
        },
        |p| poly(second_rr_rhs(p.get("L")?, None)?),
        |b| index_grid("L", 1, b.n_max),
    ));
    v.push(IdentityCase::identity(
        "f31",
        "Doubly bounded first Rogers-Ramanujan identity from the reciprocal (3,1) tree",
        Suite::Corollaries,
        "0 <= L <= l_max, 0 <= M <= m_max",
        |p| bosonic(BosonicSpec::mainrecip(CoprimePair::new(3, 1)?), p),
        |p| {
            let (l, m) = lm(p)?;
            poly(first_rr_rhs(l, Some(m))?)
        },
        lm_grid,
    ));
    v.push(IdentityCase::identity(
        "ag.bounded",
        "Doubly bounded Andrews-Gordon identity for the pair (k+1,1)",
        Suite::Corollaries,
        "1 <= k <= 3, 0 <= L <= min(l_max, 6), 0 <= M <= m_max",
        |p| {
            let k = p.get("k")?;
            bosonic(BosonicSpec::mainrecip(CoprimePair::new(k + 1, 1)?), p)
        },
        |p| {
            let (l, m) = lm(p)?;
            poly(ag_bounded_rhs(p.get("k")?, l, m)?)
        },
        |b| {
            let mut out = Vec::new();
            for k in 1..=3 {
                for l in 0..=b.l_max.min(6) {
                    for m in 0..=b.m_max {
                        out.push(Params::new().with("k", k).with("L", l).with("M", m));
                    }
                }
            }
            out
        },
    ));
}

fn lemma_cases(v: &mut Vec<IdentityCase>) {
    v.push(IdentityCase::identity(
        "bnew",
        "Rogers' seed sum_j (-1)^j q^{j(3j+1)/2} B(L,M,j,j) = [L+M, M]",
        Suite::Comp,
        "0 <= L <= l_max, 0 <= M <= m_max",
        |p| bosonic(BosonicSpec::bnew(), p),
        |p| {
            let (l, m) = lm(p)?;
            poly(qbin_shared(l + m, m).as_ref().clone())
        },
        lm_grid,
    ));
    v.push(IdentityCase::identity(
        "bnewp",
        "Doubly bounded first Rogers-Ramanujan identity",
        Suite::Comp,
        "0 <= L <= l_max, 0 <= M <= m_max",
        |p| bosonic(BosonicSpec::bnewp(), p),
        |p| {
            let (l, m) = lm(p)?;
            poly(rogers_double_rhs(l, m)?)
        },
        lm_grid,
    ));
    v.push(IdentityCase::identity(
        "comp",
        "Doubly bounded second Rogers-Ramanujan identity",
        Suite::Comp,
        "0 <= L <= l_max, 0 <= M <= m_max",
        |p| {
            let (l, m) = lm(p)?;
            poly(comp_lhs(l, m, 0))
        },
        |p| {
            let (l, m) = lm(p)?;
            poly(second_rogers_double_rhs(l, m, 0)?)
        },
        lm_grid,
    ));
    v.push(IdentityCase::identity(
        "comp2",
        "Doubly bounded second Rogers-Ramanujan identity, shifted form",
        Suite::Comp,
        "0 <= L <= l_max, 0 <= M <= m_max",
        |p| {
            let (l, m) = lm(p)?;
            poly(comp_lhs(l, m, 1))
        },
        |p| {
            let (l, m) = lm(p)?;
            poly(second_rogers_double_rhs(l, m, 1)?)
        },
        lm_grid,
    ));
    v.push(IdentityCase::identity(
        "comp2.sum",
        "The shifted form is the unshifted one plus q^M times the first identity",
        Suite::Comp,
        "0 <= L <= l_max, 0 <= M <= m_max",
        |p| {
            let (l, m) = lm(p)?;
            poly(comp_lhs(l, m, 1))
        },
        |p| {
            let (l, m) = lm(p)?;
            let first = bosonic_eval(&BosonicSpec::bnewp(), l, m)?;
            poly(&comp_lhs(l, m, 0) + &first.shift(m))
        },
        lm_grid,
    ));
    v.push(IdentityCase::identity(
        "bnewp2",
        "Shifted doubly bounded first Rogers-Ramanujan identity B(L,M,2j+1,j)",
        Suite::Comp,
        "0 <= L <= l_max, 0 <= M <= m_max",
        |p| bosonic(BosonicSpec::bnewp2(), p),
        |p| {
            let (l, m) = lm(p)?;
            poly(shifted_rogers_rhs(l, m)?)
        },
        lm_grid,
    ));
    v.push(IdentityCase::identity(
        "brep",
        "Single-kernel rewriting of the shifted doubly bounded identity",
        Suite::Comp,
        "1 <= L <= l_max, 0 <= M <= m_max",
        |p| {
            let (l, m) = lm(p)?;
            poly(brep_lhs(l, m))
        },
        |p| {
            let (l, m) = lm(p)?;
            poly(shifted_rogers_rhs(l, m)?)
        },
        |b| lm_grid(b).into_iter().filter(|p| p.0["L"] >= 1).collect(),
    ));
    v.push(IdentityCase::identity(
        "comp.limit",
        "G(L+1,L;1/2,2,2) = sum_n q^{n(n+1)} [L, n]",
        Suite::Comp,
        "0 <= L <= n_max",
        |p| {
            let l = p.get("L")?;
            g(l + 1, l, rat(1, 2)?, RationalParam::integer(2), 2)
        },
        |p| {
            let l = p.get("L")?;
            poly(explicit_poly(1, l, |v| {
                Some(Summand::new(v[0] * (v[0] + 1)).binom(l, v[0]))
            })?)
        },
        |b| index_grid("L", 0, b.n_max),
    ));
    v.push(IdentityCase::identity(
        "rogers.euler",
        "Rogers' polynomial Euler identity sum_j (-1)^j q^{j(3j+1)/2} [2M, M-j] = (q)_{2M}/(q)_M",
        Suite::Comp,
        "0 <= M <= n_max",
        |p| {
            let m = p.get("M")?;
            poly(alternating(m + 1, |j| {
                Summand::new(j * (3 * j + 1) / 2).binom(2 * m, m - j)
            }))
        },
        |p| {
            let m = p.get("M")?;
            poly(poch_ratio(2 * m, m))
        },
        |b| index_grid("M", 0, b.n_max),
    ));
}

fn series_cases(v: &mut Vec<IdentityCase>) {
    v.push(
        IdentityCase::identity(
            "AGid",
            "Andrews-Gordon identity for modulus 2k+1",
            Suite::Series,
            "2 <= k <= 4, order T",
            |p| ag_series(p.get("k")?, 1, order(p)?),
            |p| {
                let k = p.get("k")?;
                theta(k, 2 * k + 1, order(p)?)
            },
            |b| k_series(2..=4, b),
        )
        .series(),
    );
    v.push(
        IdentityCase::identity(
            "Bressoud",
            "Bressoud's identity for even modulus 2k",
            Suite::Series,
            "2 <= k <= 3, order T",
            |p| ag_series(p.get("k")?, 2, order(p)?),
            |p| {
                let k = p.get("k")?;
                theta(k, 2 * k, order(p)?)
            },
            |b| k_series(2..=3, b),
        )
        .series(),
    );
    v.push(
        IdentityCase::identity(
            "RRab",
            "Rogers-Ramanujan-type identity with product modulus 2ab+1",
            Suite::Series,
            "selected coprime pairs, order T",
            |p| fermionic_series(pair_of(p)?, Family::F, Rep::LastAtLeastTwo, order(p)?),
            |p| {
                let ab = p.get("a")? * p.get("b")?;
                theta(ab, 2 * ab + 1, order(p)?)
            },
            |b| fixed_pairs_series(&RRAB_PAIRS, b),
        )
        .series(),
    );
    v.push(
        IdentityCase::identity(
            "RRab2",
            "Rogers-Ramanujan-type identity with product modulus 2ab-1",
            Suite::Series,
            "selected coprime pairs, order T",
            |p| fermionic_series(pair_of(p)?, Family::LittleF, Rep::LastAtLeastTwo, order(p)?),
            |p| {
                let ab = p.get("a")? * p.get("b")?;
                theta(ab - 1, 2 * ab - 1, order(p)?)
            },
            |b| fixed_pairs_series(&RRAB_PAIRS, b),
        )
        .series(),
    );
    v.push(
        IdentityCase::identity(
            "thmeven",
            "Even-modulus Rogers-Ramanujan-type identity with modulus 2ab",
            Suite::Series,
            "selected coprime pairs, order T",
            |p| fermionic_series(pair_of(p)?, Family::I, Rep::LastAtLeastTwo, order(p)?),
            |p| {
                let ab = p.get("a")? * p.get("b")?;
                theta(ab, 2 * ab, order(p)?)
            },
            |b| fixed_pairs_series(&RRAB_PAIRS, b),
        )
        .series(),
    );
    for (id, barred, second) in [
        ("display.75", false, false),
        ("display.75.recip", true, false),
        ("display.72", false, true),
        ("display.72.recip", true, true),
    ] {
        v.push(
            IdentityCase::identity(
                id,
                "Explicit multisums for the pairs (7,5) and (7,2)",
                Suite::Series,
                "order T",
                move |p| {
                    let t = order(p)?;
                    if second {
                        seven_two_series(barred, t)
                    } else {
                        seven_five_series(barred, t)
                    }
                },
                move |p| {
                    let (r, c) = match (second, barred) {
                        (false, false) => (35, 71),
                        (false, true) => (34, 69),
                        (true, false) => (14, 29),
                        (true, true) => (13, 27),
                    };
                    theta(r, c, order(p)?)
                },
                |b| vec![Params::new().with("T", b.order as i64)],
            )
            .series(),
        );
    }
    for (id, second, barred, ks) in [
        ("Fib1", false, false, 4..=6),
        ("Fib2", false, true, 4..=6),
        ("Fib3", true, false, 5..=6),
        ("Fib4", true, true, 5..=6),
    ] {
        let shape = FibShape {
            second,
            barred,
            last_base: 1,
        };
        let product = move |p: &Params| {
            let k = p.get("k")?;
            let ab = fib(k) * fib(if second { k - 2 } else { k - 1 });
            if barred {
                theta(ab - 1, 2 * ab - 1, order(p)?)
            } else {
                theta(ab, 2 * ab + 1, order(p)?)
            }
        };
        let ks2 = ks.clone();
        v.push(
            IdentityCase::identity(
                id,
                "Fibonacci Rogers-Ramanujan-type identities",
                Suite::Series,
                "selected k, order T",
                move |p| fib_series(p.get("k")?, shape, order(p)?),
                product,
                move |b| k_series(ks.clone(), b),
            )
            .series(),
        );
        v.push(
            IdentityCase::identity(
                &format!("{id}.fermionic"),
                "Fibonacci identities from the all-ones continued fraction",
                Suite::Series,
                "selected k, order T",
                move |p| {
                    let k = p.get("k")?;
                    let pair = CoprimePair::new(fib(k), fib(if second { k - 2 } else { k - 1 }))?;
                    let family = if barred { Family::LittleF } else { Family::F };
                    fermionic_series(pair, family, Rep::LastOne, order(p)?)
                },
                product,
                move |b| k_series(ks2.clone(), b),
            )
            .series(),
        );
    }
    for (id, second) in [("thmeven.fib1", false), ("thmeven.fib2", true)] {
        let shape = FibShape {
            second,
            barred: false,
            last_base: 2,
        };
        v.push(
            IdentityCase::identity(
                id,
                "Even-modulus Fibonacci identities",
                Suite::Series,
                "4 <= k <= 5, order T",
                move |p| fib_series(p.get("k")?, shape, order(p)?),
                move |p| {
                    let k = p.get("k")?;
                    let ab = fib(k) * fib(if second { k - 2 } else { k - 1 });
                    theta(ab, 2 * ab, order(p)?)
                },
                |b| k_series(4..=5, b),
            )
            .series(),
        );
    }
    for (id, barred) in [("AGkk1", false), ("AGkk1.recip", true)] {
        v.push(
            IdentityCase::identity(
                id,
                "Andrews-Gordon-type multisums for the pair (k,k-1)",
                Suite::Series,
                "3 <= k <= 4, order T",
                move |p| ag_second_series(p.get("k")?, barred, order(p)?),
                move |p| {
                    let k = p.get("k")?;
                    let ab = k * (k - 1);
                    if barred {
                        theta(ab - 1, 2 * ab - 1, order(p)?)
                    } else {
                        theta(ab, 2 * ab + 1, order(p)?)
                    }
                },
                |b| k_series(3..=4, b),
            )
            .series(),
        );
    }
    v.push(
        IdentityCase::identity(
            "RR1.limit",
            "First Rogers-Ramanujan identity as the large-L limit of its polynomial form",
            Suite::Series,
            "L = T + 1, order T",
            |p| poly(first_rr_rhs(order(p)? as i64 + 1, None)?),
            |p| theta(2, 5, order(p)?),
            |b| vec![Params::new().with("T", b.order as i64)],
        )
        .series(),
    );
    v.push(
        IdentityCase::identity(
            "RR2.limit",
            "Second Rogers-Ramanujan identity as the large-L limit of its polynomial form",
            Suite::Series,
            "L = T + 1, order T",
            |p| poly(second_rr_rhs(order(p)? as i64 + 1, None)?),
            |p| theta(1, 5, order(p)?),
            |b| vec![Params::new().with("T", b.order as i64)],
        )
        .series(),
    );
}

/// Exponent pair `(alpha, beta)` times `a` of the shifted positivity family.
fn shifted_positivity_params(p: CoprimePair) -> (i64, i64) {
    let (a, b) = (p.a(), p.b());
    let bar = bar_pair(p);
    match h_variant(p) {
        HVariant::Ex1 => (a * b - 2 * bar.abar * b, a * b + 1 + 2 * bar.abar * b),
        HVariant::Ex2 => (a * b - 2 * a * bar.bbar, a * b + 1 + 2 * a * bar.bbar),
    }
}

fn positivity_cases(v: &mut Vec<IdentityCase>) {
    v.push(IdentityCase::positivity(
        "corGenBor",
        "Positivity of G(L,L;b,b+1/a,a)",
        Suite::Positivity,
        "coprime 1 <= b < a <= a_max, 0 <= L <= n_max",
        |p| {
            let (a, b, l) = (p.get("a")?, p.get("b")?, p.get("L")?);
            g(l, l, RationalParam::integer(b), rat(a * b + 1, a)?, a)
        },
        |b| pair_index_grid(b, 2, "L"),
    ));
    v.push(IdentityCase::positivity(
        "cormain2",
        "Positivity of the bar-shifted G(L+abar,L-abar;...,a)",
        Suite::Positivity,
        "coprime 1 <= b < a, 3 <= a <= a_max, abar <= L <= n_max",
        |p| {
            let pair = pair_of(p)?;
            let l = p.get("L")?;
            let abar = bar_pair(pair).abar;
            let (alpha, beta) = shifted_positivity_params(pair);
            g(
                l + abar,
                l - abar,
                rat(alpha, pair.a())?,
                rat(beta, pair.a())?,
                pair.a(),
            )
        },
        |b| {
            pair_index_grid(b, 3, "L")
                .into_iter()
                .filter(|p| {
                    let pair = CoprimePair::new(p.0["a"], p.0["b"]).expect("grid pair");
                    p.0["L"] >= bar_pair(pair).abar
                })
                .collect()
        },
    ));
    for (id, which) in [("borwein.A", 0usize), ("borwein.B", 1), ("borwein.C", 2)] {
        v.push(IdentityCase::positivity(
            id,
            "Borwein's split of (q,q^2;q^3)_n into A_n, B_n, C_n",
            Suite::Positivity,
            "0 <= n <= n_max",
            move |p| {
                let (a, b, c) = borwein_split(p.get("n")?)?;
                poly([a, b, c][which].clone())
            },
            |b| index_grid("n", 0, b.n_max),
        ));
    }
    for (id, which, num_alpha, num_beta, shift) in [
        ("borwein.A.G", 0usize, 4, 5, 0),
        ("borwein.B.G", 1, 2, 7, 1),
        ("borwein.C.G", 2, 1, 8, 1),
    ] {
        v.push(IdentityCase::identity(
            id,
            "Borwein's A_n, B_n, C_n as G-polynomials with K = 3",
            Suite::Positivity,
            "shift <= n <= n_max",
            move |p| {
                let (a, b, c) = borwein_split(p.get("n")?)?;
                poly([a, b, c][which].clone())
            },
            move |p| {
                let n = p.get("n")?;
                g(n + shift, n - shift, rat(num_alpha, 3)?, rat(num_beta, 3)?, 3)
            },
            move |b| index_grid("n", shift, b.n_max),
        ));
    }
}

fn section8_cases(v: &mut Vec<IdentityCase>) {
    type Lhs = (i64, i64, i64, i64, i64);
    let entries: [(&str, Lhs); 5] = [
        ("s8.1", (1, 2, 1, 1, 2)),
        ("s8.2", (1, 1, 4, 3, 3)),
        ("s8.3", (5, 4, 3, 2, 4)),
        ("s8.4", (1, 1, 3, 2, 2)),
        ("s8.5", (3, 2, 7, 4, 4)),
    ];
    for (id, (an, ad, bn, bd, k)) in entries {
        let lhs = move |p: &Params| {
            let n = p.get("n")?;
            g(n, n, rat(an, ad)?, rat(bn, bd)?, k)
        };
        let rhs = move |p: &Params| -> Result<Value> {
            let n = p.get("n")?;
            let value = match id {
                "s8.1" => explicit_poly(1, n, |v| Some(Summand::new(v[0] * n).binom(n, v[0])))?,
                "s8.2" => explicit_poly(2, n, |v| {
                    let (m1, m2) = (v[0], v[1]);
                    Some(
                        Summand::new((n - m1).pow(2) + (m1 - m2).pow(2))
                            .binom(n + m2, 2 * m1)
                            .binom(m1, m2),
                    )
                })?,
                "s8.3" => triple_sum(n, |m1, m2, m3| n * (n - m1) + m2 * (m2 + m3))?,
                "s8.4" => explicit_poly(1, n, |v| Some(Summand::new(v[0] * v[0]).binom(n, v[0])))?,
                _ => triple_sum(n, |m1, m2, m3| n * (n - m1) + m2 * m2 + m3 * m3)?,
            };
            poly(value)
        };
        v.push(IdentityCase::identity(
            id,
            "Explicit identities for G(n,n;alpha,beta,K) with noninteger alpha and beta",
            Suite::Section8,
            "0 <= n <= n_max",
            lhs,
            rhs,
            |b| index_grid("n", 0, b.n_max),
        ));
        v.push(IdentityCase::positivity(
            &format!("{id}.positive"),
            "Positivity of the explicit G(n,n;alpha,beta,K)",
            Suite::Section8,
            "0 <= n <= n_max",
            lhs,
            |b| index_grid("n", 0, b.n_max),
        ));
    }
    v.push(IdentityCase::positivity(
        "s8.borwein.positive",
        "Positivity of G(n,n;4/3,5/3,3), the missing entry",
        Suite::Section8,
        "0 <= n <= n_max",
        |p| {
            let n = p.get("n")?;
            g(n, n, rat(4, 3)?, rat(5, 3)?, 3)
        },
        |b| index_grid("n", 0, b.n_max),
    ));
}

/// Parameters `(K, i, alpha, beta, N, M)` inside the window where the
/// alternating sum is a partition generating function.
fn hook_grid(b: &Budget) -> Vec<Params> {
    let mut out = Vec::new();
    for k in 3..=5 {
        for alpha in 1..=2 {
            for beta in 1..=2 {
                if alpha + beta >= k {
                    continue;
                }
                for i in 1..k {
                    for n in 0..=b.hook_max {
                        for m in 0..=b.hook_max {
                            if beta - i <= n - m && n - m <= k - alpha - i {
                                out.push(
                                    Params::new()
                                        .with("K", k)
                                        .with("i", i)
                                        .with("alpha", alpha)
                                        .with("beta", beta)
                                        .with("N", n)
                                        .with("M", m),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn hook_cases(v: &mut Vec<IdentityCase>) {
    v.push(IdentityCase::identity(
        "hookp",
        "Hook-difference generating function D_{K,i}(N,M;alpha,beta) against enumeration",
        Suite::Hookp,
        "K in 3..=5, alpha, beta in 1..=2 with alpha+beta < K, 1 <= i < K, N, M <= hook_max",
        |p| {
            let (k, i, n, m) = (p.get("K")?, p.get("i")?, p.get("N")?, p.get("M")?);
            let (alpha, beta) = (p.get("alpha")?, p.get("beta")?);
            poly(d_poly(
                k,
                i,
                n,
                m,
                RationalParam::integer(alpha),
                RationalParam::integer(beta),
            )?)
        },
        |p| {
            let (k, i, n, m) = (p.get("K")?, p.get("i")?, p.get("N")?, p.get("M")?);
            poly(partition_oracle(k, i, n, m, p.get("alpha")?, p.get("beta")?)?)
        },
        hook_grid,
    ));
}
