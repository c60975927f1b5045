//! Bosonic alternating sums over the kernel `B`, the two Burge transforms
//! and a memoized walk down the transform tree.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::cfmachine::{bar_pair, h_variant, CoprimePair, HVariant};
use crate::error::{Error, Result};
use crate::fermionic::Family;
use crate::qcombinat::{b_kernel, integral_exponent, qbin_shared};
use crate::qcore::LaurentPoly;

/// `sum_j (+-1)^j q^{c2 j^2 + c1 j + c0} B(L, M, a j + abar, b j + bbar)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BosonicSpec {
    pub a: i64,
    pub b: i64,
    pub abar: i64,
    pub bbar: i64,
    pub quad: (Ratio<i64>, Ratio<i64>, Ratio<i64>),
    pub alternating: bool,
}

fn half(n: i64) -> Ratio<i64> {
    Ratio::new(n, 2)
}

fn int(n: i64) -> Ratio<i64> {
    Ratio::from_integer(n)
}

impl BosonicSpec {
    fn plain(a: i64, b: i64, c2: Ratio<i64>, c1: Ratio<i64>) -> Self {
        BosonicSpec {
            a,
            b,
            abar: 0,
            bbar: 0,
            quad: (c2, c1, int(0)),
            alternating: true,
        }
    }

    /// Exponent `j((2ab+1)j + 1)/2`, kernel `B(L, M, aj, bj)`.
    pub fn thmmain(p: CoprimePair) -> Self {
        let ab = p.a() * p.b();
        Self::plain(p.a(), p.b(), half(2 * ab + 1), half(1))
    }

    /// Exponent `j((2ab-1)j + 1)/2`, kernel `B(L, M, aj, bj)`.
    pub fn mainrecip(p: CoprimePair) -> Self {
        let ab = p.a() * p.b();
        Self::plain(p.a(), p.b(), half(2 * ab - 1), half(1))
    }

    /// Exponent `ab j^2`, kernel `B(L, M, aj, bj)`.
    pub fn even(p: CoprimePair) -> Self {
        Self::plain(p.a(), p.b(), int(p.a() * p.b()), int(0))
    }

    /// The shifted sum paired with `H_{a,b}`; the linear term follows the
    /// parity rule of [`h_variant`].
    pub fn thmmain2(p: CoprimePair) -> Self {
        let (a, b) = (p.a(), p.b());
        let bar = bar_pair(p);
        let lin = match h_variant(p) {
            HVariant::Ex1 => 4 * bar.abar * b + 1,
            HVariant::Ex2 => 4 * a * bar.bbar + 1,
        };
        BosonicSpec {
            a,
            b,
            abar: bar.abar,
            bbar: bar.bbar,
            quad: (half(2 * a * b + 1), half(lin), int(bar.abar * bar.bbar)),
            alternating: true,
        }
    }

    /// `sum_j (-1)^j q^{j(3j+1)/2} B(L, M, j, j)`.
    pub fn bnew() -> Self {
        Self::plain(1, 1, half(3), half(1))
    }

    /// `sum_j (-1)^j q^{j(5j+1)/2} B(L, M, 2j, j)`.
    pub fn bnewp() -> Self {
        Self::plain(2, 1, half(5), half(1))
    }

    /// `sum_j (-1)^j q^{j(5j+1)/2} B(L, M, 2j+1, j)`.
    pub fn bnewp2() -> Self {
        BosonicSpec {
            abar: 1,
            ..Self::plain(2, 1, half(5), half(1))
        }
    }

    /// `sum_j (-1)^j q^{j^2} B(L, M, j, j)`.
    pub fn burge_even_seed() -> Self {
        Self::plain(1, 1, int(1), int(0))
    }

    pub fn exponent(&self, j: i64) -> Result<i64> {
        let (c2, c1, c0) = self.quad;
        integral_exponent(c2 * (j * j) + c1 * j + c0, j)
    }
}

/// Values of `j` with `|coef j + shift| <= bound`; `None` when every `j`
/// qualifies.
fn support(coef: i64, shift: i64, bound: i64) -> Option<(i64, i64)> {
    if coef == 0 {
        return if shift.abs() <= bound { None } else { Some((1, 0)) };
    }
    let (lo, hi) = (-bound - shift, bound - shift);
    let (c, lo, hi) = if coef > 0 { (coef, lo, hi) } else { (-coef, -hi, -lo) };
    Some((Integer::div_ceil(&lo, &c), Integer::div_floor(&hi, &c)))
}

pub fn bosonic_eval(spec: &BosonicSpec, l: i64, m: i64) -> Result<LaurentPoly> {
    let (lo, hi) = match (support(spec.a, spec.abar, l), support(spec.b, spec.bbar, m)) {
        (Some((l1, h1)), Some((l2, h2))) => (l1.max(l2), h1.min(h2)),
        (Some(r), None) | (None, Some(r)) => r,
        (None, None) => {
            return Err(Error::Domain("bosonic sum has unbounded support".into()));
        }
    };
    let mut acc = LaurentPoly::zero();
    for j in lo..=hi {
        let kernel = b_kernel(l, m, spec.a * j + spec.abar, spec.b * j + spec.bbar);
        if kernel.is_zero() {
            continue;
        }
        let term = kernel.shift(spec.exponent(j)?);
        if spec.alternating && j.is_odd() {
            acc -= &term;
        } else {
            acc += &term;
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// `sum_i q^{i^2} [2L+M-i, 2L] P(L-i, i)`.
    B1,
    /// `sum_i q^{i^2} [2L+M-i, 2L] P(i, L-i)`.
    B2,
}

/// Applies one Burge transform to the family `inner`. Only index pairs with
/// both entries nonnegative contribute.
pub fn transform_step(direction: Direction, inner: impl Fn(i64, i64) -> LaurentPoly, l: i64, m: i64) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for i in 0..=l.min(m) {
        let (x, y) = match direction {
            Direction::B1 => (l - i, i),
            Direction::B2 => (i, l - i),
        };
        let v = inner(x, y);
        if v.is_zero() {
            continue;
        }
        acc += (qbin_shared(2 * l + m - i, 2 * l).as_ref() * &v).shift(i * i);
    }
    acc
}

/// Whether the transform identities are guaranteed for `(L, M, a, b)`,
/// i.e. neither exclusion chain holds.
pub fn condition_check(l: i64, m: i64, a: i64, b: i64) -> bool {
    let first = -l + a <= -b && -b <= l + a && l + a < b && b <= m;
    let second = -l - a <= b && b <= l - a && l - a < -b && -b <= m;
    !(first || second)
}

type WalkKey = (i64, i64, Family, i64, i64);

/// Memoized evaluation of the fermionic families by recursion along the
/// transform tree.
#[derive(Default)]
pub struct TreeWalker {
    memo: RwLock<HashMap<WalkKey, Arc<LaurentPoly>>>,
}

static WALKER: LazyLock<TreeWalker> = LazyLock::new(TreeWalker::default);

impl TreeWalker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn walk(&self, p: CoprimePair, family: Family, l: i64, m: i64) -> Result<LaurentPoly> {
        if family == Family::LittleF {
            return Err(Error::Unsupported("the f family has no transform seed".into()));
        }
        if l < 0 || m < 0 {
            return Err(Error::Domain(format!("L and M must be nonnegative, got ({l}, {m})")));
        }
        Ok(self.node(p.a(), p.b(), family, l, m).as_ref().clone())
    }

    fn node(&self, a: i64, b: i64, family: Family, l: i64, m: i64) -> Arc<LaurentPoly> {
        let key = (a, b, family, l, m);
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return v.clone();
        }
        let value = Arc::new(self.compute(a, b, family, l, m));
        self.memo.write().unwrap().entry(key).or_insert(value).clone()
    }

    fn compute(&self, a: i64, b: i64, family: Family, l: i64, m: i64) -> LaurentPoly {
        match (family, a, b) {
            (Family::F, 1, 1) => return qbin_shared(l + m, m).as_ref().clone(),
            (Family::I, 1, 1) => return qbin_shared(l + m, m).dilate(2),
            (Family::H, 2, 1) => {
                return (0..l)
                    .map(|n| {
                        (qbin_shared(2 * l + m - n - 1, 2 * l - 1).as_ref() * qbin_shared(l - 1, n).as_ref())
                            .shift(n * n)
                    })
                    .sum();
            }
            _ => {}
        }
        if a < 2 * b {
            transform_step(
                Direction::B2,
                |x, y| self.node(b, a - b, family, x, y).as_ref().clone(),
                l,
                m,
            )
        } else {
            transform_step(
                Direction::B1,
                |x, y| self.node(a - b, b, family, x, y).as_ref().clone(),
                l,
                m,
            )
        }
    }
}

/// Evaluates `F`, `H` or `I` at `(L, M)` purely through Burge transforms.
pub fn tree_walk(p: CoprimePair, family: Family, l: i64, m: i64) -> Result<LaurentPoly> {
    WALKER.walk(p, family, l, m)
}
