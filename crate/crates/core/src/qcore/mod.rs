//! Exact Laurent-polynomial and truncated power-series arithmetic.

mod poly;
mod series;

pub use poly::LaurentPoly;
pub use series::{ts_equal_to, ts_from_factors, TruncatedSeries};

/// Arithmetic selector used by [`lp_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpOp {
    Add,
    Sub,
    Mul,
    /// Multiply the first operand by `q^k`; the second operand is ignored.
    Shift(i64),
}

pub fn lp_arith(a: &LaurentPoly, b: &LaurentPoly, op: LpOp) -> LaurentPoly {
    match op {
        LpOp::Add => a + b,
        LpOp::Sub => a - b,
        LpOp::Mul => a * b,
        LpOp::Shift(k) => a.shift(k),
    }
}

pub fn lp_inverse_q(p: &LaurentPoly) -> LaurentPoly {
    p.inverse_q()
}
