use crate::algebra::{
    binomial_poly, binomial_q, degenerate_falling_x, falling_factorial_const, LambdaPoly, Rational,
    XLPoly,
};
use crate::egf::bernoulli_taps;

use super::bernoulli::bernoulli_polynomial_from;
use super::eulerian::{EulerianRoute, EulerianTable};

/// How `Σ_{k=1}^{m} (k)_{n,λ}` is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PowerSumRoute {
    /// Add the `m` falling factorials.
    Direct,
    /// `Σ_j A_{−λ}(n,j) C(m+j+1, n+1)`.
    Eulerian,
    /// `(β_{n+1,λ}(m+1) − β_{n+1,λ})/(n+1)`.
    Bernoulli,
}

impl PowerSumRoute {
    pub const ALL: [PowerSumRoute; 3] = [
        PowerSumRoute::Direct,
        PowerSumRoute::Eulerian,
        PowerSumRoute::Bernoulli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PowerSumRoute::Direct => "direct",
            PowerSumRoute::Eulerian => "eulerian",
            PowerSumRoute::Bernoulli => "bernoulli",
        }
    }
}

pub(crate) fn power_sum_direct(m: usize, n: usize) -> LambdaPoly {
    (1..=m)
        .map(|k| falling_factorial_const(&Rational::from(k), n))
        .sum()
}

pub(crate) fn power_sum_from_negated_row(
    negated_row: &[LambdaPoly],
    m: usize,
    n: usize,
) -> LambdaPoly {
    negated_row
        .iter()
        .enumerate()
        .map(|(j, a)| a.scale(&binomial_q((m + j + 1) as u64, n as u64 + 1)))
        .sum()
}

/// Needs `β_{n+1,λ}(x)` and `β_{n+1,λ}`.
pub(crate) fn power_sum_from_bernoulli(
    beta_poly: &XLPoly,
    beta_number: &LambdaPoly,
    m: usize,
    n: usize,
) -> LambdaPoly {
    let at_m1 = beta_poly.eval_x(&Rational::from(m + 1));
    (&at_m1 - beta_number).scale(&Rational::new(1, n as i64 + 1))
}

/// `Σ_{k=1}^{m} (k)_{n,λ}` by the chosen route.
///
/// Panics unless `m, n ≥ 1`; the Eulerian form does not hold at `n = 0`.
pub fn power_sum(m: usize, n: usize, route: PowerSumRoute) -> LambdaPoly {
    assert!(
        m >= 1 && n >= 1,
        "power_sum needs m, n >= 1 (got m={m}, n={n})"
    );
    match route {
        PowerSumRoute::Direct => power_sum_direct(m, n),
        PowerSumRoute::Eulerian => {
            let table = EulerianTable::build(n, EulerianRoute::Explicit).negated_lambda();
            power_sum_from_negated_row(table.row(n), m, n)
        }
        PowerSumRoute::Bernoulli => {
            let beta = bernoulli_taps(n + 1);
            let poly = bernoulli_polynomial_from(&beta, n + 1);
            power_sum_from_bernoulli(&poly, &beta[n + 1], m, n)
        }
    }
}

/// `Σ_k C(x+k, n) A_{−λ}(n,k)` from a row of `A_{−λ}(n, ·)`.
pub(crate) fn worpitzky_from_negated_row(negated_row: &[LambdaPoly], n: usize) -> XLPoly {
    negated_row
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| binomial_poly(k as i64, n).mul_coeff(a))
        .sum()
}

/// Left side of the degenerate Worpitzky identity; equals `(x)_{n,λ}`.
pub fn worpitzky_lhs(n: usize) -> XLPoly {
    let table = EulerianTable::build(n, EulerianRoute::Explicit).negated_lambda();
    worpitzky_from_negated_row(table.row(n), n)
}

/// Right side of the degenerate Worpitzky identity.
pub fn worpitzky_rhs(n: usize) -> XLPoly {
    degenerate_falling_x(n)
}
