//! Registry of executable identity checks and the suite runner.
//!
//! Every check scans its parameter range in lexicographic `(n, k, m)` order
//! and stops at the first disagreement, so a reported counterexample is the
//! smallest one in range. Comparison is exact polynomial equality unless
//! [`CompareMode::Smoke`] is requested.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{
    binomial_q, degenerate_falling_x, factorial, falling_factorial_const, LambdaPoly, LambdaRing,
    Rational, XLPoly,
};
use crate::egf::{bernoulli_taps, gf_residual};
use crate::oracles::{
    classical_triangles, descent_distribution, excedance_distribution, PermStatDistribution,
    MAX_CLASSICAL_N, MAX_PERMUTATION_N,
};
use crate::sequences::{
    bernoulli_polynomial_from, eulerian_explicit, eulerian_from_stirling2_row,
    eulerian_polys_gf_recursion, minus_one_from_bernoulli, power_sum_direct,
    power_sum_from_bernoulli, power_sum_from_negated_row, stirling1_row,
    stirling2_binomial_expansion, stirling2_degenerate, stirling2_from_negated_row,
    worpitzky_from_negated_row, EulerianRoute, EulerianTable,
};

/// λ values used by smoke mode.
pub const SMOKE_LAMBDAS: [(i64, i64); 5] = [(-2, 1), (-1, 3), (1, 2), (1, 1), (7, 3)];

/// Parameter bounds. `None` means the check has no such parameter.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Range {
    pub n_max: Option<usize>,
    pub m_max: Option<usize>,
    pub k_max: Option<usize>,
}

impl Range {
    pub fn n(n_max: usize) -> Self {
        Range {
            n_max: Some(n_max),
            ..Range::default()
        }
    }

    fn with_m(mut self, m_max: usize) -> Self {
        self.m_max = Some(m_max);
        self
    }

    fn with_k(mut self, k_max: usize) -> Self {
        self.k_max = Some(k_max);
        self
    }

    /// Overrides apply only to parameters this range already has, then are
    /// clamped to `cap`.
    fn resolve(&self, overrides: &Range, cap: &Range) -> Range {
        let pick = |default: Option<usize>, over: Option<usize>, cap: Option<usize>| {
            let v = default.map(|d| over.unwrap_or(d));
            match (v, cap) {
                (Some(v), Some(c)) => Some(v.min(c)),
                (v, _) => v,
            }
        };
        Range {
            n_max: pick(self.n_max, overrides.n_max, cap.n_max),
            m_max: pick(self.m_max, overrides.m_max, cap.m_max),
            k_max: pick(self.k_max, overrides.k_max, cap.k_max),
        }
    }

    fn n_bound(&self) -> usize {
        self.n_max.unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pending,
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pending => "pending",
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CompareMode {
    /// Canonical-form polynomial equality.
    #[default]
    Exact,
    /// Agreement at the λ values of [`SMOKE_LAMBDAS`] only. Not exhaustive.
    Smoke,
}

impl CompareMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CompareMode::Exact => "exact",
            CompareMode::Smoke => "smoke",
        }
    }
}

/// First failing parameter tuple of a check, with both sides rendered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub params: Vec<(&'static str, i64)>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "at {}: lhs = {}, rhs = {}",
            params.join(", "),
            self.lhs,
            self.rhs
        )
    }
}

/// Result record for one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: String,
    pub anchor: String,
    pub range: Range,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

pub type Outcome = Result<(), Counterexample>;

type CheckFn = dyn Fn(&Range, CompareMode) -> Outcome + Send + Sync;

/// A named identity together with its default scan range.
pub struct Check {
    id: String,
    anchor: String,
    default_range: Range,
    cap: Range,
    run: Box<CheckFn>,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        default_range: Range,
        run: impl Fn(&Range, CompareMode) -> Outcome + Send + Sync + 'static,
    ) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            default_range,
            cap: Range::default(),
            run: Box::new(run),
        }
    }

    fn capped(mut self, cap: Range) -> Self {
        self.cap = cap;
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn anchor(&self) -> &str {
        &self.anchor
    }

    pub fn default_range(&self) -> Range {
        self.default_range
    }

    pub fn pending(&self, overrides: &Range) -> CheckSpec {
        CheckSpec {
            id: self.id.clone(),
            anchor: self.anchor.clone(),
            range: self.default_range.resolve(overrides, &self.cap),
            status: Status::Pending,
            counterexample: None,
        }
    }

    pub fn evaluate(&self, overrides: &Range, mode: CompareMode) -> CheckSpec {
        let mut spec = self.pending(overrides);
        match (self.run)(&spec.range, mode) {
            Ok(()) => spec.status = Status::Pass,
            Err(cx) => {
                spec.status = Status::Fail;
                spec.counterexample = Some(cx);
            }
        }
        spec
    }
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("id", &self.id)
            .field("default_range", &self.default_range)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check id `{id}`; valid ids: {}", valid.join(", "))]
    UnknownCheck { id: String, valid: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

fn smoke_points() -> Vec<Rational> {
    SMOKE_LAMBDAS
        .iter()
        .map(|&(p, q)| Rational::new(p, q))
        .collect()
}

fn agree<T: LambdaRing>(lhs: &T, rhs: &T, mode: CompareMode) -> bool {
    match mode {
        CompareMode::Exact => lhs == rhs,
        CompareMode::Smoke => smoke_points()
            .iter()
            .all(|v| lhs.specialize_lambda(v) == rhs.specialize_lambda(v)),
    }
}

/// Compares two sides at one parameter tuple.
pub fn expect_equal<T: LambdaRing + fmt::Display>(
    params: &[(&'static str, i64)],
    lhs: &T,
    rhs: &T,
    mode: CompareMode,
) -> Outcome {
    if agree(lhs, rhs, mode) {
        Ok(())
    } else {
        Err(Counterexample {
            params: params.to_vec(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

fn expect_scalar(params: &[(&'static str, i64)], lhs: Rational, rhs: Rational) -> Outcome {
    expect_equal(
        params,
        &LambdaPoly::constant(lhs),
        &LambdaPoly::constant(rhs),
        CompareMode::Exact,
    )
}

fn expect_true(
    params: &[(&'static str, i64)],
    ok: bool,
    lhs: impl fmt::Display,
    rhs: &str,
) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Counterexample {
            params: params.to_vec(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

fn p(v: usize) -> i64 {
    v as i64
}

fn lambda_at(v: i64) -> Rational {
    Rational::from(v)
}

fn check_bernoulli_golden(r: &Range, mode: CompareMode) -> Outcome {
    let q = |s: &str| s.parse::<Rational>().expect("golden literal");
    let golden = [
        LambdaPoly::one(),
        LambdaPoly::new(vec![q("-1/2"), q("1/2")]),
        LambdaPoly::new(vec![q("1/6"), q("0"), q("-1/6")]),
        LambdaPoly::new(vec![q("0"), q("-1/4"), q("0"), q("1/4")]),
    ];
    let n_max = r.n_bound();
    let beta = bernoulli_taps(n_max);
    for n in 0..=n_max {
        expect_equal(&[("n", p(n))], &beta[n], &golden[n], mode)?;
    }
    Ok(())
}

fn check_gf_residual(r: &Range, mode: CompareMode) -> Outcome {
    let residual = gf_residual(r.n_bound());
    for (n, tap) in residual.taps().iter().enumerate() {
        expect_equal(&[("n", p(n))], tap, &XLPoly::zero(), mode)?;
    }
    Ok(())
}

fn check_explicit_vs_defining_series(r: &Range, mode: CompareMode) -> Outcome {
    let one_minus_x = &XLPoly::one() - &XLPoly::var();
    for n in 0..=r.n_bound() {
        // Σ_{j ≤ n} (j+1)_{n,λ} x^j, truncated where it no longer affects x^0..x^n.
        let series = XLPoly::new(
            (0..=n)
                .map(|j| falling_factorial_const(&Rational::from(j + 1), n))
                .collect(),
        );
        let product = &series * &one_minus_x.pow(n as u32 + 1);
        for k in 0..=n {
            expect_equal(
                &[("n", p(n)), ("k", p(k))],
                &eulerian_explicit(n, k),
                &product.coeff(k),
                mode,
            )?;
        }
    }
    Ok(())
}

fn check_vanishing(r: &Range, mode: CompareMode) -> Outcome {
    for n in 0..=r.n_bound() {
        for k in n + 1..=n + 3 {
            expect_equal(
                &[("n", p(n)), ("k", p(k))],
                &eulerian_explicit(n, k),
                &LambdaPoly::zero(),
                mode,
            )?;
        }
    }
    Ok(())
}

fn check_poly_recursion(r: &Range, mode: CompareMode) -> Outcome {
    let n_max = r.n_bound();
    let table = EulerianTable::build(n_max, EulerianRoute::Explicit);
    let polys = eulerian_polys_gf_recursion(n_max);
    for (n, gf) in polys.iter().enumerate() {
        expect_equal(&[("n", p(n))], &table.poly(n), gf, mode)?;
    }
    Ok(())
}

fn check_minus_one(r: &Range, mode: CompareMode) -> Outcome {
    let n_max = r.n_bound();
    let table = EulerianTable::build(n_max, EulerianRoute::Explicit);
    let beta = bernoulli_taps(n_max + 1);
    for n in 0..=n_max {
        let direct = table.poly(n).eval_x(&Rational::from(-1));
        let closed = minus_one_from_bernoulli(n, &beta[n + 1]);
        expect_equal(&[("n", p(n))], &direct, &closed, mode)?;
    }
    Ok(())
}

fn check_alternating_sum(r: &Range, mode: CompareMode) -> Outcome {
    let n_max = r.n_bound();
    let table = EulerianTable::build(n_max, EulerianRoute::Recursion);
    let beta = bernoulli_taps(n_max + 1);
    for n in 1..=n_max {
        let alternating: LambdaPoly = table
            .row(n)
            .iter()
            .enumerate()
            .map(|(k, a)| if k % 2 == 0 { a.clone() } else { -a })
            .sum();
        let closed = minus_one_from_bernoulli(n, &beta[n + 1]);
        expect_equal(&[("n", p(n))], &alternating, &closed, mode)?;
    }
    Ok(())
}

fn check_two_term_recursion(r: &Range, mode: CompareMode) -> Outcome {
    let n_max = r.n_bound();
    let explicit = EulerianTable::build(n_max, EulerianRoute::Explicit);
    let recursive = EulerianTable::build(n_max, EulerianRoute::Recursion);
    for n in 0..=n_max {
        for k in 0..=n {
            expect_equal(
                &[("n", p(n)), ("k", p(k))],
                &explicit.row(n)[k],
                &recursive.row(n)[k],
                mode,
            )?;
        }
    }
    Ok(())
}

fn check_worpitzky(r: &Range, mode: CompareMode) -> Outcome {
    let n_max = r.n_bound();
    let negated = EulerianTable::build(n_max, EulerianRoute::Explicit).negated_lambda();
    for n in 0..=n_max {
        let lhs = worpitzky_from_negated_row(negated.row(n), n);
        expect_equal(&[("n", p(n))], &lhs, &degenerate_falling_x(n), mode)?;
    }
    Ok(())
}

fn check_stirling2_from_eulerian(r: &Range, mode: CompareMode) -> Outcome {
    let n_max = r.n_bound();
    let negated = EulerianTable::build(n_max, EulerianRoute::Explicit).negated_lambda();
    for n in 0..=n_max {
        for k in 0..=n {
            expect_equal(
                &[("n", p(n)), ("k", p(k))],
                &stirling2_from_negated_row(negated.row(n), n, k),
                &stirling2_degenerate(n, k),
                mode,
            )?;
        }
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum PowerSumPair {
    DirectEulerian,
    DirectBernoulli,
    EulerianBernoulli,
}

fn check_power_sums(pair: PowerSumPair, r: &Range, mode: CompareMode) -> Outcome {
    let n_max = r.n_bound();
    let m_max = r.m_max.unwrap_or(1);
    let negated = EulerianTable::build(n_max, EulerianRoute::Explicit).negated_lambda();
    let beta = bernoulli_taps(n_max + 1);
    for n in 1..=n_max {
        let beta_poly = bernoulli_polynomial_from(&beta, n + 1);
        for m in 1..=m_max {
            let direct = || power_sum_direct(m, n);
            let eulerian = || power_sum_from_negated_row(negated.row(n), m, n);
            let bernoulli = || power_sum_from_bernoulli(&beta_poly, &beta[n + 1], m, n);
            let (lhs, rhs) = match pair {
                PowerSumPair::DirectEulerian => (direct(), eulerian()),
                PowerSumPair::DirectBernoulli => (direct(), bernoulli()),
                PowerSumPair::EulerianBernoulli => (eulerian(), bernoulli()),
            };
            expect_equal(&[("n", p(n)), ("m", p(m))], &lhs, &rhs, mode)?;
        }
    }
    Ok(())
}

fn check_eulerian_from_stirling2(r: &Range, mode: CompareMode) -> Outcome {
    let n_max = r.n_bound();
    let table = EulerianTable::build(n_max, EulerianRoute::Explicit);
    for n in 1..=n_max {
        let s2_row: Vec<LambdaPoly> = (0..=n).map(|j| stirling2_degenerate(n, j)).collect();
        for k in 1..=n {
            expect_equal(
                &[("n", p(n)), ("k", p(k))],
                &eulerian_from_stirling2_row(&s2_row, n, k),
                &table.row(n)[k - 1],
                mode,
            )?;
        }
    }
    Ok(())
}

fn check_coefficient_relation(r: &Range, mode: CompareMode) -> Outcome {
    let n_max = r.n_bound();
    let k_max = r.k_max.unwrap_or(0);
    let table = EulerianTable::build(n_max, EulerianRoute::Explicit);
    for n in 0..=n_max {
        for k in 0..=k_max {
            let lhs: LambdaPoly = (0..=k.min(n))
                .map(|i| table.row(n)[i].scale(&binomial_q((n + k - i) as u64, n as u64)))
                .sum();
            let rhs = falling_factorial_const(&Rational::from(k + 1), n);
            expect_equal(&[("n", p(n)), ("k", p(k))], &lhs, &rhs, mode)?;
        }
    }
    Ok(())
}

fn check_stirling2_binomial_basis(r: &Range, mode: CompareMode) -> Outcome {
    for n in 0..=r.n_bound() {
        expect_equal(
            &[("n", p(n))],
            &stirling2_binomial_expansion(n),
            &degenerate_falling_x(n),
            mode,
        )?;
    }
    Ok(())
}

fn check_stirling_inversion(r: &Range, mode: CompareMode) -> Outcome {
    let n_max = r.n_bound();
    let s2: Vec<Vec<LambdaPoly>> = (0..=n_max)
        .map(|k| (0..=k).map(|j| stirling2_degenerate(k, j)).collect())
        .collect();
    for n in 0..=n_max {
        let s1 = stirling1_row(n);
        for j in 0..=n {
            let lhs: LambdaPoly = (j..=n).map(|k| &s1[k] * &s2[k][j]).sum();
            let rhs = if j == n {
                LambdaPoly::one()
            } else {
                LambdaPoly::zero()
            };
            expect_equal(&[("n", p(n)), ("k", p(j))], &lhs, &rhs, mode)?;
        }
    }
    Ok(())
}

fn check_row_structure(r: &Range, _mode: CompareMode) -> Outcome {
    let n_max = r.n_bound();
    let table = EulerianTable::build(n_max, EulerianRoute::Explicit);
    expect_equal(
        &[("n", 0), ("k", 0)],
        &table.row(0)[0],
        &LambdaPoly::one(),
        CompareMode::Exact,
    )?;
    for n in 1..=n_max {
        let row = table.row(n);
        for (k, a) in row.iter().enumerate() {
            let degree = a.degree().map_or(-1, |d| d as i64);
            expect_true(
                &[("n", p(n)), ("k", p(k))],
                degree < p(n),
                a,
                &format!("λ-degree <= {}", n - 1),
            )?;
        }
        expect_equal(
            &[("n", p(n)), ("k", p(n))],
            &row[n],
            &LambdaPoly::zero(),
            CompareMode::Exact,
        )?;
        let sum: LambdaPoly = row.iter().cloned().sum();
        expect_equal(
            &[("n", p(n))],
            &sum,
            &LambdaPoly::constant(Rational::from(factorial(n))),
            CompareMode::Exact,
        )?;
    }
    Ok(())
}

fn check_permutation_oracle(
    stat: fn(usize) -> Result<PermStatDistribution, crate::oracles::OracleError>,
    r: &Range,
) -> Outcome {
    let n_max = r.n_bound();
    let table = EulerianTable::build(n_max, EulerianRoute::Explicit);
    for n in 1..=n_max {
        let dist = stat(n).expect("range capped to the enumeration bound");
        for k in 0..=n {
            let count = dist.counts.get(k).copied().unwrap_or(0);
            expect_scalar(
                &[("n", p(n)), ("k", p(k))],
                table.row(n)[k].eval_lambda(&lambda_at(0)),
                Rational::from(count),
            )?;
        }
    }
    Ok(())
}

fn check_classical_eulerian(r: &Range) -> Outcome {
    let n_max = r.n_bound();
    let classical = classical_triangles(n_max).expect("range capped");
    let table = EulerianTable::build(n_max, EulerianRoute::Recursion);
    for n in 0..=n_max {
        for k in 0..=n {
            expect_scalar(
                &[("n", p(n)), ("k", p(k))],
                table.row(n)[k].eval_lambda(&lambda_at(0)),
                Rational::from(classical.eulerian[n][k].clone()),
            )?;
        }
    }
    Ok(())
}

fn check_classical_stirling(r: &Range) -> Outcome {
    let n_max = r.n_bound();
    let classical = classical_triangles(n_max).expect("range capped");
    let to_q = |v: &BigInt| Rational::from(v.clone());
    for n in 0..=n_max {
        let s1 = stirling1_row(n);
        for k in 0..=n {
            let params = [("n", p(n)), ("k", p(k))];
            expect_scalar(
                &params,
                stirling2_degenerate(n, k).eval_lambda(&lambda_at(0)),
                to_q(&classical.stirling2[n][k]),
            )?;
            // λ = 0 turns (x)_{k,λ} into x^k, leaving the power-basis coefficients.
            expect_scalar(
                &params,
                s1[k].eval_lambda(&lambda_at(0)),
                to_q(&classical.stirling1[n][k]),
            )?;
        }
    }
    Ok(())
}

fn check_classical_bernoulli(r: &Range) -> Outcome {
    let n_max = r.n_bound();
    let classical = classical_triangles(n_max).expect("range capped");
    let beta = bernoulli_taps(n_max);
    for n in 0..=n_max {
        expect_scalar(
            &[("n", p(n))],
            beta[n].eval_lambda(&lambda_at(0)),
            classical.bernoulli[n].clone(),
        )?;
    }
    Ok(())
}

fn check_bernoulli_at_one(r: &Range) -> Outcome {
    let n_max = r.n_bound();
    let beta = bernoulli_taps(n_max);
    for (n, b) in beta.iter().enumerate().skip(1) {
        expect_scalar(
            &[("n", p(n))],
            b.eval_lambda(&lambda_at(1)),
            Rational::zero(),
        )?;
    }
    Ok(())
}

/// Every registered identity, in report order.
pub fn registry() -> Vec<Check> {
    let perm_cap = Range::n(MAX_PERMUTATION_N);
    let classical_cap = Range::n(MAX_CLASSICAL_N);
    vec![
        Check::new(
            "eq-13-bernoulli-golden",
            "beta_{0..3,lambda} golden values: 1; -1/2+lambda/2; 1/6-lambda^2/6; -lambda/4+lambda^3/4",
            Range::n(3),
            check_bernoulli_golden,
        )
        .capped(Range::n(3)),
        Check::new(
            "prop-2.1-gf-residual",
            "(x-1)/(x-e_{-lambda}((x-1)t)) = sum A_{n,lambda}(x) t^n/n!",
            Range::n(12),
            check_gf_residual,
        ),
        Check::new(
            "thm-2.2-explicit-sum",
            "0<=k<=n: explicit sum equals the x^k coefficient of the defining series times (1-x)^{n+1}",
            Range::n(12),
            check_explicit_vs_defining_series,
        ),
        Check::new(
            "thm-2.2-vanishing",
            "k>n: explicit sum vanishes",
            Range::n(15),
            check_vanishing,
        ),
        Check::new(
            "thm-2.3-poly-recursion",
            "A_{n,lambda}(x) = sum_{i<n} C(n,i) A_{i,lambda}(x) (1)_{n-i,-lambda} (x-1)^{n-i-1}",
            Range::n(20),
            check_poly_recursion,
        ),
        Check::new(
            "thm-2.4-value-at-minus-one",
            "A_{n,lambda}(-1) via beta_{n+1,lambda/2} and beta_{n+1,lambda}",
            Range::n(15),
            check_minus_one,
        ),
        Check::new(
            "cor-2.5-alternating-sum",
            "sum_k A_lambda(n,k)(-1)^k",
            Range::n(15),
            check_alternating_sum,
        ),
        Check::new(
            "thm-2.6-two-term-recursion",
            "A_lambda(n,k) = ((n-k)+(n-1)lambda) A_lambda(n-1,k-1) + (k+1-(n-1)lambda) A_lambda(n-1,k)",
            Range::n(20),
            check_two_term_recursion,
        ),
        Check::new(
            "thm-2.7-worpitzky",
            "sum_k C(x+k,n) A_{-lambda}(n,k) = (x)_{n,lambda}",
            Range::n(15),
            check_worpitzky,
        ),
        Check::new(
            "thm-2.8-stirling2-from-eulerian",
            "{n brace k}_lambda = (1/k!) sum_j A_{-lambda}(n,j) C(j,n-k)",
            Range::n(15),
            check_stirling2_from_eulerian,
        ),
        Check::new(
            "thm-2.9-power-sum-eulerian",
            "sum_{k<=m} (k)_{n,lambda} = sum_j A_{-lambda}(n,j) C(m+j+1,n+1)",
            Range::n(10).with_m(20),
            |r: &Range, mode| check_power_sums(PowerSumPair::DirectEulerian, r, mode),
        ),
        Check::new(
            "eq-43-power-sum-bernoulli",
            "sum_{k<=m} (k)_{n,lambda} = (beta_{n+1,lambda}(m+1) - beta_{n+1,lambda})/(n+1)",
            Range::n(10).with_m(20),
            |r: &Range, mode| check_power_sums(PowerSumPair::DirectBernoulli, r, mode),
        ),
        Check::new(
            "thm-2.10-eulerian-bernoulli",
            "sum_j A_{-lambda}(n,j) C(m+j+1,n+1) = (beta_{n+1,lambda}(m+1) - beta_{n+1,lambda})/(n+1)",
            Range::n(10).with_m(20),
            |r: &Range, mode| check_power_sums(PowerSumPair::EulerianBernoulli, r, mode),
        ),
        Check::new(
            "thm-2.11-eulerian-from-stirling2",
            "A_lambda(n,k-1) = (-1)^k sum_j (-1)^j C(n-j,n-k) j! {n brace j}_lambda",
            Range::n(15),
            check_eulerian_from_stirling2,
        ),
        Check::new(
            "eq-19-coefficient-relation",
            "sum_i A_lambda(n,i) C(n+k-i,n) = (k+1)_{n,lambda}",
            Range::n(10).with_k(15),
            check_coefficient_relation,
        ),
        Check::new(
            "eq-38-stirling2-binomial-basis",
            "(x)_{n,lambda} = sum_k k! {n brace k}_lambda C(x,k)",
            Range::n(12),
            check_stirling2_binomial_basis,
        ),
        Check::new(
            "eq-16-17-stirling-inversion",
            "S_{1,lambda} and {.}_lambda are inverse change-of-basis matrices",
            Range::n(12),
            check_stirling_inversion,
        ),
        Check::new(
            "eulerian-row-structure",
            "A_lambda(0,0)=1, A_lambda(n,n)=0, lambda-degree <= n-1, row sum n!",
            Range::n(20),
            check_row_structure,
        ),
        Check::new(
            "lambda0-descent-oracle",
            "lambda = 0: A_n(x) = sum over S_n of x^{d(sigma)}",
            Range::n(7),
            |r: &Range, _| check_permutation_oracle(descent_distribution, r),
        )
        .capped(perm_cap),
        Check::new(
            "lambda0-excedance-oracle",
            "lambda = 0: A_n(x) = sum over S_n of x^{e(sigma)}",
            Range::n(7),
            |r: &Range, _| check_permutation_oracle(excedance_distribution, r),
        )
        .capped(perm_cap),
        Check::new(
            "lambda0-classical-eulerian",
            "lambda -> 0 limit gives the classical Eulerian numbers",
            Range::n(20),
            |r: &Range, _| check_classical_eulerian(r),
        )
        .capped(classical_cap),
        Check::new(
            "lambda0-classical-stirling",
            "lambda -> 0 limits of the degenerate Stirling numbers",
            Range::n(12),
            |r: &Range, _| check_classical_stirling(r),
        )
        .capped(classical_cap),
        Check::new(
            "lambda0-classical-bernoulli",
            "lambda -> 0 limit gives the classical Bernoulli numbers",
            Range::n(12),
            |r: &Range, _| check_classical_bernoulli(r),
        )
        .capped(classical_cap),
        Check::new(
            "lambda1-bernoulli-vanishing",
            "lambda = 1: e_1(t) = 1 + t forces beta_{n,1} = 0 for n >= 1",
            Range::n(12),
            |r: &Range, _| check_bernoulli_at_one(r),
        ),
    ]
}

/// Ids of [`registry`], in report order.
pub fn check_ids() -> Vec<String> {
    registry().iter().map(|c| c.id.clone()).collect()
}

/// Evaluates `checks` (concurrently) and returns their reports in input order.
pub fn run_checks(checks: &[Check], overrides: &Range, mode: CompareMode) -> Vec<CheckSpec> {
    checks
        .par_iter()
        .map(|c| c.evaluate(overrides, mode))
        .collect()
}

/// Runs the selected registered checks. Duplicated ids run once.
pub fn run_suite(
    selection: &Selection,
    overrides: &Range,
    mode: CompareMode,
) -> Result<Vec<CheckSpec>, VerifyError> {
    let mut all = registry();
    let chosen = match selection {
        Selection::All => all,
        Selection::Ids(ids) => {
            let valid = check_ids();
            let mut seen = HashSet::new();
            let mut chosen = Vec::new();
            for id in ids {
                if !valid.contains(id) {
                    return Err(VerifyError::UnknownCheck {
                        id: id.clone(),
                        valid,
                    });
                }
                if seen.insert(id.clone()) {
                    let pos = all.iter().position(|c| &c.id == id).unwrap();
                    chosen.push(all.swap_remove(pos));
                }
            }
            chosen
        }
    };
    Ok(run_checks(&chosen, overrides, mode))
}

/// `true` iff every report passed.
pub fn all_passed(reports: &[CheckSpec]) -> bool {
    reports.iter().all(|r| r.status == Status::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids = check_ids();
        let set: HashSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
        assert!(ids.len() >= 16);
    }

    #[test]
    fn unknown_id_is_a_usage_error() {
        let err = run_suite(
            &Selection::Ids(vec!["no-such-id".into()]),
            &Range::default(),
            CompareMode::Exact,
        )
        .unwrap_err();
        let VerifyError::UnknownCheck { id, valid } = &err;
        assert_eq!(id, "no-such-id");
        assert!(valid.contains(&"thm-2.7-worpitzky".to_string()));
        assert!(err.to_string().contains("thm-2.2-vanishing"));
    }

    #[test]
    fn vanishing_passes() {
        let r = run_suite(
            &Selection::Ids(vec!["thm-2.2-vanishing".into()]),
            &Range::n(10),
            CompareMode::Exact,
        )
        .unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].status, Status::Pass);
        assert_eq!(r[0].range.n_max, Some(10));
        assert!(r[0].counterexample.is_none());
    }

    #[test]
    fn overrides_only_touch_existing_parameters_and_respect_caps() {
        let overrides = Range {
            n_max: Some(50),
            m_max: Some(3),
            k_max: None,
        };
        let reg = registry();
        let find = |id: &str| reg.iter().find(|c| c.id() == id).unwrap();
        let perm = find("lambda0-descent-oracle").pending(&overrides);
        assert_eq!(perm.range, Range::n(MAX_PERMUTATION_N));
        assert_eq!(perm.status, Status::Pending);
        let ps = find("thm-2.9-power-sum-eulerian").pending(&overrides);
        assert_eq!(ps.range, Range::n(50).with_m(3));
        let golden = find("eq-13-bernoulli-golden").pending(&overrides);
        assert_eq!(golden.range, Range::n(3));
    }

    #[test]
    fn duplicate_selection_runs_once() {
        let id = "eq-13-bernoulli-golden".to_string();
        let r = run_suite(
            &Selection::Ids(vec![id.clone(), id]),
            &Range::default(),
            CompareMode::Exact,
        )
        .unwrap();
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn perturbed_check_reports_smallest_counterexample() {
        // Recursion table with A(4,2) and A(5,1) corrupted: the scan must stop at (4,2).
        let check = Check::new("perturbed", "self-test", Range::n(6), |r: &Range, mode| {
            let n_max = r.n_bound();
            let table = EulerianTable::build(n_max, EulerianRoute::Recursion);
            let mut rows: Vec<Vec<LambdaPoly>> =
                (0..=n_max).map(|n| table.row(n).to_vec()).collect();
            rows[4][2] = &rows[4][2] + &LambdaPoly::lambda();
            rows[5][1] = &rows[5][1] + &LambdaPoly::one();
            for n in 0..=n_max {
                for k in 0..=n {
                    expect_equal(
                        &[("n", p(n)), ("k", p(k))],
                        &eulerian_explicit(n, k),
                        &rows[n][k],
                        mode,
                    )?;
                }
            }
            Ok(())
        });
        for mode in [CompareMode::Exact, CompareMode::Smoke] {
            let spec = check.evaluate(&Range::default(), mode);
            assert_eq!(spec.status, Status::Fail);
            let cx = spec.counterexample.expect("fail carries a counterexample");
            assert_eq!(cx.params, vec![("n", 4), ("k", 2)]);
            let a42 = eulerian_explicit(4, 2);
            assert_eq!(cx.lhs, a42.to_string());
            assert_eq!(cx.rhs, (&a42 + &LambdaPoly::lambda()).to_string());
        }
    }

    #[test]
    fn smoke_mode_accepts_true_identities() {
        let r = run_suite(
            &Selection::Ids(vec![
                "thm-2.7-worpitzky".into(),
                "thm-2.6-two-term-recursion".into(),
            ]),
            &Range::n(6),
            CompareMode::Smoke,
        )
        .unwrap();
        assert!(all_passed(&r));
    }
}
