use crate::algebra::{
    binomial_q, degenerate_falling_x, factorial, falling_factorial_classical,
    falling_factorial_const, LambdaPoly, Rational, XLPoly,
};

use super::eulerian::{EulerianRoute, EulerianTable};

/// How degenerate Stirling numbers of the second kind are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stirling2Route {
    /// Alternating sum over `(j)_{n,λ}`.
    Explicit,
    /// Binomial transform of the λ-negated Eulerian row.
    Eulerian,
}

fn inverse_factorial(k: usize) -> Rational {
    Rational::from(factorial(k)).recip()
}

/// `{n brace k}_λ = ((−1)^k/k!) Σ_j (−1)^j C(k,j) (j)_{n,λ}`; zero for `k > n`.
pub fn stirling2_degenerate(n: usize, k: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::zero();
    for j in 0..=k {
        let term =
            falling_factorial_const(&Rational::from(j), n).scale(&binomial_q(k as u64, j as u64));
        if (k + j).is_multiple_of(2) {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc.scale(&inverse_factorial(k))
}

/// `{n brace k}_λ = (1/k!) Σ_j A_{−λ}(n,j) C(j, n−k)` from a row of
/// `A_{−λ}(n, ·)`.
pub(crate) fn stirling2_from_negated_row(
    negated_row: &[LambdaPoly],
    n: usize,
    k: usize,
) -> LambdaPoly {
    let mut acc = LambdaPoly::zero();
    for (j, a) in negated_row.iter().enumerate() {
        let c = binomial_q(j as u64, (n - k) as u64);
        if !c.is_zero() {
            acc += &a.scale(&c);
        }
    }
    acc.scale(&inverse_factorial(k))
}

/// `{n brace k}_λ` from the degenerate Eulerian numbers with λ negated.
///
/// Panics if `k > n`.
pub fn stirling2_from_eulerian(n: usize, k: usize) -> LambdaPoly {
    assert!(
        k <= n,
        "stirling2_from_eulerian needs k <= n (got n={n}, k={k})"
    );
    let table = EulerianTable::build(n, EulerianRoute::Explicit).negated_lambda();
    stirling2_from_negated_row(table.row(n), n, k)
}

pub fn stirling2(n: usize, k: usize, route: Stirling2Route) -> LambdaPoly {
    match route {
        Stirling2Route::Explicit => stirling2_degenerate(n, k),
        Stirling2Route::Eulerian if k > n => LambdaPoly::zero(),
        Stirling2Route::Eulerian => stirling2_from_eulerian(n, k),
    }
}

/// Rows `0..=n_max` of `{n brace k}_λ`, each of length `n + 1`.
pub fn stirling2_triangle(n_max: usize, route: Stirling2Route) -> Vec<Vec<LambdaPoly>> {
    match route {
        Stirling2Route::Explicit => (0..=n_max)
            .map(|n| (0..=n).map(|k| stirling2_degenerate(n, k)).collect())
            .collect(),
        Stirling2Route::Eulerian => {
            let negated = EulerianTable::build(n_max, EulerianRoute::Explicit).negated_lambda();
            (0..=n_max)
                .map(|n| {
                    (0..=n)
                        .map(|k| stirling2_from_negated_row(negated.row(n), n, k))
                        .collect()
                })
                .collect()
        }
    }
}

/// `S_{1,λ}(n, 0..=n)`: coordinates of `(x)_n` in the basis `(x)_{k,λ}`.
///
/// Each `(x)_{k,λ}` is monic of x-degree `k`, so peeling off the leading
/// x-term from the top down is an exact triangular solve.
pub fn stirling1_row(n: usize) -> Vec<LambdaPoly> {
    let mut remainder = falling_factorial_classical(n);
    let mut row = vec![LambdaPoly::zero(); n + 1];
    for k in (0..=n).rev() {
        let c = remainder.coeff(k);
        if !c.is_zero() {
            remainder -= &degenerate_falling_x(k).mul_coeff(&c);
        }
        row[k] = c;
    }
    debug_assert!(remainder.is_zero());
    row
}

/// `S_{1,λ}(n,k)`; zero for `k > n`.
pub fn stirling1_degenerate(n: usize, k: usize) -> LambdaPoly {
    if k > n {
        return LambdaPoly::zero();
    }
    stirling1_row(n).swap_remove(k)
}

/// `A_λ(n, k−1) = (−1)^k Σ_{j≤k} (−1)^j C(n−j, n−k) j! {n brace j}_λ`,
/// given `{n brace j}_λ` for `j = 0..=n`.
pub(crate) fn eulerian_from_stirling2_row(s2_row: &[LambdaPoly], n: usize, k: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::zero();
    for (j, s) in s2_row.iter().enumerate().take(k + 1) {
        let weight = binomial_q((n - j) as u64, (n - k) as u64) * Rational::from(factorial(j));
        let term = s.scale(&weight);
        if (k + j).is_multiple_of(2) {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// `A_λ(n, k−1)` from degenerate Stirling numbers of the second kind.
///
/// Panics unless `1 ≤ k ≤ n`.
pub fn eulerian_from_stirling2(n: usize, k: usize) -> LambdaPoly {
    assert!(
        n >= 1 && (1..=n).contains(&k),
        "eulerian_from_stirling2 needs 1 <= k <= n (got n={n}, k={k})"
    );
    let row: Vec<LambdaPoly> = (0..=n).map(|j| stirling2_degenerate(n, j)).collect();
    eulerian_from_stirling2_row(&row, n, k)
}

/// `Σ_k k! {n brace k}_λ C(x, k)`, which should reproduce `(x)_{n,λ}`.
pub fn stirling2_binomial_expansion(n: usize) -> XLPoly {
    (0..=n)
        .map(|k| {
            let weight = stirling2_degenerate(n, k).scale(&Rational::from(factorial(k)));
            crate::algebra::binomial_poly(0, k).mul_coeff(&weight)
        })
        .sum()
}
