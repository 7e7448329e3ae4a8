use crate::algebra::{
    binomial_q, falling_factorial_const, FallingTable, LambdaPoly, LambdaRing, Rational, XLPoly,
};
use crate::egf::bernoulli_taps;

/// How a table of degenerate Eulerian numbers is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerianRoute {
    /// Alternating sum of degenerate falling factorials.
    Explicit,
    /// Two-term recursion in `(n, k)`.
    Recursion,
    /// Polynomial recursion in `A_{n,λ}(x)` read off the generating function.
    GfRecursion,
}

impl EulerianRoute {
    pub const ALL: [EulerianRoute; 3] = [
        EulerianRoute::Explicit,
        EulerianRoute::Recursion,
        EulerianRoute::GfRecursion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EulerianRoute::Explicit => "explicit",
            EulerianRoute::Recursion => "recursion",
            EulerianRoute::GfRecursion => "gf-recursion",
        }
    }
}

/// Triangle of `A_λ(n, k)` for `0 ≤ k ≤ n ≤ max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianTable {
    route: EulerianRoute,
    rows: Vec<Vec<LambdaPoly>>,
}

impl EulerianTable {
    pub fn build(max_n: usize, route: EulerianRoute) -> Self {
        let rows = match route {
            EulerianRoute::Explicit => (0..=max_n).map(explicit_row).collect(),
            EulerianRoute::Recursion => recursion_rows(max_n),
            EulerianRoute::GfRecursion => eulerian_polys_gf_recursion(max_n)
                .iter()
                .enumerate()
                .map(|(n, p)| (0..=n).map(|k| p.coeff(k)).collect())
                .collect(),
        };
        EulerianTable { route, rows }
    }

    pub fn route(&self) -> EulerianRoute {
        self.route
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Row `n`, of length `n + 1`.
    pub fn row(&self, n: usize) -> &[LambdaPoly] {
        &self.rows[n]
    }

    /// `A_λ(n, k)`; zero outside the triangle, as the recursion requires.
    pub fn get(&self, n: usize, k: i64) -> LambdaPoly {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.rows.get(n)?.get(k))
            .cloned()
            .unwrap_or_default()
    }

    /// `A_{n,λ}(x) = Σ_k A_λ(n,k) xᵏ`.
    pub fn poly(&self, n: usize) -> XLPoly {
        XLPoly::new(self.rows[n].clone())
    }

    /// The same triangle with λ replaced by −λ, i.e. `A_{−λ}(n, k)`.
    pub fn negated_lambda(&self) -> Self {
        let minus = Rational::from(-1);
        EulerianTable {
            route: self.route,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|a| a.substitute_lambda(&minus)).collect())
                .collect(),
        }
    }
}

fn explicit_from_table(falling: &FallingTable, n: usize, k: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::zero();
    for i in 0..=k {
        let term = falling
            .get(k - i + 1)
            .scale(&binomial_q(n as u64 + 1, i as u64));
        if i % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

fn explicit_row(n: usize) -> Vec<LambdaPoly> {
    let falling = FallingTable::new(n, n + 1, &Rational::one());
    (0..=n)
        .map(|k| explicit_from_table(&falling, n, k))
        .collect()
}

/// `A_λ(n,k) = Σ_{i=0}^{k} C(n+1,i)(−1)^i (k−i+1)_{n,λ}`.
///
/// Total in `k`: for `k > n` the sum collapses to the zero polynomial.
pub fn eulerian_explicit(n: usize, k: usize) -> LambdaPoly {
    let falling = FallingTable::new(n, k + 1, &Rational::one());
    explicit_from_table(&falling, n, k)
}

fn recursion_rows(max_n: usize) -> Vec<Vec<LambdaPoly>> {
    let mut rows: Vec<Vec<LambdaPoly>> = vec![vec![LambdaPoly::one()]];
    let lambda = LambdaPoly::lambda();
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let shift = lambda.scale(&Rational::from(n - 1));
        let row = (0..=n)
            .map(|k| {
                let mut a = LambdaPoly::zero();
                if k >= 1 {
                    let left = &LambdaPoly::constant(Rational::from(n - k)) + &shift;
                    a += &(&left * &prev[k - 1]);
                }
                if k < n {
                    let right = &LambdaPoly::constant(Rational::from(k + 1)) - &shift;
                    a += &(&right * &prev[k]);
                }
                a
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `A_λ(n,k)` from the two-term recursion, memoized over the triangle up
/// to row `n` for this call only.
///
/// Panics if `k > n`.
pub fn eulerian_recursive(n: usize, k: usize) -> LambdaPoly {
    assert!(k <= n, "recursion route needs k <= n (got n={n}, k={k})");
    recursion_rows(n).swap_remove(n).swap_remove(k)
}

/// `A_{0,λ}(x) … A_{n_max,λ}(x)` via
/// `A_{n,λ}(x) = Σ_{i<n} C(n,i) A_{i,λ}(x) (1)_{n−i,−λ} (x−1)^{n−i−1}`.
pub fn eulerian_polys_gf_recursion(n_max: usize) -> Vec<XLPoly> {
    let x_minus_1 = &XLPoly::var() - &XLPoly::one();
    let minus = Rational::from(-1);
    let unit_falling: Vec<LambdaPoly> = (0..=n_max)
        .map(|j| falling_factorial_const(&Rational::one(), j).substitute_lambda(&minus))
        .collect();
    let shifts: Vec<XLPoly> = (0..n_max).map(|j| x_minus_1.pow(j as u32)).collect();
    let mut polys: Vec<XLPoly> = vec![XLPoly::one()];
    for n in 1..=n_max {
        let mut acc = XLPoly::zero();
        for (i, a_i) in polys.iter().enumerate() {
            let weight = unit_falling[n - i].scale(&binomial_q(n as u64, i as u64));
            acc += &(a_i * &shifts[n - i - 1]).mul_coeff(&weight);
        }
        polys.push(acc);
    }
    polys
}

/// `A_{n,λ}(x)` by the chosen route.
pub fn eulerian_poly(n: usize, route: EulerianRoute) -> XLPoly {
    match route {
        EulerianRoute::GfRecursion => eulerian_polys_gf_recursion(n).swap_remove(n),
        _ => EulerianTable::build(n, route).poly(n),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinusOneRoute {
    /// Evaluate `A_{n,λ}(x)` at `x = −1`.
    Direct,
    /// Closed form through `β_{n+1,λ}` and `β_{n+1,λ/2}`.
    Bernoulli,
}

/// `2^{n+1}(2^{n+1} β_{n+1,λ/2} − β_{n+1,λ})/(n+1)` given `β_{n+1,λ}`.
pub(crate) fn minus_one_from_bernoulli(n: usize, beta_next: &LambdaPoly) -> LambdaPoly {
    if n == 0 {
        return LambdaPoly::one();
    }
    let two_pow = Rational::from(2).pow(n as u32 + 1);
    let halved = beta_next.substitute_lambda(&Rational::new(1, 2));
    let inner = &halved.scale(&two_pow) - beta_next;
    inner.scale(&(&two_pow / &Rational::from(n + 1)))
}

/// `A_{n,λ}(−1)`.
pub fn eulerian_at_minus_one(n: usize, route: MinusOneRoute) -> LambdaPoly {
    match route {
        MinusOneRoute::Direct => {
            eulerian_poly(n, EulerianRoute::Explicit).eval_x(&Rational::from(-1))
        }
        MinusOneRoute::Bernoulli => {
            let beta = bernoulli_taps(n + 1);
            minus_one_from_bernoulli(n, &beta[n + 1])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> LambdaPoly {
        LambdaPoly::from_rationals(c.iter().copied())
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(eulerian_explicit(1, 0), lp(&[1]));
        assert!(eulerian_explicit(1, 1).is_zero());
        assert_eq!(eulerian_explicit(2, 0), lp(&[1, -1]));
        assert_eq!(eulerian_explicit(2, 1), lp(&[1, 1]));
        assert!(eulerian_explicit(2, 2).is_zero());
        assert_eq!(eulerian_explicit(3, 1), lp(&[4, 0, -4]));
        assert_eq!(
            eulerian_explicit(3, 1).eval_lambda(&Rational::zero()),
            Rational::from(4)
        );
        assert!(eulerian_explicit(3, 4).is_zero());
    }

    #[test]
    fn recursive_examples() {
        assert_eq!(eulerian_recursive(2, 1), lp(&[1, 1]));
        assert_eq!(eulerian_recursive(1, 0), lp(&[1]));
        assert_eq!(eulerian_recursive(3, 2), lp(&[1, 3, 2]));
        assert_eq!(eulerian_recursive(3, 2), eulerian_explicit(3, 2));
    }

    #[test]
    fn poly_examples() {
        for route in EulerianRoute::ALL {
            assert_eq!(eulerian_poly(0, route), XLPoly::one());
            assert_eq!(
                eulerian_poly(2, route),
                XLPoly::new(vec![lp(&[1, -1]), lp(&[1, 1])]),
                "{route:?}"
            );
            assert_eq!(
                eulerian_poly(3, route),
                XLPoly::new(vec![lp(&[1, -3, 2]), lp(&[4, 0, -4]), lp(&[1, 3, 2])]),
                "{route:?}"
            );
        }
    }

    #[test]
    fn table_lookup_outside_triangle_is_zero() {
        let t = EulerianTable::build(4, EulerianRoute::Recursion);
        assert!(t.get(3, -1).is_zero());
        assert!(t.get(3, 4).is_zero());
        assert!(t.get(9, 0).is_zero());
        assert_eq!(t.get(0, 0), LambdaPoly::one());
        assert_eq!(t.max_n(), 4);
    }

    #[test]
    fn minus_one_examples() {
        for route in [MinusOneRoute::Direct, MinusOneRoute::Bernoulli] {
            assert_eq!(eulerian_at_minus_one(0, route), LambdaPoly::one());
            assert_eq!(eulerian_at_minus_one(1, route), LambdaPoly::one());
            assert_eq!(eulerian_at_minus_one(2, route), lp(&[0, -2]), "{route:?}");
        }
    }

    #[test]
    fn negated_table() {
        let t = EulerianTable::build(2, EulerianRoute::Explicit).negated_lambda();
        assert_eq!(t.get(2, 0), lp(&[1, 1]));
        assert_eq!(t.get(2, 1), lp(&[1, -1]));
    }
}
