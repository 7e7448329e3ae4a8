//! Falling factorials (classical and degenerate), binomial polynomials and
//! integer binomials.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{Coeff, LambdaPoly, LambdaRing, XLPoly};
use super::rational::Rational;

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    // Each prefix product is itself a binomial, so the division is exact.
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// [`binomial`] lifted to a rational scalar.
pub fn binomial_q(n: u64, k: u64) -> Rational {
    Rational::from(binomial(n, k))
}

/// `(base)_{n, s·λ} = base·(base − sλ)·…·(base − (n−1)sλ)`.
///
/// `s = 1` is the degenerate falling factorial, `s = −1` its λ-negated
/// twin; `(base)_{0,·} = 1`.
pub fn falling_factorial_scaled<C: LambdaRing>(base: &C, n: usize, s: &Rational) -> C {
    let step = C::lambda().scale(s);
    let mut acc = C::one();
    let mut factor = base.clone();
    for _ in 0..n {
        acc = acc.mul_ref(&factor);
        factor = factor.sub_ref(&step);
    }
    acc
}

/// `(base)_{n,λ}` in whichever λ-ring `base` lives in.
pub fn falling_factorial_degenerate<C: LambdaRing>(base: &C, n: usize) -> C {
    falling_factorial_scaled(base, n, &Rational::one())
}

/// `(c)_{n,λ}` for a rational constant `c`.
pub fn falling_factorial_const(c: &Rational, n: usize) -> LambdaPoly {
    falling_factorial_degenerate(&LambdaPoly::constant(c.clone()), n)
}

/// `(x)_{n,λ}` as a bivariate polynomial.
pub fn degenerate_falling_x(n: usize) -> XLPoly {
    falling_factorial_degenerate(&XLPoly::var(), n)
}

/// Classical `(x)_n = x(x−1)⋯(x−n+1)`, free of λ.
pub fn falling_factorial_classical(n: usize) -> XLPoly {
    let x = XLPoly::var();
    (0..n).fold(XLPoly::one(), |acc, i| {
        let shifted = &x - &XLPoly::from_rational(Rational::from(i));
        acc * shifted
    })
}

/// `C(x + offset, n) = (x+offset)(x+offset−1)⋯(x+offset−n+1) / n!`.
pub fn binomial_poly(offset: i64, n: usize) -> XLPoly {
    let x = XLPoly::var();
    let numerator = (0..n).fold(XLPoly::one(), |acc, i| {
        let shift = Rational::from(offset) - Rational::from(i);
        acc * (&x + &XLPoly::from_rational(shift))
    });
    numerator.scale(&Rational::from(factorial(n)).recip())
}

/// Falling factorials `(c)_{n,λ}` for `c = 0..=c_max`, shared across an
/// explicit sum so each product is built once.
#[derive(Debug, Clone)]
pub struct FallingTable {
    n: usize,
    values: Vec<LambdaPoly>,
}

impl FallingTable {
    pub fn new(n: usize, c_max: usize, s: &Rational) -> Self {
        let values = (0..=c_max)
            .map(|c| falling_factorial_scaled(&LambdaPoly::constant(Rational::from(c)), n, s))
            .collect();
        FallingTable { n, values }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, c: usize) -> &LambdaPoly {
        &self.values[c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> LambdaPoly {
        LambdaPoly::from_rationals(c.iter().copied())
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn degenerate_falling_examples() {
        // x² − λx
        let expected = XLPoly::new(vec![lp(&[]), lp(&[0, -1]), lp(&[1])]);
        assert_eq!(degenerate_falling_x(2), expected);
        assert_eq!(degenerate_falling_x(0), XLPoly::one());
        // (1)(1−λ)(1−2λ), expanded by hand
        assert_eq!(
            falling_factorial_const(&Rational::one(), 3),
            lp(&[1, -3, 2])
        );
    }

    #[test]
    fn degenerate_falling_degrees() {
        for n in 1..8 {
            let p = degenerate_falling_x(n);
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.lambda_degree(), Some(n - 1));
        }
        // (2)_{3,λ} = 2(2−λ)(2−2λ) has full degree; (1)_{3,λ} too.
        assert_eq!(
            falling_factorial_const(&Rational::from(2), 3).degree(),
            Some(2)
        );
        // 0 is on the lattice: (0)_{n,λ} = 0 for n ≥ 1.
        assert!(falling_factorial_const(&Rational::zero(), 3).is_zero());
    }

    #[test]
    fn classical_falling_examples() {
        assert_eq!(
            falling_factorial_classical(2),
            XLPoly::new(vec![lp(&[]), lp(&[-1]), lp(&[1])])
        );
        assert_eq!(falling_factorial_classical(0), XLPoly::one());
        assert_eq!(
            falling_factorial_classical(3),
            XLPoly::new(vec![lp(&[]), lp(&[2]), lp(&[-3]), lp(&[1])])
        );
    }

    #[test]
    fn limits_of_degenerate_falling() {
        for n in 0..8 {
            let p = degenerate_falling_x(n);
            assert_eq!(
                p.eval_lambda(&Rational::zero()),
                XLPoly::var().pow(n as u32)
            );
            assert_eq!(
                p.eval_lambda(&Rational::one()),
                falling_factorial_classical(n)
            );
        }
    }

    #[test]
    fn binomial_poly_examples() {
        assert_eq!(binomial_poly(0, 1), XLPoly::var());
        let half = LambdaPoly::constant(q("1/2"));
        assert_eq!(
            binomial_poly(1, 2),
            XLPoly::new(vec![LambdaPoly::zero(), half.clone(), half])
        );
        assert_eq!(binomial_poly(7, 0), XLPoly::one());
    }

    fn pascal(size: usize) -> Vec<Vec<u64>> {
        let mut rows = vec![vec![1u64]];
        for r in 1..size {
            let prev = &rows[r - 1];
            let mut row = vec![1u64; r + 1];
            for i in 1..r {
                row[i] = prev[i - 1] + prev[i];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_poly_matches_pascal() {
        let tri = pascal(26);
        let pascal_at = |a: usize, b: usize| if b > a { 0 } else { tri[a][b] };
        for n in 0..=12 {
            for k in 0..=12i64 {
                let p = binomial_poly(k, n);
                for m in 0..=12usize {
                    let value = p.eval_x(&Rational::from(m)).eval_lambda(&Rational::zero());
                    let expected = pascal_at(m + k as usize, n);
                    assert_eq!(value, Rational::from(expected), "C({m}+{k}, {n})");
                    assert_eq!(
                        binomial((m + k as usize) as u64, n as u64),
                        BigInt::from(expected)
                    );
                }
            }
        }
    }

    #[test]
    fn falling_table_matches_direct() {
        let t = FallingTable::new(5, 4, &Rational::from(-1));
        for c in 0..=4 {
            let direct = falling_factorial_scaled(
                &LambdaPoly::constant(Rational::from(c)),
                5,
                &Rational::from(-1),
            );
            assert_eq!(t.get(c), &direct);
        }
        assert_eq!(t.order(), 5);
    }
}
