use crate::algebra::{binomial_q, falling_factorial_degenerate, LambdaPoly, XLPoly};
use crate::egf::bernoulli_taps;

/// `β_{n,λ}`.
pub fn bernoulli_number(n: usize) -> LambdaPoly {
    bernoulli_taps(n).swap_remove(n)
}

/// `β_{n,λ}(x) = Σ_k C(n,k) β_{k,λ} (x)_{n−k,λ}`, given `β_{0..=n,λ}`.
pub(crate) fn bernoulli_polynomial_from(beta: &[LambdaPoly], n: usize) -> XLPoly {
    let x = XLPoly::var();
    let mut falling = XLPoly::one();
    let mut acc = XLPoly::zero();
    for j in 0..=n {
        // j = n − k
        let k = n - j;
        let weight = beta[k].scale(&binomial_q(n as u64, k as u64));
        acc += &falling.mul_coeff(&weight);
        falling = falling_factorial_degenerate(&x, j + 1);
    }
    acc
}

/// `β_{n,λ}(x)`.
pub fn bernoulli_polynomial(n: usize) -> XLPoly {
    bernoulli_polynomial_from(&bernoulli_taps(n), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn low_order_polynomials() {
        assert_eq!(bernoulli_polynomial(0), XLPoly::one());
        let beta1 = LambdaPoly::new(vec![q("-1/2"), q("1/2")]);
        assert_eq!(bernoulli_number(1), beta1);
        assert_eq!(
            bernoulli_polynomial(1),
            XLPoly::new(vec![beta1, LambdaPoly::one()])
        );
    }

    #[test]
    fn value_at_zero_is_the_number() {
        for n in 0..=8 {
            assert_eq!(
                bernoulli_polynomial(n).eval_x(&Rational::zero()),
                bernoulli_number(n)
            );
        }
        assert_eq!(
            bernoulli_polynomial(2).eval_x(&Rational::zero()),
            LambdaPoly::new(vec![q("1/6"), q("0"), q("-1/6")])
        );
    }
}
