//! Truncated exponential generating functions in `t`.
//!
//! An [`Egf`] of order `N` stores taps `a_0 … a_N` for
//! `f(t) = Σ a_n tⁿ/n!`. Products are binomial convolutions of taps. Series
//! are never inverted; identities with a non-unit constant term are solved
//! or checked by cross-multiplication.

use thiserror::Error;

use crate::algebra::{
    binomial_q, falling_factorial_const, falling_factorial_scaled, Coeff, LambdaPoly, LambdaRing,
    Rational, XLPoly,
};
use crate::sequences::{EulerianRoute, EulerianTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("truncation orders differ: {left} vs {right}")]
pub struct OrderMismatch {
    pub left: usize,
    pub right: usize,
}

/// Which sign of the parameter a degenerate exponential uses: `e_λ` or `e_{−λ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaSign {
    Plus,
    Minus,
}

impl LambdaSign {
    fn scale(self) -> Rational {
        match self {
            LambdaSign::Plus => Rational::one(),
            LambdaSign::Minus => Rational::from(-1),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Egf<C> {
    taps: Vec<C>,
}

impl<C: Coeff> Egf<C> {
    /// Panics unless `taps.len() == order + 1`.
    pub fn new(order: usize, taps: Vec<C>) -> Self {
        assert_eq!(
            taps.len(),
            order + 1,
            "an order-{order} series needs {} taps",
            order + 1
        );
        Egf { taps }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Egf {
            taps: (0..=order).map(f).collect(),
        }
    }

    /// The series with tap_0 = `c` and all other taps zero.
    pub fn constant(order: usize, c: C) -> Self {
        Self::from_fn(order, |n| if n == 0 { c.clone() } else { C::zero() })
    }

    pub fn order(&self) -> usize {
        self.taps.len() - 1
    }

    pub fn taps(&self) -> &[C] {
        &self.taps
    }

    pub fn tap(&self, n: usize) -> &C {
        &self.taps[n]
    }

    pub fn into_taps(self) -> Vec<C> {
        self.taps
    }

    pub fn is_zero(&self) -> bool {
        self.taps.iter().all(C::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<(), OrderMismatch> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    /// Order-`N` truncated product: `tap_n = Σ_k C(n,k) a_k b_{n−k}`.
    pub fn try_mul(&self, other: &Self) -> Result<Self, OrderMismatch> {
        self.check_order(other)?;
        let order = self.order();
        let mut taps = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = C::zero();
            for k in 0..=n {
                let (a, b) = (&self.taps[k], &other.taps[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add_ref(&a.mul_ref(b).scale(&binomial_q(n as u64, k as u64)));
            }
            taps.push(acc);
        }
        Ok(Egf { taps })
    }

    /// Like [`Egf::try_mul`]; mixing truncation orders is a contract
    /// violation and panics.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, OrderMismatch> {
        self.check_order(other)?;
        Ok(Egf {
            taps: self
                .taps
                .iter()
                .zip(&other.taps)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, OrderMismatch> {
        self.check_order(other)?;
        Ok(Egf {
            taps: self
                .taps
                .iter()
                .zip(&other.taps)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Egf::constant(self.order(), C::one()), |acc, _| {
            acc.mul(self)
        })
    }
}

/// `e_{±λ}(u·t)`: tap_n = `(1)_{n,±λ} · uⁿ`.
pub fn degenerate_exp<C: LambdaRing>(u: &C, sign: LambdaSign, order: usize) -> Egf<C> {
    let s = sign.scale();
    let mut u_pow = C::one();
    Egf::from_fn(order, |n| {
        let unit = falling_factorial_scaled(&C::one(), n, &s);
        let tap = unit.mul_ref(&u_pow);
        u_pow = u_pow.mul_ref(u);
        tap
    })
}

/// `e_{±λ}^{base}(t)`: tap_n = `(base)_{n,±λ}`.
pub fn degenerate_exp_power<C: LambdaRing>(base: &C, sign: LambdaSign, order: usize) -> Egf<C> {
    let s = sign.scale();
    Egf::from_fn(order, |n| falling_factorial_scaled(base, n, &s))
}

/// Degenerate Bernoulli numbers `β_{0,λ} … β_{N,λ}`, the taps of
/// `t/(e_λ(t) − 1)`.
///
/// Solved triangularly from `B(t)·(e_λ(t) − 1)/t = 1`, where the divided
/// series has tap_n = `(1)_{n+1,λ}/(n+1)` and tap_0 = 1.
pub fn bernoulli_taps(order: usize) -> Vec<LambdaPoly> {
    let divided: Vec<LambdaPoly> = (0..=order)
        .map(|n| {
            falling_factorial_const(&Rational::one(), n + 1).scale(&Rational::new(1, n as i64 + 1))
        })
        .collect();
    let mut beta: Vec<LambdaPoly> = Vec::with_capacity(order + 1);
    beta.push(LambdaPoly::one());
    for n in 1..=order {
        let mut acc = LambdaPoly::zero();
        for (k, b) in beta.iter().enumerate() {
            acc += &(b * &divided[n - k]).scale(&binomial_q(n as u64, k as u64));
        }
        beta.push(-acc);
    }
    beta
}

/// `S(t)·(x − e_{−λ}((x−1)t)) − (x − 1)` for a candidate series `S`.
///
/// `S` has the degenerate Eulerian generating function exactly when every
/// tap of the result is zero.
pub fn gf_residual_for(series: &Egf<XLPoly>) -> Egf<XLPoly> {
    let order = series.order();
    let x = XLPoly::var();
    let x_minus_1 = &x - &XLPoly::one();
    let denominator =
        Egf::constant(order, x.clone()).sub(&degenerate_exp(&x_minus_1, LambdaSign::Minus, order));
    series
        .mul(&denominator)
        .sub(&Egf::constant(order, x_minus_1))
}

/// Residual of the Eulerian generating function with taps `A_{n,λ}(x)`
/// taken from the explicit-sum route, through order `n_max`.
pub fn gf_residual(n_max: usize) -> Egf<XLPoly> {
    let table = EulerianTable::build(n_max, EulerianRoute::Explicit);
    let series = Egf::from_fn(n_max, |n| table.poly(n));
    gf_residual_for(&series)
}
