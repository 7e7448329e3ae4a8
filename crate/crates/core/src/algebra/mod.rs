//! Exact base rings: `Q`, `Q[λ]`, `Q[λ][x]`, and the falling-factorial and
//! binomial constructors built on them.

mod factorial;
mod poly;
mod rational;

pub use factorial::{
    binomial, binomial_poly, binomial_q, degenerate_falling_x, factorial,
    falling_factorial_classical, falling_factorial_const, falling_factorial_degenerate,
    falling_factorial_scaled, FallingTable,
};
pub use poly::{Coeff, LambdaPoly, LambdaRing, Poly, XLPoly};
pub use rational::{ParseRationalError, Rational};
