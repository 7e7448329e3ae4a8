//! Dense univariate polynomials over an exact coefficient ring.
//!
//! [`LambdaPoly`] is `Q[λ]`; [`XLPoly`] is `Q[λ][x]`, a polynomial in `x`
//! whose coefficients are themselves polynomials in `λ`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::rational::Rational;

/// Commutative ring operations needed by [`Poly`] and by EGF arithmetic.
///
/// Every ring here is a `Q`-algebra, hence [`Coeff::scale`].
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, s: &Rational) -> Self;
    fn from_rational(r: Rational) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Rational) -> Self {
        self * s
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}

/// Polynomial with coefficients `coeffs[i]` of `var^i`, with no trailing
/// zeros. The zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial in the formal parameter λ with rational coefficients.
pub type LambdaPoly = Poly<Rational>;

/// Polynomial in `x` with [`LambdaPoly`] coefficients.
pub type XLPoly = Poly<LambdaPoly>;

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(C::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c · var^degree`.
    pub fn monomial(c: C, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); degree];
        coeffs.push(c);
        Poly { coeffs }
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Horner evaluation at `v`.
    pub fn eval(&self, v: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.mul_ref(v).add_ref(c))
    }

    /// Applies `f` to every coefficient and re-canonicalizes.
    pub fn map_coeffs<D: Coeff>(&self, f: impl FnMut(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = o.add_ref(s);
        }
        Poly::new(out)
    }

    fn sub_impl(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg_ref(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(out)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Coeff for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub_impl(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
    fn neg_ref(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(C::neg_ref).collect(),
        }
    }
    fn scale(&self, s: &Rational) -> Self {
        Poly::scale(self, s)
    }
    fn from_rational(r: Rational) -> Self {
        Poly::constant(C::from_rational(r))
    }
}

macro_rules! poly_binop {
    ($Trait:ident, $method:ident, $impl:ident) => {
        impl<C: Coeff> $Trait<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$impl(rhs)
            }
        }
        impl<C: Coeff> $Trait<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                self.$impl(&rhs)
            }
        }
        impl<C: Coeff> $Trait<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$impl(rhs)
            }
        }
        impl<C: Coeff> $Trait<Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                self.$impl(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, add_impl);
poly_binop!(Sub, sub, sub_impl);
poly_binop!(Mul, mul, mul_impl);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_ref()
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_ref()
    }
}

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        *self = self.add_impl(rhs);
    }
}

impl<C: Coeff> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        *self = self.sub_impl(rhs);
    }
}

impl<C: Coeff> std::iter::Sum for Poly<C> {
    fn sum<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

/// Rings that contain the formal parameter λ.
pub trait LambdaRing: Coeff {
    fn lambda() -> Self;

    /// Replaces λ by `s·λ`.
    fn substitute_lambda(&self, s: &Rational) -> Self;

    /// Sets λ to the value `v`, keeping the element in the same ring.
    fn specialize_lambda(&self, v: &Rational) -> Self;

    /// Largest λ-power present; `None` for zero.
    fn lambda_degree(&self) -> Option<usize>;
}

impl LambdaPoly {
    pub fn from_rationals<I, R>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = R>,
        R: Into<Rational>,
    {
        Poly::new(coeffs.into_iter().map(Into::into).collect())
    }

    /// Exact value at `λ = v`.
    pub fn eval_lambda(&self, v: &Rational) -> Rational {
        self.eval(v)
    }

    /// The constant term, if the polynomial has no λ dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}

impl LambdaRing for LambdaPoly {
    fn lambda() -> Self {
        Poly::var()
    }

    fn substitute_lambda(&self, s: &Rational) -> Self {
        let mut factor = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &factor);
            factor *= s;
        }
        Poly::new(out)
    }

    fn specialize_lambda(&self, v: &Rational) -> Self {
        Poly::constant(self.eval(v))
    }

    fn lambda_degree(&self) -> Option<usize> {
        self.degree()
    }
}

impl XLPoly {
    /// Lifts a λ-polynomial to a constant in `x`.
    pub fn from_lambda(p: LambdaPoly) -> Self {
        Poly::constant(p)
    }

    /// Evaluates at `x = v`, leaving a polynomial in λ.
    pub fn eval_x(&self, v: &Rational) -> LambdaPoly {
        self.eval(&LambdaPoly::constant(v.clone()))
    }

    /// Sets `λ = v`; the result has constant λ-coefficients.
    pub fn eval_lambda(&self, v: &Rational) -> XLPoly {
        self.specialize_lambda(v)
    }
}

impl LambdaRing for XLPoly {
    fn lambda() -> Self {
        Poly::constant(LambdaPoly::lambda())
    }

    fn substitute_lambda(&self, s: &Rational) -> Self {
        self.map_coeffs(|c| c.substitute_lambda(s))
    }

    fn specialize_lambda(&self, v: &Rational) -> Self {
        self.map_coeffs(|c| c.specialize_lambda(v))
    }

    fn lambda_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(LambdaPoly::degree).max()
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn superscript(n: usize) -> String {
    n.to_string()
        .bytes()
        .map(|b| SUPERSCRIPTS[(b - b'0') as usize])
        .collect()
}

fn power_suffix(var: char, i: usize) -> String {
    match i {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}{}", superscript(i)),
    }
}

/// Renders as e.g. `1 - 3λ + 2λ²`.
impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(&power_suffix('λ', i))?;
            first = false;
        }
        Ok(())
    }
}

/// Renders as e.g. `(1 - λ) + (1 + λ)x`.
impl fmt::Display for XLPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            let is_unit = c.as_constant().is_some_and(|r| r.is_one());
            let terms = c.coeffs.iter().filter(|r| !r.is_zero()).count();
            let bare = terms == 1 && !c.leading().is_some_and(Rational::is_negative);
            if j > 0 && is_unit {
                // bare x^j
            } else if bare {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})")?;
            }
            f.write_str(&power_suffix('x', j))?;
            first = false;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
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
    fn difference_of_squares() {
        assert_eq!(&lp(&[1, -1]) * &lp(&[1, 1]), lp(&[1, 0, -1]));
    }

    #[test]
    fn additive_identity_and_trimming() {
        let p = lp(&[3, 0, 5]);
        assert_eq!(&p + &LambdaPoly::zero(), p);
        assert_eq!(lp(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(lp(&[0, 0]).is_zero());
        assert_eq!(&p - &p, LambdaPoly::zero());
        assert_eq!(LambdaPoly::zero().degree(), None);
    }

    #[test]
    fn bivariate_square() {
        let x_minus_1 = &XLPoly::var() - &XLPoly::one();
        let expected = XLPoly::new(vec![lp(&[1]), lp(&[-2]), lp(&[1])]);
        assert_eq!(x_minus_1.pow(2), expected);
        assert_eq!(x_minus_1.pow(0), XLPoly::one());
    }

    #[test]
    fn lambda_substitution() {
        let beta2 = LambdaPoly::new(vec![q("1/6"), q("0"), q("-1/6")]);
        let halved = beta2.substitute_lambda(&q("1/2"));
        assert_eq!(halved, LambdaPoly::new(vec![q("1/6"), q("0"), q("-1/24")]));
        assert_eq!(beta2.substitute_lambda(&Rational::one()), beta2);
        assert_eq!(
            beta2.substitute_lambda(&Rational::zero()),
            lp(&[1]).scale(&q("1/6"))
        );
    }

    #[test]
    fn lambda_evaluation() {
        let p = lp(&[1, -3, 2]);
        assert_eq!(p.eval_lambda(&Rational::zero()), Rational::one());
        assert_eq!(p.eval_lambda(&Rational::one()), Rational::zero());
        assert_eq!(
            lp(&[4, 0, -4]).eval_lambda(&Rational::zero()),
            Rational::from(4)
        );
    }

    #[test]
    fn xl_evaluation() {
        // (1 - λ) + (1 + λ)x
        let a2 = XLPoly::new(vec![lp(&[1, -1]), lp(&[1, 1])]);
        assert_eq!(a2.eval_x(&Rational::from(-1)), lp(&[0, -2]));
        assert_eq!(
            a2.eval_lambda(&Rational::from(2)),
            XLPoly::new(vec![lp(&[-1]), lp(&[3])])
        );
        assert_eq!(a2.lambda_degree(), Some(1));
    }

    #[test]
    fn human_rendering() {
        assert_eq!(lp(&[1, -3, 2]).to_string(), "1 - 3λ + 2λ²");
        assert_eq!(lp(&[0, -1]).to_string(), "-λ");
        assert_eq!(LambdaPoly::zero().to_string(), "0");
        assert_eq!(
            LambdaPoly::new(vec![q("-1/2"), q("1/2")]).to_string(),
            "-1/2 + 1/2λ"
        );
        let a2 = XLPoly::new(vec![lp(&[1, -1]), lp(&[1, 1]), lp(&[1])]);
        assert_eq!(a2.to_string(), "(1 - λ) + (1 + λ)x + x²");
        let b = XLPoly::new(vec![lp(&[1]), lp(&[0, -2]), lp(&[0, 3])]);
        assert_eq!(b.to_string(), "1 + (-2λ)x + 3λx²");
    }
}
