//! Machine encoding of exact values.
//!
//! A rational is a canonical string (`"-1/2"`, `"3"`). A [`LambdaPoly`] is an
//! array of such strings, lowest power first, with no trailing zeros (the
//! zero polynomial is `[]`). An [`XLPoly`] nests that: an array indexed by
//! x-power whose elements are λ-coefficient arrays.

use deuler::algebra::{ParseRationalError, Poly, Rational};
use deuler::{LambdaPoly, XLPoly};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("expected {expected}, found {found}")]
    Shape {
        expected: &'static str,
        found: String,
    },
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error("`{0}` is not in canonical form (expected `{1}`)")]
    NonCanonical(String, String),
    #[error("trailing zero coefficient in polynomial array")]
    TrailingZero,
}

fn describe(v: &Value) -> String {
    match v {
        Value::Null => "null".into(),
        Value::Bool(_) => "a boolean".into(),
        Value::Number(n) => format!("the number {n}"),
        Value::String(_) => "a string".into(),
        Value::Array(_) => "an array".into(),
        Value::Object(_) => "an object".into(),
    }
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Accepts only canonical rational strings, so decode is the exact inverse
/// of [`rational_to_json`].
pub fn rational_from_json(v: &Value) -> Result<Rational, DecodeError> {
    let Value::String(s) = v else {
        return Err(DecodeError::Shape {
            expected: "a rational string",
            found: describe(v),
        });
    };
    let r: Rational = s.parse()?;
    let canonical = r.to_string();
    if &canonical != s {
        return Err(DecodeError::NonCanonical(s.clone(), canonical));
    }
    Ok(r)
}

pub fn lambda_poly_to_json(p: &Poly<Rational>) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn lambda_poly_from_json(v: &Value) -> Result<LambdaPoly, DecodeError> {
    let Value::Array(items) = v else {
        return Err(DecodeError::Shape {
            expected: "an array of rational strings",
            found: describe(v),
        });
    };
    let coeffs = items
        .iter()
        .map(rational_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.last().is_some_and(Rational::is_zero) {
        return Err(DecodeError::TrailingZero);
    }
    Ok(LambdaPoly::new(coeffs))
}

pub fn xl_poly_to_json(p: &XLPoly) -> Value {
    Value::Array(p.coeffs().iter().map(lambda_poly_to_json).collect())
}

pub fn xl_poly_from_json(v: &Value) -> Result<XLPoly, DecodeError> {
    let Value::Array(items) = v else {
        return Err(DecodeError::Shape {
            expected: "an array of coefficient arrays",
            found: describe(v),
        });
    };
    let coeffs = items
        .iter()
        .map(lambda_poly_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.last().is_some_and(LambdaPoly::is_zero) {
        return Err(DecodeError::TrailingZero);
    }
    Ok(XLPoly::new(coeffs))
}

/// The `--lambda` argument: either the formal parameter or an exact value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaArg {
    Symbolic,
    Value(Rational),
}

impl LambdaArg {
    pub fn label(&self) -> String {
        match self {
            LambdaArg::Symbolic => "symbolic".into(),
            LambdaArg::Value(r) => r.to_string(),
        }
    }
}

pub fn parse_lambda_arg(s: &str) -> Result<LambdaArg, ParseRationalError> {
    if s == "symbolic" {
        Ok(LambdaArg::Symbolic)
    } else {
        s.parse().map(LambdaArg::Value)
    }
}
