//! Output documents for `table` and `eval`, and the `verify` report.
//!
//! Both JSON shapes are described by the schemas under `schema/`. Field order
//! is fixed by struct order and no timestamp is written unless asked for, so
//! identical invocations produce identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use deuler::algebra::{Poly, Rational};
use deuler::verify::{CheckSpec, CompareMode, Status};
use deuler::{LambdaPoly, XLPoly};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::codec::{
    lambda_poly_from_json, lambda_poly_to_json, rational_from_json, rational_to_json,
    xl_poly_from_json, xl_poly_to_json, DecodeError,
};

pub const TOOL_NAME: &str = "deuler";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Fixed header row of `--format csv`.
pub const CSV_HEADER: &str = "family,n,k,x_power,lambda_power,value";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Bernoulli,
    EulerianNumber,
    EulerianPoly,
    Stirling1,
    Stirling2,
    PowerSum,
    EulerianAt,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::EulerianNumber => "eulerian-number",
            Family::EulerianPoly => "eulerian-poly",
            Family::Stirling1 => "stirling1",
            Family::Stirling2 => "stirling2",
            Family::PowerSum => "powersum",
            Family::EulerianAt => "eulerian-at",
        }
    }

    fn layout(self) -> Layout {
        match self {
            Family::Bernoulli => Layout::Sequence,
            Family::EulerianNumber | Family::Stirling1 | Family::Stirling2 => Layout::Triangle,
            Family::EulerianPoly => Layout::PolySequence,
            Family::PowerSum | Family::EulerianAt => Layout::Scalar,
        }
    }
}

impl FromStr for Family {
    type Err = DocumentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Family::Bernoulli,
            Family::EulerianNumber,
            Family::EulerianPoly,
            Family::Stirling1,
            Family::Stirling2,
            Family::PowerSum,
            Family::EulerianAt,
        ]
        .into_iter()
        .find(|f| f.name() == s)
        .ok_or_else(|| DocumentError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layout {
    Sequence,
    Triangle,
    PolySequence,
    Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("values: {0}")]
    Values(#[from] DecodeError),
    #[error("values: row {row} has {found} entries, expected {expected}")]
    RowLength {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("values: expected an array")]
    NotAnArray,
    #[error("parameters.lambda: {0}")]
    Lambda(String),
}

/// An entry that is a polynomial in λ, or its value at a fixed λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Symbolic(LambdaPoly),
    Exact(Rational),
}

/// An `x`-polynomial entry: symbolic in λ, or with λ fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XCell {
    Symbolic(XLPoly),
    Exact(Poly<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Values {
    Sequence(Vec<Cell>),
    Triangle(Vec<Vec<Cell>>),
    PolySequence(Vec<XCell>),
    Scalar(Cell),
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Symbolic(p) => lambda_poly_to_json(p),
            Cell::Exact(r) => rational_to_json(r),
        }
    }

    fn from_json(v: &Value, symbolic: bool) -> Result<Cell, DecodeError> {
        if symbolic {
            lambda_poly_from_json(v).map(Cell::Symbolic)
        } else {
            rational_from_json(v).map(Cell::Exact)
        }
    }

    fn human(&self) -> String {
        match self {
            Cell::Symbolic(p) => p.to_string(),
            Cell::Exact(r) => r.to_string(),
        }
    }
}

impl XCell {
    fn to_json(&self) -> Value {
        match self {
            XCell::Symbolic(p) => xl_poly_to_json(p),
            XCell::Exact(p) => lambda_poly_to_json(p),
        }
    }

    fn from_json(v: &Value, symbolic: bool) -> Result<XCell, DecodeError> {
        if symbolic {
            xl_poly_from_json(v).map(XCell::Symbolic)
        } else {
            lambda_poly_from_json(v).map(XCell::Exact)
        }
    }

    fn human(&self) -> String {
        match self {
            XCell::Symbolic(p) => p.to_string(),
            XCell::Exact(p) => XLPoly::new(
                p.coeffs()
                    .iter()
                    .cloned()
                    .map(LambdaPoly::constant)
                    .collect(),
            )
            .to_string(),
        }
    }
}

impl Values {
    pub fn to_json(&self) -> Value {
        match self {
            Values::Sequence(cells) => Value::Array(cells.iter().map(Cell::to_json).collect()),
            Values::Triangle(rows) => Value::Array(
                rows.iter()
                    .map(|r| Value::Array(r.iter().map(Cell::to_json).collect()))
                    .collect(),
            ),
            Values::PolySequence(cells) => Value::Array(cells.iter().map(XCell::to_json).collect()),
            Values::Scalar(cell) => cell.to_json(),
        }
    }
}

fn as_array(v: &Value) -> Result<&Vec<Value>, DocumentError> {
    v.as_array().ok_or(DocumentError::NotAnArray)
}

fn decode_values(family: Family, symbolic: bool, v: &Value) -> Result<Values, DocumentError> {
    Ok(match family.layout() {
        Layout::Sequence => Values::Sequence(
            as_array(v)?
                .iter()
                .map(|c| Cell::from_json(c, symbolic))
                .collect::<Result<_, _>>()?,
        ),
        Layout::Triangle => {
            let mut rows = Vec::new();
            for (n, row) in as_array(v)?.iter().enumerate() {
                let row = as_array(row)?;
                if row.len() != n + 1 {
                    return Err(DocumentError::RowLength {
                        row: n,
                        found: row.len(),
                        expected: n + 1,
                    });
                }
                rows.push(
                    row.iter()
                        .map(|c| Cell::from_json(c, symbolic))
                        .collect::<Result<_, _>>()?,
                );
            }
            Values::Triangle(rows)
        }
        Layout::PolySequence => Values::PolySequence(
            as_array(v)?
                .iter()
                .map(|c| XCell::from_json(c, symbolic))
                .collect::<Result<_, _>>()?,
        ),
        Layout::Scalar => Values::Scalar(Cell::from_json(v, symbolic)?),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    /// `"symbolic"` or a canonical rational string.
    pub lambda: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub route: String,
    /// Unix seconds; present only with `--timestamp`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
}

impl Metadata {
    pub fn new(route: &str, generated_at: Option<u64>) -> Self {
        Metadata {
            tool: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
            route: route.into(),
            generated_at,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputDocument {
    pub family: String,
    pub parameters: Parameters,
    pub values: Value,
    pub metadata: Metadata,
}

impl OutputDocument {
    pub fn new(
        family: Family,
        parameters: Parameters,
        values: &Values,
        metadata: Metadata,
    ) -> Self {
        OutputDocument {
            family: family.name().into(),
            parameters,
            values: values.to_json(),
            metadata,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn family(&self) -> Result<Family, DocumentError> {
        self.family.parse()
    }

    pub fn is_symbolic(&self) -> Result<bool, DocumentError> {
        match self.parameters.lambda.as_str() {
            "symbolic" => Ok(true),
            other => {
                let v = Value::String(other.to_string());
                rational_from_json(&v).map_err(|e| DocumentError::Lambda(e.to_string()))?;
                Ok(false)
            }
        }
    }

    /// Typed view of `values`, checked against the family's layout.
    pub fn decode_values(&self) -> Result<Values, DocumentError> {
        decode_values(self.family()?, self.is_symbolic()?, &self.values)
    }

    pub fn to_csv(&self) -> Result<String, DocumentError> {
        let family = self.family()?;
        let values = self.decode_values()?;
        let mut out = String::new();
        out.push_str(CSV_HEADER);
        out.push('\n');
        let name = family.name();
        let n_single = self.parameters.n;
        match &values {
            Values::Sequence(cells) => {
                for (n, c) in cells.iter().enumerate() {
                    csv_cell(&mut out, name, Some(n), None, None, c);
                }
            }
            Values::Triangle(rows) => {
                for (n, row) in rows.iter().enumerate() {
                    for (k, c) in row.iter().enumerate() {
                        csv_cell(&mut out, name, Some(n), Some(k), None, c);
                    }
                }
            }
            Values::PolySequence(cells) => {
                for (n, c) in cells.iter().enumerate() {
                    match c {
                        XCell::Symbolic(p) => {
                            for (j, lp) in p.coeffs().iter().enumerate() {
                                csv_cell(
                                    &mut out,
                                    name,
                                    Some(n),
                                    None,
                                    Some(j),
                                    &Cell::Symbolic(lp.clone()),
                                );
                            }
                        }
                        XCell::Exact(p) => {
                            for (j, r) in p.coeffs().iter().enumerate() {
                                csv_cell(
                                    &mut out,
                                    name,
                                    Some(n),
                                    None,
                                    Some(j),
                                    &Cell::Exact(r.clone()),
                                );
                            }
                        }
                    }
                }
            }
            Values::Scalar(c) => csv_cell(&mut out, name, n_single, None, None, c),
        }
        Ok(out)
    }

    pub fn to_human(&self) -> Result<String, DocumentError> {
        let values = self.decode_values()?;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# {} (lambda = {}, route = {})",
            self.family, self.parameters.lambda, self.metadata.route
        );
        match &values {
            Values::Sequence(cells) => {
                for (n, c) in cells.iter().enumerate() {
                    let _ = writeln!(out, "n={n}: {}", c.human());
                }
            }
            Values::Triangle(rows) => {
                for (n, row) in rows.iter().enumerate() {
                    for (k, c) in row.iter().enumerate() {
                        let _ = writeln!(out, "n={n} k={k}: {}", c.human());
                    }
                }
            }
            Values::PolySequence(cells) => {
                for (n, c) in cells.iter().enumerate() {
                    let _ = writeln!(out, "n={n}: {}", c.human());
                }
            }
            Values::Scalar(c) => {
                let _ = writeln!(out, "{}", c.human());
            }
        }
        Ok(out)
    }
}

fn opt(v: Option<usize>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// Symbolic cells emit one row per λ-coefficient; the zero polynomial emits
/// a single `lambda_power = 0, value = 0` row so every entry is present.
fn csv_cell(
    out: &mut String,
    family: &str,
    n: Option<usize>,
    k: Option<usize>,
    x_power: Option<usize>,
    cell: &Cell,
) {
    let prefix = format!("{family},{},{},{}", opt(n), opt(k), opt(x_power));
    match cell {
        Cell::Exact(r) => {
            let _ = writeln!(out, "{prefix},,{r}");
        }
        Cell::Symbolic(p) if p.is_zero() => {
            let _ = writeln!(out, "{prefix},0,0");
        }
        Cell::Symbolic(p) => {
            for (i, c) in p.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{prefix},{i},{c}");
            }
        }
    }
}

/// Parses and structurally validates an output document.
pub fn parse_document(text: &str) -> Result<(OutputDocument, Values), DocumentError> {
    let doc: OutputDocument =
        serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))?;
    let values = doc.decode_values()?;
    Ok((doc, values))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub params: BTreeMap<String, i64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub range: RangeRecord,
    pub status: String,
    pub counterexample: Option<CounterexampleRecord>,
}

impl From<&CheckSpec> for CheckRecord {
    fn from(spec: &CheckSpec) -> Self {
        CheckRecord {
            id: spec.id.clone(),
            anchor: spec.anchor.clone(),
            range: RangeRecord {
                n_max: spec.range.n_max,
                m_max: spec.range.m_max,
                k_max: spec.range.k_max,
            },
            status: spec.status.as_str().into(),
            counterexample: spec.counterexample.as_ref().map(|cx| CounterexampleRecord {
                params: cx.params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                lhs: cx.lhs.clone(),
                rhs: cx.rhs.clone(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMetadata {
    pub tool: String,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    /// `"all"` or `"selection"`.
    pub suite: String,
    pub mode: String,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    pub metadata: ReportMetadata,
}

impl VerifyReport {
    pub fn new(
        suite: &str,
        mode: CompareMode,
        specs: &[CheckSpec],
        generated_at: Option<u64>,
    ) -> Self {
        let passed = specs.iter().filter(|s| s.status == Status::Pass).count();
        VerifyReport {
            suite: suite.into(),
            mode: mode.as_str().into(),
            checks: specs.iter().map(CheckRecord::from).collect(),
            summary: Summary {
                total: specs.len(),
                passed,
                failed: specs.len() - passed,
            },
            metadata: ReportMetadata {
                tool: TOOL_NAME.into(),
                version: TOOL_VERSION.into(),
                generated_at,
            },
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let range: Vec<String> = [
                ("n_max", c.range.n_max),
                ("m_max", c.range.m_max),
                ("k_max", c.range.k_max),
            ]
            .iter()
            .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
            .collect();
            let _ = writeln!(
                out,
                "{:<4} {} [{}]",
                c.status.to_uppercase(),
                c.id,
                range.join(" ")
            );
            if let Some(cx) = &c.counterexample {
                let params: Vec<String> =
                    cx.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(
                    out,
                    "     at {}: lhs = {} ; rhs = {}",
                    params.join(" "),
                    cx.lhs,
                    cx.rhs
                );
            }
        }
        let _ = writeln!(
            out,
            "{} checks, {} passed, {} failed ({} mode)",
            self.summary.total, self.summary.passed, self.summary.failed, self.mode
        );
        out
    }
}
