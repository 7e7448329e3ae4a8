use std::time::{SystemTime, UNIX_EPOCH};

use deuler::egf::bernoulli_taps;
use deuler::sequences::{
    eulerian_at_minus_one, power_sum, stirling1_row, stirling2_triangle, EulerianRoute,
    EulerianTable, MinusOneRoute, PowerSumRoute, Stirling2Route,
};
use deuler::verify::{all_passed, run_suite, CompareMode, Range, Selection, VerifyError};
use deuler::{LambdaPoly, Rational, XLPoly};
use thiserror::Error;

use crate::codec::LambdaArg;
use crate::document::{
    Cell, DocumentError, Family, Metadata, OutputDocument, Parameters, Values, VerifyReport, XCell,
};
use crate::{
    Cli, Command, DataFormat, EulerianAtRoute, EvalTarget, PowerSumRouteArg, Rendering,
    ReportFormat, TableArgs, TableFamily, TableRoute, VerifyArgs,
};

/// Environment variable overriding [`DEFAULT_N_CAP`].
pub const CAP_ENV: &str = "DEULER_N_CAP";
pub const DEFAULT_N_CAP: usize = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{what} = {value} exceeds the cap of {cap} (set {CAP_ENV} to raise it)")]
    OverCap {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("{CAP_ENV} must be a non-negative integer, got `{0}`")]
    BadCap(String),
    #[error("route `{route}` is not available for {family}; choose one of: {valid}")]
    Route {
        family: &'static str,
        route: String,
        valid: &'static str,
    },
    #[error("the bernoulli route only evaluates at x = -1")]
    BernoulliRouteNeedsMinusOne,
    #[error("powersum needs --m >= 1 and --n >= 1")]
    PowerSumBounds,
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Document(#[from] DocumentError),
}

/// What to print on standard output, and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// Runs a parsed command. `cap_env` is the raw value of [`CAP_ENV`], if set.
/// Errors are usage errors (exit 2).
pub fn run(cli: &Cli, cap_env: Option<&str>) -> Result<Outcome, CliError> {
    let cap = match cap_env {
        None => DEFAULT_N_CAP,
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::BadCap(s.to_string()))?,
    };
    match &cli.command {
        Command::Table(args) => table(args, cap),
        Command::Eval(target) => eval(target, cap),
        Command::Verify(args) => verify(args, cap),
    }
}

fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<(), CliError> {
    if value > cap {
        Err(CliError::OverCap { what, value, cap })
    } else {
        Ok(())
    }
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn route_name(route: TableRoute) -> &'static str {
    match route {
        TableRoute::Explicit => "explicit",
        TableRoute::Recursion => "recursion",
        TableRoute::GfRecursion => "gf-recursion",
        TableRoute::Eulerian => "eulerian",
        TableRoute::Triangular => "triangular",
    }
}

fn eulerian_route(
    route: Option<TableRoute>,
    family: &'static str,
) -> Result<EulerianRoute, CliError> {
    match route.unwrap_or(TableRoute::Explicit) {
        TableRoute::Explicit => Ok(EulerianRoute::Explicit),
        TableRoute::Recursion => Ok(EulerianRoute::Recursion),
        TableRoute::GfRecursion => Ok(EulerianRoute::GfRecursion),
        other => Err(CliError::Route {
            family,
            route: route_name(other).into(),
            valid: "explicit, recursion, gf-recursion",
        }),
    }
}

fn cell(p: LambdaPoly, lambda: &LambdaArg) -> Cell {
    match lambda {
        LambdaArg::Symbolic => Cell::Symbolic(p),
        LambdaArg::Value(v) => Cell::Exact(p.eval_lambda(v)),
    }
}

fn x_cell(p: XLPoly, lambda: &LambdaArg) -> XCell {
    match lambda {
        LambdaArg::Symbolic => XCell::Symbolic(p),
        LambdaArg::Value(v) => XCell::Exact(LambdaPoly::new(
            p.coeffs().iter().map(|c| c.eval_lambda(v)).collect(),
        )),
    }
}

fn triangle(rows: Vec<Vec<LambdaPoly>>, lambda: &LambdaArg) -> Values {
    Values::Triangle(
        rows.into_iter()
            .map(|row| row.into_iter().map(|p| cell(p, lambda)).collect())
            .collect(),
    )
}

fn render(doc: &OutputDocument, r: &Rendering) -> Result<Outcome, CliError> {
    let text = if r.human {
        doc.to_human()?
    } else {
        match r.format {
            DataFormat::Json => doc.to_json_string(),
            DataFormat::Csv => doc.to_csv()?,
        }
    };
    Ok(Outcome::ok(text))
}

fn table(args: &TableArgs, cap: usize) -> Result<Outcome, CliError> {
    check_cap("n_max", args.n_max, cap)?;
    let n_max = args.n_max;
    let lambda = &args.render.lambda;
    let (family, route, values) = match args.family {
        TableFamily::EulerianNumber | TableFamily::EulerianPoly => {
            let family = if args.family == TableFamily::EulerianNumber {
                Family::EulerianNumber
            } else {
                Family::EulerianPoly
            };
            let route = eulerian_route(args.route, family.name())?;
            let table = EulerianTable::build(n_max, route);
            let values = if family == Family::EulerianNumber {
                triangle((0..=n_max).map(|n| table.row(n).to_vec()).collect(), lambda)
            } else {
                Values::PolySequence((0..=n_max).map(|n| x_cell(table.poly(n), lambda)).collect())
            };
            (family, route.name(), values)
        }
        TableFamily::Stirling2 => {
            let route = match args.route.unwrap_or(TableRoute::Explicit) {
                TableRoute::Explicit => Stirling2Route::Explicit,
                TableRoute::Eulerian => Stirling2Route::Eulerian,
                other => {
                    return Err(CliError::Route {
                        family: "stirling2",
                        route: route_name(other).into(),
                        valid: "explicit, eulerian",
                    })
                }
            };
            let name = route_name(args.route.unwrap_or(TableRoute::Explicit));
            (
                Family::Stirling2,
                name,
                triangle(stirling2_triangle(n_max, route), lambda),
            )
        }
        TableFamily::Bernoulli | TableFamily::Stirling1 => {
            let family = if args.family == TableFamily::Bernoulli {
                Family::Bernoulli
            } else {
                Family::Stirling1
            };
            match args.route {
                None | Some(TableRoute::Triangular) => {}
                Some(other) => {
                    return Err(CliError::Route {
                        family: family.name(),
                        route: route_name(other).into(),
                        valid: "triangular",
                    })
                }
            }
            let values = if family == Family::Bernoulli {
                Values::Sequence(
                    bernoulli_taps(n_max)
                        .into_iter()
                        .map(|p| cell(p, lambda))
                        .collect(),
                )
            } else {
                triangle((0..=n_max).map(stirling1_row).collect(), lambda)
            };
            (family, "triangular", values)
        }
    };
    let parameters = Parameters {
        n_max: Some(n_max),
        n: None,
        m: None,
        x: None,
        lambda: lambda.label(),
    };
    let stamp = args.render.timestamp.then(now);
    let doc = OutputDocument::new(family, parameters, &values, Metadata::new(route, stamp));
    render(&doc, &args.render)
}

fn eval(target: &EvalTarget, cap: usize) -> Result<Outcome, CliError> {
    let (family, route, parameters, value, rendering) = match target {
        EvalTarget::Powersum {
            m,
            n,
            route,
            render,
        } => {
            check_cap("n", *n, cap)?;
            if *m == 0 || *n == 0 {
                return Err(CliError::PowerSumBounds);
            }
            let r = match route {
                PowerSumRouteArg::Direct => PowerSumRoute::Direct,
                PowerSumRouteArg::Eulerian => PowerSumRoute::Eulerian,
                PowerSumRouteArg::Bernoulli => PowerSumRoute::Bernoulli,
            };
            let params = Parameters {
                n_max: None,
                n: Some(*n),
                m: Some(*m),
                x: None,
                lambda: render.lambda.label(),
            };
            (
                Family::PowerSum,
                r.name(),
                params,
                power_sum(*m, *n, r),
                render,
            )
        }
        EvalTarget::EulerianAt {
            x,
            n,
            route,
            render,
        } => {
            check_cap("n", *n, cap)?;
            let (name, value) = match route {
                EulerianAtRoute::Bernoulli => {
                    if *x != Rational::from(-1) {
                        return Err(CliError::BernoulliRouteNeedsMinusOne);
                    }
                    (
                        "bernoulli",
                        eulerian_at_minus_one(*n, MinusOneRoute::Bernoulli),
                    )
                }
                other => {
                    let r = match other {
                        EulerianAtRoute::Recursion => EulerianRoute::Recursion,
                        EulerianAtRoute::GfRecursion => EulerianRoute::GfRecursion,
                        _ => EulerianRoute::Explicit,
                    };
                    (r.name(), EulerianTable::build(*n, r).poly(*n).eval_x(x))
                }
            };
            let params = Parameters {
                n_max: None,
                n: Some(*n),
                m: None,
                x: Some(x.to_string()),
                lambda: render.lambda.label(),
            };
            (Family::EulerianAt, name, params, value, render)
        }
    };
    let values = Values::Scalar(cell(value, &rendering.lambda));
    let stamp = rendering.timestamp.then(now);
    let doc = OutputDocument::new(family, parameters, &values, Metadata::new(route, stamp));
    render(&doc, rendering)
}

fn verify(args: &VerifyArgs, cap: usize) -> Result<Outcome, CliError> {
    for (what, v) in [
        ("n_max", args.n_max),
        ("m_max", args.m_max),
        ("k_max", args.k_max),
    ] {
        if let Some(v) = v {
            check_cap(what, v, cap)?;
        }
    }
    let (suite, selection) = if args.check.is_empty() {
        ("all", Selection::All)
    } else {
        ("selection", Selection::Ids(args.check.clone()))
    };
    let overrides = Range {
        n_max: args.n_max,
        m_max: args.m_max,
        k_max: args.k_max,
    };
    let mode = if args.smoke {
        CompareMode::Smoke
    } else {
        CompareMode::Exact
    };
    let specs = run_suite(&selection, &overrides, mode)?;
    let report = VerifyReport::new(suite, mode, &specs, args.timestamp.then(now));
    let stdout = match args.format {
        ReportFormat::Json => report.to_json_string(),
        ReportFormat::Text => report.to_text(),
    };
    Ok(Outcome {
        stdout,
        code: if all_passed(&specs) { 0 } else { 1 },
    })
}
