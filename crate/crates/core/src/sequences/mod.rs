//! The named sequence families, each with the independent computation
//! routes that the identities relate.

mod bernoulli;
mod eulerian;
mod stirling;
mod sums;

pub use bernoulli::{bernoulli_number, bernoulli_polynomial};
pub use eulerian::{
    eulerian_at_minus_one, eulerian_explicit, eulerian_poly, eulerian_polys_gf_recursion,
    eulerian_recursive, EulerianRoute, EulerianTable, MinusOneRoute,
};
pub use stirling::{
    eulerian_from_stirling2, stirling1_degenerate, stirling1_row, stirling2,
    stirling2_binomial_expansion, stirling2_degenerate, stirling2_from_eulerian,
    stirling2_triangle, Stirling2Route,
};
pub use sums::{power_sum, worpitzky_lhs, worpitzky_rhs, PowerSumRoute};

pub(crate) use bernoulli::bernoulli_polynomial_from;
pub(crate) use eulerian::minus_one_from_bernoulli;
pub(crate) use stirling::{eulerian_from_stirling2_row, stirling2_from_negated_row};
pub(crate) use sums::{
    power_sum_direct, power_sum_from_bernoulli, power_sum_from_negated_row,
    worpitzky_from_negated_row,
};
