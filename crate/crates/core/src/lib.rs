//! Exact computation of the degenerate Eulerian, Bernoulli and Stirling
//! families over `Q[λ]` and `Q[λ][x]`, plus a harness that checks the
//! identities relating them.
//!
//! ```
//! use deuler::sequences::{eulerian_explicit, eulerian_recursive};
//!
//! // A_λ(3,1) = 4 − 4λ²; four permutations of {1,2,3} have one descent.
//! let a = eulerian_explicit(3, 1);
//! assert_eq!(a.to_string(), "4 - 4λ²");
//! assert_eq!(a, eulerian_recursive(3, 1));
//! ```

pub mod algebra;
pub mod egf;
pub mod oracles;
pub mod sequences;
pub mod verify;

pub use algebra::{LambdaPoly, Rational, XLPoly};
