//! Exact partition combinatorics and Wronskian Appell polynomials.
//!
//! The library computes, with arbitrary-precision integer arithmetic:
//!
//! - Maya diagrams, p-cores, p-quotients and characteristic vectors, and the
//!   bijection between a partition and its (core, quotient) pair;
//! - hook-length products and their split into p-fold and non-p-fold parts;
//! - the Appell sequence generated by `exp(t*x - t^p/p)`, the Wronskian
//!   polynomials `q_lambda` labeled by partitions, and the factor `R_lambda`
//!   with `q_lambda(x) = x^|core| * R_lambda(x^p)`;
//! - the combinatorial coefficient formula for `R_lambda`, the limit
//!   coefficients of the rescaled polynomials as the core grows, and numeric
//!   root tracking toward the attractor values.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, or the `wappell` binary for the command-line surface.

pub mod arith;
pub mod cli;
pub mod coeff_asymptotics;
pub mod core_quotient;
mod error;
pub mod hook_products;
pub mod maya;
pub mod partitions;
pub mod poly;
pub mod roots;
pub mod wronskian_poly;

pub use error::{Error, Result};

pub use core_quotient::{CharacteristicVector, PQuotient};
pub use maya::MayaDiagram;
pub use partitions::{BorderStrip, DegreeVector, Partition};
pub use poly::IntPolynomial;
