//! Sparse multivariate polynomials over prime fields.

mod chart;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use chart::{default_chart_names, dehomogenize, laurent_normalize, monomial_basis, Chart};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::{poly_arith, ArithOp, Polynomial};
pub use ring::{Ring, RingRef};

pub(crate) use ring::is_identifier;

/// Maximum number of variables in a ring context.
pub const MAX_VARS: usize = 16;
