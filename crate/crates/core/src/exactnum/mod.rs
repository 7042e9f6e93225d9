//! Exact scalar, polynomial and rational-function arithmetic.
//!
//! The ground field is the Gaussian rationals Q(i): every quantity in the
//! crate is either such a scalar, a dense univariate polynomial over them,
//! or a reduced rational function. No floating point exists anywhere, so
//! all comparisons are exact.

mod poly;
mod ratfun;
mod scalar;

pub use poly::{Poly, Var};
pub use ratfun::RatFun;
pub use scalar::Scalar;
