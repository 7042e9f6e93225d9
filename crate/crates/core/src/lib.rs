//! Exact-arithmetic toolkit for the Askey scheme.
//!
//! Families of hypergeometric orthogonal polynomials are encoded by three
//! sequences `(h_k, x_k, g_k)`: eigenvalues, Newton nodes and lowering
//! coefficients of a bidiagonal operator in the Newton basis. From such a
//! data triple the crate constructs the monic polynomials `u_n` and their
//! hypergeometric normalization `U_n`, verifies the three-term recurrence
//! and the x↔h duality, classifies the q=1 parametrizations by degree
//! triples onto the scheme graph, holds an executable catalog of the
//! classical families, and certifies q→1 limits of rescaled q-family data
//! exactly.
//!
//! Everything is computed over the Gaussian rationals; there is no floating
//! point anywhere, so every identity check is an exact equality.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod exactnum;
pub mod qlimits;
pub mod report;
pub mod spectral;

pub use error::Error;
pub use exactnum::{Poly, RatFun, Scalar, Var};
pub use spectral::TripleData;
