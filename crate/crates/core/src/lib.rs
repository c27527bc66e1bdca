//! Numerical tools around the analytic proof of Siegel's lower bound for
//! `L(1, chi)` via the product of four L-functions.
//!
//! The crate builds the objects the argument manipulates and checks them
//! numerically: quadratic characters, L-functions, the product
//! `f(s) = zeta(s) L(s, chi_1) L(s, chi_2) L(s, chi_1 chi_2)`, its Dirichlet
//! coefficients and weighted partial sums, the Perron integral `J(x, w)` with
//! its contour-shift decomposition, and empirical scans of the bounds.

pub mod characters;
pub mod explorer;
pub mod error;
pub mod fproduct;
pub mod lfuncs;
pub mod perron;
pub mod report;
pub mod sieve;
pub mod special;

pub use error::{Error, Result};
