//! Element-order spectra of finite simple groups.
//!
//! The spectrum ω(G) is the set of orders of elements of G and μ(G) its
//! divisibility-maximal subset. This crate generates ω and μ for symmetric
//! and alternating groups, the semisimple spectra μ_{p'} for linear and
//! unitary groups, witness orders for the other classical families, and the
//! number-theoretic machinery (primitive prime divisors, Landau's function,
//! partition counting) those generators rest on. A brute-force oracle module
//! provides independent ground truth for testing.

pub mod classical;
pub mod error;
pub mod landau;
pub mod numtheory;
pub mod oracle;
pub mod spectrum;
pub mod sym;

pub use error::{Error, Result};
pub use spectrum::{mu_filter, output_length, Spectrum};
