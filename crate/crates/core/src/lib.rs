//! Uniform random graphs from subcritical block-stable classes.
//!
//! The crate couples Boltzmann samplers for five concrete graph classes
//! (trees, Forb(C4), Forb(C5), cacti, outerplanar) with conditioned
//! Galton-Watson trees, computes each class's scaling constants
//! (y, rho, lambda, sigma^2, kappa, H, c) numerically, and provides the
//! closed-form height/diameter limit laws of the Brownian continuum random
//! tree for Monte-Carlo verification.

pub mod classes;
pub mod constants;
pub mod graphs;
pub mod limits;
pub mod samplers;
pub mod series;
pub mod stats;

mod error;

pub use error::{Error, Result};

pub use num_rational::BigRational;

/// Double-precision truncated series, the workhorse for evaluation and sampling.
pub type Series = series::TruncatedSeries<f64>;
/// Exact rational truncated series, used for integer count cross-checks.
pub type SeriesExact = series::TruncatedSeries<BigRational>;
