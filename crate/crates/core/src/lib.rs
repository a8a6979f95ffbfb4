//! Quadrature for highly oscillatory integrals with Hankel-function kernels.
//!
//! The library evaluates the two integral families
//!
//! ```text
//! I1[f] = int_0^1  f(x) H0^(1)(omega x) e^{i omega beta x} dx
//! I2[f] = int_{-1}^1 f(x) H0^(1)(omega sqrt((x-ab)^2 + a^2(1-b^2))) e^{i omega beta x} dx
//! ```
//!
//! at frequency-independent cost with extended Filon-Clenshaw-Curtis rules:
//! the amplitude is interpolated at Clenshaw-Curtis points (optionally with
//! endpoint/midpoint derivative data) and integrated exactly against the
//! kernel using Chebyshev moments. The moments satisfy 9- and 15-coefficient
//! linear recurrences; forward propagation is used where it is stable and a
//! banded boundary-value solve (Oliver's method) beyond the instability
//! cutoff, with tail values seeded from large-index asymptotics.
//!
//! A slow adaptive reference integrator ([`oracle`]) provides ground truth,
//! and [`scatter2d`] assembles a plane-wave screen-scattering collocation
//! system with the fast rules as a demonstration.

pub mod chebkit;
mod dd;
pub mod error;
pub mod gaussrules;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;
