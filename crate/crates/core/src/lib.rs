//! Exact zero-energy bound states of the two-term power-law potential family
//!
//! ```text
//! V(r) = (λ/(2μ+1))² [ (λ²/2) r^{-2(μ-1/2)/(μ+1/2)} - Ω r^{-2μ/(μ+1/2)} ],
//! Ω = 2n + 1 + (2l+1)|μ+1/2|
//! ```
//!
//! obtained from the three-dimensional oscillator by the point canonical
//! transformation `r = x^{2μ+1}`, together with the rest-mass Dirac problem
//! whose odd potential is `(λ²β/2) r^{β-1}`, and the half-line equation
//! `[-d²/dx² + x^{2(N+1)} - E x^N] ψ = 0`.
//!
//! Every closed form in the crate has an independent numerical check in
//! [`oracle`]: Gauss-Kronrod quadrature on `(0, ∞)`, an embedded
//! Runge-Kutta integrator, and a Prüfer-angle shooting solver that
//! rediscovers the quantized couplings from the potential alone.
//!
//! Modules:
//!
//! - [`specfn`]: Laguerre polynomials and `ln Γ`.
//! - [`radial`]: the shared Laguerre-type closed-form evaluator and residual reports.
//! - [`oscillator`]: the reference oscillator states and the SO(2,1) ladder checks.
//! - [`powerlaw`]: the nonrelativistic family, classification, degeneracy.
//! - [`dirac`]: the relativistic branch at `ε = 1`.
//! - [`bender`]: the half-line `x^{2(N+1)} - E x^N` problem.
//! - [`oracle`]: quadrature, ODE integration and shooting.
//! - [`cli`]: the command-line front end and its JSON/CSV documents.

// `!(x > 0.0)` is used on purpose so NaN lands in the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bender;
pub mod cli;
pub mod dirac;
mod error;
pub mod oracle;
pub mod oscillator;
pub mod param;
pub mod powerlaw;
pub mod radial;
pub mod specfn;

pub use error::{Error, Result};
