//! Symbol analysis and per-frequency solvers for the front equation of a
//! planar compressible vortex sheet.
//!
//! The front `x₂ = f(t, x₁)` of a two-dimensional vortex sheet with constant
//! tangential velocities `±v` and sound speed `c` obeys, after an `e^{-γt}`
//! weighting and a Fourier transform in `(t, x₁)`, the order-2
//! pseudo-differential equation
//!
//! ```text
//! Σ(τ, η) f̂ + (μ⁺μ⁻ / (μ⁺ + μ⁻)) M = 0,      τ = γ + iδ,
//! ```
//!
//! where `μ±` are the decaying roots of the transformed wave operator in each
//! half-space and `M` collects the forcing. This crate is `no_std` (it needs
//! `alloc`) and contains everything that is pure arithmetic:
//!
//! - [`symbol`]: the roots `μ±`, the symbol `Σ`, its zeros and the stability
//!   classification of the medium;
//! - [`quadrature`]: exponentially fitted quadrature for the half-space
//!   integrals `∫ e^{-μy} F(y) dy`;
//! - [`spectral`]: frequency grids, weighted Sobolev norms, the per-bin front
//!   solve, estimate constants and the ill-posedness probe;
//! - [`pressure`]: the boundary system for the transformed pressures and the
//!   reconstruction of the pressure profiles.
//!
//! Transforms, file formats and the command line live in the `vortex-front`
//! crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod pressure;
pub mod quadrature;
pub mod spectral;
pub mod symbol;

pub use error::Error;
pub use num_complex::Complex64;
pub use symbol::{
    classify, complex_sqrt_pos, factor_h, mu, mu_pair, ratio_sq, sigma, sigma_factored,
    sigma_general, sign_table_check, symbol_roots, BranchCase, Frequency, GeneralMedium, MachClass,
    MediumParams, RegimeReport, RootKind, RootPair, SignRow, StabilityClass,
};

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
