//! Spectral solver for the linearized front of a two-dimensional compressible
//! vortex sheet, with the `VFGRID` field format and the `vortex-front`
//! command line.
//!
//! The symbol, quadrature and per-frequency algebra live in
//! [`vortex_front_core`]; this crate adds the transforms over the periodic
//! `(t, x₁)` box, the parallel solve over all bins, and file IO.

#![forbid(unsafe_code)]

pub mod cli;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod output;
pub mod solver;
pub mod transform;

pub use error::{FrontError, Result};
pub use field::{FieldGrid, GridSpec};
pub use solver::{compute_m, solve_front, verify_estimate, FrontSolution, SpectralField};
