use core::fmt;

use crate::symbol::StabilityClass;

/// Errors raised by the symbol, quadrature and per-frequency routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// `(γ, δ, η)` is not a point of the frequency set (negative weight,
    /// non-finite component, or the origin).
    NotAFrequency { gamma: f64, delta: f64, eta: f64 },
    /// Sound speed or velocities out of range.
    InvalidMedium(&'static str),
    /// The operation is only defined in another stability regime.
    Regime {
        required: StabilityClass,
        found: StabilityClass,
    },
    /// Operation defined only for the symmetric velocity profile `v₁± = ±v`.
    NotSymmetric,
    /// `δ/(cη)` sits on one of the points `±(v/c ± 1)` where a root vanishes.
    OnIntervalEndpoint { ratio: f64 },
    /// Sign tables are only defined on `γ = 0, η ≠ 0`.
    NotOnBoundary,
    /// Frequency is outside the neighborhood where the symbol factorizes.
    OutsideRootNeighborhood { distance: f64, radius: f64 },
    /// `μ⁺ + μ⁻` vanishes (or nearly so): the boundary system is singular.
    SingularBoundarySystem { determinant: f64 },
    /// Weight below the minimum allowed for the operation.
    WeightTooSmall { gamma: f64, min: f64 },
    /// Inputs of incompatible lengths.
    LengthMismatch { expected: usize, found: usize },
    /// Not enough nodes for the interpolating quadrature.
    TooFewNodes { min: usize, found: usize },
    /// A scalar argument is out of its domain.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAFrequency { gamma, delta, eta } => write!(
                f,
                "(gamma, delta, eta) = ({gamma}, {delta}, {eta}) is not in the frequency set"
            ),
            Error::InvalidMedium(msg) => write!(f, "invalid medium: {msg}"),
            Error::Regime { required, found } => write!(
                f,
                "operation requires the {required} regime, medium is {found}"
            ),
            Error::NotSymmetric => write!(f, "operation requires v1_minus = -v1_plus"),
            Error::OnIntervalEndpoint { ratio } => write!(
                f,
                "delta/(c eta) = {ratio} is an endpoint where a root vanishes"
            ),
            Error::NotOnBoundary => write!(f, "frequency must satisfy gamma = 0, eta != 0"),
            Error::OutsideRootNeighborhood { distance, radius } => write!(
                f,
                "relative distance {distance} to the symbol root exceeds radius {radius}"
            ),
            Error::SingularBoundarySystem { determinant } => {
                write!(
                    f,
                    "boundary system is singular (|mu+ + mu-| = {determinant})"
                )
            }
            Error::WeightTooSmall { gamma, min } => {
                write!(f, "gamma = {gamma} is below the minimum {min}")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::TooFewNodes { min, found } => {
                write!(f, "need at least {min} nodes, found {found}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
