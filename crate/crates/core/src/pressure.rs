//! Transformed pressures `P̂±(·, x₂)` in the two half-spaces.
//!
//! At a frequency with `Re τ > 0` the pressure on each side solves
//!
//! ```text
//! (τ + i v₁± η)² P̂± + c²η² P̂± − c² ∂₂² P̂± = F̂±
//! ```
//!
//! and decays away from the sheet. Continuity of the pressure, the jump of its
//! normal derivative (driven by the front) and the two decay conditions form a
//! 4 × 4 linear system for the boundary values whose determinant is
//! `μ⁺ + μ⁻`.
//!
//! The lower side is handled through `Q(y) = P̂⁻(−y)`, `y ≥ 0`, so that both
//! profiles are stored on the same nodes `y_k = k h`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::quadrature::FittedRule;
use crate::symbol::{Frequency, GeneralMedium, MediumParams};
use crate::{Error, Result};

/// `|μ⁺ + μ⁻| ≤ SINGULAR_TOL · Λ / c` is treated as a singular system.
pub const SINGULAR_TOL: f64 = 1e-12;

/// A growing exponential is dropped when its coefficient is below this
/// fraction of the profile scale.
pub const GROWTH_TOL: f64 = 1e-10;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Boundary values `P̂±(0)` and `∂₂P̂±(0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryState {
    pub p_plus0: Complex64,
    pub p_minus0: Complex64,
    pub dp_plus0: Complex64,
    pub dp_minus0: Complex64,
}

/// `τ + i w₁ η`.
#[inline]
fn shifted_tau(freq: Frequency, medium: &GeneralMedium) -> Complex64 {
    freq.tau() + I * (medium.w1() * freq.eta())
}

/// Right-hand side of the derivative jump:
/// `∂₂P̂⁺(0) − ∂₂P̂⁻(0) = −4iη (V₁/c)((τ + i w₁ η)/c) f̂`.
pub fn derivative_jump(freq: Frequency, medium: &GeneralMedium, f_hat: Complex64) -> Complex64 {
    let c = medium.c;
    -I * (4.0 * freq.eta() * medium.big_v1() / c) * (shifted_tau(freq, medium) / c) * f_hat
}

/// Solves the boundary system for general velocities.
///
/// `i_plus = ∫₀^∞ e^{-μ⁺y} F̂⁺(y) dy`, `i_minus = ∫₀^∞ e^{-μ⁻y} F̂⁻(−y) dy`.
pub fn solve_boundary_system_general(
    freq: Frequency,
    medium: &GeneralMedium,
    f_hat: Complex64,
    i_plus: Complex64,
    i_minus: Complex64,
) -> Result<BoundaryState> {
    if !(freq.gamma() > 0.0) {
        return Err(Error::InvalidArgument("boundary system needs gamma > 0"));
    }
    let (mp, mm) = medium.roots(freq);
    let det = mp + mm;
    let c2 = medium.c * medium.c;
    if det.norm() <= SINGULAR_TOL * freq.lambda() / medium.c {
        return Err(Error::SingularBoundarySystem {
            determinant: det.norm(),
        });
    }
    let jump = derivative_jump(freq, medium, f_hat);
    // decay rows give ∂₂P̂⁺(0) = I⁺/c² − μ⁺P₀ and ∂₂P̂⁻(0) = μ⁻P₀ − I⁻/c²
    let p0 = ((i_plus + i_minus) / c2 - jump) / det;
    Ok(BoundaryState {
        p_plus0: p0,
        p_minus0: p0,
        dp_plus0: i_plus / c2 - mp * p0,
        dp_minus0: mm * p0 - i_minus / c2,
    })
}

/// Solves the boundary system for the symmetric medium.
pub fn solve_boundary_system(
    freq: Frequency,
    params: &MediumParams,
    f_hat: Complex64,
    i_plus: Complex64,
    i_minus: Complex64,
) -> Result<BoundaryState> {
    solve_boundary_system_general(freq, &(*params).into(), f_hat, i_plus, i_minus)
}

impl BoundaryState {
    /// Residuals of the four rows: pressure continuity, derivative jump, and
    /// the decay conditions
    /// `P̂±(0) ± (1/μ±) ∂₂P̂±(0) − (1/(c²μ±)) I± = 0`.
    pub fn residuals(
        &self,
        freq: Frequency,
        medium: &GeneralMedium,
        f_hat: Complex64,
        i_plus: Complex64,
        i_minus: Complex64,
    ) -> [Complex64; 4] {
        let (mp, mm) = medium.roots(freq);
        let c2 = medium.c * medium.c;
        [
            self.p_plus0 - self.p_minus0,
            self.dp_plus0 - self.dp_minus0 - derivative_jump(freq, medium, f_hat),
            self.p_plus0 + self.dp_plus0 / mp - i_plus / (c2 * mp),
            self.p_minus0 - self.dp_minus0 / mm - i_minus / (c2 * mm),
        ]
    }
}

/// Residuals of the front equation at one bin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontResidual {
    /// `|(T² − V₁²η²) f̂ + (c²/2) ∂₂(P̂⁺ + P̂⁻)(0)|`, `T = τ + i w₁ η`.
    pub boundary: f64,
    /// `|(T² − V₁²η² − 2iV₁ηT (μ⁺ − μ⁻)/(μ⁺ + μ⁻)) f̂ + (μ⁺μ⁻/(μ⁺ + μ⁻)) M|`.
    pub symbol: f64,
}

/// Evaluates both forms of the front equation for a computed front `f̂` and
/// the forcing functional `M`.
pub fn check_front_equation_general(
    freq: Frequency,
    medium: &GeneralMedium,
    state: &BoundaryState,
    f_hat: Complex64,
    m: Complex64,
) -> FrontResidual {
    let t = shifted_tau(freq, medium);
    let ve = medium.big_v1() * freq.eta();
    let base = t * t - ve * ve;
    let c2 = medium.c * medium.c;
    let boundary = base * f_hat + (state.dp_plus0 + state.dp_minus0) * (0.5 * c2);
    let (mp, mm) = medium.roots(freq);
    let sum = mp + mm;
    let symbol = (base - I * (2.0 * ve) * t * (mp - mm) / sum) * f_hat + mp * mm / sum * m;
    FrontResidual {
        boundary: boundary.norm(),
        symbol: symbol.norm(),
    }
}

pub fn check_front_equation(
    freq: Frequency,
    params: &MediumParams,
    state: &BoundaryState,
    f_hat: Complex64,
    m: Complex64,
) -> FrontResidual {
    check_front_equation_general(freq, &(*params).into(), state, f_hat, m)
}

/// Sampled profiles `P̂⁺(y_k)` and `P̂⁻(−y_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PressureProfile {
    pub x2: Vec<f64>,
    pub p_plus: Vec<Complex64>,
    pub p_minus: Vec<Complex64>,
    /// Coefficient of `e^{μ⁺y}` (zero when the decay condition holds).
    pub growth_plus: Complex64,
    /// Coefficient of `e^{μ⁻y}`.
    pub growth_minus: Complex64,
}

impl PressureProfile {
    /// True when a growing exponential had to be kept on either side.
    pub fn has_growth(&self) -> bool {
        self.growth_plus != Complex64::new(0.0, 0.0)
            || self.growth_minus != Complex64::new(0.0, 0.0)
    }
}

/// One side: `P(y) = ½(A − B/μ) e^{-μy} + (D(y) + C(y))/(2c²μ) + ½R e^{μy}`
/// with `C(y) = ∫₀^y e^{-μ(y−z)}F`, `D(y) = ∫_y^L e^{-μ(z−y)}F` and
/// `R = A + B/μ − D(0)/(c²μ)`, which is `cosh`/`sinh` form of the solution
/// rearranged so that no growing exponential is formed when `R = 0`.
fn side_profile(
    mu: Complex64,
    c: f64,
    a: Complex64,
    b: Complex64,
    forcing: &[Complex64],
    h: f64,
) -> Result<(Vec<Complex64>, Complex64)> {
    let rule = FittedRule::new(mu, h)?;
    let fwd = rule.cumulative_forward(forcing)?;
    let bwd = rule.cumulative_backward(forcing)?;
    let c2mu = mu * (c * c);
    let r = a + b / mu - bwd[0] / c2mu;
    let scale = a.norm() + (b / mu).norm() + (bwd[0] / c2mu).norm();
    let growth = if r.norm() <= GROWTH_TOL * scale {
        Complex64::new(0.0, 0.0)
    } else {
        r
    };
    let decaying = (a - b / mu) * 0.5;
    let out = (0..forcing.len())
        .map(|k| {
            let y = k as f64 * h;
            let mut p = decaying * (-mu * y).exp() + (fwd[k] + bwd[k]) / (c2mu * 2.0);
            if growth != Complex64::new(0.0, 0.0) {
                p += growth * 0.5 * (mu * y).exp();
            }
            p
        })
        .collect();
    Ok((out, growth))
}

/// Reconstructs both pressure profiles on `y_k = k h` from the boundary state
/// and the forcing slices `plus[k] = F̂⁺(y_k)`, `minus[k] = F̂⁻(−y_k)`.
pub fn reconstruct_general(
    freq: Frequency,
    medium: &GeneralMedium,
    state: &BoundaryState,
    plus: &[Complex64],
    minus: &[Complex64],
    h: f64,
) -> Result<PressureProfile> {
    if plus.len() != minus.len() {
        return Err(Error::LengthMismatch {
            expected: plus.len(),
            found: minus.len(),
        });
    }
    let (mp, mm) = medium.roots(freq);
    if !(mp.re > 0.0 && mm.re > 0.0) {
        return Err(Error::InvalidArgument("reconstruction needs Re mu > 0"));
    }
    let (p_plus, growth_plus) = side_profile(mp, medium.c, state.p_plus0, state.dp_plus0, plus, h)?;
    // Q(y) = P̂⁻(−y): Q(0) = P̂⁻(0), Q'(0) = −∂₂P̂⁻(0)
    let (p_minus, growth_minus) =
        side_profile(mm, medium.c, state.p_minus0, -state.dp_minus0, minus, h)?;
    Ok(PressureProfile {
        x2: (0..plus.len()).map(|k| k as f64 * h).collect(),
        p_plus,
        p_minus,
        growth_plus,
        growth_minus,
    })
}

pub fn reconstruct(
    freq: Frequency,
    params: &MediumParams,
    state: &BoundaryState,
    plus: &[Complex64],
    minus: &[Complex64],
    h: f64,
) -> Result<PressureProfile> {
    reconstruct_general(freq, &(*params).into(), state, plus, minus, h)
}

/// Largest centered-difference residual of the profile ODE on interior
/// nodes, `(max over P̂⁺, max over P̂⁻)`.
pub fn ode_residual(
    freq: Frequency,
    medium: &GeneralMedium,
    profile: &PressureProfile,
    plus: &[Complex64],
    minus: &[Complex64],
) -> Result<(f64, f64)> {
    let n = profile.p_plus.len();
    if plus.len() != n || minus.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: plus.len().min(minus.len()),
        });
    }
    if n < 3 {
        return Err(Error::TooFewNodes { min: 3, found: n });
    }
    let h = profile.x2[1] - profile.x2[0];
    let (mp, mm) = medium.roots(freq);
    let c2 = medium.c * medium.c;
    let side = |p: &[Complex64], f: &[Complex64], mu: Complex64| {
        (1..n - 1)
            .map(|k| {
                let d2 = (p[k + 1] - p[k] * 2.0 + p[k - 1]) / (h * h);
                (p[k] * (mu * mu) * c2 - d2 * c2 - f[k]).norm()
            })
            .fold(0.0, f64::max)
    };
    Ok((
        side(&profile.p_plus, plus, mp),
        side(&profile.p_minus, minus, mm),
    ))
}
