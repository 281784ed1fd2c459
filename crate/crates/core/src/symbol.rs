//! Roots `μ±`, the symbol `Σ` and the stability classification.
//!
//! For a frequency `(τ, η)` with `τ = γ + iδ`, `μ±` is the root with positive
//! real part of
//!
//! ```text
//! s² = ((τ + i v₁± η) / c)² + η²
//! ```
//!
//! extended by continuity to the boundary `γ = 0`. With the symmetric profile
//! `v₁± = ±v` the symbol of the front equation is
//!
//! ```text
//! Σ(τ, η) = τ² + v²η² (8 ((τ/c) / (μ⁺ + μ⁻))² − 1) = c² (μ⁺μ⁻ − η²).
//! ```

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::{Error, Result};

/// Relative tolerance used to decide `v = c` and `v/c = √2`.
pub const REGIME_TOL: f64 = 1e-12;

/// Tolerance on `δ/(cη)` for the endpoints `±(v/c ± 1)` where a root vanishes.
pub const ENDPOINT_TOL: f64 = 1e-12;

/// Below this relative distance to a root, [`factor_h`] returns the analytic
/// value instead of dividing.
pub const NEAR_ROOT_TOL: f64 = 1e-8;

/// Default relative radius of the neighborhood used by [`factor_h`].
pub const DEFAULT_ROOT_RADIUS: f64 = 0.25;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// `sgn` with the convention `sgn(0) = 1`.
#[inline]
fn sgn(x: f64) -> f64 {
    if x < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// A point `(τ = γ + iδ, η)` of the frequency set `{Re τ ≥ 0, (τ, η) ≠ 0}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frequency {
    gamma: f64,
    delta: f64,
    eta: f64,
}

impl Frequency {
    pub fn new(gamma: f64, delta: f64, eta: f64) -> Result<Self> {
        let finite = gamma.is_finite() && delta.is_finite() && eta.is_finite();
        if !finite || gamma < 0.0 || (gamma == 0.0 && delta == 0.0 && eta == 0.0) {
            return Err(Error::NotAFrequency { gamma, delta, eta });
        }
        // normalise -0.0 so that branch selection never sees a signed zero weight
        Ok(Self {
            gamma: gamma + 0.0,
            delta,
            eta,
        })
    }

    /// Unchecked constructor for points known to lie in the frequency set.
    pub(crate) fn from_parts(gamma: f64, delta: f64, eta: f64) -> Self {
        debug_assert!(gamma >= 0.0 && (gamma, delta, eta) != (0.0, 0.0, 0.0));
        Self {
            gamma: gamma + 0.0,
            delta,
            eta,
        }
    }

    /// Builds `(τ, η)` from a complex `τ`.
    pub fn from_tau(tau: Complex64, eta: f64) -> Result<Self> {
        Self::new(tau.re, tau.im, eta)
    }

    #[inline]
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    #[inline]
    pub fn delta(&self) -> f64 {
        self.delta
    }

    #[inline]
    pub fn eta(&self) -> f64 {
        self.eta
    }

    #[inline]
    pub fn tau(&self) -> Complex64 {
        Complex64::new(self.gamma, self.delta)
    }

    /// `Λ² = γ² + δ² + η² = |τ|² + η²`.
    #[inline]
    pub fn lambda_sq(&self) -> f64 {
        self.gamma * self.gamma + self.delta * self.delta + self.eta * self.eta
    }

    #[inline]
    pub fn lambda(&self) -> f64 {
        self.lambda_sq().sqrt()
    }

    /// `(kτ, kη)` for `k > 0`.
    pub fn scaled(&self, k: f64) -> Result<Self> {
        if !(k > 0.0) {
            return Err(Error::InvalidArgument("scale factor must be positive"));
        }
        Self::new(k * self.gamma, k * self.delta, k * self.eta)
    }

    /// Projection onto the unit hemisphere `Λ = 1`.
    pub fn normalized(&self) -> Self {
        let l = self.lambda();
        Self {
            gamma: self.gamma / l,
            delta: self.delta / l,
            eta: self.eta / l,
        }
    }
}

/// Symmetric medium `v₁⁺ = v`, `v₁⁻ = −v` (so `w₁ = 0`, `V₁ = v`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumParams {
    v: f64,
    c: f64,
}

impl MediumParams {
    pub fn new(v: f64, c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidMedium("sound speed c must be positive"));
        }
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::InvalidMedium("velocity v must be positive"));
        }
        Ok(Self { v, c })
    }

    #[inline]
    pub fn v(&self) -> f64 {
        self.v
    }

    #[inline]
    pub fn c(&self) -> f64 {
        self.c
    }

    /// `v/c`.
    #[inline]
    pub fn mach(&self) -> f64 {
        self.v / self.c
    }

    pub fn mach_class(&self) -> MachClass {
        let d = self.v - self.c;
        if d.abs() <= REGIME_TOL * self.c {
            MachClass::Sonic
        } else if d < 0.0 {
            MachClass::Subsonic
        } else {
            MachClass::Supersonic
        }
    }

    pub fn stability_class(&self) -> StabilityClass {
        let sqrt2 = core::f64::consts::SQRT_2;
        let d = self.mach() - sqrt2;
        if d.abs() <= REGIME_TOL * sqrt2 {
            StabilityClass::Transition
        } else if d < 0.0 {
            StabilityClass::EllipticUnstable
        } else {
            StabilityClass::WeaklyStable
        }
    }

    /// Fails unless the medium is in `required`.
    pub fn require(&self, required: StabilityClass) -> Result<()> {
        let found = self.stability_class();
        if found == required {
            Ok(())
        } else {
            Err(Error::Regime { required, found })
        }
    }
}

/// General constant velocities `v₁±`, used where the formulas do not need
/// `w₁ = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralMedium {
    pub v1_plus: f64,
    pub v1_minus: f64,
    pub c: f64,
}

impl GeneralMedium {
    pub fn new(v1_plus: f64, v1_minus: f64, c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidMedium("sound speed c must be positive"));
        }
        if !(v1_plus.is_finite() && v1_minus.is_finite()) {
            return Err(Error::InvalidMedium("velocities must be finite"));
        }
        Ok(Self {
            v1_plus,
            v1_minus,
            c,
        })
    }

    /// `w₁ = (v₁⁺ + v₁⁻)/2`.
    #[inline]
    pub fn w1(&self) -> f64 {
        0.5 * (self.v1_plus + self.v1_minus)
    }

    /// `V₁ = (v₁⁺ − v₁⁻)/2`.
    #[inline]
    pub fn big_v1(&self) -> f64 {
        0.5 * (self.v1_plus - self.v1_minus)
    }

    /// The symmetric form, when `v₁⁻ = −v₁⁺` with `v₁⁺ > 0`.
    pub fn as_symmetric(&self) -> Option<MediumParams> {
        if self.v1_minus == -self.v1_plus && self.v1_plus > 0.0 {
            MediumParams::new(self.v1_plus, self.c).ok()
        } else {
            None
        }
    }

    pub fn roots(&self, freq: Frequency) -> (Complex64, Complex64) {
        (
            mu(freq, self.v1_plus, self.c),
            mu(freq, self.v1_minus, self.c),
        )
    }
}

impl From<MediumParams> for GeneralMedium {
    fn from(p: MediumParams) -> Self {
        Self {
            v1_plus: p.v,
            v1_minus: -p.v,
            c: p.c,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MachClass {
    Subsonic,
    Sonic,
    Supersonic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StabilityClass {
    /// `v/c < √2`: the symbol is elliptic and the problem is ill-posed.
    EllipticUnstable,
    /// `v/c = √2` (within [`REGIME_TOL`]).
    Transition,
    /// `v/c > √2`: roots only on `Re τ = 0`, all simple.
    WeaklyStable,
}

impl MachClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            MachClass::Subsonic => "subsonic",
            MachClass::Sonic => "sonic",
            MachClass::Supersonic => "supersonic",
        }
    }
}

impl StabilityClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            StabilityClass::EllipticUnstable => "elliptic_unstable",
            StabilityClass::Transition => "transition",
            StabilityClass::WeaklyStable => "weakly_stable",
        }
    }
}

impl fmt::Display for MachClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which formula produced a root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchCase {
    /// `γ > 0`: the square root with positive real part.
    Interior,
    /// `γ = 0`, root real and positive.
    BoundaryReal,
    /// `γ = 0` on a vanishing locus `δ/(cη) = ∓(v/c ± 1)`.
    BoundaryZero,
    /// `γ = 0`, root on the negative imaginary axis.
    BoundaryImagNeg,
    /// `γ = 0`, root on the positive imaginary axis.
    BoundaryImagPos,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootPair {
    pub mu_plus: Complex64,
    pub mu_minus: Complex64,
    pub plus_case: BranchCase,
    pub minus_case: BranchCase,
    sum: Complex64,
}

impl RootPair {
    /// `μ⁺ + μ⁻`, computed without cancellation near the points where it
    /// vanishes.
    #[inline]
    pub fn sum(&self) -> Complex64 {
        self.sum
    }

    #[inline]
    pub fn product(&self) -> Complex64 {
        self.mu_plus * self.mu_minus
    }
}

/// The pair `(√((r+a)/2), √((r−a)/2))`, `r = |a + ib|`, evaluated without
/// cancellation in the smaller component.
fn sqrt_parts(a: f64, b: f64) -> (f64, f64) {
    let r = a.hypot(b);
    if a >= 0.0 {
        let p = (0.5 * (r + a)).sqrt();
        let q = if p > 0.0 { 0.5 * b.abs() / p } else { 0.0 };
        (p, q)
    } else {
        let q = (0.5 * (r - a)).sqrt();
        (0.5 * b.abs() / q, q)
    }
}

/// `sgn(b)·√((r+a)/2) + i·√((r−a)/2)` with `r = |a + ib|` and `sgn(0) = 1`.
///
/// This is one of the two square roots of `a + ib`; its negative is the other.
/// Multiplying by `sgn(b)` gives the root with non-negative real part.
pub fn complex_sqrt_pos(a: f64, b: f64) -> Complex64 {
    let (p, q) = sqrt_parts(a, b);
    Complex64::new(sgn(b) * p, q)
}

/// Classifies the boundary root and returns it, for `γ = 0`, `η ≠ 0`.
fn boundary_root(delta: f64, v1: f64, eta: f64, c: f64) -> (Complex64, BranchCase) {
    let s = delta + v1 * eta;
    let abs_eta = eta.abs();
    let sc = s.abs() / c;
    if (sc - abs_eta).abs() <= ENDPOINT_TOL * abs_eta {
        return (Complex64::new(0.0, 0.0), BranchCase::BoundaryZero);
    }
    // η² − (s/c)², factored to keep the sign exact near the endpoints
    let q = (abs_eta - sc) * (abs_eta + sc);
    if q > 0.0 {
        (Complex64::new(q.sqrt(), 0.0), BranchCase::BoundaryReal)
    } else {
        let im = sgn(s) * (-q).sqrt();
        let case = if im > 0.0 {
            BranchCase::BoundaryImagPos
        } else {
            BranchCase::BoundaryImagNeg
        };
        (Complex64::new(0.0, im), case)
    }
}

fn mu_with_case(freq: Frequency, v1: f64, c: f64) -> (Complex64, BranchCase) {
    let (g, d, e) = (freq.gamma, freq.delta, freq.eta);
    if e == 0.0 {
        let m = freq.tau() / c;
        let case = if g > 0.0 {
            BranchCase::Interior
        } else if d > 0.0 {
            BranchCase::BoundaryImagPos
        } else {
            BranchCase::BoundaryImagNeg
        };
        return (m, case);
    }
    if g > 0.0 {
        let s = d + v1 * e;
        let c2 = c * c;
        let a = (g - s.abs()) * (g + s.abs()) / c2 + e * e;
        let b = 2.0 * g * s / c2;
        let (p, q) = sqrt_parts(a, b);
        (Complex64::new(p, sgn(b) * q), BranchCase::Interior)
    } else {
        boundary_root(d, v1, e, c)
    }
}

/// Root `μ` of `s² = ((τ + i v₁ η)/c)² + η²` with `Re μ > 0` for `γ > 0`,
/// continuously extended to `γ = 0`.
///
/// `c` must be positive.
pub fn mu(freq: Frequency, v1: f64, c: f64) -> Complex64 {
    debug_assert!(c > 0.0);
    mu_with_case(freq, v1, c).0
}

/// `μ⁺ = μ(·, +v)` and `μ⁻ = μ(·, −v)` with their branch metadata.
pub fn mu_pair(freq: Frequency, params: &MediumParams) -> RootPair {
    let (mu_plus, plus_case) = mu_with_case(freq, params.v, params.c);
    let (mu_minus, minus_case) = mu_with_case(freq, -params.v, params.c);
    let direct = mu_plus + mu_minus;
    let diff = mu_plus - mu_minus;
    // μ⁺² − μ⁻² = 4ivητ/c² is exact, so when the roots nearly cancel the sum
    // is better taken as that difference of squares over μ⁺ − μ⁻
    let sum = if direct.norm() < diff.norm() {
        I * (4.0 * params.v * freq.eta / (params.c * params.c)) * freq.tau() / diff
    } else {
        direct
    };
    RootPair {
        mu_plus,
        mu_minus,
        plus_case,
        minus_case,
        sum,
    }
}

/// `((τ/c)/(μ⁺ + μ⁻))²`, continuously extended to the points `(0, η)` where
/// `μ⁺ + μ⁻` vanishes (`v ≥ c`).
pub fn ratio_sq(freq: Frequency, params: &MediumParams) -> Complex64 {
    if freq.gamma == 0.0 && freq.delta == 0.0 {
        // η ≠ 0 here since the origin is not a frequency
        match params.mach_class() {
            MachClass::Sonic => return Complex64::new(0.0, 0.0),
            MachClass::Supersonic => {
                let m2 = params.mach() * params.mach();
                return Complex64::new((m2 - 1.0) / (4.0 * m2), 0.0);
            }
            MachClass::Subsonic => {}
        }
    }
    let pair = mu_pair(freq, params);
    let r = (freq.tau() / params.c) / pair.sum();
    r * r
}

/// The symbol `Σ = τ² + v²η²(8((τ/c)/(μ⁺+μ⁻))² − 1)`.
pub fn sigma(freq: Frequency, params: &MediumParams) -> Complex64 {
    let tau = freq.tau();
    let ve = params.v * freq.eta;
    tau * tau + ve * ve * (ratio_sq(freq, params) * 8.0 - 1.0)
}

/// The factored form `Σ = c²(μ⁺μ⁻ − η²)`.
pub fn sigma_factored(freq: Frequency, params: &MediumParams) -> Complex64 {
    let pair = mu_pair(freq, params);
    (pair.product() - freq.eta * freq.eta) * (params.c * params.c)
}

/// `Σ` for general velocities, with `τ` replaced by `τ + i w₁ η` and `v` by
/// `V₁`. Falls back to [`sigma`] in the symmetric case; otherwise fails where
/// `μ⁺ + μ⁻` vanishes.
pub fn sigma_general(freq: Frequency, medium: &GeneralMedium) -> Result<Complex64> {
    if let Some(sym) = medium.as_symmetric() {
        return Ok(sigma(freq, &sym));
    }
    let (mp, mm) = medium.roots(freq);
    let sum = mp + mm;
    if sum.norm() == 0.0 {
        return Err(Error::SingularBoundarySystem { determinant: 0.0 });
    }
    let t = freq.tau() + I * (medium.w1() * freq.eta);
    let ve = medium.big_v1() * freq.eta;
    let c = medium.c;
    let ratio = t / (sum * c);
    Ok(t * t + ve * ve * (ratio * ratio * 8.0 - 1.0))
}

/// Stability report of a medium.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeReport {
    pub mach_class: MachClass,
    pub stability_class: StabilityClass,
    /// Always defined; `±iY₀` are spurious roots of the biquadratic.
    pub y0: f64,
    /// Real symbol roots `τ = cY₁|η|` (elliptic regime only).
    pub y1: Option<f64>,
    /// Neutral roots `τ = ±icY₂η` (weakly stable regime only).
    pub y2: Option<f64>,
}

/// Root parameters of the biquadratic `X⁴ + 2(m²+1)X² + m²(m²−2) = 0`,
/// `m = v/c`: returns `(Y₀, Y₁² or −Y₂²)` with the second value computed
/// without cancellation.
fn biquadratic(m: f64) -> (f64, f64) {
    let m2 = m * m;
    let root = (4.0 * m2 + 1.0).sqrt();
    let y0 = (m2 + 1.0 + root).sqrt();
    // −(m²+1) + √(4m²+1) = m²(2 − m²)/(√(4m²+1) + m² + 1)
    let small = m2 * (2.0 - m2) / (root + m2 + 1.0);
    (y0, small)
}

pub fn classify(params: &MediumParams) -> RegimeReport {
    let (y0, small) = biquadratic(params.mach());
    let stability_class = params.stability_class();
    let (y1, y2) = match stability_class {
        StabilityClass::EllipticUnstable => (Some(small.sqrt()), None),
        StabilityClass::WeaklyStable => (None, Some((-small).sqrt())),
        StabilityClass::Transition => (None, None),
    };
    RegimeReport {
        mach_class: params.mach_class(),
        stability_class,
        y0,
        y1,
        y2,
    }
}

/// The zeros of `τ ↦ Σ(τ, η)` on `Re τ ≥ 0`: `{cY₁|η|}` in the elliptic
/// regime, `{icY₂η, −icY₂η}` in the weakly stable one.
pub fn symbol_roots(params: &MediumParams, eta: f64) -> Result<Vec<Complex64>> {
    if !(eta.is_finite() && eta != 0.0) {
        return Err(Error::InvalidArgument("eta must be finite and non-zero"));
    }
    let report = classify(params);
    let c = params.c;
    match (report.y1, report.y2) {
        (Some(y1), _) => Ok(vec![Complex64::new(c * y1 * eta.abs(), 0.0)]),
        (_, Some(y2)) => Ok(vec![
            Complex64::new(0.0, c * y2 * eta),
            Complex64::new(0.0, -c * y2 * eta),
        ]),
        _ => Err(Error::Regime {
            required: StabilityClass::WeaklyStable,
            found: StabilityClass::Transition,
        }),
    }
}

/// `H = Σ / (τ − τ₀)` where `τ₀ ∈ {±icY₂η}` is the root nearest to `τ`.
///
/// Only defined in the weakly stable regime and for frequencies within
/// `radius · Λ` of the root. Within [`NEAR_ROOT_TOL`]`· Λ` of the root the
/// derivative `∂Σ/∂τ(τ₀) = cη · 2X₀(X₀² + (v/c)² + 1)`, `X₀ = τ₀/(cη)`, is
/// returned instead of the quotient.
pub fn factor_h(freq: Frequency, params: &MediumParams, radius: f64) -> Result<Complex64> {
    params.require(StabilityClass::WeaklyStable)?;
    let y2 = classify(params).y2.unwrap_or(0.0);
    let (c, eta) = (params.c, freq.eta);
    let tau = freq.tau();
    let lambda = freq.lambda();
    let up = Complex64::new(0.0, c * y2 * eta);
    let root = if (tau - up).norm() <= (tau + up).norm() {
        up
    } else {
        -up
    };
    let dist = (tau - root).norm();
    if eta == 0.0 || dist > radius * lambda {
        return Err(Error::OutsideRootNeighborhood {
            distance: dist / lambda,
            radius,
        });
    }
    if dist <= NEAR_ROOT_TOL * lambda {
        let x0 = root / (c * eta);
        let m = params.mach();
        let k = x0 * x0 + m * m + 1.0;
        return Ok(x0 * k * (2.0 * c * eta));
    }
    Ok(sigma(freq, params) / (tau - root))
}

/// Nature of a boundary root in the sign tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootKind {
    Imaginary,
    PositiveReal,
    Zero,
    /// Neither real nor imaginary (never produced on `γ = 0`).
    Complex,
}

/// One row of the boundary sign tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignRow {
    pub mu_plus_kind: RootKind,
    pub mu_minus_kind: RootKind,
    pub sum_nonzero: bool,
    /// Sign of `Re(μ⁺μ⁻)`: −1, 0 or +1.
    pub re_product_sign: i8,
}

fn root_kind(z: Complex64, tol: f64) -> RootKind {
    let re_zero = z.re.abs() <= tol;
    let im_zero = z.im.abs() <= tol;
    match (re_zero, im_zero) {
        (true, true) => RootKind::Zero,
        (true, false) => RootKind::Imaginary,
        (false, true) if z.re > 0.0 => RootKind::PositiveReal,
        _ => RootKind::Complex,
    }
}

/// Classifies `μ±(iδ, η)` for `η ≠ 0` away from the endpoints `±(v/c ± 1)` of
/// `δ/(cη)`.
pub fn sign_table_check(freq: Frequency, params: &MediumParams) -> Result<SignRow> {
    if freq.gamma != 0.0 || freq.eta == 0.0 {
        return Err(Error::NotOnBoundary);
    }
    let m = params.mach();
    let ratio = freq.delta / (params.c * freq.eta);
    for end in [m + 1.0, m - 1.0, -(m - 1.0), -(m + 1.0)] {
        if (ratio - end).abs() <= ENDPOINT_TOL * end.abs().max(1.0) {
            return Err(Error::OnIntervalEndpoint { ratio });
        }
    }
    let pair = mu_pair(freq, params);
    let lambda = freq.lambda();
    let tol = 1e-12 * lambda;
    let re_prod = pair.product().re;
    let re_product_sign = if re_prod.abs() <= 1e-12 * lambda * lambda {
        0
    } else if re_prod > 0.0 {
        1
    } else {
        -1
    };
    Ok(SignRow {
        mu_plus_kind: root_kind(pair.mu_plus, tol),
        mu_minus_kind: root_kind(pair.mu_minus, tol),
        sum_nonzero: pair.sum().norm() > tol,
        re_product_sign,
    })
}
