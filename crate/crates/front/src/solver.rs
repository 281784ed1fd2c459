//! Spectral solve of the front equation and the energy-estimate sweep.

use num_complex::Complex64;
use rayon::prelude::*;
use vortex_front_core::pressure::{self, BoundaryState, PressureProfile};
use vortex_front_core::quadrature::{integrate, tail_bound, FittedRule};
use vortex_front_core::spectral::{
    check_solvable, sobolev_norm, sobolev_norm_sq, solve_bin, BinSolution, EstimateConstants,
    FrequencyGrid,
};
use vortex_front_core::{mu_pair, Frequency, MediumParams};

use crate::error::{FrontError, Result};
use crate::field::{FieldGrid, GridSpec};
use crate::transform::{enforce_conjugate_symmetry, Transformer};

/// Weighted transforms of every `x₂` level of a field.
#[derive(Debug, Clone)]
pub struct SpectralField {
    spec: GridSpec,
    grid: FrequencyGrid,
    gamma: f64,
    /// Level-major: `plus[k * grid.len() + bin]`.
    plus: Vec<Complex64>,
    minus: Vec<Complex64>,
}

impl SpectralField {
    pub fn new(field: &FieldGrid, gamma: f64) -> Result<Self> {
        let spec = *field.spec();
        let grid = spec.frequency_grid()?;
        let tr = Transformer::new(grid);
        let levels: Vec<(Vec<Complex64>, Vec<Complex64>)> = (0..spec.n_x2)
            .into_par_iter()
            .map(|k| {
                let (p, q) = field.level(k);
                Ok((tr.forward(&p, gamma)?, tr.forward(&q, gamma)?))
            })
            .collect::<Result<_>>()?;
        let mut plus = Vec::with_capacity(spec.len());
        let mut minus = Vec::with_capacity(spec.len());
        for (p, q) in levels {
            plus.extend(p);
            minus.extend(q);
        }
        Ok(Self {
            spec,
            grid,
            gamma,
            plus,
            minus,
        })
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `F̂⁺(δ, η, x₂_k)` and `F̂⁻(δ, η, −x₂_k)` for all `k` at one bin.
    pub fn slices(&self, bin: usize) -> (Vec<Complex64>, Vec<Complex64>) {
        let n = self.grid.len();
        let plus = (0..self.spec.n_x2)
            .map(|k| self.plus[k * n + bin])
            .collect();
        let minus = (0..self.spec.n_x2)
            .map(|k| self.minus[k * n + bin])
            .collect();
        (plus, minus)
    }

    /// Spectra of `F⁺` and `F⁻` at level `x₂_k`.
    pub fn level(&self, k: usize) -> (&[Complex64], &[Complex64]) {
        let n = self.grid.len();
        (
            &self.plus[k * n..(k + 1) * n],
            &self.minus[k * n..(k + 1) * n],
        )
    }

    /// `(‖F⁺‖², ‖F⁻‖²)` in `L²(ℝ±; H^s_γ)`.
    pub fn forcing_norms_sq(&self, s: f64) -> Result<(f64, f64)> {
        let mut plus = Vec::with_capacity(self.spec.n_x2);
        let mut minus = Vec::with_capacity(self.spec.n_x2);
        for k in 0..self.spec.n_x2 {
            let (p, q) = self.level(k);
            plus.push(sobolev_norm_sq(p, &self.grid, s, self.gamma)?);
            minus.push(sobolev_norm_sq(q, &self.grid, s, self.gamma)?);
        }
        let h = self.spec.h();
        Ok((integrate(&plus, h)?, integrate(&minus, h)?))
    }
}

/// The forcing functional at one frequency with its truncation estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForcingFunctional {
    pub m: Complex64,
    pub i_plus: Complex64,
    pub i_minus: Complex64,
    /// Bound on the part of `M` beyond the last node.
    pub tail: f64,
}

/// `M = (1/μ⁺)∫₀^L e^{-μ⁺y} F̂⁺(y) dy − (1/μ⁻)∫₀^L e^{-μ⁻y} F̂⁻(−y) dy` on nodes
/// `y_k = k h`.
pub fn compute_m(
    freq: Frequency,
    params: &MediumParams,
    plus: &[Complex64],
    minus: &[Complex64],
    h: f64,
) -> Result<ForcingFunctional> {
    if plus.len() != minus.len() {
        return Err(FrontError::Core(vortex_front_core::Error::LengthMismatch {
            expected: plus.len(),
            found: minus.len(),
        }));
    }
    let roots = mu_pair(freq, params);
    let i_plus = FittedRule::new(roots.mu_plus, h)?.laplace(plus)?;
    let i_minus = FittedRule::new(roots.mu_minus, h)?.laplace(minus)?;
    let length = h * (plus.len() - 1) as f64;
    let last = plus.len() - 1;
    let tail = tail_bound(roots.mu_plus, length, plus[last].norm()) / roots.mu_plus.norm()
        + tail_bound(roots.mu_minus, length, minus[last].norm()) / roots.mu_minus.norm();
    Ok(ForcingFunctional {
        m: i_plus / roots.mu_plus - i_minus / roots.mu_minus,
        i_plus,
        i_minus,
        tail,
    })
}

/// Result of the spectral front solve at one weight.
#[derive(Debug, Clone)]
pub struct FrontSolution {
    pub grid: FrequencyGrid,
    pub gamma: f64,
    /// Per-bin quantities in the grid's flat order.
    pub bins: Vec<BinSolution>,
    /// `f̂` on the grid.
    pub f_hat: Vec<Complex64>,
    /// `f(t_m, x₁_n)`, row-major.
    pub f_phys: Vec<f64>,
    /// Largest imaginary part left after inversion of the symmetrised `f̂`.
    pub max_imag: f64,
}

impl FrontSolution {
    /// `‖f‖_{s,γ}`.
    pub fn norm(&self, s: f64) -> Result<f64> {
        Ok(sobolev_norm(&self.f_hat, &self.grid, s, self.gamma)?)
    }

    pub fn norms(&self, orders: &[f64]) -> Result<Vec<(f64, f64)>> {
        orders.iter().map(|&s| Ok((s, self.norm(s)?))).collect()
    }

    /// Spectrum of the source `ĝ` and of its part `ĝ₁`.
    pub fn g_hat(&self) -> Vec<Complex64> {
        self.bins.iter().map(|b| b.g).collect()
    }

    pub fn g1_hat(&self) -> Vec<Complex64> {
        self.bins.iter().map(|b| b.g1).collect()
    }
}

/// Solves the front equation bin by bin for `f̂` and transforms back.
pub fn solve_front(field: &FieldGrid, params: &MediumParams, gamma: f64) -> Result<FrontSolution> {
    check_solvable(params, gamma)?;
    let spectral = SpectralField::new(field, gamma)?;
    solve_spectral(&spectral, params)
}

/// [`solve_front`] on an already transformed field.
pub fn solve_spectral(spectral: &SpectralField, params: &MediumParams) -> Result<FrontSolution> {
    let gamma = spectral.gamma();
    check_solvable(params, gamma)?;
    let grid = *spectral.grid();
    let h = spectral.spec().h();
    let bins: Vec<BinSolution> = (0..grid.len())
        .into_par_iter()
        .map(|k| {
            let (p, q) = spectral.slices(k);
            Ok(solve_bin(grid.frequency(k, gamma)?, params, &p, &q, h)?)
        })
        .collect::<Result<_>>()?;
    let f_hat: Vec<Complex64> = bins.iter().map(|b| b.f_hat).collect();
    let mut symmetric = f_hat.clone();
    enforce_conjugate_symmetry(&mut symmetric, &grid);
    let phys = Transformer::new(grid).inverse(&symmetric, gamma)?;
    let max_imag = phys.iter().map(|v| v.im.abs()).fold(0.0, f64::max);
    Ok(FrontSolution {
        grid,
        gamma,
        bins,
        f_hat,
        f_phys: phys.iter().map(|v| v.re).collect(),
        max_imag,
    })
}

/// Boundary state and pressure profiles at bin `k` of a solution.
pub fn reconstruct_bin(
    spectral: &SpectralField,
    solution: &FrontSolution,
    params: &MediumParams,
    k: usize,
) -> Result<(BoundaryState, PressureProfile)> {
    let b = solution
        .bins
        .get(k)
        .ok_or_else(|| FrontError::Invalid(format!("no bin {k}")))?;
    let state = pressure::solve_boundary_system(b.freq, params, b.f_hat, b.i_plus, b.i_minus)?;
    let (p, q) = spectral.slices(k);
    let profile = pressure::reconstruct(b.freq, params, &state, &p, &q, spectral.spec().h())?;
    Ok((state, profile))
}

/// One line of the estimate sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateRow {
    pub gamma: f64,
    /// `‖f‖²_{s+1,γ}`.
    pub f_norm_sq: f64,
    /// `‖F⁺‖²` in `L²(ℝ⁺; H^s_γ)`.
    pub forcing_plus_sq: f64,
    pub forcing_minus_sq: f64,
    /// `‖g‖²_{s,γ}`.
    pub g_norm_sq: f64,
    pub g1_norm_sq: f64,
    /// `γ³‖f‖²_{s+1,γ} / (‖F⁺‖² + ‖F⁻‖²)`.
    pub r: f64,
    /// `γ²‖f‖²_{s+1,γ} / ‖g‖²_{s,γ}`.
    pub r_prime: f64,
    /// `γ‖g₁‖²_{s,γ} / ‖F⁺‖²`.
    pub g1_ratio: f64,
    /// Largest `γ|ĝ₁|² / ∫|F̂⁺|² dy` over the bins.
    pub g1_bin_max: f64,
    /// Smallest `|ĝ|² / (γ² Λ² |f̂|²)` over the bins with `f̂ ≠ 0`.
    pub pointwise_min: f64,
    /// Bins where `C γ² Λ² |f̂|² ≤ |ĝ|²` fails for the estimated `C`.
    pub pointwise_violations: usize,
}

#[derive(Debug, Clone)]
pub struct EstimateReport {
    pub constants: EstimateConstants,
    pub s: f64,
    pub rows: Vec<EstimateRow>,
}

/// Relative slack in the bin-wise check, for rounding in `|ĝ|²` and `|f̂|²`.
const POINTWISE_SLACK: f64 = 1e-9;

fn ratio(a: f64, b: f64) -> f64 {
    if b > 0.0 {
        a / b
    } else {
        f64::NAN
    }
}

/// Solves at each weight and tabulates the estimate ratios.
pub fn verify_estimate(
    field: &FieldGrid,
    params: &MediumParams,
    gammas: &[f64],
    s: f64,
) -> Result<EstimateReport> {
    for &g in gammas {
        check_solvable(params, g)?;
    }
    if gammas.is_empty() {
        return Err(FrontError::Invalid("need at least one gamma".into()));
    }
    let constants = EstimateConstants::estimate_default(params)?;
    let c = constants.pointwise();
    let h = field.spec().h();
    let mut rows = Vec::with_capacity(gammas.len());
    for &gamma in gammas {
        let spectral = SpectralField::new(field, gamma)?;
        let sol = solve_spectral(&spectral, params)?;
        let grid = sol.grid;
        let f_norm_sq = sobolev_norm_sq(&sol.f_hat, &grid, s + 1.0, gamma)?;
        let g_norm_sq = sobolev_norm_sq(&sol.g_hat(), &grid, s, gamma)?;
        let g1_norm_sq = sobolev_norm_sq(&sol.g1_hat(), &grid, s, gamma)?;
        let (fp, fm) = spectral.forcing_norms_sq(s)?;
        let mut g1_bin_max = 0.0f64;
        let mut pointwise_min = f64::INFINITY;
        let mut pointwise_violations = 0;
        for (k, b) in sol.bins.iter().enumerate() {
            let (p, _) = spectral.slices(k);
            let dens: Vec<f64> = p.iter().map(|v| v.norm_sqr()).collect();
            let fp_bin = integrate(&dens, h)?;
            if fp_bin > 0.0 {
                g1_bin_max = g1_bin_max.max(gamma * b.g1.norm_sqr() / fp_bin);
            }
            let lhs = gamma * gamma * b.freq.lambda_sq() * b.f_hat.norm_sqr();
            if lhs > 0.0 {
                pointwise_min = pointwise_min.min(b.g.norm_sqr() / lhs);
            }
            if c * lhs > b.g.norm_sqr() * (1.0 + POINTWISE_SLACK) {
                pointwise_violations += 1;
            }
        }
        rows.push(EstimateRow {
            gamma,
            f_norm_sq,
            forcing_plus_sq: fp,
            forcing_minus_sq: fm,
            g_norm_sq,
            g1_norm_sq,
            r: ratio(gamma.powi(3) * f_norm_sq, fp + fm),
            r_prime: ratio(gamma * gamma * f_norm_sq, g_norm_sq),
            g1_ratio: ratio(gamma * g1_norm_sq, fp),
            g1_bin_max,
            pointwise_min,
            pointwise_violations,
        });
    }
    Ok(EstimateReport { constants, s, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> GridSpec {
        GridSpec::new(16, 8, 33, 8.0, 4.0, 2.0).unwrap()
    }

    fn bump(x: f64, a: f64, b: f64) -> f64 {
        if x <= a || x >= b {
            return 0.0;
        }
        let u = (2.0 * x - a - b) / (b - a);
        (1.0 - u * u).powi(4)
    }

    fn field() -> FieldGrid {
        FieldGrid::from_fn(spec(), |t, x1, y| {
            let w = bump(t, 1.0, 5.0) * bump(x1, 0.5, 3.5);
            let p = w * (1.0 - (y / 1.5).min(1.0).powi(2)).powi(3);
            (p, 0.3 * p)
        })
        .unwrap()
    }

    #[test]
    fn compute_m_closed_form_and_cancellation() {
        let p = MediumParams::new(2.0, 1.0).unwrap();
        let f = Frequency::new(1.0, 0.7, -1.3).unwrap();
        let (n, l) = (513, 12.0);
        let h = l / (n - 1) as f64;
        let plus: Vec<Complex64> = (0..n)
            .map(|k| Complex64::new((-(k as f64) * h).exp(), 0.0))
            .collect();
        let zero = vec![Complex64::new(0.0, 0.0); n];
        let r = mu_pair(f, &p);
        let exact = 1.0 / (r.mu_plus * (r.mu_plus + 1.0));
        let got = compute_m(f, &p, &plus, &zero, h).unwrap();
        assert!((got.m - exact).norm() <= 1e-8 * exact.norm());
        assert!(got.tail < 1e-5);
        let z = Frequency::new(1.0, 0.4, 0.0).unwrap();
        assert_eq!(
            compute_m(z, &p, &plus, &plus, h).unwrap().m,
            Complex64::new(0.0, 0.0)
        );
        assert_eq!(
            compute_m(f, &p, &zero, &zero, h).unwrap().m,
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn zero_field_gives_zero_front() {
        let p = MediumParams::new(2.0, 1.0).unwrap();
        let sol = solve_front(&FieldGrid::zeros(spec()).unwrap(), &p, 1.0).unwrap();
        assert!(sol.f_phys.iter().all(|&v| v == 0.0));
        assert_eq!(sol.norm(1.0).unwrap(), 0.0);
    }

    #[test]
    fn refuses_other_regimes_and_small_weights() {
        let f = field();
        for v in [1.0, 1.3] {
            let err = solve_front(&f, &MediumParams::new(v, 1.0).unwrap(), 1.0).unwrap_err();
            assert_eq!(err.exit_code(), 3);
        }
        let err = solve_front(&f, &MediumParams::new(2.0, 1.0).unwrap(), 0.5).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn solution_is_real_and_consistent() {
        let p = MediumParams::new(2.0, 1.0).unwrap();
        let sol = solve_front(&field(), &p, 2.0).unwrap();
        let max = sol.f_phys.iter().map(|v| v.abs()).fold(0.0, f64::max);
        assert!(max > 0.0);
        assert!(sol.max_imag <= 1e-10 * max);
        for b in &sol.bins {
            assert!((b.sigma * b.f_hat - b.g).norm() <= 1e-12 * b.g.norm().max(1e-300));
        }
        let norms = sol.norms(&[0.0, 1.0]).unwrap();
        assert!(norms[1].1 >= norms[0].1);
    }

    #[test]
    fn estimate_rows_are_finite() {
        let p = MediumParams::new(2.0, 1.0).unwrap();
        let rep = verify_estimate(&field(), &p, &[1.0, 4.0], 0.0).unwrap();
        for row in &rep.rows {
            assert!(row.r.is_finite() && row.r > 0.0);
            assert!(row.r_prime.is_finite());
            assert_eq!(row.pointwise_violations, 0);
            assert!(row.pointwise_min >= rep.constants.pointwise() * (1.0 - 1e-9));
        }
        assert!(verify_estimate(&field(), &p, &[], 0.0).is_err());
    }
}
