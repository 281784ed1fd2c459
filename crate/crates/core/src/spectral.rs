//! Frequency grids, weighted Sobolev norms and the per-bin front solve.
//!
//! A box `[0, L_t) × [0, L_x1)` sampled with `n_t × n_x1` points is dual to
//! the frequencies `δ_j = 2π j'/L_t`, `η_l = 2π l'/L_x1` where `j'` is the
//! signed index of `j` (the Nyquist bin is negative). Spectra are stored row
//! major, `index = j * n_x1 + l`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::quadrature::{tail_bound, FittedRule};
use crate::symbol::{
    classify, factor_h, mu_pair, sigma, Frequency, MediumParams, RootPair, StabilityClass,
    DEFAULT_ROOT_RADIUS,
};
use crate::{Error, Result};

/// Smallest weight accepted by the front solve.
pub const MIN_GAMMA: f64 = 1.0;

/// Signed index of bin `j` out of `n`: `j` below `n/2`, `j − n` from `n/2` on.
#[inline]
pub fn signed_index(j: usize, n: usize) -> i64 {
    if 2 * j < n {
        j as i64
    } else {
        j as i64 - n as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyGrid {
    n_t: usize,
    n_x1: usize,
    l_t: f64,
    l_x1: f64,
}

impl FrequencyGrid {
    pub fn new(n_t: usize, n_x1: usize, l_t: f64, l_x1: f64) -> Result<Self> {
        if n_t == 0 || n_x1 == 0 {
            return Err(Error::InvalidArgument("grid sizes must be positive"));
        }
        if !(l_t.is_finite() && l_t > 0.0 && l_x1.is_finite() && l_x1 > 0.0) {
            return Err(Error::InvalidArgument("box lengths must be positive"));
        }
        Ok(Self {
            n_t,
            n_x1,
            l_t,
            l_x1,
        })
    }

    #[inline]
    pub fn n_t(&self) -> usize {
        self.n_t
    }

    #[inline]
    pub fn n_x1(&self) -> usize {
        self.n_x1
    }

    #[inline]
    pub fn l_t(&self) -> f64 {
        self.l_t
    }

    #[inline]
    pub fn l_x1(&self) -> f64 {
        self.l_x1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n_t * self.n_x1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn dt(&self) -> f64 {
        self.l_t / self.n_t as f64
    }

    #[inline]
    pub fn dx1(&self) -> f64 {
        self.l_x1 / self.n_x1 as f64
    }

    #[inline]
    pub fn delta(&self, j: usize) -> f64 {
        2.0 * PI * signed_index(j, self.n_t) as f64 / self.l_t
    }

    #[inline]
    pub fn eta(&self, l: usize) -> f64 {
        2.0 * PI * signed_index(l, self.n_x1) as f64 / self.l_x1
    }

    /// `Δδ Δη`.
    #[inline]
    pub fn bin_area(&self) -> f64 {
        (2.0 * PI / self.l_t) * (2.0 * PI / self.l_x1)
    }

    #[inline]
    pub fn index(&self, j: usize, l: usize) -> usize {
        j * self.n_x1 + l
    }

    /// `(j, l)` of a flat index.
    #[inline]
    pub fn split(&self, k: usize) -> (usize, usize) {
        (k / self.n_x1, k % self.n_x1)
    }

    /// Flat index of the bin at `(−δ, −η)`.
    #[inline]
    pub fn mirror(&self, k: usize) -> usize {
        let (j, l) = self.split(k);
        self.index((self.n_t - j) % self.n_t, (self.n_x1 - l) % self.n_x1)
    }

    pub fn frequency(&self, k: usize, gamma: f64) -> Result<Frequency> {
        let (j, l) = self.split(k);
        Frequency::new(gamma, self.delta(j), self.eta(l))
    }
}

/// `‖v‖²_{s,γ} ≈ (2π)^{-2} Σ Λ^{2s} |v̂|² Δδ Δη` over the grid.
pub fn sobolev_norm_sq(
    spectrum: &[Complex64],
    grid: &FrequencyGrid,
    s: f64,
    gamma: f64,
) -> Result<f64> {
    if spectrum.len() != grid.len() {
        return Err(Error::LengthMismatch {
            expected: grid.len(),
            found: spectrum.len(),
        });
    }
    if !(s.is_finite() && gamma.is_finite() && gamma >= 0.0) {
        return Err(Error::InvalidArgument("need finite s and gamma >= 0"));
    }
    let g2 = gamma * gamma;
    let mut acc = 0.0;
    for j in 0..grid.n_t {
        let d = grid.delta(j);
        for l in 0..grid.n_x1 {
            let v = spectrum[grid.index(j, l)];
            if v.re == 0.0 && v.im == 0.0 {
                continue;
            }
            let e = grid.eta(l);
            let lam2 = g2 + d * d + e * e;
            // Λ = 0 only at the origin with γ = 0, where Λ^{2s} is taken as 0^s
            let w = if lam2 == 0.0 {
                if s == 0.0 {
                    1.0
                } else if s > 0.0 {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                lam2.powf(s)
            };
            acc += w * v.norm_sqr();
        }
    }
    Ok(acc * grid.bin_area() / (4.0 * PI * PI))
}

pub fn sobolev_norm(
    spectrum: &[Complex64],
    grid: &FrequencyGrid,
    s: f64,
    gamma: f64,
) -> Result<f64> {
    sobolev_norm_sq(spectrum, grid, s, gamma).map(f64::sqrt)
}

/// `M = (1/μ⁺) I⁺ − (1/μ⁻) I⁻` from the half-space integrals.
#[inline]
pub fn forcing_functional(roots: &RootPair, i_plus: Complex64, i_minus: Complex64) -> Complex64 {
    i_plus / roots.mu_plus - i_minus / roots.mu_minus
}

/// `ĝ₁ = −μ⁻ I⁺/(μ⁺ + μ⁻)` and `ĝ₂ = −μ⁺ I⁻/(μ⁺ + μ⁻)`, so that
/// `ĝ = −(μ⁺μ⁻/(μ⁺ + μ⁻)) M = ĝ₁ − ĝ₂`.
#[inline]
pub fn source_parts(
    roots: &RootPair,
    i_plus: Complex64,
    i_minus: Complex64,
) -> (Complex64, Complex64) {
    let sum = roots.sum();
    (
        -roots.mu_minus * i_plus / sum,
        -roots.mu_plus * i_minus / sum,
    )
}

/// Everything computed at one bin of the front solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinSolution {
    pub freq: Frequency,
    pub roots: RootPair,
    /// `∫₀^L e^{-μ⁺y} F̂⁺(y) dy`.
    pub i_plus: Complex64,
    /// `∫₀^L e^{-μ⁻y} F̂⁻(−y) dy`.
    pub i_minus: Complex64,
    pub m: Complex64,
    pub g1: Complex64,
    pub g2: Complex64,
    /// `ĝ = ĝ₁ − ĝ₂`.
    pub g: Complex64,
    pub sigma: Complex64,
    pub f_hat: Complex64,
    /// Estimate of the error in `M` from truncating the integrals at `L`.
    pub m_tail: f64,
}

/// Checks that the medium and weight admit the front solve.
pub fn check_solvable(params: &MediumParams, gamma: f64) -> Result<()> {
    params.require(StabilityClass::WeaklyStable)?;
    if !(gamma >= MIN_GAMMA) || !gamma.is_finite() {
        return Err(Error::WeightTooSmall {
            gamma,
            min: MIN_GAMMA,
        });
    }
    Ok(())
}

/// Solves `Σ f̂ + (μ⁺μ⁻/(μ⁺ + μ⁻)) M = 0` at one frequency.
///
/// `plus[k] = F̂⁺(x₂ = k h)` and `minus[k] = F̂⁻(x₂ = −k h)`.
pub fn solve_bin(
    freq: Frequency,
    params: &MediumParams,
    plus: &[Complex64],
    minus: &[Complex64],
    h: f64,
) -> Result<BinSolution> {
    check_solvable(params, freq.gamma())?;
    if plus.len() != minus.len() {
        return Err(Error::LengthMismatch {
            expected: plus.len(),
            found: minus.len(),
        });
    }
    let roots = mu_pair(freq, params);
    let rule_plus = FittedRule::new(roots.mu_plus, h)?;
    let i_plus = rule_plus.laplace(plus)?;
    let i_minus = if roots.mu_minus == roots.mu_plus {
        rule_plus.laplace(minus)?
    } else {
        FittedRule::new(roots.mu_minus, h)?.laplace(minus)?
    };
    let m = forcing_functional(&roots, i_plus, i_minus);
    let (g1, g2) = source_parts(&roots, i_plus, i_minus);
    let g = g1 - g2;
    let s = sigma(freq, params);
    let length = h * (plus.len() - 1) as f64;
    let last = plus.len() - 1;
    let m_tail = tail_bound(roots.mu_plus, length, plus[last].norm()) / roots.mu_plus.norm()
        + tail_bound(roots.mu_minus, length, minus[last].norm()) / roots.mu_minus.norm();
    Ok(BinSolution {
        freq,
        roots,
        i_plus,
        i_minus,
        m,
        g1,
        g2,
        g,
        sigma: s,
        f_hat: g / s,
        m_tail,
    })
}

/// Constants of the symbol bounds on the unit hemisphere `Ξ₁`, estimated by
/// sampling and local refinement (weakly stable regime).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateConstants {
    /// `max |Σ|` on `Ξ₁`: `|Σ(τ, η)| ≤ C (|τ|² + η²)`.
    pub sigma_upper: f64,
    /// `min |Σ|` on `Ξ₁` outside the root neighborhoods.
    pub sigma_lower: f64,
    /// `min |H|` on `Ξ₁` inside the root neighborhoods.
    pub h_lower: f64,
    /// Relative radius of the root neighborhoods.
    pub radius: f64,
}

/// Point of `Ξ₁` at polar angle `θ ∈ [0, π]` from the `η` axis and argument
/// `ψ ∈ [−π/2, π/2]` of `τ`.
fn hemisphere_point(theta: f64, psi: f64) -> Frequency {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = psi.sin_cos();
    let rho = st.abs();
    Frequency::from_parts((rho * cp).max(0.0), rho * sp, ct)
}

impl EstimateConstants {
    /// Samples `Ξ₁` on a `resolution × resolution` angular grid, then refines
    /// the extrema by pattern search.
    pub fn estimate(params: &MediumParams, radius: f64, resolution: usize) -> Result<Self> {
        params.require(StabilityClass::WeaklyStable)?;
        if !(radius > 0.0 && radius < 1.0) {
            return Err(Error::InvalidArgument(
                "neighborhood radius must lie in (0, 1)",
            ));
        }
        if resolution < 8 {
            return Err(Error::InvalidArgument("resolution must be at least 8"));
        }
        let y2 = classify(params).y2.unwrap_or(0.0);
        let c = params.c();
        let near_root = |f: &Frequency| {
            let up = Complex64::new(0.0, c * y2 * f.eta());
            let tau = f.tau();
            f.eta() != 0.0 && (tau - up).norm().min((tau + up).norm()) <= radius * f.lambda()
        };
        // objectives to minimise; +∞ outside the admissible region
        let outer = |th: f64, ps: f64| {
            let f = hemisphere_point(th, ps);
            if near_root(&f) {
                f64::INFINITY
            } else {
                sigma(f, params).norm()
            }
        };
        let inner = |th: f64, ps: f64| {
            let f = hemisphere_point(th, ps);
            if near_root(&f) {
                factor_h(f, params, radius).map_or(f64::INFINITY, |h| h.norm())
            } else {
                f64::INFINITY
            }
        };
        let upper = |th: f64, ps: f64| -sigma(hemisphere_point(th, ps), params).norm();

        let n = resolution;
        let d_theta = PI / (n - 1) as f64;
        let d_psi = PI / (n - 1) as f64;
        const KEEP: usize = 6;
        let mut best: [Vec<(f64, f64, f64)>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for a in 0..n {
            let th = a as f64 * d_theta;
            for b in 0..n {
                let ps = -FRAC_PI_2 + b as f64 * d_psi;
                let vals = [outer(th, ps), inner(th, ps), upper(th, ps)];
                for (list, v) in best.iter_mut().zip(vals) {
                    if v.is_finite() {
                        insert_best(list, (v, th, ps), KEEP);
                    }
                }
            }
        }
        let refine = |list: &[(f64, f64, f64)], obj: &dyn Fn(f64, f64) -> f64| {
            list.iter()
                .map(|&(v, th, ps)| pattern_search(obj, v, th, ps, d_theta))
                .fold(f64::INFINITY, f64::min)
        };
        let sigma_lower = refine(&best[0], &outer);
        let h_lower = refine(&best[1], &inner);
        let sigma_upper = -refine(&best[2], &upper);
        Ok(Self {
            sigma_upper,
            sigma_lower,
            h_lower,
            radius,
        })
    }

    /// Default sampling: `DEFAULT_ROOT_RADIUS`, 241 × 241 angles.
    pub fn estimate_default(params: &MediumParams) -> Result<Self> {
        Self::estimate(params, DEFAULT_ROOT_RADIUS, 241)
    }

    /// `C₀ = min(sigma_lower, h_lower)`: `|Σ(τ, η)| ≥ C₀ γ Λ` for `γ > 0`.
    pub fn combined(&self) -> f64 {
        self.sigma_lower.min(self.h_lower)
    }

    /// `C = C₀²` in `C γ² (|τ|² + η²) |f̂|² ≤ |ĝ|²`.
    pub fn pointwise(&self) -> f64 {
        let c0 = self.combined();
        c0 * c0
    }
}

fn insert_best(list: &mut Vec<(f64, f64, f64)>, item: (f64, f64, f64), keep: usize) {
    let pos = list.iter().position(|e| item.0 < e.0).unwrap_or(list.len());
    if pos < keep {
        list.insert(pos, item);
        list.truncate(keep);
    }
}

/// Compass search on `(θ, ψ)` clamped to the hemisphere chart.
fn pattern_search(obj: &dyn Fn(f64, f64) -> f64, v0: f64, th0: f64, ps0: f64, step0: f64) -> f64 {
    let (mut v, mut th, mut ps, mut step) = (v0, th0, ps0, step0);
    while step > 1e-12 {
        let mut moved = false;
        for (dt, dp) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
            let t = (th + dt * step).clamp(0.0, PI);
            let p = (ps + dp * step).clamp(-FRAC_PI_2, FRAC_PI_2);
            let w = obj(t, p);
            if w < v {
                v = w;
                th = t;
                ps = p;
                moved = true;
                break;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeRow {
    pub gamma: f64,
    /// `|γ − c Y₁ |η₀||`.
    pub distance: f64,
    pub inv_abs_sigma: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlowupProbe {
    /// The real root `c Y₁ |η₀|`.
    pub root: f64,
    pub rows: Vec<ProbeRow>,
    /// Least-squares slope of `ln |1/Σ|` against `ln |γ − root|`.
    pub exponent: f64,
}

/// Evaluates `|1/Σ(γ, η₀)|` along real `τ = γ` in the elliptic regime.
pub fn blowup_probe(params: &MediumParams, eta0: f64, gammas: &[f64]) -> Result<BlowupProbe> {
    params.require(StabilityClass::EllipticUnstable)?;
    if !(eta0.is_finite() && eta0 != 0.0) {
        return Err(Error::InvalidArgument("eta0 must be finite and non-zero"));
    }
    if gammas.len() < 2 {
        return Err(Error::InvalidArgument("need at least two weights"));
    }
    let y1 = classify(params).y1.unwrap_or(0.0);
    let root = params.c() * y1 * eta0.abs();
    let mut rows = Vec::with_capacity(gammas.len());
    for &g in gammas {
        let f = Frequency::new(g, 0.0, eta0)?;
        let distance = (g - root).abs();
        if distance == 0.0 {
            return Err(Error::InvalidArgument(
                "weight coincides with the symbol root",
            ));
        }
        rows.push(ProbeRow {
            gamma: g,
            distance,
            inv_abs_sigma: 1.0 / sigma(f, params).norm(),
        });
    }
    let n = rows.len() as f64;
    let xs = rows.iter().map(|r| r.distance.ln());
    let ys = rows.iter().map(|r| r.inv_abs_sigma.ln());
    let mx = xs.clone().sum::<f64>() / n;
    let my = ys.clone().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if sxx == 0.0 {
        return Err(Error::InvalidArgument(
            "weights must differ in distance to the root",
        ));
    }
    Ok(BlowupProbe {
        root,
        rows,
        exponent: sxy / sxx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn grid_frequencies() {
        let g = FrequencyGrid::new(8, 4, 2.0 * PI, PI).unwrap();
        let deltas: Vec<f64> = (0..8).map(|j| g.delta(j)).collect();
        assert_eq!(deltas, vec![0.0, 1.0, 2.0, 3.0, -4.0, -3.0, -2.0, -1.0]);
        let etas: Vec<f64> = (0..4).map(|l| g.eta(l)).collect();
        assert_eq!(etas, vec![0.0, 2.0, -4.0, -2.0]);
        assert_eq!(g.index(3, 2), 14);
        assert_eq!(g.split(14), (3, 2));
        assert_eq!(g.mirror(g.index(1, 1)), g.index(7, 3));
        assert_eq!(g.mirror(g.index(4, 2)), g.index(4, 2));
        assert!((g.bin_area() - 2.0).abs() < 1e-15);
        assert!(FrequencyGrid::new(0, 4, 1.0, 1.0).is_err());
        assert!(FrequencyGrid::new(4, 4, -1.0, 1.0).is_err());
    }

    #[test]
    fn single_bin_norm() {
        let g = FrequencyGrid::new(4, 4, 1.0, 2.0).unwrap();
        let mut v = vec![Complex64::new(0.0, 0.0); 16];
        let k = g.index(1, 3);
        v[k] = Complex64::new(3.0, 4.0);
        let (d, e, gamma, s) = (g.delta(1), g.eta(3), 1.5, 0.7);
        let want = (gamma * gamma + d * d + e * e).powf(s) * 25.0 * g.bin_area() / (4.0 * PI * PI);
        let got = sobolev_norm_sq(&v, &g, s, gamma).unwrap();
        assert!((got - want).abs() <= 1e-14 * want);
        assert_eq!(
            sobolev_norm(&vec![Complex64::new(0.0, 0.0); 16], &g, 1.0, 1.0).unwrap(),
            0.0
        );
        assert!(sobolev_norm(&v[..3], &g, 0.0, 1.0).is_err());
    }

    #[test]
    fn norm_is_monotone_in_s_when_lambda_at_least_one() {
        let g = FrequencyGrid::new(8, 8, 3.0, 5.0).unwrap();
        let v: Vec<Complex64> = (0..64)
            .map(|k| Complex64::new((k as f64).sin(), 0.3))
            .collect();
        let mut prev = 0.0;
        for s in [-1.0, 0.0, 0.5, 1.0, 2.0] {
            let n = sobolev_norm(&v, &g, s, 1.0).unwrap();
            assert!(n >= prev);
            prev = n;
        }
    }

    #[test]
    fn solve_bin_matches_hand_evaluation() {
        let p = MediumParams::new(2.0, 1.0).unwrap();
        let f = Frequency::new(1.0, 0.4, -0.9).unwrap();
        let h = 0.01;
        let plus: Vec<Complex64> = (0..1601)
            .map(|k| Complex64::new((-(k as f64) * h).exp(), 0.0))
            .collect();
        let minus = vec![Complex64::new(0.0, 0.0); 1601];
        let b = solve_bin(f, &p, &plus, &minus, h).unwrap();
        let r = mu_pair(f, &p);
        let m = Complex64::new(1.0, 0.0) / (r.mu_plus * (r.mu_plus + 1.0));
        assert!((b.m - m).norm() < 1e-8 * m.norm());
        let want = -(r.product() / r.sum()) * m / sigma(f, &p);
        assert!((b.f_hat - want).norm() < 1e-8 * want.norm());
        assert_eq!(b.g, b.g1 - b.g2);
        assert!((b.sigma * b.f_hat - b.g).norm() <= 1e-14 * b.g.norm());
    }

    #[test]
    fn solve_bin_rejects_other_regimes_and_small_weight() {
        let plus = vec![Complex64::new(0.0, 0.0); 8];
        let e = MediumParams::new(1.0, 1.0).unwrap();
        let f = Frequency::new(1.0, 0.0, 1.0).unwrap();
        assert!(matches!(
            solve_bin(f, &e, &plus, &plus, 0.1),
            Err(Error::Regime { .. })
        ));
        let t = MediumParams::new(core::f64::consts::SQRT_2, 1.0).unwrap();
        assert!(matches!(
            solve_bin(f, &t, &plus, &plus, 0.1),
            Err(Error::Regime { .. })
        ));
        let p = MediumParams::new(2.0, 1.0).unwrap();
        let low = Frequency::new(0.5, 0.0, 1.0).unwrap();
        assert!(matches!(
            solve_bin(low, &p, &plus, &plus, 0.1),
            Err(Error::WeightTooSmall { .. })
        ));
        assert!(solve_bin(f, &p, &plus, &plus[..5], 0.1).is_err());
    }

    #[test]
    fn equal_roots_cancel_equal_forcing() {
        let p = MediumParams::new(2.0, 1.0).unwrap();
        let f = Frequency::new(1.0, 2.0, 0.0).unwrap();
        let slice: Vec<Complex64> = (0..64)
            .map(|k| Complex64::new(1.0 / (1.0 + k as f64), 0.5))
            .collect();
        let b = solve_bin(f, &p, &slice, &slice, 0.05).unwrap();
        assert_eq!(b.m, Complex64::new(0.0, 0.0));
        assert_eq!(b.f_hat, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn estimate_constants_are_consistent() {
        let p = MediumParams::new(2.0, 1.0).unwrap();
        let k = EstimateConstants::estimate(&p, DEFAULT_ROOT_RADIUS, 61).unwrap();
        assert!(k.sigma_lower > 0.0 && k.h_lower > 0.0);
        assert!(k.sigma_upper >= k.sigma_lower);
        // |Σ| ≥ C₀ γ Λ at random interior points
        let c0 = k.combined();
        for i in 0..200 {
            let t = i as f64 * 0.37;
            let f = Frequency::new(0.05 + (t.sin()).abs(), 3.0 * t.cos(), (1.3 * t).sin() * 2.0)
                .unwrap();
            let s = sigma(f, &p).norm();
            assert!(s >= 0.999 * c0 * f.gamma() * f.lambda(), "{f:?}");
            assert!(s <= 1.001 * k.sigma_upper * f.lambda_sq());
        }
        assert!(
            EstimateConstants::estimate(&MediumParams::new(1.0, 1.0).unwrap(), 0.2, 20).is_err()
        );
        assert!(EstimateConstants::estimate(&p, 1.5, 20).is_err());
    }

    #[test]
    fn probe_exponent_near_minus_one() {
        let p = MediumParams::new(1.0, 1.0).unwrap();
        let y1 = classify(&p).y1.unwrap();
        let gammas: Vec<f64> = [1e-1, 1e-2, 1e-3].iter().map(|d| y1 + d).collect();
        let probe = blowup_probe(&p, 1.0, &gammas).unwrap();
        assert!((probe.exponent + 1.0).abs() < 0.05);
        for w in probe.rows.windows(2) {
            let growth = w[1].inv_abs_sigma / w[0].inv_abs_sigma;
            assert!((growth - 10.0).abs() < 2.0, "{growth}");
        }
        let far = blowup_probe(&p, 1.0, &[10.0, 10.5]).unwrap();
        assert!(far.rows[0].inv_abs_sigma < 0.02);
        assert!(blowup_probe(&MediumParams::new(2.0, 1.0).unwrap(), 1.0, &gammas).is_err());
        assert!(blowup_probe(&p, 1.0, &[1.0]).is_err());
    }
}
