//! Exponentially fitted quadrature for `∫ e^{-μy} F(y) dy` on a uniform grid.
//!
//! `F` is replaced on each interval `[x_i, x_{i+1}]` by the cubic through four
//! neighbouring nodes (shifted at both ends of the grid) and the product with
//! the exponential is integrated exactly. The rule is fourth order in `h` for
//! smooth `F`, uniformly in `μh`: a plain Newton–Cotes rule applied to
//! `e^{-μy}F` loses all accuracy once `|μ|h` is of order one, which happens at
//! the high frequencies of any spectral grid.
//!
//! Nodes are `x_k = k h`, `k = 0..n`, and slices hold `F(x_k)`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::{Error, Result};

/// Minimum number of nodes (three intervals) accepted by the rules.
pub const MIN_NODES: usize = 4;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// `m_k(z) = ∫₀¹ s^k e^{-zs} ds` for `k = 0..3`.
fn moments(z: Complex64) -> [Complex64; 4] {
    let mut out = [ZERO; 4];
    if z.norm() < 2.0 {
        // Σₙ (−z)ⁿ / (n! (n + k + 1))
        let mut term = ONE;
        for n in 0..48 {
            for (k, m) in out.iter_mut().enumerate() {
                *m += term / (n + k + 1) as f64;
            }
            term = term * (-z) / (n + 1) as f64;
            if term.norm() < 1e-20 {
                break;
            }
        }
    } else {
        let e = (-z).exp();
        out[0] = (ONE - e) / z;
        for k in 1..4 {
            out[k] = (out[k - 1] * k as f64 - e) / z;
        }
    }
    out
}

/// Monomial coefficients of the Lagrange basis on nodes `s = j − offset`,
/// `j = 0..3`: `L_j(s) = Σ_k coef[j][k] s^k`.
fn lagrange_coefficients(offset: usize) -> [[f64; 4]; 4] {
    let nodes: [f64; 4] = core::array::from_fn(|j| j as f64 - offset as f64);
    let mut coef = [[0.0; 4]; 4];
    for j in 0..4 {
        let mut poly = [1.0, 0.0, 0.0, 0.0];
        let mut degree = 0;
        let mut denom = 1.0;
        for (m, &sm) in nodes.iter().enumerate() {
            if m == j {
                continue;
            }
            // poly *= (s − sm)
            for k in (0..=degree + 1).rev() {
                let shifted = if k > 0 { poly[k - 1] } else { 0.0 };
                poly[k] = shifted - sm * poly[k];
            }
            degree += 1;
            denom *= nodes[j] - sm;
        }
        for k in 0..4 {
            coef[j][k] = poly[k] / denom;
        }
    }
    coef
}

/// Quadrature weights for one decay rate `μ` and step `h`.
#[derive(Debug, Clone, Copy)]
pub struct FittedRule {
    h: f64,
    decay: Complex64,
    /// `weights[o][j]`: interval whose left node is the `o`-th of the four
    /// interpolation nodes.
    weights: [[Complex64; 4]; 3],
}

impl FittedRule {
    pub fn new(mu: Complex64, h: f64) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::InvalidArgument("grid step must be positive"));
        }
        if !(mu.re.is_finite() && mu.im.is_finite()) || mu.re < 0.0 {
            return Err(Error::InvalidArgument("decay rate must have Re mu >= 0"));
        }
        let z = mu * h;
        let m = moments(z);
        let mut weights = [[ZERO; 4]; 3];
        for (o, w) in weights.iter_mut().enumerate() {
            let coef = lagrange_coefficients(o);
            for j in 0..4 {
                let mut acc = ZERO;
                for k in 0..4 {
                    acc += m[k] * coef[j][k];
                }
                w[j] = acc * h;
            }
        }
        Ok(Self {
            h,
            decay: (-z).exp(),
            weights,
        })
    }

    #[inline]
    pub fn step(&self) -> f64 {
        self.h
    }

    /// `e^{-μh}`.
    #[inline]
    pub fn decay(&self) -> Complex64 {
        self.decay
    }

    fn check(values: &[Complex64]) -> Result<()> {
        if values.len() < MIN_NODES {
            return Err(Error::TooFewNodes {
                min: MIN_NODES,
                found: values.len(),
            });
        }
        Ok(())
    }

    #[inline]
    fn offset(i: usize, intervals: usize) -> usize {
        if i == 0 {
            0
        } else if i + 1 == intervals {
            2
        } else {
            1
        }
    }

    /// `∫_{x_i}^{x_{i+1}} e^{-μ(y − x_i)} F(y) dy`.
    fn interval(&self, values: &[Complex64], i: usize) -> Complex64 {
        let o = Self::offset(i, values.len() - 1);
        let w = &self.weights[o];
        let base = i - o;
        w[0] * values[base]
            + w[1] * values[base + 1]
            + w[2] * values[base + 2]
            + w[3] * values[base + 3]
    }

    /// `∫_{x_i}^{x_{i+1}} e^{-μ(x_{i+1} − y)} F(y) dy`.
    fn interval_reversed(&self, values: &[Complex64], i: usize) -> Complex64 {
        let o = Self::offset(i, values.len() - 1);
        let w = &self.weights[2 - o];
        let base = i - o;
        w[3] * values[base]
            + w[2] * values[base + 1]
            + w[1] * values[base + 2]
            + w[0] * values[base + 3]
    }

    /// `∫₀^{x_n} e^{-μy} F(y) dy`.
    pub fn laplace(&self, values: &[Complex64]) -> Result<Complex64> {
        Self::check(values)?;
        let mut acc = ZERO;
        for i in (0..values.len() - 1).rev() {
            acc = self.interval(values, i) + self.decay * acc;
        }
        Ok(acc)
    }

    /// `C_k = ∫₀^{x_k} e^{-μ(x_k − y)} F(y) dy` at every node.
    pub fn cumulative_forward(&self, values: &[Complex64]) -> Result<Vec<Complex64>> {
        Self::check(values)?;
        let mut out = vec![ZERO; values.len()];
        for i in 0..values.len() - 1 {
            out[i + 1] = self.decay * out[i] + self.interval_reversed(values, i);
        }
        Ok(out)
    }

    /// `D_k = ∫_{x_k}^{x_n} e^{-μ(y − x_k)} F(y) dy` at every node; `D_0` is
    /// [`FittedRule::laplace`].
    pub fn cumulative_backward(&self, values: &[Complex64]) -> Result<Vec<Complex64>> {
        Self::check(values)?;
        let n = values.len();
        let mut out = vec![ZERO; n];
        for i in (0..n - 1).rev() {
            out[i] = self.interval(values, i) + self.decay * out[i + 1];
        }
        Ok(out)
    }
}

/// `∫₀^{x_n} e^{-μy} F(y) dy` for samples `F(k h)`.
pub fn laplace_integral(values: &[Complex64], h: f64, mu: Complex64) -> Result<Complex64> {
    FittedRule::new(mu, h)?.laplace(values)
}

/// Plain integral `∫₀^{x_n} u(y) dy` of real samples with the same
/// piecewise-cubic rule (`μ = 0`).
pub fn integrate(values: &[f64], h: f64) -> Result<f64> {
    let rule = FittedRule::new(ZERO, h)?;
    let z: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    Ok(rule.laplace(&z)?.re)
}

/// Estimate of the neglected tail `|∫_L^∞ e^{-μy} F(y) dy|` when `|F| ≤ slab_max`
/// beyond `L`.
pub fn tail_bound(mu: Complex64, length: f64, slab_max: f64) -> f64 {
    if slab_max == 0.0 {
        return 0.0;
    }
    if !(mu.re > 0.0) {
        return f64::INFINITY;
    }
    (-mu.re * length).exp() * slab_max / mu.re
}
