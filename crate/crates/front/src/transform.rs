//! Weighted Fourier transforms on the periodic `(t, x₁)` box.
//!
//! `v̂(δ_j, η_l) = Δt Δx₁ Σ_{m,n} e^{-γ t_m} v(t_m, x_n) e^{-i(δ_j t_m + η_l x_n)}`,
//! the Riemann-sum version of the transform of `e^{-γt} v`.

use num_complex::Complex64;
use rustfft::FftPlanner;
use vortex_front_core::spectral::FrequencyGrid;

use crate::error::{FrontError, Result};

fn check_len(len: usize, grid: &FrequencyGrid) -> Result<()> {
    if len != grid.len() {
        return Err(FrontError::Core(vortex_front_core::Error::LengthMismatch {
            expected: grid.len(),
            found: len,
        }));
    }
    Ok(())
}

/// Reusable 2-D transforms for one grid shape.
pub struct Transformer {
    grid: FrequencyGrid,
    rows: std::sync::Arc<dyn rustfft::Fft<f64>>,
    cols: std::sync::Arc<dyn rustfft::Fft<f64>>,
    rows_inv: std::sync::Arc<dyn rustfft::Fft<f64>>,
    cols_inv: std::sync::Arc<dyn rustfft::Fft<f64>>,
}

impl Transformer {
    pub fn new(grid: FrequencyGrid) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            grid,
            rows: planner.plan_fft_forward(grid.n_x1()),
            cols: planner.plan_fft_forward(grid.n_t()),
            rows_inv: planner.plan_fft_inverse(grid.n_x1()),
            cols_inv: planner.plan_fft_inverse(grid.n_t()),
        }
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    fn fft2(&self, data: &mut [Complex64], inverse: bool) {
        let (nt, nx) = (self.grid.n_t(), self.grid.n_x1());
        let (rows, cols) = if inverse {
            (&self.rows_inv, &self.cols_inv)
        } else {
            (&self.rows, &self.cols)
        };
        rows.process(data);
        let mut column = vec![Complex64::new(0.0, 0.0); nt];
        for l in 0..nx {
            for j in 0..nt {
                column[j] = data[j * nx + l];
            }
            cols.process(&mut column);
            for j in 0..nt {
                data[j * nx + l] = column[j];
            }
        }
    }

    /// Transform of `e^{-γt} v` for complex samples in `(t, x₁)` row-major
    /// order.
    pub fn forward_complex(&self, samples: &[Complex64], gamma: f64) -> Result<Vec<Complex64>> {
        check_len(samples.len(), &self.grid)?;
        let (nt, nx) = (self.grid.n_t(), self.grid.n_x1());
        let dt = self.grid.dt();
        let scale = dt * self.grid.dx1();
        let mut data = Vec::with_capacity(samples.len());
        for m in 0..nt {
            let w = (-gamma * m as f64 * dt).exp() * scale;
            data.extend(samples[m * nx..(m + 1) * nx].iter().map(|&v| v * w));
        }
        self.fft2(&mut data, false);
        Ok(data)
    }

    pub fn forward(&self, samples: &[f64], gamma: f64) -> Result<Vec<Complex64>> {
        let z: Vec<Complex64> = samples.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.forward_complex(&z, gamma)
    }

    /// Inverse of [`Transformer::forward_complex`].
    pub fn inverse(&self, spectrum: &[Complex64], gamma: f64) -> Result<Vec<Complex64>> {
        check_len(spectrum.len(), &self.grid)?;
        let (nt, nx) = (self.grid.n_t(), self.grid.n_x1());
        let mut data = spectrum.to_vec();
        self.fft2(&mut data, true);
        let dt = self.grid.dt();
        let norm = 1.0 / (self.grid.l_t() * self.grid.l_x1());
        for m in 0..nt {
            let w = (gamma * m as f64 * dt).exp() * norm;
            for v in &mut data[m * nx..(m + 1) * nx] {
                *v *= w;
            }
        }
        Ok(data)
    }
}

/// Transform of `e^{-γt} v` for real samples on `grid`.
pub fn weighted_forward(
    samples: &[f64],
    grid: &FrequencyGrid,
    gamma: f64,
) -> Result<Vec<Complex64>> {
    Transformer::new(*grid).forward(samples, gamma)
}

/// Inverse of [`weighted_forward`]; complex, since an arbitrary spectrum need
/// not come from real data.
pub fn weighted_inverse(
    spectrum: &[Complex64],
    grid: &FrequencyGrid,
    gamma: f64,
) -> Result<Vec<Complex64>> {
    Transformer::new(*grid).inverse(spectrum, gamma)
}

/// Replaces `v̂(k)` by `(v̂(k) + conj v̂(−k))/2`, the spectrum of the real part
/// of the inverse transform.
pub fn enforce_conjugate_symmetry(spectrum: &mut [Complex64], grid: &FrequencyGrid) {
    let orig = spectrum.to_vec();
    for (k, v) in spectrum.iter_mut().enumerate() {
        *v = (orig[k] + orig[grid.mirror(k)].conj()) * 0.5;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn grid() -> FrequencyGrid {
        FrequencyGrid::new(16, 8, 3.0, 2.0).unwrap()
    }

    #[test]
    fn zero_field_has_zero_spectrum() {
        let g = grid();
        let s = weighted_forward(&vec![0.0; g.len()], &g, 1.0).unwrap();
        assert!(s.iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn cosine_in_time_hits_two_bins() {
        let g = grid();
        let mut u = vec![0.0; g.len()];
        for m in 0..16 {
            for n in 0..8 {
                u[g.index(m, n)] = (2.0 * PI * m as f64 * g.dt() / g.l_t()).cos();
            }
        }
        let s = weighted_forward(&u, &g, 0.0).unwrap();
        let half = 0.5 * g.l_t() * g.l_x1();
        for (k, v) in s.iter().enumerate() {
            let (j, l) = g.split(k);
            if l == 0 && (j == 1 || j == 15) {
                assert!((v.re - half).abs() < 1e-12 && v.im.abs() < 1e-12);
                assert!((g.delta(j).abs() - 2.0 * PI / g.l_t()).abs() < 1e-15);
            } else {
                assert!(v.norm() < 1e-12);
            }
        }
    }

    #[test]
    fn round_trip_and_plancherel() {
        let g = grid();
        let u: Vec<f64> = (0..g.len())
            .map(|k| ((k * 7 % 13) as f64 - 6.0) / 3.0)
            .collect();
        for gamma in [0.0, 1.0, 2.5] {
            let s = weighted_forward(&u, &g, gamma).unwrap();
            let back = weighted_inverse(&s, &g, gamma).unwrap();
            for (a, b) in u.iter().zip(&back) {
                assert!((a - b.re).abs() < 1e-12 * (1.0 + a.abs()) && b.im.abs() < 1e-12);
            }
        }
        let s = weighted_forward(&u, &g, 0.0).unwrap();
        let l2 = u.iter().map(|v| v * v).sum::<f64>() * g.dt() * g.dx1();
        let n0 = vortex_front_core::spectral::sobolev_norm_sq(&s, &g, 0.0, 0.0).unwrap();
        assert!((l2 - n0).abs() < 1e-12 * l2);
    }

    #[test]
    fn symmetrised_spectrum_inverts_to_real_data() {
        let g = grid();
        let mut s: Vec<Complex64> = (0..g.len())
            .map(|k| Complex64::new((k as f64).sin(), (k as f64).cos()))
            .collect();
        enforce_conjugate_symmetry(&mut s, &g);
        let back = weighted_inverse(&s, &g, 1.0).unwrap();
        let max = back.iter().map(|v| v.re.abs()).fold(0.0, f64::max);
        assert!(back.iter().all(|v| v.im.abs() < 1e-12 * max));
        assert!(weighted_forward(&[0.0; 3], &g, 0.0).is_err());
    }
}
