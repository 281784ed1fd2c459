//! Sampled forcing fields `F±` and the `VFGRID` text format.
//!
//! ```text
//! VFGRID 1 n_t n_x1 n_x2 L_t L_x1 L_x2
//! F_plus F_minus        (n_t · n_x1 · n_x2 lines, row-major in t, x1, x2)
//! ```
//!
//! `F_plus` samples `F⁺(t, x₁, x₂)` and `F_minus` samples `F⁻(t, x₁, −x₂)` at
//! `t = m L_t/n_t`, `x₁ = n L_x1/n_x1` and `x₂ = k L_x2/(n_x2 − 1)`, so both
//! ends of the `x₂` range are nodes.

use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use vortex_front_core::spectral::FrequencyGrid;

use crate::error::{FrontError, Result};
use crate::output::fmt_num;

/// Largest ratio of the last-slab maximum to the global maximum.
pub const DECAY_RATIO: f64 = 1e-6;

/// Minimum number of `x₂` nodes.
pub const MIN_X2_NODES: usize = 16;

/// Sample counts and box lengths of a field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub n_t: usize,
    pub n_x1: usize,
    pub n_x2: usize,
    pub l_t: f64,
    pub l_x1: f64,
    pub l_x2: f64,
}

impl GridSpec {
    pub fn new(
        n_t: usize,
        n_x1: usize,
        n_x2: usize,
        l_t: f64,
        l_x1: f64,
        l_x2: f64,
    ) -> Result<Self> {
        let spec = Self {
            n_t,
            n_x1,
            n_x2,
            l_t,
            l_x1,
            l_x2,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.n_t.is_power_of_two() || !self.n_x1.is_power_of_two() {
            return Err(FrontError::Grid(format!(
                "n_t = {} and n_x1 = {} must be powers of two",
                self.n_t, self.n_x1
            )));
        }
        if self.n_x2 < MIN_X2_NODES {
            return Err(FrontError::Grid(format!(
                "n_x2 = {} is below {MIN_X2_NODES}",
                self.n_x2
            )));
        }
        for (name, l) in [("L_t", self.l_t), ("L_x1", self.l_x1), ("L_x2", self.l_x2)] {
            if !(l.is_finite() && l > 0.0) {
                return Err(FrontError::Grid(format!("{name} = {l} must be positive")));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n_t * self.n_x1 * self.n_x2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Spacing of the `x₂` nodes.
    pub fn h(&self) -> f64 {
        self.l_x2 / (self.n_x2 - 1) as f64
    }

    pub fn t(&self, m: usize) -> f64 {
        m as f64 * self.l_t / self.n_t as f64
    }

    pub fn x1(&self, n: usize) -> f64 {
        n as f64 * self.l_x1 / self.n_x1 as f64
    }

    pub fn x2(&self, k: usize) -> f64 {
        k as f64 * self.h()
    }

    /// Flat index of `(t_m, x₁_n, x₂_k)`.
    pub fn index(&self, m: usize, n: usize, k: usize) -> usize {
        (m * self.n_x1 + n) * self.n_x2 + k
    }

    /// The `(δ, η)` grid of the periodic `(t, x₁)` box.
    pub fn frequency_grid(&self) -> Result<FrequencyGrid> {
        Ok(FrequencyGrid::new(
            self.n_t, self.n_x1, self.l_t, self.l_x1,
        )?)
    }
}

/// Depth at which the slowest admissible decay `e^{-γ x₂/(√2 c)}` reaches
/// `1e-10`.
pub fn recommended_depth(gamma: f64, c: f64) -> f64 {
    std::f64::consts::SQRT_2 * c * 1e10f64.ln() / gamma
}

/// Samples of `F⁺` and `F⁻` on a [`GridSpec`].
#[derive(Debug, Clone, PartialEq)]
pub struct FieldGrid {
    spec: GridSpec,
    f_plus: Vec<f64>,
    f_minus: Vec<f64>,
}

impl FieldGrid {
    /// Checks the spec, the lengths, finiteness and the decay in `x₂`.
    pub fn new(spec: GridSpec, f_plus: Vec<f64>, f_minus: Vec<f64>) -> Result<Self> {
        spec.validate()?;
        for len in [f_plus.len(), f_minus.len()] {
            if len != spec.len() {
                return Err(FrontError::Grid(format!(
                    "expected {} samples, found {len}",
                    spec.len()
                )));
            }
        }
        let field = Self {
            spec,
            f_plus,
            f_minus,
        };
        field.check_values()?;
        Ok(field)
    }

    pub fn zeros(spec: GridSpec) -> Result<Self> {
        Self::new(spec, vec![0.0; spec.len()], vec![0.0; spec.len()])
    }

    /// Samples `f(t, x₁, x₂) = (F⁺(t, x₁, x₂), F⁻(t, x₁, −x₂))`.
    pub fn from_fn(spec: GridSpec, f: impl Fn(f64, f64, f64) -> (f64, f64)) -> Result<Self> {
        spec.validate()?;
        let mut plus = Vec::with_capacity(spec.len());
        let mut minus = Vec::with_capacity(spec.len());
        for m in 0..spec.n_t {
            for n in 0..spec.n_x1 {
                for k in 0..spec.n_x2 {
                    let (p, q) = f(spec.t(m), spec.x1(n), spec.x2(k));
                    plus.push(p);
                    minus.push(q);
                }
            }
        }
        Self::new(spec, plus, minus)
    }

    fn check_values(&self) -> Result<()> {
        let mut global = 0.0f64;
        let mut last = 0.0f64;
        let n2 = self.spec.n_x2;
        for (i, (&p, &q)) in self.f_plus.iter().zip(&self.f_minus).enumerate() {
            if !(p.is_finite() && q.is_finite()) {
                return Err(FrontError::Grid(format!("non-finite sample at index {i}")));
            }
            let a = p.abs().max(q.abs());
            global = global.max(a);
            if i % n2 == n2 - 1 {
                last = last.max(a);
            }
        }
        if last > DECAY_RATIO * global {
            return Err(FrontError::Grid(format!(
                "field does not decay in x2: last slab max {last:e} exceeds {DECAY_RATIO:e} x global max {global:e}"
            )));
        }
        Ok(())
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn f_plus(&self) -> &[f64] {
        &self.f_plus
    }

    pub fn f_minus(&self) -> &[f64] {
        &self.f_minus
    }

    /// The `(t, x₁)` slices of `F⁺` and `F⁻` at level `x₂_k`.
    pub fn level(&self, k: usize) -> (Vec<f64>, Vec<f64>) {
        let n2 = self.spec.n_x2;
        let plus = self.f_plus.iter().skip(k).step_by(n2).copied().collect();
        let minus = self.f_minus.iter().skip(k).step_by(n2).copied().collect();
        (plus, minus)
    }

    /// `a·self + b·other` on the same grid.
    pub fn combine(&self, a: f64, other: &FieldGrid, b: f64) -> Result<FieldGrid> {
        if self.spec != other.spec {
            return Err(FrontError::Grid("fields live on different grids".into()));
        }
        let mix = |x: &[f64], y: &[f64]| x.iter().zip(y).map(|(u, v)| a * u + b * v).collect();
        FieldGrid::new(
            self.spec,
            mix(&self.f_plus, &other.f_plus),
            mix(&self.f_minus, &other.f_minus),
        )
    }

    pub fn write_to(&self, mut w: impl Write) -> std::io::Result<()> {
        let s = &self.spec;
        writeln!(
            w,
            "VFGRID 1 {} {} {} {} {} {}",
            s.n_t,
            s.n_x1,
            s.n_x2,
            fmt_num(s.l_t),
            fmt_num(s.l_x1),
            fmt_num(s.l_x2)
        )?;
        for (p, q) in self.f_plus.iter().zip(&self.f_minus) {
            writeln!(w, "{} {}", fmt_num(*p), fmt_num(*q))?;
        }
        Ok(())
    }

    pub fn read_from(r: impl Read) -> Result<Self> {
        let mut lines = BufReader::new(r).lines();
        let io = |e: std::io::Error| FrontError::Parse {
            line: 0,
            message: e.to_string(),
        };
        let header = lines
            .next()
            .ok_or_else(|| FrontError::Parse {
                line: 1,
                message: "empty file".into(),
            })?
            .map_err(io)?;
        let spec = parse_header(&header)?;
        let mut plus = Vec::with_capacity(spec.len());
        let mut minus = Vec::with_capacity(spec.len());
        for (i, line) in lines.enumerate() {
            let line = line.map_err(io)?;
            let lineno = i + 2;
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let mut next = || -> Result<f64> {
                let tok = parts.next().ok_or_else(|| FrontError::Parse {
                    line: lineno,
                    message: "expected two values".into(),
                })?;
                tok.parse().map_err(|_| FrontError::Parse {
                    line: lineno,
                    message: format!("bad number {tok:?}"),
                })
            };
            plus.push(next()?);
            minus.push(next()?);
            if parts.next().is_some() {
                return Err(FrontError::Parse {
                    line: lineno,
                    message: "expected two values".into(),
                });
            }
        }
        if plus.len() != spec.len() {
            return Err(FrontError::Parse {
                line: plus.len() + 2,
                message: format!("expected {} sample lines, found {}", spec.len(), plus.len()),
            });
        }
        FieldGrid::new(spec, plus, minus)
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|e| FrontError::io(path, e))?;
        Self::read_from(file)
    }

    pub fn write_file(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path).map_err(|e| FrontError::io(path, e))?;
        let mut w = std::io::BufWriter::new(file);
        self.write_to(&mut w)
            .and_then(|_| w.flush())
            .map_err(|e| FrontError::io(path, e))
    }
}

fn parse_header(line: &str) -> Result<GridSpec> {
    let bad = |message: String| FrontError::Parse { line: 1, message };
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 8 || toks[0] != "VFGRID" {
        return Err(bad("expected `VFGRID 1 n_t n_x1 n_x2 L_t L_x1 L_x2`".into()));
    }
    if toks[1] != "1" {
        return Err(bad(format!("unsupported version {}", toks[1])));
    }
    let count = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| bad(format!("bad count {s:?}")))
    };
    let length = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| bad(format!("bad length {s:?}")))
    };
    let spec = GridSpec {
        n_t: count(toks[2])?,
        n_x1: count(toks[3])?,
        n_x2: count(toks[4])?,
        l_t: length(toks[5])?,
        l_x1: length(toks[6])?,
        l_x2: length(toks[7])?,
    };
    spec.validate()?;
    Ok(spec)
}
