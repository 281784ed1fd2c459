//! The `vortex-front` command line.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use vortex_front_core::spectral::blowup_probe;
use vortex_front_core::{classify, mu_pair, sigma, symbol_roots, Frequency, MediumParams};

use crate::error::{FrontError, Result};
use crate::field::FieldGrid;
use crate::output::{emit, Csv};
use crate::solver::{reconstruct_bin, solve_spectral, verify_estimate, SpectralField};

#[derive(Debug, Parser)]
#[command(
    name = "vortex-front",
    version,
    about = "Symbol analysis and spectral front solver for a compressible vortex sheet"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mach and stability class with the root parameters Y0, Y1, Y2.
    Classify {
        #[command(flatten)]
        medium: MediumArgs,
        /// Also write the report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Symbol and roots sampled on a (gamma, delta, eta) window.
    Grid {
        #[command(flatten)]
        medium: MediumArgs,
        /// Three ranges `lo:hi:n` (or a single value) for gamma, delta and eta.
        #[arg(long, num_args = 3, value_names = ["GAMMA", "DELTA", "ETA"], required = true, allow_hyphen_values = true)]
        window: Vec<Range>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Zeros of the symbol in tau at fixed eta.
    Roots {
        #[command(flatten)]
        medium: MediumArgs,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solves for the front and writes its samples and norms.
    Solve {
        #[command(flatten)]
        medium: MediumArgs,
        /// Field file in VFGRID format.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        gamma: f64,
        /// Sobolev index; norms are reported for s and s + 1.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        s: f64,
        /// Front samples `t,x1,f` (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Norms as JSON.
        #[arg(long)]
        norms: Option<PathBuf>,
    },
    /// Sweeps gamma and tabulates the energy-estimate ratios.
    Verify {
        #[command(flatten)]
        medium: MediumArgs,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = [1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0])]
        gamma: Vec<f64>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        s: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Growth of 1/|Sigma| approaching the real root in the elliptic regime.
    Probe {
        #[command(flatten)]
        medium: MediumArgs,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        eta: f64,
        /// Offsets of gamma above the root.
        #[arg(long, value_delimiter = ',', default_values_t = [1e-1, 1e-2, 1e-3])]
        offset: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pressure profiles at the grid bin nearest to (delta, eta).
    Reconstruct {
        #[command(flatten)]
        medium: MediumArgs,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        gamma: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct MediumArgs {
    /// Velocity magnitude on each side of the sheet.
    #[arg(long, allow_hyphen_values = true)]
    pub v: f64,
    /// Sound speed.
    #[arg(long, allow_hyphen_values = true)]
    pub c: f64,
}

impl MediumArgs {
    fn params(&self) -> Result<MediumParams> {
        Ok(MediumParams::new(self.v, self.c)?)
    }
}

/// `lo:hi:n`, or a single value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl Range {
    pub fn values(&self) -> Vec<f64> {
        match self.n {
            0 => vec![],
            1 => vec![self.lo],
            n => (0..n)
                .map(|i| self.lo + (self.hi - self.lo) * i as f64 / (n - 1) as f64)
                .collect(),
        }
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("bad number {t:?}"))
        };
        let parts: Vec<&str> = s.split(':').collect();
        let r = match parts.as_slice() {
            [x] => {
                let x = num(x)?;
                Range { lo: x, hi: x, n: 1 }
            }
            [lo, hi, n] => Range {
                lo: num(lo)?,
                hi: num(hi)?,
                n: n.trim().parse().map_err(|_| format!("bad count {n:?}"))?,
            },
            _ => return Err(format!("expected `lo:hi:n` or a value, got {s:?}")),
        };
        if !(r.lo.is_finite() && r.hi.is_finite()) {
            return Err(format!("non-finite bound in {s:?}"));
        }
        Ok(r)
    }
}

fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn opt_json(x: Option<f64>) -> Value {
    x.map_or(Value::Null, |v| json!(v))
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn read_field(path: &Path) -> Result<FieldGrid> {
    FieldGrid::read_file(path)
}

/// Runs one subcommand.
pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Classify { medium, out } => cmd_classify(&medium.params()?, out.as_deref()),
        Command::Grid {
            medium,
            window,
            out,
        } => cmd_grid(&medium.params()?, &window, out.as_deref()),
        Command::Roots { medium, eta, out } => {
            let p = medium.params()?;
            let mut csv = Csv::new(&["re_tau", "im_tau"]);
            for r in symbol_roots(&p, eta)? {
                csv.row(&[r.re, r.im]);
            }
            emit(out.as_deref(), csv.as_str())
        }
        Command::Solve {
            medium,
            input,
            gamma,
            s,
            out,
            norms,
        } => cmd_solve(
            &medium.params()?,
            &input,
            gamma,
            s,
            out.as_deref(),
            norms.as_deref(),
        ),
        Command::Verify {
            medium,
            input,
            gamma,
            s,
            out,
        } => cmd_verify(&medium.params()?, &input, &gamma, s, out.as_deref()),
        Command::Probe {
            medium,
            eta,
            offset,
            out,
        } => {
            let p = medium.params()?;
            let y1 = classify(&p).y1;
            let root = p.c() * y1.unwrap_or(0.0) * eta.abs();
            let gammas: Vec<f64> = offset.iter().map(|o| root + o).collect();
            let probe = blowup_probe(&p, eta, &gammas)?;
            let mut csv = Csv::new(&["gamma", "distance", "inv_abs_sigma"]);
            for r in &probe.rows {
                csv.row(&[r.gamma, r.distance, r.inv_abs_sigma]);
            }
            emit(out.as_deref(), csv.as_str())?;
            eprintln!(
                "root {} exponent {}",
                sig12(probe.root),
                sig12(probe.exponent)
            );
            Ok(())
        }
        Command::Reconstruct {
            medium,
            input,
            gamma,
            delta,
            eta,
            out,
        } => cmd_reconstruct(&medium.params()?, &input, gamma, delta, eta, out.as_deref()),
    }
}

fn cmd_classify(p: &MediumParams, out: Option<&Path>) -> Result<()> {
    let r = classify(p);
    let fmt = |x: Option<f64>| x.map_or_else(|| "none".to_string(), sig12);
    print!(
        "mach_class {}\nstability_class {}\nY0 {}\nY1 {}\nY2 {}\n",
        r.mach_class,
        r.stability_class,
        sig12(r.y0),
        fmt(r.y1),
        fmt(r.y2)
    );
    if let Some(path) = out {
        let v = json!({
            "v": p.v(),
            "c": p.c(),
            "mach_class": r.mach_class.as_str(),
            "stability_class": r.stability_class.as_str(),
            "y0": r.y0,
            "y1": opt_json(r.y1),
            "y2": opt_json(r.y2),
        });
        emit(Some(path), &to_json(&v))?;
    }
    Ok(())
}

fn cmd_grid(p: &MediumParams, window: &[Range], out: Option<&Path>) -> Result<()> {
    let axes: Vec<Vec<f64>> = window.iter().map(Range::values).collect();
    if axes.len() != 3 || axes.iter().any(Vec::is_empty) {
        return Err(FrontError::Invalid("empty window".into()));
    }
    let mut csv = Csv::new(&[
        "gamma",
        "delta",
        "eta",
        "re_sigma",
        "im_sigma",
        "abs_sigma",
        "re_mu_plus",
        "im_mu_plus",
        "re_mu_minus",
        "im_mu_minus",
    ]);
    for &g in &axes[0] {
        for &d in &axes[1] {
            for &e in &axes[2] {
                let f = Frequency::new(g, d, e)?;
                let s = sigma(f, p);
                let r = mu_pair(f, p);
                csv.row(&[
                    g,
                    d,
                    e,
                    s.re,
                    s.im,
                    s.norm(),
                    r.mu_plus.re,
                    r.mu_plus.im,
                    r.mu_minus.re,
                    r.mu_minus.im,
                ]);
            }
        }
    }
    emit(out, csv.as_str())
}

fn norm_key(s: f64) -> String {
    format!("{s}")
}

fn cmd_solve(
    p: &MediumParams,
    input: &Path,
    gamma: f64,
    s: f64,
    out: Option<&Path>,
    norms: Option<&Path>,
) -> Result<()> {
    vortex_front_core::spectral::check_solvable(p, gamma)?;
    let field = read_field(input)?;
    let spectral = SpectralField::new(&field, gamma)?;
    let sol = solve_spectral(&spectral, p)?;
    let spec = field.spec();
    let mut csv = Csv::new(&["t", "x1", "f"]);
    for m in 0..spec.n_t {
        for n in 0..spec.n_x1 {
            csv.row(&[spec.t(m), spec.x1(n), sol.f_phys[m * spec.n_x1 + n]]);
        }
    }
    let mut map = Map::new();
    for (order, value) in sol.norms(&[s, s + 1.0])? {
        map.insert(norm_key(order), json!(value));
    }
    let (fp, fm) = spectral.forcing_norms_sq(s)?;
    let f1 = sol.norm(s + 1.0)?;
    let r = gamma.powi(3) * f1 * f1 / (fp + fm);
    emit(out, csv.as_str())?;
    if let Some(path) = norms {
        emit(Some(path), &to_json(&Value::Object(map)))?;
    }
    eprintln!("gamma {} estimate ratio r {}", sig12(gamma), sig12(r));
    Ok(())
}

fn cmd_verify(
    p: &MediumParams,
    input: &Path,
    gammas: &[f64],
    s: f64,
    out: Option<&Path>,
) -> Result<()> {
    for &g in gammas {
        vortex_front_core::spectral::check_solvable(p, g)?;
    }
    let field = read_field(input)?;
    let rep = verify_estimate(&field, p, gammas, s)?;
    let mut csv = Csv::new(&[
        "gamma",
        "f_norm_sq",
        "forcing_plus_sq",
        "forcing_minus_sq",
        "g_norm_sq",
        "r",
        "r_prime",
        "g1_ratio",
        "g1_bin_max",
        "pointwise_min",
        "pointwise_violations",
    ]);
    for row in &rep.rows {
        csv.row(&[
            row.gamma,
            row.f_norm_sq,
            row.forcing_plus_sq,
            row.forcing_minus_sq,
            row.g_norm_sq,
            row.r,
            row.r_prime,
            row.g1_ratio,
            row.g1_bin_max,
            row.pointwise_min,
            row.pointwise_violations as f64,
        ]);
    }
    emit(out, csv.as_str())?;
    let k = rep.constants;
    eprintln!(
        "constants sigma_upper {} sigma_lower {} h_lower {} pointwise {}",
        sig12(k.sigma_upper),
        sig12(k.sigma_lower),
        sig12(k.h_lower),
        sig12(k.pointwise())
    );
    Ok(())
}

fn cmd_reconstruct(
    p: &MediumParams,
    input: &Path,
    gamma: f64,
    delta: f64,
    eta: f64,
    out: Option<&Path>,
) -> Result<()> {
    vortex_front_core::spectral::check_solvable(p, gamma)?;
    let field = read_field(input)?;
    let spectral = SpectralField::new(&field, gamma)?;
    let grid = *spectral.grid();
    let nearest = |n: usize, step: f64, x: f64| -> usize {
        let j = (x / step).round() as i64;
        j.rem_euclid(n as i64) as usize
    };
    let j = nearest(grid.n_t(), 2.0 * std::f64::consts::PI / grid.l_t(), delta);
    let l = nearest(grid.n_x1(), 2.0 * std::f64::consts::PI / grid.l_x1(), eta);
    let sol = solve_spectral(&spectral, p)?;
    let (_, profile) = reconstruct_bin(&spectral, &sol, p, grid.index(j, l))?;
    let mut csv = Csv::new(&["x2", "re_p_plus", "im_p_plus", "re_p_minus", "im_p_minus"]);
    for (k, y) in profile.x2.iter().enumerate() {
        let (a, b) = (profile.p_plus[k], profile.p_minus[k]);
        csv.row(&[*y, a.re, a.im, b.re, b.im]);
    }
    emit(out, csv.as_str())?;
    eprintln!(
        "bin delta {} eta {}{}",
        sig12(grid.delta(j)),
        sig12(grid.eta(l)),
        if profile.has_growth() {
            " (warning: growing exponential kept)"
        } else {
            ""
        }
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!("2".parse::<Range>().unwrap().values(), vec![2.0]);
        assert_eq!(
            "0:1:3".parse::<Range>().unwrap().values(),
            vec![0.0, 0.5, 1.0]
        );
        assert!("0:1:0".parse::<Range>().unwrap().values().is_empty());
        assert!("0:1".parse::<Range>().is_err());
        assert!("a:1:2".parse::<Range>().is_err());
        assert!("inf".parse::<Range>().is_err());
    }

    #[test]
    fn command_line_parses() {
        Cli::parse_from([
            "vortex-front",
            "grid",
            "--v",
            "2",
            "--c",
            "1",
            "--window",
            "1",
            "-1:1:3",
            "0:2:2",
        ]);
        let cli = Cli::parse_from([
            "vortex-front",
            "verify",
            "--v",
            "2",
            "--c",
            "1",
            "--in",
            "x",
            "--gamma",
            "1,2",
        ]);
        match cli.command {
            Command::Verify { gamma, .. } => assert_eq!(gamma, vec![1.0, 2.0]),
            _ => unreachable!(),
        }
    }
}
