use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use hulthen_core::sweep::SweepParam;
use hulthen_core::{PotentialSpec, QuantumNumbers, ScanConfig};

use crate::failure::{CmdResult, Failure};

#[derive(Debug, Parser)]
#[command(
    name = "hulthen",
    version,
    about = "Dirac bound states of the Hulthén plus ring-shaped potential"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energies of every bound state in the selected quantum-number ranges.
    Solve(CommonArgs),
    /// Recompute the reference spectrum and compare with the printed values.
    Table1(CommonArgs),
    /// Track positive-branch energies while V0 or delta varies.
    Sweep(SweepArgs),
    /// Radial and polar factors of one positive-branch state.
    Wavefunction(WavefunctionArgs),
    /// Cross-check analytic results against the finite-difference oracle.
    Verify(CommonArgs),
    /// V(r, θ) on a grid.
    Potential(PotentialArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Key = value file with V0, delta, alpha, beta, mass (and optionally d0).
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Potential depth V0 (fm⁻¹).
    #[arg(long = "V0", allow_negative_numbers = true)]
    pub v0: Option<f64>,
    /// Screening parameter δ = 1/a (fm⁻¹).
    #[arg(long, allow_negative_numbers = true)]
    pub delta: Option<f64>,
    /// Rest mass M (fm⁻¹).
    #[arg(long, allow_negative_numbers = true)]
    pub mass: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Radial quantum number: a value or an inclusive range such as 0-3.
    #[arg(long)]
    pub n: Option<QnRange>,
    #[arg(long)]
    pub ntilde: Option<QnRange>,
    #[arg(long)]
    pub m: Option<QnRange>,
    /// Output CSV path (stdout if omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Energy scan points; for `verify`, the radial finite-difference grid size.
    #[arg(long = "grid-points")]
    pub grid_points: Option<usize>,
    /// Absolute bisection tolerance on E (fm⁻¹).
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Swept parameter: V0 or delta.
    #[arg(long)]
    pub param: SweepParam,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    #[arg(long, default_value_t = 50)]
    pub steps: usize,
}

#[derive(Debug, Clone, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Select the root nearest this energy instead of the lowest positive-branch root.
    #[arg(long, allow_negative_numbers = true)]
    pub energy: Option<f64>,
    #[arg(long = "r-max", default_value_t = 60.0)]
    pub r_max: f64,
    #[arg(long = "r-points", default_value_t = 601)]
    pub r_points: usize,
    #[arg(long = "theta-points", default_value_t = 181)]
    pub theta_points: usize,
}

#[derive(Debug, Clone, Args)]
pub struct PotentialArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long = "r-max", default_value_t = 10.0)]
    pub r_max: f64,
    #[arg(long = "r-points", default_value_t = 100)]
    pub r_points: usize,
    #[arg(long = "theta-points", default_value_t = 36)]
    pub theta_points: usize,
}

/// Inclusive range of a quantum number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QnRange {
    pub lo: u32,
    pub hi: u32,
}

impl QnRange {
    pub fn single(v: u32) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn values(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

impl FromStr for QnRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("bad quantum number {t:?}"));
        let (lo, hi) = match s.split_once('-') {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for QnRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}-{}", self.lo, self.hi)
        }
    }
}

/// Resolved inputs shared by every subcommand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub spec: PotentialSpec,
    pub qns: Vec<QuantumNumbers>,
    /// Whether any of --n, --ntilde, --m was given.
    pub qn_explicit: bool,
    pub scan: ScanConfig,
    pub grid_points: Option<usize>,
    pub out: Option<PathBuf>,
}

impl CommonArgs {
    pub fn resolve(&self) -> CmdResult<RunConfig> {
        let base = PotentialSpec::reference(1.0, 1.0);
        let mut spec = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("cannot read {}", path.display()))
                    .map_err(Failure::Config)?;
                PotentialSpec::parse_config(&text, base).map_err(|e| Failure::Config(e.into()))?
            }
            None => base,
        };
        if let Some(v) = self.v0 {
            spec = spec.with_v0(v);
        }
        if let Some(d) = self.delta {
            if !(d > 0.0) {
                return Err(Failure::config(format!("delta = {d} must be positive")));
            }
            spec = spec.with_delta(d);
        }
        if let Some(v) = self.mass {
            spec.mass = v;
        }
        if let Some(v) = self.alpha {
            spec.alpha = v;
        }
        if let Some(v) = self.beta {
            spec.beta = v;
        }
        spec.validate().map_err(|e| Failure::Config(e.into()))?;
        if !(self.tol > 0.0) {
            return Err(Failure::config(format!("tol = {} must be positive", self.tol)));
        }
        let mut scan = ScanConfig {
            tol: self.tol,
            ..ScanConfig::default()
        };
        if let Some(points) = self.grid_points {
            if points < 2 {
                return Err(Failure::config("grid-points must be at least 2"));
            }
            scan.points = points;
        }
        let zero = QnRange::single(0);
        let mut qns = Vec::new();
        for n in self.n.unwrap_or(zero).values() {
            for nt in self.ntilde.unwrap_or(zero).values() {
                for m in self.m.unwrap_or(zero).values() {
                    qns.push(QuantumNumbers::new(n, nt, m));
                }
            }
        }
        Ok(RunConfig {
            spec,
            qns,
            qn_explicit: self.n.is_some() || self.ntilde.is_some() || self.m.is_some(),
            scan,
            grid_points: self.grid_points,
            out: self.out.clone(),
        })
    }
}
