//! Physical parameters of the Hulthén plus ring-shaped potential.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Default constant of the exponential centrifugal approximation.
pub const D0: f64 = 1.0 / 12.0;

/// Potential depth, range, ring strengths and particle mass, in fm / fm⁻¹.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    /// Depth V₀ (fm⁻¹).
    pub v0: f64,
    /// Range a = 1/δ (fm).
    pub a: f64,
    pub alpha: f64,
    pub beta: f64,
    /// Mass M (fm⁻¹).
    pub mass: f64,
    /// Constant term of the centrifugal approximation.
    pub d0: f64,
}

impl PotentialSpec {
    pub fn new(v0: f64, delta: f64, alpha: f64, beta: f64, mass: f64) -> Result<Self> {
        let spec = Self {
            v0,
            a: 1.0 / delta,
            alpha,
            beta,
            mass,
            d0: D0,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Parameter set of the published spectrum: V₀ = 3.4 fm⁻¹,
    /// δ = 0.25 fm⁻¹, M = 5 fm⁻¹.
    pub fn reference(alpha: f64, beta: f64) -> Self {
        Self {
            v0: 3.4,
            a: 4.0,
            alpha,
            beta,
            mass: 5.0,
            d0: D0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.v0 > 0.0) {
            return Err(domain("PotentialSpec", format!("V0 = {} must be positive", self.v0)));
        }
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(domain("PotentialSpec", format!("a = {} must be positive", self.a)));
        }
        if !(self.mass > 0.0) {
            return Err(domain(
                "PotentialSpec",
                format!("mass = {} must be positive", self.mass),
            ));
        }
        Ok(())
    }

    pub fn delta(&self) -> f64 {
        1.0 / self.a
    }

    pub fn with_v0(mut self, v0: f64) -> Self {
        self.v0 = v0;
        self
    }

    pub fn with_delta(mut self, delta: f64) -> Self {
        self.a = 1.0 / delta;
        self
    }

    pub fn with_ring(mut self, alpha: f64, beta: f64) -> Self {
        self.alpha = alpha;
        self.beta = beta;
        self
    }

    /// Parse the flat `key = value` format (keys `V0`, `delta`, `alpha`,
    /// `beta`, `mass`, optional `d0`; `#` starts a comment). Missing keys
    /// keep the values of `base`.
    pub fn parse_config(text: &str, base: PotentialSpec) -> Result<Self> {
        let mut spec = base;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let cfg_err = |detail: String| Error::Config { line: idx + 1, detail };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| cfg_err(format!("expected key = value, got {line:?}")))?;
            let key = key.trim();
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| cfg_err(format!("bad number for {key}: {:?}", value.trim())))?;
            match key {
                "V0" => spec.v0 = value,
                "delta" => {
                    if !(value > 0.0) {
                        return Err(cfg_err(format!("delta = {value} must be positive")));
                    }
                    spec.a = 1.0 / value
                }
                "alpha" => spec.alpha = value,
                "beta" => spec.beta = value,
                "mass" => spec.mass = value,
                "d0" => spec.d0 = value,
                other => return Err(cfg_err(format!("unknown key {other:?}"))),
            }
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_config(&self) -> String {
        let mut out = format!(
            "V0 = {}\ndelta = {}\nalpha = {}\nbeta = {}\nmass = {}\n",
            self.v0,
            self.delta(),
            self.alpha,
            self.beta,
            self.mass
        );
        if self.d0 != D0 {
            out.push_str(&format!("d0 = {}\n", self.d0));
        }
        out
    }
}

impl FromStr for PotentialSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_config(s, Self::reference(1.0, 1.0))
    }
}

impl fmt::Display for PotentialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V0={} delta={} alpha={} beta={} M={}",
            self.v0,
            self.delta(),
            self.alpha,
            self.beta,
            self.mass
        )
    }
}

/// Radial n, angular ñ and azimuthal m quantum numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumNumbers {
    pub n: u32,
    pub n_tilde: u32,
    pub m: u32,
}

impl QuantumNumbers {
    pub const fn new(n: u32, n_tilde: u32, m: u32) -> Self {
        Self { n, n_tilde, m }
    }
}

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.n_tilde, self.m)
    }
}

/// V(r, θ) = −V₀/(e^{r/a} − 1) + (α + β cos²θ)/(r² sin²θ).
pub fn potential_value(spec: &PotentialSpec, r: f64, theta: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(domain("potential_value", format!("r = {r} must be positive")));
    }
    let sin = theta.sin();
    if sin.abs() < 1e-300 || theta.rem_euclid(std::f64::consts::PI) == 0.0 {
        return Err(Error::Singular(format!("ring term diverges at theta = {theta}")));
    }
    let cos = theta.cos();
    let hulthen = -spec.v0 / (r / spec.a).exp_m1();
    let ring = (spec.alpha + spec.beta * cos * cos) / (r * r * sin * sin);
    Ok(hulthen + ring)
}

/// λ/r² ≈ (λ/a²)[d₀ + e^{−r/a}/(1 − e^{−r/a})²], accurate for r ≪ a.
pub fn centrifugal_approx(lambda: f64, a: f64, r: f64, d0: f64) -> f64 {
    let s = (-r / a).exp();
    let one_minus = -(-r / a).exp_m1();
    lambda / (a * a) * (d0 + s / (one_minus * one_minus))
}

/// Bohr radius and ground-state energy in the caller's unit system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HydrogenicUnits {
    pub bohr_radius: f64,
    pub ground_energy: f64,
}

impl HydrogenicUnits {
    /// Atomic units: a₀ = 1, ε₀ = −½.
    pub const ATOMIC: Self = Self {
        bohr_radius: 1.0,
        ground_energy: -0.5,
    };
}

/// Ring strengths from the hydrogenic (Hartmann-style) parameterization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingParams {
    pub alpha: f64,
    pub beta: f64,
    /// Always set: the defining expression available for β is the same as
    /// the one for α, which is presumed to be a misprint. β is returned equal
    /// to α rather than corrected silently.
    pub beta_presumed_misprint: bool,
}

/// α = β = −p σ² η² a₀² ε₀.
pub fn ring_params_from_hydrogenic(p: f64, sigma_h: f64, eta: f64, units: HydrogenicUnits) -> RingParams {
    let value = -p * sigma_h * sigma_h * eta * eta * units.bohr_radius * units.bohr_radius * units.ground_energy;
    RingParams {
        alpha: value,
        beta: value,
        beta_presumed_misprint: true,
    }
}

/// Spin → pseudospin parameter map: V₀ → −V₀, E → −E. The component swap
/// φ → χ, χ → −φ is left to the presentation layer.
pub fn pspin_map(spec: &PotentialSpec, energy: f64) -> (PotentialSpec, f64) {
    let mut mapped = *spec;
    mapped.v0 = -spec.v0;
    (mapped, -energy)
}
