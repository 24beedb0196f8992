//! Radial equation under the exponential centrifugal approximation.
//!
//! With s = e^{−r/a} the radial equation is NU-type with c₁ = c₂ = c₃ = 1,
//! A = σ + ε, B = 2ε + σ − λ, C = ε, where
//!
//! ```text
//! ε = λ d₀ − a²(E² − M²),    σ = 2a²(E + M)V₀.
//! ```
//!
//! The NU condition reduces to 2N√ε = σ − N² with N = n + l + 1. Squaring it
//! gives the transcendental energy equation solved here; its roots split into
//! a positive branch (σ > N², normalizable) and a negative branch that only
//! solves the squared equation.

use num_complex::Complex64;

use crate::angular::{
    lambda_of, phi_wavefunction, theta_wavefunction, AngularSolution, AzimuthalWavefunction, ThetaWavefunction,
};
use crate::error::{domain, Error, Result};
use crate::model::{PotentialSpec, QuantumNumbers};
use crate::nu::ParametricOde;
use crate::specfn::{beta_fn, jacobi_p, log_gamma, JacobiParams};

/// ε and σ at a trial energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialParams {
    pub eps_energy: f64,
    pub sigma: f64,
}

pub fn radial_params(spec: &PotentialSpec, energy: f64, lambda: f64) -> RadialParams {
    let a2 = spec.a * spec.a;
    RadialParams {
        eps_energy: lambda * spec.d0 - a2 * (energy * energy - spec.mass * spec.mass),
        sigma: 2.0 * a2 * (energy + spec.mass) * spec.v0,
    }
}

/// NU coefficients of the radial equation in s = e^{−r/a}.
pub fn radial_ode(params: &RadialParams, lambda: f64) -> ParametricOde {
    let RadialParams { eps_energy: eps, sigma } = *params;
    ParametricOde {
        c1: 1.0,
        c2: 1.0,
        c3: 1.0,
        a: sigma + eps,
        b: 2.0 * eps + sigma - lambda,
        c: eps,
    }
}

/// (σ − N²)/(2N), N = n + l + 1. Negative values mean the root can only
/// satisfy the squared energy equation.
pub fn quantized_sqrt_eps(sigma: f64, l_eff: f64, n: u32) -> f64 {
    let big_n = n as f64 + l_eff + 1.0;
    (sigma - big_n * big_n) / (2.0 * big_n)
}

/// F(E) = ε(E) − [(σ(E) − N(E)²)/(2N(E))]², with λ, l and σ all evaluated at E.
pub fn energy_residual(spec: &PotentialSpec, qn: QuantumNumbers, energy: f64) -> Result<f64> {
    let ang = lambda_of(spec, energy, qn)?;
    let rp = radial_params(spec, energy, ang.lambda);
    let q = quantized_sqrt_eps(rp.sigma, ang.l_eff, qn.n);
    Ok(rp.eps_energy - q * q)
}

/// Sign of the unsquared quantization expression at a root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub fn sign(self) -> i8 {
        match self {
            Branch::Positive => 1,
            Branch::Negative => -1,
        }
    }
}

/// A root of the energy equation with everything needed to build its
/// wavefunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub spec: PotentialSpec,
    pub energy: f64,
    pub branch: Branch,
    pub qn: QuantumNumbers,
    pub angular: AngularSolution,
    pub radial: RadialParams,
    /// √ε from the energy (equal to the quantized value on the positive branch).
    pub sqrt_eps: f64,
    /// `None` on the negative branch.
    pub a_nl: Option<f64>,
    /// n + l + 1.
    pub n_total: f64,
}

impl BoundState {
    /// Packages a root. Returns `Ok(None)` when ε ≤ 0 (not normalizable).
    pub fn at_root(spec: &PotentialSpec, qn: QuantumNumbers, energy: f64) -> Result<Option<Self>> {
        let angular = lambda_of(spec, energy, qn)?;
        let radial = radial_params(spec, energy, angular.lambda);
        if !(radial.eps_energy > 0.0) {
            return Ok(None);
        }
        let n_total = qn.n as f64 + angular.l_eff + 1.0;
        let branch = if radial.sigma > n_total * n_total {
            Branch::Positive
        } else {
            Branch::Negative
        };
        let sqrt_eps = radial.eps_energy.sqrt();
        let a_nl = match branch {
            Branch::Positive => Some(radial_normalization(qn.n, angular.l_eff, sqrt_eps, spec.a)?),
            Branch::Negative => None,
        };
        Ok(Some(Self {
            spec: *spec,
            energy,
            branch,
            qn,
            angular,
            radial,
            sqrt_eps,
            a_nl,
            n_total,
        }))
    }

    /// Quantized √ε, (σ − N²)/(2N).
    pub fn quantized_sqrt_eps(&self) -> f64 {
        quantized_sqrt_eps(self.radial.sigma, self.angular.l_eff, self.qn.n)
    }
}

/// Energy grid and refinement settings for [`find_bound_states`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub points: usize,
    /// The scan covers (−M + ξ, M − ξ) with ξ = `edge_rel`·M.
    pub edge_rel: f64,
    /// Absolute bisection tolerance on E.
    pub tol: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            points: 20_000,
            edge_rel: 1e-9,
            tol: 1e-12,
        }
    }
}

impl ScanConfig {
    pub fn window(&self, spec: &PotentialSpec) -> (f64, f64) {
        let xi = self.edge_rel * spec.mass;
        (-spec.mass + xi, spec.mass - xi)
    }
}

/// Subinterval on which the angular chain could not be evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanWarning {
    pub lo: f64,
    pub hi: f64,
    pub error: Error,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScanOutcome {
    /// Roots in ascending energy.
    pub states: Vec<BoundState>,
    pub warnings: Vec<ScanWarning>,
}

impl ScanOutcome {
    pub fn positive(&self) -> impl Iterator<Item = &BoundState> {
        self.states.iter().filter(|s| s.branch == Branch::Positive)
    }

    pub fn negative(&self) -> impl Iterator<Item = &BoundState> {
        self.states.iter().filter(|s| s.branch == Branch::Negative)
    }
}

pub(crate) fn bisect(f: impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64, mut f_lo: f64, tol: f64) -> Result<f64> {
    for _ in 0..300 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Roots of [`energy_residual`] on a uniform grid over `[lo, hi]`.
pub fn find_roots_in(
    spec: &PotentialSpec,
    qn: QuantumNumbers,
    lo: f64,
    hi: f64,
    points: usize,
    tol: f64,
) -> ScanOutcome {
    let points = points.max(2);
    let f = |e: f64| energy_residual(spec, qn, e);
    let grid: Vec<f64> = (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect();
    let values: Vec<Result<f64>> = grid.iter().map(|&e| f(e)).collect();

    let mut out = ScanOutcome::default();
    let mut roots = Vec::new();
    for i in 0..points - 1 {
        match (&values[i], &values[i + 1]) {
            (Ok(a), Ok(b)) => {
                if *a == 0.0 {
                    roots.push(grid[i]);
                } else if (*a < 0.0) != (*b < 0.0) && *b != 0.0 {
                    match bisect(f, grid[i], grid[i + 1], *a, tol) {
                        Ok(r) => roots.push(r),
                        Err(error) => out.warnings.push(ScanWarning {
                            lo: grid[i],
                            hi: grid[i + 1],
                            error,
                        }),
                    }
                }
            }
            (Err(error), _) | (_, Err(error)) => match out.warnings.last_mut() {
                Some(w) if w.hi >= grid[i] => w.hi = grid[i + 1],
                _ => out.warnings.push(ScanWarning {
                    lo: grid[i],
                    hi: grid[i + 1],
                    error: error.clone(),
                }),
            },
        }
    }
    if let Some(Ok(v)) = values.last() {
        if *v == 0.0 {
            roots.push(grid[points - 1]);
        }
    }
    for e in roots {
        match BoundState::at_root(spec, qn, e) {
            Ok(Some(state)) => out.states.push(state),
            Ok(None) => {}
            Err(error) => out.warnings.push(ScanWarning { lo: e, hi: e, error }),
        }
    }
    out
}

/// All roots of the energy equation inside the bound-state window.
pub fn find_bound_states(spec: &PotentialSpec, qn: QuantumNumbers, scan: &ScanConfig) -> ScanOutcome {
    let (lo, hi) = scan.window(spec);
    find_roots_in(spec, qn, lo, hi, scan.points, scan.tol)
}

/// A_nl for the radial factor, computed through log-gamma:
///
/// ```text
/// A² = 2√ε n! (n + l + √ε + 1) Γ(n + 2l + 2√ε + 2) / (a (n + l + 1) Γ(n + 2l + 2) Γ(n + 2√ε + 1))
/// ```
pub fn radial_normalization(n: u32, l: f64, sqrt_eps: f64, a: f64) -> Result<f64> {
    let nf = n as f64;
    let g1 = nf + 2.0 * l + 2.0 * sqrt_eps + 2.0;
    let g2 = nf + 2.0 * l + 2.0;
    let g3 = nf + 2.0 * sqrt_eps + 1.0;
    if !(sqrt_eps > 0.0 && nf + l + 1.0 > 0.0 && a > 0.0) {
        return Err(domain(
            "radial_normalization",
            format!(
                "need sqrt_eps > 0, n + l + 1 > 0, a > 0 (got {sqrt_eps}, {}, {a})",
                nf + l + 1.0
            ),
        ));
    }
    let log_sq = (2.0 * sqrt_eps).ln() + log_gamma(nf + 1.0)? + (nf + l + sqrt_eps + 1.0).ln() + log_gamma(g1)?
        - a.ln()
        - (nf + l + 1.0).ln()
        - log_gamma(g2)?
        - log_gamma(g3)?;
    Ok((0.5 * log_sq).exp())
}

/// Ground-state (n = 0) normalization via the Euler beta function,
/// A₀ₗ = √((l + √ε + 1)/(a(l + 1) B(2√ε, 2l + 2))).
pub fn normalization_ground_beta(l: f64, sqrt_eps: f64, a: f64) -> Result<f64> {
    let b = beta_fn(2.0 * sqrt_eps, 2.0 * l + 2.0)?;
    Ok(((l + sqrt_eps + 1.0) / (a * (l + 1.0) * b)).sqrt())
}

pub fn normalization_constant(state: &BoundState) -> Result<f64> {
    if state.branch == Branch::Negative {
        return Err(Error::NonNormalizableBranch(state.energy));
    }
    radial_normalization(state.qn.n, state.angular.l_eff, state.sqrt_eps, state.spec.a)
}

/// U(r) = A (e^{−r/a})^{√ε} (1 − e^{−r/a})^{l+1} P_n^{(2√ε, 2l+1)}(1 − 2e^{−r/a}).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialWavefunction {
    pub norm: f64,
    pub a: f64,
    pub sqrt_eps: f64,
    pub l: f64,
    pub n: u32,
}

impl RadialWavefunction {
    /// Unit-normalized radial factor for explicit parameters.
    pub fn new(n: u32, l: f64, sqrt_eps: f64, a: f64) -> Result<Self> {
        Ok(Self {
            norm: radial_normalization(n, l, sqrt_eps, a)?,
            a,
            sqrt_eps,
            l,
            n,
        })
    }

    fn shape(&self, s: f64, one_minus_s: f64) -> f64 {
        let p = JacobiParams {
            n: self.n,
            a_exp: 2.0 * self.sqrt_eps,
            b_exp: 2.0 * self.l + 1.0,
        };
        s.powf(self.sqrt_eps) * one_minus_s.powf(self.l + 1.0) * jacobi_p(p, 1.0 - 2.0 * s)
    }

    pub fn eval(&self, r: f64) -> f64 {
        let x = -r / self.a;
        self.norm * self.shape(x.exp(), -x.exp_m1())
    }

    /// U as a function of s = e^{−r/a}.
    pub fn eval_s(&self, s: f64) -> f64 {
        self.norm * self.shape(s, 1.0 - s)
    }
}

pub fn radial_wavefunction(state: &BoundState) -> Result<RadialWavefunction> {
    let norm = normalization_constant(state)?;
    Ok(RadialWavefunction {
        norm,
        a: state.spec.a,
        sqrt_eps: state.sqrt_eps,
        l: state.angular.l_eff,
        n: state.qn.n,
    })
}

/// Upper spinor component φ(r, θ, φ) = Φ(φ) Θ(θ) U(r)/r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TotalWavefunction {
    pub radial: RadialWavefunction,
    pub theta: ThetaWavefunction,
    pub azimuthal: AzimuthalWavefunction,
}

impl TotalWavefunction {
    pub fn eval(&self, r: f64, theta: f64, phi: f64) -> Complex64 {
        self.azimuthal.eval(phi) * (self.theta.eval(theta) * self.radial.eval(r) / r)
    }
}

pub fn total_wavefunction(state: &BoundState) -> Result<TotalWavefunction> {
    Ok(TotalWavefunction {
        radial: radial_wavefunction(state)?,
        theta: theta_wavefunction(&state.angular)?,
        azimuthal: phi_wavefunction(state.qn.m),
    })
}

/// Angular data of the non-relativistic limit (E + M → 2μ).
pub fn nonrel_angular(mu: f64, spec: &PotentialSpec, qn: QuantumNumbers) -> Result<AngularSolution> {
    // lambda_of only sees E through E + M; pick E so that E + M = 2μ.
    let mut sol = lambda_of(spec, 2.0 * mu - spec.mass, qn)?;
    sol.energy_used = f64::NAN;
    Ok(sol)
}

/// Closed-form non-relativistic energy
///
/// ```text
/// E = (1/2μa²){(N² − 4μβ − ¼)d₀ − [2μV₀a²/(n+l+1) − (n+l+1)/2]²},
/// N = 2ñ + m̃ + 3/2,  m̃ = √(m² + 4μ(α+β)),  l = √(N² − 4μβ) − ½.
/// ```
pub fn nonrel_energy(mu: f64, spec: &PotentialSpec, qn: QuantumNumbers) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(domain("nonrel_energy", format!("mu = {mu} must be positive")));
    }
    let mt2 = (qn.m as f64).powi(2) + 4.0 * mu * (spec.alpha + spec.beta);
    if mt2 < 0.0 {
        return Err(domain(
            "nonrel_energy",
            format!("m^2 + 4 mu (alpha + beta) = {mt2} < 0"),
        ));
    }
    let big_n = 2.0 * qn.n_tilde as f64 + mt2.sqrt() + 1.5;
    let rad = big_n * big_n - 4.0 * mu * spec.beta;
    if rad < 0.0 {
        return Err(domain("nonrel_energy", format!("N^2 - 4 mu beta = {rad} < 0")));
    }
    let l = rad.sqrt() - 0.5;
    let nl1 = qn.n as f64 + l + 1.0;
    let a2 = spec.a * spec.a;
    let bracket = 2.0 * mu * spec.v0 * a2 / nl1 - nl1 / 2.0;
    Ok(((rad - 0.25) * spec.d0 - bracket * bracket) / (2.0 * mu * a2))
}

/// Non-relativistic Hulthén energy for integer-like orbital parameter `l`:
/// E = (1/2μa²){l(l+1)d₀ − [2μV₀a²/(n+l+1) − (n+l+1)/2]²}.
pub fn nonrel_energy_hulthen(mu: f64, spec: &PotentialSpec, n: u32, l: f64) -> f64 {
    let nl1 = n as f64 + l + 1.0;
    let a2 = spec.a * spec.a;
    let bracket = 2.0 * mu * spec.v0 * a2 / nl1 - nl1 / 2.0;
    (l * (l + 1.0) * spec.d0 - bracket * bracket) / (2.0 * mu * a2)
}

/// κ = −2μa²E + l(l+1)d₀, positive for E < 0.
pub fn nonrel_kappa(mu: f64, spec: &PotentialSpec, l: f64, energy: f64) -> f64 {
    -2.0 * mu * spec.a * spec.a * energy + l * (l + 1.0) * spec.d0
}

/// Non-relativistic wavefunction: the relativistic assembly with √ε → √κ.
pub fn nonrel_wavefunction(
    mu: f64,
    spec: &PotentialSpec,
    qn: QuantumNumbers,
    energy: f64,
) -> Result<TotalWavefunction> {
    if !(energy < 0.0) {
        return Err(domain("nonrel_wavefunction", format!("E = {energy} must be negative")));
    }
    let angular = nonrel_angular(mu, spec, qn)?;
    let kappa = nonrel_kappa(mu, spec, angular.l_eff, energy);
    Ok(TotalWavefunction {
        radial: RadialWavefunction::new(qn.n, angular.l_eff, kappa.sqrt(), spec.a)?,
        theta: theta_wavefunction(&angular)?,
        azimuthal: phi_wavefunction(qn.m),
    })
}
