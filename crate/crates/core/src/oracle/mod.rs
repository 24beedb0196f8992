//! Independent numerical checks of the analytic solutions.
//!
//! The radial and polar equations are discretized directly with second-order
//! finite differences and solved as symmetric tridiagonal eigenproblems. None
//! of the NU constants, Jacobi polynomials or closed-form normalizations
//! enter these eigensolves; only λ(E) is shared with the analytic path, since
//! it is the separation constant that couples the two equations.

mod tridiag;

pub use tridiag::{count_nodes, SymTridiag};

use crate::angular::{lambda_of, ThetaWavefunction};
use crate::error::{Error, Result};
use crate::model::{centrifugal_approx, PotentialSpec, QuantumNumbers};
use crate::nu::ParametricOde;
use crate::quad::{integrate, QuadConfig};
use crate::radial::{radial_wavefunction, BoundState, RadialWavefunction};
use crate::specfn::{hyp2f1_terminating, log_gamma};

/// Uniform grid of `n_points` interior points strictly inside (lo, hi).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub lo: f64,
    pub hi: f64,
    pub n_points: usize,
}

impl Grid1D {
    pub fn new(lo: f64, hi: f64, n_points: usize) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::Argument(format!("grid needs lo < hi, got [{lo}, {hi}]")));
        }
        if n_points < 100 {
            return Err(Error::Argument(format!(
                "grid needs at least 100 points, got {n_points}"
            )));
        }
        Ok(Self { lo, hi, n_points })
    }

    /// [1e-4, 60] fm with 20000 interior points.
    pub fn radial_default() -> Self {
        Self {
            lo: 1e-4,
            hi: 60.0,
            n_points: 20_000,
        }
    }

    pub fn spacing(&self) -> f64 {
        (self.hi - self.lo) / (self.n_points + 1) as f64
    }

    /// Interior point `i` in 1..=n_points.
    pub fn point(&self, i: usize) -> f64 {
        self.lo + i as f64 * self.spacing()
    }

    pub fn refined(&self) -> Self {
        Self {
            n_points: 2 * self.n_points,
            ..*self
        }
    }
}

/// Effective radial potential with the approximated centrifugal term:
/// (λ/a²)[d₀ + s/(1 − s)²] − 2(E + M)V₀ s/(1 − s), s = e^{−r/a}.
pub fn radial_effective_potential(spec: &PotentialSpec, lambda: f64, coupling: f64, r: f64) -> f64 {
    let x = -r / spec.a;
    let s = x.exp();
    let one_minus = -x.exp_m1();
    centrifugal_approx(lambda, spec.a, r, spec.d0) - 2.0 * coupling * spec.v0 * s / one_minus
}

/// Dirichlet discretization of −d²/dr² + V_eff.
pub fn radial_operator(spec: &PotentialSpec, lambda: f64, energy: f64, grid: &Grid1D) -> SymTridiag {
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let coupling = energy + spec.mass;
    let diag = (1..=grid.n_points)
        .map(|i| 2.0 * inv_h2 + radial_effective_potential(spec, lambda, coupling, grid.point(i)))
        .collect();
    let off = vec![-inv_h2; grid.n_points - 1];
    SymTridiag { diag, off }
}

/// The `k` lowest eigenvalues W of −U″ + V_eff U = W U at fixed λ and E + M.
/// A bound state of the radial equation needs W = E² − M².
pub fn radial_fd_spectrum(spec: &PotentialSpec, lambda: f64, energy: f64, grid: &Grid1D, k: usize) -> Result<Vec<f64>> {
    radial_operator(spec, lambda, energy, grid).lowest(k)
}

/// Oracle bound state found by closing the nonlinear eigenproblem in E.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelfConsistent {
    pub energy: f64,
    /// W_n at the converged energy.
    pub eigenvalue: f64,
    /// Sign changes of the corresponding eigenvector.
    pub nodes: usize,
}

const SELF_CONSISTENT_TOL: f64 = 1e-11;

/// True when W_n(E) < E² − M², i.e. g(E) = W_n(E) − (E² − M²) < 0.
fn g_negative(spec: &PotentialSpec, qn: QuantumNumbers, grid: &Grid1D, energy: f64) -> Result<bool> {
    let lambda = lambda_of(spec, energy, qn)?.lambda;
    let target = energy * energy - spec.mass * spec.mass;
    Ok(radial_operator(spec, lambda, energy, grid).count_below(target) > qn.n as usize)
}

/// Root of g(E) = W_n(E) − (E² − M²) inside `bracket`, with λ(E) taken from
/// the polar quantization condition. The sign of g comes from a Sturm count
/// at E² − M², so each step costs one pass over the grid.
pub fn selfconsistent_energy(
    spec: &PotentialSpec,
    qn: QuantumNumbers,
    grid: &Grid1D,
    bracket: (f64, f64),
) -> Result<SelfConsistent> {
    let (mut lo, mut hi) = bracket;
    let neg_lo = g_negative(spec, qn, grid, lo)?;
    if neg_lo == g_negative(spec, qn, grid, hi)? {
        return Err(Error::Bracket { lo, hi });
    }
    while hi - lo > SELF_CONSISTENT_TOL {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g_negative(spec, qn, grid, mid)? == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let energy = 0.5 * (lo + hi);
    let lambda = lambda_of(spec, energy, qn)?.lambda;
    let op = radial_operator(spec, lambda, energy, grid);
    let eigenvalue = op.eigenvalue(qn.n as usize)?;
    let vector = op.eigenvector(eigenvalue);
    let peak = vector.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    Ok(SelfConsistent {
        energy,
        eigenvalue,
        nodes: count_nodes(&vector, 1e-9 * peak),
    })
}

/// Widen a bracket around `center` until g changes sign, staying inside
/// the open window (−M, M).
pub fn find_bracket(
    spec: &PotentialSpec,
    qn: QuantumNumbers,
    grid: &Grid1D,
    center: f64,
    half_width: f64,
) -> Result<(f64, f64)> {
    let edge = spec.mass * (1.0 - 1e-9);
    let mut w = half_width;
    for _ in 0..12 {
        let lo = (center - w).max(-edge);
        let hi = (center + w).min(edge);
        let (Ok(a), Ok(b)) = (g_negative(spec, qn, grid, lo), g_negative(spec, qn, grid, hi)) else {
            w *= 0.5;
            continue;
        };
        if a != b {
            return Ok((lo, hi));
        }
        w *= 2.0;
    }
    Err(Error::Bracket {
        lo: center - half_width,
        hi: center + half_width,
    })
}

/// Per-state oracle report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationRecord {
    pub qn: QuantumNumbers,
    pub analytic_energy: f64,
    pub oracle_energy: f64,
    pub defect: f64,
    pub grid: Grid1D,
    pub nodes: usize,
}

/// Compare an analytic bound state with the finite-difference closure.
pub fn verify_state(state: &BoundState, grid: &Grid1D) -> Result<VerificationRecord> {
    let bracket = find_bracket(&state.spec, state.qn, grid, state.energy, 0.05)?;
    let sc = selfconsistent_energy(&state.spec, state.qn, grid, bracket)?;
    Ok(VerificationRecord {
        qn: state.qn,
        analytic_energy: state.energy,
        oracle_energy: sc.energy,
        defect: (sc.energy - state.energy).abs(),
        grid: *grid,
        nodes: sc.nodes,
    })
}

/// The `k` lowest λ of the polar equation for states odd under θ → π − θ.
///
/// With u = cos θ and Θ = (1 − u²)^{m̃/2} f(u) the equation becomes
/// ((1 − u²)^{m̃+1} f′)′ + μ (1 − u²)^{m̃} f = 0, μ = λ + 2(E+M)β − m̃(m̃ + 1),
/// which is discretized by finite volumes on (0, 1) with f(0) = 0 and the
/// vanishing flux at u = 1 as the natural boundary.
pub fn angular_fd_spectrum(spec: &PotentialSpec, energy: f64, m: u32, n_points: usize, k: usize) -> Result<Vec<f64>> {
    if n_points < 100 {
        return Err(Error::Argument(format!(
            "grid needs at least 100 points, got {n_points}"
        )));
    }
    let mt = crate::angular::m_tilde(spec, energy, m)?;
    let coupling = energy + spec.mass;
    let h = 1.0 / (n_points as f64 + 0.5);
    let flux = |u: f64| (1.0 - u * u).max(0.0).powf(mt + 1.0);
    let weight: Vec<f64> = (1..=n_points)
        .map(|i| (1.0 - (i as f64 * h).powi(2)).powf(mt))
        .collect();
    let inv_h2 = 1.0 / (h * h);
    let diag = (1..=n_points)
        .map(|i| {
            let u = i as f64 * h;
            (flux(u - 0.5 * h) + flux(u + 0.5 * h)) * inv_h2 / weight[i - 1]
        })
        .collect();
    let off = (1..n_points)
        .map(|i| -flux((i as f64 + 0.5) * h) * inv_h2 / (weight[i - 1] * weight[i]).sqrt())
        .collect();
    let shift = mt * (mt + 1.0) - 2.0 * coupling * spec.beta;
    Ok(SymTridiag { diag, off }
        .lowest(k)?
        .into_iter()
        .map(|mu| mu + shift)
        .collect())
}

/// Both sides of the Jacobi-type integral identity
///
/// ```text
/// ∫₀¹ z^{2λ−1}(1 − z)^{2(η+1)} [₂F₁(−n, 2(λ+η+1)+n; c; z)]² dz
///   = (n+η+1) n! Γ(n+2η+2) Γ(2λ) Γ(2λ+1) / ((n+η+λ+1) Γ(n+2λ+1) Γ(n+2λ+2η+2))
/// ```
///
/// evaluated with c = 1 + 2λ (`lhs`) and with c = 2λ + 2 (`lhs_shifted`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiIntegralCheck {
    pub lhs: f64,
    pub lhs_shifted: f64,
    pub rhs: f64,
}

impl JacobiIntegralCheck {
    pub fn relative_gap(&self) -> f64 {
        (self.lhs - self.rhs).abs() / self.rhs.abs()
    }

    pub fn relative_gap_shifted(&self) -> f64 {
        (self.lhs_shifted - self.rhs).abs() / self.rhs.abs()
    }
}

pub fn jacobi_integral_check(lam: f64, eta: f64, n: u32) -> Result<JacobiIntegralCheck> {
    if !(lam > 0.0 && eta > -1.5) {
        return Err(Error::Argument(format!(
            "need λ > 0 and η > −3/2, got λ = {lam}, η = {eta}"
        )));
    }
    let b = 2.0 * (lam + eta + 1.0) + n as f64;
    let cfg = QuadConfig {
        abs_tol: 0.0,
        rel_tol: 1e-13,
        ..Default::default()
    };
    // t = z^{2λ} absorbs the z^{2λ−1} endpoint factor.
    let side = |c: f64| -> Result<f64> {
        let failure = std::cell::Cell::new(None);
        let value = integrate(
            |t| {
                let z = t.powf(0.5 / lam);
                match hyp2f1_terminating(n, b, c, z) {
                    Ok(f) => (1.0 - z).powf(2.0 * (eta + 1.0)) * f * f,
                    Err(e) => {
                        failure.set(Some(e));
                        0.0
                    }
                }
            },
            0.0,
            1.0,
            cfg,
        )?;
        match failure.into_inner() {
            Some(e) => Err(e),
            None => Ok(value / (2.0 * lam)),
        }
    };
    let nf = n as f64;
    let log_rhs = (nf + eta + 1.0).ln()
        + log_gamma(nf + 1.0)?
        + log_gamma(nf + 2.0 * eta + 2.0)?
        + log_gamma(2.0 * lam)?
        + log_gamma(2.0 * lam + 1.0)?
        - (nf + eta + lam + 1.0).ln()
        - log_gamma(nf + 2.0 * lam + 1.0)?
        - log_gamma(nf + 2.0 * lam + 2.0 * eta + 2.0)?;
    Ok(JacobiIntegralCheck {
        lhs: side(1.0 + 2.0 * lam)?,
        lhs_shifted: side(2.0 * lam + 2.0)?,
        rhs: log_rhs.exp(),
    })
}

/// Quadrature of ∫₀^∞ U² dr = ∫₀¹ U(s)² a/s ds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormCheck {
    pub integral: f64,
    /// Estimate of ∫_{r_max}^∞ U² dr from the asymptotic decay U ∝ e^{−√ε r/a}.
    pub tail: f64,
}

pub fn quadrature_norm_of(u: &RadialWavefunction, r_max: f64) -> Result<NormCheck> {
    let cfg = QuadConfig {
        abs_tol: 0.0,
        rel_tol: 1e-12,
        ..Default::default()
    };
    let integral = integrate(|s| u.eval_s(s).powi(2) * u.a / s, 0.0, 1.0, cfg)?;
    let tail = u.eval(r_max).powi(2) * u.a / (2.0 * u.sqrt_eps);
    Ok(NormCheck { integral, tail })
}

pub fn quadrature_norm(state: &BoundState) -> Result<NormCheck> {
    quadrature_norm_of(&radial_wavefunction(state)?, Grid1D::radial_default().hi)
}

/// Pointwise ODE defect with the magnitude of the largest term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeResidual {
    pub residual: f64,
    pub scale: f64,
}

impl OdeResidual {
    pub fn relative(&self) -> f64 {
        self.residual.abs() / self.scale
    }
}

fn derivatives(f: impl Fn(f64) -> f64, x: f64, h: f64) -> (f64, f64, f64) {
    let (m2, m1, f0, p1, p2) = (f(x - 2.0 * h), f(x - h), f(x), f(x + h), f(x + 2.0 * h));
    let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    let d2 = (-m2 + 16.0 * m1 - 30.0 * f0 + 16.0 * p1 - p2) / (12.0 * h * h);
    (f0, d1, d2)
}

/// Θ″ + cot θ Θ′ + [λ − (m² + 2(E+M)(α + β cos²θ))/sin²θ]Θ at θ.
pub fn theta_ode_residual(wf: &ThetaWavefunction, theta: f64) -> OdeResidual {
    let (f, d1, d2) = derivatives(|t| wf.eval(t), theta, 1e-3);
    let sol = &wf.solution;
    let drift = d1 / theta.tan();
    let potential = (sol.lambda - sol.polar_potential(theta)) * f;
    OdeResidual {
        residual: d2 + drift + potential,
        scale: d2.abs().max(drift.abs()).max(potential.abs()),
    }
}

/// Residual of the s-space radial equation for U at s.
pub fn radial_ode_residual(u: &RadialWavefunction, ode: &ParametricOde, s: f64) -> OdeResidual {
    let h = 2e-3 * s.min(1.0 - s);
    let (f, d1, d2) = derivatives(|x| u.eval_s(x), s, h);
    let drift = ode.first_order_coeff(s) * d1;
    let potential = ode.zeroth_order_coeff(s) * f;
    OdeResidual {
        residual: d2 + drift + potential,
        scale: d2.abs().max(drift.abs()).max(potential.abs()),
    }
}
