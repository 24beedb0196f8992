//! Polar and azimuthal equations.
//!
//! With z = cos²θ the polar equation becomes NU-type with c₁ = ½, c₂ = 3/2,
//! c₃ = 1, A = ¼[λ + 2(E+M)β], B = ¼[λ − m² − 2(E+M)α], C = 0. The explicit
//! cos θ factor of the solution means only states odd under θ → π − θ
//! are produced.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::model::{PotentialSpec, QuantumNumbers};
use crate::nu::ParametricOde;
use crate::quad::{integrate, QuadConfig};
use crate::specfn::{jacobi_p, JacobiParams};

/// Solved polar problem at a given energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularSolution {
    pub m_tilde: f64,
    /// Separation constant λ = l(l+1).
    pub lambda: f64,
    /// Effective (generally non-integer) orbital parameter l.
    pub l_eff: f64,
    pub n_tilde: u32,
    pub m: u32,
    pub energy_used: f64,
    /// E + M at `energy_used`.
    pub coupling: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// NU coefficients of the z = cos²θ polar equation.
pub fn angular_ode(spec: &PotentialSpec, energy: f64, m: u32, lambda: f64) -> ParametricOde {
    let coupling = energy + spec.mass;
    let m2 = (m as f64).powi(2);
    ParametricOde {
        c1: 0.5,
        c2: 1.5,
        c3: 1.0,
        a: 0.25 * (lambda + 2.0 * coupling * spec.beta),
        b: 0.25 * (lambda - m2 - 2.0 * coupling * spec.alpha),
        c: 0.0,
    }
}

/// m̃ = √(m² + 2(E+M)(α+β)).
pub fn m_tilde(spec: &PotentialSpec, energy: f64, m: u32) -> Result<f64> {
    let radicand = (m as f64).powi(2) + 2.0 * (energy + spec.mass) * (spec.alpha + spec.beta);
    if radicand < 0.0 {
        return Err(Error::ComplexAngularIndex(radicand));
    }
    Ok(radicand.sqrt())
}

/// λ and l from the angular quantization condition at energy `energy`.
pub fn lambda_of(spec: &PotentialSpec, energy: f64, qn: QuantumNumbers) -> Result<AngularSolution> {
    let mt = m_tilde(spec, energy, qn.m)?;
    let coupling = energy + spec.mass;
    let big_n = 2.0 * qn.n_tilde as f64 + mt + 1.5;
    let radicand = big_n * big_n - 2.0 * coupling * spec.beta;
    if radicand < 0.0 {
        return Err(Error::NoRealOrbital(radicand));
    }
    // With β = 0 the root is exact: l = 2ñ + m̃ + 1.
    let root = if spec.beta == 0.0 { big_n } else { radicand.sqrt() };
    let l_eff = root - 0.5;
    Ok(AngularSolution {
        m_tilde: mt,
        lambda: l_eff * (l_eff + 1.0),
        l_eff,
        n_tilde: qn.n_tilde,
        m: qn.m,
        energy_used: energy,
        coupling,
        alpha: spec.alpha,
        beta: spec.beta,
    })
}

impl AngularSolution {
    /// Coefficient of Θ in the polar equation, excluding λ.
    pub fn polar_potential(&self, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        ((self.m as f64).powi(2) + 2.0 * self.coupling * (self.alpha + self.beta * c * c)) / (s * s)
    }
}

/// Θ(θ) = A cos θ (sin θ)^{m̃} P_ñ^{(1/2, m̃)}(1 − 2cos²θ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaWavefunction {
    pub solution: AngularSolution,
    /// A_ñ, fixed so that ∫₀^π Θ² sin θ dθ = 1.
    pub norm: f64,
}

fn theta_shape(sol: &AngularSolution, cos: f64, sin: f64) -> f64 {
    let p = JacobiParams {
        n: sol.n_tilde,
        a_exp: 0.5,
        b_exp: sol.m_tilde,
    };
    cos * sin.powf(sol.m_tilde) * jacobi_p(p, 1.0 - 2.0 * cos * cos)
}

pub fn theta_wavefunction(sol: &AngularSolution) -> Result<ThetaWavefunction> {
    // ∫₀^π Θ² sin θ dθ = 2 ∫₀¹ Θ(u)² du with u = cos θ (Θ² is even in u).
    let integral = integrate(
        |u| {
            let v = theta_shape(sol, u, (1.0 - u * u).max(0.0).sqrt());
            v * v
        },
        0.0,
        1.0,
        QuadConfig {
            abs_tol: 0.0,
            rel_tol: 1e-13,
            ..Default::default()
        },
    )?;
    Ok(ThetaWavefunction {
        solution: *sol,
        norm: (2.0 * integral).sqrt().recip(),
    })
}

impl ThetaWavefunction {
    pub fn eval(&self, theta: f64) -> f64 {
        // cos θ as sin(π/2 − θ) vanishes exactly on the equator.
        let c = (FRAC_PI_2 - theta).sin();
        self.norm * theta_shape(&self.solution, c, theta.sin().abs())
    }
}

/// Φ_m(φ) = e^{±imφ}/√(2π).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AzimuthalWavefunction {
    pub m: u32,
    /// +1 or −1, selecting e^{+imφ} or e^{−imφ}.
    pub sign: i8,
}

pub fn phi_wavefunction(m: u32) -> AzimuthalWavefunction {
    AzimuthalWavefunction { m, sign: 1 }
}

impl AzimuthalWavefunction {
    pub fn conjugate(self) -> Self {
        Self {
            sign: -self.sign,
            ..self
        }
    }

    pub fn eval(&self, phi: f64) -> Complex64 {
        let arg = self.sign as f64 * self.m as f64 * phi;
        Complex64::from_polar((2.0 * PI).sqrt().recip(), arg)
    }
}
