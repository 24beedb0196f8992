//! Parametric Nikiforov-Uvarov shortcut.
//!
//! Handles any equation of the form
//!
//! ```text
//! ψ″(s) + (c₁ − c₂s)/(s(1 − c₃s)) ψ′(s) + (−As² + Bs − C)/(s²(1 − c₃s)²) ψ(s) = 0
//! ```
//!
//! by deriving ten auxiliary constants, a closed-form quantization condition
//! and the polynomial solution
//! `ψ = s^{c₁₂}(1 − c₃s)^{c₁₃} P_n^{(c₁₀, c₁₁)}(1 − 2c₃s)`.
//!
//! Callers pass `A`, `B`, `C` with the signs of the numerator above.

use crate::error::{Error, Result};
use crate::specfn::{hyp2f1_terminating, jacobi_p, JacobiParams};

/// Coefficients of the hypergeometric-type equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParametricOde {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl ParametricOde {
    /// Coefficient of ψ′ at s.
    pub fn first_order_coeff(&self, s: f64) -> f64 {
        (self.c1 - self.c2 * s) / (s * (1.0 - self.c3 * s))
    }

    /// Coefficient of ψ at s.
    pub fn zeroth_order_coeff(&self, s: f64) -> f64 {
        let sigma = s * (1.0 - self.c3 * s);
        (-self.a * s * s + self.b * s - self.c) / (sigma * sigma)
    }
}

/// Derived constants c₄ … c₁₃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuConstants {
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
    pub c7: f64,
    pub c8: f64,
    pub c9: f64,
    pub c10: f64,
    pub c11: f64,
    pub c12: f64,
    pub c13: f64,
}

impl NuConstants {
    /// τ′(s), constant because τ is linear.
    pub fn tau_prime(&self, c3: f64) -> f64 {
        -2.0 * c3 - 2.0 * (self.c9.sqrt() + c3 * self.c8.sqrt())
    }
}

pub fn derive_constants(ode: &ParametricOde) -> Result<NuConstants> {
    let ParametricOde { c1, c2, c3, a, b, c } = *ode;
    if c3 == 0.0 {
        return Err(Error::UnsupportedBranch);
    }
    let c4 = 0.5 * (1.0 - c1);
    let c5 = 0.5 * (c2 - 2.0 * c3);
    let c6 = c5 * c5 + a;
    let c7 = 2.0 * c4 * c5 - b;
    let c8 = c4 * c4 + c;
    let c9 = c3 * (c7 + c3 * c8) + c6;
    if c8 < 0.0 {
        return Err(Error::ComplexBranch {
            constant: "c8",
            value: c8,
        });
    }
    if c9 < 0.0 {
        return Err(Error::ComplexBranch {
            constant: "c9",
            value: c9,
        });
    }
    let (r8, r9) = (c8.sqrt(), c9.sqrt());
    let k = NuConstants {
        c4,
        c5,
        c6,
        c7,
        c8,
        c9,
        c10: c1 + 2.0 * c4 + 2.0 * r8 - 1.0,
        c11: 1.0 - c1 - 2.0 * c4 + 2.0 / c3 * r9,
        c12: c4 + r8,
        // Printed with √c₃ in some sources; √c₉ is what reproduces the
        // radial (c₁₃ = l + 1) and angular (c₁₃ = m̃/2) identifications.
        c13: -c4 + (r9 - c5) / c3,
    };
    let tau_prime = k.tau_prime(c3);
    if !(tau_prime < 0.0) {
        return Err(Error::TauNotDecreasing(tau_prime));
    }
    Ok(k)
}

/// Left side of the NU energy equation; zero for a quantized state with
/// `n` nodes in the polynomial factor.
pub fn quantization_residual(k: &NuConstants, ode: &ParametricOde, n: u32) -> f64 {
    let n = n as f64;
    let c3 = ode.c3;
    let (r8, r9) = (k.c8.sqrt(), k.c9.sqrt());
    ode.c2 * n - (2.0 * n + 1.0) * k.c5
        + (2.0 * n + 1.0) * (r9 + c3 * r8)
        + n * (n - 1.0) * c3
        + k.c7
        + 2.0 * c3 * k.c8
        + 2.0 * r8 * r9
}

/// Factors of the NU solution for one quantum number `n`.
///
/// Values are unnormalized: `psi(s) = phi(s) * y_n(s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuWavefunction {
    pub constants: NuConstants,
    pub c3: f64,
    pub n: u32,
}

/// Builds the solution factors, rejecting non-normalizable exponents.
///
/// `c13 = 0` is accepted: the `(1 − c₃s)` factor is then absent but the
/// solution stays bounded (e.g. the m̃ = 0 angular state Θ ∝ cos θ).
pub fn wavefunction_factors(k: &NuConstants, ode: &ParametricOde, n: u32) -> Result<NuWavefunction> {
    let checks = [
        ("c10", k.c10, k.c10 > -1.0),
        ("c11", k.c11, k.c11 > -1.0),
        ("c12", k.c12, k.c12 > 0.0),
        ("c13", k.c13, k.c13 >= 0.0),
    ];
    for (constant, value, ok) in checks {
        if !ok {
            return Err(Error::NonNormalizableFactor { constant, value });
        }
    }
    Ok(NuWavefunction {
        constants: *k,
        c3: ode.c3,
        n,
    })
}

impl NuWavefunction {
    fn jacobi(&self) -> JacobiParams {
        JacobiParams {
            n: self.n,
            a_exp: self.constants.c10,
            b_exp: self.constants.c11,
        }
    }

    /// Weight function s^{c₁₀}(1 − c₃s)^{c₁₁}.
    pub fn rho(&self, s: f64) -> f64 {
        s.powf(self.constants.c10) * (1.0 - self.c3 * s).powf(self.constants.c11)
    }

    /// s^{c₁₂}(1 − c₃s)^{c₁₃}.
    pub fn phi(&self, s: f64) -> f64 {
        s.powf(self.constants.c12) * (1.0 - self.c3 * s).powf(self.constants.c13)
    }

    /// P_n^{(c₁₀, c₁₁)}(1 − 2c₃s).
    pub fn y_n(&self, s: f64) -> f64 {
        jacobi_p(self.jacobi(), 1.0 - 2.0 * self.c3 * s)
    }

    pub fn psi(&self, s: f64) -> f64 {
        self.phi(s) * self.y_n(s)
    }

    /// `psi` through the ₂F₁(−n, 1 + c₁₀ + c₁₁ + n; c₁₀ + 1; c₃s) form,
    /// rescaled by (c₁₀+1)_n / n! so it matches [`Self::psi`] pointwise.
    pub fn psi_hypergeometric(&self, s: f64) -> f64 {
        let k = &self.constants;
        let n = self.n;
        let pochhammer = (0..n).fold(1.0, |acc, j| acc * (k.c10 + 1.0 + j as f64) / (j as f64 + 1.0));
        let f = hyp2f1_terminating(n, 1.0 + k.c10 + k.c11 + n as f64, k.c10 + 1.0, self.c3 * s)
            .expect("c10 > -1 keeps (c10 + 1)_k non-zero");
        pochhammer * self.phi(s) * f
    }
}
