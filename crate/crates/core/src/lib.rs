//! Relativistic and non-relativistic bound states of the Hulthén plus
//! ring-shaped potential
//!
//! ```text
//! V(r, θ) = −V₀ / (e^{r/a} − 1) + (α + β cos²θ) / (r² sin²θ)
//! ```
//!
//! for the Dirac equation with equal scalar and vector potentials. The
//! separated angular and radial equations are reduced to the hypergeometric
//! form `ψ″ + (c₁ − c₂s)/(s(1 − c₃s)) ψ′ + (−As² + Bs − C)/(s²(1 − c₃s)²) ψ = 0`
//! and solved with the parametric Nikiforov-Uvarov shortcut in [`nu`].
//!
//! Every analytic eigenvalue can be checked against the finite-difference
//! eigensolvers in [`oracle`], which discretize the same (approximated)
//! differential equations without using any of the NU machinery.
//!
//! Units are fm and fm⁻¹ with ħ = c = 1.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod angular;
pub mod error;
pub mod model;
pub mod nu;
pub mod oracle;
pub mod quad;
pub mod radial;
pub mod specfn;
pub mod sweep;
pub mod table1;

pub use angular::{AngularSolution, AzimuthalWavefunction, ThetaWavefunction};
pub use error::{Error, Result};
pub use model::{PotentialSpec, QuantumNumbers, D0};
pub use nu::{NuConstants, NuWavefunction, ParametricOde};
pub use oracle::Grid1D;
pub use radial::{BoundState, Branch, RadialParams, ScanConfig, ScanOutcome};
pub use sweep::{SweepParam, SweepPoint};
