//! Shared fixtures for the criterion benches.

use hulthen_core::radial::find_bound_states;
use hulthen_core::{BoundState, PotentialSpec, QuantumNumbers, ScanConfig};

/// The reference ring-shaped potential (α = β = 1).
pub fn reference_spec() -> PotentialSpec {
    PotentialSpec::reference(1.0, 1.0)
}

/// Lowest positive-branch state of `qn` in the reference potential.
pub fn positive_state(qn: QuantumNumbers) -> BoundState {
    find_bound_states(&reference_spec(), qn, &ScanConfig::default())
        .positive()
        .next()
        .cloned()
        .expect("reference potential binds this state")
}
