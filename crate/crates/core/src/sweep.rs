//! Parameter sweeps with root continuation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{PotentialSpec, QuantumNumbers};
use crate::radial::{find_bound_states, find_roots_in, BoundState, ScanConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    V0,
    Delta,
}

impl SweepParam {
    pub fn apply(self, spec: &PotentialSpec, value: f64) -> PotentialSpec {
        match self {
            SweepParam::V0 => spec.with_v0(value),
            SweepParam::Delta => spec.with_delta(value),
        }
    }
}

impl FromStr for SweepParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "V0" | "v0" => Ok(SweepParam::V0),
            "delta" | "Delta" => Ok(SweepParam::Delta),
            other => Err(Error::Argument(format!(
                "unknown sweep parameter '{other}' (expected V0 or delta)"
            ))),
        }
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepParam::V0 => "V0",
            SweepParam::Delta => "delta",
        })
    }
}

/// `steps` equally spaced values from `from` to `to` inclusive.
pub fn sweep_values(from: f64, to: f64, steps: usize) -> Result<Vec<f64>> {
    if !(from < to) || steps < 2 {
        return Err(Error::Argument(format!(
            "sweep needs from < to and steps >= 2 (got {from}, {to}, {steps})"
        )));
    }
    Ok((0..steps)
        .map(|i| from + (to - from) * i as f64 / (steps - 1) as f64)
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub value: f64,
    pub spec: PotentialSpec,
    /// Tracked positive-branch state; `None` when the root was lost.
    pub state: Option<BoundState>,
    /// The local bracket failed and a full scan supplied the root.
    pub reseeded: bool,
}

impl SweepPoint {
    pub fn lost(&self) -> bool {
        self.state.is_none()
    }
}

fn nearest_positive(states: &[BoundState], target: Option<f64>) -> Option<BoundState> {
    let mut positive = states.iter().filter(|s| s.branch == crate::radial::Branch::Positive);
    match target {
        None => positive.next().cloned(),
        Some(t) => positive
            .min_by(|a, b| (a.energy - t).abs().total_cmp(&(b.energy - t).abs()))
            .cloned(),
    }
}

/// Follow the lowest positive-branch root of `qn` along `values`. Each point
/// first searches a window around the energy extrapolated from the last
/// two points; a lost root is
/// recorded and tracking resumes from the last good energy.
pub fn track_root(
    base: &PotentialSpec,
    qn: QuantumNumbers,
    param: SweepParam,
    values: &[f64],
    scan: &ScanConfig,
) -> Vec<SweepPoint> {
    let local_points = (scan.points / 10).max(200);
    let mut previous: Option<f64> = None;
    let mut step = 0.0f64;
    let mut points = Vec::with_capacity(values.len());
    for &value in values {
        let spec = param.apply(base, value);
        let mut reseeded = false;
        let mut state = previous.and_then(|e| {
            let center = e + step;
            let half_width = (0.1 * base.mass).max(2.0 * step.abs());
            let (wlo, whi) = scan.window(&spec);
            let lo = (center - half_width).max(wlo);
            let hi = (center + half_width).min(whi);
            nearest_positive(
                &find_roots_in(&spec, qn, lo, hi, local_points, scan.tol).states,
                Some(center),
            )
        });
        if state.is_none() {
            reseeded = previous.is_some();
            state = nearest_positive(&find_bound_states(&spec, qn, scan).states, previous);
        }
        if let Some(s) = &state {
            step = previous.map_or(0.0, |p| s.energy - p);
            previous = Some(s.energy);
        }
        points.push(SweepPoint {
            value,
            spec,
            state,
            reseeded,
        });
    }
    points
}
