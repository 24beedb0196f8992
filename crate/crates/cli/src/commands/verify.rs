use std::io::Write;

use hulthen_core::oracle::{angular_fd_spectrum, jacobi_integral_check, quadrature_norm, verify_state, Grid1D};
use hulthen_core::radial::find_bound_states;
use hulthen_core::table1::TABLE1;
use hulthen_core::{BoundState, QuantumNumbers};
use rayon::prelude::*;

use crate::args::RunConfig;
use crate::failure::{CmdResult, Failure};
use crate::output::{self, fixed, sci, write_err};

const RADIAL_TOL: f64 = 5e-3;
const ANGULAR_TOL: f64 = 1e-3;
const ANGULAR_POINTS: usize = 5000;
const NORM_TOL: f64 = 1e-8;
const JACOBI_INTEGRAL_TOL: f64 = 1e-8;

struct Check {
    kind: &'static str,
    qn: Option<QuantumNumbers>,
    analytic: f64,
    oracle: f64,
    tolerance: f64,
    note: String,
}

impl Check {
    fn new(kind: &'static str, qn: Option<QuantumNumbers>, analytic: f64, oracle: f64, tolerance: f64) -> Self {
        Self {
            kind,
            qn,
            analytic,
            oracle,
            tolerance,
            note: String::new(),
        }
    }

    fn failed(kind: &'static str, qn: QuantumNumbers, analytic: f64, err: impl ToString) -> Self {
        Self {
            note: err.to_string().replace(',', ";"),
            ..Self::new(kind, Some(qn), analytic, f64::NAN, 0.0)
        }
    }

    fn defect(&self) -> f64 {
        (self.oracle - self.analytic).abs()
    }

    fn pass(&self) -> bool {
        self.note.is_empty() && self.defect() <= self.tolerance
    }
}

fn state_checks(state: &BoundState, grid: &Grid1D) -> Vec<Check> {
    let qn = state.qn;
    let mut checks = Vec::new();
    checks.push(match verify_state(state, grid) {
        Ok(rec) => {
            let mut c = Check::new("radial", Some(qn), rec.analytic_energy, rec.oracle_energy, RADIAL_TOL);
            if rec.nodes != qn.n as usize {
                c.note = format!("eigenvector has {} nodes", rec.nodes);
            }
            c
        }
        Err(e) => Check::failed("radial", qn, state.energy, e),
    });
    let k = qn.n_tilde as usize + 1;
    checks.push(
        match angular_fd_spectrum(&state.spec, state.energy, qn.m, ANGULAR_POINTS, k) {
            Ok(w) => Check::new("angular", Some(qn), state.angular.lambda, w[k - 1], ANGULAR_TOL),
            Err(e) => Check::failed("angular", qn, state.angular.lambda, e),
        },
    );
    checks.push(match quadrature_norm(state) {
        Ok(n) => Check::new("norm", Some(qn), 1.0, n.integral, NORM_TOL),
        Err(e) => Check::failed("norm", qn, 1.0, e),
    });
    checks
}

pub fn run(cfg: &RunConfig) -> CmdResult {
    let grid = Grid1D::new(1e-4, 60.0, cfg.grid_points.unwrap_or(20_000))?;
    let qns: Vec<QuantumNumbers> = if cfg.qn_explicit {
        cfg.qns.clone()
    } else {
        TABLE1.iter().map(|r| r.qn).collect()
    };
    let scan = hulthen_core::ScanConfig {
        tol: cfg.scan.tol,
        ..Default::default()
    };
    let mut checks: Vec<Check> = qns
        .par_iter()
        .flat_map_iter(|&qn| {
            let outcome = find_bound_states(&cfg.spec, qn, &scan);
            outcome
                .positive()
                .flat_map(|s| state_checks(s, &grid))
                .collect::<Vec<_>>()
        })
        .collect();

    for (lam, eta, exact) in [(1.0, 0.0, 1.0 / 12.0), (0.5, -0.5, 0.5)] {
        let c = jacobi_integral_check(lam, eta, 0)?;
        checks.push(Check::new(
            "jacobi_integral",
            None,
            exact,
            c.lhs,
            JACOBI_INTEGRAL_TOL * exact,
        ));
        checks.push(Check::new(
            "jacobi_integral_closed_form",
            None,
            c.rhs,
            c.lhs,
            JACOBI_INTEGRAL_TOL * c.rhs,
        ));
    }
    if cfg.spec.alpha == 0.0 && cfg.spec.beta == 0.0 {
        let w = angular_fd_spectrum(&cfg.spec, 0.0, 0, ANGULAR_POINTS, 3)?;
        for (nt, (got, exact)) in w.iter().zip([2.0, 12.0, 30.0]).enumerate() {
            let qn = QuantumNumbers::new(0, nt as u32, 0);
            checks.push(Check::new("angular_free", Some(qn), exact, *got, ANGULAR_TOL));
        }
    }

    let mut out = output::open(cfg.out.as_deref())?;
    writeln!(out, "check,n,ntilde,m,analytic,oracle,defect,tolerance,pass,note").map_err(write_err)?;
    for c in &checks {
        let (n, nt, m) = c.qn.map_or((String::new(), String::new(), String::new()), |q| {
            (q.n.to_string(), q.n_tilde.to_string(), q.m.to_string())
        });
        writeln!(
            out,
            "{},{n},{nt},{m},{},{},{},{},{},{}",
            c.kind,
            fixed(c.analytic),
            fixed(c.oracle),
            sci(c.defect()),
            sci(c.tolerance),
            c.pass(),
            c.note
        )
        .map_err(write_err)?;
    }
    out.flush().map_err(write_err)?;

    let failed: Vec<&Check> = checks.iter().filter(|c| !c.pass()).collect();
    let worst_radial = checks
        .iter()
        .filter(|c| c.kind == "radial")
        .map(Check::defect)
        .fold(0.0, f64::max);
    eprintln!(
        "verify: {} checks, {} failed; max radial |E_fd - E| = {} on {} points",
        checks.len(),
        failed.len(),
        sci(worst_radial),
        grid.n_points
    );
    if failed.is_empty() {
        Ok(())
    } else {
        let names: Vec<String> = failed
            .iter()
            .map(|c| format!("{} {}", c.kind, c.qn.map(|q| q.to_string()).unwrap_or_default()))
            .collect();
        Err(Failure::Verification(names.join(", ")))
    }
}
