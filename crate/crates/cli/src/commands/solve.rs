use std::io::Write;

use hulthen_core::radial::find_bound_states;
use hulthen_core::{BoundState, ScanOutcome};
use rayon::prelude::*;

use crate::args::RunConfig;
use crate::failure::CmdResult;
use crate::output::{self, fixed, write_err};

pub const HEADER: &str = "n,ntilde,m,alpha,beta,E,branch,l_eff,lambda,sqrt_eps,A_nl";

pub fn row(s: &BoundState) -> String {
    format!(
        "{},{},{},{},{},{},{:+},{},{},{},{}",
        s.qn.n,
        s.qn.n_tilde,
        s.qn.m,
        s.spec.alpha,
        s.spec.beta,
        fixed(s.energy),
        s.branch.sign(),
        fixed(s.angular.l_eff),
        fixed(s.angular.lambda),
        fixed(s.sqrt_eps),
        s.a_nl.map(fixed).unwrap_or_default(),
    )
}

pub fn run(cfg: &RunConfig) -> CmdResult {
    let outcomes: Vec<ScanOutcome> = cfg
        .qns
        .par_iter()
        .map(|&qn| find_bound_states(&cfg.spec, qn, &cfg.scan))
        .collect();
    let mut out = output::open(cfg.out.as_deref())?;
    writeln!(out, "{HEADER}").map_err(write_err)?;
    for (qn, outcome) in cfg.qns.iter().zip(&outcomes) {
        for s in &outcome.states {
            writeln!(out, "{}", row(s)).map_err(write_err)?;
        }
        for w in &outcome.warnings {
            writeln!(out, "# {qn}: skipped [{}, {}]: {}", fixed(w.lo), fixed(w.hi), w.error).map_err(write_err)?;
        }
    }
    out.flush().map_err(write_err)?;
    Ok(())
}
