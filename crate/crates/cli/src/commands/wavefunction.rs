use std::f64::consts::PI;
use std::io::Write;

use hulthen_core::oracle::quadrature_norm;
use hulthen_core::radial::{find_bound_states, total_wavefunction};
use hulthen_core::{Branch, Error};

use crate::args::WavefunctionArgs;
use crate::failure::{CmdResult, Failure};
use crate::output::{self, fixed, sci, write_err};

pub fn run(args: &WavefunctionArgs) -> CmdResult {
    let cfg = args.common.resolve()?;
    let [qn] = cfg.qns[..] else {
        return Err(Failure::config("wavefunction needs a single n, ntilde and m"));
    };
    if args.r_points < 2 || args.theta_points < 2 || !(args.r_max > 0.0) {
        return Err(Failure::config("need r-max > 0 and at least 2 r and theta points"));
    }
    let outcome = find_bound_states(&cfg.spec, qn, &cfg.scan);
    let state = match args.energy {
        Some(e) => outcome
            .states
            .iter()
            .min_by(|a, b| (a.energy - e).abs().total_cmp(&(b.energy - e).abs())),
        None => outcome.positive().next(),
    }
    .ok_or_else(|| Failure::Numeric(anyhow::anyhow!("no matching bound state for {qn}")))?;
    if state.branch == Branch::Negative {
        return Err(Error::NonNormalizableBranch(state.energy).into());
    }
    let wf = total_wavefunction(state)?;
    let norm = quadrature_norm(state)?;

    let mut out = output::open(cfg.out.as_deref())?;
    writeln!(out, "# {qn} E = {}", fixed(state.energy)).map_err(write_err)?;
    writeln!(out, "r,U").map_err(write_err)?;
    for i in 0..args.r_points {
        let r = args.r_max * (i as f64 / (args.r_points - 1) as f64);
        writeln!(out, "{},{}", fixed(r), sci(wf.radial.eval(r))).map_err(write_err)?;
    }
    writeln!(out, "theta,Theta").map_err(write_err)?;
    for i in 0..args.theta_points {
        let theta = PI * (i as f64 / (args.theta_points - 1) as f64);
        writeln!(out, "{},{}", fixed(theta), sci(wf.theta.eval(theta))).map_err(write_err)?;
    }
    writeln!(out, "# A_nl = {}", fixed(wf.radial.norm)).map_err(write_err)?;
    writeln!(out, "# norm = {}", fixed(norm.integral)).map_err(write_err)?;
    out.flush().map_err(write_err)?;
    Ok(())
}
