use std::io::Write;

use hulthen_core::sweep::{sweep_values, track_root, SweepPoint};
use rayon::prelude::*;

use crate::args::SweepArgs;
use crate::failure::CmdResult;
use crate::output::{self, fixed, write_err};

pub fn run(args: &SweepArgs) -> CmdResult {
    let cfg = args.common.resolve()?;
    let values = sweep_values(args.from, args.to, args.steps)?;
    let tracks: Vec<Vec<SweepPoint>> = cfg
        .qns
        .par_iter()
        .map(|&qn| track_root(&cfg.spec, qn, args.param, &values, &cfg.scan))
        .collect();
    let mut out = output::open(cfg.out.as_deref())?;
    writeln!(out, "param,value,n,ntilde,m,E,branch,l_eff,flag").map_err(write_err)?;
    for (i, value) in values.iter().enumerate() {
        for (qn, track) in cfg.qns.iter().zip(&tracks) {
            let p = &track[i];
            let (e, branch, l) = match &p.state {
                Some(s) => (
                    fixed(s.energy),
                    format!("{:+}", s.branch.sign()),
                    fixed(s.angular.l_eff),
                ),
                None => Default::default(),
            };
            let flag = if p.lost() {
                "lost"
            } else if p.reseeded {
                "reseeded"
            } else {
                ""
            };
            writeln!(
                out,
                "{},{value},{},{},{},{e},{branch},{l},{flag}",
                args.param, qn.n, qn.n_tilde, qn.m
            )
            .map_err(write_err)?;
        }
    }
    out.flush().map_err(write_err)?;
    Ok(())
}
