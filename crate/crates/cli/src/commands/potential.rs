use std::f64::consts::PI;
use std::io::Write;

use hulthen_core::model::potential_value;

use crate::args::PotentialArgs;
use crate::failure::{CmdResult, Failure};
use crate::output::{self, fixed, sci, write_err};

pub fn run(args: &PotentialArgs) -> CmdResult {
    let cfg = args.common.resolve()?;
    if args.r_points == 0 || args.theta_points == 0 || !(args.r_max > 0.0) {
        return Err(Failure::config("need r-max > 0 and non-empty r and theta grids"));
    }
    let mut out = output::open(cfg.out.as_deref())?;
    writeln!(out, "r,theta,V").map_err(write_err)?;
    // Excludes r = 0 and the polar axis, where the ring term is singular.
    for i in 1..=args.r_points {
        let r = args.r_max * i as f64 / args.r_points as f64;
        for j in 0..args.theta_points {
            let theta = PI * (j as f64 + 0.5) / args.theta_points as f64;
            let v = potential_value(&cfg.spec, r, theta)?;
            writeln!(out, "{},{},{}", fixed(r), fixed(theta), sci(v)).map_err(write_err)?;
        }
    }
    out.flush().map_err(write_err)?;
    Ok(())
}
