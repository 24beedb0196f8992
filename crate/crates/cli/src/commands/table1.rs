use std::io::Write;

use hulthen_core::radial::find_bound_states;
use hulthen_core::table1::{SUSPECT_RING_ROWS, TABLE1};
use hulthen_core::{BoundState, Branch, PotentialSpec};
use rayon::prelude::*;

use crate::args::RunConfig;
use crate::failure::CmdResult;
use crate::output::{self, fixed, sci, write_err};

/// Printed cells further than this from every computed root are reported
/// as contradicted rather than as solver defects.
const CONTRADICTION: f64 = 1e-3;

fn nearest(states: &[BoundState], branch: Branch, e: f64) -> Option<&BoundState> {
    states
        .iter()
        .filter(|s| s.branch == branch)
        .min_by(|a, b| (a.energy - e).abs().total_cmp(&(b.energy - e).abs()))
}

pub fn run(cfg: &RunConfig) -> CmdResult {
    let sets = [(1.0, 1.0), (0.0, 0.0)];
    let jobs: Vec<(usize, usize)> = (0..sets.len())
        .flat_map(|s| (0..TABLE1.len()).map(move |r| (s, r)))
        .collect();
    let results: Vec<Vec<BoundState>> = jobs
        .par_iter()
        .map(|&(s, r)| {
            let spec = PotentialSpec::reference(sets[s].0, sets[s].1);
            find_bound_states(&spec, TABLE1[r].qn, &cfg.scan).states
        })
        .collect();

    let mut out = output::open(cfg.out.as_deref())?;
    writeln!(out, "n,ntilde,m,alpha,beta,column,E,E_printed,abs_dE,branch,flag").map_err(write_err)?;
    let mut worst_positive: f64 = 0.0;
    let mut worst_negative: f64 = 0.0;
    for (&(s, r), states) in jobs.iter().zip(&results) {
        let row = &TABLE1[r];
        let (alpha, beta) = sets[s];
        let printed = if s == 0 { row.ring } else { row.hulthen };
        let suspect = s == 0 && SUSPECT_RING_ROWS.contains(&row.qn);
        for (column, branch, e_printed) in [("E1", Branch::Negative, printed.0), ("E2", Branch::Positive, printed.1)] {
            let q = row.qn;
            match nearest(states, branch, e_printed) {
                Some(st) => {
                    let d = (st.energy - e_printed).abs();
                    let flag = if suspect && d > CONTRADICTION {
                        "contradicts_printed"
                    } else {
                        ""
                    };
                    if flag.is_empty() {
                        match branch {
                            Branch::Positive => worst_positive = worst_positive.max(d),
                            Branch::Negative => worst_negative = worst_negative.max(d),
                        }
                    }
                    writeln!(
                        out,
                        "{},{},{},{alpha},{beta},{column},{},{},{},{:+},{flag}",
                        q.n,
                        q.n_tilde,
                        q.m,
                        fixed(st.energy),
                        fixed(e_printed),
                        sci(d),
                        st.branch.sign()
                    )
                    .map_err(write_err)?;
                }
                None => writeln!(
                    out,
                    "{},{},{},{alpha},{beta},{column},,{},,,missing",
                    q.n,
                    q.n_tilde,
                    q.m,
                    fixed(e_printed)
                )
                .map_err(write_err)?,
            }
        }
    }
    writeln!(out, "# max abs_dE, branch-positive cells: {}", sci(worst_positive)).map_err(write_err)?;
    writeln!(out, "# max abs_dE, branch-negative cells: {}", sci(worst_negative)).map_err(write_err)?;
    out.flush().map_err(write_err)?;
    Ok(())
}
