//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::time::{Duration, Instant};

use hulthen_core::angular::{lambda_of, theta_wavefunction};
use hulthen_core::oracle::{
    angular_fd_spectrum, find_bracket, jacobi_integral_check, quadrature_norm, radial_ode_residual,
    selfconsistent_energy, theta_ode_residual, verify_state, Grid1D,
};
use hulthen_core::radial::{
    energy_residual, find_bound_states, nonrel_energy, nonrel_energy_hulthen, normalization_ground_beta,
    radial_normalization, radial_ode, radial_wavefunction,
};
use hulthen_core::specfn::{jacobi_p, jacobi_p_hypergeometric, jacobi_p_recurrence, JacobiParams};
use hulthen_core::sweep::{sweep_values, track_root, SweepParam};
use hulthen_core::table1::{Table1Row, SUSPECT_RING_ROWS, TABLE1};
use hulthen_core::{BoundState, Branch, PotentialSpec, QuantumNumbers, ScanConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TABLE_TOL: f64 = 1e-6;
const TABLE_TIME: Duration = Duration::from_secs(5);
const ORACLE_TOL: f64 = 5e-3;
const ORACLE_RATIO: (f64, f64) = (3.5, 4.5);
const ORACLE_TIME: Duration = Duration::from_secs(120);
const ANGULAR_TOL: f64 = 1e-3;
const ANGULAR_POINTS: usize = 5000;
const NORM_TOL: f64 = 1e-8;
const BETA_TOL: f64 = 1e-12;
const JACOBI_TOL: f64 = 1e-10;
const JACOBI_INTEGRAL_TOL: f64 = 1e-8;
const NONREL_TOL: f64 = 1e-14;
const ODE_TOL: f64 = 1e-6;
/// A flagged printed cell must miss its computed value by at least this.
const CONTRADICTION: f64 = 1e-3;

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: u32, ok: bool, summary: String) {
        if !ok {
            self.failures += 1;
        }
        println!("criterion {id}: {} {summary}", if ok { "PASS" } else { "FAIL" });
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Set {
    Ring,
    Hulthen,
}

impl Set {
    fn spec(self) -> PotentialSpec {
        match self {
            Set::Ring => PotentialSpec::reference(1.0, 1.0),
            Set::Hulthen => PotentialSpec::reference(0.0, 0.0),
        }
    }

    fn printed(self, row: &Table1Row) -> (f64, f64) {
        match self {
            Set::Ring => row.ring,
            Set::Hulthen => row.hulthen,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Set::Ring => "alpha=beta=1",
            Set::Hulthen => "alpha=beta=0",
        }
    }

    fn suspect(self, qn: QuantumNumbers) -> bool {
        self == Set::Ring && SUSPECT_RING_ROWS.contains(&qn)
    }
}

const SETS: [Set; 2] = [Set::Ring, Set::Hulthen];

/// Computed roots for one table cell.
struct Cell {
    set: Set,
    row: Table1Row,
    states: Vec<BoundState>,
}

impl Cell {
    fn nearest(&self, e: f64) -> Option<&BoundState> {
        self.states
            .iter()
            .min_by(|a, b| (a.energy - e).abs().total_cmp(&(b.energy - e).abs()))
    }

    fn positive(&self) -> Vec<&BoundState> {
        self.states.iter().filter(|s| s.branch == Branch::Positive).collect()
    }

    fn negative(&self) -> Vec<&BoundState> {
        self.states.iter().filter(|s| s.branch == Branch::Negative).collect()
    }
}

fn solve_table() -> Vec<Cell> {
    let scan = ScanConfig::default();
    let mut cells = Vec::new();
    for set in SETS {
        let spec = set.spec();
        for row in TABLE1 {
            let out = find_bound_states(&spec, row.qn, &scan);
            cells.push(Cell {
                set,
                row,
                states: out.states,
            });
        }
    }
    cells
}

/// A printed value that misses every computed root and does not satisfy
/// the energy equation.
fn contradicted(cell: &Cell, printed: f64) -> bool {
    let spec = cell.set.spec();
    let miss = cell.states.iter().all(|s| (s.energy - printed).abs() > CONTRADICTION);
    let residual = energy_residual(&spec, cell.row.qn, printed)
        .map(f64::abs)
        .unwrap_or(f64::INFINITY);
    miss && residual > 1e-2
}

fn criterion_1(report: &mut Report, cells: &[Cell], elapsed: Duration) {
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    let mut flagged = Vec::new();
    for c in cells {
        let printed = c.set.printed(&c.row).1;
        let pos = c.positive();
        if pos.len() != 1 {
            bad.push(format!("{} {}: {} positive roots", c.row.qn, c.set.label(), pos.len()));
            continue;
        }
        let d = (pos[0].energy - printed).abs();
        if c.set.suspect(c.row.qn) {
            if contradicted(c, printed) {
                flagged.push(format!(
                    "{} {} printed {printed:.9} computed {:.9}",
                    c.row.qn,
                    c.set.label(),
                    pos[0].energy
                ));
            } else if d > TABLE_TOL {
                bad.push(format!("{} {}: |dE| = {d:.3e}", c.row.qn, c.set.label()));
            }
            continue;
        }
        worst = worst.max(d);
        if d > TABLE_TOL {
            bad.push(format!("{} {}: |dE| = {d:.3e}", c.row.qn, c.set.label()));
        }
    }
    let ok = bad.is_empty() && elapsed < TABLE_TIME;
    report.line(
        1,
        ok,
        format!(
            "E2 column: max |dE| = {worst:.3e} (tol {TABLE_TOL:e}), {:.2?} (limit {TABLE_TIME:?}); flagged: [{}]{}",
            elapsed,
            flagged.join("; "),
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {}", bad.join("; "))
            }
        ),
    );
}

fn criterion_2(report: &mut Report, cells: &[Cell]) {
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    let mut flagged = Vec::new();
    for c in cells {
        let (e1, e2) = c.set.printed(&c.row);
        let neg = c.negative();
        if neg.len() != 1 || c.positive().len() != 1 {
            bad.push(format!("{} {}: {} roots", c.row.qn, c.set.label(), c.states.len()));
            continue;
        }
        if c.set.suspect(c.row.qn) && contradicted(c, e1) {
            flagged.push(format!(
                "{} {} printed {e1:.9} computed {:.9}",
                c.row.qn,
                c.set.label(),
                neg[0].energy
            ));
            continue;
        }
        let s1 = c.nearest(e1).unwrap();
        let s2 = c.nearest(e2).unwrap();
        let d = (s1.energy - e1).abs();
        worst = worst.max(d);
        if d > TABLE_TOL {
            bad.push(format!("{} {}: |dE1| = {d:.3e}", c.row.qn, c.set.label()));
        }
        if s1.branch != Branch::Negative || s2.branch != Branch::Positive {
            bad.push(format!("{} {}: branch misclassified", c.row.qn, c.set.label()));
        }
    }
    report.line(
        2,
        bad.is_empty(),
        format!(
            "E1 column: max |dE| = {worst:.3e} (tol {TABLE_TOL:e}), all E1 on branch -1 and E2 on +1; flagged: [{}]{}",
            flagged.join("; "),
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {}", bad.join("; "))
            }
        ),
    );
}

fn criterion_3(report: &mut Report, cells: &[Cell]) {
    let start = Instant::now();
    let grid = Grid1D::radial_default();
    let fine = grid.refined();
    let mut worst: f64 = 0.0;
    let (mut rmin, mut rmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut bad = Vec::new();
    let mut count = 0;
    for c in cells {
        for s in c.positive() {
            count += 1;
            let label = format!("{} {}", c.row.qn, c.set.label());
            match (verify_state(s, &grid), verify_state(s, &fine)) {
                (Ok(a), Ok(b)) => {
                    worst = worst.max(a.defect);
                    let ratio = a.defect / b.defect;
                    rmin = rmin.min(ratio);
                    rmax = rmax.max(ratio);
                    if a.defect > ORACLE_TOL {
                        bad.push(format!("{label}: defect {:.3e}", a.defect));
                    }
                    if !(ORACLE_RATIO.0..=ORACLE_RATIO.1).contains(&ratio) {
                        bad.push(format!("{label}: ratio {ratio:.3}"));
                    }
                    if a.nodes != c.row.qn.n as usize {
                        bad.push(format!("{label}: {} nodes", a.nodes));
                    }
                }
                (Err(e), _) | (_, Err(e)) => bad.push(format!("{label}: {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < ORACLE_TIME && count == 30;
    report.line(
        3,
        ok,
        format!(
            "{count} positive-branch states: max |E_fd - E| = {worst:.3e} (tol {ORACLE_TOL:e}) on [1e-4, 60] x 20000, \
             defect ratio under doubling in [{rmin:.4}, {rmax:.4}], {elapsed:.2?} (limit {ORACLE_TIME:?}){}",
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {}", bad.join("; "))
            }
        ),
    );

    // The negative-branch root of (1,1,1) is not expected in the discrete
    // spectrum; report what the closure finds near it.
    let spec = Set::Ring.spec();
    let qn = QuantumNumbers::new(1, 1, 1);
    let e1 = TABLE1[4].ring.0;
    let note = match selfconsistent_energy(&spec, qn, &grid, (e1 - 0.01, e1 + 0.01)) {
        Ok(sc) => format!("closure root {:.9} near E1 = {e1}", sc.energy),
        Err(e) => format!("no closure root within 0.01 of E1 = {e1} ({e})"),
    };
    let wide = find_bracket(&spec, qn, &grid, e1, 0.01)
        .and_then(|b| selfconsistent_energy(&spec, qn, &grid, b))
        .map(|sc| format!("widened bracket converges to {:.9}", sc.energy))
        .unwrap_or_else(|e| e.to_string());
    println!("criterion 3 info: (1,1,1) alpha=beta=1 negative branch: {note}; {wide}");
}

fn criterion_4(report: &mut Report, cells: &[Cell]) {
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    let mut checks = 0;
    for c in cells {
        let qn = c.row.qn;
        if qn.n_tilde > 2 || qn.m > 1 {
            continue;
        }
        let spec = c.set.spec();
        for s in &c.states {
            let k = qn.n_tilde as usize + 1;
            match angular_fd_spectrum(&spec, s.energy, qn.m, ANGULAR_POINTS, k) {
                Ok(w) => {
                    let exact = lambda_of(&spec, s.energy, qn).unwrap().lambda;
                    let d = (w[k - 1] - exact).abs();
                    worst = worst.max(d);
                    checks += 1;
                    if d > ANGULAR_TOL {
                        bad.push(format!("{qn} {} E={:.6}: {d:.3e}", c.set.label(), s.energy));
                    }
                }
                Err(e) => bad.push(format!("{qn} {}: {e}", c.set.label())),
            }
        }
    }
    let spectrum = angular_fd_spectrum(&Set::Hulthen.spec(), -4.720283669, 0, ANGULAR_POINTS, 3).unwrap();
    let dev = spectrum
        .iter()
        .zip([2.0, 12.0, 30.0])
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if dev > ANGULAR_TOL {
        bad.push(format!("alpha=beta=0 spectrum {spectrum:?}"));
    }
    report.line(
        4,
        bad.is_empty(),
        format!(
            "{checks} (state, energy) pairs: max |lambda_fd - lambda| = {worst:.3e}; alpha=beta=0 spectrum \
             [{:.5}, {:.5}, {:.5}] (tol {ANGULAR_TOL:e}){}",
            spectrum[0],
            spectrum[1],
            spectrum[2],
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {}", bad.join("; "))
            }
        ),
    );
}

fn criterion_5(report: &mut Report, cells: &[Cell]) {
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    for c in cells {
        for s in c.positive() {
            match quadrature_norm(s) {
                Ok(n) => {
                    worst = worst.max((n.integral - 1.0).abs());
                    if (n.integral - 1.0).abs() > NORM_TOL || n.tail > 1e-10 {
                        bad.push(format!(
                            "{} {}: {:.12} tail {:.1e}",
                            c.row.qn,
                            c.set.label(),
                            n.integral,
                            n.tail
                        ));
                    }
                }
                Err(e) => bad.push(format!("{} {}: {e}", c.row.qn, c.set.label())),
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst_beta: f64 = 0.0;
    for _ in 0..20 {
        let l = rng.gen_range(0.0..6.0);
        let se = rng.gen_range(0.05..25.0);
        let a = rng.gen_range(0.5..20.0);
        let x = radial_normalization(0, l, se, a).unwrap();
        let y = normalization_ground_beta(l, se, a).unwrap();
        worst_beta = worst_beta.max((x - y).abs() / y);
    }
    if worst_beta > BETA_TOL {
        bad.push(format!("ground-state routes differ by {worst_beta:.2e}"));
    }
    report.line(
        5,
        bad.is_empty(),
        format!(
            "max |norm - 1| = {worst:.2e} (tol {NORM_TOL:e}); n=0 closed forms on 20 random triples: max rel gap {worst_beta:.2e} (tol {BETA_TOL:e}){}",
            if bad.is_empty() { String::new() } else { format!("; failures: {}", bad.join("; ")) }
        ),
    );
}

fn criterion_6(report: &mut Report) {
    const EXPONENTS: [f64; 4] = [-0.5, 0.5, 1.0, 2.7];
    let grid: Vec<f64> = (0..=40).map(|i| -1.0 + i as f64 / 20.0).collect();
    let mut worst: f64 = 0.0;
    for n in 0..=10u32 {
        for a in EXPONENTS {
            for b in EXPONENTS {
                let p = JacobiParams::new(n, a, b).unwrap();
                let q = JacobiParams::new(n, b, a).unwrap();
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let sup = grid
                    .iter()
                    .map(|&x| jacobi_p_recurrence(p, x).abs())
                    .fold(0.0, f64::max);
                for &x in &grid {
                    let rec = jacobi_p_recurrence(p, x);
                    let mut gap = (jacobi_p(p, x) - rec)
                        .abs()
                        .max((sign * jacobi_p_recurrence(q, -x) - rec).abs());
                    if x >= 0.0 {
                        gap = gap.max((jacobi_p_hypergeometric(p, x) - rec).abs());
                    }
                    worst = worst.max(gap / sup);
                }
            }
        }
    }
    let b1 = jacobi_integral_check(1.0, 0.0, 0).unwrap();
    let b2 = jacobi_integral_check(0.5, -0.5, 0).unwrap();
    let e1 = (b1.lhs - 1.0 / 12.0).abs() * 12.0;
    let e2 = (b2.lhs - 0.5).abs() * 2.0;
    let closed = b1.relative_gap().max(b2.relative_gap());
    let ok =
        worst <= JACOBI_TOL && e1 <= JACOBI_INTEGRAL_TOL && e2 <= JACOBI_INTEGRAL_TOL && closed <= JACOBI_INTEGRAL_TOL;
    report.line(
        6,
        ok,
        format!(
            "Jacobi routes max rel gap {worst:.2e} (tol {JACOBI_TOL:e}); integral identity n=0: \
             |lhs - 1/12| rel {e1:.1e}, |lhs - 1/2| rel {e2:.1e}, closed form rel {closed:.1e} (tol {JACOBI_INTEGRAL_TOL:e})"
        ),
    );
    let b3 = jacobi_integral_check(1.0, 0.0, 1).unwrap();
    println!(
        "criterion 6 info: n=1, lambda=1, eta=0: third argument 1+2lambda gives rel gap {:.2e}, 2lambda+2 gives {:.2e}",
        b3.relative_gap(),
        b3.relative_gap_shifted()
    );
}

fn criterion_7(report: &mut Report) {
    let spec = Set::Hulthen.spec();
    let mut exact = true;
    for nt in 0..6u32 {
        for m in 0..6u32 {
            for e in [-4.99, -2.0, 0.0, 3.5] {
                let sol = lambda_of(&spec, e, QuantumNumbers::new(0, nt, m)).unwrap();
                exact &= sol.l_eff == (2 * nt + m + 1) as f64;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let spec = PotentialSpec::new(
            rng.gen_range(0.05..5.0),
            rng.gen_range(0.05..1.0),
            0.0,
            0.0,
            rng.gen_range(0.5..10.0),
        )
        .unwrap();
        let mu = rng.gen_range(0.1..10.0);
        let qn = QuantumNumbers::new(rng.gen_range(0..5), rng.gen_range(0..4), rng.gen_range(0..4));
        let l = (2 * qn.n_tilde + qn.m + 1) as f64;
        let a = nonrel_energy(mu, &spec, qn).unwrap();
        let b = nonrel_energy_hulthen(mu, &spec, qn.n, l);
        worst = worst.max((a - b).abs() / b.abs());
    }
    report.line(
        7,
        exact && worst <= NONREL_TOL,
        format!(
            "alpha=beta=0 gives l = 2ntilde+m+1 exactly: {exact}; ring-form vs Hulthen-form non-relativistic energy on 50 random sets: max rel gap {worst:.2e} (tol {NONREL_TOL:e})"
        ),
    );
}

fn monotone(values: &[f64], increasing: bool) -> bool {
    values
        .windows(2)
        .all(|w| if increasing { w[1] >= w[0] } else { w[1] <= w[0] })
}

fn criterion_8(report: &mut Report) {
    let scan = ScanConfig::default();
    let spec = Set::Ring.spec();
    let qn = QuantumNumbers::new(0, 0, 0);
    let mut summary = Vec::new();
    let mut ok = true;
    for (param, from, to, increasing) in [(SweepParam::V0, 1.0, 5.0, false), (SweepParam::Delta, 0.05, 0.4, true)] {
        let values = sweep_values(from, to, 50).unwrap();
        let pts = track_root(&spec, qn, param, &values, &scan);
        let lost = pts.iter().filter(|p| p.lost()).count();
        let energies: Vec<f64> = pts.iter().filter_map(|p| p.state.as_ref().map(|s| s.energy)).collect();
        let mono = monotone(&energies, increasing);
        ok &= lost == 0 && mono;
        summary.push(format!(
            "{param} in [{from}, {to}]: E from {:.6} to {:.6}, {} {}, {lost} lost",
            energies.first().copied().unwrap_or(f64::NAN),
            energies.last().copied().unwrap_or(f64::NAN),
            if increasing { "non-decreasing" } else { "non-increasing" },
            if mono { "holds" } else { "violated" },
        ));
    }
    report.line(
        8,
        ok,
        format!("50-point sweeps of (0,0,0) alpha=beta=1: {}", summary.join("; ")),
    );
}

fn criterion_9(report: &mut Report, cells: &[Cell]) {
    let mut worst_theta: f64 = 0.0;
    let mut worst_u: f64 = 0.0;
    let mut bad = Vec::new();
    for c in cells {
        for s in c.positive() {
            let theta = theta_wavefunction(&s.angular).unwrap();
            let u = radial_wavefunction(s).unwrap();
            let ode = radial_ode(&s.radial, s.angular.lambda);
            for j in 0..20 {
                let x = (j as f64 + 0.5) / 20.0;
                worst_theta = worst_theta.max(theta_ode_residual(&theta, x * std::f64::consts::PI).relative());
                worst_u = worst_u.max(radial_ode_residual(&u, &ode, x).relative());
            }
            if worst_theta > ODE_TOL || worst_u > ODE_TOL {
                bad.push(format!("{} {}", c.row.qn, c.set.label()));
            }
        }
    }
    report.line(
        9,
        bad.is_empty(),
        format!(
            "20 interior points per state: max relative residual theta {worst_theta:.2e}, radial {worst_u:.2e} (tol {ODE_TOL:e}){}",
            if bad.is_empty() { String::new() } else { format!("; failures: {}", bad.join(", ")) }
        ),
    );
}

fn main() {
    // Honour `cargo test -- --list` and filters without running the suite twice.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let mut report = Report { failures: 0 };
    let start = Instant::now();
    let cells = solve_table();
    let elapsed = start.elapsed();
    criterion_1(&mut report, &cells, elapsed);
    criterion_2(&mut report, &cells);
    criterion_3(&mut report, &cells);
    criterion_4(&mut report, &cells);
    criterion_5(&mut report, &cells);
    criterion_6(&mut report);
    criterion_7(&mut report);
    criterion_8(&mut report);
    criterion_9(&mut report, &cells);
    println!("acceptance: {} of 9 criteria passed", 9 - report.failures);
    if report.failures > 0 {
        std::process::exit(1);
    }
}
