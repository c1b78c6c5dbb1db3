//! Acceptance criteria 1–13. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails. Run with `cargo test -p symtomo-cli --test acceptance`.

use std::f64::consts::{FRAC_PI_4, PI};
use std::path::Path;
use std::process::Command;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symtomo::evolution::{evolve_free, evolve_oscillator, pde_residual, EvolutionKind, Flow};
use symtomo::quad::integrate_real;
use symtomo::quantumness::{
    check_homogeneity, classify_state, entropic_quantumness, entropy_bound, ClassifyConfig, Verdict,
};
use symtomo::shutter::{self, ShutterParams, ShutterState};
use symtomo::specfun::{fresnel_c, fresnel_s, moshinsky_amplitude};
use symtomo::symplectic::{apply_canonical, SymplecticMatrix};
use symtomo::transforms::{
    density_matrix_from_tomogram, radon_forward, InverseRadon, InverseRadonConfig, LineGrids,
    WavefunctionTomogram, WavefunctionWigner,
};
use symtomo::{FockState, GaussianState, Grid1D, Tomogram};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Random shutter-tomogram point inside `mu (mu t + nu) > 0`.
fn shutter_point(rng: &mut ChaCha8Rng, t: f64) -> (f64, f64, f64) {
    loop {
        let (x, mu, nu): (f64, f64, f64) = (
            rng.random_range(-3.0..5.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        );
        if mu.abs() > 0.2 && mu * (mu * t + nu) > 0.05 {
            return (x, mu, nu);
        }
    }
}

fn c1_fresnel() -> Outcome {
    let mut worst: f64 = 0.0;
    let norm = (2.0 / PI).sqrt();
    for i in 0..200 {
        let w = -10.0 + 20.0 * i as f64 / 199.0;
        let c = norm * integrate_real(|y| (y * y).cos(), 0.0, w, 1e-13).map_err(err)?;
        let s = norm * integrate_real(|y| (y * y).sin(), 0.0, w, 1e-13).map_err(err)?;
        worst = worst
            .max((fresnel_c(w).map_err(err)? - c).abs())
            .max((fresnel_s(w).map_err(err)? - s).abs());
    }
    check(
        worst <= 1e-9,
        format!("max |C,S - quadrature| over 200 points = {worst:.2e} (tol 1e-9)"),
    )
}

fn c2_front() -> Outcome {
    let mut front: f64 = 0.0;
    let (mut ahead, mut behind): (f64, f64) = (0.0, 0.0);
    for (k, t) in [(1.0, 1.0), (1.0, 4.0), (2.0, 0.5)] {
        let p = ShutterParams::new(k, t).map_err(err)?;
        front = front.max((shutter::density(k * t, p).map_err(err)? - 0.25).abs());
        let d = 40.0 * f64::sqrt(t);
        ahead = ahead.max(shutter::density(k * t + d, p).map_err(err)?.abs());
        behind = behind.max((shutter::density(k * t - d, p).map_err(err)? - 1.0).abs());
    }
    check(
        front <= 1e-12 && ahead <= 1e-2 && behind <= 1e-2,
        format!(
            "front |n - 1/4| = {front:.1e} (tol 1e-12); ahead (+40 sqrt t) |n| = {ahead:.2e}; behind (-40 sqrt t) |n - 1| = {behind:.4} (tol 1e-2)"
        ),
    )
}

fn c3_amplitude_vs_density() -> Outcome {
    let mut worst: f64 = 0.0;
    for i in 0..10 {
        for j in 0..10 {
            let x = -5.0 + 20.0 * i as f64 / 9.0;
            let t = 0.5 + 4.5 * j as f64 / 9.0;
            let m = moshinsky_amplitude(x, 1.0, t).map_err(err)?;
            let n = shutter::density(x, ShutterParams::new(1.0, t).map_err(err)?).map_err(err)?;
            worst = worst.max((m.norm_sqr() - n).abs());
        }
    }
    check(
        worst <= 1e-6,
        format!("max ||M|^2 - density| on 10x10 (x, t) grid = {worst:.2e} (tol 1e-6)"),
    )
}

fn c4_shutter_radon() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let lines = LineGrids::symmetric(60.0, 240_001).map_err(err)?;
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let t = rng.random_range(0.5..3.0);
        let (x, mu, nu) = shutter_point(&mut rng, t);
        let state = ShutterState::new(1.0, t).map_err(err)?;
        let forward = radon_forward(&state, x, mu, nu, &lines).map_err(err)?.value;
        let closed = state.eval(x, mu, nu).map_err(err)?;
        worst = worst.max((forward - closed).abs());
    }
    check(
        worst <= 2e-3,
        format!("max |Radon(W) - closed-form tomogram| at 20 points = {worst:.2e} (tol 2e-3)"),
    )
}

fn c5_gaussian_radon_pair() -> Outcome {
    let g = GaussianState::ground();
    let inv = InverseRadon::new(&g, &InverseRadonConfig::default()).map_err(err)?;
    let w00 = inv.eval(0.0, 0.0).map_err(err)?;
    let w11 = inv.eval(1.0, 1.0).map_err(err)?;
    let axis = Grid1D::symmetric(6.0, 241).map_err(err)?;
    let field = inv.eval_grid(axis, axis).map_err(err)?;
    let lines = LineGrids::for_field(&field);
    let mut trip: f64 = 0.0;
    for &(x, mu, nu) in &[
        (0.0, 1.0, 0.0),
        (0.5, 0.0, 1.0),
        (-0.8, 0.6, 0.8),
        (1.2, 1.0, -1.0),
        (0.3, 0.4, 1.5),
    ] {
        let back = radon_forward(&field, x, mu, nu, &lines).map_err(err)?.value;
        trip = trip.max((back - g.eval(x, mu, nu).map_err(err)?).abs());
    }
    let (e00, e11) = ((w00 - 2.0).abs(), (w11 - 2.0 * (-2.0f64).exp()).abs());
    check(
        e00 <= 2e-3 && e11 <= 2e-3 && trip <= 5e-3,
        format!("|W(0,0) - 2| = {e00:.1e}, |W(1,1) - 2e^-2| = {e11:.1e} (tol 2e-3); round trip max {trip:.1e} (tol 5e-3)"),
    )
}

fn c6_route_equivalence() -> Outcome {
    let grid = Grid1D::symmetric(10.0, 1001).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    let states = [
        GaussianState::ground().wavefunction(grid).map_err(err)?,
        FockState::new(1).wavefunction(grid).map_err(err)?,
    ];
    for psi in &states {
        let direct = WavefunctionTomogram::new(psi).map_err(err)?;
        let wigner = WavefunctionWigner::new(psi).map_err(err)?;
        let lines = wigner.line_grids();
        for _ in 0..20 {
            let th = rng.random_range(0.0..PI);
            let r = rng.random_range(0.5..2.0);
            let (mu, nu) = (r * th.cos(), r * th.sin());
            let x = rng.random_range(-3.0..3.0);
            let a = direct.eval(x, mu, nu).map_err(err)?;
            let b = radon_forward(&wigner, x, mu, nu, &lines)
                .map_err(err)?
                .value;
            worst = worst.max((a - b).abs());
        }
    }
    check(
        worst <= 1e-6,
        format!("max |direct - Radon(Wigner)| over 2 states x 20 points = {worst:.2e} (tol 1e-6)"),
    )
}

fn c7_homogeneity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let shutter_pts: Vec<_> = (0..10).map(|_| shutter_point(&mut rng, 1.0)).collect();
    let gauss_pts: Vec<_> = (0..10)
        .map(|_| {
            (
                rng.random_range(-3.0..3.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
            )
        })
        .collect();
    let sh = ShutterState::new(1.0, 1.0).map_err(err)?;
    let g = GaussianState::coherent(0.4, -0.7);
    let mut worst: f64 = 0.0;
    for lambda in [0.5, 2.0] {
        worst = worst.max(check_homogeneity(&sh, &shutter_pts, lambda).map_err(err)?);
        worst = worst.max(check_homogeneity(&g, &gauss_pts, lambda).map_err(err)?);
    }
    check(
        worst <= 1e-12,
        format!("max |l w(lX, l mu, l nu) - w| for l in {{0.5, 2}} = {worst:.1e} (tol 1e-12)"),
    )
}

fn c8_free_flow() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let evolved = evolve_free(ShutterState::new(1.0, 1.0).map_err(err)?, 2.0).map_err(err)?;
    let target = ShutterState::new(1.0, 3.0).map_err(err)?;
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let (x, mu, nu) = shutter_point(&mut rng, 3.0);
        worst = worst.max(
            (evolved.eval(x, mu, nu).map_err(err)? - target.eval(x, mu, nu).map_err(err)?).abs(),
        );
    }
    check(
        worst <= 1e-12,
        format!("max |free(t=1 -> 3) - closed form at t=3| at 20 points = {worst:.1e} (tol 1e-12)"),
    )
}

fn c9_oscillator() -> Outcome {
    let w = GaussianState::coherent(1.0, 0.5);
    let flow = Flow::new(w, EvolutionKind::Oscillator);
    let p = (0.5, 1.0, 0.5, 0.7);
    let r1 = pde_residual(&flow, EvolutionKind::Oscillator, p, 1e-3).map_err(err)?;
    let r2 = pde_residual(&flow, EvolutionKind::Oscillator, p, 5e-4).map_err(err)?;
    let ratio = r1 / r2;
    let period = evolve_oscillator(w, 2.0 * PI).map_err(err)?;
    let mut id_err: f64 = 0.0;
    let mut rot_err: f64 = 0.0;
    let pts = [
        (0.3, 1.0, 0.5),
        (-1.2, -0.4, 0.9),
        (0.8, 0.0, 1.3),
        (2.0, 1.5, -0.2),
    ];
    for t in [0.4, 1.9, -2.6] {
        let a = evolve_oscillator(w, t).map_err(err)?;
        let b = apply_canonical(w, SymplecticMatrix::rotation(t));
        for &(x, mu, nu) in &pts {
            rot_err = rot_err
                .max((a.eval(x, mu, nu).map_err(err)? - b.eval(x, mu, nu).map_err(err)?).abs());
        }
    }
    for &(x, mu, nu) in &pts {
        id_err = id_err
            .max((period.eval(x, mu, nu).map_err(err)? - w.eval(x, mu, nu).map_err(err)?).abs());
    }
    check(
        (3.5..=4.5).contains(&ratio) && id_err <= 1e-12 && rot_err <= 1e-12,
        format!(
            "residual ratio {ratio:.3} (in [3.5, 4.5]; r(h=1e-3) = {r1:.1e}); |w(2pi) - w0| = {id_err:.1e}; |osc - rotation action| = {rot_err:.1e} (tol 1e-12)"
        ),
    )
}

fn c10_entropy() -> Outcome {
    let xr = Grid1D::symmetric(10.0, 2001).map_err(err)?;
    let bound = entropy_bound();
    let mut ground: f64 = 0.0;
    for th in [0.0, 0.3, FRAC_PI_4] {
        ground = ground.max(
            (entropic_quantumness(&GaussianState::ground(), th, &xr)
                .map_err(err)?
                .sum
                - bound)
                .abs(),
        );
    }
    let sq = entropic_quantumness(&GaussianState::squeezed(2.0).map_err(err)?, FRAC_PI_4, &xr)
        .map_err(err)?;
    let sq_err = (sq.sum - bound - 2.125f64.ln()).abs();
    let sub = entropic_quantumness(&GaussianState::isotropic(0.1).map_err(err)?, 0.0, &xr)
        .map_err(err)?;
    check(
        ground <= 1e-4 && sq_err <= 1e-3 && !sub.satisfied,
        format!(
            "ground |S - ln(pi e)| = {ground:.1e} (tol 1e-4); squeezed |S - ln(pi e) - ln 2.125| = {sq_err:.1e} (tol 1e-3); sub-Heisenberg S = {:.4} < {:.4}: {}",
            sub.sum,
            bound,
            !sub.satisfied
        ),
    )
}

fn c11_classification() -> Outcome {
    let base = ClassifyConfig::default();
    let fine = base.refined();
    let sub = GaussianState::isotropic(0.1).map_err(err)?;
    let mut verdicts = Vec::new();
    let mut stable = true;
    let mut details = Vec::new();
    for (name, w) in [
        (
            "ground",
            Box::new(GaussianState::ground()) as Box<dyn Tomogram>,
        ),
        ("excited1", Box::new(FockState::new(1))),
        ("subheisenberg", Box::new(sub)),
    ] {
        let r = classify_state(&w, &base).map_err(err)?;
        let rf = classify_state(&w, &fine).map_err(err)?;
        stable &= r.verdict == rf.verdict;
        details.push(format!("{name}: {} (refined {})", r.verdict, rf.verdict));
        verdicts.push(r);
    }
    let ok = verdicts[0].verdict == Verdict::Both
        && verdicts[1].verdict == Verdict::Quantum
        && (verdicts[1].wigner_min_value + 2.0).abs() <= 0.05
        && !verdicts[2].verdict.is_quantum()
        && verdicts[2].rho_min_eigenvalue < -verdicts[2].rho_tolerance
        && stable;
    check(
        ok,
        format!(
            "{}; excited1 W min = {:.4}; sub-Heisenberg rho min eigenvalue = {:.3}",
            details.join(", "),
            verdicts[1].wigner_min_value,
            verdicts[2].rho_min_eigenvalue
        ),
    )
}

fn c12_density_matrix() -> Outcome {
    let grid = Grid1D::symmetric(5.0, 64).map_err(err)?;
    let rho = density_matrix_from_tomogram(
        &GaussianState::ground(),
        grid,
        &InverseRadonConfig::default(),
    )
    .map_err(err)?;
    let psi: Vec<Complex64> = grid
        .points()
        .map(|x| Complex64::new(PI.powf(-0.25) * (-0.5 * x * x).exp(), 0.0))
        .collect();
    let trace = rho.trace();
    let herm = rho.hermiticity_defect();
    let min = rho.min_eigenvalue();
    let fid = rho.fidelity_with(&psi).map_err(err)?;
    check(
        (trace - 1.0).abs() <= 1e-3 && herm <= 1e-6 && min >= -1e-6 && fid >= 0.999,
        format!("trace {trace:.6}, Hermiticity defect {herm:.1e}, min eigenvalue {min:.1e}, fidelity {fid:.6}"),
    )
}

fn run_cli(dir: &Path, args: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_symtomo"))
        .arg("--out-dir")
        .arg(dir)
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn c13_cli() -> Outcome {
    let invocations: [&[&str]; 4] = [
        &[
            "shutter",
            "--k",
            "1",
            "--t",
            "4",
            "--repr",
            "density",
            "--x",
            "-10:30:401",
        ],
        &[
            "transform",
            "--dir",
            "iradon",
            "--state",
            "ground",
            "--q",
            "-1:1:5",
            "--p",
            "-1:1:5",
        ],
        &["check", "--state", "ground", "--theta", "0.3"],
        &[
            "evolve",
            "--state",
            "shutter:1,1",
            "--kind",
            "free",
            "--t",
            "2",
            "--probe",
            "X=0,mu=1,nu=0.5",
        ],
    ];
    let mut problems = Vec::new();
    for args in invocations {
        let (a, b) = (
            tempfile::tempdir().map_err(err)?,
            tempfile::tempdir().map_err(err)?,
        );
        let (ca, _) = run_cli(a.path(), args);
        let (cb, _) = run_cli(b.path(), args);
        if ca != Some(0) || cb != Some(0) {
            problems.push(format!("{} exited {ca:?}/{cb:?}", args[0]));
            continue;
        }
        let mut names: Vec<_> = std::fs::read_dir(a.path())
            .map_err(err)?
            .map(|e| e.unwrap().file_name())
            .collect();
        names.sort();
        for name in names {
            let x = std::fs::read(a.path().join(&name)).map_err(err)?;
            let y = std::fs::read(b.path().join(&name)).map_err(err)?;
            if x != y {
                problems.push(format!("{} differs between runs", name.to_string_lossy()));
            }
        }
    }
    let dir = tempfile::tempdir().map_err(err)?;
    let guarded: [(&[&str], i32, &str); 4] = [
        (
            &[
                "shutter", "--k", "1", "--t", "1", "--repr", "tomogram", "--mu", "1", "--nu", "-2",
                "--X", "0",
            ],
            2,
            "mu (mu t + nu) > 0",
        ),
        (
            &[
                "evolve",
                "--state",
                "ground",
                "--kind",
                "anharmonic",
                "--t",
                "1",
                "--probe",
                "X=0,mu=1,nu=0",
            ],
            2,
            "unsupported dynamics",
        ),
        (&["check", "--state", "subheisenberg:0.1"], 1, ""),
        (
            &[
                "transform",
                "--dir",
                "radon",
                "--input",
                "/nonexistent/field.csv",
            ],
            3,
            "",
        ),
    ];
    for (args, want, needle) in guarded {
        let (code, stderr) = run_cli(dir.path(), args);
        if code != Some(want) || !stderr.contains(needle) {
            problems.push(format!(
                "{} {}: exit {code:?} (want {want})",
                args[0], args[1]
            ));
        }
    }
    check(
        problems.is_empty(),
        if problems.is_empty() {
            "4 subcommands byte-identical across runs; exit codes 2, 2, 1, 3 on guarded inputs"
                .into()
        } else {
            problems.join("; ")
        },
    )
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("Fresnel oracle", c1_fresnel),
        ("shutter front value and limits", c2_front),
        ("Moshinsky amplitude vs density", c3_amplitude_vs_density),
        ("Radon of shutter Wigner vs tomogram", c4_shutter_radon),
        ("Radon pair on Gaussian", c5_gaussian_radon_pair),
        ("route equivalence", c6_route_equivalence),
        ("homogeneity", c7_homogeneity),
        ("free-flow exactness", c8_free_flow),
        ("oscillator flow", c9_oscillator),
        ("entropic inequality", c10_entropy),
        ("classification trichotomy", c11_classification),
        ("density-matrix reconstruction", c12_density_matrix),
        ("CLI determinism and exit codes", c13_cli),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let (tag, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {:>2} {tag} {name}: {detail} [{:.1}s]",
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
