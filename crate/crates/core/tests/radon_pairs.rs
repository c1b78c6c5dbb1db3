//! Cross-representation checks between closed forms: the line integral of a
//! Wigner function against the matching tomogram.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symtomo::shutter::ShutterState;
use symtomo::transforms::{radon_forward, InverseRadon, InverseRadonConfig, LineGrids};
use symtomo::{FockState, GaussianState, Grid1D, Tomogram};

#[test]
fn shutter_wigner_integrates_to_its_tomogram() {
    let lines = LineGrids::symmetric(60.0, 240_001).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut n = 0;
    while n < 12 {
        let t: f64 = rng.random_range(0.5..3.0);
        let (x, mu, nu): (f64, f64, f64) = (
            rng.random_range(-3.0..5.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        );
        if mu.abs() < 0.2 || mu * (mu * t + nu) <= 0.05 {
            continue;
        }
        let s = ShutterState::new(1.0, t).unwrap();
        let forward = radon_forward(&s, x, mu, nu, &lines).unwrap().value;
        let closed = s.eval(x, mu, nu).unwrap();
        assert!(
            (forward - closed).abs() < 2e-3,
            "t={t} ({x},{mu},{nu}): {forward} vs {closed}"
        );
        n += 1;
    }
}

#[test]
fn fock_states_round_trip() {
    let lines = LineGrids::symmetric(9.0, 1801).unwrap();
    for n in 0..4 {
        let f = FockState::new(n);
        for &(x, mu, nu) in &[(0.0, 1.0, 0.0), (0.9, 0.6, 0.8), (-1.4, -1.0, 0.3)] {
            let a = radon_forward(&f, x, mu, nu, &lines).unwrap().value;
            let b = f.eval(x, mu, nu).unwrap();
            assert!((a - b).abs() < 1e-8, "n={n} ({x},{mu},{nu}): {a} vs {b}");
        }
    }
}

#[test]
fn regularization_bias_shrinks_with_epsilon() {
    let g = GaussianState::ground();
    let at = |eps: f64| {
        let cfg = InverseRadonConfig {
            regularization: eps,
            x_count: 128,
            mu_count: 128,
            nu_count: 128,
            ..Default::default()
        };
        (InverseRadon::new(&g, &cfg).unwrap().eval(0.0, 0.0).unwrap() - 2.0).abs()
    };
    let (e1, e2, e3) = (at(1e-2), at(1e-3), at(1e-4));
    assert!(e1 > e2 && e2 > e3, "{e1} {e2} {e3}");
    assert!(e3 < 2e-3);
}

#[test]
fn reconstructed_field_is_normalized() {
    let inv = InverseRadon::new(
        &GaussianState::coherent(0.5, -0.5),
        &InverseRadonConfig::default(),
    )
    .unwrap();
    let axis = Grid1D::symmetric(6.0, 121).unwrap();
    let field = inv.eval_grid(axis, axis).unwrap();
    assert!((field.integral().unwrap() - 2.0 * std::f64::consts::PI).abs() < 1e-2);
}
