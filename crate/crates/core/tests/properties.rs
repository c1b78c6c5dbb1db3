use proptest::prelude::*;
use symtomo::evolution::{evolve, EvolutionKind};
use symtomo::quantumness::check_normalization;
use symtomo::specfun::fresnel;
use symtomo::symplectic::{apply_canonical, compose, frame_matrix, SymplecticMatrix};
use symtomo::{integrate_1d, GaussianState, Grid1D, Tomogram};

fn symplectic() -> impl Strategy<Value = SymplecticMatrix> {
    (0.5f64..2.0, -3.0f64..3.0, -3.0f64..3.0).prop_map(|(s, a, b)| {
        compose(&SymplecticMatrix::rotation(a), &frame_matrix(s, b).unwrap()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn fresnel_is_odd_and_bounded(w in -50.0f64..50.0) {
        let a = fresnel(w).unwrap();
        let b = fresnel(-w).unwrap();
        prop_assert_eq!(a.c, -b.c);
        prop_assert_eq!(a.s, -b.s);
        prop_assert!(a.c.abs() < 0.9 && a.s.abs() < 0.9);
    }

    #[test]
    fn integration_is_linear(vals in prop::collection::vec(-10.0f64..10.0, 5..40), k in -3.0f64..3.0) {
        let g = Grid1D::new(-1.0, 2.0, vals.len()).unwrap();
        let scaled: Vec<f64> = vals.iter().map(|v| k * v + 1.0).collect();
        let lhs = integrate_1d(&scaled, &g).unwrap();
        let rhs = k * integrate_1d(&vals, &g).unwrap() + 3.0;
        prop_assert!((lhs - rhs).abs() < 1e-10 * (1.0 + lhs.abs()));
    }

    #[test]
    fn gaussian_tomograms_are_homogeneous(
        x in -3.0f64..3.0, mu in -2.0f64..2.0, nu in 0.1f64..2.0, lambda in 0.1f64..5.0,
    ) {
        let g = GaussianState::new(0.3, -0.2, 0.7, 0.1, 0.8).unwrap();
        let a = lambda * g.eval(lambda * x, lambda * mu, lambda * nu).unwrap();
        let b = g.eval(x, mu, nu).unwrap();
        prop_assert!((a - b).abs() < 1e-12 * (1.0 + b));
    }

    #[test]
    fn compositions_stay_symplectic(m1 in symplectic(), m2 in symplectic()) {
        let m = compose(&m1, &m2).unwrap();
        prop_assert!((m.det() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn canonical_action_preserves_normalization(m in symplectic(), theta in 0.0f64..std::f64::consts::PI) {
        let w = apply_canonical(GaussianState::coherent(0.5, 0.2), m);
        let (s, c) = theta.sin_cos();
        let (m1, m2) = m.act(c, s);
        let r = m1.hypot(m2);
        let xr = Grid1D::symmetric(12.0 * r.max(1.0), 4001).unwrap();
        prop_assert!(check_normalization(&w, c, s, &xr).unwrap() < 1e-6);
    }

    #[test]
    fn flows_preserve_normalization(t in -4.0f64..4.0, theta in 0.0f64..std::f64::consts::PI, free in any::<bool>()) {
        let kind = if free { EvolutionKind::Free } else { EvolutionKind::Oscillator };
        let w = evolve(GaussianState::coherent(-0.4, 0.9), kind, t).unwrap();
        let (s, c) = theta.sin_cos();
        let xr = Grid1D::symmetric(40.0, 8001).unwrap();
        prop_assert!(check_normalization(&w, c, s, &xr).unwrap() < 1e-6);
    }
}
