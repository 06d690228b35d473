use lchaos_core::lyapunov::{lyapunov_exponent, sweep_grid, LyapunovStatus};
use lchaos_core::maps::{Escape, MapSpec};
use lchaos_core::orbit::{iterate_orbit, DEFAULT_ITERATIONS, DEFAULT_TRANSIENT, DEFAULT_X0};
use lchaos_core::roots::{guess_sweep, newton_solve, Stability};
use lchaos_core::ParamRange;
use proptest::prelude::*;

// Central difference with a step scaled to the distance from x = 0 and from
// the log pole at x = 1.
fn central_difference(spec: &MapSpec, x: f64) -> Option<f64> {
    let h = 1e-5 * x.min((x - 1.0).abs());
    let hi = spec.eval(x + h).ok()?;
    let lo = spec.eval(x - h).ok()?;
    Some((hi - lo) / (2.0 * h))
}

fn l_map_point() -> impl Strategy<Value = (f64, f64, f64)> {
    (0.0f64..12.0, 0.0f64..10.0, -4.5f64..4.5)
        .prop_map(|(c, alpha, log_x)| (c, alpha, log_x.exp()))
        .prop_filter("away from the pole", |&(_, _, x)| (x - 1.0).abs() >= 1e-3)
}

proptest! {
    #[test]
    fn odd_derivative_matches_differences((c, alpha, x) in l_map_point()) {
        let spec = MapSpec::odd(c, alpha);
        if let (Ok(d), Some(fd)) = (spec.derivative(x), central_difference(&spec, x)) {
            prop_assert!(((d - fd) / d).abs() < 1e-5, "x={x} d={d} fd={fd}");
        }
    }

    #[test]
    fn even_derivative_matches_differences((c, alpha, x) in l_map_point(), eps in 1.01f64..20.0) {
        let spec = MapSpec::even(c, alpha).with_epsilon(eps);
        if let (Ok(d), Some(fd)) = (spec.derivative(x), central_difference(&spec, x)) {
            prop_assert!(((d - fd) / d).abs() < 1e-5, "x={x} d={d} fd={fd}");
        }
    }

    #[test]
    fn escaped_orbits_stop_recording(c in 0.0f64..20.0, alpha in 0.0f64..10.0, x0 in 0.05f64..5.0) {
        let spec = MapSpec::odd(c, alpha);
        let orbit = iterate_orbit(&spec, x0, 400, 50).unwrap();
        if let Some(e) = orbit.escape {
            prop_assert_eq!(orbit.total_iterations, e.step);
            prop_assert!(orbit.samples.len() <= e.step.saturating_sub(50));
        } else {
            prop_assert_eq!(orbit.samples.len(), 350);
        }
    }

    #[test]
    fn newton_roots_satisfy_tolerance(c in 0.0f64..1.0, alpha in 0.0f64..6.0, guess in 0.2f64..8.0) {
        let spec = MapSpec::odd(c, alpha);
        let rep = newton_solve(&spec, guess, 1e-10, 200).unwrap();
        match rep.root {
            Some(root) => {
                prop_assert!(rep.failure.is_none());
                prop_assert!((spec.eval(root).unwrap() - root).abs() <= 1e-10);
                prop_assert_eq!(rep.stability.is_some(), rep.derivative_at_root.is_some());
            }
            None => prop_assert!(rep.failure.is_some()),
        }
    }
}

#[test]
fn logistic_exponent_negative_until_first_doubling() {
    let rs = ParamRange::new(2.5, 3.4, 91).unwrap().values();
    for r in rs {
        let est = lyapunov_exponent(&MapSpec::logistic(r), 0.3, 100_000, 1_000).unwrap();
        if (r - 3.0).abs() < 1e-9 {
            assert!(est.lambda.abs() < 0.02, "r = 3: {}", est.lambda);
        } else {
            assert!(est.lambda < 0.0, "r = {r}: {}", est.lambda);
        }
    }
}

#[test]
fn newton_on_the_odd_map_finds_the_inverse_sqrt_fixed_point() {
    // c = 0: pi / sqrt(x) = x at x = pi^(2/3), where f' = -1/2
    let spec = MapSpec::odd(0.0, 0.0);
    let reports = guess_sweep(
        &spec,
        &ParamRange::new(2.0, 30.0, 15).unwrap().values(),
        1e-10,
        200,
    )
    .unwrap();
    let target = std::f64::consts::PI.powf(2.0 / 3.0);
    let converged: Vec<_> = reports.iter().filter(|r| r.root.is_some()).collect();
    assert!(!converged.is_empty());
    for rep in converged {
        assert!((rep.root.unwrap() - target).abs() < 1e-9);
        assert!((rep.derivative_at_root.unwrap() + 0.5).abs() < 1e-9);
        assert_eq!(rep.stability, Some(Stability::Stable));
    }
}

// The (c ~ 10.5, alpha in [3, 5]) window is where positive exponents are
// reported for these maps. Under the real-domain reading the orbit from
// x0 = 0.4 turns negative after one step, so every cell escapes.
#[test]
fn large_c_window_escapes_from_default_start() {
    let grid = sweep_grid(
        &MapSpec::odd(0.0, 0.0),
        ParamRange::new(10.007, 11.07, 5).unwrap(),
        ParamRange::new(3.0, 5.0, 5).unwrap(),
        DEFAULT_X0,
        DEFAULT_ITERATIONS,
        DEFAULT_TRANSIENT,
    )
    .unwrap();
    assert_eq!(grid.escaped_fraction(), 1.0);
    assert!(grid
        .cells
        .iter()
        .all(|e| e.status == LyapunovStatus::Escaped(1)));
    let orbit = iterate_orbit(&MapSpec::odd(10.5, 4.0), DEFAULT_X0, 10, 0).unwrap();
    assert!(orbit.samples[0] < 0.0);
    assert_eq!(orbit.escape.unwrap().reason, Escape::DomainViolation);
}
