use std::f64::consts::PI;

use photon_wigner::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn grid(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn profiles() -> Vec<(&'static str, SpectralProfile)> {
    let g = grid(2001, 0.01, 5.0);
    let rule = QuadratureRule::Simpson;
    vec![
        (
            "gaussian",
            SpectralProfile::from_fn(g.clone(), rule, |x| C64::new((-(x - 2.0).powi(2) / 0.3).exp(), 0.0)).unwrap(),
        ),
        (
            "box",
            SpectralProfile::from_fn(g.clone(), rule, |x| {
                C64::new(if (1.0..=3.0).contains(&x) { 1.0 } else { 0.0 }, 0.0)
            })
            .unwrap(),
        ),
        (
            "two-peak",
            SpectralProfile::from_fn(g, rule, |x| {
                C64::new((-(x - 1.0).powi(2) / 0.05).exp(), 0.0) + C64::new(0.0, 0.6 * (-(x - 3.5).powi(2) / 0.1).exp())
            })
            .unwrap(),
        ),
    ]
}

fn random_direction(rng: &mut impl Rng) -> UnitDirection {
    loop {
        let n = UnitDirection::from_angles(rng.gen_range(-1.0f64..1.0).acos(), rng.gen_range(0.0..2.0 * PI));
        if n.pole_gap() > 1e-3 {
            return n;
        }
    }
}

#[test]
fn linear_polarization_density_is_profile_independent() {
    let phi = 1.1;
    let expected = DensityMatrix2::linear_polarization(phi);
    for (name, p) in profiles() {
        let s = PolarizedState::new(UnitDirection::normalize(1.0, 2.0, 2.0).unwrap(), phi, p).unwrap();
        let rho = reduced_density(&s.amplitude_field().unwrap()).unwrap();
        assert!(rho.matrix().max_abs_diff(expected.matrix()) < 1e-12, "{name}");
        assert!(rho.purity_defect() < 1e-12, "{name}");
        assert!(von_neumann_entropy(&rho) < 1e-12, "{name}");
    }
}

#[test]
fn equal_helicity_profiles_give_phi_zero_density() {
    let p = &profiles()[0].1;
    let s = PolarizedState::new(UnitDirection::Z, 0.0, p.clone()).unwrap();
    let rho = reduced_density(&s.amplitude_field().unwrap()).unwrap();
    let half = C64::new(0.5, 0.0);
    assert!(rho.matrix().max_abs_diff(&Mat2::new(half, half, half, half)) < 1e-14);
}

#[test]
fn density_covariance_and_norm_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let profiles = profiles();
    let mut checked = 0;
    while checked < 60 {
        let (name, p) = &profiles[checked % profiles.len()];
        let n = random_direction(&mut rng);
        let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-0.5..0.5));
        let rot = make_rotation(random_direction(&mut rng), rng.gen_range(0.0..2.0 * PI)).unwrap();
        let a = compose(&rot, &make_boost(v).unwrap());
        let s = PolarizedState::new(n, rng.gen_range(0.0..PI), p.clone()).unwrap();
        let Ok(t) = transform_state(&a, &s) else { continue };

        let half = wigner_decompose(&a, &FourVector::null(1.0, n)).unwrap().half_phase;
        let before = reduced_density(&s.amplitude_field().unwrap()).unwrap();
        let after = reduced_density(&t.amplitude_field().unwrap()).unwrap();
        let predicted = transform_density(&before, half).unwrap();
        assert!(after.matrix().max_abs_diff(predicted.matrix()) < 1e-9, "{name}");
        assert!(
            (t.profile().invariant_norm() - s.profile().invariant_norm()).abs() < 1e-8,
            "{name}"
        );

        // direction agrees with the momentum transform
        let kp = transform_null_momentum(&a, &FourVector::null(2.0, n)).unwrap();
        assert!(direction_of(&kp).unwrap().max_abs_diff(&t.direction()) < 1e-12);
        checked += 1;
    }
}
