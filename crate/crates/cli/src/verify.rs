//! Seeded property suites behind `photon-wigner verify`.
//!
//! Every suite draws from its own ChaCha stream derived from the seed and
//! the suite index, so results do not depend on which suites run.

use std::f64::consts::PI;

use photon_wigner::little_group::{closed_form_from_coefficients, little_group_matrix, Tolerances};
use photon_wigner::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Smallest `1 + n³` (for `k` and `Λk`) used by the random sweeps.
pub const POLE_MARGIN: f64 = 1e-6;

/// Deliberate corruption used to check that the suites can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Negate the coefficient `c` before evaluating the closed forms.
    FlipCoefficientSign,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub fault: Option<Fault>,
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum VerifyError {
    #[error("trials must be at least 1")]
    NoTrials,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub trials: usize,
    pub skipped: usize,
    pub errors: usize,
    pub failures: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.errors == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::passed)
    }
}

struct Tracker {
    outcome: SuiteOutcome,
}

impl Tracker {
    fn new(name: &str, tolerance: f64) -> Self {
        Tracker {
            outcome: SuiteOutcome {
                name: name.to_string(),
                trials: 0,
                skipped: 0,
                errors: 0,
                failures: 0,
                max_deviation: 0.0,
                tolerance,
            },
        }
    }

    fn record(&mut self, deviation: f64) {
        self.outcome.trials += 1;
        if deviation.is_nan() || deviation > self.outcome.tolerance {
            self.outcome.failures += 1;
        }
        if deviation.is_finite() {
            self.outcome.max_deviation = self.outcome.max_deviation.max(deviation);
        }
    }

    fn check<T>(&mut self, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(_) => {
                self.outcome.trials += 1;
                self.outcome.errors += 1;
                None
            }
        }
    }

    fn skip(&mut self) {
        self.outcome.skipped += 1;
    }
}

/// Complex Gaussian entries normalised to unit determinant; draws with
/// `|det| < 10⁻²` before normalisation are redrawn.
pub fn random_spinor(rng: &mut impl Rng) -> SpinorTransform {
    loop {
        let mut z = || {
            C64::new(
                rng.sample::<f64, _>(StandardNormal),
                rng.sample::<f64, _>(StandardNormal),
            ) * std::f64::consts::FRAC_1_SQRT_2
        };
        let m = Mat2::new(z(), z(), z(), z());
        if m.det().norm() >= 1e-2 {
            if let Ok(a) = SpinorTransform::normalized(m) {
                return a;
            }
        }
    }
}

/// Uniform on the sphere, at least [`POLE_MARGIN`] from the south pole.
pub fn random_direction(rng: &mut impl Rng) -> UnitDirection {
    loop {
        let n = UnitDirection::from_angles(rng.gen_range(-1.0f64..1.0).acos(), rng.gen_range(0.0..2.0 * PI));
        if n.pole_gap() >= POLE_MARGIN {
            return n;
        }
    }
}

/// Log-uniform frequency in `[10⁻³, 10³]`.
pub fn random_frequency(rng: &mut impl Rng) -> f64 {
    10f64.powf(rng.gen_range(-3.0..3.0))
}

pub fn random_null(rng: &mut impl Rng) -> FourVector {
    FourVector::null(random_frequency(rng), random_direction(rng))
}

/// Both `k` and `Λ(A)k` clear of the south pole.
pub fn regular(a: &SpinorTransform, n: &UnitDirection) -> bool {
    let abc = abc_coefficients(a, n);
    n.pole_gap() >= POLE_MARGIN && 2.0 * abc.b / abc.a >= POLE_MARGIN
}

fn rel(x: C64, y: C64) -> f64 {
    (x - y).norm() / y.norm().max(1.0)
}

fn max_entry(l: &LorentzMatrix) -> f64 {
    l.0.iter().flatten().fold(1.0f64, |m, v| m.max(v.abs()))
}

fn linear_grid(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

/// Gaussian, box and two-peak profiles on 2001-point grids.
pub fn reference_profiles() -> Vec<SpectralProfile> {
    let g = linear_grid(2001, 0.01, 5.0);
    let rule = QuadratureRule::Simpson;
    vec![
        SpectralProfile::from_fn(g.clone(), rule, |x| C64::new((-(x - 2.0).powi(2) / 0.3).exp(), 0.0)),
        SpectralProfile::from_fn(g.clone(), rule, |x| {
            C64::new(if (1.0..=3.0).contains(&x) { 1.0 } else { 0.0 }, 0.0)
        }),
        SpectralProfile::from_fn(g, rule, |x| {
            C64::new((-(x - 1.0).powi(2) / 0.05).exp(), 0.0) + C64::new(0.0, 0.6 * (-(x - 3.5).powi(2) / 0.1).exp())
        }),
    ]
    .into_iter()
    .map(|p| p.expect("reference profile"))
    .collect()
}

type Suite = fn(&mut ChaCha8Rng, usize, Option<Fault>) -> SuiteOutcome;

fn closed_form(a: &SpinorTransform, k: &FourVector, fault: Option<Fault>) -> Result<LittleGroupElement> {
    let mut abc = abc_coefficients(a, &direction_of(k)?);
    if fault == Some(Fault::FlipCoefficientSign) {
        abc.c = -abc.c;
    }
    closed_form_from_coefficients(a, k, &abc, &Tolerances::default())
}

fn dot_bilinear(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("minkowski.dot_symmetric_bilinear", 1e-12);
    let mut v = || FourVector::from_array(std::array::from_fn(|_| rng.gen_range(-10.0..10.0)));
    for _ in 0..trials {
        let (u, w, x) = (v(), v(), v());
        let s = u.t / 3.0;
        let sym = (minkowski_dot(&u, &w) - minkowski_dot(&w, &u)).abs();
        let lin = (minkowski_dot(&(s * u + w), &x) - s * minkowski_dot(&u, &x) - minkowski_dot(&w, &x)).abs();
        t.record(sym.max(lin / 1e3));
    }
    t.outcome
}

fn null_preservation(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("minkowski.null_preservation", 1e-10);
    for _ in 0..trials {
        let a = random_spinor(rng);
        let k = random_null(rng);
        let kp = apply_lorentz(&lorentz_of_spinor(&a), &k);
        let defect = minkowski_dot(&kp, &kp).abs() / (kp.t * kp.t);
        t.record(if kp.t > 0.0 { defect } else { f64::INFINITY });
    }
    t.outcome
}

fn parallelism(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("minkowski.parallelism", 1e-10);
    for _ in 0..trials {
        let a = random_spinor(rng);
        let n = random_direction(rng);
        let l = lorentz_of_spinor(&a);
        let (k1, k2) = (random_frequency(rng), random_frequency(rng));
        let d1 = t.check(direction_of(&apply_lorentz(&l, &FourVector::null(k1, n))));
        let d2 = t.check(direction_of(&apply_lorentz(&l, &FourVector::null(k2, n))));
        if let (Some(d1), Some(d2)) = (d1, d2) {
            t.record(d1.max_abs_diff(&d2));
        }
    }
    t.outcome
}

fn homomorphism(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("spinor_cover.homomorphism", 1e-11);
    for _ in 0..trials {
        let (a, b) = (random_spinor(rng), random_spinor(rng));
        let lhs = lorentz_of_spinor(&compose(&a, &b));
        let rhs = lorentz_of_spinor(&a) * lorentz_of_spinor(&b);
        t.record(lhs.max_abs_diff(&rhs) / max_entry(&lhs));
    }
    t.outcome
}

fn kernel(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("spinor_cover.kernel", 1e-14);
    for _ in 0..trials {
        let a = random_spinor(rng);
        let l = lorentz_of_spinor(&a);
        t.record(l.max_abs_diff(&lorentz_of_spinor(&a.negate())) / max_entry(&l));
    }
    t.outcome
}

fn covering_is_lorentz(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("spinor_cover.covering_is_proper_orthochronous", 1e-12);
    for _ in 0..trials {
        let l = lorentz_of_spinor(&random_spinor(rng));
        let scale = max_entry(&l).powi(2);
        let mut defect: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                let g: f64 = (0..4).map(|r| l.0[r][mu] * minkowski::METRIC[r] * l.0[r][nu]).sum();
                let e = if mu == nu { minkowski::METRIC[mu] } else { 0.0 };
                defect = defect.max((g - e).abs());
            }
        }
        let det = (l.determinant() - 1.0).abs();
        let proper = if l.0[0][0] >= 1.0 - 1e-12 { 0.0 } else { f64::INFINITY };
        t.record((defect / scale).max(det / scale.powi(2)).max(proper));
    }
    t.outcome
}

fn round_trip(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("spinor_cover.round_trip", 1e-14);
    for _ in 0..trials {
        let k = FourVector::from_array(std::array::from_fn(|_| rng.gen_range(-10.0..10.0)));
        let back = t.check(four_vector_from_hermitian(hermitian_from_four_vector(&k).matrix()));
        if let Some(back) = back {
            let dev = back
                .to_array()
                .iter()
                .zip(k.to_array())
                .map(|(x, y)| (x - y).abs() / y.abs().max(1.0))
                .fold(0.0, f64::max);
            t.record(dev);
        }
    }
    t.outcome
}

fn action_invariants(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("spinor_cover.action_preserves_hermiticity_and_det", 1e-12);
    for _ in 0..trials {
        let a = random_spinor(rng);
        let k = FourVector::from_array(std::array::from_fn(|_| rng.gen_range(-10.0..10.0)));
        let m = hermitian_from_four_vector(&k);
        let out = spinor_act(&a, &m);
        let scale = out.matrix().max_abs().max(1.0);
        let herm = out.matrix().hermiticity_defect() / scale;
        let det = (out.det() - m.det()).abs() / (scale * scale);
        t.record(herm.max(det));
    }
    t.outcome
}

fn rotation_boost_structure(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("spinor_cover.rotation_unitary_boost_hermitian", 1e-12);
    for _ in 0..trials {
        let n = random_direction(rng);
        let u = t.check(make_rotation(n, rng.gen_range(-4.0 * PI..4.0 * PI)));
        let v = rng.gen_range(0.0..0.99);
        let b = t.check(make_boost([v * n.x, v * n.y, v * n.z]));
        if let (Some(u), Some(b)) = (u, b) {
            let unitary = u.unitarity_defect().max((u.det() - 1.0).norm());
            let herm = b.matrix().hermiticity_defect().max((b.det() - 1.0).norm());
            let positive = if b.alpha().re > 0.0 && b.delta().re > 0.0 {
                0.0
            } else {
                f64::INFINITY
            };
            t.record(unitary.max(herm).max(positive));
        }
    }
    t.outcome
}

fn closed_vs_decomposition(rng: &mut ChaCha8Rng, trials: usize, fault: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("little_group.closed_form_vs_decomposition", 1e-10);
    for _ in 0..trials {
        let a = random_spinor(rng);
        let k = random_null(rng);
        if !regular(&a, &direction_of(&k).unwrap()) {
            t.skip();
            continue;
        }
        let d = t.check(wigner_decompose(&a, &k));
        let f = t.check(closed_form(&a, &k, fault));
        if let (Some(d), Some(f)) = (d, f) {
            t.record(rel(f.half_phase, d.half_phase).max(rel(f.translation, d.translation)));
        }
    }
    t.outcome
}

fn shape(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("little_group.shape", 1e-10);
    for _ in 0..trials {
        let a = random_spinor(rng);
        let n = random_direction(rng);
        if !regular(&a, &n) {
            t.skip();
            continue;
        }
        let k0 = random_frequency(rng);
        if let Some(s) = t.check(little_group_matrix(
            &a,
            &FourVector::null(k0, n),
            &Tolerances::default(),
        )) {
            let h = s.get(0, 0);
            // S₂₁ carries a factor k⁰ relative to the frequency-free core
            let lower = s.get(1, 0).norm() / k0.max(1.0);
            t.record(lower.max((h.norm() - 1.0).abs()).max((s.get(1, 1) - h.conj()).norm()));
        }
    }
    t.outcome
}

fn cocycle(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("little_group.cocycle", 1e-10);
    for _ in 0..trials {
        let (a1, a2) = (random_spinor(rng), random_spinor(rng));
        let k = random_null(rng);
        let a21 = compose(&a2, &a1);
        let n = direction_of(&k).unwrap();
        if !regular(&a1, &n) || !regular(&a21, &n) {
            t.skip();
            continue;
        }
        let Some(k1) = t.check(transform_null_momentum(&a1, &k)) else {
            continue;
        };
        let s1 = t.check(wigner_decompose(&a1, &k));
        let s2 = t.check(wigner_decompose(&a2, &k1));
        let s21 = t.check(wigner_decompose(&a21, &k));
        if let (Some(s1), Some(s2), Some(s21)) = (s1, s2, s21) {
            let prod = s2.matrix() * s1.matrix();
            let direct = s21.matrix();
            let dev = (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| rel(prod.get(i, j), direct.get(i, j)))
                .fold(0.0, f64::max);
            t.record(dev);
        }
    }
    t.outcome
}

fn frequency_independence(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("little_group.frequency_independence", 1e-10);
    for _ in 0..trials {
        let a = random_spinor(rng);
        let n = random_direction(rng);
        if !regular(&a, &n) {
            t.skip();
            continue;
        }
        let Some(base) = t.check(wigner_decompose(&a, &FourVector::null(1.0, n))) else {
            continue;
        };
        let mut dev: f64 = 0.0;
        for alpha in [1e-6, 1e-3, 1.0, 1e3, 1e6] {
            if let Some(s) = t.check(wigner_decompose(&a, &FourVector::null(alpha, n))) {
                dev = dev
                    .max((s.half_phase - base.half_phase).norm())
                    .max(rel(s.translation * alpha, base.translation));
            }
        }
        t.record(dev);
    }
    t.outcome
}

fn momentum_closed_form(rng: &mut ChaCha8Rng, trials: usize, fault: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("little_group.momentum_closed_form", 1e-11);
    for _ in 0..trials {
        let a = random_spinor(rng);
        let k = random_null(rng);
        let n = direction_of(&k).unwrap();
        let mut abc = abc_coefficients(&a, &n);
        if fault == Some(Fault::FlipCoefficientSign) {
            abc.c = -abc.c;
        }
        let closed = FourVector::new(
            0.5 * k.t * abc.a,
            k.t * abc.c.re,
            k.t * abc.c.im,
            k.t * (abc.b - 0.5 * abc.a),
        );
        let direct = apply_lorentz(&lorentz_of_spinor(&a), &k);
        let dev = closed
            .to_array()
            .iter()
            .zip(direct.to_array())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
            / direct.t.max(1.0);
        t.record(dev);
    }
    t.outcome
}

fn rotation_phase(rng: &mut ChaCha8Rng, trials: usize, fault: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("little_group.rotation_about_momentum", 1e-10);
    for _ in 0..trials {
        let n = random_direction(rng);
        let chi = rng.gen_range(0.0..2.0 * PI);
        let k = FourVector::null(random_frequency(rng), n);
        let Some(u) = t.check(make_rotation(n, chi)) else {
            continue;
        };
        if let Some(s) = t.check(closed_form(&u, &k, fault)) {
            t.record((s.phase() - C64::from_polar(1.0, chi)).norm().max(s.translation.norm()));
        }
    }
    t.outcome
}

fn z_rotation_phase(rng: &mut ChaCha8Rng, trials: usize, fault: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("little_group.rotation_about_z", 1e-10);
    for _ in 0..trials {
        let n = random_direction(rng);
        let chi = rng.gen_range(0.0..2.0 * PI);
        let k = FourVector::null(random_frequency(rng), n);
        let Some(u) = t.check(make_rotation(UnitDirection::Z, chi)) else {
            continue;
        };
        if let Some(s) = t.check(closed_form(&u, &k, fault)) {
            t.record((s.phase() - C64::from_polar(1.0, chi)).norm().max(s.translation.norm()));
        }
    }
    t.outcome
}

fn collinear_boost(rng: &mut ChaCha8Rng, trials: usize, fault: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("little_group.collinear_boost", 1e-10);
    for _ in 0..trials {
        let n = random_direction(rng);
        let v = rng.gen_range(-0.99..=0.99);
        let k = FourVector::null(random_frequency(rng), n);
        let Some(b) = t.check(make_boost([v * n.x, v * n.y, v * n.z])) else {
            continue;
        };
        if !regular(&b, &n) {
            t.skip();
            continue;
        }
        if let Some(s) = t.check(closed_form(&b, &k, fault)) {
            t.record((s.phase() - 1.0).norm().max(s.translation.norm()));
        }
    }
    t.outcome
}

fn z_boost_translation(rng: &mut ChaCha8Rng, trials: usize, fault: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("little_group.z_boost_translation", 1e-10);
    for _ in 0..trials {
        let n = random_direction(rng);
        let v = rng.gen_range(-0.99..0.99);
        if v == 0.0 {
            t.skip();
            continue;
        }
        let k0 = random_frequency(rng);
        let Some(b) = t.check(make_boost([0.0, 0.0, v])) else {
            continue;
        };
        if !regular(&b, &n) {
            t.skip();
            continue;
        }
        if let Some(s) = t.check(closed_form(&b, &FourVector::null(k0, n), fault)) {
            let z = n.n_minus() / (k0 * (1.0 / v - n.z));
            t.record((s.half_phase - 1.0).norm().max(rel(s.translation, z)));
        }
    }
    t.outcome
}

fn random_state(rng: &mut ChaCha8Rng, profiles: &[SpectralProfile]) -> PolarizedState {
    let p = profiles[rng.gen_range(0..profiles.len())].clone();
    PolarizedState::new(random_direction(rng), rng.gen_range(0.0..PI), p).expect("valid state")
}

fn random_boost(rng: &mut ChaCha8Rng, max_speed: f64) -> SpinorTransform {
    let e = random_direction(rng);
    let v = rng.gen_range(0.0..max_speed);
    make_boost([v * e.x, v * e.y, v * e.z]).expect("subluminal")
}

fn density_covariance(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("photon_states.density_covariance", 1e-9);
    let profiles = reference_profiles();
    for _ in 0..trials.min(200) {
        let s = random_state(rng, &profiles);
        let a = random_spinor(rng);
        if !regular(&a, &s.direction()) {
            t.skip();
            continue;
        }
        let Some(out) = t.check(transform_state(&a, &s)) else {
            continue;
        };
        let Some(h) = t.check(wigner_decompose(&a, &FourVector::null(1.0, s.direction()))) else {
            continue;
        };
        let before = t.check(s.amplitude_field().and_then(|f| reduced_density(&f)));
        let after = t.check(out.amplitude_field().and_then(|f| reduced_density(&f)));
        if let (Some(before), Some(after)) = (before, after) {
            if let Some(pred) = t.check(transform_density(&before, h.half_phase)) {
                t.record(after.matrix().max_abs_diff(pred.matrix()));
            }
        }
    }
    t.outcome
}

fn linear_polarization_sweep(
    rng: &mut ChaCha8Rng,
    trials: usize,
    mut t: Tracker,
    measure: fn(&DensityMatrix2) -> f64,
) -> SuiteOutcome {
    let profiles = reference_profiles();
    for _ in 0..trials.min(200) {
        let s = random_state(rng, &profiles);
        let a = random_spinor(rng);
        if !regular(&a, &s.direction()) {
            t.skip();
            continue;
        }
        let Some(out) = t.check(transform_state(&a, &s)) else {
            continue;
        };
        for state in [&s, &out] {
            if let Some(rho) = t.check(state.amplitude_field().and_then(|f| reduced_density(&f))) {
                t.record(measure(&rho));
            }
        }
    }
    t.outcome
}

fn purity(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    linear_polarization_sweep(
        rng,
        trials,
        Tracker::new("photon_states.purity", 1e-10),
        DensityMatrix2::purity_defect,
    )
}

fn zero_entropy(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    linear_polarization_sweep(
        rng,
        trials,
        Tracker::new("photon_states.zero_entropy", 1e-12),
        von_neumann_entropy,
    )
}

fn profile_norm(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("photon_states.profile_norm", 1e-8);
    let profiles = reference_profiles();
    for _ in 0..trials.min(200) {
        let s = random_state(rng, &profiles);
        let a = random_boost(rng, 0.9);
        if !regular(&a, &s.direction()) {
            t.skip();
            continue;
        }
        if let Some(out) = t.check(transform_state(&a, &s)) {
            t.record((out.profile().invariant_norm() - s.profile().invariant_norm()).abs());
        }
    }
    t.outcome
}

fn entropy_invariance(rng: &mut ChaCha8Rng, trials: usize, _: Option<Fault>) -> SuiteOutcome {
    let mut t = Tracker::new("photon_states.entropy_invariance", 1e-12);
    for _ in 0..trials {
        let p: f64 = rng.gen_range(0.0..1.0);
        let off = C64::from_polar(
            rng.gen_range(0.0..1.0) * (p * (1.0 - p)).sqrt(),
            rng.gen_range(0.0..2.0 * PI),
        );
        let Some(rho) = t.check(DensityMatrix2::new(Mat2::new(
            C64::new(p, 0.0),
            off,
            off.conj(),
            C64::new(1.0 - p, 0.0),
        ))) else {
            continue;
        };
        let h = C64::from_polar(1.0, rng.gen_range(0.0..4.0 * PI));
        if let Some(out) = t.check(transform_density(&rho, h)) {
            t.record((von_neumann_entropy(&out) - von_neumann_entropy(&rho)).abs());
        }
    }
    t.outcome
}

const SUITES: &[Suite] = &[
    dot_bilinear,
    null_preservation,
    parallelism,
    homomorphism,
    kernel,
    covering_is_lorentz,
    round_trip,
    action_invariants,
    rotation_boost_structure,
    closed_vs_decomposition,
    shape,
    cocycle,
    frequency_independence,
    momentum_closed_form,
    rotation_phase,
    z_rotation_phase,
    collinear_boost,
    z_boost_translation,
    density_covariance,
    purity,
    zero_entropy,
    profile_norm,
    entropy_invariance,
];

pub fn run_verify(cfg: &VerifyConfig) -> std::result::Result<VerifyReport, VerifyError> {
    if cfg.trials == 0 {
        return Err(VerifyError::NoTrials);
    }
    let suites = SUITES
        .iter()
        .enumerate()
        .map(|(i, suite)| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(i as u64 + 1);
            suite(&mut rng, cfg.trials, cfg.fault)
        })
        .collect();
    Ok(VerifyReport {
        seed: cfg.seed,
        trials: cfg.trials,
        suites,
    })
}
