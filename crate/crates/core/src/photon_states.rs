//! Linearly polarized photon states and their reduced helicity density
//! matrices.
//!
//! A state `|g, φ, n⃗⟩` has both helicities `λ = ±1` with amplitudes
//! `e^{iλφ} g(|k⃗|)/√2` along the fixed direction `n⃗`. Under a Lorentz
//! transformation it stays linearly polarized: the direction goes to `n⃗′`,
//! the angle to `φ + ψ(A, n⃗)` and the profile to
//! `g′(x) = (2/a) g(2x/a)`.
//!
//! Density matrices are indexed in the helicity basis `(+1, −1)`.
//! Entropies are in nats.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::little_group::{abc_coefficients, closed_form_little_group, Tolerances};
use crate::mat2::Mat2;
use crate::minkowski::{is_null, minkowski_dot, FourVector, UnitDirection};
use crate::quadrature::QuadratureRule;
use crate::spinor_cover::SpinorTransform;
use crate::{Error, Result, C64};

/// Tolerance for the [`DensityMatrix2`] invariants.
pub const DENSITY_TOLERANCE: f64 = 1e-10;

/// Photon helicity; `λ = 0` does not occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub const BOTH: [Helicity; 2] = [Helicity::Plus, Helicity::Minus];

    pub fn value(self) -> f64 {
        match self {
            Helicity::Plus => 1.0,
            Helicity::Minus => -1.0,
        }
    }

    /// Row/column in the density matrix.
    pub fn index(self) -> usize {
        match self {
            Helicity::Plus => 0,
            Helicity::Minus => 1,
        }
    }
}

/// Reduces an angle to `[0, π)`.
pub fn wrap_pol_angle(phi: f64) -> f64 {
    let w = phi.rem_euclid(PI);
    if w >= PI {
        0.0
    } else {
        w
    }
}

/// Sampled spectral amplitude `g(x)`, `x = |k⃗| > 0`, on a strictly
/// increasing grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralProfile {
    grid: Vec<f64>,
    amplitudes: Vec<C64>,
    rule: QuadratureRule,
}

impl SpectralProfile {
    pub fn new(grid: Vec<f64>, amplitudes: Vec<C64>, rule: QuadratureRule) -> Result<Self> {
        if grid.len() != amplitudes.len() {
            return Err(Error::BadProfile("grid and amplitude lengths differ"));
        }
        if grid.len() < 2 {
            return Err(Error::BadProfile("at least two samples are required"));
        }
        if !grid.iter().all(|x| x.is_finite() && *x > 0.0) {
            return Err(Error::BadProfile("grid points must be finite and positive"));
        }
        if !grid.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::BadProfile("grid must be strictly increasing"));
        }
        if !amplitudes.iter().all(|z| z.is_finite()) {
            return Err(Error::BadProfile("amplitudes must be finite"));
        }
        Ok(SpectralProfile { grid, amplitudes, rule })
    }

    /// Samples `f` on `grid`.
    pub fn from_fn(grid: Vec<f64>, rule: QuadratureRule, f: impl Fn(f64) -> C64) -> Result<Self> {
        let amplitudes = grid.iter().map(|&x| f(x)).collect();
        Self::new(grid, amplitudes, rule)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn rule(&self) -> QuadratureRule {
        self.rule
    }

    pub fn samples(&self) -> impl Iterator<Item = (f64, C64)> + '_ {
        self.grid.iter().copied().zip(self.amplitudes.iter().copied())
    }

    pub fn weights(&self) -> Vec<f64> {
        self.rule.weights(&self.grid)
    }

    /// `∫ 2x |g(x)|² dx`.
    pub fn invariant_norm(&self) -> f64 {
        self.weights()
            .iter()
            .zip(self.samples())
            .map(|(w, (x, g))| w * 2.0 * x * g.norm_sqr())
            .sum()
    }

    /// Rescales amplitudes so that [`Self::invariant_norm`] is 1.
    pub fn normalized(&self) -> Result<Self> {
        let norm = self.invariant_norm();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::ZeroState);
        }
        let s = 1.0 / norm.sqrt();
        Ok(SpectralProfile {
            grid: self.grid.clone(),
            amplitudes: self.amplitudes.iter().map(|g| g * s).collect(),
            rule: self.rule,
        })
    }

    /// `g′(x) = (2/a) g(2x/a)`, sampled on the image grid `x ↦ (a/2)x` so
    /// that no interpolation is involved.
    pub fn rescaled(&self, a: f64) -> Self {
        let half = 0.5 * a;
        SpectralProfile {
            grid: self.grid.iter().map(|x| x * half).collect(),
            amplitudes: self.amplitudes.iter().map(|g| g / half).collect(),
            rule: self.rule,
        }
    }
}

/// Linearly polarized state `|g, φ, n⃗⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolarizedState {
    direction: UnitDirection,
    pol_angle: f64,
    profile: SpectralProfile,
}

impl PolarizedState {
    /// The angle is reduced modulo π and the profile normalised.
    pub fn new(direction: UnitDirection, pol_angle: f64, profile: SpectralProfile) -> Result<Self> {
        let n2 = direction.dot(&direction);
        if !((n2 - 1.0).abs() <= UnitDirection::UNIT_TOLERANCE) {
            return Err(Error::BadAxis(n2.sqrt()));
        }
        if !pol_angle.is_finite() {
            return Err(Error::BadPhase(pol_angle));
        }
        Ok(PolarizedState {
            direction,
            pol_angle: wrap_pol_angle(pol_angle),
            profile: profile.normalized()?,
        })
    }

    pub fn direction(&self) -> UnitDirection {
        self.direction
    }

    pub fn pol_angle(&self) -> f64 {
        self.pol_angle
    }

    pub fn profile(&self) -> &SpectralProfile {
        &self.profile
    }

    /// Helicity amplitudes on the sampled momenta `x n⃗`, with measure
    /// weights `2x·w_i` from the profile's quadrature rule.
    pub fn amplitude_field(&self) -> Result<HelicityAmplitudeField> {
        let n = self.direction;
        let weights = self.profile.weights();
        let mut momenta = Vec::with_capacity(weights.len());
        let mut measure = Vec::with_capacity(weights.len());
        let mut plus = Vec::with_capacity(weights.len());
        let mut minus = Vec::with_capacity(weights.len());
        let ep = C64::from_polar(FRAC_1_SQRT_2, self.pol_angle);
        let em = C64::from_polar(FRAC_1_SQRT_2, -self.pol_angle);
        for (w, (x, g)) in weights.iter().zip(self.profile.samples()) {
            momenta.push(FourVector::null(x, n));
            measure.push(2.0 * x * w);
            plus.push(ep * g);
            minus.push(em * g);
        }
        HelicityAmplitudeField::new(momenta, measure, plus, minus)
    }
}

/// Sampled helicity amplitudes `f_λ(k)` on a shared set of null momenta.
#[derive(Clone, Debug, PartialEq)]
pub struct HelicityAmplitudeField {
    momenta: Vec<FourVector>,
    weights: Vec<f64>,
    amplitudes: [Vec<C64>; 2],
}

impl HelicityAmplitudeField {
    pub fn new(momenta: Vec<FourVector>, weights: Vec<f64>, plus: Vec<C64>, minus: Vec<C64>) -> Result<Self> {
        let n = momenta.len();
        if n == 0 || weights.len() != n || plus.len() != n || minus.len() != n {
            return Err(Error::BadProfile("field arrays must be non-empty and of equal length"));
        }
        if !weights.iter().all(|w| w.is_finite() && *w > 0.0) {
            return Err(Error::BadProfile("measure weights must be positive"));
        }
        if !plus.iter().chain(&minus).all(|z| z.is_finite()) {
            return Err(Error::BadProfile("amplitudes must be finite"));
        }
        Ok(HelicityAmplitudeField {
            momenta,
            weights,
            amplitudes: [plus, minus],
        })
    }

    pub fn momenta(&self) -> &[FourVector] {
        &self.momenta
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn amplitudes(&self, h: Helicity) -> &[C64] {
        &self.amplitudes[h.index()]
    }
}

/// `Σ_λ (1/√2) e^{iλφ} |k, λ⟩` as a single-sample field with unit weight.
pub fn monochromatic_state(k: &FourVector, phi: f64) -> Result<HelicityAmplitudeField> {
    if !is_null(k, Tolerances::default().null) {
        return Err(Error::NotNull {
            dot: minkowski_dot(k, k),
            t: k.t,
        });
    }
    HelicityAmplitudeField::new(
        vec![*k],
        vec![1.0],
        vec![C64::from_polar(FRAC_1_SQRT_2, phi)],
        vec![C64::from_polar(FRAC_1_SQRT_2, -phi)],
    )
}

/// Hermitian, unit-trace, positive semidefinite 2×2 matrix in the helicity
/// basis `(+1, −1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix2(Mat2);

impl DensityMatrix2 {
    pub fn new(m: Mat2) -> Result<Self> {
        let rho = DensityMatrix2(m);
        rho.validate(DENSITY_TOLERANCE)?;
        Ok(rho)
    }

    /// `½ [[1, e^{2iφ}], [e^{−2iφ}, 1]]`.
    pub fn linear_polarization(phi: f64) -> Self {
        let half = C64::new(0.5, 0.0);
        DensityMatrix2(Mat2::new(
            half,
            C64::from_polar(0.5, 2.0 * phi),
            C64::from_polar(0.5, -2.0 * phi),
            half,
        ))
    }

    pub fn maximally_mixed() -> Self {
        DensityMatrix2(Mat2::IDENTITY * 0.5)
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn get(&self, row: Helicity, col: Helicity) -> C64 {
        self.0.get(row.index(), col.index())
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let m = &self.0;
        let (p, q) = (m.get(0, 0).re, m.get(1, 1).re);
        let mean = 0.5 * (p + q);
        let off = 0.5 * (m.get(0, 1).norm() + m.get(1, 0).norm());
        let r = (0.5 * (p - q)).hypot(off);
        [mean - r, mean + r]
    }

    /// `‖ρ² − ρ‖_max`.
    pub fn purity_defect(&self) -> f64 {
        (self.0 * self.0).max_abs_diff(&self.0)
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        let herm = self.0.hermiticity_defect();
        if !(herm <= tol) {
            return Err(Error::NotHermitian(herm));
        }
        let tr = self.0.trace();
        let [lo, hi] = self.eigenvalues();
        if !((tr - 1.0).norm() <= tol && lo >= -tol && hi <= 1.0 + tol) {
            return Err(Error::BadProfile("not a unit-trace positive semidefinite matrix"));
        }
        Ok(())
    }
}

/// `ρ_{σλ} = Σ w f_σ f_λ* / Σ_λ Σ w |f_λ|²`.
pub fn reduced_density(f: &HelicityAmplitudeField) -> Result<DensityMatrix2> {
    let [plus, minus] = &f.amplitudes;
    let mut pp = 0.0;
    let mut mm = 0.0;
    let mut pm = C64::new(0.0, 0.0);
    for ((w, fp), fm) in f.weights.iter().zip(plus).zip(minus) {
        pp += w * fp.norm_sqr();
        mm += w * fm.norm_sqr();
        pm += fp * fm.conj() * *w;
    }
    let norm = pp + mm;
    if !(norm > 0.0 && norm.is_finite()) {
        return Err(Error::ZeroState);
    }
    Ok(DensityMatrix2(Mat2::new(
        C64::new(pp / norm, 0.0),
        pm / norm,
        pm.conj() / norm,
        C64::new(mm / norm, 0.0),
    )))
}

/// `diag(e^{iψ}, e^{−iψ}) ρ diag(e^{−iψ}, e^{iψ})` with `e^{iψ} = h²`.
pub fn transform_density(rho: &DensityMatrix2, half_phase: C64) -> Result<DensityMatrix2> {
    let modulus = half_phase.norm();
    if !((modulus - 1.0).abs() <= DENSITY_TOLERANCE) {
        return Err(Error::BadPhase(modulus));
    }
    let e = half_phase * half_phase;
    let d = Mat2::diag(e, e.inv());
    let m = d * rho.0 * d.adjoint();
    Ok(DensityMatrix2((m + m.adjoint()) * 0.5))
}

/// `−Σ λ ln λ` over the eigenvalues, in nats, with `0 ln 0 = 0`.
pub fn von_neumann_entropy(rho: &DensityMatrix2) -> f64 {
    rho.eigenvalues()
        .iter()
        .filter(|l| **l > 0.0)
        .map(|l| -l * l.ln())
        .sum()
}

/// `|g, φ, n⃗⟩ ↦ |g′, φ + ψ(A, n⃗), n⃗′⟩`.
pub fn transform_state(a: &SpinorTransform, s: &PolarizedState) -> Result<PolarizedState> {
    let tol = Tolerances::default();
    let n = s.direction;
    let elem = closed_form_little_group(a, &FourVector::null(1.0, n))?;
    let abc = abc_coefficients(a, &n);
    let up = 2.0 * abc.b / abc.a;
    if !(up > tol.pole) {
        return Err(Error::SouthPoleSingularity(up));
    }
    let np = abc.c * (2.0 / abc.a);
    let direction = UnitDirection::normalize(np.re, np.im, up - 1.0)?;
    Ok(PolarizedState {
        direction,
        pol_angle: wrap_pol_angle(s.pol_angle + elem.psi()),
        profile: s.profile.rescaled(abc.a),
    })
}
