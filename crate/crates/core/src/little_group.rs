//! Wigner little group for massless momenta.
//!
//! For a null momentum `k` the standard boost `A_k` carries `k̃ = (1,0,0,1)`
//! to `k`. The little-group element of `A` at `k` is
//! `S(A, k) = A_{Λk}⁻¹ A A_k`, which always has the shape
//! `[[e^{iψ/2}, z], [0, e^{−iψ/2}]]`. Physical helicity states only see
//! the phase `e^{iλψ}`; the translation `z` acts trivially on them.
//!
//! Two independent routes are provided: [`wigner_decompose`] forms the
//! matrix product directly, [`closed_form_little_group`] evaluates the
//! closed expressions in the coefficients `a`, `b`, `c` from
//! [`abc_coefficients`].
//!
//! `A_k` is undefined at the south pole `n = −ẑ`; inputs with
//! `1 + n³ ≤ pole` (for either `k` or `Λk`) fail with
//! [`Error::SouthPoleSingularity`].

use std::f64::consts::PI;

use crate::mat2::Mat2;
use crate::minkowski::{direction_of, is_null, minkowski_dot, FourVector, UnitDirection};
use crate::spinor_cover::{hermitian_from_four_vector, make_rotation, spinor_act, SpinorTransform};
use crate::{apply_lorentz, lorentz_of_spinor, Error, Result, C64};

/// Numerical thresholds used by the little-group routines.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Relative null tolerance, see [`crate::is_null`].
    pub null: f64,
    /// Smallest accepted `1 + n³`.
    pub pole: f64,
    /// Relative bound on the shape defects of `S`.
    pub shape: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            null: 1e-10,
            pole: 1e-12,
            shape: 1e-9,
        }
    }
}

/// `A_k = U_n B(k⁰)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StandardBoost(pub SpinorTransform);

impl StandardBoost {
    pub fn transform(&self) -> &SpinorTransform {
        &self.0
    }
}

/// Little-group element, stored as `(e^{iψ/2}, z)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LittleGroupElement {
    pub half_phase: C64,
    pub translation: C64,
}

impl LittleGroupElement {
    pub const IDENTITY: LittleGroupElement = LittleGroupElement {
        half_phase: C64::new(1.0, 0.0),
        translation: C64::new(0.0, 0.0),
    };

    /// `e^{iψ}`, the factor seen by helicity ±1 states (as `e^{±iψ}`).
    pub fn phase(&self) -> C64 {
        self.half_phase * self.half_phase
    }

    /// `ψ = 2 arg(e^{iψ/2})` wrapped to `[0, 2π)`.
    pub fn psi(&self) -> f64 {
        let psi = (2.0 * self.half_phase.arg()).rem_euclid(2.0 * PI);
        // rem_euclid can round up to exactly 2π
        if psi >= 2.0 * PI {
            0.0
        } else {
            psi
        }
    }

    /// `[[e^{iψ/2}, z], [0, e^{−iψ/2}]]`.
    pub fn matrix(&self) -> Mat2 {
        Mat2::new(
            self.half_phase,
            self.translation,
            C64::new(0.0, 0.0),
            self.half_phase.inv(),
        )
    }

    /// Group product in the E(2) cover: phases multiply, translations
    /// compose affinely.
    pub fn compose(&self, rhs: &LittleGroupElement) -> LittleGroupElement {
        let m = self.matrix() * rhs.matrix();
        LittleGroupElement {
            half_phase: m.get(0, 0),
            translation: m.get(0, 1),
        }
    }
}

/// The bilinear coefficients `a`, `b`, `c` of a transform at direction `n`.
/// For a null `k` along `n`: `k′⁰ = ½k⁰a`, `n′³ = 2b/a − 1`, `n′₊ = 2c/a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AbcCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: C64,
}

fn check_null(k: &FourVector, tol: f64) -> Result<()> {
    if !is_null(k, tol) {
        return Err(Error::NotNull {
            dot: minkowski_dot(k, k),
            t: k.t,
        });
    }
    Ok(())
}

fn check_pole(n: &UnitDirection, tol: f64) -> Result<()> {
    check_gap(n.pole_gap(), tol)
}

fn check_gap(gap: f64, tol: f64) -> Result<()> {
    if !(gap > tol) {
        return Err(Error::SouthPoleSingularity(gap));
    }
    Ok(())
}

fn boost_for(k0: f64, n: &UnitDirection) -> StandardBoost {
    let gap = n.pole_gap();
    let diag_top = (0.5 * k0 * gap).sqrt();
    let diag_bottom = (0.5 * gap / k0).sqrt();
    let inv_norm = 1.0 / (2.0 * k0 * gap).sqrt();
    StandardBoost(SpinorTransform::from_matrix_unchecked(Mat2::new(
        C64::new(diag_top, 0.0),
        -n.n_minus() * inv_norm,
        n.n_plus() * (k0 * inv_norm),
        C64::new(diag_bottom, 0.0),
    )))
}

pub fn standard_boost(k: &FourVector) -> Result<StandardBoost> {
    standard_boost_with(k, &Tolerances::default())
}

pub fn standard_boost_with(k: &FourVector, tol: &Tolerances) -> Result<StandardBoost> {
    check_null(k, tol.null)?;
    let n = direction_of(k)?;
    check_pole(&n, tol.pole)?;
    Ok(boost_for(k.t, &n))
}

pub fn abc_coefficients(a: &SpinorTransform, n: &UnitDirection) -> AbcCoefficients {
    // With μ = A (1 + n³, n₊)ᵀ the coefficients factor as a = |μ|²/(1 + n³),
    // b = |μ₁|²/(1 + n³), c = μ̄₁μ₂/(1 + n³); this avoids the cancellation
    // of the expanded quadratic forms when b is small.
    let up = n.pole_gap();
    let np = n.n_plus();
    let mu1 = a.alpha() * up + a.beta() * np;
    let mu2 = a.gamma() * up + a.delta() * np;
    let coef_a = (mu1.norm_sqr() + mu2.norm_sqr()) / up;
    let coef_b = mu1.norm_sqr() / up;
    let coef_c = mu1.conj() * mu2 / up;

    AbcCoefficients {
        a: coef_a,
        b: coef_b,
        c: coef_c,
    }
}

pub fn transform_null_momentum(a: &SpinorTransform, k: &FourVector) -> Result<FourVector> {
    transform_null_momentum_with(a, k, &Tolerances::default())
}

/// `k′ = k⁰ (a/2, Re c, Im c, b − a/2)`.
pub fn transform_null_momentum_with(a: &SpinorTransform, k: &FourVector, tol: &Tolerances) -> Result<FourVector> {
    check_null(k, tol.null)?;
    let n = direction_of(k)?;
    let abc = abc_coefficients(a, &n);
    let k0 = k.t;
    Ok(FourVector::new(
        0.5 * k0 * abc.a,
        k0 * abc.c.re,
        k0 * abc.c.im,
        k0 * (abc.b - 0.5 * abc.a),
    ))
}

pub fn wigner_decompose(a: &SpinorTransform, k: &FourVector) -> Result<LittleGroupElement> {
    wigner_decompose_with(a, k, &Tolerances::default())
}

/// Forms `S = A_{Λk}⁻¹ · A · A_k` and reads off `(S₁₁, S₁₂)`.
///
/// `Λk` is obtained from the matrix action `A 𝗄 A†`, so this route shares
/// nothing with the closed forms beyond the standard-boost convention.
pub fn wigner_decompose_with(a: &SpinorTransform, k: &FourVector, tol: &Tolerances) -> Result<LittleGroupElement> {
    let s = little_group_matrix(a, k, tol)?;
    Ok(LittleGroupElement {
        half_phase: s.get(0, 0),
        translation: s.get(0, 1),
    })
}

/// The full 2×2 matrix `S(A, k)`, after the shape checks.
pub fn little_group_matrix(a: &SpinorTransform, k: &FourVector, tol: &Tolerances) -> Result<Mat2> {
    let boost_k = standard_boost_with(k, tol)?;
    let k_prime = spinor_act(a, &hermitian_from_four_vector(k)).to_four_vector();
    let n_prime = direction_of(&k_prime)?;
    check_pole(&n_prime, tol.pole)?;
    let boost_kp = boost_for(k_prime.t, &n_prime);

    let left = boost_kp.0.inverse();
    let s = *left.matrix() * *a.matrix() * *boost_k.0.matrix();

    let scale = (left.matrix().frobenius() * a.matrix().frobenius() * boost_k.0.matrix().frobenius()).max(1.0);
    let h = s.get(0, 0);
    let defect = s
        .get(1, 0)
        .norm()
        .max((s.get(1, 1) - h.conj()).norm())
        .max((h.norm() - 1.0).abs());
    if !(defect <= tol.shape * scale) {
        return Err(Error::ShapeViolation(s.get(1, 0).norm().max(defect)));
    }
    Ok(s)
}

pub fn closed_form_little_group(a: &SpinorTransform, k: &FourVector) -> Result<LittleGroupElement> {
    closed_form_little_group_with(a, k, &Tolerances::default())
}

/// Evaluates the closed expressions
///
/// ```text
/// e^{iψ/2} = [(α(1+n³) + βn₊) b + (γ(1+n³) + δn₊) c*] / (a √(b(1+n³)))
/// z        = [(−αn₋ + β(1+n³)) b + (−γn₋ + δ(1+n³)) c*] / (k⁰ a √(b(1+n³)))
/// ```
///
/// with the principal square root and `b > 0` enforced.
pub fn closed_form_little_group_with(
    a: &SpinorTransform,
    k: &FourVector,
    tol: &Tolerances,
) -> Result<LittleGroupElement> {
    check_null(k, tol.null)?;
    let n = direction_of(k)?;
    let abc = abc_coefficients(a, &n);
    closed_form_from_coefficients(a, k, &abc, tol)
}

/// The closed forms evaluated with caller-supplied coefficients. Useful for
/// checking that the consistency suites catch corrupted coefficients; use
/// [`closed_form_little_group`] otherwise.
pub fn closed_form_from_coefficients(
    a: &SpinorTransform,
    k: &FourVector,
    abc: &AbcCoefficients,
    tol: &Tolerances,
) -> Result<LittleGroupElement> {
    let n = direction_of(k)?;
    check_pole(&n, tol.pole)?;
    let AbcCoefficients { a: ca, b: cb, c: cc } = *abc;
    if !(cb > 0.0) {
        return Err(Error::DegenerateBranch(cb));
    }
    // 1 + n′³ = 2b/a
    check_gap(2.0 * cb / ca, tol.pole)?;

    let (al, be, ga, de) = (a.alpha(), a.beta(), a.gamma(), a.delta());
    let up = n.pole_gap();
    let (np, nm) = (n.n_plus(), n.n_minus());
    let cstar = cc.conj();
    let denom = ca * (cb * up).sqrt();

    let phase_num = (al * up + be * np) * cb + (ga * up + de * np) * cstar;
    let z_num = (-al * nm + be * up) * cb + (-ga * nm + de * up) * cstar;

    Ok(LittleGroupElement {
        half_phase: phase_num / denom,
        translation: z_num / (k.t * denom),
    })
}

/// `e^{iψ(A, n⃗)}` for the momentum `(1, n⃗)`; the same for every frequency.
pub fn wigner_phase_of_direction(a: &SpinorTransform, n: &UnitDirection) -> Result<C64> {
    check_pole(n, Tolerances::default().pole)?;
    let k = FourVector::null(1.0, *n);
    Ok(closed_form_little_group(a, &k)?.phase())
}

/// Decomposition in the gauge obtained by conjugating everything with the
/// fixed rotation `R = make_rotation(x̂, π)`: returns `S(R A R⁻¹, Λ(R) k)`.
///
/// This is defined for momenta at the south pole, but the resulting phase
/// refers to a different choice of standard boosts and is not comparable
/// with [`wigner_decompose`] except through that change of gauge.
pub fn wigner_decompose_rotated_gauge(a: &SpinorTransform, k: &FourVector) -> Result<LittleGroupElement> {
    let r = make_rotation(UnitDirection::X, PI)?;
    let conj = crate::compose(&crate::compose(&r, a), &r.inverse());
    let k_rot = apply_lorentz(&lorentz_of_spinor(&r), k);
    wigner_decompose(&conj, &k_rot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{make_boost, make_rotation};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn standard_boost_of_standard_vector_is_identity() {
        let b = standard_boost(&FourVector::STANDARD_NULL).unwrap();
        assert!(b.0.matrix().max_abs_diff(&Mat2::IDENTITY) < 1e-15);
    }

    #[test]
    fn standard_boost_pure_z() {
        let b = standard_boost(&FourVector::new(2.0, 0.0, 0.0, 2.0)).unwrap();
        let expected = Mat2::diag(c(2f64.sqrt(), 0.0), c(1.0 / 2f64.sqrt(), 0.0));
        assert!(b.0.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn standard_boost_reconstructs_momentum() {
        let k = FourVector::new(1.0, 1.0, 0.0, 0.0);
        let b = standard_boost(&k).unwrap();
        let img = spinor_act(&b.0, &hermitian_from_four_vector(&FourVector::STANDARD_NULL));
        let one = c(1.0, 0.0);
        assert!(img.matrix().max_abs_diff(&Mat2::new(one, one, one, one)) < 1e-13);
        assert!((b.0.det() - 1.0).norm() < 1e-15);
    }

    #[test]
    fn standard_boost_errors() {
        assert!(matches!(
            standard_boost(&FourVector::new(1.0, 0.0, 0.0, 0.5)),
            Err(Error::NotNull { .. })
        ));
        assert!(matches!(
            standard_boost(&FourVector::new(1.0, 0.0, 0.0, -1.0)),
            Err(Error::SouthPoleSingularity(_))
        ));
    }

    #[test]
    fn abc_for_identity() {
        let n = UnitDirection::normalize(0.3, 0.4, -0.2).unwrap();
        let abc = abc_coefficients(&SpinorTransform::IDENTITY, &n);
        assert!((abc.a - 2.0).abs() < 1e-15);
        assert!((abc.b - (1.0 + n.z)).abs() < 1e-15);
        assert!((abc.c - n.n_plus()).norm() < 1e-15);
    }

    #[test]
    fn abc_for_z_boost_along_z() {
        let v = 0.45;
        let abc = abc_coefficients(&make_boost([0.0, 0.0, v]).unwrap(), &UnitDirection::Z);
        let a = 2.0 * ((1.0 - v) / (1.0 + v)).sqrt();
        assert!((abc.a - a).abs() < 1e-14);
        assert!((abc.b - a).abs() < 1e-14);
        assert!(abc.c.norm() < 1e-15);
    }

    #[test]
    fn abc_for_collinear_boost() {
        let n = UnitDirection::normalize(-0.2, 0.7, 0.1).unwrap();
        let v = 0.8;
        let abc = abc_coefficients(&make_boost([v * n.x, v * n.y, v * n.z]).unwrap(), &n);
        let xi = (-v).atanh();
        assert!((abc.a - 2.0 * (xi.cosh() + xi.sinh())).abs() < 1e-14);
    }

    #[test]
    fn momentum_transform_examples() {
        let k = FourVector::new(1.5, 0.9, -1.2, 0.0);
        let same = transform_null_momentum(&SpinorTransform::IDENTITY, &k).unwrap();
        assert!((same - k).to_array().iter().all(|d| d.abs() < 1e-15));

        let v = 0.3;
        let kp = transform_null_momentum(&make_boost([0.0, 0.0, v]).unwrap(), &FourVector::STANDARD_NULL).unwrap();
        let d = ((1.0 - v) / (1.0 + v)).sqrt();
        assert!((kp - FourVector::new(d, 0.0, 0.0, d))
            .to_array()
            .iter()
            .all(|x| x.abs() < 1e-15));

        // frame rotated by χ about ẑ sees x̂ at azimuth −χ
        let chi = 0.6;
        let kp = transform_null_momentum(
            &make_rotation(UnitDirection::Z, chi).unwrap(),
            &FourVector::new(2.0, 2.0, 0.0, 0.0),
        )
        .unwrap();
        let expected = FourVector::new(2.0, 2.0 * chi.cos(), -2.0 * chi.sin(), 0.0);
        assert!((kp - expected).to_array().iter().all(|x| x.abs() < 1e-15));
    }

    #[test]
    fn decompose_identity() {
        let k = FourVector::null(3.0, UnitDirection::normalize(1.0, -1.0, 0.2).unwrap());
        let s = wigner_decompose(&SpinorTransform::IDENTITY, &k).unwrap();
        assert!((s.half_phase - 1.0).norm() < 1e-14);
        assert!(s.translation.norm() < 1e-14);
        let cf = closed_form_little_group(&SpinorTransform::IDENTITY, &k).unwrap();
        assert!((cf.half_phase - 1.0).norm() < 1e-14 && cf.translation.norm() < 1e-14);
    }

    #[test]
    fn rotation_about_momentum_gives_angle() {
        let n = UnitDirection::normalize(0.5, 0.2, 0.4).unwrap();
        let chi = 2.2;
        let u = make_rotation(n, chi).unwrap();
        let k = FourVector::null(0.7, n);
        for s in [
            wigner_decompose(&u, &k).unwrap(),
            closed_form_little_group(&u, &k).unwrap(),
        ] {
            assert!((s.phase() - C64::from_polar(1.0, chi)).norm() < 1e-12);
            assert!(s.translation.norm() < 1e-12);
        }
    }

    #[test]
    fn z_boost_translation_formula() {
        let v = 0.55;
        let n = UnitDirection::normalize(0.6, -0.3, 0.2).unwrap();
        let k0 = 1.7;
        let s = wigner_decompose(&make_boost([0.0, 0.0, v]).unwrap(), &FourVector::null(k0, n)).unwrap();
        assert!((s.half_phase - 1.0).norm() < 1e-13);
        let z = n.n_minus() / (k0 * (1.0 / v - n.z));
        assert!((s.translation - z).norm() < 1e-13);
    }

    #[test]
    fn collinear_boost_is_trivial() {
        let n = UnitDirection::normalize(-0.4, 0.1, 0.3).unwrap();
        let v = 0.9;
        let b = make_boost([v * n.x, v * n.y, v * n.z]).unwrap();
        let s = wigner_decompose(&b, &FourVector::null(2.0, n)).unwrap();
        assert!((s.half_phase - 1.0).norm() < 1e-13);
        assert!(s.translation.norm() < 1e-13);
    }

    #[test]
    fn rotation_closed_form_simple_ratio() {
        let axis = UnitDirection::normalize(0.1, 0.9, -0.3).unwrap();
        let u = make_rotation(axis, 1.3).unwrap();
        let n = UnitDirection::normalize(0.7, 0.2, 0.3).unwrap();
        let s = closed_form_little_group(&u, &FourVector::null(1.0, n)).unwrap();
        let up = 1.0 + n.z;
        let ratio = (u.alpha() * up + u.beta() * n.n_plus()) / (u.alpha().conj() * up + u.beta().conj() * n.n_minus());
        assert!((s.phase() - ratio).norm() < 1e-13);
        assert!(s.translation.norm() < 1e-13);
    }

    #[test]
    fn phase_of_direction() {
        let n = UnitDirection::normalize(0.3, -0.5, 0.2).unwrap();
        let chi = 0.75;
        let e = C64::from_polar(1.0, chi);
        let about_n = wigner_phase_of_direction(&make_rotation(n, chi).unwrap(), &n).unwrap();
        assert!((about_n - e).norm() < 1e-13);
        let about_z = wigner_phase_of_direction(&make_rotation(UnitDirection::Z, chi).unwrap(), &n).unwrap();
        assert!((about_z - e).norm() < 1e-13);
        let south = UnitDirection {
            x: 0.0,
            y: 0.0,
            z: -1.0,
        };
        assert!(matches!(
            wigner_phase_of_direction(&SpinorTransform::IDENTITY, &south),
            Err(Error::SouthPoleSingularity(_))
        ));
    }

    #[test]
    fn image_at_south_pole_rejected() {
        // a rotation by π about x̂ sends +ẑ to −ẑ
        let r = make_rotation(UnitDirection::X, PI).unwrap();
        let k = FourVector::STANDARD_NULL;
        assert!(matches!(wigner_decompose(&r, &k), Err(Error::SouthPoleSingularity(_))));
        assert!(closed_form_little_group(&r, &k).is_err());
    }

    #[test]
    fn rotated_gauge_handles_south_pole() {
        let k = FourVector::new(1.0, 0.0, 0.0, -1.0);
        let s = wigner_decompose_rotated_gauge(&make_rotation(UnitDirection::Z, 0.4).unwrap(), &k).unwrap();
        assert!((s.half_phase.norm() - 1.0).abs() < 1e-13);
        let id = wigner_decompose_rotated_gauge(&SpinorTransform::IDENTITY, &k).unwrap();
        assert!((id.half_phase - 1.0).norm() < 1e-13);
    }

    #[test]
    fn psi_is_wrapped() {
        let e = LittleGroupElement {
            half_phase: C64::from_polar(1.0, -0.25),
            translation: c(0.0, 0.0),
        };
        assert!((e.psi() - (2.0 * PI - 0.5)).abs() < 1e-15);
        let m = LittleGroupElement {
            half_phase: c(-1.0, 0.0),
            translation: c(0.0, 0.0),
        };
        assert_eq!(m.psi(), 0.0);
        assert!(LittleGroupElement::IDENTITY.psi() == 0.0);
    }
}
