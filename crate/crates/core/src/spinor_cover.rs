//! SL(2,C) and its two-to-one covering of the proper orthochronous Lorentz
//! group.
//!
//! A four-vector `k` is identified with the Hermitian matrix
//! `𝗄 = k^μ σ_μ`, and `A ∈ SL(2,C)` acts as `𝗄 ↦ A 𝗄 A†`. The induced 4×4
//! matrix `Λ(A)` is recovered by acting on the four basis vectors.
//!
//! Boost convention: [`make_boost`] takes the velocity `v⃗` of the boosted
//! frame and uses rapidity `ξ` with `tanh ξ = −|v⃗|`, so a boost along ẑ has
//! `α = ((1−v)/(1+v))^{1/4}`. Many references use the opposite sign.

use std::f64::consts::PI;

use crate::mat2::Mat2;
use crate::minkowski::{FourVector, LorentzMatrix, UnitDirection};
use crate::{Error, Result, C64};

/// Determinant tolerance for [`SpinorTransform::from_entries`].
pub const DETERMINANT_TOLERANCE: f64 = 1e-9;

/// Relative Hermiticity tolerance for [`four_vector_from_hermitian`].
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

/// Hermitian 2×2 image `k^μ σ_μ` of a four-vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HermitianMomentum(Mat2);

impl HermitianMomentum {
    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn to_four_vector(&self) -> FourVector {
        let m = &self.0 .0;
        FourVector::new(
            0.5 * (m[0][0].re + m[1][1].re),
            0.5 * (m[0][1].re + m[1][0].re),
            0.5 * (m[1][0].im - m[0][1].im),
            0.5 * (m[0][0].re - m[1][1].re),
        )
    }

    /// `det 𝗄 = k·k`.
    pub fn det(&self) -> f64 {
        self.0.det().re
    }
}

/// Element of SL(2,C), `[[α, β], [γ, δ]]` with `αδ − βγ = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinorTransform(Mat2);

impl SpinorTransform {
    pub const IDENTITY: SpinorTransform = SpinorTransform(Mat2::IDENTITY);

    /// Builds a transform from row-major entries, requiring
    /// `|αδ − βγ − 1| ≤ 1e−9`.
    pub fn from_entries(alpha: C64, beta: C64, gamma: C64, delta: C64) -> Result<Self> {
        let m = Mat2::new(alpha, beta, gamma, delta);
        let d = m.det();
        if !((d - 1.0).norm() <= DETERMINANT_TOLERANCE) {
            return Err(Error::BadDeterminant { re: d.re, im: d.im });
        }
        Ok(SpinorTransform(m))
    }

    /// Rescales an invertible matrix by `1/√det` to land in SL(2,C).
    pub fn normalized(m: Mat2) -> Result<Self> {
        let d = m.det();
        if !(d.norm() > 0.0) || !d.is_finite() {
            return Err(Error::BadDeterminant { re: d.re, im: d.im });
        }
        Ok(SpinorTransform(m.scale(d.sqrt().inv())))
    }

    /// Wraps a matrix without checking the determinant. Callers guarantee
    /// unimodularity (products and inverses of valid transforms).
    pub(crate) fn from_matrix_unchecked(m: Mat2) -> Self {
        SpinorTransform(m)
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn alpha(&self) -> C64 {
        self.0 .0[0][0]
    }
    pub fn beta(&self) -> C64 {
        self.0 .0[0][1]
    }
    pub fn gamma(&self) -> C64 {
        self.0 .0[1][0]
    }
    pub fn delta(&self) -> C64 {
        self.0 .0[1][1]
    }

    pub fn inverse(&self) -> Self {
        SpinorTransform(self.0.unimodular_inverse())
    }

    pub fn negate(&self) -> Self {
        SpinorTransform(-self.0)
    }

    pub fn det(&self) -> C64 {
        self.0.det()
    }

    /// `‖A†A − I‖_max`.
    pub fn unitarity_defect(&self) -> f64 {
        (self.0.adjoint() * self.0).max_abs_diff(&Mat2::IDENTITY)
    }
}

pub fn hermitian_from_four_vector(k: &FourVector) -> HermitianMomentum {
    HermitianMomentum(Mat2::new(
        C64::new(k.t + k.z, 0.0),
        C64::new(k.x, -k.y),
        C64::new(k.x, k.y),
        C64::new(k.t - k.z, 0.0),
    ))
}

/// Reads `k^μ` back from a Hermitian matrix; the Hermiticity check is
/// relative to the matrix scale.
pub fn four_vector_from_hermitian(m: &Mat2) -> Result<FourVector> {
    let defect = m.hermiticity_defect();
    if !(defect <= HERMITIAN_TOLERANCE * m.max_abs().max(1.0)) {
        return Err(Error::NotHermitian(defect));
    }
    Ok(HermitianMomentum(*m).to_four_vector())
}

/// `A 𝗄 A†`, symmetrised so the result is exactly Hermitian.
pub fn spinor_act(a: &SpinorTransform, m: &HermitianMomentum) -> HermitianMomentum {
    let x = a.0 * m.0 * a.0.adjoint();
    HermitianMomentum((x + x.adjoint()) * 0.5)
}

/// The Lorentz matrix covered by `A`, column `ν` being the image of the
/// `ν`-th basis vector.
pub fn lorentz_of_spinor(a: &SpinorTransform) -> LorentzMatrix {
    let mut l = [[0.0; 4]; 4];
    for nu in 0..4 {
        let mut e = [0.0; 4];
        e[nu] = 1.0;
        let image = spinor_act(a, &hermitian_from_four_vector(&FourVector::from_array(e)))
            .to_four_vector()
            .to_array();
        for mu in 0..4 {
            l[mu][nu] = image[mu];
        }
    }
    LorentzMatrix(l)
}

/// `U = cos(χ/2) + i n^j σ_j sin(χ/2)`, with `χ` reduced modulo 4π.
pub fn make_rotation(axis: UnitDirection, angle: f64) -> Result<SpinorTransform> {
    let n2 = axis.dot(&axis);
    if !((n2 - 1.0).abs() <= UnitDirection::UNIT_TOLERANCE) {
        return Err(Error::BadAxis(n2.sqrt()));
    }
    let half = 0.5 * angle.rem_euclid(4.0 * PI);
    let (s, c) = half.sin_cos();
    let i = C64::i();
    Ok(SpinorTransform(Mat2::new(
        C64::new(c, axis.z * s),
        i * axis.n_minus() * s,
        i * axis.n_plus() * s,
        C64::new(c, -axis.z * s),
    )))
}

/// `A(v⃗) = exp(½ ξ e^j σ_j)` with `e⃗ = v⃗/|v⃗|` and `tanh ξ = −|v⃗|`.
pub fn make_boost(velocity: [f64; 3]) -> Result<SpinorTransform> {
    let speed = velocity.iter().map(|c| c * c).sum::<f64>().sqrt();
    if !(speed < 1.0) {
        return Err(Error::SuperluminalVelocity(speed));
    }
    if speed == 0.0 {
        return Ok(SpinorTransform::IDENTITY);
    }
    let e = UnitDirection {
        x: velocity[0] / speed,
        y: velocity[1] / speed,
        z: velocity[2] / speed,
    };
    let xi = (-speed).atanh();
    let (ch, sh) = ((0.5 * xi).cosh(), (0.5 * xi).sinh());
    Ok(SpinorTransform(Mat2::new(
        C64::new(ch + e.z * sh, 0.0),
        e.n_minus() * sh,
        e.n_plus() * sh,
        C64::new(ch - e.z * sh, 0.0),
    )))
}

/// Group product `AB` (apply `B` first).
pub fn compose(a: &SpinorTransform, b: &SpinorTransform) -> SpinorTransform {
    SpinorTransform(a.0 * b.0)
}
