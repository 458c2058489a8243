//! Real Minkowski four-vectors with signature `(+,−,−,−)` and 4×4 Lorentz
//! matrices.

use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result, C64};

/// Minkowski metric `η = diag(1, −1, −1, −1)`.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Default relative tolerance for [`is_null`].
pub const DEFAULT_NULL_TOLERANCE: f64 = 1e-10;

/// Contravariant four-vector `k^μ = (t, x, y, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector { t, x, y, z }
    }

    /// The standard null vector `k̃ = (1, 0, 0, 1)`.
    pub const STANDARD_NULL: FourVector = FourVector::new(1.0, 0.0, 0.0, 1.0);

    /// Null vector with frequency `k0 > 0` travelling along `n`.
    pub fn null(k0: f64, n: UnitDirection) -> Self {
        FourVector::new(k0, k0 * n.x, k0 * n.y, k0 * n.z)
    }

    pub fn from_array(c: [f64; 4]) -> Self {
        FourVector::new(c[0], c[1], c[2], c[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub fn spatial_norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, v: FourVector) -> FourVector {
        FourVector::new(self * v.t, self * v.x, self * v.y, self * v.z)
    }
}

/// Unit 3-vector, used for propagation directions and rotation/boost axes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitDirection {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl UnitDirection {
    /// Tolerance on `|n|² − 1` accepted by [`UnitDirection::new`].
    pub const UNIT_TOLERANCE: f64 = 1e-9;

    pub const X: UnitDirection = UnitDirection { x: 1.0, y: 0.0, z: 0.0 };
    pub const Y: UnitDirection = UnitDirection { x: 0.0, y: 1.0, z: 0.0 };
    pub const Z: UnitDirection = UnitDirection { x: 0.0, y: 0.0, z: 1.0 };

    /// Accepts an already-normalised vector; fails with `BadAxis` otherwise.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let n2 = x * x + y * y + z * z;
        if !n2.is_finite() || (n2 - 1.0).abs() > Self::UNIT_TOLERANCE {
            return Err(Error::BadAxis(n2.sqrt()));
        }
        Ok(UnitDirection { x, y, z })
    }

    /// Normalises an arbitrary non-zero vector.
    pub fn normalize(x: f64, y: f64, z: f64) -> Result<Self> {
        let n = (x * x + y * y + z * z).sqrt();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::BadAxis(n));
        }
        Ok(UnitDirection {
            x: x / n,
            y: y / n,
            z: z / n,
        })
    }

    /// Unit vector from polar angle `theta` (from +z) and azimuth `phi`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        UnitDirection {
            x: st * cp,
            y: st * sp,
            z: ct,
        }
    }

    /// `n₊ = n¹ + i n²`.
    pub fn n_plus(&self) -> C64 {
        C64::new(self.x, self.y)
    }

    /// `n₋ = n¹ − i n²`.
    pub fn n_minus(&self) -> C64 {
        C64::new(self.x, -self.y)
    }

    /// `1 + n³`, the distance from the south pole that controls the
    /// standard-boost singularity. Evaluated as `(n¹² + n²²)/(1 − n³)` in
    /// the southern hemisphere to avoid cancellation.
    pub fn pole_gap(&self) -> f64 {
        if self.z >= 0.0 {
            1.0 + self.z
        } else {
            (self.x * self.x + self.y * self.y) / (1.0 - self.z)
        }
    }

    pub fn dot(&self, o: &UnitDirection) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Largest componentwise distance to `o`.
    pub fn max_abs_diff(&self, o: &UnitDirection) -> f64 {
        (self.x - o.x).abs().max((self.y - o.y).abs()).max((self.z - o.z).abs())
    }
}

/// 4×4 real matrix `Λ^μ_ν`, row index `μ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzMatrix(pub [[f64; 4]; 4]);

impl LorentzMatrix {
    pub const IDENTITY: LorentzMatrix = LorentzMatrix([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);

    /// Active spatial rotation by `angle` about `axis` (right-hand rule), so
    /// that a rotation about ẑ by χ maps x̂ to `(cos χ, sin χ, 0)`.
    pub fn rotation(axis: UnitDirection, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        let (x, y, z) = (axis.x, axis.y, axis.z);
        let t = 1.0 - c;
        let mut m = Self::IDENTITY.0;
        let r = [
            [c + x * x * t, x * y * t - z * s, x * z * t + y * s],
            [y * x * t + z * s, c + y * y * t, y * z * t - x * s],
            [z * x * t - y * s, z * y * t + x * s, c + z * z * t],
        ];
        for i in 0..3 {
            for j in 0..3 {
                m[i + 1][j + 1] = r[i][j];
            }
        }
        LorentzMatrix(m)
    }

    /// Coordinate change into a frame moving with `velocity`:
    /// `t′ = γ(t − v·x)`, `x′_∥ = γ(x_∥ − v t)`. This is the same convention
    /// as [`crate::make_boost`] (`tanh ξ = −|v|`).
    pub fn boost(velocity: [f64; 3]) -> Result<Self> {
        let v2: f64 = velocity.iter().map(|c| c * c).sum();
        if !(v2 < 1.0) {
            return Err(Error::SuperluminalVelocity(v2.sqrt()));
        }
        let mut m = Self::IDENTITY.0;
        if v2 == 0.0 {
            return Ok(LorentzMatrix(m));
        }
        let gamma = 1.0 / (1.0 - v2).sqrt();
        m[0][0] = gamma;
        for i in 0..3 {
            m[0][i + 1] = -gamma * velocity[i];
            m[i + 1][0] = -gamma * velocity[i];
            for j in 0..3 {
                m[i + 1][j + 1] += (gamma - 1.0) * velocity[i] * velocity[j] / v2;
            }
        }
        Ok(LorentzMatrix(m))
    }

    pub fn transpose(&self) -> Self {
        let mut t = [[0.0; 4]; 4];
        for (i, row) in self.0.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                t[j][i] = *v;
            }
        }
        LorentzMatrix(t)
    }

    pub fn determinant(&self) -> f64 {
        // Gaussian elimination with partial pivoting.
        let mut a = self.0;
        let mut det = 1.0;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
                .unwrap();
            if a[pivot][col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for row in col + 1..4 {
                let f = a[row][col] / a[col][col];
                for k in col..4 {
                    a[row][k] -= f * a[col][k];
                }
            }
        }
        det
    }

    pub fn max_abs_diff(&self, o: &LorentzMatrix) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(o.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Mul for LorentzMatrix {
    type Output = LorentzMatrix;
    fn mul(self, rhs: LorentzMatrix) -> LorentzMatrix {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        LorentzMatrix(out)
    }
}

/// `u⁰v⁰ − u⃗·v⃗`.
pub fn minkowski_dot(u: &FourVector, v: &FourVector) -> f64 {
    u.t * v.t - u.x * v.x - u.y * v.y - u.z * v.z
}

/// Future-pointing null test, relative to `(k⁰)²`.
pub fn is_null(k: &FourVector, tol: f64) -> bool {
    k.t > 0.0 && minkowski_dot(k, k).abs() <= tol * k.t * k.t
}

pub fn apply_lorentz(l: &LorentzMatrix, k: &FourVector) -> FourVector {
    let c = k.to_array();
    let row = |i: usize| (0..4).map(|j| l.0[i][j] * c[j]).sum::<f64>();
    FourVector::new(row(0), row(1), row(2), row(3))
}

/// Checks `ΛᵀηΛ = η` entrywise, `Λ⁰₀ ≥ 1` and `det Λ ≈ 1`.
pub fn verify_lorentz(l: &LorentzMatrix, tol: f64) -> bool {
    for mu in 0..4 {
        for nu in 0..4 {
            let g: f64 = (0..4).map(|r| l.0[r][mu] * METRIC[r] * l.0[r][nu]).sum();
            let expected = if mu == nu { METRIC[mu] } else { 0.0 };
            if !((g - expected).abs() <= tol) {
                return false;
            }
        }
    }
    // Λ⁰₀ ≥ 1 holds exactly for a Lorentz matrix; allow rounding.
    l.0[0][0] >= 1.0 - tol && (l.determinant() - 1.0).abs() <= tol
}

/// Spatial direction `k⃗/|k⃗|`.
pub fn direction_of(k: &FourVector) -> Result<UnitDirection> {
    let n = k.spatial_norm();
    if !(n > 0.0) || !n.is_finite() {
        return Err(Error::DegenerateMomentum);
    }
    Ok(UnitDirection {
        x: k.x / n,
        y: k.y / n,
        z: k.z / n,
    })
}
