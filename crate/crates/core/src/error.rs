use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, Copy, PartialEq)]
pub enum Error {
    #[error("four-vector has zero spatial momentum")]
    DegenerateMomentum,
    #[error("momentum is not null (k·k = {dot:e}, k⁰ = {t:e})")]
    NotNull { dot: f64, t: f64 },
    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("rotation axis is not a unit vector (|n| = {0})")]
    BadAxis(f64),
    #[error("velocity |v| = {0} is not below the speed of light")]
    SuperluminalVelocity(f64),
    #[error("matrix determinant {re} + {im}i is not 1")]
    BadDeterminant { re: f64, im: f64 },
    #[error("direction is at the south pole (1 + n³ = {0:e}); standard boost undefined")]
    SouthPoleSingularity(f64),
    #[error("little-group element has the wrong shape (|S₂₁| = {0:e})")]
    ShapeViolation(f64),
    #[error("coefficient b = {0:e} is not positive")]
    DegenerateBranch(f64),
    #[error("helicity field has zero norm")]
    ZeroState,
    #[error("phase factor has modulus {0}, expected 1")]
    BadPhase(f64),
    #[error("spectral profile: {0}")]
    BadProfile(&'static str),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegenerateMomentum => "DegenerateMomentum",
            Error::NotNull { .. } => "NotNull",
            Error::NotHermitian(_) => "NotHermitian",
            Error::BadAxis(_) => "BadAxis",
            Error::SuperluminalVelocity(_) => "SuperluminalVelocity",
            Error::BadDeterminant { .. } => "BadDeterminant",
            Error::SouthPoleSingularity(_) => "SouthPoleSingularity",
            Error::ShapeViolation(_) => "ShapeViolation",
            Error::DegenerateBranch(_) => "DegenerateBranch",
            Error::ZeroState => "ZeroState",
            Error::BadPhase(_) => "BadPhase",
            Error::BadProfile(_) => "BadProfile",
        }
    }
}
