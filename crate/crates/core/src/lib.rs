//! Wigner little-group elements for massless particles and their action on
//! photon polarization states.
//!
//! The crate is organised bottom-up:
//!
//! * [`minkowski`] – real four-vectors, the metric, 4×4 Lorentz matrices.
//! * [`spinor_cover`] – SL(2,C) matrices, the Hermitian spinor map and the
//!   covering homomorphism onto the Lorentz group.
//! * [`little_group`] – standard boosts, the transformed-momentum closed
//!   forms and the little-group element `S = A_{Λk}⁻¹ A A_k`.
//! * [`photon_states`] – linearly polarized photon states, reduced helicity
//!   density matrices and von Neumann entropy.
//!
//! Conventions: natural units (`c = 1`), metric signature `(+,−,−,−)`,
//! boosts parametrised by the velocity of the boosted frame with
//! `tanh ξ = −v`. Rotations built by [`spinor_cover::make_rotation`] use the
//! same frame (passive) convention, so `make_rotation(ẑ, χ)` turns a
//! momentum along x̂ into one at azimuth `−χ`.

// NaN must fail tolerance checks, hence `!(x <= tol)` throughout
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod error;
pub mod little_group;
pub mod mat2;
pub mod minkowski;
pub mod photon_states;
pub mod quadrature;
pub mod spinor_cover;

pub use error::{Error, Result};
pub use little_group::{
    abc_coefficients, closed_form_little_group, standard_boost, transform_null_momentum, wigner_decompose,
    wigner_decompose_rotated_gauge, wigner_phase_of_direction, AbcCoefficients, LittleGroupElement, StandardBoost,
};
pub use mat2::Mat2;
pub use minkowski::{
    apply_lorentz, direction_of, is_null, minkowski_dot, verify_lorentz, FourVector, LorentzMatrix, UnitDirection,
};
pub use photon_states::{
    monochromatic_state, reduced_density, transform_density, transform_state, von_neumann_entropy, DensityMatrix2,
    Helicity, HelicityAmplitudeField, PolarizedState, SpectralProfile,
};
pub use quadrature::QuadratureRule;
pub use spinor_cover::{
    compose, four_vector_from_hermitian, hermitian_from_four_vector, lorentz_of_spinor, make_boost, make_rotation,
    spinor_act, HermitianMomentum, SpinorTransform,
};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
