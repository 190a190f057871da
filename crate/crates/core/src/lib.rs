//! Numerical two-spinor algebra.
//!
//! Everything is built from a 2-dimensional complex space `U` carrying a
//! normalized symplectic form. From it the crate derives Minkowski space as
//! the Hermitian part of `U ⊗ Ū`, Dirac spinors `W = U ⊕ Ū*` with their
//! Clifford map, the symmetric sector spaces `U^(h,k)` that carry higher-spin
//! fields, and the momentum-space and plane-wave field equations on them.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is `Send + Sync` and safe to share.

pub mod angmom;
pub mod composite;
pub mod dirac;
mod error;
pub mod field;
pub mod json;
pub mod linalg;
pub mod sampling;
pub mod sectors;
pub mod spinor;
pub mod tolerance;
pub mod wtensor;

pub use error::{Result, SpinError};

/// Double precision complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// 2×2 complex array.
pub type Mat2 = nalgebra::Matrix2<C64>;

/// 4×4 complex array (endomorphisms of `W`).
pub type Mat4 = nalgebra::Matrix4<C64>;

pub(crate) const SQRT2: f64 = std::f64::consts::SQRT_2;

#[inline]
pub(crate) fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Largest absolute value over a slice of complex numbers.
pub fn max_abs(values: &[C64]) -> f64 {
    values.iter().fold(0.0_f64, |m, z| m.max(z.norm()))
}
