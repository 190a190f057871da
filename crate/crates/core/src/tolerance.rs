//! Default numerical tolerances.
//!
//! Pure-algebra identities (exact up to a handful of roundings) use
//! [`ALGEBRA`]; compositions of many contractions use [`DEFAULT`].

/// Pure-algebra identities: ε relations, metric values, Hermiticity.
pub const ALGEBRA: f64 = 1e-12;

/// Default relative tolerance for composed operations.
pub const DEFAULT: f64 = 1e-10;

/// Exact round trips (Pauli ↔ Hermitian, index lowering).
pub const ROUND_TRIP: f64 = 1e-14;

/// Relative mass-shell slack: |g#(P,P) − m²| ≤ MASS_SHELL · m².
pub const MASS_SHELL: f64 = 1e-10;

/// Hermiticity of an element of H: max |Y − Y†| ≤ HERMITIAN · ‖Y‖.
pub const HERMITIAN: f64 = 1e-12;

/// Block symmetry of a sector tensor, relative to its max norm.
pub const SYMMETRY: f64 = 1e-12;

/// Relative cutoff below which a singular value counts as zero.
pub const RANK: f64 = 1e-9;
