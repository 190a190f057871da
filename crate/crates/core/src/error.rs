use thiserror::Error;

use crate::sectors::SectorId;

pub type Result<T> = std::result::Result<T, SpinError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpinError {
    #[error("array is not Hermitian (max asymmetry {asymmetry:e}, allowed {allowed:e})")]
    NotHermitian { asymmetry: f64, allowed: f64 },

    #[error("tensor is not symmetric (max asymmetry {asymmetry:e}, allowed {allowed:e})")]
    NotSymmetric { asymmetry: f64, allowed: f64 },

    #[error("shape mismatch: expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },

    #[error("momentum is off-shell: g#(P,P) = {norm}, m^2 = {mass_sq}")]
    OffShell { norm: f64, mass_sq: f64 },

    #[error("momentum is not future-pointing")]
    PastPointing,

    #[error("mass must be positive and finite, got {0}")]
    BadMass(f64),

    #[error("sector {found} where {expected} was required")]
    WrongSector { expected: SectorId, found: SectorId },

    #[error("extended Dirac map is undefined on {0} (no unprimed index to contract)")]
    NoContraction(SectorId),

    #[error("slot {slot} out of range for rank {rank}")]
    SlotOutOfRange { slot: usize, rank: usize },

    #[error("field layouts do not match: {0}")]
    Layout(String),

    #[error("finite-difference spacing must be positive, got {0}")]
    BadSpacing(f64),

    #[error("pair-exchange asymmetry {asymmetry:e} exceeds {allowed:e}")]
    NotPairSymmetric { asymmetry: f64, allowed: f64 },

    #[error("non-finite value encountered")]
    NonFinite,
}
