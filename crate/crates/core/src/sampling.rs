//! Seeded random generators for property sweeps.
//!
//! Every trial draws from its own ChaCha stream derived from a root seed, so
//! sweeps are reproducible and independent of evaluation order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dirac::DiracSpinor;
use crate::sectors::{sector_sequence, HigherSpinField, SectorId, SectorTensor};
use crate::spinor::{ConjCoSpinor, MinkCovector, MinkVector, TwoSpinor};
use crate::wtensor::WTensor;
use crate::{c, C64};

pub type SweepRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SweepRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream number `trial` under `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> SweepRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(trial);
    r
}

pub fn uniform(r: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    r.random_range(lo..hi)
}

/// Complex number with real and imaginary parts uniform in `[−1, 1)`.
pub fn complex(r: &mut impl Rng) -> C64 {
    c(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0))
}

pub fn complex_vec(r: &mut impl Rng, n: usize) -> Vec<C64> {
    (0..n).map(|_| complex(r)).collect()
}

pub fn spinor(r: &mut impl Rng) -> TwoSpinor {
    TwoSpinor([complex(r), complex(r)])
}

pub fn dirac_spinor(r: &mut impl Rng) -> DiracSpinor {
    DiracSpinor::new(spinor(r), ConjCoSpinor([complex(r), complex(r)]))
}

/// Hermitian vector with Pauli components uniform in `[−1, 1)`.
pub fn mink_vector(r: &mut impl Rng) -> MinkVector {
    MinkVector::from_pauli([0; 4].map(|_| r.random_range(-1.0..1.0)))
}

/// Future timelike vector with `g(Y, Y) = 1`.
pub fn unit_timelike(r: &mut impl Rng) -> MinkVector {
    let v = [0; 3].map(|_| r.random_range(-1.0..1.0));
    let t = (1.0 + v.iter().map(|x| x * x).sum::<f64>()).sqrt();
    MinkVector::from_pauli([t, v[0], v[1], v[2]])
}

/// Mass uniform in `[0.5, 2)`.
pub fn mass(r: &mut impl Rng) -> f64 {
    r.random_range(0.5..2.0)
}

/// On-shell future-pointing covector: spatial components uniform in
/// `[−1, 1)`, energy fixed by the mass shell.
pub fn on_shell_covector(r: &mut impl Rng, m: f64) -> MinkCovector {
    let p = [0; 3].map(|_| r.random_range(-1.0..1.0));
    let e = (m * m + p.iter().map(|x| x * x).sum::<f64>()).sqrt();
    MinkCovector::from_pauli([e, p[0], p[1], p[2]])
}

pub fn sector_tensor(r: &mut impl Rng, id: SectorId) -> SectorTensor {
    SectorTensor::from_packed(id, &complex_vec(r, id.independent_dim()))
        .expect("packed length matches the sector")
}

/// Random value of `W^{2j}` (every sector filled).
pub fn field(r: &mut impl Rng, two_j: usize) -> HigherSpinField {
    let sectors = sector_sequence(two_j)
        .into_iter()
        .map(|id| sector_tensor(r, id))
        .collect();
    HigherSpinField::from_sectors(two_j, sectors).expect("sequence layout")
}

/// Random symmetric rank-`rank` tensor over `W`.
pub fn symmetric_w(r: &mut impl Rng, rank: usize) -> WTensor {
    WTensor::from_data(rank, complex_vec(r, 1 << (2 * rank)))
        .expect("length 4^r")
        .symmetrized()
}
