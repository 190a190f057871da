//! The ε-symplectic two-spinor algebra and Minkowski space `H = H(U ⊗ Ū)`.
//!
//! Index conventions (0-based in code, 1-based in the comments):
//!
//! * `ε_{AB}` has `ε_{12} = +1`, `ε_{21} = −1` in the distinguished frame.
//! * `ε^{AB}` is fixed by `ε^{AB} ε_{CB} = δ^A_C`, which gives `ε^{12} = +1`.
//! * Lowering `u_A = ε_{BA} u^B`, raising `λ^A = ε^{BA} λ_B`. With these two
//!   patterns `raise ∘ lower = −id` on single spinors; on `H` the two signs
//!   cancel and lowering is an honest isomorphism.
//! * A vector `Y ∈ H` is stored both as real Pauli components `Y^λ` and as
//!   the Hermitian array `Y^{AȦ} = (1/√2) Σ_λ σ_λ^{AȦ} Y^λ`.
//! * A covector `P ∈ H*` uses the dual Pauli frame,
//!   `P_{AȦ} = (1/√2) Σ_λ P_λ conj(σ_λ)^{AȦ}`, so that `⟨P, Y⟩ = Σ_λ P_λ Y^λ`.

use serde::{Deserialize, Serialize};

use crate::{c, tolerance, Mat2, Result, SpinError, C64, SQRT2};

/// Element of `U`, components `u^A`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoSpinor(pub [C64; 2]);

/// Element of `U*`, components `λ_A`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoSpinor(pub [C64; 2]);

/// Element of `Ū`, components `ū^Ȧ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConjSpinor(pub [C64; 2]);

/// Element of `Ū*`, components `λ̄_Ȧ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConjCoSpinor(pub [C64; 2]);

macro_rules! spinor_common {
    ($t:ident) => {
        impl $t {
            pub const ZERO: Self = Self([C64::new(0.0, 0.0); 2]);

            pub fn new(a: C64, b: C64) -> Self {
                Self([a, b])
            }

            pub fn from_real(a: f64, b: f64) -> Self {
                Self([c(a, 0.0), c(b, 0.0)])
            }

            pub fn scale(self, s: C64) -> Self {
                Self([self.0[0] * s, self.0[1] * s])
            }

            pub fn is_finite(&self) -> bool {
                self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
            }

            pub fn max_diff(&self, other: &Self) -> f64 {
                (self.0[0] - other.0[0])
                    .norm()
                    .max((self.0[1] - other.0[1]).norm())
            }
        }

        impl std::ops::Add for $t {
            type Output = Self;
            fn add(self, o: Self) -> Self {
                Self([self.0[0] + o.0[0], self.0[1] + o.0[1]])
            }
        }

        impl std::ops::Neg for $t {
            type Output = Self;
            fn neg(self) -> Self {
                Self([-self.0[0], -self.0[1]])
            }
        }
    };
}

spinor_common!(TwoSpinor);
spinor_common!(CoSpinor);
spinor_common!(ConjSpinor);
spinor_common!(ConjCoSpinor);

/// The normalized symplectic form in the distinguished frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Epsilon {
    pub lower: [[f64; 2]; 2],
    pub upper: [[f64; 2]; 2],
}

/// `ε_{AB}` with `ε_{12} = +1`.
pub const EPS_LOWER: [[f64; 2]; 2] = [[0.0, 1.0], [-1.0, 0.0]];
/// `ε^{AB}`, the inverse in the sense `ε^{AB} ε_{CB} = δ^A_C`.
pub const EPS_UPPER: [[f64; 2]; 2] = [[0.0, 1.0], [-1.0, 0.0]];

impl Default for Epsilon {
    fn default() -> Self {
        Self {
            lower: EPS_LOWER,
            upper: EPS_UPPER,
        }
    }
}

impl Epsilon {
    /// `ε̄_{ȦḂ}`; entrywise conjugation of a real array.
    pub fn conj_lower(&self) -> [[f64; 2]; 2] {
        self.lower
    }

    pub fn conj_upper(&self) -> [[f64; 2]; 2] {
        self.upper
    }

    /// Max deviation of `ε^{AB} ε_{CB}` from `δ^A_C`.
    pub fn inverse_residual(&self) -> f64 {
        let mut worst = 0.0_f64;
        for a in 0..2 {
            for cc in 0..2 {
                let s: f64 = (0..2).map(|b| self.upper[a][b] * self.lower[cc][b]).sum();
                let d = if a == cc { 1.0 } else { 0.0 };
                worst = worst.max((s - d).abs());
            }
        }
        worst
    }

    pub fn antisymmetry_residual(&self) -> f64 {
        let mut worst = 0.0_f64;
        for a in 0..2 {
            for b in 0..2 {
                worst = worst
                    .max((self.lower[a][b] + self.lower[b][a]).abs())
                    .max((self.upper[a][b] + self.upper[b][a]).abs());
            }
        }
        worst
    }
}

/// `u_A = ε_{BA} u^B`.
pub fn lower_spinor(u: &TwoSpinor) -> CoSpinor {
    let mut out = [C64::new(0.0, 0.0); 2];
    for (a, slot) in out.iter_mut().enumerate() {
        *slot = (0..2).map(|b| u.0[b] * EPS_LOWER[b][a]).sum();
    }
    CoSpinor(out)
}

/// `λ^A = ε^{BA} λ_B`.
pub fn raise_spinor(l: &CoSpinor) -> TwoSpinor {
    let mut out = [C64::new(0.0, 0.0); 2];
    for (a, slot) in out.iter_mut().enumerate() {
        *slot = (0..2).map(|b| l.0[b] * EPS_UPPER[b][a]).sum();
    }
    TwoSpinor(out)
}

/// Conjugate-space lowering `ū_Ȧ = ε̄_{ḂȦ} ū^Ḃ`.
pub fn lower_conj_spinor(u: &ConjSpinor) -> ConjCoSpinor {
    let low = lower_spinor(&TwoSpinor(u.0));
    ConjCoSpinor(low.0)
}

/// Conjugate-space raising `λ̄^Ȧ = ε̄^{ḂȦ} λ̄_Ḃ`.
pub fn raise_conj_spinor(l: &ConjCoSpinor) -> ConjSpinor {
    let up = raise_spinor(&CoSpinor(l.0));
    ConjSpinor(up.0)
}

/// The conjugation anti-isomorphism `U → Ū`.
pub fn conjugate_spinor(u: &TwoSpinor) -> ConjSpinor {
    ConjSpinor([u.0[0].conj(), u.0[1].conj()])
}

/// The inverse conjugation `Ū → U`.
pub fn conjugate_back(u: &ConjSpinor) -> TwoSpinor {
    TwoSpinor([u.0[0].conj(), u.0[1].conj()])
}

/// `U* → Ū*`.
pub fn conjugate_cospinor(l: &CoSpinor) -> ConjCoSpinor {
    ConjCoSpinor([l.0[0].conj(), l.0[1].conj()])
}

/// `Ū* → U*`.
pub fn conjugate_conj_cospinor(l: &ConjCoSpinor) -> CoSpinor {
    CoSpinor([l.0[0].conj(), l.0[1].conj()])
}

/// Pauli matrices `σ_0 = 1, σ_1, σ_2, σ_3`.
pub fn pauli(lambda: usize) -> Mat2 {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    match lambda {
        0 => Mat2::new(one, z, z, one),
        1 => Mat2::new(z, one, one, z),
        2 => Mat2::new(z, -i, i, z),
        3 => Mat2::new(one, z, z, -one),
        _ => panic!("Pauli index {lambda} out of range"),
    }
}

/// `Y^{AȦ} = (1/√2) Σ_λ σ_λ^{AȦ} Y^λ`.
pub fn pauli_to_herm(y: &[f64; 4]) -> Mat2 {
    (0..4).fold(Mat2::zeros(), |acc, l| acc + pauli(l) * c(y[l] / SQRT2, 0.0))
}

/// Inverse of [`pauli_to_herm`]. Rejects arrays that are not Hermitian.
pub fn herm_to_pauli(m: &Mat2) -> Result<[f64; 4]> {
    check_hermitian(m)?;
    Ok(herm_to_pauli_unchecked(m))
}

fn herm_to_pauli_unchecked(m: &Mat2) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (l, slot) in out.iter_mut().enumerate() {
        // Tr(σ_λ M) = √2 Y^λ
        *slot = (pauli(l) * m).trace().re / SQRT2;
    }
    out
}

/// Max entrywise deviation of `m` from `m†`.
pub fn hermitian_asymmetry(m: &Mat2) -> f64 {
    let d = m - m.adjoint();
    d.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

fn mat_max(m: &Mat2) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

fn check_hermitian(m: &Mat2) -> Result<()> {
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(SpinError::NonFinite);
    }
    let asym = hermitian_asymmetry(m);
    let allowed = tolerance::HERMITIAN * mat_max(m).max(f64::MIN_POSITIVE);
    if asym > allowed {
        return Err(SpinError::NotHermitian {
            asymmetry: asym,
            allowed,
        });
    }
    Ok(())
}

/// Element of `H`, held in both representations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkVector {
    pauli: [f64; 4],
    herm: Mat2,
}

/// Element of `H* ≅ H(U* ⊗ Ū*)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkCovector {
    pauli: [f64; 4],
    herm: Mat2,
}

impl MinkVector {
    pub fn from_pauli(y: [f64; 4]) -> Self {
        Self {
            pauli: y,
            herm: pauli_to_herm(&y),
        }
    }

    pub fn from_herm(m: Mat2) -> Result<Self> {
        let pauli = herm_to_pauli(&m)?;
        Ok(Self {
            pauli,
            herm: pauli_to_herm(&pauli),
        })
    }

    /// Pauli frame vector `τ_λ`.
    pub fn tau(lambda: usize) -> Self {
        let mut y = [0.0; 4];
        y[lambda] = 1.0;
        Self::from_pauli(y)
    }

    /// The isotropic element `u ⊗ ū`.
    pub fn null_from_spinor(u: &TwoSpinor) -> Self {
        let mut m = Mat2::zeros();
        for a in 0..2 {
            for b in 0..2 {
                m[(a, b)] = u.0[a] * u.0[b].conj();
            }
        }
        Self {
            pauli: herm_to_pauli_unchecked(&m),
            herm: m,
        }
    }

    pub fn pauli(&self) -> [f64; 4] {
        self.pauli
    }

    /// `Y^{AȦ}` with row `A`, column `Ȧ`.
    pub fn herm(&self) -> &Mat2 {
        &self.herm
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_pauli(self.pauli.map(|v| v * s))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut y = self.pauli;
        for (a, b) in y.iter_mut().zip(o.pauli) {
            *a += b;
        }
        Self::from_pauli(y)
    }

    /// `Y_{AȦ} = ε_{BA} ε̄_{ḂȦ} Y^{BḂ}` as a 2×2 array indexed `[A][Ȧ]`.
    pub fn lowered(&self) -> Mat2 {
        contract_both(&self.herm, &EPS_LOWER)
    }
}

impl MinkCovector {
    pub fn from_pauli(p: [f64; 4]) -> Self {
        let herm = (0..4).fold(Mat2::zeros(), |acc, l| {
            acc + pauli(l).map(|z| z.conj()) * c(p[l] / SQRT2, 0.0)
        });
        Self { pauli: p, herm }
    }

    pub fn from_herm(m: Mat2) -> Result<Self> {
        check_hermitian(&m)?;
        let mut p = [0.0; 4];
        for (l, slot) in p.iter_mut().enumerate() {
            let s: C64 = pauli(l).iter().zip(m.iter()).map(|(a, b)| a * b).sum();
            *slot = s.re / SQRT2;
        }
        Ok(Self::from_pauli(p))
    }

    pub fn pauli(&self) -> [f64; 4] {
        self.pauli
    }

    /// `P_{AȦ}` with row `A`, column `Ȧ`.
    pub fn herm(&self) -> &Mat2 {
        &self.herm
    }

    /// `⟨P, Y⟩ = P_{AȦ} Y^{AȦ}`.
    pub fn apply(&self, y: &MinkVector) -> f64 {
        let s: C64 = self.herm.iter().zip(y.herm.iter()).map(|(a, b)| a * b).sum();
        s.re
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_pauli(self.pauli.map(|v| v * s))
    }
}

/// `out_{AȦ} = e_{BA} e_{ḂȦ} m^{BḂ}`.
fn contract_both(m: &Mat2, e: &[[f64; 2]; 2]) -> Mat2 {
    let mut out = Mat2::zeros();
    for a in 0..2 {
        for ad in 0..2 {
            let mut s = c(0.0, 0.0);
            for b in 0..2 {
                for bd in 0..2 {
                    s += m[(b, bd)] * (e[b][a] * e[bd][ad]);
                }
            }
            out[(a, ad)] = s;
        }
    }
    out
}

/// `g(Y, Z) = ε_{BA} ε̄_{ḂȦ} Y^{BḂ} Z^{AȦ}`.
pub fn metric_g(y: &MinkVector, z: &MinkVector) -> f64 {
    let low = y.lowered();
    let s: C64 = low.iter().zip(z.herm.iter()).map(|(a, b)| a * b).sum();
    s.re
}

/// Index lowering `H → H*`.
pub fn lower_h(y: &MinkVector) -> MinkCovector {
    let low = y.lowered();
    // The lowered array is Hermitian by construction; recover Pauli
    // components in the dual frame without a redundant check.
    let mut p = [0.0; 4];
    for (l, slot) in p.iter_mut().enumerate() {
        let s: C64 = pauli(l).iter().zip(low.iter()).map(|(a, b)| a * b).sum();
        *slot = s.re / SQRT2;
    }
    MinkCovector {
        pauli: p,
        herm: low,
    }
}

/// Index raising `H* → H`, `Y^{AȦ} = ε^{BA} ε̄^{ḂȦ} Y_{BḂ}`.
pub fn raise_h(p: &MinkCovector) -> MinkVector {
    let up = contract_both(&p.herm, &EPS_UPPER);
    MinkVector {
        pauli: herm_to_pauli_unchecked(&up),
        herm: up,
    }
}

/// `g#(P, Q)`.
pub fn metric_dual(p: &MinkCovector, q: &MinkCovector) -> f64 {
    metric_g(&raise_h(p), &raise_h(q))
}

/// Minkowski product `diag(1,−1,−1,−1)` on Pauli components.
pub fn minkowski(y: &[f64; 4], z: &[f64; 4]) -> f64 {
    y[0] * z[0] - y[1] * z[1] - y[2] * z[2] - y[3] * z[3]
}

pub fn is_future_timelike(y: &MinkVector) -> bool {
    metric_g(y, y) > 0.0 && y.pauli[0] > 0.0
}
