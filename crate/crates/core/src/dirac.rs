//! Dirac spinors `W = U ⊕ Ū*`, the Clifford map and the Dirac adjunction.
//!
//! The 4×4 form of `γ[Y]` uses the basis order `(z_1, z_2, z̄^1̇, z̄^2̇)`.
//! Its two off-diagonal blocks are
//!
//! * `U → Ū*`: `(γ[Y]u)_Ȧ = √2 u^A Y_{AȦ}`
//! * `Ū* → U`: `(γ[Y]λ̄)^A = √2 Y^{AȦ} λ̄_Ȧ`
//!
//! and both diagonal blocks vanish.

use nalgebra::Vector4;

use crate::spinor::{metric_g, ConjCoSpinor, ConjSpinor, CoSpinor, MinkVector, TwoSpinor};
use crate::{c, Mat2, Mat4, C64, SQRT2};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracSpinor {
    pub u: TwoSpinor,
    pub lbar: ConjCoSpinor,
}

/// Element of `W* = U* ⊕ Ū`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracCoSpinor {
    pub l: CoSpinor,
    pub ubar: ConjSpinor,
}

impl DiracSpinor {
    pub fn new(u: TwoSpinor, lbar: ConjCoSpinor) -> Self {
        Self { u, lbar }
    }

    pub fn to_vector(&self) -> Vector4<C64> {
        Vector4::new(self.u.0[0], self.u.0[1], self.lbar.0[0], self.lbar.0[1])
    }

    pub fn from_vector(v: &Vector4<C64>) -> Self {
        Self {
            u: TwoSpinor([v[0], v[1]]),
            lbar: ConjCoSpinor([v[2], v[3]]),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::new(self.u.scale(s), self.lbar.scale(s))
    }
}

impl DiracCoSpinor {
    pub fn to_vector(&self) -> Vector4<C64> {
        Vector4::new(self.l.0[0], self.l.0[1], self.ubar.0[0], self.ubar.0[1])
    }

    pub fn from_vector(v: &Vector4<C64>) -> Self {
        Self {
            l: CoSpinor([v[0], v[1]]),
            ubar: ConjSpinor([v[2], v[3]]),
        }
    }
}

/// The 2×2 block `U → Ū*`, rows `Ȧ`, columns `A`: `√2 Y_{AȦ}` transposed.
pub fn gamma_u_to_lbar(y: &MinkVector) -> Mat2 {
    y.lowered().transpose() * c(SQRT2, 0.0)
}

/// The 2×2 block `Ū* → U`, rows `A`, columns `Ȧ`: `√2 Y^{AȦ}`.
pub fn gamma_lbar_to_u(y: &MinkVector) -> Mat2 {
    y.herm() * c(SQRT2, 0.0)
}

/// `γ[Y]` as an endomorphism of `W`.
pub fn gamma(y: &MinkVector) -> Mat4 {
    let mut m = Mat4::zeros();
    m.fixed_view_mut::<2, 2>(0, 2).copy_from(&gamma_lbar_to_u(y));
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(&gamma_u_to_lbar(y));
    m
}

pub fn apply_gamma(y: &MinkVector, psi: &DiracSpinor) -> DiracSpinor {
    DiracSpinor::from_vector(&(gamma(y) * psi.to_vector()))
}

/// `‖γ[Y]γ[Z] + γ[Z]γ[Y] − 2 g(Y,Z) id‖_max`.
pub fn clifford_residual(y: &MinkVector, z: &MinkVector) -> f64 {
    let gy = gamma(y);
    let gz = gamma(z);
    let target = Mat4::identity() * c(2.0 * metric_g(y, z), 0.0);
    (gy * gz + gz * gy - target)
        .iter()
        .fold(0.0_f64, |m, v| m.max(v.norm()))
}

/// `(u, λ̄) ↦ (λ, ū)`: anti-linear.
pub fn dirac_adjoint(psi: &DiracSpinor) -> DiracCoSpinor {
    DiracCoSpinor {
        l: CoSpinor([psi.lbar.0[0].conj(), psi.lbar.0[1].conj()]),
        ubar: ConjSpinor([psi.u.0[0].conj(), psi.u.0[1].conj()]),
    }
}

/// Inverse of [`dirac_adjoint`].
pub fn dirac_adjoint_inverse(chi: &DiracCoSpinor) -> DiracSpinor {
    DiracSpinor {
        u: TwoSpinor([chi.ubar.0[0].conj(), chi.ubar.0[1].conj()]),
        lbar: ConjCoSpinor([chi.l.0[0].conj(), chi.l.0[1].conj()]),
    }
}

/// Natural pairing `⟨χ, ψ⟩ = l_A u^A + ū^Ȧ λ̄_Ȧ`.
pub fn pair(chi: &DiracCoSpinor, psi: &DiracSpinor) -> C64 {
    chi.to_vector().dot(&psi.to_vector())
}

/// Gram matrix of the Hermitian form `(ψ, φ) ↦ ⟨ψ̄, φ⟩` in the standard basis.
pub fn adjunction_gram() -> Mat4 {
    let mut g = Mat4::zeros();
    for i in 0..4 {
        let mut e = Vector4::zeros();
        e[i] = c(1.0, 0.0);
        let bar = dirac_adjoint(&DiracSpinor::from_vector(&e)).to_vector();
        for j in 0..4 {
            // ⟨ē_i, e_j⟩ is the (i, j) entry of the sesquilinear form.
            g[(i, j)] = bar[j];
        }
    }
    g
}

/// Transpose action of `γ[Y]` on `W*`, characterized by
/// `⟨γᵀχ, ψ⟩ = ⟨χ, γψ⟩`.
pub fn gamma_transpose(y: &MinkVector) -> Mat4 {
    gamma(y).transpose()
}

pub fn apply_gamma_transpose(y: &MinkVector, chi: &DiracCoSpinor) -> DiracCoSpinor {
    DiracCoSpinor::from_vector(&(gamma_transpose(y) * chi.to_vector()))
}

/// Residuals of
/// `Y^{AȦ}Y_{BȦ} = ½g δ^A_B`, `Y^{AȦ}Y_{AḂ} = ½g δ^Ȧ_Ḃ`, `Y^{AȦ}Y_{AȦ} = g`.
pub fn contraction_identities(y: &MinkVector) -> [f64; 3] {
    let up = y.herm();
    let low = y.lowered();
    let g = metric_g(y, y);
    let mut r1 = 0.0_f64;
    let mut r2 = 0.0_f64;
    for a in 0..2 {
        for b in 0..2 {
            let d = if a == b { 0.5 * g } else { 0.0 };
            let s1: C64 = (0..2).map(|ad| up[(a, ad)] * low[(b, ad)]).sum();
            let s2: C64 = (0..2).map(|aa| up[(aa, a)] * low[(aa, b)]).sum();
            r1 = r1.max((s1 - d).norm());
            r2 = r2.max((s2 - d).norm());
        }
    }
    let full: C64 = up.iter().zip(low.iter()).map(|(p, q)| p * q).sum();
    [r1, r2, (full - g).norm()]
}
