//! Momentum-space and flat-spacetime field theory on `W^{2j}`.
//!
//! Positive-energy plane waves are `Ψ(X) = e^{−i⟨P,X⟩} Ψ̲` and their dual
//! partners `Ψ̄(X) = e^{+i⟨P,X⟩} Ψ̲̄`. The generalised Dirac operator is
//! `D̸ = Σ_a η^{aa} γ̌[τ_a] ∂_a` in the orthonormal Pauli frame, so on a plane
//! wave `i D̸ Ψ = γ̌[P^#] Ψ`.

use nalgebra::DMatrix;

use crate::dirac::gamma_u_to_lbar;
use crate::linalg;
use crate::sectors::{
    cgamma, cgamma_dual, cgamma_power, sector_sequence, total_dim, transpose_tilde,
    HigherSpinField, SectorId, SectorTensor,
};
use crate::spinor::{
    is_future_timelike, metric_dual, raise_h, ConjCoSpinor, MinkCovector, MinkVector, TwoSpinor,
};
use crate::dirac::{gamma, DiracSpinor};
use crate::wtensor::{gamma_n, WTensor};
use crate::{c, tolerance, Result, SpinError, C64};

const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// An on-shell, future-pointing momentum covector with its mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Momentum {
    p: MinkCovector,
    m: f64,
}

impl Momentum {
    pub fn new(p: MinkCovector, m: f64) -> Result<Self> {
        if !(m.is_finite() && m > 0.0) {
            return Err(SpinError::BadMass(m));
        }
        let norm = metric_dual(&p, &p);
        if (norm - m * m).abs() > tolerance::MASS_SHELL * m * m {
            return Err(SpinError::OffShell {
                norm,
                mass_sq: m * m,
            });
        }
        if !is_future_timelike(&raise_h(&p)) {
            return Err(SpinError::PastPointing);
        }
        Ok(Self { p, m })
    }

    /// `P_λ = (√(m² + |p|²), p_1, p_2, p_3)`.
    pub fn from_spatial(m: f64, p: [f64; 3]) -> Result<Self> {
        if !(m.is_finite() && m > 0.0) {
            return Err(SpinError::BadMass(m));
        }
        let e = (m * m + p.iter().map(|x| x * x).sum::<f64>()).sqrt();
        Self::new(MinkCovector::from_pauli([e, p[0], p[1], p[2]]), m)
    }

    pub fn rest(m: f64) -> Result<Self> {
        Self::from_spatial(m, [0.0; 3])
    }

    pub fn covector(&self) -> &MinkCovector {
        &self.p
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    /// `P^#`.
    pub fn raised(&self) -> MinkVector {
        raise_h(&self.p)
    }
}

/// Solves `γ̌[P] Ψ = m Ψ` from its main sector: each successor sector is
/// `(1/m) γ̌[P^#]` of its predecessor.
pub fn solve_algebraic(two_j: usize, p: &Momentum, main: &SectorTensor) -> Result<HigherSpinField> {
    let want = SectorId::plain(two_j, 0);
    if main.id() != want {
        return Err(SpinError::WrongSector {
            expected: want,
            found: main.id(),
        });
    }
    if two_j == 0 {
        return HigherSpinField::from_sectors(0, vec![main.clone()]);
    }
    let y = p.raised();
    let inv_m = c(1.0 / p.m, 0.0);
    let n = sector_sequence(two_j).len();
    let mut sectors = Vec::with_capacity(n);
    sectors.push(main.clone());
    for i in 1..n {
        let next = cgamma(&y, &sectors[i - 1])?.scale(inv_m);
        sectors.push(next);
    }
    HigherSpinField::from_sectors(two_j, sectors)
}

/// `max_s ‖γ̌[P^#] Ψ_s − m Ψ_{succ(s)}‖_max`. Zero for `j = 0`.
pub fn algebraic_residual(psi: &HigherSpinField, p: &Momentum) -> Result<f64> {
    if psi.two_j() == 0 {
        return Ok(0.0);
    }
    let image = psi.apply_cgamma(&p.raised())?;
    image.max_diff(&psi.scale(c(p.m, 0.0)))
}

/// Residual of the momentum-space Joos-Weinberg form
/// `m^{−2j} (γ̌[P])^{2j} Ψ_s = transpose(Ψ_{s'})`, where `s'` is the
/// transpose partner of the target sector, over all sectors `s`.
pub fn jw_residual(psi: &HigherSpinField, p: &Momentum) -> Result<f64> {
    let r = psi.two_j();
    if r == 0 {
        return Ok(0.0);
    }
    let y = p.raised();
    let scale = c(p.m.powi(-(r as i32)), 0.0);
    let mut worst = 0.0_f64;
    for s in psi.sectors() {
        let lhs = cgamma_power(&y, s, r)?.scale(scale);
        let partner = psi
            .sector(lhs.id().transposed())
            .ok_or(SpinError::NoContraction(lhs.id()))?;
        worst = worst.max(lhs.max_diff(&transpose_tilde(partner))?);
    }
    Ok(worst)
}

/// The restricted `2(2j+1)`-dimensional form: `m^{−2j}(γ̌[P])^{2j}` exchanges
/// the main sector and `tilde(2j,0)` both ways.
pub fn jw_restricted_residual(psi: &HigherSpinField, p: &Momentum) -> Result<f64> {
    let r = psi.two_j();
    if r == 0 {
        return Ok(0.0);
    }
    let y = p.raised();
    let inv = c(p.m.powi(-(r as i32)), 0.0);
    let main = psi.main();
    let low = psi
        .sector(SectorId::tilde(r, 0))
        .ok_or(SpinError::NoContraction(main.id()))?;
    let a = cgamma_power(&y, main, r)?.scale(inv).max_diff(low)?;
    let b = cgamma_power(&y, low, r)?.scale(inv).max_diff(main)?;
    Ok(a.max(b))
}

/// Kernel dimension of `Ψ ↦ γ̌[P^#]Ψ − mΨ` on all of `W^{2j}`.
pub fn solution_space_nullity(two_j: usize, p: &Momentum) -> Result<usize> {
    Ok(linalg::nullity(&residual_matrix(two_j, p)?, tolerance::RANK))
}

/// Matrix of `Ψ ↦ γ̌[P^#]Ψ − mΨ` in packed coordinates.
pub fn residual_matrix(two_j: usize, p: &Momentum) -> Result<DMatrix<C64>> {
    if two_j == 0 {
        return Err(SpinError::NoContraction(SectorId::plain(0, 0)));
    }
    let y = p.raised();
    let m = c(p.m, 0.0);
    Ok(linalg::matrix_of(total_dim(two_j), |v| {
        let psi = HigherSpinField::from_packed(two_j, v).expect("packed length");
        let image = psi.apply_cgamma(&y).expect("2j ≥ 1");
        image.try_sub(&psi.scale(m)).expect("same layout").packed()
    }))
}

/// The `+m` eigenvectors `e_A = (z_A, γ_{U→Ū*}[P^#] z_A / m)` of `γ[P^#]`.
pub fn positive_energy_basis(p: &Momentum) -> [DiracSpinor; 2] {
    let block = gamma_u_to_lbar(&p.raised());
    let inv_m = 1.0 / p.m;
    [0, 1].map(|a| {
        let mut z = [c(0.0, 0.0); 2];
        z[a] = c(1.0, 0.0);
        let l = [0, 1].map(|i| block[(i, a)] * inv_m);
        DiracSpinor::new(TwoSpinor(z), ConjCoSpinor(l))
    })
}

/// Basis of the symmetric rank-`r` solutions of `γ_(n)[P] t = m t`,
/// `n = 1..=r`: the symmetrized products `e_1^{r−a} ∨ e_2^a`.
pub fn bw_solve(r: usize, p: &Momentum) -> Vec<WTensor> {
    let e = positive_energy_basis(p);
    (0..=r)
        .map(|a| {
            let factors: Vec<DiracSpinor> =
                (0..r).map(|s| if s < r - a { e[0] } else { e[1] }).collect();
            WTensor::product(&factors).symmetrized()
        })
        .collect()
}

/// `max_n ‖γ_(n)[P^#] t − m t‖_max`.
pub fn bw_residual(t: &WTensor, p: &Momentum) -> Result<f64> {
    let y = p.raised();
    let mt = t.scale(c(p.m, 0.0));
    (1..=t.rank()).try_fold(0.0_f64, |acc, n| Ok(acc.max(gamma_n(&y, t, n)?.max_diff(&mt))))
}

/// `‖γ_(1)[P^#] ⋯ γ_(r)[P^#] t − m^r t‖_max`.
pub fn jw_operator_check(t: &WTensor, p: &Momentum) -> Result<f64> {
    let g = gamma(&p.raised());
    let image = (1..=t.rank()).try_fold(t.clone(), |acc, n| acc.apply_slot(&g, n))?;
    Ok(image.max_diff(&t.scale(c(p.m.powi(t.rank() as i32), 0.0))))
}

/// A field on `W*^{2j}`: sector `i` holds the dual of sector `i` of the
/// cyclic list.
#[derive(Debug, Clone, PartialEq)]
pub struct DualField(HigherSpinField);

impl DualField {
    pub fn zeros(two_j: usize) -> Self {
        Self(HigherSpinField::zeros(two_j))
    }

    /// Wraps components laid out like a primal field of the same `j`.
    pub fn from_components(components: HigherSpinField) -> Self {
        Self(components)
    }

    pub fn components(&self) -> &HigherSpinField {
        &self.0
    }

    pub fn two_j(&self) -> usize {
        self.0.two_j()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self(self.0.scale(s))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.max_abs()
    }

    pub fn max_diff(&self, other: &Self) -> Result<f64> {
        self.0.max_diff(&other.0)
    }

    /// The extended Dirac map on the dual sequence.
    pub fn apply_cgamma(&self, y: &MinkVector) -> Result<Self> {
        self.0.apply_with(|t| cgamma_dual(y, t)).map(Self)
    }
}

/// Index of the adjoint partner: `plain(h,k) ↔ tilde(h,k)`, which in the
/// cyclic list is a shift by `2j`.
fn adjoint_slot(i: usize, two_j: usize) -> usize {
    if two_j == 0 {
        0
    } else {
        (i + two_j) % (2 * two_j)
    }
}

/// Sectorwise conjugation: `Ψ̄` on the dual of `tilde(h,k)` is `conj Ψ` on
/// `plain(h,k)` and vice versa. At `j = ½` this is the Dirac adjunction.
pub fn adjoint_field(psi: &HigherSpinField) -> DualField {
    DualField(shift_conj(psi))
}

/// Inverse of [`adjoint_field`].
pub fn adjoint_field_inverse(psibar: &DualField) -> HigherSpinField {
    shift_conj(&psibar.0)
}

fn shift_conj(psi: &HigherSpinField) -> HigherSpinField {
    let two_j = psi.two_j();
    let src = psi.sectors();
    let ids = sector_sequence(two_j);
    let sectors = ids
        .iter()
        .enumerate()
        .map(|(i, id)| {
            let s = &src[adjoint_slot(i, two_j)];
            SectorTensor::from_packed(*id, &s.conj().packed()).expect("partner shapes agree")
        })
        .collect();
    HigherSpinField::from_sectors(two_j, sectors).expect("sequence layout")
}

/// `⟨Ψ̄, Ψ⟩`: sum over sectors of the full index contraction.
pub fn pairing(psibar: &DualField, psi: &HigherSpinField) -> Result<C64> {
    if psibar.two_j() != psi.two_j() {
        return Err(SpinError::Layout(format!(
            "dual 2j = {} vs primal 2j = {}",
            psibar.two_j(),
            psi.two_j()
        )));
    }
    psibar
        .0
        .sectors()
        .iter()
        .zip(psi.sectors())
        .try_fold(c(0.0, 0.0), |acc, (a, b)| Ok(acc + a.contract(b)?))
}

/// Constant-amplitude positive-energy plane wave.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWave {
    momentum: Momentum,
    amplitude: HigherSpinField,
}

impl PlaneWave {
    /// Checks that the amplitude solves the algebraic equation.
    pub fn new(momentum: Momentum, amplitude: HigherSpinField) -> Result<Self> {
        let res = algebraic_residual(&amplitude, &momentum)?;
        let allowed = tolerance::DEFAULT * amplitude.max_abs().max(1.0) * momentum.m.max(1.0);
        if res > allowed {
            return Err(SpinError::Layout(format!(
                "amplitude is not a solution: residual {res:e} > {allowed:e}"
            )));
        }
        Ok(Self { momentum, amplitude })
    }

    pub fn solve(two_j: usize, momentum: Momentum, main: &SectorTensor) -> Result<Self> {
        let amplitude = solve_algebraic(two_j, &momentum, main)?;
        Ok(Self { momentum, amplitude })
    }

    pub fn momentum(&self) -> &Momentum {
        &self.momentum
    }

    pub fn amplitude(&self) -> &HigherSpinField {
        &self.amplitude
    }

    pub fn two_j(&self) -> usize {
        self.amplitude.two_j()
    }
}

/// `⟨P, X⟩ = Σ_λ P_λ X^λ`.
pub fn phase_argument(p: &MinkCovector, x: &[f64; 4]) -> f64 {
    p.pauli().iter().zip(x).map(|(a, b)| a * b).sum()
}

/// `Ψ(X) = e^{−i⟨P,X⟩} Ψ̲`.
pub fn plane_wave_eval(w: &PlaneWave, x: &[f64; 4]) -> HigherSpinField {
    let phi = phase_argument(&w.momentum.p, x);
    w.amplitude.scale(C64::from_polar(1.0, -phi))
}

/// `Ψ̄(X) = e^{+i⟨P,X⟩} Ψ̲̄`.
pub fn dual_plane_wave_eval(amplitude: &DualField, p: &MinkCovector, x: &[f64; 4]) -> DualField {
    amplitude.scale(C64::from_polar(1.0, phase_argument(p, x)))
}

/// `D̸Ψ = Σ_a η^{aa} γ̌[τ_a] ∂_aΨ` from the four partial derivatives.
pub fn dirac_slash(partials: &[HigherSpinField; 4]) -> Result<HigherSpinField> {
    let mut out = HigherSpinField::zeros(partials[0].two_j());
    for (a, d) in partials.iter().enumerate() {
        let term = d.apply_cgamma(&MinkVector::tau(a))?.scale(c(ETA[a], 0.0));
        out = out.try_add(&term)?;
    }
    Ok(out)
}

/// Dual counterpart of [`dirac_slash`].
pub fn dirac_slash_dual(partials: &[DualField; 4]) -> Result<DualField> {
    let mut out = HigherSpinField::zeros(partials[0].two_j());
    for (a, d) in partials.iter().enumerate() {
        let term = d.apply_cgamma(&MinkVector::tau(a))?.0.scale(c(ETA[a], 0.0));
        out = out.try_add(&term)?;
    }
    Ok(DualField(out))
}

/// Exact partial derivatives `∂_a Ψ = −i P_a Ψ` of a plane wave.
pub fn plane_wave_partials(w: &PlaneWave, x: &[f64; 4]) -> [HigherSpinField; 4] {
    let psi = plane_wave_eval(w, x);
    let p = w.momentum.p.pauli();
    [0, 1, 2, 3].map(|a| psi.scale(c(0.0, -p[a])))
}

/// Central-difference partial derivatives of an arbitrary field.
pub fn fd_partials<F>(f: F, x: &[f64; 4], spacing: f64) -> Result<[HigherSpinField; 4]>
where
    F: Fn(&[f64; 4]) -> HigherSpinField,
{
    if !(spacing.is_finite() && spacing > 0.0) {
        return Err(SpinError::BadSpacing(spacing));
    }
    let mut out = Vec::with_capacity(4);
    for a in 0..4 {
        let mut xp = *x;
        let mut xm = *x;
        xp[a] += spacing;
        xm[a] -= spacing;
        let d = f(&xp).try_sub(&f(&xm))?.scale(c(0.5 / spacing, 0.0));
        out.push(d);
    }
    Ok(out.try_into().expect("four directions"))
}

/// `‖i D̸Ψ − mΨ‖_max` at `X` with finite-difference derivatives.
pub fn dirac_operator_fd(w: &PlaneWave, x: &[f64; 4], spacing: f64) -> Result<f64> {
    let partials = fd_partials(|pt| plane_wave_eval(w, pt), x, spacing)?;
    dirac_equation_residual(w, x, &partials)
}

/// `‖i D̸Ψ − mΨ‖_max` at `X` with exact derivatives.
pub fn dirac_operator_analytic(w: &PlaneWave, x: &[f64; 4]) -> Result<f64> {
    dirac_equation_residual(w, x, &plane_wave_partials(w, x))
}

fn dirac_equation_residual(w: &PlaneWave, x: &[f64; 4], partials: &[HigherSpinField; 4]) -> Result<f64> {
    if w.two_j() == 0 {
        return Ok(0.0);
    }
    let psi = plane_wave_eval(w, x);
    let lhs = dirac_slash(partials)?.scale(c(0.0, 1.0));
    lhs.max_diff(&psi.scale(c(w.momentum.m, 0.0)))
}

/// `ℓ = (i/2)(⟨Ψ̄, D̸Ψ⟩ − ⟨D̸Ψ̄, Ψ⟩) − m⟨Ψ̄, Ψ⟩` (flat frame, unit volume).
pub fn lagrangian_density(
    psi: &HigherSpinField,
    psibar: &DualField,
    d_psi: &[HigherSpinField; 4],
    d_psibar: &[DualField; 4],
    m: f64,
) -> Result<C64> {
    let kinetic = pairing(psibar, &dirac_slash(d_psi)?)? - pairing(&dirac_slash_dual(d_psibar)?, psi)?;
    Ok(c(0.0, 0.5) * kinetic - pairing(psibar, psi)? * m)
}

/// `(‖iD̸Ψ − mΨ‖, ‖−iD̸Ψ̄ − mΨ̄‖)` for the plane-wave pair with amplitudes
/// `psi`, `psibar` and momentum `p` (not required to be on shell), at the
/// origin.
pub fn field_equation_residuals(
    psi: &HigherSpinField,
    psibar: &DualField,
    p: &MinkCovector,
    m: f64,
) -> Result<(f64, f64)> {
    if psi.two_j() == 0 {
        return Ok((0.0, 0.0));
    }
    let pl = p.pauli();
    let d_psi = [0, 1, 2, 3].map(|a| psi.scale(c(0.0, -pl[a])));
    let d_bar = [0, 1, 2, 3].map(|a| psibar.scale(c(0.0, pl[a])));
    let r1 = dirac_slash(&d_psi)?
        .scale(c(0.0, 1.0))
        .max_diff(&psi.scale(c(m, 0.0)))?;
    let r2 = dirac_slash_dual(&d_bar)?
        .scale(c(0.0, -1.0))
        .max_diff(&psibar.scale(c(m, 0.0)))?;
    Ok((r1, r2))
}

/// Canonical energy tensor `U^a_b`, row `a`, column `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyTensor {
    pub values: [[C64; 4]; 4],
    pub lagrangian: C64,
}

impl EnergyTensor {
    pub fn real(&self) -> [[f64; 4]; 4] {
        self.values.map(|row| row.map(|z| z.re))
    }

    pub fn imag_max(&self) -> f64 {
        self.values.iter().flatten().fold(0.0_f64, |m, z| m.max(z.im.abs()))
    }

    fn matrix(&self) -> DMatrix<C64> {
        DMatrix::from_fn(4, 4, |a, b| self.values[a][b])
    }

    pub fn singular_values(&self) -> Vec<f64> {
        linalg::singular_values(&self.matrix())
    }

    pub fn rank(&self, rel_tol: f64) -> usize {
        linalg::rank(&self.matrix(), rel_tol)
    }

    /// `max |U^a_b − c^a P_b|` with `c^a` the least-squares coefficient.
    pub fn factor_residual(&self, p: &MinkCovector) -> f64 {
        let pl = p.pauli();
        let pp: f64 = pl.iter().map(|v| v * v).sum();
        let mut worst = 0.0_f64;
        for row in &self.values {
            let coef: C64 = row.iter().zip(&pl).map(|(u, q)| u * q).sum::<C64>() / pp;
            for (u, q) in row.iter().zip(&pl) {
                worst = worst.max((u - coef * q).norm());
            }
        }
        worst
    }

    /// `Σ_b U^a_b v^b`.
    pub fn contract_b(&self, v: &[f64; 4]) -> [C64; 4] {
        self.values
            .map(|row| row.iter().zip(v).map(|(u, x)| u * x).sum())
    }
}

/// `U^a_b = ℓ δ^a_b − (i/2)⟨Ψ̄, γ̌^a ∂_bΨ⟩ + (i/2)⟨γ̌^a ∂_bΨ̄, Ψ⟩` for a
/// plane-wave pair at the origin, with `γ̌^a = η^{aa} γ̌[τ_a]`.
pub fn energy_tensor_pair(
    w: &PlaneWave,
    psibar: &DualField,
) -> Result<EnergyTensor> {
    let psi = w.amplitude.clone();
    let pl = w.momentum.p.pauli();
    let d_psi = [0, 1, 2, 3].map(|a| psi.scale(c(0.0, -pl[a])));
    let d_bar = [0, 1, 2, 3].map(|a| psibar.scale(c(0.0, pl[a])));
    let ell = lagrangian_density(&psi, psibar, &d_psi, &d_bar, w.momentum.m)?;
    let half_i = c(0.0, 0.5);
    let mut values = [[c(0.0, 0.0); 4]; 4];
    for (a, row) in values.iter_mut().enumerate() {
        let tau = MinkVector::tau(a);
        let eta = c(ETA[a], 0.0);
        for (b, slot) in row.iter_mut().enumerate() {
            let g_dpsi = d_psi[b].apply_cgamma(&tau)?.scale(eta);
            let g_dbar = d_bar[b].apply_cgamma(&tau)?.scale(eta);
            let mut v = -half_i * pairing(psibar, &g_dpsi)? + half_i * pairing(&g_dbar, &psi)?;
            if a == b {
                v += ell;
            }
            *slot = v;
        }
    }
    Ok(EnergyTensor {
        values,
        lagrangian: ell,
    })
}

/// Energy tensor of a plane wave paired with its adjoint.
pub fn energy_tensor(w: &PlaneWave) -> Result<EnergyTensor> {
    energy_tensor_pair(w, &adjoint_field(&w.amplitude))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{dirac_adjoint, pair};

    #[test]
    fn off_shell_and_past_pointing_rejected() {
        assert!(matches!(
            Momentum::new(MinkCovector::from_pauli([2.0, 0.0, 0.0, 0.0]), 1.0),
            Err(SpinError::OffShell { .. })
        ));
        assert!(matches!(
            Momentum::new(MinkCovector::from_pauli([-1.0, 0.0, 0.0, 0.0]), 1.0),
            Err(SpinError::PastPointing)
        ));
        assert!(matches!(Momentum::rest(0.0), Err(SpinError::BadMass(_))));
    }

    #[test]
    fn spin_half_rest_frame() {
        let p = Momentum::rest(1.5).unwrap();
        let main = SectorTensor::from_packed(SectorId::plain(1, 0), &[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let psi = solve_algebraic(1, &p, &main).unwrap();
        let lbar = psi.sector(SectorId::tilde(1, 0)).unwrap();
        assert!((lbar.data()[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!(algebraic_residual(&psi, &p).unwrap() < 1e-14);
    }

    #[test]
    fn adjoint_is_dirac_adjoint_at_spin_half() {
        let psi = HigherSpinField::from_packed(1, &[c(1.0, 2.0), c(-0.5, 0.1), c(0.3, -0.7), c(2.0, 0.0)]).unwrap();
        let bar = adjoint_field(&psi);
        let d = DiracSpinor::new(
            TwoSpinor([c(1.0, 2.0), c(-0.5, 0.1)]),
            ConjCoSpinor([c(0.3, -0.7), c(2.0, 0.0)]),
        );
        let want = pair(&dirac_adjoint(&d), &d);
        assert!((pairing(&bar, &psi).unwrap() - want).norm() < 1e-15);
        assert_eq!(adjoint_field_inverse(&bar), psi);
    }

    #[test]
    fn zero_spacing_rejected() {
        let p = Momentum::rest(1.0).unwrap();
        let w = PlaneWave::solve(1, p, &SectorTensor::zeros(SectorId::plain(1, 0))).unwrap();
        assert!(matches!(
            dirac_operator_fd(&w, &[0.0; 4], 0.0),
            Err(SpinError::BadSpacing(_))
        ));
    }
}
