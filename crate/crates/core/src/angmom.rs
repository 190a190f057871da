//! Angular-momentum representation `ρ` on `U` and its symmetric powers.
//!
//! The packed basis of `∨^r U` is `z_1^{r−a} z_2^a` for `a = 0..=r`, with
//! monomial normalization. Generators act as derivations (Leibniz rule).

use nalgebra::{DMatrix, SymmetricEigen};

use crate::spinor::pauli;
use crate::{c, linalg, tolerance, Mat2, Result, SpinError, C64};

/// The three generators `ρ_i` together with the Hermitian metric they are
/// anti-Hermitian for.
#[derive(Debug, Clone, PartialEq)]
pub struct AngMomBasis {
    pub rho: [Mat2; 3],
    pub metric: Mat2,
}

impl Default for AngMomBasis {
    fn default() -> Self {
        Self::standard()
    }
}

impl AngMomBasis {
    /// `ρ_i = −(i/2) σ_i`, orthonormal for the identity metric.
    pub fn standard() -> Self {
        Self {
            rho: [1, 2, 3].map(|i| pauli(i) * c(0.0, -0.5)),
            metric: Mat2::identity(),
        }
    }

    /// The basis adapted to a positive Hermitian metric `h`:
    /// `ρ_i ↦ h^{−1/2} ρ_i h^{1/2}`.
    pub fn with_metric(h: Mat2) -> Result<Self> {
        let asym = (h - h.adjoint()).iter().fold(0.0_f64, |m, z| m.max(z.norm()));
        let allowed = tolerance::HERMITIAN * linalg_max(&h).max(f64::MIN_POSITIVE);
        if asym > allowed {
            return Err(SpinError::NotHermitian {
                asymmetry: asym,
                allowed,
            });
        }
        let eig = SymmetricEigen::new(h);
        if eig.eigenvalues.iter().any(|&v| v <= 0.0) {
            return Err(SpinError::Layout("metric is not positive definite".into()));
        }
        let q = eig.eigenvectors;
        let root = |p: f64| {
            let d = Mat2::from_diagonal(&eig.eigenvalues.map(|v| c(v.powf(p), 0.0)));
            q * d * q.adjoint()
        };
        let (sqrt, inv_sqrt) = (root(0.5), root(-0.5));
        let std = Self::standard();
        Ok(Self {
            rho: std.rho.map(|r| inv_sqrt * r * sqrt),
            metric: h,
        })
    }

    /// `max |−2 Tr(ρ_i ρ_j) − δ_ij|`.
    pub fn orthonormality_residual(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                let t = (self.rho[i] * self.rho[j]).trace() * -2.0;
                let d = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((t - d).norm());
            }
        }
        worst
    }

    /// `max_i |ρ_i† h + h ρ_i|` together with `max_i |Tr ρ_i|`.
    pub fn anti_hermitian_residual(&self) -> f64 {
        self.rho.iter().fold(0.0_f64, |m, r| {
            let a = linalg_max(&(r.adjoint() * self.metric + self.metric * r));
            m.max(a).max(r.trace().norm())
        })
    }
}

fn linalg_max(m: &Mat2) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

/// Generators on packed `∨^r U`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymRep {
    pub r: usize,
    pub generators: [DMatrix<C64>; 3],
}

/// Leibniz extension of one `2×2` generator to packed `∨^r U`.
pub fn extend_generator(m: &Mat2, r: usize) -> DMatrix<C64> {
    let mut g = DMatrix::zeros(r + 1, r + 1);
    for a in 0..=r {
        let n1 = (r - a) as f64;
        let n2 = a as f64;
        g[(a, a)] = m[(0, 0)] * n1 + m[(1, 1)] * n2;
        if a < r {
            g[(a + 1, a)] = m[(1, 0)] * n1;
        }
        if a > 0 {
            g[(a - 1, a)] = m[(0, 1)] * n2;
        }
    }
    g
}

pub fn extend_rep(basis: &AngMomBasis, r: usize) -> SymRep {
    SymRep {
        r,
        generators: [0, 1, 2].map(|i| extend_generator(&basis.rho[i], r)),
    }
}

impl SymRep {
    pub fn dim(&self) -> usize {
        self.r + 1
    }

    /// `J² = −Σ ρ_i²`.
    pub fn casimir(&self) -> DMatrix<C64> {
        casimir_of(&self.generators)
    }

    /// Expected Casimir eigenvalue `(r/2)² + r/2`.
    pub fn casimir_value(&self) -> f64 {
        let s = self.r as f64 / 2.0;
        s * s + s
    }

    /// `‖J² − ((r/2)² + r/2) id‖_max`.
    pub fn casimir_residual(&self) -> f64 {
        let n = self.dim();
        let target = DMatrix::<C64>::identity(n, n) * c(self.casimir_value(), 0.0);
        linalg::max_entry(&(self.casimir() - target))
    }

    /// `max |[ρ_i, ρ_j] − Σ_k ϵ_ijk ρ_k|`.
    pub fn commutation_residual(&self) -> f64 {
        commutation_residual(&self.generators)
    }

    /// Eigenvalues of `J_3 = i ρ_3`, sorted descending.
    pub fn j3_spectrum(&self) -> Vec<f64> {
        let j3 = &self.generators[2] * c(0.0, 1.0);
        let mut ev: Vec<f64> = SymmetricEigen::new(j3).eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        ev
    }
}

/// Evidence for irreducibility: Schur commutant and Casimir.
#[derive(Debug, Clone, PartialEq)]
pub struct IrreducibilityReport {
    pub dim: usize,
    pub commutant_dim: usize,
    pub casimir_residual: f64,
}

pub fn irreducibility_witness(rep: &SymRep) -> IrreducibilityReport {
    IrreducibilityReport {
        dim: rep.dim(),
        commutant_dim: commutant_dimension(&rep.generators),
        casimir_residual: rep.casimir_residual(),
    }
}

pub fn casimir_of(gens: &[DMatrix<C64>; 3]) -> DMatrix<C64> {
    let n = gens[0].nrows();
    gens.iter()
        .fold(DMatrix::zeros(n, n), |acc, g| acc - g * g)
}

pub fn commutation_residual(gens: &[DMatrix<C64>; 3]) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..3 {
        for j in 0..3 {
            let comm = &gens[i] * &gens[j] - &gens[j] * &gens[i];
            let mut rhs = DMatrix::zeros(comm.nrows(), comm.ncols());
            for (k, g) in gens.iter().enumerate() {
                let eps = levi_civita(i, j, k);
                if eps != 0.0 {
                    rhs += g * c(eps, 0.0);
                }
            }
            worst = worst.max(linalg::max_entry(&(comm - rhs)));
        }
    }
    worst
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Dimension of `{X : [X, G] = 0 for all generators}`.
pub fn commutant_dimension(gens: &[DMatrix<C64>]) -> usize {
    let n = gens[0].nrows();
    let id = DMatrix::<C64>::identity(n, n);
    let blocks: Vec<DMatrix<C64>> = gens
        .iter()
        .map(|g| g.transpose().kronecker(&id) - id.kronecker(g))
        .collect();
    let mut stacked = DMatrix::zeros(blocks.len() * n * n, n * n);
    for (b, m) in blocks.iter().enumerate() {
        stacked.view_mut((b * n * n, 0), (n * n, n * n)).copy_from(m);
    }
    linalg::nullity(&stacked, tolerance::RANK)
}

/// Block-diagonal sum of two representations.
pub fn block_sum(a: &[DMatrix<C64>; 3], b: &[DMatrix<C64>; 3]) -> [DMatrix<C64>; 3] {
    [0, 1, 2].map(|i| {
        let (na, nb) = (a[i].nrows(), b[i].nrows());
        let mut m = DMatrix::zeros(na + nb, na + nb);
        m.view_mut((0, 0), (na, na)).copy_from(&a[i]);
        m.view_mut((na, na), (nb, nb)).copy_from(&b[i]);
        m
    })
}

/// The `2(2j+1)`-dimensional representation on `∨^{2j}U ⊕ ∨^{2j}Ū*`: the
/// symmetric power of `ρ` and of its conjugate dual `−ρ̄*`.
pub fn jw_representation(basis: &AngMomBasis, two_j: usize) -> [DMatrix<C64>; 3] {
    let primal = extend_rep(basis, two_j).generators;
    let dual = [0, 1, 2].map(|i| {
        let m = -basis.rho[i].map(|z| z.conj()).transpose();
        extend_generator(&m, two_j)
    });
    block_sum(&primal, &dual)
}
