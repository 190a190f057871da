//! Composite field types: complexified vector fields with their first-order
//! extensions, antisymmetric spinors on `W^[2]`, and spin-2 fields.

use nalgebra::{DMatrix, Matrix2x4, Matrix4x2};

use crate::dirac::gamma;
use crate::field::{solve_algebraic, algebraic_residual, Momentum};
use crate::sectors::{HigherSpinField, SectorId, SectorTensor};
use crate::spinor::{MinkVector, EPS_LOWER, EPS_UPPER};
use crate::{c, linalg, tolerance, Mat2, Result, SpinError, C64, SQRT2};

fn mat_max(m: impl IntoIterator<Item = C64>) -> f64 {
    m.into_iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

/// `V^{AȦ} ∈ U ⊗ Ū`, not necessarily Hermitian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorField {
    pub v: Mat2,
}

/// `V′ ∈ (U ⊕ Ū*) ⊗ Ū` as a 4×2 array (rows over `W`, columns over `Ū`)
/// and `V″ ∈ U ⊗ (Ū ⊕ U*)` as a 2×4 array (rows over `U`, columns over
/// `W̄ = Ū ⊕ U*`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorExtended {
    pub prime: Matrix4x2<C64>,
    pub dprime: Matrix2x4<C64>,
}

/// `γ_(1)[Y]` on `W ⊗ Ū`.
pub fn gamma_first(y: &MinkVector, t: &Matrix4x2<C64>) -> Matrix4x2<C64> {
    gamma(y) * t
}

/// `γ_(2)[Y]` on `U ⊗ W̄`, where `W̄` carries the conjugate map.
pub fn gamma_second(y: &MinkVector, t: &Matrix2x4<C64>) -> Matrix2x4<C64> {
    t * gamma(y).map(|z| z.conj()).transpose()
}

/// `γ_(1)[Y]V` for `V ∈ U ⊗ Ū`: the whole image lies in `Ū* ⊗ Ū`.
pub fn gamma_on_vector(y: &MinkVector, v: &VectorField) -> Matrix4x2<C64> {
    let mut t = Matrix4x2::zeros();
    t.fixed_view_mut::<2, 2>(0, 0).copy_from(&v.v);
    gamma_first(y, &t)
}

/// `V′ = (V, γ_(1)[P]V / m)` and `V″ = (V†, γ_(2)[P]V† / m)`.
pub fn vector_extend(v: &VectorField, p: &Momentum) -> VectorExtended {
    let y = p.raised();
    let inv_m = c(1.0 / p.mass(), 0.0);
    let mut prime = gamma_on_vector(&y, v) * inv_m;
    prime.fixed_view_mut::<2, 2>(0, 0).copy_from(&v.v);
    let mut seed = Matrix2x4::zeros();
    seed.fixed_view_mut::<2, 2>(0, 0).copy_from(&v.v.adjoint());
    let mut dprime = gamma_second(&y, &seed) * inv_m;
    dprime.fixed_view_mut::<2, 2>(0, 0).copy_from(&v.v.adjoint());
    VectorExtended { prime, dprime }
}

/// `‖γ_(1)[P]V′ − mV′‖_max`.
pub fn prime_residual(ext: &VectorExtended, p: &Momentum) -> f64 {
    mat_max((gamma_first(&p.raised(), &ext.prime) - ext.prime * c(p.mass(), 0.0)).iter().copied())
}

/// `‖γ_(2)[P]V″ − mV″‖_max`.
pub fn dprime_residual(ext: &VectorExtended, p: &Momentum) -> f64 {
    mat_max((gamma_second(&p.raised(), &ext.dprime) - ext.dprime * c(p.mass(), 0.0)).iter().copied())
}

/// `W^[2] = Λ²U ⊕ U⊗Ū* ⊕ Λ²Ū* ⊕ Ū*⊗U`.
///
/// `a` and `c` are the coefficients of `ε^{AB}` and `ε̄_{ȦḂ}`; `b` is indexed
/// `[A][Ḃ]` and `d` is indexed `[Ȧ][B]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntisymField {
    pub a: C64,
    pub b: Mat2,
    pub c: C64,
    pub d: Mat2,
}

impl AntisymField {
    pub fn zero() -> Self {
        Self {
            a: c(0.0, 0.0),
            b: Mat2::zeros(),
            c: c(0.0, 0.0),
            d: Mat2::zeros(),
        }
    }

    pub fn components(&self) -> Vec<C64> {
        let mut out = vec![self.a];
        out.extend(self.b.transpose().iter().copied());
        out.push(self.c);
        out.extend(self.d.transpose().iter().copied());
        out
    }

    /// Inverse of [`AntisymField::components`] (row-major blocks).
    pub fn from_components(v: &[C64]) -> Result<Self> {
        if v.len() != 10 {
            return Err(SpinError::Shape {
                expected: 10,
                got: v.len(),
            });
        }
        Ok(Self {
            a: v[0],
            b: Mat2::new(v[1], v[2], v[3], v[4]),
            c: v[5],
            d: Mat2::new(v[6], v[7], v[8], v[9]),
        })
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            a: self.a * s,
            b: self.b * s,
            c: self.c * s,
            d: self.d * s,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            a: self.a + o.a,
            b: self.b + o.b,
            c: self.c + o.c,
            d: self.d + o.d,
        }
    }

    pub fn max_abs(&self) -> f64 {
        mat_max(self.components())
    }

    pub fn max_diff(&self, o: &Self) -> f64 {
        mat_max(self.components().iter().zip(o.components()).map(|(x, y)| x - y))
    }
}

/// `Λ²U → U⊗Ū*`: `b^A_Ḃ = √2 a ε^{AC} Y_{CḂ}`.
fn leg_ab(y: &MinkVector, a: C64) -> Mat2 {
    let low = y.lowered();
    Mat2::from_fn(|i, bd| {
        (0..2).map(|k| low[(k, bd)] * EPS_UPPER[i][k]).sum::<C64>() * a * SQRT2
    })
}

/// `U⊗Ū* → Λ²Ū*`: antisymmetric part of `√2 b^A_Ḃ Y_{AȦ}`.
fn leg_bc(y: &MinkVector, b: &Mat2) -> C64 {
    let low = y.lowered();
    let t = |bd: usize, ad: usize| -> C64 { (0..2).map(|a| b[(a, bd)] * low[(a, ad)]).sum::<C64>() * SQRT2 };
    (t(0, 1) - t(1, 0)) * 0.5
}

/// `Λ²Ū* → Ū*⊗U`: `d_Ȧ^B = √2 c ε_{ȦĊ} Y^{BĊ}`.
fn leg_cd(y: &MinkVector, cc: C64) -> Mat2 {
    let up = y.herm();
    Mat2::from_fn(|ad, b| {
        (0..2).map(|k| up[(b, k)] * EPS_LOWER[ad][k]).sum::<C64>() * cc * SQRT2
    })
}

/// `Ū*⊗U → Λ²U`: antisymmetric part of `√2 d_Ȧ^B Y^{AȦ}`.
fn leg_da(y: &MinkVector, d: &Mat2) -> C64 {
    let up = y.herm();
    let t = |b: usize, a: usize| -> C64 { (0..2).map(|ad| d[(ad, b)] * up[(a, ad)]).sum::<C64>() * SQRT2 };
    (t(0, 1) - t(1, 0)) * 0.5
}

/// `γ̂[Y]`, following `Λ²U → U⊗Ū* → Λ²Ū* → Ū*⊗U → Λ²U`.
pub fn antisym_gamma(y: &MinkVector, f: &AntisymField) -> AntisymField {
    AntisymField {
        a: leg_da(y, &f.d),
        b: leg_ab(y, f.a),
        c: leg_bc(y, &f.b),
        d: leg_cd(y, f.c),
    }
}

pub fn antisym_gamma_power(y: &MinkVector, f: &AntisymField, n: usize) -> AntisymField {
    (0..n).fold(*f, |acc, _| antisym_gamma(y, &acc))
}

/// Solution of `γ̂[P]F = mF` generated from its `Λ²U` value.
pub fn antisym_solve(p: &Momentum, main: C64) -> AntisymField {
    let y = p.raised();
    let inv_m = 1.0 / p.mass();
    let b = leg_ab(&y, main) * c(inv_m, 0.0);
    let cc = leg_bc(&y, &b) * inv_m;
    let d = leg_cd(&y, cc) * c(inv_m, 0.0);
    AntisymField { a: main, b, c: cc, d }
}

/// `‖γ̂[P]F − mF‖_max`.
pub fn antisym_residual(p: &Momentum, f: &AntisymField) -> f64 {
    antisym_gamma(&p.raised(), f).max_diff(&f.scale(c(p.mass(), 0.0)))
}

/// The scalar by which `(γ̂[Y])⁴` acts on the `Λ²U` block.
pub fn antisym_cycle_factor(y: &MinkVector) -> C64 {
    let start = AntisymField {
        a: c(1.0, 0.0),
        ..AntisymField::zero()
    };
    antisym_gamma_power(y, &start, 4).a
}

/// Basis of the cyclic subspace generated by `(1, 0, 0, 0)`.
pub fn antisym_orbit(y: &MinkVector) -> [AntisymField; 4] {
    let start = AntisymField {
        a: c(1.0, 0.0),
        ..AntisymField::zero()
    };
    [0, 1, 2, 3].map(|n| antisym_gamma_power(y, &start, n))
}

/// Spin-2 field `G^{AȦBḂ}`, stored at `((A·2 + Ȧ)·2 + B)·2 + Ḃ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spin2Field {
    data: [C64; 16],
}

#[inline]
fn gi(a: usize, ad: usize, b: usize, bd: usize) -> usize {
    ((a * 2 + ad) * 2 + b) * 2 + bd
}

impl Spin2Field {
    /// Checks the pair-exchange symmetry `G^{AȦBḂ} = G^{BḂAȦ}`.
    pub fn new(data: [C64; 16]) -> Result<Self> {
        let g = Self { data };
        let asym = g.pair_asymmetry();
        let allowed = tolerance::SYMMETRY * mat_max(data).max(f64::MIN_POSITIVE);
        if asym > allowed {
            return Err(SpinError::NotPairSymmetric {
                asymmetry: asym,
                allowed,
            });
        }
        Ok(g)
    }

    /// Pair-symmetrizes arbitrary data.
    pub fn symmetrized(data: [C64; 16]) -> Self {
        let mut out = [c(0.0, 0.0); 16];
        for_each_index(|a, ad, b, bd| {
            out[gi(a, ad, b, bd)] = (data[gi(a, ad, b, bd)] + data[gi(b, bd, a, ad)]) * 0.5;
        });
        Self { data: out }
    }

    /// `½(Y ⊗ Z + Z ⊗ Y)`.
    pub fn symmetric_product(y: &MinkVector, z: &MinkVector) -> Self {
        let (p, q) = (y.herm(), z.herm());
        let mut data = [c(0.0, 0.0); 16];
        for_each_index(|a, ad, b, bd| {
            data[gi(a, ad, b, bd)] = (p[(a, ad)] * q[(b, bd)] + q[(a, ad)] * p[(b, bd)]) * 0.5;
        });
        Self { data }
    }

    /// `ε^{AB} ε̄^{ȦḂ}`.
    pub fn epsilon_product() -> Self {
        let mut data = [c(0.0, 0.0); 16];
        for_each_index(|a, ad, b, bd| {
            data[gi(a, ad, b, bd)] = c(EPS_UPPER[a][b] * EPS_UPPER[ad][bd], 0.0);
        });
        Self { data }
    }

    pub fn data(&self) -> &[C64; 16] {
        &self.data
    }

    pub fn get(&self, a: usize, ad: usize, b: usize, bd: usize) -> C64 {
        self.data[gi(a, ad, b, bd)]
    }

    pub fn pair_asymmetry(&self) -> f64 {
        let mut worst = 0.0_f64;
        for_each_index(|a, ad, b, bd| {
            worst = worst.max((self.get(a, ad, b, bd) - self.get(b, bd, a, ad)).norm());
        });
        worst
    }

    pub fn max_abs(&self) -> f64 {
        mat_max(self.data)
    }

    pub fn max_diff(&self, o: &Self) -> f64 {
        mat_max(self.data.iter().zip(&o.data).map(|(x, y)| x - y))
    }

    /// `(G†)^{AȦBḂ} = conj G^{ȦAḂB}` with the index types exchanged.
    pub fn dagger(&self) -> Self {
        let mut data = [c(0.0, 0.0); 16];
        for_each_index(|a, ad, b, bd| {
            data[gi(a, ad, b, bd)] = self.get(ad, a, bd, b).conj();
        });
        Self { data }
    }

    fn combine(&self, o: &Self, s: f64) -> Self {
        let mut data = self.data;
        for (x, y) in data.iter_mut().zip(&o.data) {
            *x = (*x + y * s) * 0.5;
        }
        Self { data }
    }
}

fn for_each_index(mut f: impl FnMut(usize, usize, usize, usize)) {
    for a in 0..2 {
        for ad in 0..2 {
            for b in 0..2 {
                for bd in 0..2 {
                    f(a, ad, b, bd);
                }
            }
        }
    }
}

/// `G = Ǧ + Ĝ` with `Ǧ^{AȦBḂ} = G^{{AB}{ȦḂ}}` and `Ĝ = s ε^{AB} ε̄^{ȦḂ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spin2Decomposition {
    pub check: Spin2Field,
    /// `s = ¼ ε_{CD} ε̄_{ĊḊ} G^{CĊDḊ}`.
    pub dilaton: C64,
}

pub fn spin2_decompose(g: &Spin2Field) -> Result<Spin2Decomposition> {
    let g = Spin2Field::new(g.data)?;
    let mut check = [c(0.0, 0.0); 16];
    for_each_index(|a, ad, b, bd| {
        check[gi(a, ad, b, bd)] =
            (g.get(a, ad, b, bd) + g.get(b, ad, a, bd) + g.get(a, bd, b, ad) + g.get(b, bd, a, ad)) * 0.25;
    });
    let mut s = c(0.0, 0.0);
    for_each_index(|cc, cd, d, dd| {
        s += g.get(cc, cd, d, dd) * (EPS_LOWER[cc][d] * EPS_LOWER[cd][dd]);
    });
    Ok(Spin2Decomposition {
        check: Spin2Field { data: check },
        dilaton: s * 0.25,
    })
}

pub fn spin2_recompose(parts: &Spin2Decomposition) -> Spin2Field {
    let eps = Spin2Field::epsilon_product();
    let mut data = parts.check.data;
    for (x, e) in data.iter_mut().zip(&eps.data) {
        *x += e * parts.dilaton;
    }
    Spin2Field { data }
}

/// `(Hermitian part, anti-Hermitian part)` under [`Spin2Field::dagger`].
pub fn h_sym2_reality_split(g: &Spin2Field) -> (Spin2Field, Spin2Field) {
    let d = g.dagger();
    (g.combine(&d, 1.0), g.combine(&d, -1.0))
}

/// Real dimensions of the Hermitian part of `ℂ ⊗ ∨²H` and of its
/// symmetric and dilatonic pieces, from ranks of the real-linear projectors.
pub fn reality_dimension_audit() -> (usize, usize, usize) {
    // real basis of the pair-symmetric space: (unit or i) at each orbit
    let mut basis = Vec::new();
    for_each_index(|a, ad, b, bd| {
        if gi(a, ad, b, bd) <= gi(b, bd, a, ad) {
            for unit in [c(1.0, 0.0), c(0.0, 1.0)] {
                let mut data = [c(0.0, 0.0); 16];
                data[gi(a, ad, b, bd)] += unit;
                data[gi(b, bd, a, ad)] = unit;
                basis.push(Spin2Field::symmetrized(data));
            }
        }
    });
    let realify = |v: &[C64]| -> Vec<C64> { v.iter().flat_map(|z| [c(z.re, 0.0), c(z.im, 0.0)]).collect() };
    let rank_of = |f: &dyn Fn(&Spin2Field) -> Vec<C64>| {
        let cols: Vec<Vec<C64>> = basis.iter().map(|g| realify(&f(g))).collect();
        let m = DMatrix::from_fn(cols[0].len(), cols.len(), |r, col| cols[col][r]);
        linalg::rank(&m, tolerance::RANK)
    };
    let herm = |g: &Spin2Field| h_sym2_reality_split(g).0;
    let total = rank_of(&|g| herm(g).data.to_vec());
    let sym = rank_of(&|g| spin2_decompose(&herm(g)).expect("symmetric").check.data.to_vec());
    let dil = rank_of(&|g| vec![spin2_decompose(&herm(g)).expect("symmetric").dilaton]);
    (total, sym, dil)
}

/// Sector chain of `W^{2} ⊗ ∨²Ū`: one spin-1 field per `(Ȧ, Ḃ)` slice of
/// the spectator factor, slices ordered `(1̇1̇), (1̇2̇), (2̇1̇), (2̇2̇)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spin2Chain {
    pub slices: Vec<HigherSpinField>,
}

/// Solves `(γ̌ ⊗ 1)[P] Ǧ′ = m Ǧ′` from a main value in `∨²U ⊗ ∨²Ū`.
pub fn spin2_solve(p: &Momentum, main: &Spin2Field) -> Result<Spin2Chain> {
    let parts = spin2_decompose(main)?;
    let asym = parts.check.max_diff(main);
    let allowed = tolerance::SYMMETRY * main.max_abs().max(f64::MIN_POSITIVE);
    if asym > allowed {
        return Err(SpinError::NotSymmetric {
            asymmetry: asym,
            allowed,
        });
    }
    let mut slices = Vec::with_capacity(4);
    for ad in 0..2 {
        for bd in 0..2 {
            let data: Vec<C64> = (0..4).map(|ab| main.get(ab / 2, ad, ab % 2, bd)).collect();
            let sector = SectorTensor::new(SectorId::plain(2, 0), data)?;
            slices.push(solve_algebraic(2, p, &sector)?);
        }
    }
    Ok(Spin2Chain { slices })
}

pub fn spin2_residual(p: &Momentum, chain: &Spin2Chain) -> Result<f64> {
    chain
        .slices
        .iter()
        .try_fold(0.0_f64, |acc, s| Ok(acc.max(algebraic_residual(s, p)?)))
}
