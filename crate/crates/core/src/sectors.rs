//! Symmetric sector spaces and the extended Dirac map.
//!
//! `plain(h,k)` is `∨^h U ⊗ ∨^k Ū*` and `tilde(h,k)` is `∨^h Ū* ⊗ ∨^k U`.
//! A [`SectorTensor`] stores the dense `2^h × 2^k` component array (row =
//! multi-index over the first block, first index most significant) and keeps
//! it symmetric within each block.
//!
//! At the seams `plain(0,r) ≡ tilde(r,0)` and `tilde(0,r) ≡ plain(r,0)` the
//! canonical representative is `tilde(r,0)` and `plain(r,0)` respectively, so
//! the successor map of the extended Dirac map is total on the cyclic list
//!
//! ```text
//! plain(r,0) → plain(r−1,1) → … → plain(1,r−1) → tilde(r,0) → tilde(r−1,1) → … → tilde(1,r−1) → plain(r,0)
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use nalgebra::DMatrix;

use crate::spinor::MinkVector;
use crate::{c, linalg, max_abs, tolerance, Mat2, Result, SpinError, C64, SQRT2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Plain,
    Tilde,
}

impl Family {
    pub fn other(self) -> Self {
        match self {
            Family::Plain => Family::Tilde,
            Family::Tilde => Family::Plain,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SectorId {
    pub family: Family,
    pub h: usize,
    pub k: usize,
}

impl fmt::Display for SectorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::Plain => "plain",
            Family::Tilde => "tilde",
        };
        write!(f, "{name}({},{})", self.h, self.k)
    }
}

impl SectorId {
    /// Canonical id of `∨^h U ⊗ ∨^k Ū*`.
    pub fn plain(h: usize, k: usize) -> Self {
        Self {
            family: Family::Plain,
            h,
            k,
        }
        .canonical()
    }

    /// Canonical id of `∨^h Ū* ⊗ ∨^k U`.
    pub fn tilde(h: usize, k: usize) -> Self {
        Self {
            family: Family::Tilde,
            h,
            k,
        }
        .canonical()
    }

    pub fn canonical(self) -> Self {
        match (self.family, self.h, self.k) {
            (_, 0, 0) => Self {
                family: Family::Plain,
                h: 0,
                k: 0,
            },
            (Family::Plain, 0, r) => Self {
                family: Family::Tilde,
                h: r,
                k: 0,
            },
            (Family::Tilde, 0, r) => Self {
                family: Family::Plain,
                h: r,
                k: 0,
            },
            _ => self,
        }
    }

    pub fn rank(&self) -> usize {
        self.h + self.k
    }

    /// Number of independent components, `(h+1)(k+1)`.
    pub fn independent_dim(&self) -> usize {
        (self.h + 1) * (self.k + 1)
    }

    pub fn rows(&self) -> usize {
        1 << self.h
    }

    pub fn cols(&self) -> usize {
        1 << self.k
    }

    pub fn dense_len(&self) -> usize {
        self.rows() * self.cols()
    }

    /// Target sector of the extended Dirac map, if defined.
    pub fn successor(&self) -> Option<SectorId> {
        (self.h > 0).then(|| {
            Self {
                family: self.family,
                h: self.h - 1,
                k: self.k + 1,
            }
            .canonical()
        })
    }

    /// Block swap `plain(h,k) ↔ tilde(k,h)`.
    pub fn transposed(&self) -> SectorId {
        Self {
            family: self.family.other(),
            h: self.k,
            k: self.h,
        }
        .canonical()
    }
}

/// The cyclic sector list of `W^{2j}`.
pub fn sector_sequence(two_j: usize) -> Vec<SectorId> {
    if two_j == 0 {
        return vec![SectorId::plain(0, 0)];
    }
    let r = two_j;
    let mut ids: Vec<SectorId> = (0..r).map(|h| SectorId::plain(r - h, h)).collect();
    ids.push(SectorId::tilde(r, 0));
    ids.extend((1..r).map(|h| SectorId::tilde(r - h, h)));
    ids
}

/// `C(2j+3, 3) + Σ_{h=1}^{2j−1} (2j−h+1)(h+1)`.
pub fn total_dim(two_j: usize) -> usize {
    sector_sequence(two_j)
        .iter()
        .map(SectorId::independent_dim)
        .sum()
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[inline]
fn ones(i: usize) -> usize {
    i.count_ones() as usize
}

/// Block symmetrization with normalizing factorials.
///
/// For two-valued indices the average over all permutations of a block is
/// the mean over every multi-index with the same count of `2`s.
pub fn symmetrize(data: &[C64], h: usize, k: usize) -> Result<Vec<C64>> {
    let rows = 1usize << h;
    let cols = 1usize << k;
    if data.len() != rows * cols {
        return Err(SpinError::Shape {
            expected: rows * cols,
            got: data.len(),
        });
    }
    let mut sums = vec![c(0.0, 0.0); (h + 1) * (k + 1)];
    for i in 0..rows {
        for j in 0..cols {
            sums[ones(i) * (k + 1) + ones(j)] += data[i * cols + j];
        }
    }
    for a in 0..=h {
        for b in 0..=k {
            let count = (binomial(h, a) * binomial(k, b)) as f64;
            sums[a * (k + 1) + b] /= count;
        }
    }
    let mut out = vec![c(0.0, 0.0); rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            out[i * cols + j] = sums[ones(i) * (k + 1) + ones(j)];
        }
    }
    Ok(out)
}

/// Symmetrize only the second block (used by the extended Dirac map).
fn symmetrize_second(data: &mut [C64], rows: usize, k: usize) {
    let cols = 1usize << k;
    for i in 0..rows {
        let row = &mut data[i * cols..(i + 1) * cols];
        let mut sums = vec![c(0.0, 0.0); k + 1];
        for (j, v) in row.iter().enumerate() {
            sums[ones(j)] += *v;
        }
        for (b, s) in sums.iter_mut().enumerate() {
            *s /= binomial(k, b) as f64;
        }
        for (j, v) in row.iter_mut().enumerate() {
            *v = sums[ones(j)];
        }
    }
}

/// A dense, block-symmetric component array over one sector.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorTensor {
    id: SectorId,
    data: Vec<C64>,
}

impl SectorTensor {
    /// Wraps `data`, checking shape and block symmetry.
    pub fn new(id: SectorId, data: Vec<C64>) -> Result<Self> {
        let id = id.canonical();
        let sym = symmetrize(&data, id.h, id.k)?;
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(SpinError::NonFinite);
        }
        let asym = data
            .iter()
            .zip(&sym)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).norm()));
        let allowed = tolerance::SYMMETRY * max_abs(&data).max(f64::MIN_POSITIVE);
        if asym > allowed {
            return Err(SpinError::NotSymmetric {
                asymmetry: asym,
                allowed,
            });
        }
        Ok(Self { id, data: sym })
    }

    /// Symmetrizes arbitrary data of the right shape.
    pub fn symmetrized(id: SectorId, data: &[C64]) -> Result<Self> {
        let id = id.canonical();
        Ok(Self {
            id,
            data: symmetrize(data, id.h, id.k)?,
        })
    }

    pub fn zeros(id: SectorId) -> Self {
        let id = id.canonical();
        Self {
            id,
            data: vec![c(0.0, 0.0); id.dense_len()],
        }
    }

    /// Builds from the packed `(h+1)(k+1)` layout: entry `(a, b)` is the
    /// component at any multi-index with `a` twos in the first block and
    /// `b` twos in the second, ordered lexicographically in `(a, b)`.
    pub fn from_packed(id: SectorId, packed: &[C64]) -> Result<Self> {
        let id = id.canonical();
        if packed.len() != id.independent_dim() {
            return Err(SpinError::Shape {
                expected: id.independent_dim(),
                got: packed.len(),
            });
        }
        let cols = id.cols();
        let mut data = vec![c(0.0, 0.0); id.dense_len()];
        for (n, v) in data.iter_mut().enumerate() {
            *v = packed[ones(n / cols) * (id.k + 1) + ones(n % cols)];
        }
        Ok(Self { id, data })
    }

    pub fn packed(&self) -> Vec<C64> {
        let cols = self.id.cols();
        let mut out = Vec::with_capacity(self.id.independent_dim());
        for a in 0..=self.id.h {
            for b in 0..=self.id.k {
                let row = (1usize << a) - 1;
                let col = (1usize << b) - 1;
                out.push(self.data[row * cols + col]);
            }
        }
        out
    }

    pub fn id(&self) -> SectorId {
        self.id
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    /// Component at the given block multi-indices (entries in `{0, 1}`).
    pub fn get(&self, first: &[usize], second: &[usize]) -> C64 {
        assert_eq!(first.len(), self.id.h);
        assert_eq!(second.len(), self.id.k);
        let row = first.iter().fold(0, |acc, &d| acc * 2 + d);
        let col = second.iter().fold(0, |acc, &d| acc * 2 + d);
        self.data[row * self.id.cols() + col]
    }

    pub fn max_abs(&self) -> f64 {
        max_abs(&self.data)
    }

    /// Frobenius norm over the dense array.
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            id: self.id,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            id: self.id,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_id(other)?;
        Ok(Self {
            id: self.id,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(c(-1.0, 0.0)))
    }

    /// `max |self − other|`.
    pub fn max_diff(&self, other: &Self) -> Result<f64> {
        self.same_id(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).norm())))
    }

    /// Full index contraction `Σ self[i] other[i]` (bilinear).
    pub fn contract(&self, other: &Self) -> Result<C64> {
        self.same_id(other)?;
        Ok(self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum())
    }

    fn same_id(&self, other: &Self) -> Result<()> {
        if self.id != other.id {
            return Err(SpinError::WrongSector {
                expected: self.id,
                found: other.id,
            });
        }
        Ok(())
    }
}

/// Which 2×2 array the extended Dirac map contracts against.
///
/// `mat[x][c]` is contracted over the removed first-block index `x` and
/// produces the new second-block index `c`.
fn contraction_matrix(y: &MinkVector, family: Family, dual: bool) -> Mat2 {
    match (family, dual) {
        // Y_{A Ḃ}: plain primal, tilde dual
        (Family::Plain, false) => y.lowered(),
        (Family::Tilde, true) => y.lowered().transpose(),
        // Y^{B Ȧ}: tilde primal, plain dual
        (Family::Tilde, false) => y.herm().transpose(),
        (Family::Plain, true) => *y.herm(),
    }
}

/// `out[a'][b, c] = √2 Σ_x in[a', x][b] mat[x][c]`, then symmetrize the
/// second block.
fn shift(t: &SectorTensor, mat: &Mat2) -> Result<SectorTensor> {
    let id = t.id;
    let Some(next) = id.successor() else {
        return Err(SpinError::NoContraction(id));
    };
    let rows_out = 1usize << (id.h - 1);
    let cols_in = id.cols();
    let cols_out = cols_in * 2;
    let mut out = vec![c(0.0, 0.0); rows_out * cols_out];
    for a in 0..rows_out {
        for b in 0..cols_in {
            for cc in 0..2 {
                let mut s = c(0.0, 0.0);
                for x in 0..2 {
                    s += t.data[(a * 2 + x) * cols_in + b] * mat[(x, cc)];
                }
                out[a * cols_out + b * 2 + cc] = s * SQRT2;
            }
        }
    }
    symmetrize_second(&mut out, rows_out, id.k + 1);
    Ok(SectorTensor { id: next, data: out })
}

/// The extended Dirac map `γ̌[Y]` on one sector:
///
/// * plain: `(γ̌Ψ)^{A_1…A_{h−1}}_{Ḃ_1…Ḃ_{k+1}} = √2 Ψ^{A_1…A_h}_{{Ḃ_1…Ḃ_k} Y_{Ḃ_{k+1}} A_h}`
/// * tilde: `(γ̌Ψ)_{Ȧ_1…Ȧ_{h−1}}^{B_1…B_{k+1}} = √2 Ψ_{Ȧ_1…Ȧ_h}^{{B_1…B_k} Y^{B_{k+1}} Ȧ_h}`
pub fn cgamma(y: &MinkVector, t: &SectorTensor) -> Result<SectorTensor> {
    shift(t, &contraction_matrix(y, t.id.family, false))
}

/// The extended Dirac map on a dual sector, where `t` holds components of
/// the dual of `t.id()`.
pub fn cgamma_dual(y: &MinkVector, t: &SectorTensor) -> Result<SectorTensor> {
    shift(t, &contraction_matrix(y, t.id.family, true))
}

/// `n`-fold composition of [`cgamma`].
pub fn cgamma_power(y: &MinkVector, t: &SectorTensor, n: usize) -> Result<SectorTensor> {
    (0..n).try_fold(t.clone(), |acc, _| cgamma(y, &acc))
}

/// Closed form of `(γ̌[Y])^r` on `plain(r,0)` or `tilde(r,0)`: lower (or
/// raise) every index through `Y` with prefactor `2^{r/2}`.
pub fn lower_all_closed_form(y: &MinkVector, t: &SectorTensor) -> Result<SectorTensor> {
    let id = t.id;
    if id.k != 0 || id.h == 0 {
        return Err(SpinError::WrongSector {
            expected: SectorId::plain(id.h.max(1), 0),
            found: id,
        });
    }
    let r = id.h;
    let mat = contraction_matrix(y, id.family, false);
    let n = 1usize << r;
    let pref = 2f64.powf(r as f64 / 2.0);
    let mut out = vec![c(0.0, 0.0); n];
    for (b, slot) in out.iter_mut().enumerate() {
        let mut s = c(0.0, 0.0);
        for (a, v) in t.data.iter().enumerate() {
            let mut prod = *v;
            for pos in 0..r {
                let shift = r - 1 - pos;
                prod *= mat[((a >> shift) & 1, (b >> shift) & 1)];
            }
            s += prod;
        }
        *slot = s * pref;
    }
    let target = match id.family {
        Family::Plain => SectorId::tilde(r, 0),
        Family::Tilde => SectorId::plain(r, 0),
    };
    Ok(SectorTensor { id: target, data: out })
}

/// Matrix of `(γ̌[Y])^n` from sector `id` in packed coordinates.
pub fn power_matrix(y: &MinkVector, id: SectorId, n: usize) -> Result<DMatrix<C64>> {
    let id = id.canonical();
    if n > 0 && id.rank() == 0 {
        return Err(SpinError::NoContraction(id));
    }
    Ok(linalg::matrix_of(id.independent_dim(), |v| {
        let t = SectorTensor::from_packed(id, v).expect("basis vector length");
        cgamma_power(y, &t, n).expect("rank ≥ 1 sectors always contract").packed()
    }))
}

/// Tensor product transposition `plain(h,k) ↔ tilde(k,h)`.
pub fn transpose_tilde(t: &SectorTensor) -> SectorTensor {
    let id = t.id;
    let target = id.transposed();
    let (rows, cols) = (id.rows(), id.cols());
    let mut data = vec![c(0.0, 0.0); t.data.len()];
    for i in 0..rows {
        for j in 0..cols {
            data[j * rows + i] = t.data[i * cols + j];
        }
    }
    if target.h != id.k {
        // seam: the transposed block shape is stored in canonical form,
        // which for a single nonempty block is the same flat order
        data.clone_from(&t.data);
    }
    SectorTensor { id: target, data }
}

/// A value of `W^{2j}`: one tensor per sector of [`sector_sequence`].
#[derive(Debug, Clone, PartialEq)]
pub struct HigherSpinField {
    two_j: usize,
    sectors: Vec<SectorTensor>,
}

impl HigherSpinField {
    pub fn zeros(two_j: usize) -> Self {
        Self {
            two_j,
            sectors: sector_sequence(two_j)
                .into_iter()
                .map(SectorTensor::zeros)
                .collect(),
        }
    }

    pub fn from_sectors(two_j: usize, sectors: Vec<SectorTensor>) -> Result<Self> {
        let ids = sector_sequence(two_j);
        if ids.len() != sectors.len() {
            return Err(SpinError::Layout(format!(
                "2j = {two_j} needs {} sectors, got {}",
                ids.len(),
                sectors.len()
            )));
        }
        for (id, s) in ids.iter().zip(&sectors) {
            if *id != s.id {
                return Err(SpinError::WrongSector {
                    expected: *id,
                    found: s.id,
                });
            }
        }
        Ok(Self { two_j, sectors })
    }

    /// Field with the given `∨^r W` sectors (the first `r+1` entries of the
    /// cyclic list) and zero ghost sectors.
    pub fn from_plain_sectors(two_j: usize, plain: Vec<SectorTensor>) -> Result<Self> {
        let mut field = Self::zeros(two_j);
        if plain.len() != two_j + 1 {
            return Err(SpinError::Layout(format!(
                "expected {} plain sectors, got {}",
                two_j + 1,
                plain.len()
            )));
        }
        for (slot, s) in field.sectors.iter_mut().zip(plain) {
            if slot.id != s.id {
                return Err(SpinError::WrongSector {
                    expected: slot.id,
                    found: s.id,
                });
            }
            *slot = s;
        }
        Ok(field)
    }

    pub fn two_j(&self) -> usize {
        self.two_j
    }

    /// Spin `j` as a float.
    pub fn spin(&self) -> f64 {
        self.two_j as f64 / 2.0
    }

    pub fn sectors(&self) -> &[SectorTensor] {
        &self.sectors
    }

    pub fn ids(&self) -> Vec<SectorId> {
        self.sectors.iter().map(|s| s.id).collect()
    }

    pub fn sector(&self, id: SectorId) -> Option<&SectorTensor> {
        let id = id.canonical();
        self.sectors.iter().find(|s| s.id == id)
    }

    pub fn main(&self) -> &SectorTensor {
        &self.sectors[0]
    }

    /// The `∨^{2j} W` part: sectors `plain(2j−h, h)`, `h = 0..=2j`.
    pub fn plain_part(&self) -> &[SectorTensor] {
        &self.sectors[..(self.two_j + 1).min(self.sectors.len())]
    }

    pub fn max_abs(&self) -> f64 {
        self.sectors.iter().fold(0.0_f64, |m, s| m.max(s.max_abs()))
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            two_j: self.two_j,
            sectors: self.sectors.iter().map(|t| t.scale(s)).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, SectorTensor::try_add)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, SectorTensor::try_sub)
    }

    pub fn max_diff(&self, other: &Self) -> Result<f64> {
        self.check_layout(other)?;
        self.sectors
            .iter()
            .zip(&other.sectors)
            .try_fold(0.0_f64, |m, (a, b)| Ok(m.max(a.max_diff(b)?)))
    }

    /// Concatenated packed components in sector order.
    pub fn packed(&self) -> Vec<C64> {
        self.sectors.iter().flat_map(|s| s.packed()).collect()
    }

    pub fn from_packed(two_j: usize, packed: &[C64]) -> Result<Self> {
        let total = total_dim(two_j);
        if packed.len() != total {
            return Err(SpinError::Shape {
                expected: total,
                got: packed.len(),
            });
        }
        let mut offset = 0;
        let mut sectors = Vec::new();
        for id in sector_sequence(two_j) {
            let n = id.independent_dim();
            sectors.push(SectorTensor::from_packed(id, &packed[offset..offset + n])?);
            offset += n;
        }
        Ok(Self { two_j, sectors })
    }

    /// `γ̌[Y]` on the whole field: sector `s` feeds its successor.
    pub fn apply_cgamma(&self, y: &MinkVector) -> Result<Self> {
        self.apply_with(|t| cgamma(y, t))
    }

    pub(crate) fn apply_with<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&SectorTensor) -> Result<SectorTensor>,
    {
        let n = self.sectors.len();
        let mut out = self.sectors.clone();
        for (i, s) in self.sectors.iter().enumerate() {
            let image = f(s)?;
            let target = &mut out[(i + 1) % n];
            if target.id != image.id {
                return Err(SpinError::WrongSector {
                    expected: target.id,
                    found: image.id,
                });
            }
            *target = image;
        }
        Ok(Self {
            two_j: self.two_j,
            sectors: out,
        })
    }

    fn zip_with<F>(&self, other: &Self, f: F) -> Result<Self>
    where
        F: Fn(&SectorTensor, &SectorTensor) -> Result<SectorTensor>,
    {
        self.check_layout(other)?;
        Ok(Self {
            two_j: self.two_j,
            sectors: self
                .sectors
                .iter()
                .zip(&other.sectors)
                .map(|(a, b)| f(a, b))
                .collect::<Result<_>>()?,
        })
    }

    fn check_layout(&self, other: &Self) -> Result<()> {
        if self.two_j != other.two_j {
            return Err(SpinError::Layout(format!(
                "2j = {} vs 2j = {}",
                self.two_j, other.two_j
            )));
        }
        Ok(())
    }
}
