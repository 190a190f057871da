//! Rank-`r` tensors over the Dirac space `W`, the slot-wise extensions
//! `γ_(n)` and the splitting `∨^r W ≅ ⊕_h U^(r−h, h)`.
//!
//! Components are stored densely over base-4 multi-indices; slot `1` is the
//! most significant digit and digits `0, 1` are the `U` components while
//! `2, 3` are the `Ū*` components, matching the basis order of
//! [`crate::dirac::gamma`].

use crate::dirac::{gamma, DiracSpinor};
use crate::sectors::{binomial, SectorId, SectorTensor};
use crate::spinor::MinkVector;
use crate::{c, max_abs, tolerance, Mat4, Result, SpinError, C64};

#[derive(Debug, Clone, PartialEq)]
pub struct WTensor {
    rank: usize,
    data: Vec<C64>,
}

fn digit(index: usize, rank: usize, slot: usize) -> usize {
    (index >> (2 * (rank - 1 - slot))) & 3
}

impl WTensor {
    pub fn zeros(rank: usize) -> Self {
        Self {
            rank,
            data: vec![c(0.0, 0.0); 1 << (2 * rank)],
        }
    }

    pub fn from_data(rank: usize, data: Vec<C64>) -> Result<Self> {
        let n = 1usize << (2 * rank);
        if data.len() != n {
            return Err(SpinError::Shape {
                expected: n,
                got: data.len(),
            });
        }
        Ok(Self { rank, data })
    }

    /// `ψ_1 ⊗ … ⊗ ψ_r`.
    pub fn product(factors: &[DiracSpinor]) -> Self {
        let vecs: Vec<_> = factors.iter().map(DiracSpinor::to_vector).collect();
        let rank = factors.len();
        let mut t = Self::zeros(rank);
        for (i, v) in t.data.iter_mut().enumerate() {
            *v = (0..rank).fold(c(1.0, 0.0), |acc, s| acc * vecs[s][digit(i, rank, s)]);
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    /// Component at a multi-index of digits in `0..4`.
    pub fn get(&self, index: &[usize]) -> C64 {
        assert_eq!(index.len(), self.rank);
        self.data[index.iter().fold(0, |acc, &d| acc * 4 + d)]
    }

    /// Average over all permutations of the slots.
    pub fn symmetrized(&self) -> Self {
        let r = self.rank;
        let base = r + 1;
        let key = |i: usize| {
            (0..r).fold(0usize, |acc, s| {
                acc + base.pow(digit(i, r, s) as u32)
            })
        };
        let buckets = base.pow(4) + 1;
        let mut sums = vec![c(0.0, 0.0); buckets];
        let mut counts = vec![0usize; buckets];
        for (i, v) in self.data.iter().enumerate() {
            let k = key(i);
            sums[k] += *v;
            counts[k] += 1;
        }
        let data = (0..self.data.len())
            .map(|i| {
                let k = key(i);
                sums[k] / counts[k] as f64
            })
            .collect();
        Self { rank: r, data }
    }

    /// `max |t − Sym(t)|`.
    pub fn asymmetry(&self) -> f64 {
        self.max_diff(&self.symmetrized())
    }

    /// Applies `m` on slot `n` (1-based) only.
    pub fn apply_slot(&self, m: &Mat4, n: usize) -> Result<Self> {
        if n == 0 || n > self.rank {
            return Err(SpinError::SlotOutOfRange {
                slot: n,
                rank: self.rank,
            });
        }
        let shift = 2 * (self.rank - n);
        let mut out = vec![c(0.0, 0.0); self.data.len()];
        for (i, o) in out.iter_mut().enumerate() {
            let row = (i >> shift) & 3;
            let cleared = i & !(3 << shift);
            *o = (0..4)
                .map(|d| m[(row, d)] * self.data[cleared | (d << shift)])
                .sum();
        }
        Ok(Self {
            rank: self.rank,
            data: out,
        })
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            rank: self.rank,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        Self {
            rank: self.rank,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        max_abs(&self.data)
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.rank, other.rank);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).norm()))
    }
}

/// `γ_(n)[Y] = 1 ⊗ … ⊗ γ[Y] ⊗ … ⊗ 1` with `γ[Y]` on slot `n`.
pub fn gamma_n(y: &MinkVector, t: &WTensor, n: usize) -> Result<WTensor> {
    t.apply_slot(&gamma(y), n)
}

/// Splits a symmetric rank-`r` tensor into its sectors
/// `plain(r,0), plain(r−1,1), …, plain(0,r)`.
///
/// The `plain(r−h, h)` component is the restriction to multi-indices whose
/// first `r−h` slots lie in `U` and last `h` slots in `Ū*`.
pub fn sym_w_decompose(t: &WTensor) -> Result<Vec<SectorTensor>> {
    let asym = t.asymmetry();
    let allowed = tolerance::SYMMETRY * t.max_abs().max(f64::MIN_POSITIVE);
    if asym > allowed {
        return Err(SpinError::NotSymmetric {
            asymmetry: asym,
            allowed,
        });
    }
    let r = t.rank;
    (0..=r)
        .map(|h| {
            let id = SectorId::plain(r - h, h);
            let (rows, cols) = (1usize << (r - h), 1usize << h);
            let mut data = vec![c(0.0, 0.0); rows * cols];
            for a in 0..rows {
                for b in 0..cols {
                    data[a * cols + b] = t.data[embed_index(r, h, a, b)];
                }
            }
            SectorTensor::symmetrized(id, &data)
        })
        .collect()
}

/// Inverse of [`sym_w_decompose`].
pub fn sym_w_compose(r: usize, sectors: &[SectorTensor]) -> Result<WTensor> {
    if sectors.len() != r + 1 {
        return Err(SpinError::Layout(format!(
            "rank {r} needs {} sectors, got {}",
            r + 1,
            sectors.len()
        )));
    }
    let mut t = WTensor::zeros(r);
    for (h, s) in sectors.iter().enumerate() {
        let id = SectorId::plain(r - h, h);
        if s.id() != id {
            return Err(SpinError::WrongSector {
                expected: id,
                found: s.id(),
            });
        }
        let (rows, cols) = (1usize << (r - h), 1usize << h);
        let weight = binomial(r, h) as f64;
        for a in 0..rows {
            for b in 0..cols {
                t.data[embed_index(r, h, a, b)] = s.data()[a * cols + b] * weight;
            }
        }
    }
    Ok(t.symmetrized())
}

/// Base-4 index with `U` digits `a` (over `r−h` slots) followed by `Ū*`
/// digits `b` (over `h` slots).
fn embed_index(r: usize, h: usize, a: usize, b: usize) -> usize {
    let mut idx = 0;
    for s in 0..r - h {
        idx = idx * 4 + ((a >> (r - h - 1 - s)) & 1);
    }
    for s in 0..h {
        idx = idx * 4 + 2 + ((b >> (h - 1 - s)) & 1);
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::apply_gamma;
    use crate::spinor::{ConjCoSpinor, TwoSpinor};

    #[test]
    fn rank_one_gamma_matches_dirac() {
        let psi = DiracSpinor::new(TwoSpinor::from_real(0.3, -1.0), ConjCoSpinor::from_real(2.0, 0.5));
        let y = MinkVector::from_pauli([1.0, 0.2, 0.0, -0.4]);
        let t = WTensor::product(&[psi]);
        let out = gamma_n(&y, &t, 1).unwrap();
        let want = WTensor::product(&[apply_gamma(&y, &psi)]);
        assert!(out.max_diff(&want) < 1e-15);
        assert!(matches!(
            gamma_n(&y, &t, 2),
            Err(SpinError::SlotOutOfRange { slot: 2, rank: 1 })
        ));
    }

    #[test]
    fn mixed_product_lands_in_plain_one_one() {
        let u = DiracSpinor::new(TwoSpinor::from_real(1.0, 2.0), ConjCoSpinor::ZERO);
        let l = DiracSpinor::new(TwoSpinor::ZERO, ConjCoSpinor::from_real(-1.0, 3.0));
        let t = WTensor::product(&[u, l]).add(&WTensor::product(&[l, u])).scale(c(0.5, 0.0));
        let parts = sym_w_decompose(&t).unwrap();
        assert_eq!(parts[0].max_abs(), 0.0);
        assert_eq!(parts[2].max_abs(), 0.0);
        assert!(parts[1].max_abs() > 0.0);
        assert!(sym_w_compose(2, &parts).unwrap().max_diff(&t) < 1e-15);
    }

    #[test]
    fn asymmetric_input_rejected() {
        let u = DiracSpinor::new(TwoSpinor::from_real(1.0, 0.0), ConjCoSpinor::ZERO);
        let v = DiracSpinor::new(TwoSpinor::from_real(0.0, 1.0), ConjCoSpinor::ZERO);
        let t = WTensor::product(&[u, v]);
        assert!(matches!(sym_w_decompose(&t), Err(SpinError::NotSymmetric { .. })));
    }
}
