//! JSON forms of sector tensors and fields.
//!
//! Complex numbers are `[re, im]` pairs. A sector tensor is
//! `{"family", "h", "k", "packed"}` in the packed `(h+1)(k+1)` layout and a
//! field is `{"j", "sectors"}` with `j` a (half-)integer number.

use serde::{Deserialize, Serialize};

use crate::sectors::{Family, HigherSpinField, SectorId, SectorTensor};
use crate::{Result, SpinError, C64};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectorTensorJson {
    pub family: Family,
    pub h: usize,
    pub k: usize,
    pub packed: Vec<C64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldJson {
    pub j: f64,
    pub sectors: Vec<SectorTensorJson>,
}

impl From<&SectorTensor> for SectorTensorJson {
    fn from(t: &SectorTensor) -> Self {
        let id = t.id();
        Self {
            family: id.family,
            h: id.h,
            k: id.k,
            packed: t.packed(),
        }
    }
}

impl TryFrom<&SectorTensorJson> for SectorTensor {
    type Error = SpinError;

    fn try_from(j: &SectorTensorJson) -> Result<Self> {
        let id = SectorId {
            family: j.family,
            h: j.h,
            k: j.k,
        };
        if j.packed.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(SpinError::NonFinite);
        }
        SectorTensor::from_packed(id, &j.packed)
    }
}

impl From<&HigherSpinField> for FieldJson {
    fn from(f: &HigherSpinField) -> Self {
        Self {
            j: f.spin(),
            sectors: f.sectors().iter().map(SectorTensorJson::from).collect(),
        }
    }
}

/// `2j` from a spin value that must be a nonnegative multiple of ½.
pub fn two_j_from_spin(j: f64) -> Result<usize> {
    let t = 2.0 * j;
    if !(t.is_finite() && t >= 0.0 && t.fract() == 0.0 && t <= 64.0) {
        return Err(SpinError::Layout(format!("spin {j} is not a nonnegative half-integer")));
    }
    Ok(t as usize)
}

impl TryFrom<&FieldJson> for HigherSpinField {
    type Error = SpinError;

    fn try_from(j: &FieldJson) -> Result<Self> {
        let two_j = two_j_from_spin(j.j)?;
        let sectors = j
            .sectors
            .iter()
            .map(SectorTensor::try_from)
            .collect::<Result<Vec<_>>>()?;
        HigherSpinField::from_sectors(two_j, sectors)
    }
}

impl Serialize for SectorTensor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SectorTensorJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SectorTensor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SectorTensorJson::deserialize(d)?;
        SectorTensor::try_from(&j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for HigherSpinField {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FieldJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for HigherSpinField {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FieldJson::deserialize(d)?;
        HigherSpinField::try_from(&j).map_err(serde::de::Error::custom)
    }
}
