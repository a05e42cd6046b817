use std::cmp::Ordering;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite nonnegative vector standing for the moduli `|x|` of a sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct CoefficientVector(Vec<f64>);

impl CoefficientVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if let Some((k, v)) = entries
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(Error::InvalidInput(format!(
                "entry {k} = {v} is not a finite nonnegative real"
            )));
        }
        Ok(Self(entries))
    }

    /// Moduli of an arbitrary real sequence.
    pub fn from_signed(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|v| v.abs()).collect())
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![0.0; len])
    }

    /// The `k`-th unit vector of length `len`.
    pub fn unit(len: usize, k: usize) -> Self {
        let mut v = vec![0.0; len];
        v[k] = 1.0;
        Self(v)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    /// Zero-pads (truncation embedding) to a larger dimension.
    pub fn padded(&self, len: usize) -> Self {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0.0);
        }
        Self(v)
    }
}

impl Deref for CoefficientVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for CoefficientVector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<CoefficientVector> for Vec<f64> {
    fn from(v: CoefficientVector) -> Self {
        v.0
    }
}

/// Decreasing rearrangement `x*`.
pub fn rearrange(x: &CoefficientVector) -> CoefficientVector {
    let mut v = x.0.clone();
    sort_decreasing(&mut v);
    CoefficientVector(v)
}

pub(crate) fn sort_decreasing(v: &mut [f64]) {
    v.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
}

/// Indices ordering `x` nonincreasingly; ties keep the original index order.
pub(crate) fn decreasing_order(x: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..x.len()).collect();
    idx.sort_by(|&a, &b| x[b].partial_cmp(&x[a]).unwrap_or(Ordering::Equal));
    idx
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn max_entry(x: &[f64]) -> f64 {
    x.iter().fold(0.0_f64, |m, &v| m.max(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(v: &[f64]) -> CoefficientVector {
        CoefficientVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rearrangement_examples() {
        assert_eq!(
            rearrange(&cv(&[0.0, 2.0, 0.0, 1.0])).as_slice(),
            &[2.0, 1.0, 0.0, 0.0]
        );
        assert_eq!(rearrange(&cv(&[1.0, 1.0])).as_slice(), &[1.0, 1.0]);
        assert_eq!(rearrange(&cv(&[5.0])).as_slice(), &[5.0]);
    }

    #[test]
    fn ties_keep_index_order() {
        assert_eq!(decreasing_order(&[1.0, 3.0, 1.0, 3.0]), vec![1, 3, 0, 2]);
    }

    #[test]
    fn rejects_negative_and_nan() {
        assert!(CoefficientVector::new(vec![1.0, -0.5]).is_err());
        assert!(CoefficientVector::new(vec![f64::NAN]).is_err());
        assert_eq!(
            CoefficientVector::from_signed(&[3.0, -5.0])
                .unwrap()
                .as_slice(),
            &[3.0, 5.0]
        );
    }
}
