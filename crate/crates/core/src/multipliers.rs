//! Multiplier norms `‖α‖_{M(E,F)} = sup_{x ∈ B_E} ‖α·x‖_F`, the norms of
//! diagonal linear operators.

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::optimize::{convex_max, NormEstimate, OptimizerConfig, WeightedNorm};
use crate::spaces::{lp_norm, Norm, SpaceDescriptor, WeightSpec};
use crate::vector::CoefficientVector;

/// The sequence `α` defining a diagonal operator, stored as moduli with the
/// original signs kept on the side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagonalSymbol {
    moduli: CoefficientVector,
    signs: Vec<f64>,
}

impl DiagonalSymbol {
    pub fn new(moduli: CoefficientVector) -> Self {
        let signs = vec![1.0; moduli.len()];
        DiagonalSymbol { moduli, signs }
    }

    pub fn from_signed(values: &[f64]) -> Result<Self> {
        let moduli = CoefficientVector::from_signed(values)?;
        let signs = values
            .iter()
            .map(|v| if v.is_sign_negative() { -1.0 } else { 1.0 })
            .collect();
        Ok(DiagonalSymbol { moduli, signs })
    }

    pub fn moduli(&self) -> &CoefficientVector {
        &self.moduli
    }

    /// `+1.0` or `-1.0` per entry.
    pub fn signs(&self) -> &[f64] {
        &self.signs
    }

    pub fn signed(&self) -> Vec<f64> {
        self.moduli
            .iter()
            .zip(&self.signs)
            .map(|(m, s)| m * s)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moduli.is_empty()
    }

    /// Entrywise `|α|^t`.
    pub fn modulus_power(&self, t: f64) -> Vec<f64> {
        self.moduli.iter().map(|v| v.powf(t)).collect()
    }
}

impl From<CoefficientVector> for DiagonalSymbol {
    fn from(moduli: CoefficientVector) -> Self {
        DiagonalSymbol::new(moduli)
    }
}

/// Norm of the diagonal operator `x ↦ α·x` from `E` to `F`.
///
/// When both spaces are `ℓ_p` spaces the value is `‖α‖_c` with
/// `1/c = (1/b - 1/a)₊`, computed exactly. Otherwise it is a lower bound
/// from [`convex_max`].
pub fn multiplier_norm(
    domain: &dyn Norm,
    target: &dyn Norm,
    alpha: &DiagonalSymbol,
    cfg: &OptimizerConfig,
) -> Result<NormEstimate> {
    check_dim(domain.dim(), target.dim())?;
    check_dim(domain.dim(), alpha.len())?;
    let alpha = alpha.moduli();
    if let (Some(a), Some(b)) = (domain.lp_exponent(), target.lp_exponent()) {
        return Ok(lp_multiplier(a, b, alpha));
    }
    let objective = WeightedNorm {
        alpha,
        norm: target,
    };
    convex_max(domain, &objective, cfg)
}

fn lp_multiplier(a: f64, b: f64, alpha: &[f64]) -> NormEstimate {
    let inv = 1.0 / b - 1.0 / a;
    let n = alpha.len();
    if inv <= 0.0 {
        let value = lp_norm(f64::INFINITY, alpha);
        let mut witness = vec![0.0; n];
        if let Some(k) = alpha.iter().position(|&v| v == value) {
            witness[k] = 1.0;
        }
        return NormEstimate::exact(value, witness);
    }
    let c = 1.0 / inv;
    let value = lp_norm(c, alpha);
    let witness = if value == 0.0 {
        vec![0.0; n]
    } else if a.is_infinite() {
        vec![1.0; n]
    } else {
        alpha.iter().map(|v| (v / value).powf(c / a)).collect()
    };
    NormEstimate::exact(value, witness)
}

/// Descriptor of `M(ℓ_q, d(w,p))`: the Lorentz space
/// `d(w^{q/(q-p)}, pq/(q-p))` when `p < q`, and `ℓ_∞` when `p ≥ q`.
pub fn lorentz_multiplier_descriptor(
    q: f64,
    weights: &WeightSpec,
    p: f64,
    dim: usize,
) -> Result<SpaceDescriptor> {
    for (name, v) in [("q", q), ("p", p)] {
        if !(v.is_finite() && v >= 1.0) {
            return Err(Error::InvalidInput(format!(
                "{name} must lie in [1, ∞), got {v}"
            )));
        }
    }
    let w = weights.lorentz_weights(dim)?;
    if p >= q {
        return Ok(SpaceDescriptor::lp(f64::INFINITY, dim));
    }
    let s = q / (q - p);
    let exponent = p * q / (q - p);
    Ok(match weights {
        WeightSpec::Power { theta } => SpaceDescriptor::lorentz_power(theta * s, exponent, dim),
        WeightSpec::Explicit { .. } => {
            SpaceDescriptor::lorentz(w.iter().map(|v| v.powf(s)).collect(), exponent)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimize::{grid_oracle, Numeric};
    use crate::spaces::make_space;

    fn sym(v: &[f64]) -> DiagonalSymbol {
        DiagonalSymbol::new(CoefficientVector::new(v.to_vec()).unwrap())
    }

    fn lp(p: f64, n: usize) -> crate::spaces::SequenceSpace {
        make_space(&SpaceDescriptor::lp(p, n)).unwrap()
    }

    #[test]
    fn euclidean_diagonal_operator_norm_is_sup() {
        let cfg = OptimizerConfig::default();
        let alpha = sym(&[0.3, 2.5, 1.0]);
        let l2 = lp(2.0, 3);
        let r = multiplier_norm(&l2, &l2, &alpha, &cfg).unwrap();
        assert_eq!(r.value, 2.5);
        let r = multiplier_norm(&Numeric(&l2), &Numeric(&l2), &alpha, &cfg).unwrap();
        assert!((r.value - 2.5).abs() < 1e-8, "{}", r.value);
    }

    #[test]
    fn l4_to_l2_against_grid() {
        let cfg = OptimizerConfig::default();
        let (l4, l2) = (lp(4.0, 2), lp(2.0, 2));
        let alpha = sym(&[1.0, 1.0]);
        let fast = multiplier_norm(&l4, &l2, &alpha, &cfg).unwrap();
        let numeric = multiplier_norm(&Numeric(&l4), &Numeric(&l2), &alpha, &cfg).unwrap();
        let f = WeightedNorm {
            alpha: alpha.moduli(),
            norm: &l2,
        };
        let grid = grid_oracle(&l4, &f, 2048).unwrap();
        let expect = 2f64.powf(0.25);
        assert!((fast.value - expect).abs() < 1e-14);
        assert!((numeric.value - expect).abs() < 1e-5);
        assert!((grid.value - expect).abs() <= grid.residual + 1e-9);
    }

    #[test]
    fn lp_fast_path_witness_attains_value() {
        let alpha = [0.5, 2.0, 0.0, 1.5];
        for (a, b) in [
            (4.0, 2.0),
            (f64::INFINITY, 1.0),
            (3.0, 1.0),
            (2.0, 2.0),
            (1.0, 3.0),
        ] {
            let r = lp_multiplier(a, b, &alpha);
            let x = r.witness.as_slice();
            assert!(lp_norm(a, x) <= 1.0 + 1e-12, "a={a} b={b}");
            let ax: Vec<f64> = alpha.iter().zip(x).map(|(u, v)| u * v).collect();
            assert!(
                (lp_norm(b, &ax) - r.value).abs() < 1e-12 * r.value,
                "a={a} b={b}"
            );
        }
    }

    #[test]
    fn zero_symbol_and_scaling() {
        let cfg = OptimizerConfig::default();
        let e = make_space(&SpaceDescriptor::lp(3.0, 3)).unwrap();
        let f = make_space(&SpaceDescriptor::lorentz_power(0.5, 1.0, 3)).unwrap();
        let r = multiplier_norm(&e, &f, &sym(&[0.0; 3]), &cfg).unwrap();
        assert_eq!(r.value, 0.0);
        let alpha = [0.4, 1.0, 0.7];
        let base = multiplier_norm(&e, &f, &sym(&alpha), &cfg).unwrap().value;
        let scaled: Vec<f64> = alpha.iter().map(|v| v * 3.5).collect();
        let r = multiplier_norm(&e, &f, &sym(&scaled), &cfg).unwrap().value;
        assert!((r - 3.5 * base).abs() < 1e-10 * r);
    }

    #[test]
    fn lorentz_multiplier_case_split() {
        let w = WeightSpec::power(0.5);
        assert_eq!(
            lorentz_multiplier_descriptor(2.0, &w, 1.0, 4).unwrap(),
            SpaceDescriptor::lorentz_power(1.0, 2.0, 4)
        );
        assert_eq!(
            lorentz_multiplier_descriptor(4.0, &w, 2.0, 4).unwrap(),
            SpaceDescriptor::lorentz_power(1.0, 4.0, 4)
        );
        assert_eq!(
            lorentz_multiplier_descriptor(3.0, &w, 1.5, 4).unwrap(),
            SpaceDescriptor::lorentz_power(1.0, 3.0, 4)
        );
        assert_eq!(
            lorentz_multiplier_descriptor(2.0, &w, 2.0, 4).unwrap(),
            SpaceDescriptor::lp(f64::INFINITY, 4)
        );
        let explicit = WeightSpec::explicit(vec![1.0, 0.5, 0.25]);
        assert_eq!(
            lorentz_multiplier_descriptor(2.0, &explicit, 1.0, 3).unwrap(),
            SpaceDescriptor::lorentz(vec![1.0, 0.25, 0.0625], 2.0)
        );
        assert!(lorentz_multiplier_descriptor(0.5, &w, 1.0, 3).is_err());
        assert!(lorentz_multiplier_descriptor(2.0, &w, f64::INFINITY, 3).is_err());
    }

    #[test]
    fn signs_are_recorded() {
        let a = DiagonalSymbol::from_signed(&[3.0, -5.0]).unwrap();
        assert_eq!(a.moduli().as_slice(), &[3.0, 5.0]);
        assert_eq!(a.signs(), &[1.0, -1.0]);
        assert_eq!(a.signed(), vec![3.0, -5.0]);
    }
}
