//! Norm oracles for concrete Köthe sequence spaces at a fixed dimension.

mod descriptor;
mod shorthand;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub(crate) use descriptor::conjugate;
pub use descriptor::{Exponent, SpaceDescriptor, WeightSpec};

use crate::error::{check_dim, Error, Result};
use crate::optimize::{self, EstimateKind, NormEstimate, OptimizerConfig};
use crate::vector::{decreasing_order, max_entry, sort_decreasing, CoefficientVector};

/// A lattice norm on the nonnegative cone of `R^N`.
///
/// Implementors only need `dim` and `eval`; everything else has a usable
/// default. `eval` is called on unchecked slices of length `dim()` with
/// nonnegative finite entries.
pub trait Norm {
    fn dim(&self) -> usize;

    fn eval(&self, x: &[f64]) -> f64;

    /// A norming functional at `x`: `g ≥ 0`, `⟨g, x⟩ = ‖x‖` and `g` in the
    /// dual unit ball. The default is a finite-difference gradient.
    fn subgradient(&self, x: &[f64]) -> Vec<f64> {
        finite_difference_gradient(|y| self.eval(y), x)
    }

    /// Value and norming functional together, for norms where both come out
    /// of one computation.
    fn eval_with_subgradient(&self, x: &[f64]) -> (f64, Vec<f64>) {
        (self.eval(x), self.subgradient(x))
    }

    fn is_symmetric(&self) -> bool {
        false
    }

    /// `Some(p)` when the norm is exactly the `ℓ_p` norm.
    fn lp_exponent(&self) -> Option<f64> {
        None
    }

    /// Closed-form `sup_{‖x‖≤1} ⟨z, x⟩` with a maximiser, when one is known.
    fn closed_form_lmo(&self, _z: &[f64]) -> Option<(f64, Vec<f64>)> {
        None
    }
}

impl<T: Norm + ?Sized> Norm for &T {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn eval(&self, x: &[f64]) -> f64 {
        (**self).eval(x)
    }
    fn subgradient(&self, x: &[f64]) -> Vec<f64> {
        (**self).subgradient(x)
    }
    fn eval_with_subgradient(&self, x: &[f64]) -> (f64, Vec<f64>) {
        (**self).eval_with_subgradient(x)
    }
    fn is_symmetric(&self) -> bool {
        (**self).is_symmetric()
    }
    fn lp_exponent(&self) -> Option<f64> {
        (**self).lp_exponent()
    }
    fn closed_form_lmo(&self, z: &[f64]) -> Option<(f64, Vec<f64>)> {
        (**self).closed_form_lmo(z)
    }
}

pub(crate) fn finite_difference_gradient(f: impl Fn(&[f64]) -> f64, x: &[f64]) -> Vec<f64> {
    let scale = max_entry(x).max(1e-300);
    let h = 1e-6 * scale;
    let mut y = x.to_vec();
    let mut g = vec![0.0; x.len()];
    for k in 0..x.len() {
        let xk = x[k];
        if xk > h {
            y[k] = xk + h;
            let up = f(&y);
            y[k] = xk - h;
            let down = f(&y);
            g[k] = (up - down) / (2.0 * h);
        } else {
            let base = f(&y);
            y[k] = xk + h;
            g[k] = (f(&y) - base) / h;
        }
        y[k] = xk;
        if !g[k].is_finite() || g[k] < 0.0 {
            g[k] = 0.0;
        }
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpaceFlags {
    pub symmetric: bool,
    pub has_closed_form_dual: bool,
    /// Set for powers `E^r` with `r > 1`, whose norm property rests on an
    /// `r`-convexity assumption that is not checked.
    pub hypothesis_unverified: bool,
}

#[derive(Debug, Clone)]
enum Kind {
    Lp {
        p: f64,
    },
    Lorentz {
        p: f64,
        weights: Vec<f64>,
    },
    Marcinkiewicz {
        psi: Vec<f64>,
    },
    Power {
        base: Box<SequenceSpace>,
        r: f64,
    },
    Dual {
        base: Box<SequenceSpace>,
        conjugate: Option<f64>,
    },
}

/// Executable norm oracle built from a [`SpaceDescriptor`].
#[derive(Debug, Clone)]
pub struct SequenceSpace {
    descriptor: SpaceDescriptor,
    dim: usize,
    flags: SpaceFlags,
    kind: Kind,
}

fn check_exponent(p: f64, what: &str) -> Result<()> {
    if p.is_nan() || p < 1.0 {
        Err(Error::Construction(format!(
            "{what} requires p ≥ 1, got {p}"
        )))
    } else {
        Ok(())
    }
}

fn check_positive_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        Err(Error::Construction("dimension N must be positive".into()))
    } else {
        Ok(())
    }
}

/// Builds the norm oracle described by `descriptor`, validating its invariants.
pub fn make_space(descriptor: &SpaceDescriptor) -> Result<SequenceSpace> {
    match descriptor {
        SpaceDescriptor::Lp { p, dim } => {
            check_exponent(p.0, "lp")?;
            check_positive_dim(*dim)?;
            Ok(SequenceSpace {
                descriptor: descriptor.clone(),
                dim: *dim,
                flags: SpaceFlags {
                    symmetric: true,
                    has_closed_form_dual: true,
                    hypothesis_unverified: false,
                },
                kind: Kind::Lp { p: p.0 },
            })
        }
        SpaceDescriptor::Lorentz { p, dim, weights } => {
            check_exponent(p.0, "lorentz")?;
            if p.0.is_infinite() {
                return Err(Error::Construction("lorentz requires a finite p".into()));
            }
            check_positive_dim(*dim)?;
            let weights = weights.lorentz_weights(*dim)?;
            Ok(SequenceSpace {
                descriptor: descriptor.clone(),
                dim: *dim,
                flags: SpaceFlags {
                    symmetric: true,
                    has_closed_form_dual: false,
                    hypothesis_unverified: false,
                },
                kind: Kind::Lorentz { p: p.0, weights },
            })
        }
        SpaceDescriptor::Marcinkiewicz { dim, weights } => {
            check_positive_dim(*dim)?;
            let psi = weights.marcinkiewicz_psi(*dim)?;
            Ok(SequenceSpace {
                descriptor: descriptor.clone(),
                dim: *dim,
                flags: SpaceFlags {
                    symmetric: true,
                    has_closed_form_dual: false,
                    hypothesis_unverified: false,
                },
                kind: Kind::Marcinkiewicz { psi },
            })
        }
        SpaceDescriptor::Power { r, base, dim } => {
            let base = make_space(base)?;
            if let Some(n) = dim {
                check_dim(base.dim, *n)?;
            }
            power(&base, *r)
        }
        SpaceDescriptor::Dual { base, dim } => {
            let base = make_space(base)?;
            if let Some(n) = dim {
                check_dim(base.dim, *n)?;
            }
            Ok(dual(&base))
        }
    }
}

/// The power `E^r` with norm `‖x‖ = ‖x^{1/r}‖_E^r`.
pub fn power(space: &SequenceSpace, r: f64) -> Result<SequenceSpace> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::Construction(format!(
            "power requires a finite r > 0, got {r}"
        )));
    }
    Ok(SequenceSpace {
        descriptor: SpaceDescriptor::power(space.descriptor.clone(), r),
        dim: space.dim,
        flags: SpaceFlags {
            symmetric: space.flags.symmetric,
            has_closed_form_dual: false,
            hypothesis_unverified: space.flags.hypothesis_unverified || r > 1.0,
        },
        kind: Kind::Power {
            base: Box::new(space.clone()),
            r,
        },
    })
}

/// The Köthe dual `E^×`.
pub fn dual(space: &SequenceSpace) -> SequenceSpace {
    let conjugate = match space.kind {
        Kind::Lp { p } => Some(conjugate(p)),
        _ => None,
    };
    SequenceSpace {
        descriptor: SpaceDescriptor::dual(space.descriptor.clone()),
        dim: space.dim,
        flags: SpaceFlags {
            symmetric: space.flags.symmetric,
            has_closed_form_dual: conjugate.is_some(),
            hypothesis_unverified: space.flags.hypothesis_unverified,
        },
        kind: Kind::Dual {
            base: Box::new(space.clone()),
            conjugate,
        },
    }
}

impl SequenceSpace {
    pub fn descriptor(&self) -> &SpaceDescriptor {
        &self.descriptor
    }

    pub fn flags(&self) -> SpaceFlags {
        self.flags
    }

    /// Checked norm evaluation.
    pub fn norm(&self, x: &CoefficientVector) -> Result<f64> {
        check_dim(self.dim, x.len())?;
        Ok(self.eval(x))
    }

    /// The Köthe dual `E^×` of this space.
    pub fn dual(&self) -> SequenceSpace {
        dual(self)
    }

    /// `E^r`.
    pub fn power(&self, r: f64) -> Result<SequenceSpace> {
        power(self, r)
    }
}

pub(crate) fn lp_norm(p: f64, x: &[f64]) -> f64 {
    if p.is_infinite() {
        return max_entry(x);
    }
    if p == 1.0 {
        return x.iter().sum();
    }
    let m = max_entry(x);
    if m == 0.0 {
        return 0.0;
    }
    let s: f64 = if p == 2.0 {
        x.iter().map(|v| (v / m) * (v / m)).sum()
    } else {
        x.iter().map(|v| (v / m).powf(p)).sum()
    };
    m * s.powf(1.0 / p)
}

fn lp_subgradient(p: f64, x: &[f64]) -> Vec<f64> {
    let n = x.len();
    if p == 1.0 {
        return vec![1.0; n];
    }
    let mut g = vec![0.0; n];
    if p.is_infinite() {
        let m = max_entry(x);
        if m > 0.0 {
            let k = x.iter().position(|&v| v == m).unwrap();
            g[k] = 1.0;
        }
        return g;
    }
    let norm = lp_norm(p, x);
    if norm > 0.0 {
        for (gk, &xk) in g.iter_mut().zip(x) {
            *gk = (xk / norm).powf(p - 1.0);
        }
    }
    g
}

/// Maximiser of `⟨z, x⟩` over the `ℓ_p` ball.
pub(crate) fn lp_lmo(p: f64, z: &[f64]) -> (f64, Vec<f64>) {
    let n = z.len();
    let mut x = vec![0.0; n];
    if p == 1.0 {
        let m = max_entry(z);
        if m > 0.0 {
            let k = z.iter().position(|&v| v == m).unwrap();
            x[k] = 1.0;
        }
        return (m, x);
    }
    if p.is_infinite() {
        return (z.iter().sum(), vec![1.0; n]);
    }
    let q = conjugate(p);
    let v = lp_norm(q, z);
    if v > 0.0 {
        for (xk, &zk) in x.iter_mut().zip(z) {
            *xk = (zk / v).powf(q - 1.0);
        }
    }
    (v, x)
}

fn lorentz_norm(p: f64, w: &[f64], x: &[f64]) -> f64 {
    let mut s = x.to_vec();
    sort_decreasing(&mut s);
    let m = s.first().copied().unwrap_or(0.0);
    if m == 0.0 {
        return 0.0;
    }
    if p == 1.0 {
        return s.iter().zip(w).map(|(v, wk)| v * wk).sum();
    }
    let sum: f64 = s.iter().zip(w).map(|(v, wk)| (v / m).powf(p) * wk).sum();
    m * sum.powf(1.0 / p)
}

fn marcinkiewicz_norm(psi: &[f64], x: &[f64]) -> (f64, usize) {
    let mut s = x.to_vec();
    sort_decreasing(&mut s);
    let mut acc = 0.0;
    let mut best = (0.0, 0);
    for (k, (v, ps)) in s.iter().zip(psi).enumerate() {
        acc += v;
        let r = acc / ps;
        if r > best.0 {
            best = (r, k);
        }
    }
    best
}

impl Norm for SequenceSpace {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[f64]) -> f64 {
        match &self.kind {
            Kind::Lp { p } => lp_norm(*p, x),
            Kind::Lorentz { p, weights } => lorentz_norm(*p, weights, x),
            Kind::Marcinkiewicz { psi } => marcinkiewicz_norm(psi, x).0,
            Kind::Power { base, r } => {
                if *r == 1.0 {
                    return base.eval(x);
                }
                let y: Vec<f64> = x.iter().map(|v| v.powf(1.0 / r)).collect();
                base.eval(&y).powf(*r)
            }
            Kind::Dual { base, conjugate } => match conjugate {
                Some(q) => lp_norm(*q, x),
                None => optimize::linear_max_raw(&**base, x, &OptimizerConfig::precise()).value,
            },
        }
    }

    fn subgradient(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim;
        match &self.kind {
            Kind::Lp { p } => lp_subgradient(*p, x),
            Kind::Lorentz { p, weights } => {
                let norm = lorentz_norm(*p, weights, x);
                let mut g = vec![0.0; n];
                if norm == 0.0 {
                    return g;
                }
                for (k, &i) in decreasing_order(x).iter().enumerate() {
                    g[i] = if *p == 1.0 {
                        weights[k]
                    } else {
                        weights[k] * (x[i] / norm).powf(p - 1.0)
                    };
                }
                g
            }
            Kind::Marcinkiewicz { psi } => {
                let (value, top) = marcinkiewicz_norm(psi, x);
                let mut g = vec![0.0; n];
                if value == 0.0 {
                    return g;
                }
                for &i in decreasing_order(x).iter().take(top + 1) {
                    g[i] = 1.0 / psi[top];
                }
                g
            }
            Kind::Power { base, r } => {
                if *r == 1.0 {
                    return base.subgradient(x);
                }
                let y: Vec<f64> = x.iter().map(|v| v.powf(1.0 / r)).collect();
                let b = base.eval(&y);
                if b == 0.0 {
                    return vec![0.0; n];
                }
                let gb = base.subgradient(&y);
                let scale = b.powf(r - 1.0);
                let mut g = vec![0.0; n];
                let mut fallback = Vec::new();
                for k in 0..n {
                    if x[k] > 0.0 {
                        g[k] = scale * gb[k] * x[k].powf(1.0 / r - 1.0);
                    } else if *r < 1.0 || gb[k] == 0.0 {
                        g[k] = 0.0;
                    } else {
                        fallback.push(k);
                    }
                }
                if !fallback.is_empty() {
                    let fd = finite_difference_gradient(|v| self.eval(v), x);
                    for k in fallback {
                        g[k] = fd[k];
                    }
                }
                g
            }
            Kind::Dual { base, conjugate } => match conjugate {
                Some(q) => lp_subgradient(*q, x),
                None => optimize::linear_max_raw(&**base, x, &OptimizerConfig::precise())
                    .witness
                    .into_vec(),
            },
        }
    }

    fn eval_with_subgradient(&self, x: &[f64]) -> (f64, Vec<f64>) {
        match &self.kind {
            Kind::Dual {
                base,
                conjugate: None,
            } => {
                let r = optimize::linear_max_raw(&**base, x, &OptimizerConfig::precise());
                (r.value, r.witness.into_vec())
            }
            _ => (self.eval(x), self.subgradient(x)),
        }
    }

    fn is_symmetric(&self) -> bool {
        self.flags.symmetric
    }

    fn lp_exponent(&self) -> Option<f64> {
        match self.kind {
            Kind::Lp { p } => Some(p),
            Kind::Dual { conjugate, .. } => conjugate,
            _ => None,
        }
    }

    fn closed_form_lmo(&self, z: &[f64]) -> Option<(f64, Vec<f64>)> {
        match &self.kind {
            Kind::Lp { p } => Some(lp_lmo(*p, z)),
            Kind::Dual {
                conjugate: Some(q), ..
            } => Some(lp_lmo(*q, z)),
            _ => None,
        }
    }
}

/// Lower bound for the `r`-convexity constant `M^{(r)}(E)` from sampled
/// families `(x_j)`: the largest observed
/// `‖(Σ_j x_j^r)^{1/r}‖_E / (Σ_j ‖x_j‖_E^r)^{1/r}`.
pub fn convexity_constant_lb(
    space: &dyn Norm,
    r: f64,
    samples: usize,
    seed: u64,
) -> Result<NormEstimate> {
    if r.is_nan() || r < 1.0 {
        return Err(Error::InvalidInput(format!("r must be ≥ 1, got {r}")));
    }
    if samples == 0 {
        return Err(Error::InvalidInput("samples must be ≥ 1".into()));
    }
    let n = space.dim();
    let ratio = |family: &[Vec<f64>]| -> (f64, Vec<f64>) {
        let agg: Vec<f64> = (0..n)
            .map(|k| {
                if r.is_infinite() {
                    family.iter().fold(0.0_f64, |m, x| m.max(x[k]))
                } else {
                    family
                        .iter()
                        .map(|x| x[k].powf(r))
                        .sum::<f64>()
                        .powf(1.0 / r)
                }
            })
            .collect();
        let norms: Vec<f64> = family.iter().map(|x| space.eval(x)).collect();
        let denom = lp_norm(r, &norms);
        if denom == 0.0 {
            (0.0, agg)
        } else {
            (space.eval(&agg) / denom, agg)
        }
    };

    let unit = |k: usize| CoefficientVector::unit(n, k).into_vec();
    let mut families: Vec<Vec<Vec<f64>>> = vec![vec![unit(0)], (0..n).map(unit).collect()];
    if n >= 2 {
        families.push(vec![unit(0), unit(1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let m = rng.random_range(1..=4);
        let family = (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.random_bool(0.3) {
                            0.0
                        } else {
                            rng.random::<f64>()
                        }
                    })
                    .collect()
            })
            .collect();
        families.push(family);
    }

    let mut best = (0.0, vec![0.0; n]);
    for family in &families {
        let candidate = ratio(family);
        if candidate.0 > best.0 {
            best = candidate;
        }
    }
    Ok(NormEstimate {
        value: best.0,
        kind: EstimateKind::LowerBound,
        witness: CoefficientVector::new(best.1).expect("aggregate of nonnegative vectors"),
        restarts: families.len(),
        residual: 0.0,
        note: None,
    })
}
