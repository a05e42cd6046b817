//! Maximisation of linear and convex objectives over unit balls.

mod ellipsoid;
mod grid;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use grid::grid_oracle;

use crate::error::{check_dim, Error, Result};
use crate::spaces::{finite_difference_gradient, Norm};
use crate::vector::{decreasing_order, dot, max_entry, CoefficientVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EstimateKind {
    Exact,
    LowerBound,
}

impl EstimateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EstimateKind::Exact => "exact",
            EstimateKind::LowerBound => "lower_bound",
        }
    }
}

/// A computed norm value with its provenance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormEstimate {
    pub value: f64,
    pub kind: EstimateKind,
    /// The maximiser found (a point of the unit ball), or another vector
    /// documenting how the value was reached.
    pub witness: CoefficientVector,
    pub restarts: usize,
    /// Relative optimality gap, or improvement in the last sweep for
    /// heuristic searches.
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl NormEstimate {
    pub(crate) fn exact(value: f64, witness: Vec<f64>) -> Self {
        NormEstimate {
            value,
            kind: EstimateKind::Exact,
            witness: CoefficientVector::new(witness).expect("witness is nonnegative"),
            restarts: 0,
            residual: 0.0,
            note: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct OptimizerConfig {
    pub restarts: usize,
    pub max_iter: usize,
    pub tol: f64,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            restarts: 32,
            max_iter: 2000,
            tol: 1e-8,
            seed: 0,
        }
    }
}

impl OptimizerConfig {
    pub fn with_seed(seed: u64) -> Self {
        OptimizerConfig {
            seed,
            ..Default::default()
        }
    }

    /// Settings used when a norm is itself defined by an inner maximisation.
    pub fn precise() -> Self {
        OptimizerConfig {
            restarts: 0,
            max_iter: 4000,
            tol: 1e-13,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_iter == 0 {
            return Err(Error::InvalidInput("max_iter must be positive".into()));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::InvalidInput(format!(
                "tol must be a positive real, got {}",
                self.tol
            )));
        }
        Ok(())
    }

    /// Generator for restart `i`; streams keep restarts independent of
    /// each other and of evaluation order.
    pub fn sub_rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    fn inner(&self) -> OptimizerConfig {
        OptimizerConfig {
            restarts: 0,
            max_iter: self.max_iter,
            tol: (self.tol * 1e-2).max(1e-13),
            seed: self.seed,
        }
    }
}

/// A nonnegative objective on the positive cone.
pub trait Objective {
    fn value(&self, x: &[f64]) -> f64;

    /// A (sub)gradient; `None` selects finite differences.
    fn gradient(&self, _x: &[f64]) -> Option<Vec<f64>> {
        None
    }

    /// Coefficients `z` when the objective is `x ↦ ⟨z, x⟩`.
    fn as_linear(&self) -> Option<&[f64]> {
        None
    }
}

impl<F: Fn(&[f64]) -> f64> Objective for F {
    fn value(&self, x: &[f64]) -> f64 {
        self(x)
    }
}

/// The linear objective `x ↦ ⟨z, x⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct Linear(pub Vec<f64>);

impl Objective for Linear {
    fn value(&self, x: &[f64]) -> f64 {
        dot(&self.0, x)
    }

    fn gradient(&self, _x: &[f64]) -> Option<Vec<f64>> {
        Some(self.0.clone())
    }

    fn as_linear(&self) -> Option<&[f64]> {
        Some(&self.0)
    }
}

/// `x ↦ ‖α·x‖_F`.
pub struct WeightedNorm<'a> {
    pub alpha: &'a [f64],
    pub norm: &'a dyn Norm,
}

impl Objective for WeightedNorm<'_> {
    fn value(&self, x: &[f64]) -> f64 {
        let y: Vec<f64> = self.alpha.iter().zip(x).map(|(a, b)| a * b).collect();
        self.norm.eval(&y)
    }

    fn gradient(&self, x: &[f64]) -> Option<Vec<f64>> {
        let y: Vec<f64> = self.alpha.iter().zip(x).map(|(a, b)| a * b).collect();
        let g = self.norm.subgradient(&y);
        Some(g.iter().zip(self.alpha).map(|(a, b)| a * b).collect())
    }
}

/// Hides closed-form shortcuts of a norm so that every maximisation goes
/// through the numerical engine.
pub struct Numeric<'a>(pub &'a dyn Norm);

impl Norm for Numeric<'_> {
    fn dim(&self) -> usize {
        self.0.dim()
    }
    fn eval(&self, x: &[f64]) -> f64 {
        self.0.eval(x)
    }
    fn subgradient(&self, x: &[f64]) -> Vec<f64> {
        self.0.subgradient(x)
    }
    fn eval_with_subgradient(&self, x: &[f64]) -> (f64, Vec<f64>) {
        self.0.eval_with_subgradient(x)
    }
    fn is_symmetric(&self) -> bool {
        self.0.is_symmetric()
    }
}

/// `sup { Σ z(k) x(k) : ‖x‖_E ≤ 1, x ≥ 0 }`.
///
/// Closed forms are used when the space registers one. Otherwise the
/// maximisation is rewritten as minimising the convex function
/// `u ↦ ‖u / z‖_E` over the probability simplex on the support of `z`,
/// which a cutting-plane method solves with a certified gap; the result
/// is `exact` when that gap falls below `cfg.tol`.
pub fn linear_max(
    space: &dyn Norm,
    z: &CoefficientVector,
    cfg: &OptimizerConfig,
) -> Result<NormEstimate> {
    check_dim(space.dim(), z.len())?;
    cfg.validate()?;
    Ok(linear_max_raw(space, z, cfg))
}

/// Köthe dual norm `‖z‖_{E^×}`.
pub fn dual_norm(
    space: &dyn Norm,
    z: &CoefficientVector,
    cfg: &OptimizerConfig,
) -> Result<NormEstimate> {
    linear_max(space, z, cfg)
}

const NEGLIGIBLE: f64 = 1e-15;

pub(crate) fn linear_max_raw(space: &dyn Norm, z: &[f64], cfg: &OptimizerConfig) -> NormEstimate {
    let n = space.dim();
    if let Some((value, witness)) = space.closed_form_lmo(z) {
        return NormEstimate::exact(value, witness);
    }
    let scale = max_entry(z);
    if scale == 0.0 {
        return NormEstimate::exact(0.0, vec![0.0; n]);
    }

    // Symmetric norms only see the decreasing rearrangement, so they are
    // evaluated on vectors packed into the leading coordinates in sorted
    // order. This makes the result independent of how z is arranged.
    // Entries below `NEGLIGIBLE` relative to the largest one cannot move the
    // value beyond rounding and would overflow the change of variables.
    let symmetric = space.is_symmetric();
    let kept = |i: &usize| z[*i] > NEGLIGIBLE * scale;
    let layout: Vec<usize> = if symmetric {
        decreasing_order(z).into_iter().filter(kept).collect()
    } else {
        (0..n).filter(kept).collect()
    };
    let s = layout.len();
    let zc: Vec<f64> = layout.iter().map(|&i| z[i] / scale).collect();
    let position = |j: usize| if symmetric { j } else { layout[j] };

    let place = |u: &[f64]| {
        let mut y = vec![0.0; n];
        for j in 0..s {
            y[position(j)] = u[j] / zc[j];
        }
        y
    };
    let phi = |u: &[f64]| space.eval(&place(u));
    let oracle = |u: &[f64]| {
        let y = place(u);
        let (value, g) = space.eval_with_subgradient(&y);
        let grad = (0..s).map(|j| g[position(j)] / zc[j]).collect();
        (value, grad)
    };
    let normalized = |mut u: Vec<f64>| {
        let total: f64 = u.iter().sum();
        u.iter_mut().for_each(|v| *v /= total);
        u
    };

    let mut candidates: Vec<Vec<f64>> = Vec::with_capacity(2 * s + 2);
    for j in 0..s {
        let mut u = vec![0.0; s];
        u[j] = 1.0;
        candidates.push(u);
    }
    candidates.push(normalized(zc.clone()));
    candidates.push(normalized(zc.iter().map(|v| v * v).collect()));
    let rank = decreasing_order(&zc);
    for top in 2..s {
        let mut u = vec![0.0; s];
        for &j in &rank[..top] {
            u[j] = zc[j];
        }
        candidates.push(normalized(u));
    }
    let mut start = (f64::INFINITY, Vec::new());
    for u in candidates {
        let value = phi(&u);
        if value < start.0 {
            start = (value, u);
        }
    }

    let result = ellipsoid::minimize_on_simplex(s, oracle, start, cfg.tol, cfg.max_iter * s.max(1));
    let (mut best, mut best_u) = (result.value, result.point);

    for i in 0..cfg.restarts {
        let mut rng = cfg.sub_rng(i as u64);
        let u = normalized(zc.iter().map(|v| v * rng.random::<f64>()).collect());
        let value = phi(&u);
        if value < best {
            best = value;
            best_u = u;
        }
    }

    let mut witness = vec![0.0; n];
    for j in 0..s {
        witness[layout[j]] = best_u[j] / zc[j] / best;
    }
    let residual = if result.lower > 0.0 {
        (best / result.lower - 1.0).max(0.0)
    } else {
        f64::INFINITY
    };
    NormEstimate {
        value: scale / best,
        kind: if residual <= cfg.tol {
            EstimateKind::Exact
        } else {
            EstimateKind::LowerBound
        },
        witness: CoefficientVector::new(witness).expect("witness is nonnegative"),
        restarts: cfg.restarts,
        residual,
        note: None,
    }
}

fn checked_value(f: &dyn Objective, x: &[f64]) -> Result<f64> {
    let v = f.value(x);
    if v.is_nan() || v < 0.0 {
        Err(Error::Objective(format!("objective returned {v}")))
    } else {
        Ok(v)
    }
}

fn normalize_into_ball(space: &dyn Norm, x: Vec<f64>) -> Option<Vec<f64>> {
    let norm = space.eval(&x);
    if norm > 0.0 && norm.is_finite() {
        Some(x.into_iter().map(|v| v / norm).collect())
    } else {
        None
    }
}

/// Lower estimate of `sup { f(x) : ‖x‖_E ≤ 1, x ≥ 0 }` for a monotone
/// convex `f`.
///
/// Each start is improved by the conditional-gradient iteration
/// `x ← argmax_{B_E} ⟨∇f(x), ·⟩`, which never decreases a convex
/// objective. Starts are the coordinate vectors, the constant vector,
/// the gradient at the constant vector and `cfg.restarts` random points;
/// the best value over all of them is returned.
pub fn convex_max(
    space: &dyn Norm,
    f: &dyn Objective,
    cfg: &OptimizerConfig,
) -> Result<NormEstimate> {
    cfg.validate()?;
    let n = space.dim();
    if let Some(z) = f.as_linear() {
        let z = CoefficientVector::new(z.to_vec())?;
        return linear_max(space, &z, cfg);
    }
    let inner = cfg.inner();
    let gradient = |x: &[f64]| -> Vec<f64> {
        let mut g = f
            .gradient(x)
            .unwrap_or_else(|| finite_difference_gradient(|y| f.value(y), x));
        for v in g.iter_mut() {
            if !v.is_finite() || *v < 0.0 {
                *v = 0.0;
            }
        }
        g
    };

    let mut starts: Vec<Vec<f64>> = (0..n)
        .map(|k| CoefficientVector::unit(n, k).into_vec())
        .collect();
    starts.push(vec![1.0; n]);
    let g0 = gradient(&vec![1.0; n]);
    if g0.iter().any(|&v| v > 0.0) {
        starts.push(g0);
    }
    for i in 0..cfg.restarts {
        let mut rng = cfg.sub_rng(i as u64);
        starts.push((0..n).map(|_| rng.random::<f64>()).collect());
    }

    let mut best = (f64::NEG_INFINITY, vec![0.0; n], 0.0);
    for start in starts {
        let Some(mut x) = normalize_into_ball(space, start) else {
            continue;
        };
        let mut value = checked_value(f, &x)?;
        let mut last_gain = 0.0;
        for _ in 0..cfg.max_iter {
            let g = gradient(&x);
            if g.iter().all(|&v| v == 0.0) {
                break;
            }
            let next = linear_max_raw(space, &g, &inner).witness.into_vec();
            let next_value = checked_value(f, &next)?;
            if next_value <= value * (1.0 + cfg.tol) {
                last_gain = ((next_value - value) / value.max(f64::MIN_POSITIVE)).max(0.0);
                if next_value > value {
                    x = next;
                    value = next_value;
                }
                break;
            }
            last_gain = (next_value - value) / value.max(f64::MIN_POSITIVE);
            x = next;
            value = next_value;
        }
        if value > best.0 {
            best = (value, x, last_gain);
        }
    }
    if best.0 == f64::NEG_INFINITY {
        best.0 = checked_value(f, &best.1)?;
    }
    Ok(NormEstimate {
        value: best.0,
        kind: EstimateKind::LowerBound,
        witness: CoefficientVector::new(best.1)?,
        restarts: cfg.restarts,
        residual: best.2,
        note: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{make_space, SpaceDescriptor};

    fn space(d: SpaceDescriptor) -> crate::spaces::SequenceSpace {
        make_space(&d).unwrap()
    }

    fn cv(v: &[f64]) -> CoefficientVector {
        CoefficientVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hoelder_endpoints() {
        let cfg = OptimizerConfig::default();
        let z = cv(&[0.5, 2.0, 1.0]);
        let l1 = space(SpaceDescriptor::lp(1.0, 3));
        let r = linear_max(&Numeric(&l1), &z, &cfg).unwrap();
        assert!((r.value - 2.0).abs() < 1e-8, "{}", r.value);
        assert_eq!(r.kind, EstimateKind::Exact);

        let l2 = space(SpaceDescriptor::lp(2.0, 2));
        let r = linear_max(&Numeric(&l2), &cv(&[1.0, 1.0]), &cfg).unwrap();
        assert!((r.value - 2f64.sqrt()).abs() < 1e-8, "{}", r.value);
    }

    #[test]
    fn lorentz_dual_matches_marcinkiewicz_formula() {
        // The dual of d(w,1) is m_Ψ with Ψ(n) = Σ_{k≤n} w(k).
        let e = space(SpaceDescriptor::lorentz(vec![1.0, 0.5, 0.25], 1.0));
        let m = space(SpaceDescriptor::marcinkiewicz(vec![1.0, 1.5, 1.75]));
        let r = linear_max(&e, &cv(&[1.0, 1.0, 1.0]), &OptimizerConfig::default()).unwrap();
        assert!((r.value - 12.0 / 7.0).abs() < 1e-7, "{}", r.value);
        assert_eq!(r.kind, EstimateKind::Exact);
        let z = cv(&[0.3, 2.0, 1.1]);
        let r = linear_max(&e, &z, &OptimizerConfig::default()).unwrap();
        assert!((r.value - m.norm(&z).unwrap()).abs() < 1e-7);
    }

    #[test]
    fn witness_is_feasible_and_attains_value() {
        let e = space(SpaceDescriptor::lorentz_power(0.5, 2.0, 5));
        let z = cv(&[0.1, 3.0, 0.0, 1.2, 0.7]);
        let r = linear_max(&e, &z, &OptimizerConfig::default()).unwrap();
        assert!(e.eval(&r.witness) <= 1.0 + 1e-9);
        assert!((dot(&z, &r.witness) - r.value).abs() <= 1e-10 * r.value);
        assert_eq!(r.witness[2], 0.0);
    }

    #[test]
    fn zero_and_rank_one_pairings() {
        let e = space(SpaceDescriptor::marcinkiewicz_power(0.5, 4));
        let cfg = OptimizerConfig::default();
        assert_eq!(
            dual_norm(&e, &CoefficientVector::zeros(4), &cfg)
                .unwrap()
                .value,
            0.0
        );
        let r = dual_norm(&e, &CoefficientVector::unit(4, 2), &cfg).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dimension_mismatch() {
        let e = space(SpaceDescriptor::lp(2.0, 3));
        assert!(matches!(
            linear_max(&e, &cv(&[1.0]), &OptimizerConfig::default()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn convex_max_examples() {
        let cfg = OptimizerConfig::default();
        let l4 = space(SpaceDescriptor::lp(4.0, 2));
        let l2 = space(SpaceDescriptor::lp(2.0, 2));
        let alpha = [1.0, 1.0];
        let f = WeightedNorm {
            alpha: &alpha,
            norm: &l2,
        };
        let r = convex_max(&l4, &f, &cfg).unwrap();
        assert!((r.value - 2f64.powf(0.25)).abs() < 1e-5, "{}", r.value);
        assert_eq!(r.kind, EstimateKind::LowerBound);

        let e = space(SpaceDescriptor::lorentz_power(0.5, 1.0, 3));
        let own = |x: &[f64]| e.eval(x);
        let r = convex_max(&e, &own, &cfg).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn convex_max_rejects_bad_objectives() {
        let e = space(SpaceDescriptor::lp(2.0, 2));
        let nan = |_: &[f64]| f64::NAN;
        assert!(matches!(
            convex_max(&e, &nan, &OptimizerConfig::default()),
            Err(Error::Objective(_))
        ));
        let neg = |_: &[f64]| -1.0;
        assert!(convex_max(&e, &neg, &OptimizerConfig::default()).is_err());
    }

    #[test]
    fn convex_max_delegates_linear_objectives() {
        let e = space(SpaceDescriptor::lorentz_power(0.3, 2.0, 4));
        let z = vec![0.4, 1.0, 0.2, 0.9];
        let cfg = OptimizerConfig::default();
        let a = convex_max(&e, &Linear(z.clone()), &cfg).unwrap();
        let b = linear_max(&e, &cv(&z), &cfg).unwrap();
        assert_eq!(a, b);
    }
}
