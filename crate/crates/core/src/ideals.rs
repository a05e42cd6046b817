//! Norms of diagonal multilinear operators `T_α(x₁,…,x_n) = Σ α(k) x₁(k)⋯x_n(k) e_k`
//! in the ideals of bounded and integral operators, plus the diagonal part
//! and trace pairing of general finite operators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::multipliers::{multiplier_norm, DiagonalSymbol};
use crate::optimize::{
    convex_max, linear_max, linear_max_raw, EstimateKind, NormEstimate, Objective, OptimizerConfig,
};
use crate::spaces::{Norm, SequenceSpace, SpaceDescriptor};
use crate::vector::CoefficientVector;

/// Which operator ideal a diagonal norm refers to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "ideal", rename_all = "lowercase")]
pub enum IdealNormTag {
    /// Bounded operators `𝔅` with the sup norm.
    Sup,
    /// Grothendieck integral operators `ℐ`.
    Integral,
    /// `(E,p)`-summing operators, `E` being the index space.
    Summing { index: SpaceDescriptor, p: f64 },
}

impl IdealNormTag {
    pub fn validate(&self) -> Result<()> {
        if let IdealNormTag::Summing { index, p } = self {
            crate::spaces::make_space(index)?;
            if p.is_nan() || *p < 1.0 {
                return Err(Error::InvalidInput(format!(
                    "summing exponent p must be ≥ 1, got {p}"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for IdealNormTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealNormTag::Sup => f.write_str("sup"),
            IdealNormTag::Integral => f.write_str("integral"),
            IdealNormTag::Summing { index, p } => write!(f, "summing({index}, p={p})"),
        }
    }
}

impl FromStr for IdealNormTag {
    type Err = Error;

    /// Parses `sup` / `bounded` and `integral`; summing tags need their
    /// parameters and are built directly.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sup" | "bounded" => Ok(IdealNormTag::Sup),
            "integral" => Ok(IdealNormTag::Integral),
            other => Err(Error::Parse(format!("unknown ideal {other:?}"))),
        }
    }
}

/// Where a diagonal operator takes its values.
#[derive(Debug, Clone, Copy)]
pub enum Target<'a> {
    /// Scalar-valued forms, paired through the `ℓ₁` sum.
    Scalar,
    Space(&'a SequenceSpace),
}

/// `y ↦ ‖α·yⁿ‖_F`, or `y ↦ Σ α yⁿ` for scalar targets.
struct DiagonalPower<'a> {
    alpha: &'a [f64],
    n: usize,
    target: Option<&'a dyn Norm>,
}

impl DiagonalPower<'_> {
    fn image(&self, y: &[f64]) -> Vec<f64> {
        self.alpha
            .iter()
            .zip(y)
            .map(|(a, v)| a * v.powi(self.n as i32))
            .collect()
    }
}

impl Objective for DiagonalPower<'_> {
    fn value(&self, y: &[f64]) -> f64 {
        let t = self.image(y);
        match self.target {
            Some(f) => f.eval(&t),
            None => t.iter().sum(),
        }
    }

    fn gradient(&self, y: &[f64]) -> Option<Vec<f64>> {
        let outer = match self.target {
            Some(f) => f.subgradient(&self.image(y)),
            None => vec![1.0; y.len()],
        };
        let n = self.n as f64;
        Some(
            self.alpha
                .iter()
                .zip(y)
                .zip(outer)
                .map(|((a, v), g)| n * a * v.powi(self.n as i32 - 1) * g)
                .collect(),
        )
    }
}

fn check_arity(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidInput("arity n must be ≥ 1".into()))
    } else {
        Ok(())
    }
}

/// `‖T_α‖_{𝔅(ⁿE;F)} = sup_{y ∈ B_E} ‖α·yⁿ‖_F`.
///
/// Products `x₁⋯x_n` of unit vectors are exactly the powers `yⁿ` of unit
/// vectors up to domination, so the n-variable problem collapses to one
/// variable.
pub fn diag_sup_norm(
    domain: &dyn Norm,
    target: &dyn Norm,
    n: usize,
    alpha: &DiagonalSymbol,
    cfg: &OptimizerConfig,
) -> Result<NormEstimate> {
    check_arity(n)?;
    check_dim(domain.dim(), target.dim())?;
    check_dim(domain.dim(), alpha.len())?;
    cfg.validate()?;
    if n == 1 {
        return multiplier_norm(domain, target, alpha, cfg);
    }
    if domain.lp_exponent() == Some(f64::INFINITY) {
        let dim = domain.dim();
        return Ok(NormEstimate::exact(
            target.eval(alpha.moduli()),
            vec![1.0; dim],
        ));
    }
    let objective = DiagonalPower {
        alpha: alpha.moduli(),
        n,
        target: Some(target),
    };
    convex_max(domain, &objective, cfg)
}

/// `‖T_α‖_{𝔅(ⁿE)} = sup_{y ∈ B_E} Σ α(k) y(k)ⁿ` for scalar-valued forms.
pub fn diag_scalar_norm(
    domain: &dyn Norm,
    n: usize,
    alpha: &DiagonalSymbol,
    cfg: &OptimizerConfig,
) -> Result<NormEstimate> {
    check_arity(n)?;
    check_dim(domain.dim(), alpha.len())?;
    cfg.validate()?;
    if n == 1 {
        return linear_max(domain, alpha.moduli(), cfg);
    }
    if domain.lp_exponent() == Some(f64::INFINITY) {
        let dim = domain.dim();
        return Ok(NormEstimate::exact(
            alpha.moduli().iter().sum(),
            vec![1.0; dim],
        ));
    }
    let objective = DiagonalPower {
        alpha: alpha.moduli(),
        n,
        target: None,
    };
    convex_max(domain, &objective, cfg)
}

/// Inner sup norms keyed by the rounded argument, with their maximisers.
type InnerCache = HashMap<Vec<i64>, (f64, Vec<f64>)>;

/// The associated sequence space `ℓ_n(𝔅;E,F)` (or `ℓ_n(𝔅;E)` for scalar
/// targets) as a norm oracle, with memoised evaluations.
pub struct AssociatedSpace<'a> {
    domain: &'a dyn Norm,
    target: Option<&'a dyn Norm>,
    n: usize,
    cfg: OptimizerConfig,
    cache: Mutex<InnerCache>,
    certified: AtomicBool,
}

impl<'a> AssociatedSpace<'a> {
    pub fn bounded(
        domain: &'a dyn Norm,
        target: Option<&'a dyn Norm>,
        n: usize,
        cfg: OptimizerConfig,
    ) -> Result<Self> {
        check_arity(n)?;
        if let Some(f) = target {
            check_dim(domain.dim(), f.dim())?;
        }
        cfg.validate()?;
        Ok(AssociatedSpace {
            domain,
            target,
            n,
            cfg,
            cache: Mutex::new(HashMap::new()),
            certified: AtomicBool::new(true),
        })
    }

    /// Whether every evaluation so far came with an optimality certificate.
    pub fn certified(&self) -> bool {
        self.certified.load(Ordering::Relaxed)
    }

    fn evaluate(&self, gamma: &[f64]) -> (f64, Vec<f64>) {
        let key: Vec<i64> = gamma.iter().map(|v| (v * 1e12).round() as i64).collect();
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let symbol = DiagonalSymbol::new(
            CoefficientVector::new(gamma.to_vec()).expect("norm oracles receive nonnegative input"),
        );
        let estimate = match self.target {
            Some(f) => diag_sup_norm(self.domain, f, self.n, &symbol, &self.cfg),
            None => diag_scalar_norm(self.domain, self.n, &symbol, &self.cfg),
        }
        .expect("dimensions were checked at construction");
        if estimate.kind != EstimateKind::Exact {
            self.certified.store(false, Ordering::Relaxed);
        }
        let y = estimate.witness.as_slice();
        let power: Vec<f64> = y.iter().map(|v| v.powi(self.n as i32)).collect();
        let g = match self.target {
            Some(f) => {
                let image: Vec<f64> = gamma.iter().zip(&power).map(|(a, b)| a * b).collect();
                let gf = f.subgradient(&image);
                power.iter().zip(gf).map(|(a, b)| a * b).collect()
            }
            None => power,
        };
        let entry = (estimate.value, g);
        self.cache.lock().unwrap().insert(key, entry.clone());
        entry
    }
}

impl Norm for AssociatedSpace<'_> {
    fn dim(&self) -> usize {
        self.domain.dim()
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.evaluate(x).0
    }

    fn subgradient(&self, x: &[f64]) -> Vec<f64> {
        self.evaluate(x).1
    }

    fn eval_with_subgradient(&self, x: &[f64]) -> (f64, Vec<f64>) {
        self.evaluate(x)
    }

    fn is_symmetric(&self) -> bool {
        self.domain.is_symmetric() && self.target.is_none_or(|f| f.is_symmetric())
    }
}

/// `‖α‖_{ℓ_n(ℐ;E,F)}` at the working dimension, computed through the
/// duality `ℓ_n(ℐ;E_N,F_N) = ℓ_n(𝔅;E_N^×,F_N^×)^×`.
///
/// The result is certified only when every inner sup norm was; otherwise
/// it is labelled a lower bound and carries a note, since an
/// underestimated inner norm can push the outer value either way.
pub fn diag_integral_norm(
    domain: &SequenceSpace,
    target: Target<'_>,
    n: usize,
    alpha: &DiagonalSymbol,
    cfg: &OptimizerConfig,
) -> Result<NormEstimate> {
    check_arity(n)?;
    check_dim(domain.dim(), alpha.len())?;
    cfg.validate()?;
    let domain_dual = domain.dual();
    let target_dual = match target {
        Target::Scalar => None,
        Target::Space(f) => {
            check_dim(domain.dim(), f.dim())?;
            Some(f.dual())
        }
    };
    let inner_cfg = OptimizerConfig {
        restarts: cfg.restarts.min(4),
        ..*cfg
    };
    let inner = AssociatedSpace::bounded(
        &domain_dual,
        target_dual.as_ref().map(|f| f as &dyn Norm),
        n,
        inner_cfg,
    )?;
    let mut estimate = linear_max_raw(&inner, alpha.moduli(), cfg);
    if !inner.certified() {
        estimate.kind = EstimateKind::LowerBound;
        estimate.note = Some("inner sup norms are uncertified lower bounds".into());
    }
    Ok(estimate)
}

/// A finite `n`-linear operator on `R^N` given by its coefficients
/// `T(e_{i₁},…,e_{i_n})(j)`; indices are zero-based.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteMultilinearOperator {
    arity: usize,
    dim: usize,
    coefficients: BTreeMap<(Vec<usize>, usize), f64>,
}

impl FiniteMultilinearOperator {
    pub fn new(arity: usize, dim: usize) -> Result<Self> {
        check_arity(arity)?;
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        Ok(FiniteMultilinearOperator {
            arity,
            dim,
            coefficients: BTreeMap::new(),
        })
    }

    /// The diagonal operator `T_α` of the given arity.
    pub fn diagonal(alpha: &DiagonalSymbol, arity: usize) -> Result<Self> {
        let mut t = Self::new(arity, alpha.len())?;
        for (k, v) in alpha.signed().into_iter().enumerate() {
            if v != 0.0 {
                t.set(&vec![k; arity], k, v)?;
            }
        }
        Ok(t)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set(&mut self, inputs: &[usize], output: usize, value: f64) -> Result<()> {
        check_dim(self.arity, inputs.len())?;
        if let Some(&i) = inputs.iter().chain([&output]).find(|&&i| i >= self.dim) {
            return Err(Error::InvalidInput(format!(
                "index {i} out of range for N = {}",
                self.dim
            )));
        }
        if !value.is_finite() {
            return Err(Error::InvalidInput(format!(
                "coefficient {value} is not finite"
            )));
        }
        if value == 0.0 {
            self.coefficients.remove(&(inputs.to_vec(), output));
        } else {
            self.coefficients.insert((inputs.to_vec(), output), value);
        }
        Ok(())
    }

    pub fn get(&self, inputs: &[usize], output: usize) -> f64 {
        self.coefficients
            .get(&(inputs.to_vec(), output))
            .copied()
            .unwrap_or(0.0)
    }

    /// Nonzero coefficients in index order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&[usize], usize, f64)> {
        self.coefficients
            .iter()
            .map(|((inputs, output), v)| (inputs.as_slice(), *output, *v))
    }

    /// `T(x₁,…,x_n)` for real (signed) arguments.
    pub fn apply(&self, args: &[&[f64]]) -> Result<Vec<f64>> {
        check_dim(self.arity, args.len())?;
        for a in args {
            check_dim(self.dim, a.len())?;
        }
        let mut out = vec![0.0; self.dim];
        for ((inputs, output), v) in &self.coefficients {
            let product: f64 = inputs.iter().zip(args).map(|(&i, a)| a[i]).product();
            out[*output] += v * product;
        }
        Ok(out)
    }
}

/// `D(T)`: the symbol `α(i) = T(e_i,…,e_i)(i)`.
pub fn diagonal_part(t: &FiniteMultilinearOperator) -> DiagonalSymbol {
    let values: Vec<f64> = (0..t.dim).map(|i| t.get(&vec![i; t.arity], i)).collect();
    DiagonalSymbol::from_signed(&values).expect("coefficients are finite")
}

/// The trace pairing `⟨S_β, T⟩ = Σ_i β(i) T(e_i,…,e_i)(i)`.
pub fn pairing(beta: &DiagonalSymbol, t: &FiniteMultilinearOperator) -> Result<f64> {
    check_dim(t.dim, beta.len())?;
    Ok(beta
        .signed()
        .iter()
        .enumerate()
        .map(|(i, b)| b * t.get(&vec![i; t.arity], i))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimize::grid_oracle;
    use crate::spaces::make_space;

    fn space(d: SpaceDescriptor) -> SequenceSpace {
        make_space(&d).unwrap()
    }

    fn sym(v: &[f64]) -> DiagonalSymbol {
        DiagonalSymbol::new(CoefficientVector::new(v.to_vec()).unwrap())
    }

    #[test]
    fn unary_case_is_the_multiplier_norm() {
        let cfg = OptimizerConfig::default();
        let e = space(SpaceDescriptor::lorentz_power(0.5, 2.0, 3));
        let f = space(SpaceDescriptor::lp(1.5, 3));
        let alpha = sym(&[0.2, 1.0, 0.6]);
        let a = diag_sup_norm(&e, &f, 1, &alpha, &cfg).unwrap();
        let b = multiplier_norm(&e, &f, &alpha, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sup_domain_gives_target_norm() {
        let cfg = OptimizerConfig::default();
        let linf = space(SpaceDescriptor::lp(f64::INFINITY, 3));
        let alpha = sym(&[0.2, 1.0, 0.6]);
        let r = diag_sup_norm(&linf, &linf, 3, &alpha, &cfg).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.kind, EstimateKind::Exact);
        let f = space(SpaceDescriptor::lorentz_power(0.5, 1.0, 3));
        let r = diag_sup_norm(&linf, &f, 2, &alpha, &cfg).unwrap();
        assert!((r.value - f.eval(alpha.moduli())).abs() < 1e-15);
    }

    #[test]
    fn scalar_forms_follow_hoelder() {
        // sup_{‖y‖_p ≤ 1} Σ α yⁿ = ‖α‖_{(p/n)'} for p > n.
        let cfg = OptimizerConfig::default();
        let alpha = sym(&[0.7, 0.2, 1.1]);
        for (p, n) in [(3.0, 2usize), (4.0, 2), (4.0, 3), (5.0, 2)] {
            let e = space(SpaceDescriptor::lp(p, 3));
            let r = diag_scalar_norm(&e, n, &alpha, &cfg).unwrap();
            let s = p / n as f64;
            let expect = crate::spaces::lp_norm(s / (s - 1.0), alpha.moduli());
            assert!(
                (r.value - expect).abs() < 1e-6 * expect,
                "p={p} n={n}: {} vs {expect}",
                r.value
            );
            let f = |y: &[f64]| {
                y.iter()
                    .zip(alpha.moduli().iter())
                    .map(|(v, a)| a * v.powi(n as i32))
                    .sum::<f64>()
            };
            let grid = grid_oracle(&e, &f, 256).unwrap();
            assert!(grid.value <= r.value + 1e-9);
            assert!(r.value - grid.value <= grid.residual + 1e-9);
        }
        // ℓ_{2n}: ‖α‖₂
        let e = space(SpaceDescriptor::lp(4.0, 3));
        let r = diag_scalar_norm(&e, 2, &alpha, &cfg).unwrap();
        assert!((r.value - crate::spaces::lp_norm(2.0, alpha.moduli())).abs() < 1e-6);
    }

    #[test]
    fn scalar_unary_and_rank_one() {
        let cfg = OptimizerConfig::default();
        let e = space(SpaceDescriptor::lorentz_power(0.5, 1.0, 3));
        let alpha = sym(&[0.4, 1.0, 0.1]);
        let a = diag_scalar_norm(&e, 1, &alpha, &cfg).unwrap();
        let b = linear_max(&e, alpha.moduli(), &cfg).unwrap();
        assert_eq!(a, b);
        let r = diag_scalar_norm(&e, 3, &sym(&[1.0, 0.0, 0.0]), &cfg).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn integral_norm_closed_forms() {
        let cfg = OptimizerConfig::default();
        let l2 = space(SpaceDescriptor::lp(2.0, 3));
        let alpha = sym(&[0.3, 1.2, 0.5]);
        let r = diag_integral_norm(&l2, Target::Space(&l2), 1, &alpha, &cfg).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);

        let l1 = space(SpaceDescriptor::lp(1.0, 3));
        let r = diag_integral_norm(&l1, Target::Scalar, 2, &alpha, &cfg).unwrap();
        assert!((r.value - 1.2).abs() < 1e-6, "{}", r.value);
        assert_eq!(r.kind, EstimateKind::Exact);

        let r = diag_integral_norm(&l1, Target::Scalar, 2, &sym(&[0.0; 3]), &cfg).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn diagonal_part_and_pairing() {
        let mut t = FiniteMultilinearOperator::new(2, 2).unwrap();
        t.set(&[0, 0], 0, 3.0).unwrap();
        t.set(&[1, 1], 1, -5.0).unwrap();
        t.set(&[0, 1], 0, 7.0).unwrap();
        t.set(&[1, 0], 1, -2.0).unwrap();
        t.set(&[0, 0], 1, 4.0).unwrap();
        let d = diagonal_part(&t);
        assert_eq!(d.moduli().as_slice(), &[3.0, 5.0]);
        assert_eq!(d.signs(), &[1.0, -1.0]);

        let alpha = DiagonalSymbol::from_signed(&[1.5, -0.5, 2.0]).unwrap();
        let ta = FiniteMultilinearOperator::diagonal(&alpha, 3).unwrap();
        assert_eq!(diagonal_part(&ta), alpha);
        let e1 = sym(&[1.0, 0.0, 0.0]);
        assert_eq!(pairing(&e1, &ta).unwrap(), 1.5);

        let mut off = FiniteMultilinearOperator::new(2, 3).unwrap();
        off.set(&[0, 1], 2, 1.0).unwrap();
        off.set(&[2, 2], 0, 1.0).unwrap();
        assert!(diagonal_part(&off).moduli().iter().all(|&v| v == 0.0));
        assert_eq!(pairing(&alpha, &off).unwrap(), 0.0);

        let beta = DiagonalSymbol::from_signed(&[0.5, 1.0]).unwrap();
        let rebuilt = FiniteMultilinearOperator::diagonal(&diagonal_part(&t), 2).unwrap();
        assert_eq!(
            pairing(&beta, &t).unwrap(),
            pairing(&beta, &rebuilt).unwrap()
        );
    }

    #[test]
    fn operator_application() {
        let alpha = DiagonalSymbol::from_signed(&[2.0, -1.0]).unwrap();
        let t = FiniteMultilinearOperator::diagonal(&alpha, 2).unwrap();
        let out = t.apply(&[&[1.0, 3.0], &[0.5, 2.0]]).unwrap();
        assert_eq!(out, vec![1.0, -6.0]);
        assert!(t.apply(&[&[1.0, 3.0]]).is_err());
        let mut bad = FiniteMultilinearOperator::new(2, 2).unwrap();
        assert!(bad.set(&[0, 2], 0, 1.0).is_err());
    }

    #[test]
    fn tag_parsing() {
        assert_eq!("sup".parse::<IdealNormTag>().unwrap(), IdealNormTag::Sup);
        assert_eq!(
            "Integral".parse::<IdealNormTag>().unwrap(),
            IdealNormTag::Integral
        );
        assert!("nuclear".parse::<IdealNormTag>().is_err());
        let bad = IdealNormTag::Summing {
            index: SpaceDescriptor::lp(2.0, 3),
            p: 0.5,
        };
        assert!(bad.validate().is_err());
    }
}
