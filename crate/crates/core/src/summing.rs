//! Weak-`p` norms and lower estimates for `(E,p)`-summing norms of
//! diagonal multilinear operators.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::ideals::diag_sup_norm;
use crate::multipliers::DiagonalSymbol;
use crate::optimize::{
    convex_max, EstimateKind, NormEstimate, Objective, OptimizerConfig, WeightedNorm,
};
use crate::spaces::{conjugate, lp_lmo, lp_norm, make_space, Norm, SequenceSpace, SpaceDescriptor};
use crate::vector::{decreasing_order, dot, CoefficientVector};

/// A finite family `(x_i)_{i=1..m}` of vectors of a common length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<CoefficientVector>", into = "Vec<CoefficientVector>")]
pub struct WitnessFamily {
    vectors: Vec<CoefficientVector>,
}

impl WitnessFamily {
    pub fn new(vectors: Vec<CoefficientVector>) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::InvalidInput(
                "a witness family needs at least one vector".into(),
            ));
        };
        let dim = first.len();
        for v in &vectors {
            check_dim(dim, v.len())?;
        }
        Ok(WitnessFamily { vectors })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::new(
            rows.into_iter()
                .map(CoefficientVector::new)
                .collect::<Result<_>>()?,
        )
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.vectors[0].len()
    }

    pub fn vectors(&self) -> &[CoefficientVector] {
        &self.vectors
    }

    /// The family `(μ(i) x_i)_i`.
    pub fn scaled(&self, mu: &[f64]) -> Result<WitnessFamily> {
        check_dim(self.len(), mu.len())?;
        WitnessFamily::from_rows(
            self.vectors
                .iter()
                .zip(mu)
                .map(|(x, m)| x.iter().map(|v| v * m).collect())
                .collect(),
        )
    }
}

impl TryFrom<Vec<CoefficientVector>> for WitnessFamily {
    type Error = Error;

    fn try_from(v: Vec<CoefficientVector>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<WitnessFamily> for Vec<CoefficientVector> {
    fn from(f: WitnessFamily) -> Self {
        f.vectors
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SummingConfig {
    /// Largest family size searched.
    pub m_max: usize,
    /// Random families tried for every family size.
    pub restarts: usize,
    /// Local improvement steps applied to each random family.
    pub hill_steps: usize,
    /// Largest acceptable inclusion constant `c_p^{E^{1/n}}`.
    pub inclusion_cap: f64,
    pub optimizer: OptimizerConfig,
}

impl Default for SummingConfig {
    fn default() -> Self {
        SummingConfig {
            m_max: 8,
            restarts: 16,
            hill_steps: 24,
            inclusion_cap: 1e3,
            optimizer: OptimizerConfig::default(),
        }
    }
}

fn check_p(p: f64) -> Result<()> {
    if p >= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("p must be ≥ 1, got {p}")))
    }
}

/// `x ↦ ‖Σ_i c_i x_i‖_E` on coefficient vectors `c`.
struct Synthesis<'a> {
    space: &'a dyn Norm,
    family: &'a WitnessFamily,
}

impl Synthesis<'_> {
    fn combine(&self, c: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.family.dim()];
        for (x, ci) in self.family.vectors.iter().zip(c) {
            for (yk, xk) in y.iter_mut().zip(x.iter()) {
                *yk += ci * xk;
            }
        }
        y
    }
}

impl Objective for Synthesis<'_> {
    fn value(&self, c: &[f64]) -> f64 {
        self.space.eval(&self.combine(c))
    }

    fn gradient(&self, c: &[f64]) -> Option<Vec<f64>> {
        let g = self.space.subgradient(&self.combine(c));
        Some(self.family.vectors.iter().map(|x| dot(&g, x)).collect())
    }
}

/// Weak `ℓ_p` norm `w_p(X) = sup_{x' ∈ B_{E^×}} (Σ_i ⟨x', x_i⟩^p)^{1/p}`.
///
/// Computed in the equivalent form `sup_{c ∈ B_{ℓ_{p'}^m}} ‖Σ c_i x_i‖_E`.
/// The witness is the maximising `c`. Exact for `p = 1` and for `E = ℓ_∞`,
/// a lower bound otherwise.
pub fn weak_p_norm(
    space: &dyn Norm,
    family: &WitnessFamily,
    p: f64,
    cfg: &OptimizerConfig,
) -> Result<NormEstimate> {
    check_p(p)?;
    check_dim(space.dim(), family.dim())?;
    cfg.validate()?;
    weak_p_norm_raw(space, family, p, cfg)
}

fn weak_p_norm_raw(
    space: &dyn Norm,
    family: &WitnessFamily,
    p: f64,
    cfg: &OptimizerConfig,
) -> Result<NormEstimate> {
    let m = family.len();
    let q = conjugate(p);
    if space.lp_exponent() == Some(f64::INFINITY) {
        let mut best = (0.0, Vec::new());
        for k in 0..family.dim() {
            let column: Vec<f64> = family.vectors.iter().map(|x| x[k]).collect();
            let value = lp_norm(p, &column);
            if value > best.0 || best.1.is_empty() {
                best = (value, column);
            }
        }
        let (value, c) = lp_lmo(q, &best.1);
        return Ok(NormEstimate::exact(value, c));
    }
    let synthesis = Synthesis { space, family };
    if p == 1.0 {
        let ones = vec![1.0; m];
        return Ok(NormEstimate::exact(synthesis.value(&ones), ones));
    }
    let ball = make_space(&SpaceDescriptor::lp(q, m))?;
    convex_max(&ball, &synthesis, cfg)
}

/// `c_p^E = ‖ℓ_p ↪ E‖` at the working dimension, a lower bound for the
/// constant of the infinite-dimensional inclusion that grows with `N`.
pub fn inclusion_constant(space: &dyn Norm, p: f64, cfg: &OptimizerConfig) -> Result<NormEstimate> {
    check_p(p)?;
    cfg.validate()?;
    let n = space.dim();
    if let Some(q) = space.lp_exponent() {
        let gap = 1.0 / q - 1.0 / p;
        return Ok(if gap > 0.0 {
            let x = vec![(n as f64).powf(-1.0 / p); n];
            NormEstimate::exact((n as f64).powf(gap), x)
        } else {
            NormEstimate::exact(1.0, CoefficientVector::unit(n, 0).into_vec())
        });
    }
    let ball = make_space(&SpaceDescriptor::lp(p, n))?;
    let ones = vec![1.0; n];
    convex_max(
        &ball,
        &WeightedNorm {
            alpha: &ones,
            norm: space,
        },
        cfg,
    )
}

/// Result of [`summing_norm_lb`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummingEstimate {
    /// `max ratio / c_p^{E^{1/n}}`; the witness holds the norm sequence
    /// `(‖T_α(x_i,…,x_i)‖)_i` of the best family.
    pub estimate: NormEstimate,
    pub family: WitnessFamily,
    pub inclusion: NormEstimate,
    /// Best normalised value using families of size at most `m`, for
    /// `m = 1..=m_max`.
    pub profile: Vec<f64>,
}

struct RatioContext<'a> {
    index: SequenceSpace,
    p: f64,
    n: usize,
    domain: &'a dyn Norm,
    target: &'a dyn Norm,
    alpha: &'a [f64],
    cfg: OptimizerConfig,
    certified: bool,
}

impl RatioContext<'_> {
    fn norm_sequence(&self, family: &[Vec<f64>]) -> Vec<f64> {
        let mut t = vec![0.0; self.index.dim()];
        for (ti, x) in t.iter_mut().zip(family) {
            let image: Vec<f64> = self
                .alpha
                .iter()
                .zip(x)
                .map(|(a, v)| a * v.powi(self.n as i32))
                .collect();
            *ti = self.target.eval(&image);
        }
        t
    }

    fn ratio(&mut self, family: &[Vec<f64>]) -> Result<f64> {
        let numerator = self.index.eval(&self.norm_sequence(family));
        if numerator == 0.0 {
            return Ok(0.0);
        }
        let wf = WitnessFamily::from_rows(family.to_vec())?;
        let weak = weak_p_norm_raw(self.domain, &wf, self.p, &self.cfg)?;
        if weak.kind != EstimateKind::Exact {
            self.certified = false;
        }
        if weak.value == 0.0 {
            return Ok(0.0);
        }
        Ok(numerator / weak.value.powi(self.n as i32))
    }
}

/// Lower estimate of `π_{(E,p)}(T_α)` for the diagonal `n`-linear
/// operator `T_α : domainⁿ → target`, normalised by `c_p^{E^{1/n}}`.
///
/// `index` describes the space `E` that measures the sequence
/// `(‖T_α(x_i,…,x_i)‖)_i`; it is instantiated at dimension `m_max` for
/// that purpose and at the domain dimension for the inclusion constant,
/// which must not exceed `cfg.inclusion_cap`. For each family size
/// `m ≤ m_max` the search tries unit vectors on the largest entries of
/// `α`, constant and `α`-shaped families, and random families refined by
/// multiplicative hill climbing. Families for size `m` do not depend on
/// `m_max`, so the estimate is nondecreasing in `m_max`.
pub fn summing_norm_lb(
    index: &SpaceDescriptor,
    p: f64,
    n: usize,
    domain: &dyn Norm,
    target: &dyn Norm,
    alpha: &DiagonalSymbol,
    cfg: &SummingConfig,
) -> Result<SummingEstimate> {
    check_p(p)?;
    if n == 0 {
        return Err(Error::InvalidInput("arity n must be ≥ 1".into()));
    }
    if cfg.m_max == 0 {
        return Err(Error::InvalidInput("m_max must be ≥ 1".into()));
    }
    cfg.optimizer.validate()?;
    let dim = domain.dim();
    check_dim(dim, target.dim())?;
    check_dim(dim, alpha.len())?;

    let root = make_space(&index.with_dim(dim))?.power(1.0 / n as f64)?;
    let inclusion = inclusion_constant(&root, p, &cfg.optimizer)?;
    if inclusion.value.is_nan() || inclusion.value > cfg.inclusion_cap {
        return Err(Error::Precondition(format!(
            "inclusion constant c_p estimate {} exceeds the cap {}",
            inclusion.value, cfg.inclusion_cap
        )));
    }
    let c = inclusion.value;

    let weak_cfg = OptimizerConfig {
        restarts: cfg.optimizer.restarts.min(4),
        ..cfg.optimizer
    };
    let mut ctx = RatioContext {
        index: make_space(&index.with_dim(cfg.m_max))?,
        p,
        n,
        domain,
        target,
        alpha: alpha.moduli(),
        cfg: weak_cfg,
        certified: true,
    };

    let rank = decreasing_order(alpha.moduli());
    let amax = alpha.moduli().iter().fold(0.0_f64, |a, &b| a.max(b));
    let mut best = (0.0, vec![CoefficientVector::unit(dim, rank[0]).into_vec()]);
    let mut profile = Vec::with_capacity(cfg.m_max);
    let mut tried = 0;

    for m in 1..=cfg.m_max {
        let mut candidates: Vec<Vec<Vec<f64>>> = vec![
            (0..m)
                .map(|i| CoefficientVector::unit(dim, rank[i % dim]).into_vec())
                .collect(),
            vec![vec![1.0; dim]; m],
        ];
        if amax > 0.0 {
            candidates.push(vec![alpha.moduli().iter().map(|a| a / amax).collect(); m]);
        }
        for family in candidates {
            tried += 1;
            let r = ctx.ratio(&family)?;
            if r > best.0 {
                best = (r, family);
            }
        }

        for i in 0..cfg.restarts {
            let mut rng = cfg.optimizer.sub_rng(((m as u64) << 32) | i as u64);
            let mut family: Vec<Vec<f64>> = (0..m)
                .map(|_| {
                    (0..dim)
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
            let mut value = ctx.ratio(&family)?;
            for _ in 0..cfg.hill_steps {
                let (row, col) = (rng.random_range(0..m), rng.random_range(0..dim));
                let old = family[row][col];
                family[row][col] = match rng.random_range(0..4) {
                    0 => 0.0,
                    1 => 1.0,
                    _ => old * rng.random_range(-1.0f64..1.0).exp(),
                };
                let candidate = ctx.ratio(&family)?;
                if candidate > value {
                    value = candidate;
                } else {
                    family[row][col] = old;
                }
            }
            tried += 1;
            if value > best.0 {
                best = (value, family);
            }
        }
        profile.push(best.0 / c);
    }

    let norm_sequence = ctx.norm_sequence(&best.1);
    let family = WitnessFamily::from_rows(best.1)?;
    let note =
        (!ctx.certified).then(|| "weak norms of the domain were estimated from below".to_string());
    Ok(SummingEstimate {
        estimate: NormEstimate {
            value: best.0 / c,
            kind: EstimateKind::LowerBound,
            witness: CoefficientVector::new(norm_sequence)?,
            restarts: tried,
            residual: 0.0,
            note,
        },
        family,
        inclusion,
        profile,
    })
}

fn check_family(index: &SequenceSpace, domain_dim: usize, family: &WitnessFamily) -> Result<()> {
    check_dim(domain_dim, family.dim())?;
    if family.len() > index.dim() {
        return Err(Error::DimensionMismatch {
            expected: index.dim(),
            found: family.len(),
        });
    }
    Ok(())
}

fn padded(values: Vec<f64>, len: usize) -> Vec<f64> {
    CoefficientVector::new(values)
        .expect("norms are nonnegative")
        .padded(len)
        .into_vec()
}

/// The two sides of the convexification identity for one family:
/// `‖(‖α^{1/n}·x_i‖_{G^{1/n}})_i‖_{E^{1/n}}` and
/// `‖(‖α·x_iⁿ‖_G)_i‖_E^{1/n}`. They agree for every family.
pub fn convexification_witness_gap(
    index: &SequenceSpace,
    p: f64,
    n: usize,
    domain: &dyn Norm,
    target: &SequenceSpace,
    alpha: &DiagonalSymbol,
    family: &WitnessFamily,
) -> Result<(f64, f64)> {
    check_p(p)?;
    if n == 0 {
        return Err(Error::InvalidInput("arity n must be ≥ 1".into()));
    }
    check_dim(domain.dim(), target.dim())?;
    check_dim(domain.dim(), alpha.len())?;
    check_family(index, domain.dim(), family)?;
    let inv = 1.0 / n as f64;
    let index_root = index.power(inv)?;
    let target_root = target.power(inv)?;
    let root_alpha = alpha.modulus_power(inv);

    let left_terms: Vec<f64> = family
        .vectors()
        .iter()
        .map(|x| {
            let y: Vec<f64> = root_alpha
                .iter()
                .zip(x.iter())
                .map(|(a, v)| a * v)
                .collect();
            target_root.eval(&y)
        })
        .collect();
    let right_terms: Vec<f64> = family
        .vectors()
        .iter()
        .map(|x| {
            let y: Vec<f64> = alpha
                .moduli()
                .iter()
                .zip(x.iter())
                .map(|(a, v)| a * v.powi(n as i32))
                .collect();
            target.eval(&y)
        })
        .collect();
    let m = index.dim();
    Ok((
        index_root.eval(&padded(left_terms, m)),
        index.eval(&padded(right_terms, m)).powf(inv),
    ))
}

/// Both sides of the composition inequality for diagonal operators and one
/// choice of families: with `T = T_β : Yⁿ → G` and `A_j = D_{a_j}`,
/// returns `‖(‖T(A₁x_{1,i},…,A_nx_{n,i})‖_G)_i‖_E` and
/// `‖T‖ · Π_j ‖(‖A_j x_{j,i}‖_Y)_i‖_{E^{1/n}}`. The first never exceeds
/// the second.
pub fn composition_witness_pair(
    index: &SequenceSpace,
    middle: &dyn Norm,
    target: &dyn Norm,
    beta: &DiagonalSymbol,
    maps: &[DiagonalSymbol],
    families: &[WitnessFamily],
    cfg: &OptimizerConfig,
) -> Result<(f64, f64)> {
    let n = maps.len();
    if n == 0 {
        return Err(Error::InvalidInput("at least one map is required".into()));
    }
    check_dim(n, families.len())?;
    let dim = middle.dim();
    check_dim(dim, target.dim())?;
    check_dim(dim, beta.len())?;
    let m = families[0].len();
    for (a, f) in maps.iter().zip(families) {
        check_dim(dim, a.len())?;
        check_dim(m, f.len())?;
        check_family(index, dim, f)?;
    }

    let images: Vec<Vec<Vec<f64>>> = maps
        .iter()
        .zip(families)
        .map(|(a, f)| {
            f.vectors()
                .iter()
                .map(|x| {
                    a.moduli()
                        .iter()
                        .zip(x.iter())
                        .map(|(u, v)| u * v)
                        .collect()
                })
                .collect()
        })
        .collect();

    let lhs_terms: Vec<f64> = (0..m)
        .map(|i| {
            let mut y = beta.moduli().to_vec();
            for img in &images {
                for (yk, v) in y.iter_mut().zip(&img[i]) {
                    *yk *= v;
                }
            }
            target.eval(&y)
        })
        .collect();
    let lhs = index.eval(&padded(lhs_terms, index.dim()));

    let t_norm = diag_sup_norm(middle, target, n, beta, cfg)?.value;
    let index_root = index.power(1.0 / n as f64)?;
    let mut rhs = t_norm;
    for img in &images {
        let terms: Vec<f64> = img.iter().map(|y| middle.eval(y)).collect();
        rhs *= index_root.eval(&padded(terms, index.dim()));
    }
    Ok((lhs, rhs))
}

/// Witness-level form of the inclusion `Π_{(E,p)} ⊆ Π_{(L,q)}` with
/// `L = ℓ_n(𝔅;ℓ_r,E)` and `1/r = 1/p - 1/q`, for `T_α` and one family.
///
/// Returns `(‖t‖_L / w_q(X)ⁿ, ‖t‖_L / w_p(μX)ⁿ)` where `t` is the norm
/// sequence of `X` and `μ ∈ B_{ℓ_r}` attains `‖t‖_L = ‖t·μⁿ‖_E`. Since
/// `w_p(μX) ≤ ‖μ‖_r w_q(X)`, the first value never exceeds the second,
/// which is an `(E,p)`-ratio of the rescaled family.
#[allow(clippy::too_many_arguments)]
pub fn inclusion_witness_pair(
    index: &SpaceDescriptor,
    p: f64,
    q: f64,
    n: usize,
    domain: &dyn Norm,
    target: &dyn Norm,
    alpha: &DiagonalSymbol,
    family: &WitnessFamily,
    cfg: &OptimizerConfig,
) -> Result<(f64, f64)> {
    check_p(p)?;
    if q.is_nan() || q <= p {
        return Err(Error::InvalidInput(format!(
            "need p < q, got p = {p}, q = {q}"
        )));
    }
    let dim = domain.dim();
    check_dim(dim, target.dim())?;
    check_dim(dim, alpha.len())?;
    check_dim(dim, family.dim())?;
    let m = family.len();
    let r = 1.0 / (1.0 / p - 1.0 / q);
    let index_space = make_space(&index.with_dim(m))?;
    let ell_r = make_space(&SpaceDescriptor::lp(r, m))?;

    let t: Vec<f64> = family
        .vectors()
        .iter()
        .map(|x| {
            let y: Vec<f64> = alpha
                .moduli()
                .iter()
                .zip(x.iter())
                .map(|(a, v)| a * v.powi(n as i32))
                .collect();
            target.eval(&y)
        })
        .collect();
    let t_symbol = DiagonalSymbol::new(CoefficientVector::new(t.clone())?);
    let l_norm = diag_sup_norm(&ell_r, &index_space, n, &t_symbol, cfg)?;
    let mu = l_norm.witness.as_slice();
    let numerator = index_space.eval(
        &t.iter()
            .zip(mu)
            .map(|(a, v)| a * v.powi(n as i32))
            .collect::<Vec<_>>(),
    );
    let wq = weak_p_norm_raw(domain, family, q, cfg)?.value;
    let wp = weak_p_norm_raw(domain, &family.scaled(mu)?, p, cfg)?.value;
    let ratio = |w: f64| {
        if w > 0.0 {
            numerator / w.powi(n as i32)
        } else {
            0.0
        }
    };
    Ok((ratio(wq), ratio(wp)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimize::{grid_oracle, Numeric};

    fn space(d: SpaceDescriptor) -> SequenceSpace {
        make_space(&d).unwrap()
    }

    fn sym(v: &[f64]) -> DiagonalSymbol {
        DiagonalSymbol::new(CoefficientVector::new(v.to_vec()).unwrap())
    }

    fn family(rows: &[&[f64]]) -> WitnessFamily {
        WitnessFamily::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn weak_norm_of_single_vector_is_its_norm() {
        let cfg = OptimizerConfig::default();
        let e = space(SpaceDescriptor::lorentz_power(0.5, 2.0, 3));
        let x = [0.3, 1.0, 0.6];
        for p in [1.0, 1.5, 2.0, 4.0] {
            let r = weak_p_norm(&e, &family(&[&x]), p, &cfg).unwrap();
            assert!((r.value - e.eval(&x)).abs() < 1e-9, "p={p}");
        }
    }

    #[test]
    fn weak_norm_of_unit_vectors_in_sup_space() {
        let cfg = OptimizerConfig::default();
        let linf = space(SpaceDescriptor::lp(f64::INFINITY, 3));
        let units = family(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);
        for p in [1.0, 2.0, 3.0] {
            assert_eq!(weak_p_norm(&linf, &units, p, &cfg).unwrap().value, 1.0);
            let numeric = weak_p_norm(&Numeric(&linf), &units, p, &cfg).unwrap();
            assert!(
                (numeric.value - 1.0).abs() < 1e-9,
                "p={p}: {}",
                numeric.value
            );
        }
    }

    #[test]
    fn weak_norm_of_repeated_vector() {
        let cfg = OptimizerConfig::default();
        let e = space(SpaceDescriptor::marcinkiewicz_power(0.5, 3));
        let twice = family(&[&[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0]]);
        for p in [1.0, 2.0, 3.0] {
            let r = weak_p_norm(&e, &twice, p, &cfg).unwrap();
            assert!((r.value - 2f64.powf(1.0 / p)).abs() < 1e-9, "p={p}");
        }
    }

    #[test]
    fn weak_norm_matches_dual_ball_formulation() {
        // sup over B_{E^×} of (Σ ⟨x', x_i⟩^p)^{1/p}, maximised directly.
        let cfg = OptimizerConfig::default();
        let e = space(SpaceDescriptor::lp(3.0, 3));
        let dual = e.dual();
        let x = family(&[&[0.2, 1.0, 0.1], &[0.7, 0.0, 0.5], &[0.1, 0.3, 0.9]]);
        let p = 2.0;
        let direct = |xp: &[f64]| {
            let pairings: Vec<f64> = x.vectors().iter().map(|v| dot(xp, v)).collect();
            lp_norm(p, &pairings)
        };
        let grid = grid_oracle(&dual, &direct, 400).unwrap();
        let r = weak_p_norm(&e, &x, p, &cfg).unwrap();
        assert!(r.value >= grid.value - 1e-9);
        assert!(r.value - grid.value <= grid.residual + 1e-9);
    }

    #[test]
    fn inclusion_constants() {
        let cfg = OptimizerConfig::default();
        let l2 = space(SpaceDescriptor::lp(2.0, 4));
        let l1 = space(SpaceDescriptor::lp(1.0, 4));
        assert_eq!(inclusion_constant(&l2, 2.0, &cfg).unwrap().value, 1.0);
        assert_eq!(inclusion_constant(&l2, 1.0, &cfg).unwrap().value, 1.0);
        assert!((inclusion_constant(&l1, 2.0, &cfg).unwrap().value - 2.0).abs() < 1e-15);
        let numeric = inclusion_constant(&Numeric(&l1), 2.0, &cfg).unwrap();
        assert!((numeric.value - 2.0).abs() < 1e-7, "{}", numeric.value);
        let numeric = inclusion_constant(&Numeric(&l2), 1.0, &cfg).unwrap();
        assert!((numeric.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn summing_anchor_and_zero_symbol() {
        let cfg = SummingConfig::default();
        let linf = space(SpaceDescriptor::lp(f64::INFINITY, 3));
        for p in [1.0, 2.0] {
            let lp = space(SpaceDescriptor::lp(p, 3));
            let alpha = sym(&[0.5, 1.0, 0.25]);
            let r = summing_norm_lb(&SpaceDescriptor::lp(p, 1), p, 1, &linf, &lp, &alpha, &cfg)
                .unwrap();
            let expect = lp_norm(p, alpha.moduli());
            assert!(
                (r.estimate.value - expect).abs() < 1e-12,
                "p={p}: {}",
                r.estimate.value
            );
            assert_eq!(r.profile.len(), cfg.m_max);
            assert!(r.profile.windows(2).all(|w| w[0] <= w[1]));

            let zero = summing_norm_lb(
                &SpaceDescriptor::lp(p, 1),
                p,
                1,
                &linf,
                &lp,
                &sym(&[0.0; 3]),
                &cfg,
            )
            .unwrap();
            assert_eq!(zero.estimate.value, 0.0);
        }
    }

    #[test]
    fn summing_monotone_in_family_size() {
        let linf = space(SpaceDescriptor::lp(f64::INFINITY, 3));
        let l2 = space(SpaceDescriptor::lp(2.0, 3));
        let alpha = sym(&[0.5, 1.0, 0.25]);
        let index = SpaceDescriptor::lorentz_power(0.5, 1.0, 1);
        let mut last = 0.0;
        for m_max in 1..=4 {
            let cfg = SummingConfig {
                m_max,
                restarts: 4,
                ..Default::default()
            };
            let r = summing_norm_lb(&index, 1.0, 2, &linf, &l2, &alpha, &cfg).unwrap();
            assert!(r.estimate.value >= last - 1e-12);
            last = r.estimate.value;
        }
    }

    #[test]
    fn summing_precondition() {
        let linf = space(SpaceDescriptor::lp(f64::INFINITY, 4));
        let alpha = sym(&[1.0; 4]);
        let cfg = SummingConfig {
            inclusion_cap: 1.5,
            ..Default::default()
        };
        // c_2 for ℓ₁ at N = 4 is 2.
        let err = summing_norm_lb(
            &SpaceDescriptor::lp(1.0, 1),
            2.0,
            1,
            &linf,
            &linf,
            &alpha,
            &cfg,
        )
        .unwrap_err();
        assert!(
            matches!(err, Error::Precondition(ref m) if m.contains('2')),
            "{err}"
        );
    }

    #[test]
    fn convexification_examples() {
        let l1 = space(SpaceDescriptor::lp(1.0, 2));
        let l2 = space(SpaceDescriptor::lp(2.0, 4));
        let g = space(SpaceDescriptor::lp(1.0, 4));
        let e1 = sym(&[1.0, 0.0, 0.0, 0.0]);
        let x = family(&[&[1.0, 0.0, 0.0, 0.0]]);
        let (a, b) = convexification_witness_gap(&l1, 2.0, 2, &l2, &g, &e1, &x).unwrap();
        assert!((a - 1.0).abs() < 1e-15 && (b - 1.0).abs() < 1e-15);

        let x = family(&[&[0.3, 1.0, 0.2, 0.5], &[0.9, 0.1, 0.4, 0.0]]);
        let (a, b) =
            convexification_witness_gap(&l1, 2.0, 2, &l2, &g, &sym(&[0.0; 4]), &x).unwrap();
        assert_eq!((a, b), (0.0, 0.0));
        let alpha = sym(&[0.8, 0.1, 1.7, 0.4]);
        let (a, b) = convexification_witness_gap(&l1, 2.0, 2, &l2, &g, &alpha, &x).unwrap();
        assert!((a - b).abs() <= 1e-12 * b);
    }

    #[test]
    fn composition_and_inclusion_pairs() {
        let cfg = OptimizerConfig::default();
        let index = space(SpaceDescriptor::lp(1.0, 2));
        let linf = space(SpaceDescriptor::lp(f64::INFINITY, 3));
        let l2 = space(SpaceDescriptor::lp(2.0, 3));
        let beta = sym(&[0.5, 1.0, 0.2]);
        let maps = [sym(&[1.0, 0.3, 0.7]), sym(&[0.4, 0.9, 0.1])];
        let fams = [
            family(&[&[0.2, 1.0, 0.5], &[0.6, 0.6, 0.1]]),
            family(&[&[0.9, 0.1, 0.3], &[0.0, 0.4, 1.0]]),
        ];
        let (lhs, rhs) =
            composition_witness_pair(&index, &linf, &l2, &beta, &maps, &fams, &cfg).unwrap();
        assert!(lhs <= rhs * (1.0 + 1e-8), "{lhs} > {rhs}");

        let x = family(&[&[0.2, 1.0, 0.5], &[0.6, 0.6, 0.1], &[1.0, 0.0, 0.3]]);
        let (q_ratio, p_ratio) = inclusion_witness_pair(
            &SpaceDescriptor::lp(1.0, 1),
            1.0,
            2.0,
            2,
            &linf,
            &l2,
            &beta,
            &x,
            &cfg,
        )
        .unwrap();
        assert!(q_ratio <= p_ratio * (1.0 + 1e-6), "{q_ratio} > {p_ratio}");
        assert!(q_ratio > 0.0);
    }
}
