//! Executable verification suites: numerical identities checked on seeded
//! random data, each reporting its worst observed deviation.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{diag_integral_norm, diag_scalar_norm, diag_sup_norm, AssociatedSpace, Target};
use crate::multipliers::{lorentz_multiplier_descriptor, multiplier_norm, DiagonalSymbol};
use crate::optimize::{
    convex_max, dual_norm, grid_oracle, linear_max, linear_max_raw, Linear, Numeric, Objective,
    OptimizerConfig, WeightedNorm,
};
use crate::spaces::{
    conjugate, lp_norm, make_space, Norm, SequenceSpace, SpaceDescriptor, WeightSpec,
};
use crate::summing::{convexification_witness_gap, summing_norm_lb, SummingConfig, WitnessFamily};
use crate::vector::{dot, rearrange, CoefficientVector};

/// Names accepted by [`run_suite`], in their canonical order.
pub const SUITES: [&str; 10] = [
    "holder-duality",
    "reflexivity",
    "oracle-equivalence",
    "lorentz-multipliers",
    "ln-convex",
    "ln-multipliers",
    "integral-duality",
    "summing-anchor",
    "convexification",
    "norm-axioms",
];

/// Overrides for a suite run; `None` keeps the suite's own default.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct SuiteParams {
    /// Largest dimension exercised.
    pub n_max: Option<usize>,
    /// Random cases per configuration.
    pub cases: Option<usize>,
    pub seed: u64,
}

impl SuiteParams {
    pub fn seeded(seed: u64) -> Self {
        SuiteParams {
            seed,
            ..Default::default()
        }
    }
}

/// Outcome of one family of checks inside a suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub label: String,
    pub cases: usize,
    pub failures: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
    /// Description of the case with the largest deviation.
    pub worst: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub elapsed_secs: f64,
    pub checks: Vec<CheckSummary>,
}

impl SuiteReport {
    pub fn max_deviation(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.max_deviation)
            .fold(0.0, f64::max)
    }

    pub fn cases(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} ({} cases, {:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.cases(),
            self.elapsed_secs
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "  {:<4} {}: {} cases, max deviation {:.3e} (tolerance {:.0e}){}",
                if c.failures == 0 { "ok" } else { "FAIL" },
                c.label,
                c.cases,
                c.max_deviation,
                c.tolerance,
                if c.failures > 0 {
                    format!(", {} failures, worst: {}", c.failures, c.worst)
                } else {
                    String::new()
                }
            )?;
        }
        Ok(())
    }
}

struct Check {
    summary: CheckSummary,
}

impl Check {
    fn new(label: &str, tolerance: f64) -> Self {
        Check {
            summary: CheckSummary {
                label: label.to_string(),
                cases: 0,
                failures: 0,
                max_deviation: 0.0,
                tolerance,
                worst: String::new(),
            },
        }
    }

    fn record(&mut self, deviation: f64, context: impl FnOnce() -> String) {
        let s = &mut self.summary;
        s.cases += 1;
        let failed = deviation.is_nan() || deviation > s.tolerance;
        if failed {
            s.failures += 1;
        }
        let larger = deviation > s.max_deviation;
        if larger {
            s.max_deviation = deviation;
        }
        if (failed && (s.failures == 1 || larger)) || (s.failures == 0 && larger) {
            s.worst = context();
        }
    }
}

fn relative(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n)
        .map(|_| {
            if rng.random_bool(0.2) {
                0.0
            } else {
                rng.random::<f64>()
            }
        })
        .collect();
    if v.iter().all(|&x| x == 0.0) {
        let k = rng.random_range(0..n);
        v[k] = rng.random_range(0.1..1.0);
    }
    v
}

fn cv(v: Vec<f64>) -> CoefficientVector {
    CoefficientVector::new(v).expect("generated vectors are nonnegative")
}

fn symbol(v: Vec<f64>) -> DiagonalSymbol {
    DiagonalSymbol::new(cv(v))
}

fn space(d: &SpaceDescriptor) -> Result<SequenceSpace> {
    make_space(d)
}

fn fmt_vec(v: &[f64]) -> String {
    format!(
        "({})",
        v.iter()
            .map(|x| format!("{x:.6}"))
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn random_weights(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut w = vec![1.0];
    for _ in 1..n {
        let last = *w.last().unwrap();
        w.push(last * rng.random_range(0.3..1.0));
    }
    w
}

fn random_psi(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut psi = vec![rng.random_range(0.5..1.5)];
    for _ in 1..n {
        let last = *psi.last().unwrap();
        psi.push(last + rng.random_range(0.05..1.0));
    }
    psi
}

/// A random space whose norm is cheap to evaluate.
fn random_space(rng: &mut ChaCha8Rng, n: usize) -> SpaceDescriptor {
    let exponent = |rng: &mut ChaCha8Rng| {
        if rng.random_bool(0.15) {
            f64::INFINITY
        } else {
            rng.random_range(1.0..4.0)
        }
    };
    match rng.random_range(0..7) {
        0 => SpaceDescriptor::lp(exponent(rng), n),
        1 => SpaceDescriptor::lorentz_power(
            rng.random_range(0.0..1.0),
            rng.random_range(1.0..3.0),
            n,
        ),
        2 => SpaceDescriptor::lorentz(random_weights(rng, n), rng.random_range(1.0..3.0)),
        3 => SpaceDescriptor::marcinkiewicz(random_psi(rng, n)),
        4 => SpaceDescriptor::marcinkiewicz_power(rng.random_range(0.0..1.0), n),
        5 => SpaceDescriptor::power(
            SpaceDescriptor::lorentz_power(rng.random_range(0.0..1.0), 1.0, n),
            rng.random_range(0.25..1.0),
        ),
        _ => SpaceDescriptor::dual(SpaceDescriptor::lp(exponent(rng), n)),
    }
}

/// Runs the named suite.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    let start = Instant::now();
    let checks = match name {
        "holder-duality" => holder_duality(params)?,
        "reflexivity" => reflexivity(params)?,
        "oracle-equivalence" => oracle_equivalence(params)?,
        "lorentz-multipliers" => lorentz_multipliers(params)?,
        "ln-convex" => ln_convex(params)?,
        "ln-multipliers" => ln_multipliers(params)?,
        "integral-duality" => integral_duality(params)?,
        "summing-anchor" => summing_anchor(params)?,
        "convexification" => convexification(params)?,
        "norm-axioms" => norm_axioms(params)?,
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown suite {other:?}; available: {}",
                SUITES.join(", ")
            )))
        }
    };
    let checks: Vec<CheckSummary> = checks.into_iter().map(|c| c.summary).collect();
    Ok(SuiteReport {
        name: name.to_string(),
        passed: checks.iter().all(|c| c.failures == 0),
        elapsed_secs: start.elapsed().as_secs_f64(),
        checks,
    })
}

fn rng_for(params: &SuiteParams, suite: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(suite);
    rng
}

fn suite_cfg(params: &SuiteParams, restarts: usize) -> OptimizerConfig {
    OptimizerConfig {
        restarts,
        seed: params.seed,
        ..Default::default()
    }
}

const EXPONENTS: [f64; 5] = [1.0, 1.5, 2.0, 3.0, f64::INFINITY];

fn holder_duality(params: &SuiteParams) -> Result<Vec<Check>> {
    let n_max = params.n_max.unwrap_or(8);
    let cases = params.cases.unwrap_or(100);
    let cfg = suite_cfg(params, 32);
    let mut rng = rng_for(params, 1);
    let mut closed = Check::new("closed form vs ‖z‖_{p'}", 1e-6);
    let mut numeric = Check::new("optimizer vs ‖z‖_{p'}", 1e-6);
    for n in 2..=n_max {
        for p in EXPONENTS {
            let e = space(&SpaceDescriptor::lp(p, n))?;
            for _ in 0..cases {
                let z = cv(random_vector(&mut rng, n));
                let expect = lp_norm(conjugate(p), &z);
                let a = dual_norm(&e, &z, &cfg)?.value;
                let b = dual_norm(&Numeric(&e), &z, &cfg)?.value;
                let ctx = || format!("N={n} p={p} z={}", fmt_vec(&z));
                closed.record(relative(a, expect), ctx);
                numeric.record(relative(b, expect), ctx);
            }
        }
    }
    Ok(vec![closed, numeric])
}

fn reflexivity(params: &SuiteParams) -> Result<Vec<Check>> {
    let n_max = params.n_max.unwrap_or(6);
    let cases = params.cases.unwrap_or(50);
    let cfg = suite_cfg(params, 8);
    let mut rng = rng_for(params, 2);
    let mut check = Check::new("‖x‖_{(E^×)^×} vs ‖x‖_E", 1e-5);
    let families: [fn(usize) -> SpaceDescriptor; 3] = [
        |n| SpaceDescriptor::lp(1.5, n),
        |n| SpaceDescriptor::lorentz_power(0.5, 1.0, n),
        |n| SpaceDescriptor::lorentz_power(0.5, 2.0, n),
    ];
    for family in families {
        for i in 0..cases {
            let n = 1 + i % n_max;
            let d = family(n);
            let e = space(&d)?;
            let dual = e.dual();
            let x = cv(random_vector(&mut rng, n));
            let got = dual_norm(&Numeric(&dual), &x, &cfg)?.value;
            check.record(relative(got, e.eval(&x)), || {
                format!("{d} x={}", fmt_vec(&x))
            });
        }
    }
    Ok(vec![check])
}

fn oracle_equivalence(params: &SuiteParams) -> Result<Vec<Check>> {
    let n_max = params.n_max.unwrap_or(3).min(4);
    let cases = params.cases.unwrap_or(200);
    let cfg = OptimizerConfig {
        tol: 1e-12,
        ..suite_cfg(params, 8)
    };
    let mut rng = rng_for(params, 3);
    let mut gap = Check::new("|linear_max - grid| beyond grid bound", 1e-6);
    let mut dominance = Check::new("linear_max ≥ every grid value", 1e-9);
    for _ in 0..cases {
        let n = rng.random_range(1..=n_max);
        let d = random_space(&mut rng, n);
        let e = space(&d)?;
        let z = random_vector(&mut rng, n);
        let lm = linear_max(&Numeric(&e), &cv(z.clone()), &cfg)?.value;
        let resolution = match n {
            1 | 2 => 4096,
            3 => 256,
            _ => 48,
        };
        let grid = grid_oracle(&e, &Linear(z.clone()), resolution)?;
        let ctx = || format!("{d} z={} lm={lm} grid={}", fmt_vec(&z), grid.value);
        gap.record(((lm - grid.value).abs() - grid.residual).max(0.0), ctx);
        dominance.record((grid.value - lm).max(0.0), ctx);
    }
    Ok(vec![gap, dominance])
}

fn lorentz_multipliers(params: &SuiteParams) -> Result<Vec<Check>> {
    let n_max = params.n_max.unwrap_or(12);
    let cases = params.cases.unwrap_or(30);
    let cfg = suite_cfg(params, 8);
    let mut rng = rng_for(params, 4);
    let mut two_sided = Check::new("N ≤ 4: |optimizer - formula| (relative)", 1e-4);
    let mut grid_sanity = Check::new("N ≤ 4: formula within grid bound", 1e-9);
    let mut one_sided = Check::new("optimizer ≤ formula (relative excess)", 1e-4);
    for theta in [0.3, 0.5, 0.8] {
        for (p, q) in [(1.0, 2.0), (2.0, 4.0), (1.5, 3.0)] {
            for i in 0..cases {
                let n = 1 + i % n_max;
                let domain = space(&SpaceDescriptor::lp(q, n))?;
                let target = space(&SpaceDescriptor::lorentz_power(theta, p, n))?;
                let formula = space(&lorentz_multiplier_descriptor(
                    q,
                    &WeightSpec::power(theta),
                    p,
                    n,
                )?)?;
                let alpha = random_vector(&mut rng, n);
                let expect = formula.eval(&alpha);
                let got = multiplier_norm(&domain, &target, &symbol(alpha.clone()), &cfg)?.value;
                let ctx = || {
                    format!(
                        "N={n} θ={theta} p={p} q={q} α={} got={got} formula={expect}",
                        fmt_vec(&alpha)
                    )
                };
                one_sided.record(((got - expect) / expect).max(0.0), ctx);
                if n <= 4 {
                    two_sided.record(relative(got, expect), ctx);
                    let f = WeightedNorm {
                        alpha: &alpha,
                        norm: &target,
                    };
                    let resolution = [0, 4096, 4096, 160, 40][n];
                    let grid = grid_oracle(&domain, &f, resolution)?;
                    let excess = (grid.value - expect).max(expect - grid.value - grid.residual);
                    grid_sanity.record(excess.max(0.0), ctx);
                }
            }
        }
    }
    Ok(vec![two_sided, grid_sanity, one_sided])
}

fn ln_convex(params: &SuiteParams) -> Result<Vec<Check>> {
    let n_max = params.n_max.unwrap_or(6);
    let cases = params.cases.unwrap_or(20);
    let cfg = suite_cfg(params, 8);
    let mut rng = rng_for(params, 5);
    let mut identity = Check::new("ℓ₂(𝔅;E,F) vs M(E²,F) (relative)", 1e-4);
    let mut formula = Check::new("both vs ‖α‖_c, 1/c = (1/q - 2/p)₊", 1e-4);
    for p in [2.0, 3.0, 4.0] {
        for q in [1.0, 1.5, 2.0, 3.0] {
            for i in 0..cases {
                let n = 1 + i % n_max;
                let e = space(&SpaceDescriptor::lp(p, n))?;
                let f = space(&SpaceDescriptor::lp(q, n))?;
                let e2 = e.power(2.0)?;
                let alpha = random_vector(&mut rng, n);
                let a = symbol(alpha.clone());
                let lhs = diag_sup_norm(&e, &f, 2, &a, &cfg)?.value;
                let rhs = multiplier_norm(&e2, &f, &a, &cfg)?.value;
                let inv = 1.0 / q - 2.0 / p;
                let c = if inv > 0.0 { 1.0 / inv } else { f64::INFINITY };
                let expect = lp_norm(c, &alpha);
                let ctx = || {
                    format!(
                        "N={n} p={p} q={q} α={} lhs={lhs} rhs={rhs} ‖α‖_c={expect}",
                        fmt_vec(&alpha)
                    )
                };
                identity.record(relative(lhs, rhs), ctx);
                formula.record(relative(lhs, expect).max(relative(rhs, expect)), ctx);
            }
        }
    }
    Ok(vec![identity, formula])
}

/// `β ↦ ‖T_{α·β}‖_{𝔅(ⁿE)}` with the gradient read off the maximiser `y`.
struct ScalarFormOfProduct<'a> {
    domain: &'a dyn Norm,
    alpha: &'a [f64],
    n: usize,
    cfg: OptimizerConfig,
}

impl ScalarFormOfProduct<'_> {
    fn solve(&self, beta: &[f64]) -> (f64, Vec<f64>) {
        let product: Vec<f64> = self.alpha.iter().zip(beta).map(|(a, b)| a * b).collect();
        let r = diag_scalar_norm(self.domain, self.n, &symbol(product), &self.cfg)
            .expect("dimensions agree");
        let g = self
            .alpha
            .iter()
            .zip(r.witness.iter())
            .map(|(a, y)| a * y.powi(self.n as i32))
            .collect();
        (r.value, g)
    }
}

impl Objective for ScalarFormOfProduct<'_> {
    fn value(&self, beta: &[f64]) -> f64 {
        self.solve(beta).0
    }

    fn gradient(&self, beta: &[f64]) -> Option<Vec<f64>> {
        Some(self.solve(beta).1)
    }
}

fn ln_multipliers(params: &SuiteParams) -> Result<Vec<Check>> {
    let n_max = params.n_max.unwrap_or(5);
    let cases = params.cases.unwrap_or(20);
    let cfg = suite_cfg(params, 8);
    let inner = suite_cfg(params, 4);
    let mut rng = rng_for(params, 6);
    let mut identity = Check::new("ℓ₂(𝔅;ℓ₃,ℓ₂^×) vs M(ℓ₂,ℓ₂(𝔅;ℓ₃)) (relative)", 1e-4);
    let mut closed = Check::new("both vs ‖α‖_∞", 1e-4);
    for i in 0..cases * n_max {
        let n = 1 + i % n_max;
        let e = space(&SpaceDescriptor::lp(3.0, n))?;
        let f = space(&SpaceDescriptor::lp(2.0, n))?;
        let alpha = random_vector(&mut rng, n);
        let lhs = diag_sup_norm(&e, &f.dual(), 2, &symbol(alpha.clone()), &cfg)?.value;
        let objective = ScalarFormOfProduct {
            domain: &e,
            alpha: &alpha,
            n: 2,
            cfg: inner,
        };
        let rhs = convex_max(&f, &objective, &cfg)?.value;
        let expect = lp_norm(f64::INFINITY, &alpha);
        let ctx = || format!("N={n} α={} lhs={lhs} rhs={rhs}", fmt_vec(&alpha));
        identity.record(relative(lhs, rhs), ctx);
        closed.record(relative(lhs, expect).max(relative(rhs, expect)), ctx);
    }
    Ok(vec![identity, closed])
}

fn integral_duality(params: &SuiteParams) -> Result<Vec<Check>> {
    let n_max = params.n_max.unwrap_or(4);
    let cases = params.cases.unwrap_or(10);
    let cfg = suite_cfg(params, 8);
    let inner_cfg = suite_cfg(params, 2);
    let mut rng = rng_for(params, 7);
    let mut library = Check::new("ℓ₂(ℐ;ℓ₁) vs ‖α‖_∞ (relative)", 1e-3);
    let mut nested = Check::new("fully numeric nested dual vs ‖α‖_∞ (relative)", 1e-3);
    let mut pairing = Check::new("|Σαβ| ≤ ℓ₂(ℐ;E)(β)·ℓ₂(𝔅;E^×)(α) (relative excess)", 1e-4);
    for i in 0..cases * (n_max - 1).max(1) {
        let n = 2 + i % (n_max - 1).max(1);
        let n = n.min(n_max);
        let l1 = space(&SpaceDescriptor::lp(1.0, n))?;
        let alpha = random_vector(&mut rng, n);
        let expect = lp_norm(f64::INFINITY, &alpha);
        let got = diag_integral_norm(&l1, Target::Scalar, 2, &symbol(alpha.clone()), &cfg)?.value;
        library.record(relative(got, expect), || {
            format!("N={n} α={} got={got}", fmt_vec(&alpha))
        });

        let linf = l1.dual();
        let hidden = Numeric(&linf);
        let ball = AssociatedSpace::bounded(&hidden, None, 2, inner_cfg)?;
        let value = linear_max_raw(&ball, &alpha, &cfg).value;
        nested.record(relative(value, expect), || {
            format!("N={n} α={} got={value}", fmt_vec(&alpha))
        });
    }
    let pairs = params.cases.map_or(100, |c| c * 10);
    for i in 0..pairs {
        let n = 2 + i % (n_max - 1).max(1);
        let n = n.min(n_max);
        let l1 = space(&SpaceDescriptor::lp(1.0, n))?;
        let alpha = random_vector(&mut rng, n);
        let beta = random_vector(&mut rng, n);
        let integral =
            diag_integral_norm(&l1, Target::Scalar, 2, &symbol(beta.clone()), &cfg)?.value;
        let sup = diag_scalar_norm(&l1.dual(), 2, &symbol(alpha.clone()), &cfg)?.value;
        let lhs = dot(&alpha, &beta);
        let bound = integral * sup;
        pairing.record(((lhs - bound) / bound).max(0.0), || {
            format!(
                "N={n} α={} β={} |Σαβ|={lhs} bound={bound}",
                fmt_vec(&alpha),
                fmt_vec(&beta)
            )
        });
    }
    Ok(vec![library, nested, pairing])
}

fn summing_anchor(params: &SuiteParams) -> Result<Vec<Check>> {
    let n_max = params.n_max.unwrap_or(4);
    let cases = params.cases.unwrap_or(10);
    let mut rng = rng_for(params, 8);
    let base = SummingConfig {
        optimizer: suite_cfg(params, 8),
        ..Default::default()
    };
    let mut anchor = Check::new("estimate vs ‖α‖_p (relative shortfall)", 0.05);
    let mut upper = Check::new("estimate ≤ ‖α‖_p (relative excess)", 1e-12);
    let mut monotone = Check::new("nondecreasing in m_max", 1e-12);
    for p in [1.0, 2.0] {
        for i in 0..cases * n_max {
            let n = 1 + i % n_max;
            let linf = space(&SpaceDescriptor::lp(f64::INFINITY, n))?;
            let target = space(&SpaceDescriptor::lp(p, n))?;
            let index = SpaceDescriptor::lp(p, 1);
            let alpha = random_vector(&mut rng, n);
            let a = symbol(alpha.clone());
            let expect = lp_norm(p, &alpha);
            let r = summing_norm_lb(&index, p, 1, &linf, &target, &a, &base)?;
            let got = r.estimate.value;
            let ctx = || format!("N={n} p={p} α={} got={got} ‖α‖_p={expect}", fmt_vec(&alpha));
            anchor.record(((expect - got) / expect).max(0.0), ctx);
            upper.record(((got - expect) / expect).max(0.0), ctx);
            let mut drop = r
                .profile
                .windows(2)
                .map(|w| (w[0] - w[1]).max(0.0))
                .fold(0.0, f64::max);
            if i % n_max == 0 {
                let mut last = 0.0;
                for m_max in 1..=4 {
                    let cfg = SummingConfig { m_max, ..base };
                    let v = summing_norm_lb(&index, p, 1, &linf, &target, &a, &cfg)?
                        .estimate
                        .value;
                    drop = drop.max(last - v);
                    last = v;
                }
            }
            monotone.record(drop.max(0.0), ctx);
        }
    }
    Ok(vec![anchor, upper, monotone])
}

fn convexification(params: &SuiteParams) -> Result<Vec<Check>> {
    let n = params.n_max.unwrap_or(4);
    let cases = params.cases.unwrap_or(500);
    let mut rng = rng_for(params, 9);
    let mut check = Check::new("per-witness sides agree (relative)", 1e-10);
    for i in 0..cases {
        let arity = 2 + i % 2;
        let m = rng.random_range(1..=5);
        let index = space(&random_space(&mut rng, m))?;
        let f = space(&SpaceDescriptor::lp(rng.random_range(1.0..4.0), n))?;
        let g = space(&random_space(&mut rng, n))?;
        let alpha = random_vector(&mut rng, n);
        let family =
            WitnessFamily::from_rows((0..m).map(|_| random_vector(&mut rng, n)).collect())?;
        let (a, b) = convexification_witness_gap(
            &index,
            1.0,
            arity,
            &f,
            &g,
            &symbol(alpha.clone()),
            &family,
        )?;
        check.record(relative(a, b), || {
            format!(
                "n={arity} E={} G={} α={} sides=({a}, {b})",
                index.descriptor(),
                g.descriptor(),
                fmt_vec(&alpha)
            )
        });
    }
    Ok(vec![check])
}

/// Descriptors of every kind of space the crate can build, at dimension `n`.
pub fn constructible_spaces(n: usize) -> Vec<SpaceDescriptor> {
    let weights: Vec<f64> = (0..n).map(|k| 1.0 / (1.0 + k as f64).sqrt()).collect();
    let psi: Vec<f64> = (1..=n).map(|k| (k as f64).powf(0.7)).collect();
    vec![
        SpaceDescriptor::lp(1.0, n),
        SpaceDescriptor::lp(1.5, n),
        SpaceDescriptor::lp(2.0, n),
        SpaceDescriptor::lp(3.0, n),
        SpaceDescriptor::lp(f64::INFINITY, n),
        SpaceDescriptor::lorentz_power(0.3, 1.0, n),
        SpaceDescriptor::lorentz_power(0.8, 2.5, n),
        SpaceDescriptor::lorentz(weights, 1.5),
        SpaceDescriptor::marcinkiewicz_power(0.5, n),
        SpaceDescriptor::marcinkiewicz(psi),
        SpaceDescriptor::power(SpaceDescriptor::lp(3.0, n), 0.5),
        SpaceDescriptor::power(SpaceDescriptor::lp(3.0, n), 2.0),
        SpaceDescriptor::power(SpaceDescriptor::lorentz_power(0.5, 1.0, n), 0.5),
        SpaceDescriptor::power(
            SpaceDescriptor::power(SpaceDescriptor::lp(4.0, n), 2.0),
            0.5,
        ),
        SpaceDescriptor::dual(SpaceDescriptor::lp(3.0, n)),
        SpaceDescriptor::dual(SpaceDescriptor::lorentz_power(0.5, 1.0, n)),
        SpaceDescriptor::dual(SpaceDescriptor::lorentz_power(0.5, 2.0, n)),
        SpaceDescriptor::dual(SpaceDescriptor::marcinkiewicz_power(0.5, n)),
    ]
}

fn norm_axioms(params: &SuiteParams) -> Result<Vec<Check>> {
    let n_max = params.n_max.unwrap_or(6);
    let cases = params.cases.unwrap_or(1000);
    let mut rng = rng_for(params, 10);
    let mut homogeneity = Check::new("homogeneity (relative)", 1e-12);
    let mut triangle = Check::new("triangle inequality (excess)", 1e-9);
    let mut normality = Check::new("monotone under domination (excess)", 1e-12);
    let mut symmetry = Check::new("rearrangement invariance (relative)", 1e-12);
    let mut zero = Check::new("zero only at zero", 0.0);
    let kinds = constructible_spaces(1).len();
    for kind in 0..kinds {
        for i in 0..cases {
            let n = 1 + i % n_max;
            let d = constructible_spaces(n).swap_remove(kind);
            let e = space(&d)?;
            let x = random_vector(&mut rng, n);
            let y = random_vector(&mut rng, n);
            let lambda = rng.random_range(0.1..10.0);
            let nx = e.eval(&x);
            let scaled: Vec<f64> = x.iter().map(|v| lambda * v).collect();
            let ns = e.eval(&scaled);
            homogeneity.record(relative(ns, lambda * nx), || {
                format!("{d} x={} λ={lambda}", fmt_vec(&x))
            });
            let sum: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
            let ny = e.eval(&y);
            triangle.record((e.eval(&sum) - nx - ny).max(0.0), || {
                format!("{d} x={} y={}", fmt_vec(&x), fmt_vec(&y))
            });
            let above: Vec<f64> = x
                .iter()
                .zip(&y)
                .map(|(a, b)| a + 0.5 * b * rng.random::<f64>())
                .collect();
            normality.record((nx - e.eval(&above)).max(0.0), || {
                format!("{d} x={}", fmt_vec(&x))
            });
            if e.flags().symmetric {
                let mut shuffled = x.clone();
                shuffled.reverse();
                shuffled.rotate_left(i % n);
                let sorted = rearrange(&cv(x.clone()));
                let dev = relative(e.eval(&shuffled), nx).max(relative(e.eval(&sorted), nx));
                symmetry.record(dev, || format!("{d} x={}", fmt_vec(&x)));
            }
            zero.record(
                if nx > 0.0 && e.eval(&vec![0.0; n]) == 0.0 {
                    0.0
                } else {
                    1.0
                },
                || format!("{d} x={}", fmt_vec(&x)),
            );
        }
    }
    Ok(vec![homogeneity, triangle, normality, symmetry, zero])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", &SuiteParams::default()).is_err());
    }

    #[test]
    fn small_runs_pass() {
        let params = SuiteParams {
            n_max: Some(3),
            cases: Some(3),
            seed: 1,
        };
        for name in [
            "holder-duality",
            "convexification",
            "norm-axioms",
            "summing-anchor",
        ] {
            let report = run_suite(name, &params).unwrap();
            assert!(report.passed, "{report}");
            assert!(report.cases() > 0);
        }
    }
}
