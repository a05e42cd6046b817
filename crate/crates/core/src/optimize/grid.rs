use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::optimize::{EstimateKind, NormEstimate, Objective};
use crate::spaces::Norm;
use crate::vector::CoefficientVector;

const MAX_GRID_POINTS: usize = 1 << 25;

/// Brute-force maximum of `f` over the positive part of the unit sphere of
/// `E`, for `N ≤ 4`.
///
/// Angles `θ ∈ [0, π/2]^{N-1}` are sampled at `resolution` points each,
/// mapped to the Euclidean sphere and pushed radially onto `∂B_E`. The
/// residual is `(N-1)` times the largest change of `f` between neighbouring
/// grid points, a bound on how far the grid maximum can sit below the true
/// one.
pub fn grid_oracle(space: &dyn Norm, f: &dyn Objective, resolution: usize) -> Result<NormEstimate> {
    let n = space.dim();
    if n > 4 {
        return Err(Error::Refused(format!(
            "grid oracle supports N ≤ 4, got N = {n}"
        )));
    }
    if resolution < 16 {
        return Err(Error::InvalidInput(format!(
            "grid resolution must be ≥ 16, got {resolution}"
        )));
    }
    let axes = n - 1;
    let total = resolution
        .checked_pow(axes as u32)
        .filter(|&t| t <= MAX_GRID_POINTS)
        .ok_or_else(|| {
            Error::Refused(format!("grid of {resolution}^{axes} points is too large"))
        })?;

    let angles: Vec<(f64, f64)> = (0..resolution)
        .map(|i| {
            let t = FRAC_PI_2 * i as f64 / (resolution - 1) as f64;
            (t.cos(), t.sin())
        })
        .collect();

    let mut values = vec![0.0; total];
    let mut best = (f64::NEG_INFINITY, vec![0.0; n]);
    let mut idx = vec![0usize; axes];
    let mut u = vec![0.0; n];
    for slot in values.iter_mut() {
        let mut tail = 1.0;
        for (k, &i) in idx.iter().enumerate() {
            u[k] = tail * angles[i].0;
            tail *= angles[i].1;
        }
        u[n - 1] = tail;
        for v in u.iter_mut() {
            *v = v.max(0.0);
        }
        let norm = space.eval(&u);
        let x: Vec<f64> = u.iter().map(|v| v / norm).collect();
        let value = f.value(&x);
        if value.is_nan() || value < 0.0 {
            return Err(Error::Objective(format!("objective returned {value}")));
        }
        *slot = value;
        if value > best.0 {
            best = (value, x);
        }
        for digit in idx.iter_mut().rev() {
            *digit += 1;
            if *digit < resolution {
                break;
            }
            *digit = 0;
        }
    }

    let mut oscillation = 0.0_f64;
    let mut stride = 1;
    for _ in 0..axes {
        for (flat, &v) in values.iter().enumerate() {
            if (flat / stride) % resolution + 1 < resolution {
                oscillation = oscillation.max((values[flat + stride] - v).abs());
            }
        }
        stride *= resolution;
    }

    Ok(NormEstimate {
        value: best.0,
        kind: EstimateKind::LowerBound,
        witness: CoefficientVector::new(best.1)?,
        restarts: 0,
        residual: axes as f64 * oscillation,
        note: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimize::Linear;
    use crate::spaces::{make_space, SpaceDescriptor};

    #[test]
    fn euclidean_diagonal() {
        let l2 = make_space(&SpaceDescriptor::lp(2.0, 2)).unwrap();
        let r = grid_oracle(&l2, &Linear(vec![1.0, 1.0]), 1024).unwrap();
        assert!((r.value - 2f64.sqrt()).abs() < 1e-3);
    }

    #[test]
    fn constant_objective() {
        let e = make_space(&SpaceDescriptor::lorentz_power(0.5, 1.0, 3)).unwrap();
        let one = |_: &[f64]| 1.0;
        let r = grid_oracle(&e, &one, 32).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn lorentz_two_dimensional() {
        let e = make_space(&SpaceDescriptor::lorentz(vec![1.0, 0.5], 1.0)).unwrap();
        let r = grid_oracle(&e, &Linear(vec![1.0, 1.0]), 1024).unwrap();
        assert!((r.value - 4.0 / 3.0).abs() < 2e-3, "{}", r.value);
        assert!(r.residual < 1e-2);
    }

    #[test]
    fn refuses_large_dimensions() {
        let e = make_space(&SpaceDescriptor::lp(2.0, 5)).unwrap();
        assert!(matches!(
            grid_oracle(&e, &Linear(vec![1.0; 5]), 16),
            Err(Error::Refused(_))
        ));
        let e = make_space(&SpaceDescriptor::lp(2.0, 2)).unwrap();
        assert!(grid_oracle(&e, &Linear(vec![1.0; 2]), 8).is_err());
    }
}
