//! Deep-cut ellipsoid method for minimising a convex function over the
//! probability simplex, with a certified lower bound.

pub(crate) struct SimplexMin {
    pub value: f64,
    pub point: Vec<f64>,
    pub lower: f64,
}

/// Minimises a convex `φ` over `{u ≥ 0, Σu = 1} ⊂ R^s`.
///
/// `oracle(u)` returns `φ(u)` and a subgradient with respect to `u`.
/// `start` is the best known feasible point. The search runs in the
/// coordinates `v = u[..s-1]` where the simplex becomes
/// `{v ≥ 0, Σv ≤ 1}`, which fits inside the unit ball around its barycenter.
pub(crate) fn minimize_on_simplex<F>(
    s: usize,
    mut oracle: F,
    start: (f64, Vec<f64>),
    tol: f64,
    budget: usize,
) -> SimplexMin
where
    F: FnMut(&[f64]) -> (f64, Vec<f64>),
{
    let (mut best, mut best_u) = start;
    if s == 1 {
        let (value, _) = oracle(&[1.0]);
        if value < best {
            best = value;
            best_u = vec![1.0];
        }
        return SimplexMin {
            value: best,
            point: best_u,
            lower: best,
        };
    }

    let d = s - 1;
    let df = d as f64;
    let mut c = vec![1.0 / s as f64; d];
    let mut p = vec![0.0; d * d];
    for k in 0..d {
        p[k * d + k] = 1.0;
    }
    let mut lower = 0.0_f64;
    let mut u = vec![0.0; s];
    let mut g = vec![0.0; d];
    let mut pg = vec![0.0; d];
    let mut iterations = 0;

    while iterations < budget {
        iterations += 1;
        let sum: f64 = c.iter().sum();
        let (mut viol, mut idx) = (0.0, usize::MAX);
        for (k, &ck) in c.iter().enumerate() {
            if -ck > viol {
                viol = -ck;
                idx = k;
            }
        }
        let over = sum - 1.0;

        let cut_depth;
        if viol > 0.0 || over > 0.0 {
            if over > viol {
                g.fill(1.0);
                viol = over;
            } else {
                g.fill(0.0);
                g[idx] = -1.0;
            }
            mat_vec(&p, &g, &mut pg);
            let gn = dot(&g, &pg).sqrt();
            if gn.is_nan() || gn <= 0.0 {
                break;
            }
            cut_depth = viol / gn;
            if cut_depth >= 1.0 {
                break;
            }
            scale_into(&mut pg, 1.0 / gn);
        } else {
            u[..d].copy_from_slice(&c);
            u[d] = (1.0 - sum).max(0.0);
            let (fc, gu) = oracle(&u);
            if fc < best {
                best = fc;
                best_u.clone_from(&u);
            }
            for k in 0..d {
                g[k] = gu[k] - gu[d];
            }
            mat_vec(&p, &g, &mut pg);
            let gn2 = dot(&g, &pg);
            if gn2.is_nan() || gn2 <= 0.0 {
                if gn2 == 0.0 {
                    lower = lower.max(fc);
                }
                break;
            }
            let gn = gn2.sqrt();
            lower = lower.max(fc - gn);
            if best - lower <= tol * best {
                break;
            }
            cut_depth = (fc - best) / gn;
            if cut_depth >= 1.0 {
                lower = best;
                break;
            }
            scale_into(&mut pg, 1.0 / gn);
        }

        let b = &pg;
        let a = cut_depth;
        if d == 1 {
            c[0] -= 0.5 * (1.0 + a) * b[0];
            p[0] *= 0.25 * (1.0 - a) * (1.0 - a);
        } else {
            let tau = (1.0 + df * a) / (df + 1.0);
            let sigma = 2.0 * (1.0 + df * a) / ((df + 1.0) * (1.0 + a));
            let delta = df * df * (1.0 - a * a) / (df * df - 1.0);
            for k in 0..d {
                c[k] -= tau * b[k];
            }
            for i in 0..d {
                for j in i..d {
                    let v = delta * (p[i * d + j] - sigma * b[i] * b[j]);
                    p[i * d + j] = v;
                    p[j * d + i] = v;
                }
            }
        }
    }

    SimplexMin {
        value: best,
        point: best_u,
        lower: lower.min(best),
    }
}

fn mat_vec(p: &[f64], x: &[f64], out: &mut [f64]) {
    let d = x.len();
    for i in 0..d {
        out[i] = p[i * d..(i + 1) * d]
            .iter()
            .zip(x)
            .map(|(a, b)| a * b)
            .sum();
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn scale_into(v: &mut [f64], s: f64) {
    for x in v {
        *x *= s;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_minimum_inside_simplex() {
        let target = [0.2, 0.3, 0.5];
        let oracle = |u: &[f64]| {
            let v: f64 = u.iter().zip(&target).map(|(a, b)| (a - b) * (a - b)).sum();
            let g = u.iter().zip(&target).map(|(a, b)| 2.0 * (a - b)).collect();
            (v, g)
        };
        let r = minimize_on_simplex(3, oracle, (f64::INFINITY, vec![]), 1e-12, 20_000);
        assert!(r.value < 1e-10, "{}", r.value);
        assert!(r.lower <= r.value);
    }

    #[test]
    fn linear_minimum_at_vertex() {
        let costs = [3.0, 1.0, 2.0, 5.0];
        let oracle = |u: &[f64]| {
            (
                u.iter().zip(&costs).map(|(a, b)| a * b).sum(),
                costs.to_vec(),
            )
        };
        let r = minimize_on_simplex(4, oracle, (f64::INFINITY, vec![]), 1e-12, 50_000);
        assert!((r.value - 1.0).abs() < 1e-10, "{}", r.value);
        assert!(r.value - r.lower <= 1e-11);
    }
}
