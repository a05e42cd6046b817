//! Lower estimates of (E,p)-summing norms of diagonal operators from finite
//! witness families, with the weak ℓ_p norms they are built on.
//!
//! cargo run --example summing_estimates

use koethe::{
    inclusion_constant, make_space, summing_norm_lb, weak_p_norm, DiagonalSymbol, OptimizerConfig,
    SpaceDescriptor, SummingConfig, WitnessFamily,
};

fn main() -> koethe::Result<()> {
    let cfg = OptimizerConfig::default();
    let linf = make_space(&SpaceDescriptor::lp(f64::INFINITY, 3))?;
    let family = WitnessFamily::from_rows(vec![vec![1.0, 0.0, 0.5], vec![0.0, 1.0, 0.5]])?;
    for p in [1.0, 2.0, 4.0] {
        let w = weak_p_norm(&linf, &family, p, &cfg)?;
        println!("w_{p}(X) in ℓ_∞ = {:.10} ({})", w.value, w.kind.as_str());
    }

    let l1 = make_space(&SpaceDescriptor::lp(1.0, 4))?;
    let c = inclusion_constant(&l1, 2.0, &cfg)?;
    println!("inclusion constant of ℓ_1^4 for p = 2: {:.10}", c.value);

    // On ℓ_∞ domains the (ℓ_p,p)-summing norm of D_α: ℓ_∞ → ℓ_p is ‖α‖_p.
    let alpha = DiagonalSymbol::from_signed(&[1.0, 2.0, 0.5])?;
    for p in [1.0, 2.0] {
        let target = make_space(&SpaceDescriptor::lp(p, 3))?;
        let index = SpaceDescriptor::lp(p, 1);
        let r = summing_norm_lb(
            &index,
            p,
            1,
            &linf,
            &target,
            &alpha,
            &SummingConfig::default(),
        )?;
        let exact = alpha
            .moduli()
            .iter()
            .map(|v| v.powf(p))
            .sum::<f64>()
            .powf(1.0 / p);
        println!(
            "p = {p}: estimate {:.10}, ‖α‖_p = {exact:.10}",
            r.estimate.value
        );
        println!("  best value by family size {:?}", r.profile);
    }
    Ok(())
}
