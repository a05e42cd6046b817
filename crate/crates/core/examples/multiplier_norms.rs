//! Multiplier norms ‖x ↦ α·x‖ from ℓ_q into Lorentz spaces, compared with the
//! closed-form multiplier space.
//!
//! cargo run --example multiplier_norms

use koethe::{
    lorentz_multiplier_descriptor, make_space, multiplier_norm, CoefficientVector, DiagonalSymbol,
    OptimizerConfig, SpaceDescriptor, WeightSpec,
};

fn main() -> koethe::Result<()> {
    let cfg = OptimizerConfig::default();
    let alpha = DiagonalSymbol::from_signed(&[0.9, -0.2, 1.4, 0.6, 0.3, 1.1])?;
    let n = alpha.len();
    for (p, q) in [(1.0, 2.0), (2.0, 4.0), (1.5, 3.0), (2.0, 1.0)] {
        let domain = make_space(&SpaceDescriptor::lp(q, n))?;
        let target = make_space(&SpaceDescriptor::lorentz_power(0.5, p, n))?;
        let est = multiplier_norm(&domain, &target, &alpha, &cfg)?;
        let formula = lorentz_multiplier_descriptor(q, &WeightSpec::power(0.5), p, n)?;
        let closed = make_space(&formula)?.norm(alpha.moduli())?;
        println!(
            "p = {p}, q = {q}: optimiser {:.10} ({}), closed form {closed:.10} in {formula}",
            est.value,
            est.kind.as_str()
        );
    }

    let l2 = make_space(&SpaceDescriptor::lp(2.0, n))?;
    let sup = multiplier_norm(&l2, &l2, &alpha, &cfg)?;
    let witness = CoefficientVector::new(sup.witness.to_vec())?;
    println!(
        "ℓ_2 → ℓ_2: {:.10} attained at {:?}",
        sup.value,
        witness.as_slice()
    );
    Ok(())
}
