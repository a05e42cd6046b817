//! Köthe dual norms through the linear maximisation oracle.
//!
//! The dual of the Lorentz space d(w,1) is the Marcinkiewicz space with
//! Ψ(k) = w_1 + … + w_k, which the numerical result reproduces.
//!
//! cargo run --example dual_norms

use koethe::{dual_norm, make_space, CoefficientVector, Numeric, OptimizerConfig, SpaceDescriptor};

fn main() -> koethe::Result<()> {
    let cfg = OptimizerConfig::default();
    let z = CoefficientVector::new(vec![1.0, 1.0, 1.0])?;

    let lorentz = make_space(&SpaceDescriptor::lorentz(vec![1.0, 0.5, 0.25], 1.0))?;
    let est = dual_norm(&lorentz, &z, &cfg)?;
    println!(
        "lorentz dual of (1,1,1): {:.15} ({}), 12/7 = {:.15}",
        est.value,
        est.kind.as_str(),
        12.0 / 7.0
    );
    println!(
        "  maximiser {:?}, residual {:.1e}",
        est.witness.as_slice(),
        est.residual
    );

    let marcinkiewicz = make_space(&SpaceDescriptor::marcinkiewicz(vec![1.0, 1.5, 1.75]))?;
    println!(
        "marcinkiewicz norm of (1,1,1): {:.15}",
        marcinkiewicz.norm(&z)?
    );

    // ℓ_p duals have a closed form; `Numeric` forces the iterative path.
    let z = CoefficientVector::new(vec![3.0, 1.0, 2.0, 0.5])?;
    for p in [1.0, 1.5, 3.0, f64::INFINITY] {
        let e = make_space(&SpaceDescriptor::lp(p, 4))?;
        let closed = dual_norm(&e, &z, &cfg)?.value;
        let numeric = dual_norm(&Numeric(&e), &z, &cfg)?.value;
        println!("p = {p:<4} closed {closed:.12} iterative {numeric:.12}");
    }

    // Finite-dimensional reflexivity: the dual of the dual gives back the norm.
    let e = make_space(&SpaceDescriptor::lorentz_power(0.5, 2.0, 4))?;
    let x = CoefficientVector::new(vec![0.2, 1.0, 0.7, 0.1])?;
    let back = dual_norm(&e.dual(), &x, &cfg)?.value;
    println!(
        "reflexivity: ‖x‖_E = {:.12}, ‖x‖_(E^×)^× = {back:.12}",
        e.norm(&x)?
    );
    Ok(())
}
