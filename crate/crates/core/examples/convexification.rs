//! Witness-level identities behind convexification, composition and
//! inclusion of summing operators.
//!
//! cargo run --example convexification

use koethe::{
    composition_witness_pair, convexification_witness_gap, convexity_constant_lb,
    inclusion_witness_pair, make_space, DiagonalSymbol, OptimizerConfig, SpaceDescriptor,
    WitnessFamily,
};

fn main() -> koethe::Result<()> {
    let cfg = OptimizerConfig::default();
    let index = make_space(&SpaceDescriptor::lorentz_power(0.3, 1.5, 3))?;
    let f = make_space(&SpaceDescriptor::lp(2.0, 4))?;
    let g = make_space(&SpaceDescriptor::marcinkiewicz_power(0.5, 4))?;
    let alpha = DiagonalSymbol::from_signed(&[1.0, 0.3, 2.0, 0.8])?;
    let family = WitnessFamily::from_rows(vec![
        vec![1.0, 0.2, 0.0, 0.5],
        vec![0.3, 1.0, 0.4, 0.0],
        vec![0.0, 0.0, 1.0, 1.0],
    ])?;
    for n in [2, 3] {
        let (a, b) = convexification_witness_gap(&index, 2.0, n, &f, &g, &alpha, &family)?;
        println!("n = {n}: convexification sides {a:.15} and {b:.15}");
    }

    let middle = make_space(&SpaceDescriptor::lp(3.0, 4))?;
    let (lhs, rhs) = composition_witness_pair(
        &index,
        &middle,
        &g,
        &alpha,
        &[
            alpha.clone(),
            DiagonalSymbol::from_signed(&[0.5, 1.0, 1.0, 0.2])?,
        ],
        &[family.clone(), family.clone()],
        &cfg,
    )?;
    println!("composition: {lhs:.10} ≤ {rhs:.10}");

    let (lhs, rhs) = inclusion_witness_pair(
        &SpaceDescriptor::lp(1.0, 1),
        1.0,
        2.0,
        1,
        &f,
        &g,
        &alpha,
        &family,
        &cfg,
    )?;
    println!("inclusion: {lhs:.10} ≤ {rhs:.10}");

    let l3 = make_space(&SpaceDescriptor::lp(3.0, 4))?;
    for r in [2.0, 3.0, 4.0] {
        let est = convexity_constant_lb(&l3, r, 200, 1)?;
        println!("{r}-convexity constant of ℓ_3 ≥ {:.6}", est.value);
    }
    Ok(())
}
