//! Sup norms of diagonal n-linear maps T_α(x_1,…,x_n) = (α_k x_1(k)⋯x_n(k))_k.
//!
//! On an n-convex domain E the sequence space of bounded diagonal maps is the
//! multiplier space 𝔐(Eⁿ,F), which the two computations below reproduce.
//!
//! cargo run --example diagonal_ideals

use koethe::{
    diag_scalar_norm, diag_sup_norm, diagonal_part, make_space, multiplier_norm, pairing,
    DiagonalSymbol, FiniteMultilinearOperator, OptimizerConfig, SpaceDescriptor,
};

fn main() -> koethe::Result<()> {
    let cfg = OptimizerConfig::default();
    let alpha = DiagonalSymbol::from_signed(&[1.0, 0.4, 2.0, 0.7])?;
    let e = make_space(&SpaceDescriptor::lp(3.0, 4))?;
    let f = make_space(&SpaceDescriptor::lp(1.0, 4))?;

    let bilinear = diag_sup_norm(&e, &f, 2, &alpha, &cfg)?;
    let multiplier = multiplier_norm(&e.power(2.0)?, &f, &alpha, &cfg)?;
    println!(
        "ℓ_2(𝔅;ℓ_3,ℓ_1) norm {:.10} ({})",
        bilinear.value,
        bilinear.kind.as_str()
    );
    println!("𝔐(ℓ_3², ℓ_1) norm    {:.10}", multiplier.value);

    for n in 1..=3 {
        let form = diag_scalar_norm(&e, n, &alpha, &cfg)?;
        println!("scalar {n}-linear form on ℓ_3: {:.10}", form.value);
    }

    // A general bilinear map only meets diagonal symbols through its diagonal part.
    let mut t = FiniteMultilinearOperator::new(2, 3)?;
    t.set(&[0, 0], 0, 3.0)?;
    t.set(&[0, 1], 2, 7.0)?;
    t.set(&[2, 2], 2, -5.0)?;
    let beta = DiagonalSymbol::from_signed(&[1.0, 2.0, 0.5])?;
    let d = diagonal_part(&t);
    let diagonal = FiniteMultilinearOperator::diagonal(&d, 2)?;
    println!(
        "diagonal part {:?}; pairing with T {} and with D(T) {}",
        d.signed(),
        pairing(&beta, &t)?,
        pairing(&beta, &diagonal)?
    );
    Ok(())
}
