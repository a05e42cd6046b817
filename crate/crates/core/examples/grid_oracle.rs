//! Brute-force maximisation over the unit sphere in dimensions up to four,
//! used to cross-check the iterative optimisers.
//!
//! cargo run --example grid_oracle

use koethe::{
    convex_max, grid_oracle, linear_max, make_space, CoefficientVector, Linear, OptimizerConfig,
    SpaceDescriptor, WeightedNorm,
};

fn main() -> koethe::Result<()> {
    let cfg = OptimizerConfig::default();
    let e = make_space(&SpaceDescriptor::lorentz(vec![1.0, 0.5], 1.0))?;
    let grid = grid_oracle(&e, &Linear(vec![1.0, 1.0]), 2048)?;
    let lm = linear_max(&e, &CoefficientVector::new(vec![1.0, 1.0])?, &cfg)?;
    println!(
        "lorentz((1,.5),1), x1 + x2: grid {:.6} ± {:.1e}, optimiser {:.12}",
        grid.value, grid.residual, lm.value
    );

    let l4 = make_space(&SpaceDescriptor::lp(4.0, 3))?;
    let l2 = make_space(&SpaceDescriptor::lp(2.0, 3))?;
    let alpha = [1.0, 0.5, 0.8];
    let f = WeightedNorm {
        alpha: &alpha,
        norm: &l2,
    };
    let grid = grid_oracle(&l4, &f, 256)?;
    let cm = convex_max(&l4, &f, &cfg)?;
    println!(
        "‖α·x‖_2 over the ℓ_4 ball: grid {:.6} ± {:.1e}, optimiser {:.12}",
        grid.value, grid.residual, cm.value
    );

    match grid_oracle(
        &make_space(&SpaceDescriptor::lp(2.0, 5))?,
        &Linear(vec![1.0; 5]),
        64,
    ) {
        Err(e) => println!("dimension 5: {e}"),
        Ok(_) => unreachable!("the grid is limited to four dimensions"),
    }
    Ok(())
}
