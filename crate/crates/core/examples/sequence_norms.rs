//! Norms of concrete sequence spaces: ℓ_p, Lorentz, Marcinkiewicz and powers.
//!
//! cargo run --example sequence_norms

use koethe::{make_space, power, rearrange, CoefficientVector, SpaceDescriptor};

fn main() -> koethe::Result<()> {
    let x = CoefficientVector::new(vec![1.0, 4.0, 0.5, 2.0])?;
    println!(
        "x = {:?}, decreasing rearrangement {:?}",
        x.as_slice(),
        rearrange(&x).as_slice()
    );

    let spaces = [
        SpaceDescriptor::lp(1.0, 4),
        SpaceDescriptor::lp(2.0, 4),
        SpaceDescriptor::lp(f64::INFINITY, 4),
        SpaceDescriptor::lorentz(vec![1.0, 0.5, 0.25, 0.125], 1.0),
        SpaceDescriptor::lorentz_power(0.5, 2.0, 4),
        SpaceDescriptor::marcinkiewicz_power(0.5, 4),
    ];
    for d in &spaces {
        let e = make_space(d)?;
        println!("{:<45} {:.12}", d.to_string(), e.norm(&x)?);
    }

    // ‖x‖_{E^r} = ‖x^{1/r}‖_E^r: squaring ℓ_2 gives ℓ_1, its square root gives ℓ_4.
    let l2 = make_space(&SpaceDescriptor::lp(2.0, 4))?;
    for r in [2.0, 0.5] {
        let e = power(&l2, r)?;
        println!(
            "{:<45} {:.12}  flags {:?}",
            e.descriptor().to_string(),
            e.norm(&x)?,
            e.flags()
        );
    }
    Ok(())
}
