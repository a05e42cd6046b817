//! Integral norms of diagonal forms, computed as dual norms of bounded ones,
//! against the closed form ℓ_n(ℐ;ℓ_p) = ℓ_{p'/n}.
//!
//! cargo run --example integral_duality

use koethe::{
    diag_integral_norm, diag_scalar_norm, make_space, CoefficientVector, DiagonalSymbol,
    OptimizerConfig, SpaceDescriptor, Target,
};

fn lp(p: f64, x: &[f64]) -> f64 {
    if p.is_infinite() {
        x.iter().cloned().fold(0.0, f64::max)
    } else {
        x.iter().map(|v| v.powf(p)).sum::<f64>().powf(1.0 / p)
    }
}

fn main() -> koethe::Result<()> {
    let cfg = OptimizerConfig::default();
    let values = [0.5, 2.0, 1.25];
    let alpha = DiagonalSymbol::new(CoefficientVector::new(values.to_vec())?);
    for p in [1.0, 1.5, 2.0] {
        let e = make_space(&SpaceDescriptor::lp(p, 3))?;
        let integral = diag_integral_norm(&e, Target::Scalar, 2, &alpha, &cfg)?;
        let bounded = diag_scalar_norm(&e, 2, &alpha, &cfg)?;
        let conj = if p == 1.0 {
            f64::INFINITY
        } else {
            p / (p - 1.0)
        };
        println!(
            "p = {p}: integral {:.8} ({}), ‖α‖_(p'/2) = {:.8}, bounded {:.8}",
            integral.value,
            integral.kind.as_str(),
            lp(conj / 2.0, &values),
            bounded.value
        );
        if let Some(note) = &integral.note {
            println!("  note: {note}");
        }
    }
    Ok(())
}
