//! Numerical calculus for Köthe sequence spaces at a fixed truncation
//! dimension.
//!
//! The crate evaluates norms of concrete sequence spaces (`ℓ_p`, Lorentz
//! `d(w,p)`, Marcinkiewicz `m_Ψ`, powers `E^r` and Köthe duals `E^×`),
//! maximises linear and convex objectives over their unit balls, and builds
//! on that to estimate norms of diagonal multilinear operators: multiplier
//! norms, sup and integral ideal norms, weak-`p` norms and `(E,p)`-summing
//! norms.
//!
//! Everything operates on moduli. A complex sequence is represented by
//! `|x|`, which is all a normal (solid) norm can see.
//!
//! ```
//! use koethe::{make_space, CoefficientVector, SpaceDescriptor};
//!
//! let l2 = make_space(&SpaceDescriptor::lp(2.0, 2)).unwrap();
//! let x = CoefficientVector::new(vec![3.0, 4.0]).unwrap();
//! assert!((l2.norm(&x).unwrap() - 5.0).abs() < 1e-12);
//! ```

pub mod cli;
mod error;
pub mod ideals;
pub mod multipliers;
pub mod optimize;
pub mod spaces;
pub mod summing;
mod vector;
pub mod verify;

pub use error::{Error, Result};
pub use ideals::{
    diag_integral_norm, diag_scalar_norm, diag_sup_norm, diagonal_part, pairing, AssociatedSpace,
    FiniteMultilinearOperator, IdealNormTag, Target,
};
pub use multipliers::{lorentz_multiplier_descriptor, multiplier_norm, DiagonalSymbol};
pub use optimize::{
    convex_max, dual_norm, grid_oracle, linear_max, EstimateKind, Linear, NormEstimate, Numeric,
    Objective, OptimizerConfig, WeightedNorm,
};
pub use spaces::{
    convexity_constant_lb, dual, make_space, power, Exponent, Norm, SequenceSpace, SpaceDescriptor,
    SpaceFlags, WeightSpec,
};
pub use summing::{
    composition_witness_pair, convexification_witness_gap, inclusion_constant,
    inclusion_witness_pair, summing_norm_lb, weak_p_norm, SummingConfig, SummingEstimate,
    WitnessFamily,
};
pub use vector::{rearrange, CoefficientVector};
