//! Serializable descriptions of sequence spaces.
//!
//! The JSON layout is
//! `{"type": "lp"|"lorentz"|"marcinkiewicz"|"power"|"dual", "p": number|"inf",
//! "r": number, "N": integer, "weights": {...}, "base": {...}}`, where
//! `weights` is either `{"kind":"explicit","values":[...]}` or
//! `{"kind":"power","theta":θ}`.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exponent in `[1, ∞]`; infinity serializes as the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exponent(pub f64);

impl Exponent {
    pub const INFINITY: Exponent = Exponent(f64::INFINITY);

    pub fn value(self) -> f64 {
        self.0
    }

    /// Hölder conjugate with the conventions `1' = ∞` and `∞' = 1`.
    pub fn conjugate(self) -> Exponent {
        Exponent(conjugate(self.0))
    }
}

pub(crate) fn conjugate(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

impl From<f64> for Exponent {
    fn from(p: f64) -> Self {
        Exponent(p)
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_infinite() {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct ExponentVisitor;

        impl Visitor<'_> for ExponentVisitor {
            type Value = Exponent;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number or \"inf\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Exponent, E> {
                Ok(Exponent(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Exponent, E> {
                Ok(Exponent(v as f64))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Exponent, E> {
                Ok(Exponent(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Exponent, E> {
                match v.trim().to_ascii_lowercase().as_str() {
                    "inf" | "infinity" | "∞" => Ok(Exponent::INFINITY),
                    other => other
                        .parse::<f64>()
                        .map(Exponent)
                        .map_err(|_| E::custom(format!("invalid exponent {v:?}"))),
                }
            }
        }

        d.deserialize_any(ExponentVisitor)
    }
}

/// Weight data for Lorentz spaces, or the Ψ data of a Marcinkiewicz space.
///
/// For Lorentz spaces `explicit` lists `w(1..N)` and `power` means
/// `w(k) = k^{-θ}`. For Marcinkiewicz spaces `explicit` lists `Ψ(1..N)`
/// and `power` means `Ψ(N) = Σ_{k≤N} k^{-θ}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WeightSpec {
    Explicit { values: Vec<f64> },
    Power { theta: f64 },
}

impl WeightSpec {
    pub fn explicit(values: Vec<f64>) -> Self {
        WeightSpec::Explicit { values }
    }

    pub fn power(theta: f64) -> Self {
        WeightSpec::Power { theta }
    }

    /// Length implied by explicit data.
    pub fn explicit_len(&self) -> Option<usize> {
        match self {
            WeightSpec::Explicit { values } => Some(values.len()),
            WeightSpec::Power { .. } => None,
        }
    }

    /// Lorentz weights `w(1..=dim)`, validated.
    pub fn lorentz_weights(&self, dim: usize) -> Result<Vec<f64>> {
        let w = match self {
            WeightSpec::Explicit { values } => {
                if values.len() != dim {
                    return Err(Error::Construction(format!(
                        "lorentz weights have length {}, expected N = {dim}",
                        values.len()
                    )));
                }
                values.clone()
            }
            WeightSpec::Power { theta } => {
                check_theta(*theta)?;
                (1..=dim).map(|k| (k as f64).powf(-theta)).collect()
            }
        };
        if w.iter().any(|v| !v.is_finite() || *v <= 0.0) {
            return Err(Error::Construction(
                "lorentz weights must be strictly positive".into(),
            ));
        }
        if (w[0] - 1.0).abs() > 1e-12 {
            return Err(Error::Construction(format!(
                "lorentz weights must satisfy w(1) = 1, got {}",
                w[0]
            )));
        }
        if let Some(k) = w.windows(2).position(|p| p[1] > p[0]) {
            return Err(Error::Construction(format!(
                "lorentz weights must be nonincreasing: w({}) = {} < w({}) = {}",
                k + 1,
                w[k],
                k + 2,
                w[k + 1]
            )));
        }
        Ok(w)
    }

    /// Marcinkiewicz values `Ψ(1..=dim)`, validated.
    pub fn marcinkiewicz_psi(&self, dim: usize) -> Result<Vec<f64>> {
        let psi = match self {
            WeightSpec::Explicit { values } => {
                if values.len() != dim {
                    return Err(Error::Construction(format!(
                        "marcinkiewicz Ψ has length {}, expected N = {dim}",
                        values.len()
                    )));
                }
                values.clone()
            }
            WeightSpec::Power { theta } => {
                check_theta(*theta)?;
                (1..=dim)
                    .scan(0.0, |acc, k| {
                        *acc += (k as f64).powf(-theta);
                        Some(*acc)
                    })
                    .collect()
            }
        };
        if psi.iter().any(|v| !v.is_finite() || *v <= 0.0) {
            return Err(Error::Construction(
                "marcinkiewicz Ψ must be strictly positive".into(),
            ));
        }
        if let Some(k) = psi.windows(2).position(|p| p[1] <= p[0]) {
            return Err(Error::Construction(format!(
                "marcinkiewicz Ψ must be increasing: Ψ({}) = {} ≥ Ψ({}) = {}",
                k + 1,
                psi[k],
                k + 2,
                psi[k + 1]
            )));
        }
        Ok(psi)
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && theta >= 0.0 {
        Ok(())
    } else {
        Err(Error::Construction(format!(
            "power weight exponent θ must be finite and ≥ 0, got {theta}"
        )))
    }
}

/// Symbolic description of a sequence space at a fixed dimension `N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SpaceDescriptor {
    Lp {
        p: Exponent,
        #[serde(rename = "N")]
        dim: usize,
    },
    Lorentz {
        p: Exponent,
        #[serde(rename = "N")]
        dim: usize,
        weights: WeightSpec,
    },
    Marcinkiewicz {
        #[serde(rename = "N")]
        dim: usize,
        weights: WeightSpec,
    },
    Power {
        r: f64,
        base: Box<SpaceDescriptor>,
        #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
    },
    Dual {
        base: Box<SpaceDescriptor>,
        #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
    },
}

impl SpaceDescriptor {
    pub fn lp(p: f64, dim: usize) -> Self {
        SpaceDescriptor::Lp {
            p: Exponent(p),
            dim,
        }
    }

    pub fn lorentz(weights: Vec<f64>, p: f64) -> Self {
        SpaceDescriptor::Lorentz {
            p: Exponent(p),
            dim: weights.len(),
            weights: WeightSpec::explicit(weights),
        }
    }

    /// Lorentz space with power weights `w(k) = k^{-θ}`.
    pub fn lorentz_power(theta: f64, p: f64, dim: usize) -> Self {
        SpaceDescriptor::Lorentz {
            p: Exponent(p),
            dim,
            weights: WeightSpec::power(theta),
        }
    }

    pub fn marcinkiewicz(psi: Vec<f64>) -> Self {
        SpaceDescriptor::Marcinkiewicz {
            dim: psi.len(),
            weights: WeightSpec::explicit(psi),
        }
    }

    /// Marcinkiewicz space with `Ψ(N) = Σ_{k≤N} k^{-θ}`.
    pub fn marcinkiewicz_power(theta: f64, dim: usize) -> Self {
        SpaceDescriptor::Marcinkiewicz {
            dim,
            weights: WeightSpec::power(theta),
        }
    }

    pub fn power(base: SpaceDescriptor, r: f64) -> Self {
        SpaceDescriptor::Power {
            r,
            base: Box::new(base),
            dim: None,
        }
    }

    pub fn dual(base: SpaceDescriptor) -> Self {
        SpaceDescriptor::Dual {
            base: Box::new(base),
            dim: None,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SpaceDescriptor::Lp { dim, .. }
            | SpaceDescriptor::Lorentz { dim, .. }
            | SpaceDescriptor::Marcinkiewicz { dim, .. } => *dim,
            SpaceDescriptor::Power { base, .. } | SpaceDescriptor::Dual { base, .. } => base.dim(),
        }
    }

    /// Short type tag as used in the JSON `"type"` field.
    pub fn type_name(&self) -> &'static str {
        match self {
            SpaceDescriptor::Lp { .. } => "lp",
            SpaceDescriptor::Lorentz { .. } => "lorentz",
            SpaceDescriptor::Marcinkiewicz { .. } => "marcinkiewicz",
            SpaceDescriptor::Power { .. } => "power",
            SpaceDescriptor::Dual { .. } => "dual",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Same descriptor at another dimension. Explicit weight lists are kept
    /// as they are, so resizing them fails later at construction.
    pub fn with_dim(&self, n: usize) -> Self {
        match self {
            SpaceDescriptor::Lp { p, .. } => SpaceDescriptor::Lp { p: *p, dim: n },
            SpaceDescriptor::Lorentz { p, weights, .. } => SpaceDescriptor::Lorentz {
                p: *p,
                dim: n,
                weights: weights.clone(),
            },
            SpaceDescriptor::Marcinkiewicz { weights, .. } => SpaceDescriptor::Marcinkiewicz {
                dim: n,
                weights: weights.clone(),
            },
            SpaceDescriptor::Power { r, base, dim } => SpaceDescriptor::Power {
                r: *r,
                base: Box::new(base.with_dim(n)),
                dim: dim.map(|_| n),
            },
            SpaceDescriptor::Dual { base, dim } => SpaceDescriptor::Dual {
                base: Box::new(base.with_dim(n)),
                dim: dim.map(|_| n),
            },
        }
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exp = |p: &Exponent| {
            if p.0.is_infinite() {
                "inf".to_string()
            } else {
                format!("{}", p.0)
            }
        };
        let weights = |w: &WeightSpec| match w {
            WeightSpec::Explicit { values } => format!(
                "({})",
                values
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            WeightSpec::Power { theta } => format!("k^-{theta}"),
        };
        match self {
            SpaceDescriptor::Lp { p, dim } => write!(f, "lp(p={},N={dim})", exp(p)),
            SpaceDescriptor::Lorentz { p, dim, weights: w } => {
                write!(f, "lorentz(w={},p={},N={dim})", weights(w), exp(p))
            }
            SpaceDescriptor::Marcinkiewicz { dim, weights: w } => {
                write!(f, "marcinkiewicz(psi={},N={dim})", weights(w))
            }
            SpaceDescriptor::Power { r, base, .. } => write!(f, "power(r={r},{base})"),
            SpaceDescriptor::Dual { base, .. } => write!(f, "dual({base})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_layout() {
        let d = SpaceDescriptor::from_json(r#"{"type":"lp","p":2,"N":2}"#).unwrap();
        assert_eq!(d, SpaceDescriptor::lp(2.0, 2));

        let d = SpaceDescriptor::from_json(
            r#"{"type":"lorentz","p":1,"N":3,"weights":{"kind":"explicit","values":[1,0.5,0.25]}}"#,
        )
        .unwrap();
        assert_eq!(d, SpaceDescriptor::lorentz(vec![1.0, 0.5, 0.25], 1.0));

        let d = SpaceDescriptor::from_json(
            r#"{"type":"dual","base":{"type":"power","r":2,"base":{"type":"lp","p":"inf","N":4}}}"#,
        )
        .unwrap();
        assert_eq!(d.dim(), 4);
        assert_eq!(
            d,
            SpaceDescriptor::dual(SpaceDescriptor::power(
                SpaceDescriptor::lp(f64::INFINITY, 4),
                2.0
            ))
        );
    }

    #[test]
    fn infinity_round_trips_as_string() {
        let d = SpaceDescriptor::lp(f64::INFINITY, 3);
        let text = d.to_json();
        assert!(text.contains(r#""p":"inf""#), "{text}");
        assert_eq!(SpaceDescriptor::from_json(&text).unwrap(), d);
    }

    #[test]
    fn weight_validation() {
        assert!(WeightSpec::explicit(vec![1.0, 1.2, 0.5])
            .lorentz_weights(3)
            .is_err());
        assert!(WeightSpec::explicit(vec![0.9, 0.5])
            .lorentz_weights(2)
            .is_err());
        assert!(WeightSpec::explicit(vec![1.0, 0.0])
            .lorentz_weights(2)
            .is_err());
        assert!(WeightSpec::explicit(vec![1.0, 0.5])
            .lorentz_weights(3)
            .is_err());
        let w = WeightSpec::power(0.5).lorentz_weights(4).unwrap();
        assert!((w[3] - 0.5).abs() < 1e-15);

        let psi = WeightSpec::power(1.0).marcinkiewicz_psi(3).unwrap();
        assert!((psi[2] - (1.0 + 0.5 + 1.0 / 3.0)).abs() < 1e-15);
        assert!(WeightSpec::explicit(vec![1.0, 1.0])
            .marcinkiewicz_psi(2)
            .is_err());
    }
}
