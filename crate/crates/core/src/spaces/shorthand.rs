//! Compact textual descriptors such as `lorentz(w=(1,.5,.25),p=1)`.
//!
//! Grammar: `lp(p=P[,N=n])`, `lorentz(w=W,p=P[,N=n])`,
//! `marcinkiewicz(psi=W[,N=n])`, `power(r=R,SPACE)`, `dual(SPACE)`, where
//! `W` is either a list `(w1,w2,...)` or a power law `k^-θ`. `N` may be left
//! out when an explicit list fixes it or a default dimension is supplied.

use serde_json::Value;

use super::descriptor::{Exponent, SpaceDescriptor, WeightSpec};
use crate::error::{Error, Result};

impl SpaceDescriptor {
    /// Parses a JSON document or the shorthand syntax. Missing dimensions
    /// are filled from `default_dim`.
    pub fn parse(text: &str, default_dim: Option<usize>) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            let mut value: Value =
                serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            if let Some(n) = default_dim {
                fill_dim(&mut value, n);
            }
            return serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()));
        }
        let mut parser = Parser {
            text,
            pos: 0,
            default_dim,
        };
        let d = parser.space()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(d)
    }
}

impl std::str::FromStr for SpaceDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpaceDescriptor::parse(s, None)
    }
}

fn fill_dim(value: &mut Value, n: usize) {
    if let Value::Object(map) = value {
        let leaf = matches!(
            map.get("type").and_then(Value::as_str),
            Some("lp" | "lorentz" | "marcinkiewicz")
        );
        let explicit = map.get("weights").and_then(|w| w.get("values")).is_some();
        if leaf && !explicit && !map.contains_key("N") {
            map.insert("N".into(), Value::from(n));
        }
        if let Some(base) = map.get_mut("base") {
            fill_dim(base, n);
        }
        if explicit && !map.contains_key("N") {
            let len = map["weights"]["values"].as_array().map_or(0, Vec::len);
            map.insert("N".into(), Value::from(len));
        }
    }
}

enum Arg {
    Number(f64),
    List(Vec<f64>),
    Power(f64),
    Space(SpaceDescriptor),
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    default_dim: Option<usize>,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.text))
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {token:?}")))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        let word = self.rest()[..len].to_string();
        self.pos += len;
        word
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || "+-.".contains(c)))
            .unwrap_or(self.rest().len());
        let word = &self.rest()[..len];
        let value = match word {
            "inf" | "infinity" | "Inf" => f64::INFINITY,
            _ => word
                .parse::<f64>()
                .map_err(|_| self.error(&format!("invalid number {word:?}")))?,
        };
        self.pos += len;
        Ok(value)
    }

    fn value(&mut self) -> Result<Arg> {
        if self.eat("(") {
            let mut list = vec![self.number()?];
            while self.eat(",") {
                list.push(self.number()?);
            }
            self.expect(")")?;
            Ok(Arg::List(list))
        } else if self.eat("k^") {
            Ok(Arg::Power(-self.number()?))
        } else {
            Ok(Arg::Number(self.number()?))
        }
    }

    fn space(&mut self) -> Result<SpaceDescriptor> {
        let name = self.ident();
        self.expect("(")?;
        let mut args: Vec<(String, Arg)> = Vec::new();
        loop {
            let save = self.pos;
            let word = self.ident();
            if self.eat("=") {
                args.push((word, self.value()?));
            } else {
                self.pos = save;
                args.push((String::new(), Arg::Space(self.space()?)));
            }
            if !self.eat(",") {
                break;
            }
        }
        self.expect(")")?;
        self.build(&name, args)
    }

    fn build(&self, name: &str, args: Vec<(String, Arg)>) -> Result<SpaceDescriptor> {
        let mut p = None;
        let mut r = None;
        let mut dim = None;
        let mut weights = None;
        let mut base = None;
        for (key, arg) in args {
            match (key.as_str(), arg) {
                ("p", Arg::Number(v)) => p = Some(v),
                ("r", Arg::Number(v)) => r = Some(v),
                ("N", Arg::Number(v)) => {
                    if v < 1.0 || v.fract() != 0.0 {
                        return Err(self.error("N must be a positive integer"));
                    }
                    dim = Some(v as usize)
                }
                ("w" | "weights" | "psi", Arg::List(values)) => {
                    weights = Some(WeightSpec::explicit(values))
                }
                ("w" | "weights" | "psi", Arg::Power(theta)) => {
                    weights = Some(WeightSpec::power(theta))
                }
                ("", Arg::Space(d)) => base = Some(d),
                (key, _) => {
                    return Err(self.error(&format!("unexpected argument {key:?} for {name}")))
                }
            }
        }
        let weights_len = weights.as_ref().and_then(WeightSpec::explicit_len);
        let dim = || {
            dim.or(weights_len)
                .or(self.default_dim)
                .ok_or_else(|| self.error("dimension N is not determined"))
        };
        let need = |v: Option<f64>, key: &str| {
            v.ok_or_else(|| self.error(&format!("{name} needs {key}=")))
        };
        let need_weights = || {
            weights
                .clone()
                .ok_or_else(|| self.error(&format!("{name} needs weights")))
        };
        let need_base = |b: Option<SpaceDescriptor>| {
            b.ok_or_else(|| self.error(&format!("{name} needs a base space")))
        };
        Ok(match name {
            "lp" => SpaceDescriptor::Lp {
                p: Exponent(need(p, "p")?),
                dim: dim()?,
            },
            "lorentz" => SpaceDescriptor::Lorentz {
                p: Exponent(need(p, "p")?),
                dim: dim()?,
                weights: need_weights()?,
            },
            "marcinkiewicz" => SpaceDescriptor::Marcinkiewicz {
                dim: dim()?,
                weights: need_weights()?,
            },
            "power" => SpaceDescriptor::Power {
                r: need(r, "r")?,
                base: Box::new(need_base(base)?),
                dim: None,
            },
            "dual" => SpaceDescriptor::Dual {
                base: Box::new(need_base(base)?),
                dim: None,
            },
            other => return Err(self.error(&format!("unknown space type {other:?}"))),
        })
    }
}
