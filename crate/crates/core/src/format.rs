//! JSON encodings of algebras, elements, environments and spaces.
//!
//! ```text
//! {"finite":[2,3]}
//! {"rational":{"kind":"chain","n":6}}
//! {"rational":{"kind":"supernatural","primes":{"2":"inf","3":1},"all":false}}
//! {"product":[{"finite":[2]},{"rational":{"kind":"chain","n":3}}]}
//! {"simplicial":{"rank":2,"unit":[2,3]}}
//! ["1/2","1/3"]                    element
//! {"x":"1/2","y":["0","1/3"]}      environment; a bare fraction is a constant element
//! {"points":2,"opens":[[],[0],[0,1]]}
//! ```

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::algebra::{Element, Exponent, FiniteMV, RationalAlgebra, RationalProduct};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::lgroup::{gamma, SimplicialGroup};
use crate::terms::Env;
use crate::topology::FinSpace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Finite(FiniteMV),
    Rational(RationalAlgebra),
    Product(Vec<AlgebraSpec>),
    Simplicial(SimplicialGroup),
}

impl AlgebraSpec {
    /// The algebra as a finite product of chains, if it is finite.
    pub fn to_finite(&self) -> Option<FiniteMV> {
        match self {
            AlgebraSpec::Finite(a) => Some(a.clone()),
            AlgebraSpec::Simplicial(g) => Some(gamma(g)),
            AlgebraSpec::Rational(r) => r.as_finite(),
            AlgebraSpec::Product(ps) => {
                let parts = ps.iter().map(|p| p.to_finite()).collect::<Option<Vec<_>>>()?;
                Some(FiniteMV::product_of(&parts))
            }
        }
    }

    /// The algebra as a flat product of rational algebras.
    pub fn to_rational_product(&self) -> RationalProduct {
        let mut factors = Vec::new();
        self.collect_factors(&mut factors);
        RationalProduct::new(factors)
    }

    fn collect_factors(&self, out: &mut Vec<RationalAlgebra>) {
        match self {
            AlgebraSpec::Finite(a) => out.extend(RationalProduct::from_finite(a).factors().iter().cloned()),
            AlgebraSpec::Simplicial(g) => {
                out.extend(RationalProduct::from_finite(&gamma(g)).factors().iter().cloned())
            }
            AlgebraSpec::Rational(r) => out.push(r.clone()),
            AlgebraSpec::Product(ps) => ps.iter().for_each(|p| p.collect_factors(out)),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    match v {
        Value::Number(n) => n.as_u64().ok_or_else(|| bad(format!("{what}: expected a non-negative integer"))),
        Value::String(s) => s.parse().map_err(|_| bad(format!("{what}: expected an integer, got `{s}`"))),
        _ => Err(bad(format!("{what}: expected an integer"))),
    }
}

fn parse_exponent(v: &Value) -> Result<Exponent> {
    match v {
        Value::String(s) if s == "inf" || s == "∞" => Ok(Exponent::Infinite),
        _ => {
            let e = as_u64(v, "exponent")?;
            Ok(Exponent::Finite(u32::try_from(e).map_err(|_| bad("exponent too large"))?))
        }
    }
}

pub fn rational_from_json(v: &Value) -> Result<RationalAlgebra> {
    let obj = v.as_object().ok_or_else(|| bad("rational algebra must be an object"))?;
    match obj.get("kind").and_then(Value::as_str) {
        Some("chain") => {
            let n = as_u64(obj.get("n").ok_or_else(|| bad("chain needs `n`"))?, "n")?;
            RationalAlgebra::chain(n)
        }
        Some("supernatural") => {
            let mut primes = BTreeMap::new();
            if let Some(p) = obj.get("primes") {
                let p = p.as_object().ok_or_else(|| bad("`primes` must be an object"))?;
                for (k, e) in p {
                    let prime: u64 = k.parse().map_err(|_| bad(format!("bad prime `{k}`")))?;
                    primes.insert(prime, parse_exponent(e)?);
                }
            }
            let all = match obj.get("all") {
                None => false,
                Some(Value::Bool(b)) => *b,
                Some(_) => return Err(bad("`all` must be a boolean")),
            };
            RationalAlgebra::supernatural(primes, all)
        }
        _ => Err(bad("rational `kind` must be \"chain\" or \"supernatural\"")),
    }
}

pub fn rational_to_json(r: &RationalAlgebra) -> Value {
    match r {
        RationalAlgebra::Chain(n) => json!({"kind": "chain", "n": n}),
        RationalAlgebra::Supernatural { primes, all_infinite } => {
            let primes: Map<String, Value> = primes
                .iter()
                .map(|(p, e)| {
                    let v = match e {
                        Exponent::Finite(k) => json!(k),
                        Exponent::Infinite => json!("inf"),
                    };
                    (p.to_string(), v)
                })
                .collect();
            json!({"kind": "supernatural", "primes": primes, "all": all_infinite})
        }
    }
}

pub fn algebra_from_json(v: &Value) -> Result<AlgebraSpec> {
    let obj = v.as_object().ok_or_else(|| bad("algebra must be a JSON object"))?;
    if obj.len() != 1 {
        return Err(bad("algebra object must have exactly one key"));
    }
    let (key, body) = obj.iter().next().expect("one entry");
    match key.as_str() {
        "finite" => {
            let orders = body
                .as_array()
                .ok_or_else(|| bad("`finite` must be an array of chain orders"))?
                .iter()
                .map(|m| as_u64(m, "chain order"))
                .collect::<Result<Vec<_>>>()?;
            Ok(AlgebraSpec::Finite(FiniteMV::new(orders)?))
        }
        "rational" => Ok(AlgebraSpec::Rational(rational_from_json(body)?)),
        "product" => {
            let parts = body
                .as_array()
                .ok_or_else(|| bad("`product` must be an array"))?
                .iter()
                .map(algebra_from_json)
                .collect::<Result<Vec<_>>>()?;
            Ok(AlgebraSpec::Product(parts))
        }
        "simplicial" => {
            let b = body.as_object().ok_or_else(|| bad("`simplicial` must be an object"))?;
            let unit = b
                .get("unit")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("simplicial group needs `unit`"))?
                .iter()
                .map(|u| as_u64(u, "unit coordinate"))
                .collect::<Result<Vec<_>>>()?;
            if let Some(r) = b.get("rank") {
                if as_u64(r, "rank")? as usize != unit.len() {
                    return Err(bad("`rank` does not match the length of `unit`"));
                }
            }
            Ok(AlgebraSpec::Simplicial(SimplicialGroup::new(unit)?))
        }
        other => Err(bad(format!("unknown algebra kind `{other}`"))),
    }
}

pub fn algebra_to_json(a: &AlgebraSpec) -> Value {
    match a {
        AlgebraSpec::Finite(f) => finite_to_json(f),
        AlgebraSpec::Rational(r) => json!({"rational": rational_to_json(r)}),
        AlgebraSpec::Product(ps) => json!({"product": ps.iter().map(algebra_to_json).collect::<Vec<_>>()}),
        AlgebraSpec::Simplicial(g) => json!({"simplicial": {"rank": g.rank(), "unit": g.unit()}}),
    }
}

pub fn finite_to_json(a: &FiniteMV) -> Value {
    json!({"finite": a.orders()})
}

pub fn parse_algebra(s: &str) -> Result<AlgebraSpec> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(format!("algebra JSON: {e}")))?;
    algebra_from_json(&v)
}

fn fraction_from_json(v: &Value) -> Result<Fraction> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => match n.as_u64() {
            Some(0) => Ok(Fraction::ZERO),
            Some(1) => Ok(Fraction::ONE),
            _ => Err(Error::MalformedFraction(n.to_string())),
        },
        _ => Err(Error::MalformedFraction(v.to_string())),
    }
}

pub fn element_from_json(v: &Value) -> Result<Element> {
    let coords = v
        .as_array()
        .ok_or_else(|| bad("element must be an array of fractions"))?
        .iter()
        .map(fraction_from_json)
        .collect::<Result<Vec<_>>>()?;
    Ok(Element::new(coords))
}

pub fn element_to_json(a: &Element) -> Value {
    Value::Array(a.coords().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn parse_element(s: &str) -> Result<Element> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(format!("element JSON: {e}")))?;
    element_from_json(&v)
}

/// Environment for term evaluation; bare fractions become constant elements of length `len`.
pub fn parse_env(s: &str, len: usize) -> Result<Env> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(format!("environment JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| bad("environment must be an object"))?;
    obj.iter()
        .map(|(k, v)| {
            let e = match v {
                Value::Array(_) => element_from_json(v)?,
                _ => Element::constant(fraction_from_json(v)?, len),
            };
            Ok((k.clone(), e))
        })
        .collect()
}

pub fn space_from_json(v: &Value) -> Result<FinSpace> {
    let obj = v.as_object().ok_or_else(|| bad("space must be an object"))?;
    let n = as_u64(obj.get("points").ok_or_else(|| bad("space needs `points`"))?, "points")? as usize;
    let opens = obj
        .get("opens")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("space needs `opens`"))?
        .iter()
        .map(|s| {
            s.as_array()
                .ok_or_else(|| bad("each open must be an array of points"))?
                .iter()
                .map(|p| as_u64(p, "point").map(|p| p as usize))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    FinSpace::new(n, &opens)
}

pub fn space_to_json(x: &FinSpace) -> Value {
    json!({"points": x.points(), "opens": x.open_lists()})
}

pub fn parse_space(s: &str) -> Result<FinSpace> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(format!("space JSON: {e}")))?;
    space_from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_formats() {
        let a = parse_algebra(r#"{"finite":[2,3]}"#).unwrap();
        assert_eq!(a.to_finite().unwrap().orders(), &[2, 3]);
        let r = parse_algebra(r#"{"rational":{"kind":"chain","n":6}}"#).unwrap();
        assert_eq!(r, AlgebraSpec::Rational(RationalAlgebra::Chain(6)));
        let d = parse_algebra(r#"{"rational":{"kind":"supernatural","primes":{"2":"inf"},"all":false}}"#)
            .unwrap();
        assert_eq!(d, AlgebraSpec::Rational(RationalAlgebra::dyadic()));
        assert!(d.to_finite().is_none());
        let p = parse_algebra(
            r#"{"product":[{"rational":{"kind":"supernatural","primes":{"2":"inf"}}},{"finite":[3]}]}"#,
        )
        .unwrap();
        assert_eq!(p.to_rational_product().components(), 2);
        let s = parse_algebra(r#"{"simplicial":{"rank":2,"unit":[2,3]}}"#).unwrap();
        assert_eq!(s.to_finite(), a.to_finite());
        for spec in [&a, &r, &d, &p, &s] {
            assert_eq!(algebra_from_json(&algebra_to_json(spec)).unwrap(), *spec);
        }
    }

    #[test]
    fn malformed_inputs() {
        for s in [
            r#"{"finite":[0]}"#,
            r#"{"finite":"x"}"#,
            r#"{"rational":{"kind":"chain"}}"#,
            r#"{"rational":{"kind":"supernatural","primes":{"6":1}}}"#,
            r#"{"simplicial":{"rank":3,"unit":[2,3]}}"#,
            r#"{"finite":[1],"rational":{}}"#,
            r#"{"nope":1}"#,
            "not json",
        ] {
            assert!(parse_algebra(s).is_err(), "{s}");
        }
        assert!(parse_element(r#"["1/2","2/4"]"#).is_err());
        assert!(parse_space(r#"{"points":2,"opens":[[0],[0,1]]}"#).is_err());
    }

    #[test]
    fn elements_envs_spaces() {
        let e = parse_element(r#"["1/2","1/3"]"#).unwrap();
        assert_eq!(element_to_json(&e), json!(["1/2", "1/3"]));
        let env = parse_env(r#"{"x":"1/2","y":["0","1"]}"#, 2).unwrap();
        assert_eq!(env["x"].len(), 2);
        assert!(env["y"].is_zero_one());
        let x = parse_space(r#"{"points":2,"opens":[[],[0],[0,1]]}"#).unwrap();
        assert_eq!(x, FinSpace::sierpinski());
        assert_eq!(space_from_json(&space_to_json(&x)).unwrap(), x);
    }
}
