use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use super::descriptor::{Ring, RingKind};
use super::qpoly::{fmt_q, QPoly};
use super::value::{Elem, RingError, RingValue};

/// `{"ring": spec}` plus `"qmode": true` for q-mode Laurent rings.
pub fn ring_header(ring: &Ring) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("ring".into(), Value::String(ring.plain_spec()));
    if ring.is_qmode() {
        m.insert("qmode".into(), Value::Bool(true));
    }
    m
}

/// Reads a ring back from a header written by [`ring_header`].
pub fn ring_from_header(v: &Value) -> Result<Ring, RingError> {
    let spec = v.get("ring").and_then(Value::as_str).ok_or_else(|| RingError::Malformed("missing \"ring\"".into()))?;
    let qmode = v.get("qmode").and_then(Value::as_bool).unwrap_or(false);
    Ring::parse_with_qmode(spec, qmode).map_err(|e| RingError::Malformed(e.to_string()))
}

impl serde::Serialize for RingValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        encode(self).serialize(s)
    }
}

impl serde::Serialize for Ring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.plain_spec())
    }
}

pub fn encode(x: &RingValue) -> Value {
    encode_elem(x.ring(), x.elem())
}

pub fn decode(ring: &Ring, v: &Value) -> Result<RingValue, RingError> {
    let e = decode_elem(ring, v)?;
    RingValue::new(ring, e)
}

fn encode_q(q: &BigRational) -> Value {
    Value::String(fmt_q(q))
}

fn decode_q(v: &Value) -> Result<BigRational, RingError> {
    let bad = || RingError::Malformed(format!("expected a rational, got {v}"));
    match v {
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d == BigInt::from(0) {
                        return Err(bad());
                    }
                    Ok(BigRational::new(n, d))
                }
                None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
            }
        }
        Value::Number(n) => n.as_i64().map(|k| BigRational::from_integer(k.into())).ok_or_else(bad),
        _ => Err(bad()),
    }
}

fn encode_elem(ring: &Ring, e: &Elem) -> Value {
    match (ring.kind(), e) {
        (_, Elem::Num(q)) => encode_q(q),
        (_, Elem::Complex(re, im)) => json!({"re": encode_q(re), "im": encode_q(im)}),
        (RingKind::Dual { base, .. }, Elem::Dual(a, da)) => {
            json!({"a": encode_elem(base, a), "da": encode_elem(base, da)})
        }
        (RingKind::Mat { n, base }, Elem::Mat(m)) => Value::Array(
            (0..*n).map(|i| Value::Array((0..*n).map(|j| encode_elem(base, &m[i * n + j])).collect())).collect(),
        ),
        (RingKind::Group { base, .. }, Elem::Group(c)) => Value::Array(c.iter().map(|x| encode_elem(base, x)).collect()),
        (RingKind::Laurent { base, .. }, Elem::Laurent(l)) => {
            let mut m = Map::new();
            m.insert("lo".into(), json!(l.lo));
            m.insert("coeffs".into(), Value::Array(l.coeffs.iter().map(|x| encode_elem(base, x)).collect()));
            if !l.den.is_one() {
                m.insert("den".into(), Value::Array(l.den.0.iter().map(encode_q).collect()));
            }
            Value::Object(m)
        }
        _ => panic!("payload does not match ring {}", ring.spec()),
    }
}

fn field<'a>(v: &'a Value, k: &str) -> Result<&'a Value, RingError> {
    v.get(k).ok_or_else(|| RingError::Malformed(format!("missing field \"{k}\"")))
}

fn array(v: &Value, len: Option<usize>) -> Result<&Vec<Value>, RingError> {
    let a = v.as_array().ok_or_else(|| RingError::Malformed(format!("expected an array, got {v}")))?;
    if let Some(n) = len {
        if a.len() != n {
            return Err(RingError::Malformed(format!("expected {n} entries, got {}", a.len())));
        }
    }
    Ok(a)
}

fn decode_elem(ring: &Ring, v: &Value) -> Result<Elem, RingError> {
    match ring.kind() {
        RingKind::Int => {
            let q = decode_q(v)?;
            Ok(Elem::Num(q))
        }
        RingKind::Rat => Ok(Elem::Num(decode_q(v)?)),
        RingKind::ComplexConj => Ok(Elem::Complex(decode_q(field(v, "re")?)?, decode_q(field(v, "im")?)?)),
        RingKind::Dual { base, .. } => Ok(Elem::Dual(
            Box::new(decode_elem(base, field(v, "a")?)?),
            Box::new(decode_elem(base, field(v, "da")?)?),
        )),
        RingKind::Mat { n, base } => {
            let mut out = Vec::with_capacity(n * n);
            for row in array(v, Some(*n))? {
                for x in array(row, Some(*n))? {
                    out.push(decode_elem(base, x)?);
                }
            }
            Ok(Elem::Mat(out))
        }
        RingKind::Group { n, base } => {
            Ok(Elem::Group(array(v, Some(*n))?.iter().map(|x| decode_elem(base, x)).collect::<Result<_, _>>()?))
        }
        RingKind::Laurent { base, .. } => {
            let lo = field(v, "lo")?.as_i64().ok_or_else(|| RingError::Malformed("\"lo\" must be an integer".into()))?;
            let coeffs =
                array(field(v, "coeffs")?, None)?.iter().map(|x| decode_elem(base, x)).collect::<Result<Vec<_>, _>>()?;
            let den = match v.get("den") {
                Some(d) => QPoly::new(array(d, None)?.iter().map(decode_q).collect::<Result<_, _>>()?),
                None => QPoly::one(),
            };
            if den.is_zero() {
                return Err(RingError::Malformed("zero denominator".into()));
            }
            if !den.is_one() && !base.is_scalar() {
                return Err(RingError::Malformed("denominators need a scalar base".into()));
            }
            Ok(ring.laurent_norm(lo, coeffs, den, base))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for (spec, text) in [
            ("int", r#""-7""#),
            ("rat", r#""3/4""#),
            ("complex-conj", r#"{"re":"1","im":"-2"}"#),
            ("dual:conj", r#"{"a":"1","da":"3"}"#),
            ("mat:2:int", r#"[["1","2"],["3","4"]]"#),
            ("group:Z3:int", r#"["1","0","-1"]"#),
            ("laurent:t:int", r#"{"lo":-1,"coeffs":["2","0","1"]}"#),
            ("laurent:t:rat", r#"{"lo":0,"coeffs":["1"],"den":["1","1"]}"#),
        ] {
            let ring = Ring::parse(spec).unwrap();
            let v: Value = serde_json::from_str(text).unwrap();
            let x = decode(&ring, &v).unwrap();
            assert_eq!(encode(&x), v, "{spec}");
        }
    }

    #[test]
    fn header_carries_qmode() {
        let r = Ring::parse("qlaurent:s:int").unwrap();
        let h = Value::Object(ring_header(&r));
        assert_eq!(h, json!({"ring": "laurent:s:int", "qmode": true}));
        assert_eq!(ring_from_header(&h).unwrap(), r);
    }

    #[test]
    fn rejects_bad_shape() {
        let ring = Ring::parse("mat:2:int").unwrap();
        assert!(decode(&ring, &json!([["1"]])).is_err());
    }
}
